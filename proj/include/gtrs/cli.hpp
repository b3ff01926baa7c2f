#pragma once

// Batch front-end. Subcommands: construct (one per recipe), verify, scan,
// encode, catalog, field-info. Specs and reports travel as JSON documents,
// scans emit CSV with a trailing summary line. Exit codes: 0 success / all
// requested verdicts true, 1 some requested verdict false, 2 usage or
// precondition errors.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "construct.hpp"
#include "serde.hpp"

namespace gtrs::cli {

namespace detail {

inline serde::json read_json_doc(const std::string& path, std::istream& stdin_stream) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << stdin_stream.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        require(in.good(), errc::bad_argument, "cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return serde::json::parse(text);
    } catch (const std::exception& e) {
        raise(errc::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

inline CheckRequest parse_checks(const std::string& csv) {
    CheckRequest req;
    for (const auto& tok : serde::split(csv, ',')) {
        if (tok == "mds")
            req.mds = true;
        else if (tok == "grs")
            req.grs = true;
        else if (tok == "so")
            req.self_orthogonal = true;
        else if (tok == "lcd")
            req.lcd = true;
        else
            raise(errc::bad_argument, "unknown check '" + tok + "' (use mds,grs,so,lcd)");
    }
    return req;
}

inline OracleMode parse_oracle(const std::string& s) {
    if (s == "fast") return OracleMode::fast;
    if (s == "brute") return OracleMode::brute;
    if (s == "both") return OracleMode::both;
    raise(errc::bad_argument, "unknown oracle mode '" + s + "' (use fast|brute|both)");
}

inline std::vector<unsigned> parse_unsigned_list(const std::string& csv, const std::string& what) {
    std::vector<unsigned> out;
    if (csv.empty()) return out;
    for (const auto& tok : serde::split(csv, ','))
        out.push_back(unsigned(serde::parse_u64(tok, what)));
    return out;
}

inline std::string witness_digest(const std::optional<Witness>& w) {
    if (!w) return "-";
    std::string s = w->kind;
    auto join = [](const std::vector<size_t>& xs) {
        std::string r;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) r += " ";
            r += std::to_string(xs[i]);
        }
        return r;
    };
    if (!w->rows.empty()) s += "@r[" + join(w->rows) + "]";
    if (!w->cols.empty()) s += "@c[" + join(w->cols) + "]";
    return s;
}

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::yes: return "true";
        case Verdict::no: return "false";
        default: return "skipped";
    }
}

struct ScanRow {
    uint64_t sweep_value;
    CodeReport report;
};

inline std::vector<std::string> check_names(const CheckRequest& req) {
    std::vector<std::string> names;
    if (req.mds) names.push_back("mds");
    if (req.grs) names.push_back("grs_equivalent");
    if (req.self_orthogonal) names.push_back("self_orthogonal");
    if (req.lcd) names.push_back("lcd");
    return names;
}

inline void emit_csv(std::ostream& out, const std::string& sweep_name,
                     const std::vector<ScanRow>& rows, const CheckRequest& req) {
    auto names = check_names(req);
    out << sweep_name;
    for (const auto& n : names) out << "," << n;
    out << ",witness\n";
    std::map<std::string, size_t> trues;
    for (const auto& row : rows) {
        out << row.sweep_value;
        std::string digest = "-";
        for (const auto& n : names) {
            auto it = row.report.verdicts.find(n);
            if (it == row.report.verdicts.end()) {
                out << ",skipped";
                continue;
            }
            out << "," << verdict_str(it->second.value);
            if (it->second.value == Verdict::yes) ++trues[n];
            if (it->second.witness && digest == "-") digest = witness_digest(it->second.witness);
        }
        out << "," << digest << "\n";
    }
    out << "# rows=" << rows.size();
    for (const auto& n : names) out << " " << n << "=" << trues[n];
    out << "\n";
}

// Deterministic fan-out: evaluate one job per sweep value, emit in order.
template <typename Fn>
inline std::vector<ScanRow> run_sweep(const std::vector<uint64_t>& values, unsigned jobs, Fn&& fn) {
    std::vector<ScanRow> rows(values.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < values.size(); ++i) rows[i] = fn(values[i]);
        return rows;
    }
    std::vector<std::future<void>> futures;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < jobs; ++w)
        futures.push_back(std::async(std::launch::async, [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= values.size()) return;
                rows[i] = fn(values[i]);
            }
        }));
    for (auto& f : futures) f.get();
    return rows;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    CLI::App app{"construct and verify twisted evaluation codes over small finite fields"};
    app.name("gtrs");
    app.require_subcommand(1);
    int rc = 0;

    std::string field_str, spec_path = "-", checks_str = "mds", oracle_str = "fast";
    uint64_t seed = 0;
    unsigned jobs = 1;

    // ---- field-info ----
    auto* info = app.add_subcommand("field-info", "print p, m, q, modulus and a primitive element");
    info->add_option("--field", field_str, "field spec p^m[:c0,c1,...,cm]")->required();
    info->callback([&] {
        auto F = serde::parse_field(field_str);
        serde::json j;
        j["field"] = serde::format_field(*F);
        j["p"] = F->p();
        j["m"] = F->m();
        j["q"] = F->q();
        j["modulus"] = F->modulus();
        j["primitive_element"] = F->primitive_element();
        out << j.dump(2) << "\n";
    });

    // ---- construct ----
    auto* con = app.add_subcommand("construct", "emit a code spec document from a recipe");
    con->require_subcommand(1);
    struct ConArgs {
        std::string field, reps, a_list, c_list, alpha, v_basis, eta_list, t_list, h_list, chain;
        uint64_t subgroup_order = 1, eta = 0, beta = 0, q0 = 0, n_points = 0;
        size_t k = 1;
        unsigned h = 0;
        uint64_t length = 0;
        bool no_zero = false, no_infinity = false, force = false;
    };
    auto cargs = std::make_shared<ConArgs>();

    auto add_common = [&](CLI::App* r, bool with_eta = true) {
        r->add_option("--field", cargs->field, "field spec")->required();
        r->add_option("--k", cargs->k, "dimension")->required();
        if (with_eta) r->add_option("--eta", cargs->eta, "twist coefficient (integer encoding)");
        r->add_option("--n", cargs->length, "code length (default: maximal)");
        r->add_flag("--force", cargs->force, "emit even when a hypothesis check fails");
    };

    auto emit_spec = [&](const GtrsSpec& spec) { out << serde::spec_to_json(spec).dump(2) << "\n"; };
    auto opt_len = [&]() {
        return cargs->length ? std::optional<size_t>(cargs->length) : std::nullopt;
    };

    auto* star = con->add_subcommand("star-coset", "multiplicative-coset family, hook (1, 0)");
    add_common(star);
    star->add_option("--subgroup-order", cargs->subgroup_order, "order of the subgroup")->required();
    star->add_option("--reps", cargs->reps, "coset representatives (comma list)")->required();
    star->add_flag("--no-zero", cargs->no_zero, "leave out the zero point");
    star->callback([&] {
        auto F = serde::parse_field(cargs->field);
        auto G = mult_subgroup(*F, cargs->subgroup_order);
        emit_spec(star_coset_mds(F, G, serde::parse_element_list(*F, cargs->reps), !cargs->no_zero,
                                 cargs->k, F->element(cargs->eta), opt_len(), cargs->force));
    });

    auto* sc2 = con->add_subcommand("star-char2", "characteristic-2 extended family, hook (1, 0)");
    add_common(sc2);
    sc2->add_option("--a-list", cargs->a_list, "extension elements from eta's coset");
    sc2->add_flag("--no-zero", cargs->no_zero, "leave out the zero point");
    sc2->callback([&] {
        auto F = serde::parse_field(cargs->field);
        emit_spec(star_char2_extended_mds(F, cargs->k, serde::parse_element_list(*F, cargs->a_list),
                                          F->element(cargs->eta), !cargs->no_zero, opt_len(),
                                          cargs->force));
    });

    auto* plus = con->add_subcommand("plus-coset", "additive-coset family, hook (1, k-1)");
    add_common(plus);
    plus->add_option("--v-basis", cargs->v_basis, "basis of the additive subgroup V")->required();
    plus->add_option("--reps", cargs->reps, "coset representatives (comma list)")->required();
    plus->add_flag("--no-infinity", cargs->no_infinity, "leave out the point at infinity");
    plus->callback([&] {
        auto F = serde::parse_field(cargs->field);
        auto V = additive_subgroup(*F, serde::parse_element_list(*F, cargs->v_basis));
        emit_spec(plus_coset_mds(F, V, serde::parse_element_list(*F, cargs->reps),
                                 !cargs->no_infinity, cargs->k, F->element(cargs->eta), opt_len(),
                                 cargs->force));
    });

    auto* poc = con->add_subcommand("plus-oddchar", "odd-characteristic extended family, hook (1, k-1)");
    add_common(poc);
    poc->add_option("--c-list", cargs->c_list, "extension elements from the coset of eta^{-1}");
    poc->add_option("--v-basis", cargs->v_basis, "override the default hyperplane basis");
    poc->add_flag("--no-infinity", cargs->no_infinity, "leave out the point at infinity");
    poc->callback([&] {
        auto F = serde::parse_field(cargs->field);
        std::optional<std::vector<FieldElement>> basis;
        if (!cargs->v_basis.empty()) basis = serde::parse_element_list(*F, cargs->v_basis);
        emit_spec(plus_oddchar_extended_mds(F, cargs->k,
                                            serde::parse_element_list(*F, cargs->c_list),
                                            !cargs->no_infinity, F->element(cargs->eta), basis,
                                            opt_len(), cargs->force));
    });

    auto* so = con->add_subcommand("self-orthogonal", "square-root multipliers, single twist");
    add_common(so);
    so->add_option("--alpha", cargs->alpha, "evaluation points (comma list)")->required();
    so->add_option("--hook-h", cargs->h, "hook position in [0, k-1]")->required();
    so->callback([&] {
        auto F = serde::parse_field(cargs->field);
        emit_spec(self_orthogonal_gtrs(F, serde::parse_element_list(*F, cargs->alpha), cargs->k,
                                       cargs->h, F->element(cargs->eta), cargs->force));
    });

    auto* lc2 = con->add_subcommand("lcd-char2", "characteristic-2 LCD MDS pipeline");
    add_common(lc2);
    lc2->add_option("--v-basis", cargs->v_basis, "basis of the additive subgroup V")->required();
    lc2->add_option("--reps", cargs->reps, "coset representatives (comma list)")->required();
    lc2->add_option("--beta", cargs->beta, "scaling constant (not 0 or 1)")->required();
    lc2->callback([&] {
        auto F = serde::parse_field(cargs->field);
        auto V = additive_subgroup(*F, serde::parse_element_list(*F, cargs->v_basis));
        auto res = lcd_mds_char2(F, V, serde::parse_element_list(*F, cargs->reps), cargs->k,
                                 F->element(cargs->eta), F->element(cargs->beta), opt_len(),
                                 cargs->force);
        emit_spec(res.spec);
    });

    auto* bsc = con->add_subcommand("beta-scale", "scale the right generator block of a spec");
    bsc->add_option("--spec", spec_path, "spec document path or '-' for stdin")->required();
    bsc->add_option("--beta", cargs->beta, "scaling constant")->required();
    bsc->add_flag("--force", cargs->force, "skip the self-orthogonal/MDS hypothesis checks");
    bsc->callback([&] {
        auto spec = serde::spec_from_json(detail::read_json_doc(spec_path, in));
        auto F = spec.field_ptr();
        lcd_beta_scale(generator_matrix(spec), F->element(cargs->beta), cargs->force);
        std::vector<FieldElement> v;
        for (size_t i = 0; i < spec.n(); ++i)
            v.push_back(i < spec.k() ? spec.multipliers()[i]
                                     : F->element(cargs->beta) * spec.multipliers()[i]);
        emit_spec(GtrsSpec(F, spec.k(), spec.alpha(), v, spec.hooks()));
    });

    auto* chn = con->add_subcommand("chain", "multi-twist MDS spec from a subfield chain");
    chn->add_option("--field", cargs->field, "ambient field spec")->required();
    chn->add_option("--q0", cargs->q0, "base subfield order")->required();
    chn->add_option("--chain", cargs->chain, "chain degrees s_0,s_1,...")->required();
    chn->add_option("--alpha", cargs->alpha, "locators in the base subfield")->required();
    chn->add_option("--k", cargs->k, "dimension")->required();
    chn->add_option("--eta-list", cargs->eta_list, "twist coefficients, one per layer")->required();
    chn->add_option("--t-list", cargs->t_list, "twist shifts")->required();
    chn->add_option("--h-list", cargs->h_list, "twist positions")->required();
    chn->add_flag("--force", cargs->force, "skip the layer checks");
    chn->callback([&] {
        auto F = serde::parse_field(cargs->field);
        emit_spec(mds_subfield_chain(
            F, cargs->q0, detail::parse_unsigned_list(cargs->chain, "chain degree"),
            serde::parse_element_list(*F, cargs->alpha), cargs->k,
            serde::parse_element_list(*F, cargs->eta_list),
            detail::parse_unsigned_list(cargs->t_list, "t"),
            detail::parse_unsigned_list(cargs->h_list, "h"), cargs->force));
    });

    auto* lmt = con->add_subcommand("lcd-multitwist", "LCD MDS spec on a subgroup with layered twists");
    lmt->add_option("--field", cargs->field, "ambient field spec")->required();
    lmt->add_option("--q0", cargs->q0, "base subfield order")->required();
    lmt->add_option("--chain", cargs->chain, "chain degrees s_0,...,s_k")->required();
    lmt->add_option("--n", cargs->n_points, "subgroup order (divides q0-1)")->required();
    lmt->add_option("--k", cargs->k, "dimension")->required();
    lmt->add_option("--eta-list", cargs->eta_list, "twist coefficients, one per layer")->required();
    lmt->add_flag("--force", cargs->force, "skip the case and layer checks");
    lmt->callback([&] {
        auto F = serde::parse_field(cargs->field);
        emit_spec(lcd_subgroup_multitwist(
            F, cargs->q0, detail::parse_unsigned_list(cargs->chain, "chain degree"), cargs->n_points,
            cargs->k, serde::parse_element_list(*F, cargs->eta_list), cargs->force));
    });

    auto* kv = con->add_subcommand("kernel-vector", "print the dual kernel vector of a point set");
    kv->add_option("--field", cargs->field, "field spec")->required();
    kv->add_option("--alpha", cargs->alpha, "evaluation points (comma list)")->required();
    kv->callback([&] {
        auto F = serde::parse_field(cargs->field);
        auto u = dual_kernel_vector(serde::parse_element_list(*F, cargs->alpha));
        for (size_t i = 0; i < u.size(); ++i) out << (i ? "," : "") << u[i].code();
        out << "\n";
    });

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "run verdicts on a spec document");
    ver->add_option("--spec", spec_path, "spec document path or '-' for stdin");
    ver->add_option("--checks", checks_str, "comma list from mds,grs,so,lcd (default mds)");
    ver->add_option("--oracle", oracle_str, "fast|brute|both (default fast)");
    ver->callback([&] {
        auto spec = serde::spec_from_json(detail::read_json_doc(spec_path, in));
        auto req = detail::parse_checks(checks_str);
        auto rep = run_checks(spec, req, detail::parse_oracle(oracle_str));
        out << serde::report_to_json(spec, rep).dump(2) << "\n";
        for (const auto& [name, entry] : rep.verdicts)
            if (entry.value == Verdict::no) rc = 1;
    });

    // ---- scan ----
    auto* scn = app.add_subcommand("scan", "sweep a parameter and emit CSV verdicts");
    struct ScanArgs {
        std::string family = "star", alpha = "nonzero", etas = "all", recipe, k_range;
        std::string v_basis, reps;
        uint64_t eta = 0, beta = 0;
        size_t k = 3;
        bool include_infinity = false;
    };
    auto sargs = std::make_shared<ScanArgs>();
    scn->add_option("--field", field_str, "field spec")->required();
    scn->add_option("--family", sargs->family, "star (hook (1,0)) or plus (hook (1,k-1))");
    scn->add_option("--alpha", sargs->alpha, "points: comma list, 'all' or 'nonzero'");
    scn->add_flag("--include-infinity", sargs->include_infinity, "append the point at infinity");
    scn->add_option("--k", sargs->k, "dimension (eta sweeps)");
    scn->add_option("--etas", sargs->etas, "'all', a comma list, or sample:N (with --seed)");
    scn->add_option("--recipe", sargs->recipe, "k-sweep recipe: lcd-char2");
    scn->add_option("--k-range", sargs->k_range, "k sweep bounds lo:hi (recipe mode)");
    scn->add_option("--v-basis", sargs->v_basis, "recipe: basis of V");
    scn->add_option("--reps", sargs->reps, "recipe: coset representatives");
    scn->add_option("--eta", sargs->eta, "recipe: twist coefficient");
    scn->add_option("--beta", sargs->beta, "recipe: scaling constant");
    scn->add_option("--checks", checks_str, "comma list from mds,grs,so,lcd");
    scn->add_option("--oracle", oracle_str, "fast|brute|both");
    scn->add_option("--seed", seed, "seed for sampled sweeps");
    scn->add_option("--jobs", jobs, "parallel sweep evaluation (deterministic output)");
    scn->callback([&] {
        auto F = serde::parse_field(field_str);
        auto req = detail::parse_checks(checks_str);
        auto mode = detail::parse_oracle(oracle_str);
        if (!sargs->recipe.empty()) {
            require(sargs->recipe == "lcd-char2", errc::bad_argument,
                    "k-sweeps support the lcd-char2 recipe");
            auto bounds = serde::split(sargs->k_range, ':');
            require(bounds.size() == 2, errc::bad_argument, "--k-range needs lo:hi");
            uint64_t lo = serde::parse_u64(bounds[0], "k"), hi = serde::parse_u64(bounds[1], "k");
            require(lo >= 1 && lo <= hi, errc::bad_argument, "--k-range needs 1 <= lo <= hi");
            std::vector<uint64_t> ks;
            for (uint64_t k = lo; k <= hi; ++k) ks.push_back(k);
            auto V = additive_subgroup(*F, serde::parse_element_list(*F, sargs->v_basis));
            auto reps = serde::parse_element_list(*F, sargs->reps);
            auto rows = detail::run_sweep(ks, jobs, [&](uint64_t k) {
                auto res = lcd_mds_char2(F, V, reps, k, F->element(sargs->eta),
                                         F->element(sargs->beta));
                return detail::ScanRow{k, run_checks(res.spec, req, mode)};
            });
            detail::emit_csv(out, "k", rows, req);
            return;
        }
        require(sargs->family == "star" || sargs->family == "plus", errc::bad_argument,
                "--family must be star or plus");
        std::vector<EvalPoint> alpha;
        if (sargs->alpha == "all" || sargs->alpha == "nonzero") {
            for (uint64_t c = sargs->alpha == "all" ? 0 : 1; c < F->q(); ++c)
                alpha.push_back(EvalPoint::finite(F->element(c)));
        } else {
            alpha = as_eval_points(serde::parse_element_list(*F, sargs->alpha));
        }
        if (sargs->include_infinity) alpha.push_back(EvalPoint::infinity(*F));
        std::vector<uint64_t> etas;
        if (sargs->etas.empty()) {
            // empty sweep: header and summary only
        } else if (sargs->etas == "all") {
            for (uint64_t e = 1; e < F->q(); ++e) etas.push_back(e);
        } else if (sargs->etas.rfind("sample:", 0) == 0) {
            size_t count = serde::parse_u64(sargs->etas.substr(7), "sample count");
            std::mt19937_64 g(seed);
            for (size_t i = 0; i < count; ++i)
                etas.push_back(1 + std::uniform_int_distribution<uint64_t>(0, F->q() - 2)(g));
        } else {
            for (const auto& tok : serde::split(sargs->etas, ','))
                etas.push_back(serde::parse_u64(tok, "eta"));
        }
        unsigned h = sargs->family == "star" ? 0 : unsigned(sargs->k - 1);
        auto rows = detail::run_sweep(etas, jobs, [&](uint64_t e) {
            auto spec = make_single_hook_trs(F, alpha, sargs->k, 1, h, F->element(e));
            return detail::ScanRow{e, run_checks(spec, req, mode)};
        });
        detail::emit_csv(out, "eta", rows, req);
    });

    // ---- encode ----
    auto* enc = app.add_subcommand("encode", "encode a message with a spec document");
    std::string message_str;
    enc->add_option("--spec", spec_path, "spec document path or '-' for stdin");
    enc->add_option("--message", message_str, "k message symbols (comma list)")->required();
    enc->callback([&] {
        auto spec = serde::spec_from_json(detail::read_json_doc(spec_path, in));
        auto msg = serde::parse_element_list(spec.field(), message_str);
        auto cw = encode(spec, msg);
        for (size_t i = 0; i < cw.size(); ++i) out << (i ? "," : "") << cw[i].code();
        out << "\n";
    });

    // ---- catalog ----
    auto* cat = app.add_subcommand("catalog", "JSON-lines store of verdict reports");
    cat->require_subcommand(1);
    std::string store_path, report_path = "-";
    std::string f_field;
    int64_t f_n = -1, f_k = -1;
    std::string f_mds, f_grs, f_so, f_lcd;

    auto* capp = cat->add_subcommand("append", "append one report to the store");
    capp->add_option("--store", store_path, "store path")->required();
    capp->add_option("--report", report_path, "report document path or '-' for stdin");
    capp->callback([&] {
        auto doc = detail::read_json_doc(report_path, in);
        require(doc.is_object() && doc.contains("spec") && doc.contains("verdicts"),
                errc::parse_error, "report must carry 'spec' and 'verdicts'");
        std::ofstream store(store_path, std::ios::app);
        require(store.good(), errc::bad_argument, "cannot open store '" + store_path + "'");
        store << doc.dump() << "\n";
    });

    auto* cq = cat->add_subcommand("query", "print reports matching the filters");
    cq->add_option("--store", store_path, "store path")->required();
    cq->add_option("--field", f_field, "filter: field spec string");
    cq->add_option("--n", f_n, "filter: length");
    cq->add_option("--k", f_k, "filter: dimension");
    cq->add_option("--mds", f_mds, "filter: true|false");
    cq->add_option("--grs", f_grs, "filter: true|false");
    cq->add_option("--so", f_so, "filter: true|false");
    cq->add_option("--lcd", f_lcd, "filter: true|false");
    cq->callback([&] {
        std::ifstream store(store_path);
        std::string line;
        size_t lineno = 0;
        auto verdict_matches = [](const serde::json& doc, const std::string& name,
                                  const std::string& want) {
            if (want.empty()) return true;
            if (!doc["verdicts"].contains(name)) return false;
            const auto& v = doc["verdicts"][name]["value"];
            return v.is_boolean() && v.get<bool>() == (want == "true");
        };
        while (std::getline(store, line)) {
            ++lineno;
            if (line.empty()) continue;
            serde::json doc;
            try {
                doc = serde::json::parse(line);
                require(doc.is_object() && doc.contains("spec") && doc.contains("verdicts"),
                        errc::corrupt_record, "missing fields");
            } catch (const std::exception&) {
                raise(errc::corrupt_record,
                      "corrupt record at line " + std::to_string(lineno) + " of " + store_path);
            }
            if (!f_field.empty() && doc["spec"]["field"] != f_field) continue;
            if (f_n >= 0 && doc["spec"]["n"] != uint64_t(f_n)) continue;
            if (f_k >= 0 && doc["spec"]["k"] != uint64_t(f_k)) continue;
            if (!verdict_matches(doc, "mds", f_mds)) continue;
            if (!verdict_matches(doc, "grs_equivalent", f_grs)) continue;
            if (!verdict_matches(doc, "self_orthogonal", f_so)) continue;
            if (!verdict_matches(doc, "lcd", f_lcd)) continue;
            out << doc.dump() << "\n";
        }
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace gtrs::cli
