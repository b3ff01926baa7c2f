#pragma once

// Document I/O: field spec strings ("p^m" or "p^m:c0,c1,...,cm"), code spec
// JSON ({"field", "n", "k", "alpha", "v", "hooks"}; omitted "v" means
// all-ones; "inf" marks the point at infinity) and verdict reports.

#include <string>

#include <json.hpp>

#include "verify.hpp"

namespace gtrs::serde {

using json = nlohmann::ordered_json;

inline uint64_t parse_u64(const std::string& s, const std::string& what) {
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos, errc::parse_error,
            "expected a nonnegative integer for " + what + ", got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        raise(errc::parse_error, "integer out of range for " + what + ": '" + s + "'");
    }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::shared_ptr<const FieldCtx> parse_field(const std::string& s) {
    auto main_and_mod = split(s, ':');
    require(main_and_mod.size() <= 2, errc::parse_error, "malformed field spec '" + s + "'");
    auto pm = split(main_and_mod[0], '^');
    require(pm.size() <= 2, errc::parse_error, "malformed field spec '" + s + "'");
    uint64_t p = parse_u64(pm[0], "p");
    unsigned m = pm.size() == 2 ? unsigned(parse_u64(pm[1], "m")) : 1;
    std::vector<uint32_t> modulus;
    if (main_and_mod.size() == 2) {
        for (const auto& d : split(main_and_mod[1], ','))
            modulus.push_back(uint32_t(parse_u64(d, "modulus digit")));
    }
    return field_build(p, m, std::move(modulus));
}

inline std::string format_field(const FieldCtx& F) {
    if (F.m() == 1) return std::to_string(F.p());
    std::string out = std::to_string(F.p()) + "^" + std::to_string(F.m()) + ":";
    for (size_t i = 0; i < F.modulus().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(F.modulus()[i]);
    }
    return out;
}

inline json spec_to_json(const GtrsSpec& spec) {
    json j;
    j["field"] = format_field(spec.field());
    j["n"] = spec.n();
    j["k"] = spec.k();
    json alpha = json::array();
    for (const auto& a : spec.alpha()) {
        if (a.is_infinity())
            alpha.push_back("inf");
        else
            alpha.push_back(a.value().code());
    }
    j["alpha"] = alpha;
    bool all_ones = true;
    for (const auto& v : spec.multipliers()) all_ones &= v.code() == 1;
    if (!all_ones) {
        json v = json::array();
        for (const auto& m : spec.multipliers()) v.push_back(m.code());
        j["v"] = v;
    }
    json hooks = json::array();
    for (const auto& hk : spec.hooks())
        hooks.push_back(json{{"t", hk.t}, {"h", hk.h}, {"eta", hk.eta.code()}});
    j["hooks"] = hooks;
    return j;
}

inline GtrsSpec spec_from_json(const json& j) {
    require(j.is_object(), errc::parse_error, "spec document must be a JSON object");
    for (const char* key : {"field", "n", "k", "alpha"})
        require(j.contains(key), errc::parse_error, std::string("spec document lacks '") + key + "'");
    auto field = parse_field(j["field"].get<std::string>());
    size_t n = j["n"].get<size_t>();
    size_t k = j["k"].get<size_t>();
    require(j["alpha"].is_array() && j["alpha"].size() == n, errc::parse_error,
            "alpha must be an array of length n");
    std::vector<EvalPoint> alpha;
    for (const auto& a : j["alpha"]) {
        if (a.is_string()) {
            require(a.get<std::string>() == "inf", errc::parse_error,
                    "alpha entries are integers or \"inf\"");
            alpha.push_back(EvalPoint::infinity(*field));
        } else {
            require(a.is_number_unsigned(), errc::parse_error,
                    "alpha entries are integers or \"inf\"");
            alpha.push_back(EvalPoint::finite(field->element(a.get<uint64_t>())));
        }
    }
    std::vector<FieldElement> v;
    if (j.contains("v")) {
        require(j["v"].is_array() && j["v"].size() == n, errc::parse_error,
                "v must be an array of length n");
        for (const auto& x : j["v"]) v.push_back(field->element(x.get<uint64_t>()));
    } else {
        v.assign(n, field->one());
    }
    std::vector<TwistHook> hooks;
    if (j.contains("hooks")) {
        require(j["hooks"].is_array(), errc::parse_error, "hooks must be an array");
        for (const auto& hk : j["hooks"]) {
            for (const char* key : {"t", "h", "eta"})
                require(hk.contains(key), errc::parse_error,
                        std::string("hook lacks '") + key + "'");
            hooks.push_back(TwistHook{hk["t"].get<unsigned>(), hk["h"].get<unsigned>(),
                                      field->element(hk["eta"].get<uint64_t>())});
        }
    }
    return GtrsSpec(field, k, std::move(alpha), std::move(v), std::move(hooks));
}

inline std::string spec_digest(const json& spec_doc) {
    const std::string dump = spec_doc.dump();
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json witness_to_json(const Witness& w) {
    json j;
    j["kind"] = w.kind;
    if (!w.rows.empty()) j["rows"] = w.rows;
    if (!w.cols.empty()) j["cols"] = w.cols;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

inline json report_to_json(const GtrsSpec& spec, const CodeReport& rep) {
    json j;
    json spec_doc = spec_to_json(spec);
    j["spec"] = spec_doc;
    j["digest"] = spec_digest(spec_doc);
    json verdicts;
    for (const auto& [name, entry] : rep.verdicts) {
        json e;
        switch (entry.value) {
            case Verdict::yes: e["value"] = true; break;
            case Verdict::no: e["value"] = false; break;
            case Verdict::skipped: e["value"] = "skipped"; break;
        }
        e["oracle"] = entry.oracle;
        if (entry.witness) e["witness"] = witness_to_json(*entry.witness);
        verdicts[name] = e;
    }
    j["verdicts"] = verdicts;
    return j;
}

inline std::vector<FieldElement> parse_element_list(const FieldCtx& F, const std::string& s) {
    std::vector<FieldElement> out;
    if (s.empty()) return out;
    for (const auto& tok : split(s, ',')) out.push_back(F.element(parse_u64(tok, "element")));
    return out;
}

}  // namespace gtrs::serde
