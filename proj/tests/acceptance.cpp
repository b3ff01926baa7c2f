// Acceptance suite: one line of output per criterion, nonzero exit when any
// fails. Each criterion pins its parameters and tolerances in code; the
// arithmetic is exact, so "pass" means zero mismatches.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <gtrs/construct.hpp>

using namespace gtrs;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::shared_ptr<const FieldCtx> make_field(uint64_t q) {
    switch (q) {
        case 9: return field_build(3, 2);
        case 16: return field_build(2, 4);
        case 25: return field_build(5, 2);
        case 27: return field_build(3, 3);
        case 32: return field_build(2, 5);
        case 49: return field_build(7, 2, {2, 0, 1});
        case 512: return field_build(2, 9);
        default: return field_build(q, 1);
    }
}

uint64_t ipow_capped(uint64_t q, size_t k, uint64_t cap) {
    uint64_t r = 1;
    for (size_t i = 0; i < k; ++i) {
        if (r > cap / q) return cap + 1;
        r *= q;
    }
    return r;
}

// ---------------------------------------------------------------------------
// 1. Fast Lemma-style conditions vs minor oracle vs exhaustive distance:
//    every point subset with n <= 8, every k < n, every nonzero eta, over
//    q in {5,7,9,11,13}; the (1,k-1) family includes the point at infinity.
//    The distance oracle runs on all instances with q^k <= 2^16 and, for the
//    larger dimensions, on canonical prefix point sets up to its q^k <= 2^24
//    guard.
Outcome criterion1() {
    uint64_t cases = 0, dist_cases = 0, mismatches = 0;
    for (uint64_t q : {5, 7, 9, 11, 13}) {
        auto F = make_field(q);
        std::vector<uint64_t> etas;
        for (uint64_t e = 1; e < q; ++e) etas.push_back(e);

        for (int fam = 0; fam < 2; ++fam) {  // 0: hook (1,0); 1: hook (1,k-1)
            const size_t npts = size_t(q) + (fam == 1 ? 1 : 0);  // index q = infinity
            for (uint64_t mask = 1; mask < (uint64_t(1) << npts); ++mask) {
                const int n = __builtin_popcountll(mask);
                if (n < 2 || n > 8) continue;
                std::vector<EvalPoint> alpha;
                std::vector<FieldElement> finite;
                for (size_t c = 0; c < npts; ++c) {
                    if (!(mask & (uint64_t(1) << c))) continue;
                    if (c == size_t(q)) {
                        alpha.push_back(EvalPoint::infinity(*F));
                    } else {
                        alpha.push_back(EvalPoint::finite(F->element(c)));
                        finite.push_back(F->element(c));
                    }
                }
                if (fam == 0 && finite.size() != alpha.size()) continue;
                for (size_t k = 1; k < size_t(n); ++k) {
                    const bool dist_ok = ipow_capped(q, k, 1 << 16) <= (1 << 16);
                    for (uint64_t e : etas) {
                        auto eta = F->element(e);
                        bool fast = fam == 0 ? mds_star_condition(finite, k, eta)
                                             : mds_plus_condition(alpha, k, eta);
                        auto C = generator_matrix(
                            make_single_hook_trs(F, alpha, k, 1, fam == 0 ? 0 : unsigned(k - 1), eta));
                        bool minors = mds_by_minors(C);
                        ++cases;
                        if (fast != minors) ++mismatches;
                        if (dist_ok) {
                            ++dist_cases;
                            if (mds_by_distance(C).mds != minors) ++mismatches;
                        }
                    }
                }
            }
            // prefix pass: canonical ascending point sets, distance up to 2^24
            for (size_t n = 2; n <= std::min<size_t>(8, npts); ++n) {
                std::vector<EvalPoint> alpha;
                std::vector<FieldElement> finite;
                for (size_t c = 0; c + 1 < n; ++c) {
                    alpha.push_back(EvalPoint::finite(F->element(c)));
                    finite.push_back(F->element(c));
                }
                if (fam == 1) {
                    alpha.push_back(EvalPoint::infinity(*F));
                } else {
                    alpha.push_back(EvalPoint::finite(F->element(n - 1)));
                    finite.push_back(F->element(n - 1));
                }
                for (size_t k = 1; k < n; ++k) {
                    if (ipow_capped(q, k, uint64_t(1) << 24) > (uint64_t(1) << 24)) continue;
                    for (uint64_t e : etas) {
                        auto eta = F->element(e);
                        bool fast = fam == 0 ? mds_star_condition(finite, k, eta)
                                             : mds_plus_condition(alpha, k, eta);
                        auto C = generator_matrix(
                            make_single_hook_trs(F, alpha, k, 1, fam == 0 ? 0 : unsigned(k - 1), eta));
                        bool minors = mds_by_minors(C);
                        bool dist = mds_by_distance(C).mds;
                        ++cases;
                        ++dist_cases;
                        if (fast != minors || dist != minors) ++mismatches;
                    }
                }
            }
        }
    }
    char buf[160];
    snprintf(buf, sizeof(buf), "cases=%llu distance-checked=%llu mismatches=%llu",
             (unsigned long long)cases, (unsigned long long)dist_cases,
             (unsigned long long)mismatches);
    return {mismatches == 0 && cases > 1000000, buf};
}

// ---------------------------------------------------------------------------
// 2. GF(49), 13-point construction: every admissible eta (there are exactly
//    |V| = 7 with (-eta)^{-1} in 6*theta + V) is MDS for k in {2,3,4}, and
//    some 2 < k < 11 instance is not GRS-equivalent.
Outcome criterion2() {
    auto F = make_field(49);
    auto theta = F->element(7);
    std::vector<FieldElement> c_list;
    for (uint64_t c = 0; c < 5; ++c) c_list.push_back(theta + F->scalar(int64_t(c)));
    std::vector<FieldElement> admissible;
    for (uint64_t c = 0; c < 7; ++c) admissible.push_back((theta + F->scalar(int64_t(c))).inv());

    uint64_t mds_failures = 0, instances = 0;
    for (size_t k : {2, 3, 4}) {
        for (const auto& eta : admissible) {
            auto spec = plus_oddchar_extended_mds(F, k, c_list, true, eta);
            if (spec.n() != 13) ++mds_failures;
            ++instances;
            if (!mds_by_minors(generator_matrix(spec))) ++mds_failures;
        }
    }
    bool found_non_grs = false;
    for (size_t k = 3; k < 11 && !found_non_grs; ++k)
        for (const auto& eta : admissible) {
            auto C = generator_matrix(plus_oddchar_extended_mds(F, k, c_list, true, eta));
            if (!is_grs_equivalent(C)) {
                found_non_grs = true;
                break;
            }
        }
    char buf[160];
    snprintf(buf, sizeof(buf), "instances=%llu mds-failures=%llu non-grs-found=%s",
             (unsigned long long)instances, (unsigned long long)mds_failures,
             found_non_grs ? "yes" : "no");
    return {mds_failures == 0 && instances == 21 && found_non_grs, buf};
}

// ---------------------------------------------------------------------------
// 3. GF(2^9): the char-2 extension reaches 79 = 73 + 5 + 1 points against the
//    74-point trivial-coset baseline; the structurally identical GF(2^4)
//    instance (n = 7) passes the minor oracle at every dimension.
Outcome criterion3() {
    auto F512 = make_field(512);
    auto G73 = mult_subgroup(*F512, 73);
    uint64_t eta512 = 0;
    for (uint64_t c = 2; c < 512; ++c)
        if (!G73.subgroup_contains(F512->element(c))) {
            eta512 = c;
            break;
        }
    auto eta = F512->element(eta512);
    std::vector<FieldElement> a_list;
    for (size_t i = 1; i <= 5; ++i) a_list.push_back(eta * G73.subgroup[i]);
    auto spec = star_char2_extended_mds(F512, 4, a_list, eta);
    bool size_ok = spec.n() == 79;
    // baseline: trivial coset extension stops at max-proper-divisor + 1
    uint64_t largest_proper = 1;
    for (uint64_t d = 1; d < 511; ++d)
        if (511 % d == 0) largest_proper = d;
    bool baseline_ok = largest_proper + 1 == 74;

    auto F16 = make_field(16);
    auto G5 = mult_subgroup(*F16, 5);
    uint64_t small_fail = 0, small_cases = 0;
    for (uint64_t c = 2; c < 16; ++c) {
        if (G5.subgroup_contains(F16->element(c))) continue;
        auto e16 = F16->element(c);
        auto a = e16 * G5.subgroup[1];
        for (size_t k = 1; k < 7; ++k) {
            auto s = star_char2_extended_mds(F16, k, {a}, e16);
            ++small_cases;
            if (s.n() != 7 || !mds_by_minors(generator_matrix(s))) ++small_fail;
        }
    }
    char buf[160];
    snprintf(buf, sizeof(buf), "n=%zu baseline=74 gf16-cases=%llu gf16-failures=%llu", spec.n(),
             (unsigned long long)small_cases, (unsigned long long)small_fail);
    return {size_ok && baseline_ok && small_fail == 0 && small_cases == 60, buf};
}

// ---------------------------------------------------------------------------
// 4. Exhaustive eta scans on full multiplicative point sets report at most 6
//    MDS codes equivalent to an RS code.
Outcome criterion4() {
    struct Scan {
        uint64_t q;
        size_t k;
        unsigned t, h;
    };
    const Scan scans[] = {{11, 4, 1, 0}, {13, 4, 1, 0}, {13, 5, 1, 4}};
    std::string detail;
    bool ok = true;
    for (const auto& s : scans) {
        auto F = make_field(s.q);
        std::vector<EvalPoint> alpha;
        for (uint64_t c = 1; c < s.q; ++c) alpha.push_back(EvalPoint::finite(F->element(c)));
        std::vector<FieldElement> H;
        for (uint64_t e = 1; e < s.q; ++e) H.push_back(F->element(e));
        auto scan = count_rs_equivalent_etas(F, alpha, s.k, s.t, s.h, H);
        detail += "q" + std::to_string(s.q) + "k" + std::to_string(s.k) + ":count=" +
                  std::to_string(scan.count) + "/mds=" +
                  std::to_string(H.size() - scan.dropped_non_mds.size()) + " ";
        if (scan.count > 6) ok = false;
    }
    return {ok, detail + "(bound 6)"};
}

// ---------------------------------------------------------------------------
// 5. Square-root multipliers give an exactly zero Gram matrix for 50 random
//    admissible draws over each of GF(16) and GF(32).
Outcome criterion5() {
    uint64_t failures = 0, total = 0;
    for (uint64_t q : {16, 32}) {
        auto F = make_field(q);
        std::mt19937_64 rng(20250810 + q);
        auto below = [&](uint64_t bound) {
            return std::uniform_int_distribution<uint64_t>(0, bound - 1)(rng);
        };
        for (int it = 0; it < 50; ++it) {
            size_t n = 4 + below(std::min<uint64_t>(q, 12) - 3);
            size_t k = 1 + below((n - 2) / 2);
            unsigned h = unsigned(below(k));
            auto eta = F->element(1 + below(q - 1));
            std::vector<uint64_t> codes;
            while (codes.size() < n) {
                uint64_t c = below(q);
                bool seen = false;
                for (uint64_t x : codes) seen |= x == c;
                if (!seen) codes.push_back(c);
            }
            std::vector<FieldElement> alpha;
            for (uint64_t c : codes) alpha.push_back(F->element(c));
            auto spec = self_orthogonal_gtrs(F, alpha, k, h, eta);
            ++total;
            if (!gram(generator_matrix(spec)).is_zero()) ++failures;
        }
    }
    char buf[96];
    snprintf(buf, sizeof(buf), "draws=%llu zero-gram-failures=%llu", (unsigned long long)total,
             (unsigned long long)failures);
    return {failures == 0 && total == 100, buf};
}

// ---------------------------------------------------------------------------
// 6. GF(16), n = 8, k in {1,2,3}: the char-2 LCD pipeline yields a
//    nonsingular Gram and an MDS code for every admissible eta and every
//    beta outside {0, 1}.
Outcome criterion6() {
    auto F = make_field(16);
    auto V = additive_subgroup(*F, {F->one()});
    std::vector<FieldElement> reps = {F->element(0), F->element(2), F->element(4), F->element(6)};
    auto uni = quotient_subgroup_union(V, reps, true);
    uint64_t failures = 0, total = 0;
    for (size_t k : {1, 2, 3}) {
        for (uint64_t e = 1; e < 16; ++e) {
            if (uni.union_contains(F->element(e).inv())) continue;
            for (uint64_t b = 2; b < 16; ++b) {
                auto res = lcd_mds_char2(F, V, reps, k, F->element(e), F->element(b));
                ++total;
                if (det(gram(res.code)).is_zero() || !mds_by_minors(res.code)) ++failures;
            }
        }
    }
    char buf[96];
    snprintf(buf, sizeof(buf), "instances=%llu failures=%llu", (unsigned long long)total,
             (unsigned long long)failures);
    return {failures == 0 && total == 3 * 8 * 14, buf};
}

// ---------------------------------------------------------------------------
// 7. Multi-twist LCD: analytic case predicate, closed-form Gram and direct
//    Gram determinant agree over full eta sweeps (q=7 n=6 k=2,3; q=13 n=6 k=3
//    with the engineered 1+eta_1^2=0 failure; q=29 n=7 k=3), and the
//    chain-layered towers over GF(7^8) (case D) and GF(29^8) (case C) are
//    LCD MDS.
Outcome criterion7() {
    uint64_t cases = 0, mismatches = 0;
    bool engineered_seen = false;

    auto sweep = [&](uint64_t q, uint64_t n, size_t k) {
        auto F = make_field(q);
        auto sel = mult_subgroup(*F, n);
        std::vector<uint64_t> eta_codes(k, 1);
        while (true) {
            std::vector<FieldElement> eta;
            for (uint64_t c : eta_codes) eta.push_back(F->element(c));
            auto v = lcd_multitwist_predicate(F, n, k, eta);  // asserts closed form == direct
            std::vector<TwistHook> hooks;
            for (size_t j = 0; j < k; ++j)
                hooks.push_back(TwistHook{unsigned(j + 1), unsigned(j), eta[j]});
            GtrsSpec spec(F, k, as_eval_points(sel.subgroup), hooks);
            bool direct = !det(gram(generator_matrix(spec))).is_zero();
            ++cases;
            if (v.lcd != direct) ++mismatches;
            if (q == 13 && k == 3 && eta_codes[0] == 5 && !direct && !v.lcd)
                engineered_seen = true;  // 1 + 5^2 = 0 mod 13
            size_t i = 0;
            while (i < k && eta_codes[i] == q - 1) eta_codes[i++] = 1;
            if (i == k) break;
            ++eta_codes[i];
        }
    };
    sweep(7, 6, 2);    // case G (the k=2 analogue of k=n/3 at n=6)
    sweep(7, 6, 3);    // case D
    sweep(13, 6, 3);   // case D including 1+eta_1^2 = 0 failures
    sweep(29, 7, 3);   // case C at the k=(n+2)/3 boundary

    // towers: minimal strict divisibility chains force the 8th-degree fields
    bool towers_ok = true;
    {
        auto F = field_build(7, 8);
        auto e1 = subfield_layer_element(*F, 2, 1);
        if ((F->one() + e1 * e1).is_zero()) e1 = e1 + F->one();
        auto e2 = subfield_layer_element(*F, 4, 2);
        auto e3 = subfield_layer_element(*F, 8, 4);
        auto spec = lcd_subgroup_multitwist(F, 7, {1, 2, 4, 8}, 6, 3, {e1, e2, e3});
        auto C = generator_matrix(spec);
        towers_ok &= is_lcd(C) && mds_by_minors(C);
    }
    {
        auto F = field_build(29, 8);
        auto e1 = subfield_layer_element(*F, 2, 1);
        if ((F->one() + e1 * e1).is_zero()) e1 = e1 + F->one();
        auto e2 = subfield_layer_element(*F, 4, 2);
        auto e3 = subfield_layer_element(*F, 8, 4);
        auto spec = lcd_subgroup_multitwist(F, 29, {1, 2, 4, 8}, 7, 3, {e1, e2, e3});
        auto C = generator_matrix(spec);
        towers_ok &= is_lcd(C) && mds_by_minors(C);
    }
    char buf[160];
    snprintf(buf, sizeof(buf), "sweep-cases=%llu mismatches=%llu engineered-failure=%s towers=%s",
             (unsigned long long)cases, (unsigned long long)mismatches,
             engineered_seen ? "seen" : "missing", towers_ok ? "lcd+mds" : "FAILED");
    return {mismatches == 0 && engineered_seen && towers_ok, buf};
}

// ---------------------------------------------------------------------------
// 8. Power sums over every multiplicative subgroup of q in {7,13,16,25,49}
//    match the closed form for all 0 <= t < 2n.
Outcome criterion8() {
    uint64_t checks = 0, failures = 0;
    for (uint64_t q : {7, 13, 16, 25, 49}) {
        auto F = make_field(q);
        for (uint64_t d = 1; d <= q - 1; ++d) {
            if ((q - 1) % d) continue;
            auto sub = mult_subgroup(*F, d);
            for (uint64_t t = 0; t < 2 * d; ++t) {
                ++checks;
                if (power_sum(sub, t) != power_sum_closed_form(*F, d, t)) ++failures;
            }
        }
    }
    char buf[96];
    snprintf(buf, sizeof(buf), "checks=%llu failures=%llu", (unsigned long long)checks,
             (unsigned long long)failures);
    return {failures == 0 && checks > 0, buf};
}

// ---------------------------------------------------------------------------
// 9. The closed-form kernel vector is a nonzero multiple of the computed
//    kernel basis, with every entry nonzero: 100 random point sets per field.
Outcome criterion9() {
    uint64_t failures = 0, total = 0;
    for (uint64_t q : {7, 13, 49}) {
        auto F = make_field(q);
        std::mt19937_64 rng(90210 + q);
        auto below = [&](uint64_t bound) {
            return std::uniform_int_distribution<uint64_t>(0, bound - 1)(rng);
        };
        for (int it = 0; it < 100; ++it) {
            size_t n = 2 + below(std::min<uint64_t>(q, 12) - 1);
            std::vector<uint64_t> codes;
            while (codes.size() < n) {
                uint64_t c = below(q);
                bool seen = false;
                for (uint64_t x : codes) seen |= x == c;
                if (!seen) codes.push_back(c);
            }
            std::vector<FieldElement> alpha;
            for (uint64_t c : codes) alpha.push_back(F->element(c));
            auto u = dual_kernel_vector(alpha);
            MatrixGF A(*F, n - 1, n);
            for (size_t r = 0; r + 1 < n; ++r)
                for (size_t c = 0; c < n; ++c) A.set_code(r, c, F->pow(alpha[c].code(), r));
            auto K = kernel_basis(A);
            ++total;
            bool ok = K.rows() == 1;
            if (ok) {
                auto scale = u[0] / K.at(0, 0);
                if (scale.is_zero()) ok = false;
                for (size_t c = 0; c < n && ok; ++c)
                    ok = !u[c].is_zero() && K.at(0, c) * scale == u[c];
            }
            if (!ok) ++failures;
        }
    }
    char buf[96];
    snprintf(buf, sizeof(buf), "draws=%llu failures=%llu", (unsigned long long)total,
             (unsigned long long)failures);
    return {failures == 0 && total == 300, buf};
}

// ---------------------------------------------------------------------------
// 10. GRS-equivalence and minimum distance are invariant under monomial maps:
//     20 MDS base codes x 100 random permutation/scaling pairs.
Outcome criterion10() {
    std::mt19937_64 rng(1618);
    auto below = [&](uint64_t bound) {
        return std::uniform_int_distribution<uint64_t>(0, bound - 1)(rng);
    };
    std::vector<std::pair<std::shared_ptr<const FieldCtx>, GtrsSpec>> bases;
    auto add_base = [&](std::shared_ptr<const FieldCtx> F, GtrsSpec spec) {
        if (bases.size() >= 20) return;
        if (mds_by_minors(generator_matrix(spec))) bases.emplace_back(F, std::move(spec));
    };
    for (uint64_t q : {7, 9, 11, 13}) {
        auto F = make_field(q);
        std::vector<EvalPoint> alpha;
        for (uint64_t c = 1; c <= 6; ++c) alpha.push_back(EvalPoint::finite(F->element(c)));
        for (size_t k : {2, 3}) {
            add_base(F, make_rs(F, alpha, k));
            std::vector<FieldElement> v;
            for (size_t j = 0; j < alpha.size(); ++j) v.push_back(F->element(1 + j % (q - 1)));
            add_base(F, GtrsSpec(F, k, alpha, v, {}));
            for (uint64_t e = 1; e < q && bases.size() < 20; ++e) {
                add_base(F, make_single_hook_trs(F, alpha, k, 1, 0, F->element(e)));
                add_base(F, make_single_hook_trs(F, alpha, k, 1, unsigned(k - 1), F->element(e)));
            }
        }
    }
    uint64_t failures = 0, total = 0;
    for (const auto& [F, spec] : bases) {
        auto C = generator_matrix(spec);
        bool base_grs = is_grs_equivalent(C);
        size_t base_d = min_weight(C);
        for (int it = 0; it < 100; ++it) {
            std::vector<size_t> pi(C.n());
            for (size_t i = 0; i < C.n(); ++i) pi[i] = i;
            std::shuffle(pi.begin(), pi.end(), rng);
            std::vector<FieldElement> v;
            for (size_t i = 0; i < C.n(); ++i) v.push_back(F->element(1 + below(F->q() - 1)));
            auto D = apply_equivalence(C, pi, v);
            ++total;
            if (is_grs_equivalent(D) != base_grs || min_weight(D) != base_d) ++failures;
        }
    }
    char buf[128];
    snprintf(buf, sizeof(buf), "bases=%zu maps=%llu failures=%llu", bases.size(),
             (unsigned long long)total, (unsigned long long)failures);
    return {failures == 0 && bases.size() == 20 && total == 2000, buf};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"fast/minor/distance oracle agreement", criterion1},
        {"GF(49) 13-point construction", criterion2},
        {"GF(2^9) 79-point construction", criterion3},
        {"RS-equivalent eta count bound", criterion4},
        {"zero Gram from square-root multipliers", criterion5},
        {"char-2 LCD MDS pipeline", criterion6},
        {"multi-twist LCD case table and towers", criterion7},
        {"power-sum identity", criterion8},
        {"kernel vector closed form", criterion9},
        {"monomial-map invariance", criterion10},
    };
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        if (only && int(i + 1) != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        printf("[%s] criterion %zu: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
               criteria[i].first.c_str(), o.detail.c_str(), secs);
        fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
