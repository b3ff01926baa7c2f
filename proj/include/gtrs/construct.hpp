#pragma once

// Construction recipes: given group-theoretic ingredients they emit a
// GtrsSpec whose claimed property (MDS, self-orthogonal, LCD MDS) the verify
// module then confirms. Recipes validate their hypotheses and refuse rather
// than emit unverified specs; force = true skips the hypothesis checks (not
// the structural ones) so the boundary of each recipe can be explored.
//
// Point selection is deterministic: coset-union elements in ascending
// integer encoding first, then extension elements, then 0 or infinity last.

#include <optional>

#include "verify.hpp"

namespace gtrs {

namespace detail {

inline std::vector<EvalPoint> take_points(const std::vector<EvalPoint>& pool,
                                          std::optional<size_t> length) {
    size_t n = length.value_or(pool.size());
    require(n >= 1 && n <= pool.size(), errc::dimension_mismatch,
            "requested length exceeds the available point pool");
    return std::vector<EvalPoint>(pool.begin(), pool.begin() + n);
}

inline CosetSelection checked_union(const CosetSelection& sub, const std::vector<FieldElement>& reps,
                                    bool force) {
    try {
        return quotient_subgroup_union(sub, reps, !force);
    } catch (const Error& e) {
        if (e.kind() == errc::not_a_quotient_subgroup)
            raise(errc::not_a_proper_subgroup, e.what());
        throw;
    }
}

}  // namespace detail

// --- multiplicative-coset MDS family ((t,h) = (1,0)) -----------------------

inline GtrsSpec star_coset_mds(std::shared_ptr<const FieldCtx> field, const CosetSelection& G,
                               const std::vector<FieldElement>& reps, bool include_zero, size_t k,
                               const FieldElement& eta, std::optional<size_t> length = {},
                               bool force = false) {
    const FieldCtx& F = *field;
    require(G.kind == GroupKind::multiplicative, errc::bad_argument,
            "recipe needs a multiplicative subgroup");
    require(!eta.is_zero(), errc::invalid_hook, "eta must be nonzero");
    auto uni = detail::checked_union(G, reps, force);
    if (!force)
        require(uni.coset_union.size() < F.q() - 1, errc::not_a_proper_subgroup,
                "coset union must avoid part of the multiplicative group");
    uint64_t probe = eta.code();
    if (k % 2) probe = F.neg(probe);
    if (!force)
        require(!uni.union_contains(F.element(probe)), errc::eta_in_forbidden_set,
                "(-1)^k eta lies in the coset union");
    std::vector<EvalPoint> pool = as_eval_points(uni.coset_union);
    if (include_zero) pool.push_back(EvalPoint::finite(F.zero()));
    auto alpha = detail::take_points(pool, length);
    require(k >= 1 && k < alpha.size(), errc::dimension_mismatch, "recipe needs k < n");
    return make_single_hook_trs(field, alpha, k, 1, 0, eta);
}

// Characteristic-2 extension of the family: points from the subgroup of
// order (2^m-1)/p for the minimal prime divisor p, plus up to p-2 elements
// of a generating coset and the zero point; eta from the same coset.
inline GtrsSpec star_char2_extended_mds(std::shared_ptr<const FieldCtx> field, size_t k,
                                        std::vector<FieldElement> a_list, const FieldElement& eta,
                                        bool include_zero = true, std::optional<size_t> length = {},
                                        bool force = false) {
    const FieldCtx& F = *field;
    require(F.p() == 2, errc::bad_argument, "recipe is specific to characteristic 2");
    require(!eta.is_zero(), errc::invalid_hook, "eta must be nonzero");
    const auto& factors = F.order_factors();
    require(factors.size() > 1 || (factors.size() == 1 && factors[0] != F.q() - 1),
            errc::mersenne_prime_field, "2^m - 1 is prime; the coset extension is empty");
    const uint64_t pmin = factors.front();
    auto G = mult_subgroup(F, (F.q() - 1) / pmin);
    if (!force) {
        require(!G.subgroup_contains(eta), errc::eta_in_forbidden_set,
                "eta must lie in a generating coset, not the subgroup");
        require(a_list.size() <= pmin - 2, errc::bad_coset_element,
                "at most p-2 extension elements");
        for (const auto& a : a_list)
            require(!a.is_zero() && G.subgroup_contains(a / eta), errc::bad_coset_element,
                    "extension elements must share eta's coset");
    }
    std::sort(a_list.begin(), a_list.end());
    std::vector<EvalPoint> pool = as_eval_points(G.subgroup);
    for (const auto& a : a_list) pool.push_back(EvalPoint::finite(a));
    if (include_zero) pool.push_back(EvalPoint::finite(F.zero()));
    auto alpha = detail::take_points(pool, length);
    require(k >= 1 && k < alpha.size(), errc::dimension_mismatch, "recipe needs k < n");
    return make_single_hook_trs(field, alpha, k, 1, 0, eta);
}

// --- additive-coset MDS family ((t,h) = (1,k-1)) ----------------------------

inline GtrsSpec plus_coset_mds(std::shared_ptr<const FieldCtx> field, const CosetSelection& V,
                               const std::vector<FieldElement>& reps, bool include_infinity,
                               size_t k, const FieldElement& eta, std::optional<size_t> length = {},
                               bool force = false) {
    const FieldCtx& F = *field;
    require(V.kind == GroupKind::additive, errc::bad_argument, "recipe needs an additive subgroup");
    require(!eta.is_zero(), errc::invalid_hook, "eta must be nonzero");
    auto uni = detail::checked_union(V, reps, force);
    if (!force)
        require(uni.coset_union.size() < F.q(), errc::not_a_proper_subgroup,
                "coset union must avoid part of the additive group");
    auto probe = (-eta).inv();
    if (!force)
        require(!uni.union_contains(probe), errc::eta_in_forbidden_set,
                "(-eta)^{-1} lies in the coset union");
    std::vector<EvalPoint> pool = as_eval_points(uni.coset_union);
    if (include_infinity) pool.push_back(EvalPoint::infinity(F));
    auto alpha = detail::take_points(pool, length);
    require(k >= 1 && k < alpha.size(), errc::dimension_mismatch, "recipe needs k < n");
    return make_single_hook_trs(field, alpha, k, 1, unsigned(k - 1), eta);
}

// Odd-characteristic extension: points from a hyperplane V of order p^(m-1)
// plus up to p-2 elements of the generating coset determined by eta^{-1},
// and optionally infinity. The default V is the span of 1, x, ..., x^(m-2).
inline GtrsSpec plus_oddchar_extended_mds(std::shared_ptr<const FieldCtx> field, size_t k,
                                          std::vector<FieldElement> c_list, bool include_infinity,
                                          const FieldElement& eta,
                                          std::optional<std::vector<FieldElement>> v_basis = {},
                                          std::optional<size_t> length = {}, bool force = false) {
    const FieldCtx& F = *field;
    require(F.p() % 2 == 1 && F.m() > 1, errc::bad_argument,
            "recipe needs odd characteristic and m > 1");
    require(!eta.is_zero(), errc::invalid_hook, "eta must be nonzero");
    std::vector<FieldElement> basis;
    if (v_basis) {
        basis = *v_basis;
    } else {
        uint64_t pw = 1;
        for (unsigned i = 0; i + 1 < F.m(); ++i) {
            basis.push_back(F.element(pw));
            pw *= F.p();
        }
    }
    auto V = additive_subgroup(F, basis);
    require(V.order() * F.p() == F.q(), errc::bad_argument, "V must have order p^(m-1)");
    auto b = eta.inv();  // (-eta)^{-1} in (p-1)b + V  <=>  eta^{-1} in b + V
    if (!force) {
        require(!V.subgroup_contains(b), errc::eta_not_in_required_coset,
                "eta^{-1} must lie in a generating coset of the quotient");
        require(c_list.size() <= F.p() - 2, errc::bad_coset_element,
                "at most p-2 extension elements");
        for (const auto& c : c_list)
            require(V.subgroup_contains(c - b), errc::bad_coset_element,
                    "extension elements must lie in the coset of eta^{-1}");
    }
    std::sort(c_list.begin(), c_list.end());
    std::vector<EvalPoint> pool = as_eval_points(V.subgroup);
    for (const auto& c : c_list) pool.push_back(EvalPoint::finite(c));
    if (include_infinity) pool.push_back(EvalPoint::infinity(F));
    auto alpha = detail::take_points(pool, length);
    require(k >= 1 && k < alpha.size(), errc::dimension_mismatch, "recipe needs k < n");
    return make_single_hook_trs(field, alpha, k, 1, unsigned(k - 1), eta);
}

// --- dual kernel vector and self-orthogonal / LCD pipeline ------------------

// u_i = prod_{j != i} (a_i - a_j)^{-1}; the kernel direction of the
// (n-1) x n Vandermonde block, every entry nonzero.
inline std::vector<FieldElement> dual_kernel_vector(const std::vector<FieldElement>& alpha) {
    const size_t n = alpha.size();
    require(n >= 1, errc::bad_argument, "need at least one point");
    const FieldCtx& F = alpha.front().field();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            require(alpha[i] != alpha[j], errc::repeated_point, "points must be distinct");
    std::vector<FieldElement> u;
    u.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        uint64_t prod = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            prod = F.mul(prod, F.sub(alpha[i].code(), alpha[j].code()));
        }
        u.push_back(F.element(F.inv(prod)));
    }
    return u;
}

// Multipliers v_i = sqrt(u_i) make the code self-orthogonal for any single
// twist (1, h, eta) with k <= (n-2)/2.
inline GtrsSpec self_orthogonal_gtrs(std::shared_ptr<const FieldCtx> field,
                                     const std::vector<FieldElement>& alpha, size_t k, unsigned h,
                                     const FieldElement& eta, bool force = false) {
    const FieldCtx& F = *field;
    const size_t n = alpha.size();
    if (!force)
        require(k >= 1 && 2 * k + 2 <= n, errc::dimension_mismatch, "recipe needs 1 <= k <= (n-2)/2");
    require(h < k, errc::invalid_hook, "hook position must lie in [0, k-1]");
    require(!eta.is_zero(), errc::invalid_hook, "eta must be nonzero");
    auto u = dual_kernel_vector(alpha);
    std::vector<FieldElement> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        auto r = sqrt(u[i]);
        require(r.has_value(), errc::non_square_kernel_entry,
                "kernel entry at index " + std::to_string(i) + " is not a square");
        v.push_back(*r);
    }
    return GtrsSpec(field, k, as_eval_points(alpha), v, {TwistHook{1, h, eta}});
}

// Scales the right block of a self-orthogonal MDS generator by beta, which
// turns the code into an LCD MDS code of the same parameters.
inline LinearCode lcd_beta_scale(const LinearCode& C, const FieldElement& beta, bool force = false) {
    const FieldCtx& F = C.field();
    require(!beta.is_zero() && beta.code() != 1 && beta != -F.one(), errc::bad_beta,
            "beta must avoid 0, 1 and -1");
    if (!force) {
        require(mds_by_minors(C), errc::not_mds, "input code must be MDS");
        require(is_self_orthogonal(C), errc::not_self_orthogonal,
                "input code must be self-orthogonal");
    }
    MatrixGF G = C.generator();
    for (size_t j = C.k(); j < C.n(); ++j)
        for (size_t i = 0; i < C.k(); ++i) G.set_code(i, j, F.mul(beta.code(), G.code_at(i, j)));
    LinearCode out(C.field_ptr(), std::move(G));
    if (!force) {
        require(is_lcd(out), errc::internal_check, "scaled code failed the LCD check");
        require(mds_by_minors(out), errc::internal_check, "scaled code failed the MDS check");
    }
    return out;
}

struct LcdMdsResult {
    GtrsSpec spec;
    LinearCode code;
};

// Characteristic-2 pipeline: additive-coset MDS points, square-root
// multipliers for self-orthogonality, then the beta scaling, realized as
// v' = (v_1..v_k, beta v_{k+1}..beta v_n).
inline LcdMdsResult lcd_mds_char2(std::shared_ptr<const FieldCtx> field, const CosetSelection& V,
                                  const std::vector<FieldElement>& reps, size_t k,
                                  const FieldElement& eta, const FieldElement& beta,
                                  std::optional<size_t> length = {}, bool force = false) {
    const FieldCtx& F = *field;
    require(F.p() == 2 && F.m() >= 2, errc::bad_argument, "recipe needs GF(2^m) with m >= 2");
    require(V.kind == GroupKind::additive, errc::bad_argument, "recipe needs an additive subgroup");
    require(!eta.is_zero(), errc::invalid_hook, "eta must be nonzero");
    require(!beta.is_zero() && beta.code() != 1, errc::bad_beta, "beta must avoid 0 and 1");
    auto uni = detail::checked_union(V, reps, force);
    if (!force) {
        require(uni.coset_union.size() * 2 == F.q(), errc::not_a_proper_subgroup,
                "coset union must have order 2^(m-1)");
        require(!uni.union_contains(eta.inv()), errc::eta_in_forbidden_set,
                "eta^{-1} lies in the coset union");
    }
    std::vector<EvalPoint> pool = as_eval_points(uni.coset_union);
    auto alpha_pts = detail::take_points(pool, length);
    const size_t n = alpha_pts.size();
    if (!force) require(k >= 1 && 2 * k + 2 <= n, errc::dimension_mismatch, "recipe needs k <= (n-2)/2");
    std::vector<FieldElement> alpha;
    for (const auto& a : alpha_pts) alpha.push_back(a.value());
    auto u = dual_kernel_vector(alpha);
    std::vector<FieldElement> v;
    for (size_t i = 0; i < n; ++i) {
        auto r = sqrt(u[i]);  // total in characteristic 2
        require(r.has_value(), errc::internal_check, "square root must exist in GF(2^m)");
        v.push_back(i < k ? *r : beta * *r);
    }
    GtrsSpec spec(field, k, alpha_pts, v, {TwistHook{1, unsigned(k - 1), eta}});
    LinearCode code = generator_matrix(spec);
    if (!force) {
        require(is_lcd(code), errc::internal_check, "pipeline output failed the LCD check");
        require(mds_by_minors(code), errc::internal_check, "pipeline output failed the MDS check");
    }
    return LcdMdsResult{std::move(spec), std::move(code)};
}

// --- subfield-chain constructions -------------------------------------------

namespace detail {

// degree of q0 over the prime field, or an error when q0 is not a power of p
inline unsigned base_degree(const FieldCtx& F, uint64_t q0) {
    uint64_t v = q0;
    unsigned e = 0;
    while (v > 1 && v % F.p() == 0) {
        v /= F.p();
        ++e;
    }
    require(v == 1 && e >= 1, errc::bad_argument, "q0 must be a power of the characteristic");
    return e;
}

inline void check_chain(const FieldCtx& F, unsigned e, const std::vector<unsigned>& chain) {
    require(!chain.empty() && chain.front() == 1, errc::broken_chain, "chain must start at s_0 = 1");
    for (size_t i = 1; i < chain.size(); ++i)
        require(chain[i] > chain[i - 1] && chain[i] % chain[i - 1] == 0, errc::broken_chain,
                "chain degrees must strictly increase and divide each other");
    require(uint64_t(e) * chain.back() == F.m(), errc::broken_chain,
            "chain must end at the ambient field");
}

}  // namespace detail

// First element of the layer GF(p^deg_hi) \ GF(p^deg_lo) reachable through
// the norm map from ascending candidates; deterministic helper for choosing
// admissible twist coefficients.
inline FieldElement subfield_layer_element(const FieldCtx& F, unsigned deg_hi, unsigned deg_lo) {
    require(deg_hi >= 1 && F.m() % deg_hi == 0 && deg_hi % deg_lo == 0 && deg_lo < deg_hi,
            errc::not_a_subfield, "layer degrees must form a subfield step");
    uint64_t sub_order = 1;
    for (unsigned i = 0; i < deg_hi; ++i) sub_order *= F.p();
    const uint64_t exponent = (F.q() - 1) / (sub_order - 1);
    for (uint64_t c = F.p(); c < F.q(); ++c) {
        uint64_t y = F.pow(c, exponent);
        if (y == 0) continue;
        auto cand = F.element(y);
        if (!in_subfield(cand, deg_lo)) return cand;
    }
    raise(errc::internal_check, "no layer element found");
}

// Multi-twist MDS spec from a chain of subfields: locators in the base
// subfield, the i-th twist coefficient in layer i but not in layer i-1.
inline GtrsSpec mds_subfield_chain(std::shared_ptr<const FieldCtx> field, uint64_t q0,
                                   const std::vector<unsigned>& chain,
                                   const std::vector<FieldElement>& alpha, size_t k,
                                   const std::vector<FieldElement>& eta,
                                   const std::vector<unsigned>& t, const std::vector<unsigned>& h,
                                   bool force = false) {
    const FieldCtx& F = *field;
    unsigned e = detail::base_degree(F, q0);
    detail::check_chain(F, e, chain);
    const size_t layers = chain.size() - 1;
    require(eta.size() == layers && t.size() == layers && h.size() == layers,
            errc::dimension_mismatch, "one twist per chain layer");
    for (const auto& a : alpha)
        require(in_subfield(a, e), errc::alpha_not_in_base, "locators must lie in the base subfield");
    require(k >= 1 && k < alpha.size(), errc::dimension_mismatch, "recipe needs k < n");
    if (!force)
        for (size_t i = 0; i < layers; ++i) {
            bool in_hi = in_subfield(eta[i], e * chain[i + 1]);
            bool in_lo = in_subfield(eta[i], e * chain[i]);
            require(in_hi && !in_lo, errc::eta_in_wrong_layer,
                    "twist coefficient " + std::to_string(i) + " must sit strictly in layer " +
                        std::to_string(i + 1));
        }
    std::vector<TwistHook> hooks;
    for (size_t i = 0; i < layers; ++i) hooks.push_back(TwistHook{t[i], h[i], eta[i]});
    return GtrsSpec(field, k, as_eval_points(alpha), hooks);
}

// LCD MDS spec on the order-n subgroup of the base subfield with twists
// t = (1..k), h = (0..k-1) and chain-layered coefficients. Valid (n, k)
// shapes are the multi-twist cases A-D plus k = 1, n > 2.
inline GtrsSpec lcd_subgroup_multitwist(std::shared_ptr<const FieldCtx> field, uint64_t q0,
                                        const std::vector<unsigned>& chain, uint64_t n, size_t k,
                                        const std::vector<FieldElement>& eta, bool force = false) {
    const FieldCtx& F = *field;
    unsigned e = detail::base_degree(F, q0);
    detail::check_chain(F, e, chain);
    require(chain.size() == k + 1, errc::dimension_mismatch, "chain must have one layer per twist");
    require(eta.size() == k, errc::dimension_mismatch, "need one eta per twist");
    require(n >= 2 && (q0 - 1) % n == 0, errc::not_a_divisor,
            "n must divide the base multiplicative order");
    char label = detail::multitwist_case(n, k);
    if (!force) {
        require(2 * k <= n, errc::case_not_satisfied, "needs k <= n/2");
        require(label == 'A' || label == 'B' || label == 'C' || label == 'D' || label == 'I',
                errc::case_not_satisfied, "(n, k) matches none of the covered cases");
        require(!(F.one() + eta[0] * eta[0]).is_zero(), errc::case_not_satisfied,
                "1 + eta_1^2 must be nonzero");
        for (size_t i = 0; i < k; ++i) {
            bool in_hi = in_subfield(eta[i], e * chain[i + 1]);
            bool in_lo = in_subfield(eta[i], e * chain[i]);
            require(in_hi && !in_lo, errc::eta_in_wrong_layer,
                    "twist coefficient " + std::to_string(i) + " must sit strictly in layer " +
                        std::to_string(i + 1));
        }
    }
    auto sel = mult_subgroup(F, n);  // n | q0-1, so the subgroup lies in the base subfield
    std::vector<TwistHook> hooks;
    for (size_t j = 0; j < k; ++j) hooks.push_back(TwistHook{unsigned(j + 1), unsigned(j), eta[j]});
    GtrsSpec spec(field, k, as_eval_points(sel.subgroup), hooks);
    if (!force) {
        auto verdict = lcd_multitwist_predicate(field, n, k, eta);  // also cross-checks the Gram
        require(verdict.lcd, errc::internal_check, "emitted spec failed the LCD predicate");
        // MDS spot-check where the minor exhaustion stays desk-scale
        double binom = 1;
        for (size_t i = 1; i <= k; ++i) binom = binom * double(n - k + i) / double(i);
        if (binom <= 1e5)
            require(mds_by_minors(generator_matrix(spec)), errc::internal_check,
                    "emitted spec failed the MDS check");
    }
    return spec;
}

}  // namespace gtrs
