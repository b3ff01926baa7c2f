#pragma once

// Evaluation codes with twist hooks. A GtrsSpec describes the code by its
// evaluation points (one of which may be the point at infinity), nonzero
// column multipliers and hook list (t, h, eta); an empty hook list is the
// plain generalized Reed-Solomon case. Evaluation at infinity returns the
// message coefficient of x^(k-1), the classical leading-coefficient
// convention; it is defined only for hook-free polynomials and for the
// single-hook (1, k-1) family, and refused otherwise.

#include <memory>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace gtrs {

class EvalPoint {
  public:
    static EvalPoint finite(const FieldElement& v) { return EvalPoint(v, false); }
    static EvalPoint infinity(const FieldCtx& F) { return EvalPoint(F.zero(), true); }

    bool is_infinity() const noexcept { return inf_; }
    const FieldElement& value() const {
        require(!inf_, errc::infinity_unsupported, "the point at infinity has no field value");
        return v_;
    }
    const FieldCtx& field() const noexcept { return v_.field(); }

    bool operator==(const EvalPoint& o) const {
        detail::check_same_field(&field(), &o.field());
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return v_ == o.v_;
    }
    bool operator!=(const EvalPoint& o) const { return !(*this == o); }

  private:
    EvalPoint(FieldElement v, bool inf) : v_(v), inf_(inf) {}
    FieldElement v_;
    bool inf_;
};

inline std::vector<EvalPoint> as_eval_points(const std::vector<FieldElement>& xs) {
    std::vector<EvalPoint> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(EvalPoint::finite(x));
    return out;
}

struct TwistHook {
    unsigned t;
    unsigned h;
    FieldElement eta;
};

class GtrsSpec {
  public:
    GtrsSpec(std::shared_ptr<const FieldCtx> field, size_t k, std::vector<EvalPoint> alpha,
             std::vector<FieldElement> v, std::vector<TwistHook> hooks)
        : field_(std::move(field)),
          k_(k),
          alpha_(std::move(alpha)),
          v_(std::move(v)),
          hooks_(std::move(hooks)) {
        validate();
    }

    // all-ones multipliers
    GtrsSpec(std::shared_ptr<const FieldCtx> field, size_t k, std::vector<EvalPoint> alpha,
             std::vector<TwistHook> hooks)
        : GtrsSpec(field, k, alpha, std::vector<FieldElement>(alpha.size(), field->one()),
                   std::move(hooks)) {}

    const FieldCtx& field() const noexcept { return *field_; }
    const std::shared_ptr<const FieldCtx>& field_ptr() const noexcept { return field_; }
    size_t n() const noexcept { return alpha_.size(); }
    size_t k() const noexcept { return k_; }
    const std::vector<EvalPoint>& alpha() const noexcept { return alpha_; }
    const std::vector<FieldElement>& multipliers() const noexcept { return v_; }
    const std::vector<TwistHook>& hooks() const noexcept { return hooks_; }

  private:
    void validate() {
        require(field_ != nullptr, errc::bad_argument, "spec needs a field");
        const size_t n = alpha_.size();
        require(n >= 1, errc::bad_argument, "spec needs at least one evaluation point");
        require(k_ >= 1 && k_ <= n, errc::dimension_mismatch, "need 1 <= k <= n");

        size_t inf_count = 0;
        for (size_t i = 0; i < n; ++i) {
            detail::check_same_field(&alpha_[i].field(), field_.get());
            if (alpha_[i].is_infinity()) ++inf_count;
            for (size_t j = i + 1; j < n; ++j)
                require(alpha_[i] != alpha_[j], errc::repeated_point,
                        "evaluation points must be pairwise distinct");
        }
        require(inf_count <= 1, errc::repeated_point, "at most one point at infinity");

        require(v_.size() == n, errc::dimension_mismatch, "multiplier vector must have length n");
        for (const auto& m : v_) {
            detail::check_same_field(&m.field(), field_.get());
            require(!m.is_zero(), errc::zero_multiplier, "column multipliers must be nonzero");
        }

        std::sort(hooks_.begin(), hooks_.end(),
                  [](const TwistHook& a, const TwistHook& b) { return a.h < b.h; });
        for (size_t i = 0; i < hooks_.size(); ++i) {
            const auto& hk = hooks_[i];
            detail::check_same_field(&hk.eta.field(), field_.get());
            require(!hk.eta.is_zero(), errc::invalid_hook, "hook coefficient eta must be nonzero");
            require(hk.h < k_, errc::invalid_hook, "hook position h must lie in [0, k-1]");
            require(hk.t >= 1 && hk.t <= n - k_, errc::invalid_hook,
                    "hook shift t must lie in [1, n-k]");
            if (i) {
                require(hooks_[i - 1].h < hk.h, errc::invalid_hook, "hook positions must be distinct");
                for (size_t j = 0; j < i; ++j)
                    require(hooks_[j].t != hk.t, errc::invalid_hook, "hook shifts must be distinct");
            }
        }

        if (inf_count == 1) {
            bool plus_family = hooks_.size() == 1 && hooks_[0].t == 1 && hooks_[0].h == k_ - 1;
            require(hooks_.empty() || plus_family, errc::infinity_unsupported,
                    "infinity is defined only for hook-free codes and the (1, k-1) family");
        }
    }

    std::shared_ptr<const FieldCtx> field_;
    size_t k_;
    std::vector<EvalPoint> alpha_;
    std::vector<FieldElement> v_;
    std::vector<TwistHook> hooks_;
};

inline GtrsSpec make_single_hook_trs(std::shared_ptr<const FieldCtx> field,
                                     std::vector<EvalPoint> alpha, size_t k, unsigned t, unsigned h,
                                     const FieldElement& eta) {
    std::vector<FieldElement> ones(alpha.size(), field->one());
    return GtrsSpec(std::move(field), k, std::move(alpha), std::move(ones), {TwistHook{t, h, eta}});
}

inline GtrsSpec make_rs(std::shared_ptr<const FieldCtx> field, std::vector<EvalPoint> alpha,
                        size_t k) {
    std::vector<FieldElement> ones(alpha.size(), field->one());
    return GtrsSpec(std::move(field), k, std::move(alpha), std::move(ones), {});
}

class TwistedPolynomial {
  public:
    TwistedPolynomial(std::shared_ptr<const FieldCtx> field, std::vector<FieldElement> message,
                      std::vector<TwistHook> hooks)
        : field_(std::move(field)), message_(std::move(message)), hooks_(std::move(hooks)) {
        require(!message_.empty(), errc::bad_argument, "message must be nonempty");
        for (const auto& c : message_) detail::check_same_field(&c.field(), field_.get());
        for (const auto& hk : hooks_) {
            detail::check_same_field(&hk.eta.field(), field_.get());
            require(!hk.eta.is_zero(), errc::invalid_hook, "hook coefficient eta must be nonzero");
            require(hk.h < message_.size(), errc::invalid_hook, "hook position beyond message length");
            require(hk.t >= 1, errc::invalid_hook, "hook shift must be positive");
        }
    }

    const FieldCtx& field() const noexcept { return *field_; }
    size_t k() const noexcept { return message_.size(); }
    const std::vector<FieldElement>& message() const noexcept { return message_; }
    const std::vector<TwistHook>& hooks() const noexcept { return hooks_; }

  private:
    std::shared_ptr<const FieldCtx> field_;
    std::vector<FieldElement> message_;
    std::vector<TwistHook> hooks_;
};

// Dense coefficients of the twisted polynomial: message coefficients plus
// eta * f_h added at position k-1+t per hook.
inline std::vector<FieldElement> expand(const TwistedPolynomial& tp) {
    const FieldCtx& F = tp.field();
    const size_t k = tp.k();
    unsigned max_t = 0;
    for (const auto& hk : tp.hooks()) max_t = std::max(max_t, hk.t);
    std::vector<FieldElement> out(k + max_t, F.zero());
    for (size_t i = 0; i < k; ++i) out[i] = tp.message()[i];
    for (const auto& hk : tp.hooks())
        out[k - 1 + hk.t] = out[k - 1 + hk.t] + hk.eta * tp.message()[hk.h];
    return out;
}

inline FieldElement evaluate(const TwistedPolynomial& tp, const EvalPoint& pt) {
    const FieldCtx& F = tp.field();
    if (pt.is_infinity()) {
        const size_t k = tp.k();
        bool plus_family =
            tp.hooks().empty() || (tp.hooks().size() == 1 && tp.hooks()[0].t == 1 &&
                                   tp.hooks()[0].h == k - 1);
        require(plus_family, errc::infinity_unsupported,
                "evaluation at infinity is defined only for hook-free polynomials and the (1, k-1) family");
        return tp.message()[k - 1];
    }
    auto coeffs = expand(tp);
    uint64_t acc = 0;
    const uint64_t x = pt.value().code();
    for (size_t i = coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs[i].code());
    return F.element(acc);
}

class LinearCode {
  public:
    LinearCode(std::shared_ptr<const FieldCtx> field, MatrixGF generator)
        : field_(std::move(field)), gen_(std::move(generator)) {
        require(field_ != nullptr, errc::bad_argument, "code needs a field");
        detail::check_same_field(&gen_.field(), field_.get());
        if (gen_.rows() > 0)
            require(rref(gen_).rank == gen_.rows(), errc::rank_deficient,
                    "generator matrix is rank deficient");
    }

    const FieldCtx& field() const noexcept { return *field_; }
    const std::shared_ptr<const FieldCtx>& field_ptr() const noexcept { return field_; }
    size_t k() const noexcept { return gen_.rows(); }
    size_t n() const noexcept { return gen_.cols(); }
    const MatrixGF& generator() const noexcept { return gen_; }

  private:
    std::shared_ptr<const FieldCtx> field_;
    MatrixGF gen_;
};

// Row i encodes the message unit vector e_i at every point, scaled by the
// column multipliers; the infinity column is v * e_k.
inline LinearCode generator_matrix(const GtrsSpec& spec) {
    const FieldCtx& F = spec.field();
    const size_t k = spec.k(), n = spec.n();
    unsigned max_t = 0;
    for (const auto& hk : spec.hooks()) max_t = std::max(max_t, hk.t);
    MatrixGF G(F, k, n);
    std::vector<uint64_t> pw(k + max_t);
    for (size_t j = 0; j < n; ++j) {
        const uint64_t vj = spec.multipliers()[j].code();
        if (spec.alpha()[j].is_infinity()) {
            G.set_code(k - 1, j, vj);
            continue;
        }
        const uint64_t x = spec.alpha()[j].value().code();
        pw[0] = 1;
        for (size_t e = 1; e < pw.size(); ++e) pw[e] = F.mul(pw[e - 1], x);
        for (size_t i = 0; i < k; ++i) G.set_code(i, j, pw[i]);
        for (const auto& hk : spec.hooks()) {
            uint64_t twist = F.mul(hk.eta.code(), pw[k - 1 + hk.t]);
            G.set_code(hk.h, j, F.add(G.code_at(hk.h, j), twist));
        }
        for (size_t i = 0; i < k; ++i) G.set_code(i, j, F.mul(vj, G.code_at(i, j)));
    }
    return LinearCode(spec.field_ptr(), std::move(G));
}

inline std::vector<FieldElement> encode(const GtrsSpec& spec, const std::vector<FieldElement>& message) {
    require(message.size() == spec.k(), errc::dimension_mismatch, "message must have length k");
    const FieldCtx& F = spec.field();
    auto G = generator_matrix(spec).generator();
    std::vector<FieldElement> out;
    out.reserve(spec.n());
    for (size_t j = 0; j < spec.n(); ++j) {
        uint64_t acc = 0;
        for (size_t i = 0; i < spec.k(); ++i) acc = F.add(acc, F.mul(message[i].code(), G.code_at(i, j)));
        out.push_back(F.element(acc));
    }
    return out;
}

// Euclidean dual; generator rows are a kernel basis of G.
inline LinearCode dual_code(const LinearCode& C) {
    return LinearCode(C.field_ptr(), kernel_basis(C.generator()));
}

// The monomial map (c_1..c_n) -> (v_1 c_pi(1), ..., v_n c_pi(n)).
inline LinearCode apply_equivalence(const LinearCode& C, const std::vector<size_t>& pi,
                                    const std::vector<FieldElement>& v) {
    const size_t n = C.n();
    require(pi.size() == n && v.size() == n, errc::dimension_mismatch,
            "permutation and multipliers must have length n");
    std::vector<bool> seen(n, false);
    for (size_t x : pi) {
        require(x < n && !seen[x], errc::bad_permutation, "not a permutation of the coordinates");
        seen[x] = true;
    }
    const FieldCtx& F = C.field();
    for (const auto& m : v) {
        detail::check_same_field(&m.field(), &F);
        require(!m.is_zero(), errc::zero_multiplier, "monomial map multipliers must be nonzero");
    }
    MatrixGF G(F, C.k(), n);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < C.k(); ++i)
            G.set_code(i, j, F.mul(v[j].code(), C.generator().code_at(i, pi[j])));
    return LinearCode(C.field_ptr(), std::move(G));
}

}  // namespace gtrs
