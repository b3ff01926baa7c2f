#pragma once

// Exact arithmetic in GF(p^m) with a polynomial-basis representation.
//
// A FieldCtx owns one concrete field: the prime p, the extension degree m and
// a monic irreducible modulus polynomial over GF(p). Elements are stored as
// the integer encoding sum(digits[i] * p^i) of their reduced digit vector, so
// equality of encodings is equality of canonical forms. Small fields
// (q <= 2^20) get log/antilog tables, tiny fields (q <= 256) additionally get
// dense add/mul tables; larger fields fall back to direct polynomial
// arithmetic, which stays exact at any supported size.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace gtrs {

namespace detail {

constexpr unsigned kMaxDegree = 24;
constexpr uint64_t kTableLimit = uint64_t(1) << 20;
constexpr uint64_t kTinyLimit = 256;
constexpr uint64_t kMaxOrder = uint64_t(1) << 44;

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p), coefficients ascending by power.
inline void poly_mod_inplace(std::vector<uint64_t>& f, const std::vector<uint64_t>& g, uint64_t p) {
    const size_t dg = g.size() - 1;  // g monic
    while (f.size() > dg) {
        uint64_t lead = f.back() % p;
        if (lead != 0) {
            size_t off = f.size() - 1 - dg;
            for (size_t j = 0; j < dg; ++j) {
                uint64_t s = (lead * (g[j] % p)) % p;
                f[off + j] = (f[off + j] + p - s) % p;
            }
        }
        f.pop_back();
    }
    while (!f.empty() && f.back() % p == 0) f.pop_back();
}

inline bool divides(const std::vector<uint64_t>& g, std::vector<uint64_t> f, uint64_t p) {
    poly_mod_inplace(f, g, p);
    return f.empty();
}

inline bool is_irreducible(const std::vector<uint64_t>& f, uint64_t p) {
    const size_t m = f.size() - 1;
    if (m == 1) return true;
    std::vector<uint64_t> g;
    for (size_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t t = 0; t < count; ++t) {
            g.assign(d + 1, 0);
            uint64_t v = t;
            for (size_t i = 0; i < d; ++i) {
                g[i] = v % p;
                v /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n && d <= (uint64_t(1) << 24); ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);  // cofactor prime: composite would exceed kMaxOrder
    return out;
}

}  // namespace detail

class FieldCtx;

class FieldElement {
  public:
    FieldElement(const FieldCtx& field, uint64_t code);

    uint64_t code() const noexcept { return code_; }
    const FieldCtx& field() const noexcept { return *ctx_; }
    bool is_zero() const noexcept { return code_ == 0; }
    std::vector<uint32_t> digits() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(int64_t e) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
    // Ordering by integer encoding; used for canonical sorted element sets.
    bool operator<(const FieldElement& rhs) const;

  private:
    const FieldCtx* ctx_;
    uint64_t code_;
};

class FieldCtx {
  public:
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    // modulus: ascending-power digits, length m+1, monic; empty selects the
    // lexicographically smallest monic irreducible of degree m (deterministic
    // builds).
    static std::shared_ptr<const FieldCtx> build(uint64_t p, unsigned m,
                                                 std::vector<uint32_t> modulus = {}) {
        require(detail::is_prime(p), errc::not_prime, "p = " + std::to_string(p) + " is not prime");
        require(m >= 1 && m <= detail::kMaxDegree, errc::degree_mismatch,
                "extension degree out of range");
        uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            require(q <= detail::kMaxOrder / p, errc::field_too_large, "field order beyond desk scale");
            q *= p;
        }
        require(m == 1 || p < (uint64_t(1) << 22), errc::field_too_large,
                "characteristic too large for extension arithmetic");
        require(m > 1 || p < (uint64_t(1) << 31), errc::field_too_large, "prime too large");
        if (modulus.empty())
            modulus = default_modulus(p, m);
        else
            validate_modulus(modulus, p, m);
        return std::shared_ptr<const FieldCtx>(new FieldCtx(p, m, q, std::move(modulus)));
    }

    uint64_t p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    uint64_t q() const noexcept { return q_; }
    const std::vector<uint32_t>& modulus() const noexcept { return modulus_; }
    std::string label() const { return m_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(m_); }

    FieldElement element(uint64_t code) const {
        require(code < q_, errc::bad_argument, "element encoding out of range for " + label());
        return FieldElement(*this, code);
    }
    FieldElement zero() const { return FieldElement(*this, 0); }
    FieldElement one() const { return FieldElement(*this, 1); }
    // Embeds an integer via the prime subfield (v mod p).
    FieldElement scalar(int64_t v) const {
        int64_t r = v % int64_t(p_);
        if (r < 0) r += int64_t(p_);
        return FieldElement(*this, uint64_t(r));
    }

    // --- code-level arithmetic -------------------------------------------

    uint64_t add(uint64_t a, uint64_t b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            uint64_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_tab_.empty()) return add_tab_[a * q_ + b];
        return add_digits(a, b);
    }

    uint64_t neg(uint64_t a) const {
        if (p_ == 2) return a;
        if (m_ == 1) return a == 0 ? 0 : p_ - a;
        if (!neg_tab_.empty()) return neg_tab_[a];
        return neg_digits(a);
    }

    uint64_t sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

    uint64_t mul(uint64_t a, uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (!mul_tab_.empty()) return mul_tab_[a * q_ + b];
        if (!log_.empty()) return exp_[log_[a] + log_[b]];
        if (m_ == 1) return (a * b) % p_;
        return mul_generic(a, b);
    }

    uint64_t inv(uint64_t a) const {
        require(a != 0, errc::division_by_zero, "inverse of zero in " + label());
        if (!log_.empty()) return exp_[(q_ - 1) - log_[a]];
        return pow(a, q_ - 2);
    }

    uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

    uint64_t pow(uint64_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (!log_.empty()) {
            uint64_t r = q_ - 1;
            return exp_[(log_[a] * (e % r)) % r];
        }
        uint64_t acc = 1, base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    uint64_t pow_signed(uint64_t a, int64_t e) const {
        if (e >= 0) return pow(a, uint64_t(e));
        return pow(inv(a), uint64_t(-(e + 1)) + 1);
    }

    std::vector<uint32_t> digits_of(uint64_t code) const {
        std::vector<uint32_t> d(m_);
        for (unsigned i = 0; i < m_; ++i) {
            d[i] = uint32_t(code % p_);
            code /= p_;
        }
        return d;
    }

    uint64_t code_of(const std::vector<uint32_t>& digits) const {
        require(digits.size() == m_, errc::degree_mismatch, "digit vector length != m");
        uint64_t code = 0, pw = 1;
        for (unsigned i = 0; i < m_; ++i) {
            require(digits[i] < p_, errc::bad_argument, "digit out of range");
            code += digits[i] * pw;
            pw *= p_;
        }
        return code;
    }

    // First element of multiplicative order q-1 in ascending encoding order.
    uint64_t primitive_element() const {
        std::call_once(prim_once_, [this] {
            const auto& f = order_factors();
            for (uint64_t c = 1; c < q_; ++c) {
                bool ok = true;
                for (uint64_t r : f)
                    if (pow(c, (q_ - 1) / r) == 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    primitive_ = c;
                    return;
                }
            }
            raise(errc::internal_check, "no primitive element found");
        });
        return primitive_;
    }

    const std::vector<uint64_t>& order_factors() const {
        std::call_once(factors_once_, [this] { factors_ = detail::prime_factors(q_ - 1); });
        return factors_;
    }

  private:
    FieldCtx(uint64_t p, unsigned m, uint64_t q, std::vector<uint32_t> modulus)
        : p_(p), m_(m), q_(q), modulus_(std::move(modulus)) {
        if (q_ <= detail::kTableLimit) build_log_tables();
        if (q_ <= detail::kTinyLimit) build_dense_tables();
    }

    static void validate_modulus(std::vector<uint32_t>& mod, uint64_t p, unsigned m) {
        require(mod.size() == size_t(m) + 1, errc::degree_mismatch,
                "modulus must have m+1 ascending-power digits");
        for (auto& c : mod) c = uint32_t(c % p);
        require(mod.back() == 1, errc::degree_mismatch, "modulus must be monic");
        std::vector<uint64_t> f(mod.begin(), mod.end());
        require(detail::is_irreducible(f, p), errc::reducible_modulus,
                "modulus is reducible over GF(" + std::to_string(p) + ")");
    }

    // Lexicographically smallest over ascending-power digit tuples
    // (c0, c1, ..., c_{m-1}); the leading coefficient is fixed to 1.
    static std::vector<uint32_t> default_modulus(uint64_t p, unsigned m) {
        uint64_t count = 1;
        for (unsigned i = 0; i < m; ++i) count *= p;
        std::vector<uint64_t> f(m + 1);
        for (uint64_t v = 0; v < count; ++v) {
            uint64_t t = v;
            for (unsigned i = 0; i < m; ++i) {
                unsigned pos = m - 1 - i;  // c0 varies slowest
                f[pos] = t % p;
                t /= p;
            }
            f[m] = 1;
            if (detail::is_irreducible(f, p)) return std::vector<uint32_t>(f.begin(), f.end());
        }
        raise(errc::internal_check, "no irreducible modulus of requested degree");
    }

    uint64_t add_digits(uint64_t a, uint64_t b) const {
        uint64_t r = 0, pw = 1;
        for (unsigned i = 0; i < m_; ++i) {
            uint64_t s = a % p_ + b % p_;
            if (s >= p_) s -= p_;
            r += s * pw;
            a /= p_;
            b /= p_;
            pw *= p_;
        }
        return r;
    }

    uint64_t neg_digits(uint64_t a) const {
        uint64_t r = 0, pw = 1;
        for (unsigned i = 0; i < m_; ++i) {
            uint64_t d = a % p_;
            r += (d == 0 ? 0 : p_ - d) * pw;
            a /= p_;
            pw *= p_;
        }
        return r;
    }

    uint64_t mul_generic(uint64_t a, uint64_t b) const {
        std::array<uint64_t, detail::kMaxDegree> da{}, db{};
        std::array<uint64_t, 2 * detail::kMaxDegree> conv{};
        for (unsigned i = 0; i < m_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (unsigned i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < m_; ++j) conv[i + j] += da[i] * db[j];
        }
        for (unsigned d = 2 * m_ - 2; d >= m_; --d) {
            uint64_t c = conv[d] % p_;
            if (c == 0) continue;
            for (unsigned j = 0; j < m_; ++j) {
                uint64_t mj = modulus_[j];
                if (mj) conv[d - m_ + j] += c * (p_ - mj);
            }
        }
        uint64_t r = 0, pw = 1;
        for (unsigned i = 0; i < m_; ++i) {
            r += (conv[i] % p_) * pw;
            pw *= p_;
        }
        return r;
    }

    void build_log_tables() {
        factors_ = detail::prime_factors(q_ - 1);
        std::call_once(factors_once_, [] {});
        uint64_t g = 1;
        if (q_ > 2) {
            for (uint64_t c = 2; c < q_; ++c) {
                bool ok = true;
                for (uint64_t r : factors_)
                    if (pow_slow(c, (q_ - 1) / r) == 1) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    g = c;
                    break;
                }
            }
        }
        primitive_ = g;
        std::call_once(prim_once_, [] {});
        const uint64_t n = q_ - 1;
        exp_.assign(2 * n, 0);
        log_.assign(q_, uint32_t(n));  // log_[0] stays at the sentinel
        uint64_t x = 1;
        for (uint64_t i = 0; i < n; ++i) {
            exp_[i] = uint32_t(x);
            log_[x] = uint32_t(i);
            x = m_ == 1 ? (x * g) % p_ : mul_generic(x, g);
        }
        for (uint64_t i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
    }

    uint64_t pow_slow(uint64_t a, uint64_t e) const {
        uint64_t acc = 1, base = a;
        while (e) {
            if (e & 1) acc = m_ == 1 ? (acc * base) % p_ : mul_generic(acc, base);
            base = m_ == 1 ? (base * base) % p_ : mul_generic(base, base);
            e >>= 1;
        }
        return acc;
    }

    void build_dense_tables() {
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        neg_tab_.resize(q_);
        for (uint64_t a = 0; a < q_; ++a) {
            neg_tab_[a] = uint8_t(m_ == 1 ? (a == 0 ? 0 : p_ - a) : neg_digits(a));
            for (uint64_t b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] =
                    uint8_t(p_ == 2 ? (a ^ b) : (m_ == 1 ? (a + b) % p_ : add_digits(a, b)));
                mul_tab_[a * q_ + b] =
                    uint8_t(a == 0 || b == 0 ? 0 : exp_[log_[a] + log_[b]]);
            }
        }
    }

    uint64_t p_;
    unsigned m_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_, log_;
    std::vector<uint8_t> add_tab_, mul_tab_, neg_tab_;
    mutable std::once_flag prim_once_, factors_once_;
    mutable uint64_t primitive_ = 0;
    mutable std::vector<uint64_t> factors_;
};

inline std::shared_ptr<const FieldCtx> field_build(uint64_t p, unsigned m,
                                                   std::vector<uint32_t> modulus = {}) {
    return FieldCtx::build(p, m, std::move(modulus));
}

// --- FieldElement inline bodies -----------------------------------------

inline FieldElement::FieldElement(const FieldCtx& field, uint64_t code) : ctx_(&field), code_(code) {}

inline std::vector<uint32_t> FieldElement::digits() const { return ctx_->digits_of(code_); }

namespace detail {
inline void check_same_field(const FieldCtx* a, const FieldCtx* b) {
    require(a == b, errc::mixed_fields, "elements belong to different field contexts");
}
}  // namespace detail

inline FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    detail::check_same_field(ctx_, rhs.ctx_);
    return FieldElement(*ctx_, ctx_->add(code_, rhs.code_));
}
inline FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    detail::check_same_field(ctx_, rhs.ctx_);
    return FieldElement(*ctx_, ctx_->sub(code_, rhs.code_));
}
inline FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    detail::check_same_field(ctx_, rhs.ctx_);
    return FieldElement(*ctx_, ctx_->mul(code_, rhs.code_));
}
inline FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    detail::check_same_field(ctx_, rhs.ctx_);
    return FieldElement(*ctx_, ctx_->div(code_, rhs.code_));
}
inline FieldElement FieldElement::operator-() const { return FieldElement(*ctx_, ctx_->neg(code_)); }
inline FieldElement FieldElement::inv() const { return FieldElement(*ctx_, ctx_->inv(code_)); }
inline FieldElement FieldElement::pow(int64_t e) const {
    return FieldElement(*ctx_, ctx_->pow_signed(code_, e));
}
inline bool FieldElement::operator==(const FieldElement& rhs) const {
    detail::check_same_field(ctx_, rhs.ctx_);
    return code_ == rhs.code_;
}
inline bool FieldElement::operator<(const FieldElement& rhs) const {
    detail::check_same_field(ctx_, rhs.ctx_);
    return code_ < rhs.code_;
}

// --- square roots and subfield membership --------------------------------

// Total in characteristic 2 (Frobenius); in odd characteristic returns the
// root whose ascending-power digit array is lexicographically smaller, or
// nothing for non-residues.
inline std::optional<FieldElement> sqrt(const FieldElement& a) {
    const FieldCtx& F = a.field();
    const uint64_t q = F.q();
    if (a.is_zero()) return F.zero();
    if (F.p() == 2) return F.element(F.pow(a.code(), q / 2));
    if (F.pow(a.code(), (q - 1) / 2) != 1) return std::nullopt;
    uint64_t r = 0;
    if (q % 4 == 3) {
        r = F.pow(a.code(), (q + 1) / 4);
    } else {
        for (uint64_t c = 1; c < q; ++c)
            if (F.mul(c, c) == a.code()) {
                r = c;
                break;
            }
    }
    uint64_t r2 = F.neg(r);
    auto d1 = F.digits_of(r), d2 = F.digits_of(r2);
    return F.element(std::lexicographical_compare(d1.begin(), d1.end(), d2.begin(), d2.end()) ? r : r2);
}

// True iff a lies in GF(p^d); Frobenius fixed-point test. d must divide m.
inline bool in_subfield(const FieldElement& a, unsigned d) {
    const FieldCtx& F = a.field();
    require(d >= 1 && F.m() % d == 0, errc::not_a_subfield,
            "GF(p^" + std::to_string(d) + ") is not a subfield of " + F.label());
    uint64_t e = 1;
    for (unsigned i = 0; i < d; ++i) e *= F.p();
    return F.pow(a.code(), e) == a.code();
}

// --- subgroup and coset machinery ----------------------------------------

enum class GroupKind { multiplicative, additive };

// A subgroup together with coset representatives and the cached union of
// their cosets. Subgroup-only selections use the identity as the single
// representative.
class CosetSelection {
  public:
    GroupKind kind;
    std::vector<FieldElement> subgroup;        // sorted by encoding
    std::vector<FieldElement> representatives;
    std::vector<FieldElement> coset_union;     // sorted by encoding
    bool quotient_subgroup_checked = false;

    const FieldCtx& field() const { return subgroup.front().field(); }
    size_t order() const { return subgroup.size(); }

    bool subgroup_contains(const FieldElement& x) const {
        return std::binary_search(subgroup.begin(), subgroup.end(), x);
    }
    bool union_contains(const FieldElement& x) const {
        return std::binary_search(coset_union.begin(), coset_union.end(), x);
    }
};

// The unique multiplicative subgroup of order d (d | q-1), generated by
// g^((q-1)/d) for the first primitive element g in encoding order.
inline CosetSelection mult_subgroup(const FieldCtx& F, uint64_t d) {
    require(d >= 1 && (F.q() - 1) % d == 0, errc::not_a_divisor,
            std::to_string(d) + " does not divide q-1 = " + std::to_string(F.q() - 1));
    uint64_t gen = F.pow(F.primitive_element(), (F.q() - 1) / d);
    CosetSelection sel;
    sel.kind = GroupKind::multiplicative;
    uint64_t x = 1;
    for (uint64_t i = 0; i < d; ++i) {
        sel.subgroup.push_back(F.element(x));
        x = F.mul(x, gen);
    }
    require(x == 1, errc::internal_check, "subgroup generator has wrong order");
    std::sort(sel.subgroup.begin(), sel.subgroup.end());
    sel.representatives = {F.one()};
    sel.coset_union = sel.subgroup;
    return sel;
}

// GF(p)-span of an independent basis, as an additive subgroup of order
// p^|basis|. An empty basis yields {0}.
inline CosetSelection additive_subgroup(const FieldCtx& F, const std::vector<FieldElement>& basis) {
    const uint64_t p = F.p();
    // independence check: rank of the digit matrix over GF(p)
    std::vector<std::vector<uint64_t>> rows;
    for (const auto& b : basis) {
        detail::check_same_field(&b.field(), &F);
        auto d = F.digits_of(b.code());
        rows.emplace_back(d.begin(), d.end());
    }
    size_t rank = 0;
    for (size_t col = 0; col < F.m() && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        uint64_t pinv = 1, base = rows[rank][col] % p, e = p - 2;
        while (e) {
            if (e & 1) pinv = (pinv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            uint64_t f = (rows[r][col] * pinv) % p;
            for (size_t c = 0; c < F.m(); ++c)
                rows[r][c] = (rows[r][c] + (p - f) * rows[rank][c]) % p;
        }
        ++rank;
    }
    require(rank == basis.size(), errc::dependent_basis, "basis is linearly dependent over GF(p)");

    CosetSelection sel;
    sel.kind = GroupKind::additive;
    std::vector<uint64_t> span = {0};
    for (const auto& b : basis) {
        std::vector<uint64_t> next;
        next.reserve(span.size() * p);
        uint64_t shift = 0;
        for (uint64_t c = 0; c < p; ++c) {
            for (uint64_t s : span) next.push_back(F.add(s, shift));
            shift = F.add(shift, b.code());
        }
        span = std::move(next);
    }
    for (uint64_t s : span) sel.subgroup.push_back(F.element(s));
    std::sort(sel.subgroup.begin(), sel.subgroup.end());
    sel.representatives = {F.zero()};
    sel.coset_union = sel.subgroup;
    return sel;
}

// Union of the cosets rep_j * G (resp. rep_j + V). Representatives must lie
// in pairwise distinct cosets; with validate_closure the coset set must also
// be closed as a subgroup of the quotient.
inline CosetSelection quotient_subgroup_union(const CosetSelection& sub,
                                              const std::vector<FieldElement>& reps,
                                              bool validate_closure = false) {
    require(!reps.empty(), errc::bad_argument, "need at least one representative");
    const FieldCtx& F = sub.field();
    const bool mult = sub.kind == GroupKind::multiplicative;
    for (const auto& r : reps) {
        detail::check_same_field(&r.field(), &F);
        if (mult)
            require(!r.is_zero(), errc::bad_coset_element, "zero cannot represent a multiplicative coset");
    }
    auto same_coset = [&](const FieldElement& a, const FieldElement& b) {
        return sub.subgroup_contains(mult ? a / b : a - b);
    };
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
            require(!same_coset(reps[i], reps[j]), errc::repeated_coset,
                    "representatives share a coset");

    CosetSelection sel;
    sel.kind = sub.kind;
    sel.subgroup = sub.subgroup;
    sel.representatives = reps;
    sel.coset_union.reserve(reps.size() * sub.subgroup.size());
    for (const auto& r : reps)
        for (const auto& g : sub.subgroup) sel.coset_union.push_back(mult ? r * g : r + g);
    std::sort(sel.coset_union.begin(), sel.coset_union.end());
    require(sel.coset_union.size() == reps.size() * sub.subgroup.size(), errc::internal_check,
            "coset union size mismatch");

    if (validate_closure) {
        for (const auto& a : reps)
            for (const auto& b : reps)
                require(sel.union_contains(mult ? a * b : a + b), errc::not_a_quotient_subgroup,
                        "coset set is not closed in the quotient");
        sel.quotient_subgroup_checked = true;
    }
    return sel;
}

}  // namespace gtrs
