#pragma once

// Dense exact linear algebra over a FieldCtx: products, RREF, determinants,
// systematic forms, maximal-minor exhaustion and kernel bases. All matrices
// are small and dense; entries are stored as integer encodings.

#include <cstdint>
#include <ostream>
#include <vector>

#include "gf.hpp"

namespace gtrs {

class MatrixGF {
  public:
    MatrixGF(const FieldCtx& F, size_t rows, size_t cols)
        : ctx_(&F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatrixGF identity(const FieldCtx& F, size_t n) {
        MatrixGF I(F, n, n);
        for (size_t i = 0; i < n; ++i) I.a_[i * n + i] = 1;
        return I;
    }

    const FieldCtx& field() const noexcept { return *ctx_; }
    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    FieldElement at(size_t i, size_t j) const { return ctx_->element(a_[i * cols_ + j]); }
    void set(size_t i, size_t j, const FieldElement& v) {
        detail::check_same_field(&v.field(), ctx_);
        a_[i * cols_ + j] = v.code();
    }
    uint64_t code_at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set_code(size_t i, size_t j, uint64_t code) { a_[i * cols_ + j] = code; }

    bool is_zero() const {
        for (uint64_t v : a_)
            if (v) return false;
        return true;
    }

    bool operator==(const MatrixGF& rhs) const {
        return ctx_ == rhs.ctx_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }
    bool operator!=(const MatrixGF& rhs) const { return !(*this == rhs); }

    MatrixGF operator*(const MatrixGF& rhs) const {
        detail::check_same_field(rhs.ctx_, ctx_);
        require(cols_ == rhs.rows_, errc::dimension_mismatch, "matmul: inner dimensions differ");
        MatrixGF out(*ctx_, rows_, rhs.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                uint64_t aik = a_[i * cols_ + k];
                if (!aik) continue;
                for (size_t j = 0; j < rhs.cols_; ++j) {
                    uint64_t t = ctx_->mul(aik, rhs.a_[k * rhs.cols_ + j]);
                    out.a_[i * rhs.cols_ + j] = ctx_->add(out.a_[i * rhs.cols_ + j], t);
                }
            }
        return out;
    }

    MatrixGF transpose() const {
        MatrixGF out(*ctx_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = a_[i * cols_ + j];
        return out;
    }

    MatrixGF rows_subset(const std::vector<size_t>& idx) const {
        MatrixGF out(*ctx_, idx.size(), cols_);
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < cols_; ++j) out.a_[i * cols_ + j] = a_[idx[i] * cols_ + j];
        return out;
    }

    // Stacks rhs below this matrix.
    MatrixGF vstack(const MatrixGF& rhs) const {
        detail::check_same_field(rhs.ctx_, ctx_);
        require(cols_ == rhs.cols_, errc::dimension_mismatch, "vstack: column counts differ");
        MatrixGF out(*ctx_, rows_ + rhs.rows_, cols_);
        out.a_ = a_;
        out.a_.insert(out.a_.end(), rhs.a_.begin(), rhs.a_.end());
        return out;
    }

  private:
    const FieldCtx* ctx_;
    size_t rows_, cols_;
    std::vector<uint64_t> a_;
};

inline std::ostream& operator<<(std::ostream& os, const MatrixGF& M) {
    os << "[";
    for (size_t i = 0; i < M.rows(); ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < M.cols(); ++j) {
            if (j) os << " ";
            os << M.code_at(i, j);
        }
    }
    return os << "]";
}

struct RrefResult {
    MatrixGF matrix;
    size_t rank;
    std::vector<size_t> pivot_cols;
};

// Gaussian elimination with first-nonzero pivot selection.
inline RrefResult rref(const MatrixGF& X) {
    const FieldCtx& F = X.field();
    RrefResult res{X, 0, {}};
    MatrixGF& R = res.matrix;
    size_t row = 0;
    for (size_t col = 0; col < X.cols() && row < X.rows(); ++col) {
        size_t piv = row;
        while (piv < X.rows() && R.code_at(piv, col) == 0) ++piv;
        if (piv == X.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < X.cols(); ++j) {
                uint64_t t = R.code_at(row, j);
                R.set_code(row, j, R.code_at(piv, j));
                R.set_code(piv, j, t);
            }
        uint64_t pinv = F.inv(R.code_at(row, col));
        for (size_t j = col; j < X.cols(); ++j) R.set_code(row, j, F.mul(pinv, R.code_at(row, j)));
        for (size_t r = 0; r < X.rows(); ++r) {
            if (r == row) continue;
            uint64_t f = R.code_at(r, col);
            if (!f) continue;
            for (size_t j = col; j < X.cols(); ++j)
                R.set_code(r, j, F.sub(R.code_at(r, j), F.mul(f, R.code_at(row, j))));
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

namespace detail {

// Determinant of the k x k code buffer (row-major), destroyed in place.
inline uint64_t det_codes(const FieldCtx& F, std::vector<uint64_t>& a, size_t k) {
    uint64_t d = 1;
    bool negate = false;
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && a[piv * k + col] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != col) {
            for (size_t j = col; j < k; ++j) std::swap(a[col * k + j], a[piv * k + j]);
            negate = !negate;
        }
        uint64_t pv = a[col * k + col];
        d = F.mul(d, pv);
        uint64_t pvinv = F.inv(pv);
        for (size_t r = col + 1; r < k; ++r) {
            uint64_t f = a[r * k + col];
            if (!f) continue;
            f = F.mul(f, pvinv);
            for (size_t j = col + 1; j < k; ++j)
                a[r * k + j] = F.sub(a[r * k + j], F.mul(f, a[col * k + j]));
            a[r * k + col] = 0;
        }
    }
    return negate ? F.neg(d) : d;
}

}  // namespace detail

inline FieldElement det(const MatrixGF& X) {
    require(X.rows() == X.cols(), errc::not_square_matrix, "determinant of a non-square matrix");
    const FieldCtx& F = X.field();
    size_t k = X.rows();
    if (k == 0) return F.one();
    std::vector<uint64_t> buf(k * k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) buf[i * k + j] = X.code_at(i, j);
    return F.element(detail::det_codes(F, buf, k));
}

struct SystematicForm {
    MatrixGF left;   // k x k block; the identity
    MatrixGF right;  // k x (n-k) block
    std::vector<size_t> column_order;  // position -> original column
};

// Row-reduces G to [I : P] after moving the pivot columns to the front; the
// recorded order is the identity permutation whenever the first k columns
// are independent (always the case for MDS generators).
inline SystematicForm systematic_form(const MatrixGF& G) {
    auto r = rref(G);
    require(r.rank == G.rows(), errc::rank_deficient, "generator matrix is rank deficient");
    const size_t k = G.rows(), n = G.cols();
    std::vector<size_t> order = r.pivot_cols;
    std::vector<bool> is_pivot(n, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) order.push_back(c);
    SystematicForm out{MatrixGF::identity(G.field(), k), MatrixGF(G.field(), k, n - k), order};
    for (size_t j = k; j < n; ++j)
        for (size_t i = 0; i < k; ++i) out.right.set_code(i, j - k, r.matrix.code_at(i, order[j]));
    return out;
}

namespace detail {

inline bool first_combination(std::vector<size_t>& idx, size_t k) {
    idx.resize(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    return true;
}

inline bool next_combination(std::vector<size_t>& idx, size_t n) {
    const size_t k = idx.size();
    size_t i = k;
    while (i-- > 0) {
        if (idx[i] != i + n - k) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// True iff every rows x rows column submatrix is nonsingular. Column subsets
// are scanned in lexicographic order; on failure the first violating subset
// is reported through first_zero_minor.
inline bool all_maximal_minors_nonzero(const MatrixGF& G,
                                       std::vector<size_t>* first_zero_minor = nullptr) {
    const size_t k = G.rows(), n = G.cols();
    require(k <= n, errc::dimension_mismatch, "wide matrix expected (rows <= cols)");
    const FieldCtx& F = G.field();
    if (k == 0) return true;
    std::vector<size_t> idx;
    detail::first_combination(idx, k);
    std::vector<uint64_t> buf(k * k);
    do {
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) buf[i * k + j] = G.code_at(i, idx[j]);
        if (detail::det_codes(F, buf, k) == 0) {
            if (first_zero_minor) *first_zero_minor = idx;
            return false;
        }
    } while (detail::next_combination(idx, n));
    return true;
}

// Rows form a basis of { v : X v^T = 0 }.
inline MatrixGF kernel_basis(const MatrixGF& X) {
    const FieldCtx& F = X.field();
    auto r = rref(X);
    const size_t n = X.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    MatrixGF out(F, n - r.rank, n);
    size_t row = 0;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        out.set_code(row, free_col, 1);
        for (size_t i = 0; i < r.rank; ++i)
            out.set_code(row, r.pivot_cols[i], F.neg(r.matrix.code_at(i, free_col)));
        ++row;
    }
    return out;
}

}  // namespace gtrs
