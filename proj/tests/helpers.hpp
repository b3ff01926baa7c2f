#pragma once

// Shared test utilities. The oracles here are deliberately independent of the
// library code paths they cross-check: cofactor determinants, plain message
// enumeration for minimum weight, exhaustive square tables.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <gtrs/gf.hpp>
#include <gtrs/linalg.hpp>

namespace testutil {

using gtrs::Error;
using gtrs::errc;

inline std::optional<errc> thrown_kind(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

// Cofactor (Laplace) expansion determinant; O(k!) but fine for k <= 6.
inline uint64_t cofactor_det(const gtrs::FieldCtx& F, const std::vector<std::vector<uint64_t>>& a) {
    const size_t k = a.size();
    if (k == 0) return 1;
    if (k == 1) return a[0][0];
    uint64_t acc = 0;
    for (size_t j = 0; j < k; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<uint64_t>> minor(k - 1, std::vector<uint64_t>(k - 1));
        for (size_t r = 1; r < k; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < k; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        uint64_t term = F.mul(a[0][j], cofactor_det(F, minor));
        acc = (j % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
    }
    return acc;
}

inline uint64_t cofactor_det(const gtrs::MatrixGF& M) {
    std::vector<std::vector<uint64_t>> a(M.rows(), std::vector<uint64_t>(M.cols()));
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) a[i][j] = M.code_at(i, j);
    return cofactor_det(M.field(), a);
}

// Exhaustive minimum weight by plain message enumeration (all q^k messages,
// recomputing each codeword from scratch). Slow on purpose; independent of
// the library's incremental enumerator.
inline size_t naive_min_weight(const gtrs::MatrixGF& G) {
    const gtrs::FieldCtx& F = G.field();
    const size_t k = G.rows(), n = G.cols();
    std::vector<uint64_t> msg(k, 0);
    size_t best = n + 1;
    while (true) {
        size_t i = 0;
        while (i < k && msg[i] == F.q() - 1) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
        size_t w = 0;
        for (size_t c = 0; c < n; ++c) {
            uint64_t acc = 0;
            for (size_t r = 0; r < k; ++r) acc = F.add(acc, F.mul(msg[r], G.code_at(r, c)));
            if (acc) ++w;
        }
        if (w < best) best = w;
    }
    return best;
}

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline uint64_t rand_below(std::mt19937_64& g, uint64_t bound) {
    return std::uniform_int_distribution<uint64_t>(0, bound - 1)(g);
}

// n distinct field elements, uniformly chosen.
inline std::vector<gtrs::FieldElement> random_distinct(const gtrs::FieldCtx& F, size_t n,
                                                       std::mt19937_64& g) {
    std::vector<uint64_t> codes;
    while (codes.size() < n) {
        uint64_t c = rand_below(g, F.q());
        bool seen = false;
        for (uint64_t x : codes) seen |= (x == c);
        if (!seen) codes.push_back(c);
    }
    std::vector<gtrs::FieldElement> out;
    for (uint64_t c : codes) out.push_back(F.element(c));
    return out;
}

}  // namespace testutil
