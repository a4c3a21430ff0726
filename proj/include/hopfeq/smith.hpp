#ifndef HOPFEQ_SMITH_HPP
#define HOPFEQ_SMITH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "hopfeq/field.hpp"

namespace hopfeq {

struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, mpz_class(0)) {}

    mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool operator==(const IntMatrix&) const = default;
};

inline IntMatrix int_mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw PreconditionError("int_mat_mul: shape mismatch");
    IntMatrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return z;
}

struct SmithForm {
    std::vector<mpz_class> diagonal;  // d1 | d2 | ..., nonnegative
    IntMatrix U, V;                   // unimodular, U*A*V = diag
};

// Smith normal form by alternating row/column gcd elimination.
inline SmithForm smith_normal_form(const IntMatrix& input) {
    IntMatrix A = input;
    const std::size_t n = A.rows, m = A.cols;
    IntMatrix U = IntMatrix::identity(n), V = IntMatrix::identity(m);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < m; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (std::size_t c = 0; c < n; ++c) std::swap(U.at(i, c), U.at(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (std::size_t r = 0; r < m; ++r) std::swap(V.at(r, i), V.at(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t c = 0; c < m; ++c) A.at(dst, c) += f * A.at(src, c);
        for (std::size_t c = 0; c < n; ++c) U.at(dst, c) += f * U.at(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
        for (std::size_t r = 0; r < n; ++r) A.at(r, dst) += f * A.at(r, src);
        for (std::size_t r = 0; r < m; ++r) V.at(r, dst) += f * V.at(r, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < m; ++c) A.at(i, c) = -A.at(i, c);
        for (std::size_t c = 0; c < n; ++c) U.at(i, c) = -U.at(i, c);
    };

    // Clears row t and column t beyond the pivot; |A(t,t)| strictly shrinks
    // at every swap, so this terminates with gcd of the block at (t,t).
    auto eliminate_at = [&](std::size_t t) {
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (A.at(i, t) == 0) continue;
                mpz_class q = A.at(i, t) / A.at(t, t);
                add_row(i, t, -q);
                if (A.at(i, t) != 0) {
                    swap_rows(i, t);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (A.at(t, j) == 0) continue;
                mpz_class q = A.at(t, j) / A.at(t, t);
                add_col(j, t, -q);
                if (A.at(t, j) != 0) {
                    swap_cols(j, t);
                    dirty = true;
                }
            }
        }
        if (A.at(t, t) < 0) negate_row(t);
    };

    std::size_t t = 0;
    while (t < n && t < m) {
        std::size_t pi = n, pj = m;
        for (std::size_t i = t; i < n && pi == n; ++i)
            for (std::size_t j = t; j < m; ++j)
                if (A.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) break;  // remaining block is zero
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);
        eliminate_at(t);
        ++t;
    }

    // Divisibility chain: fold offending d_{i+1} into column i and
    // re-eliminate; each fix replaces d_i by a proper divisor, so the sweep
    // stabilizes.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            if (A.at(i + 1, i + 1) % A.at(i, i) == 0) continue;
            changed = true;
            add_col(i, i + 1, 1);
            eliminate_at(i);
            if (A.at(i + 1, i + 1) < 0) negate_row(i + 1);
        }
    }

    SmithForm out;
    out.diagonal.resize(std::min(n, m), mpz_class(0));
    for (std::size_t i = 0; i < out.diagonal.size(); ++i) out.diagonal[i] = A.at(i, i);
    out.U = U;
    out.V = V;
    return out;
}

// Invariant factors of Z^generators modulo the row lattice of `relations`:
// SNF diagonal padded with zeros, one entry per generator.
inline std::vector<mpz_class> abelian_invariants(const IntMatrix& relations,
                                                 std::size_t generators) {
    std::vector<mpz_class> inv(generators, mpz_class(0));
    if (relations.rows == 0) return inv;
    SmithForm s = smith_normal_form(relations);
    for (std::size_t i = 0; i < s.diagonal.size() && i < generators; ++i)
        inv[i] = s.diagonal[i];
    return inv;
}

}  // namespace hopfeq

#endif
