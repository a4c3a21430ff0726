#ifndef HOPFEQ_LINALG_HPP
#define HOPFEQ_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>

#include "hopfeq/field.hpp"

namespace hopfeq {

struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Scalar(0)) {}

    Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Vec row(std::size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
    Vec col(std::size_t j) const {
        Vec v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    bool operator==(const Matrix&) const = default;
};

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline Matrix mat_mul(const Field& F, const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw PreconditionError("mat_mul: shape mismatch");
    Matrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Scalar& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) = F.add(z.at(i, j), F.mul(xik, y.at(k, j)));
        }
    return z;
}

inline Matrix mat_add(const Field& F, const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw PreconditionError("mat_add: shape mismatch");
    Matrix z(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = F.add(x.a[i], y.a[i]);
    return z;
}

inline Matrix mat_sub(const Field& F, const Matrix& x, const Matrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw PreconditionError("mat_sub: shape mismatch");
    Matrix z(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = F.sub(x.a[i], y.a[i]);
    return z;
}

inline Matrix mat_scale(const Field& F, const Scalar& c, const Matrix& x) {
    Matrix z(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = F.mul(c, x.a[i]);
    return z;
}

inline bool mat_is_zero(const Field& F, const Matrix& x) {
    return std::all_of(x.a.begin(), x.a.end(), [&](const Scalar& s) { return F.is_zero(s); });
}

inline Vec mat_vec(const Field& F, const Matrix& m, const Vec& v) {
    if (m.cols != v.size()) throw PreconditionError("mat_vec: shape mismatch");
    Vec out(m.rows, Scalar(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (v[j] != 0) out[i] = F.add(out[i], F.mul(m.at(i, j), v[j]));
    return out;
}

inline Vec vec_add(const Field& F, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw PreconditionError("vec_add: shape mismatch");
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = F.add(x[i], y[i]);
    return z;
}

inline Vec vec_sub(const Field& F, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw PreconditionError("vec_sub: shape mismatch");
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = F.sub(x[i], y[i]);
    return z;
}

inline Vec vec_scale(const Field& F, const Scalar& c, const Vec& x) {
    Vec z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = F.mul(c, x[i]);
    return z;
}

inline bool vec_is_zero(const Field& F, const Vec& x) {
    return std::all_of(x.begin(), x.end(), [&](const Scalar& s) { return F.is_zero(s); });
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v[i] = 1;
    return v;
}

// Row-major flattening of an operator; standard coordinates for spans in End(A).
inline Vec vectorize(const Matrix& m) { return m.a; }

inline Matrix unvectorize(const Vec& v, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    m.a = v;
    return m;
}

inline Matrix kron(const Field& F, const Matrix& x, const Matrix& y) {
    Matrix z(x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            if (x.at(i, j) == 0) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    z.at(i * y.rows + k, j * y.cols + l) = F.mul(x.at(i, j), y.at(k, l));
        }
    return z;
}

struct RrefResult {
    Matrix m;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form with leftmost-pivot, first-nonzero-row selection.
// Deterministic for fixed input; the canonical form behind subspace equality.
inline RrefResult rref(const Field& F, Matrix m) {
    for (auto& s : m.a) s = F.reduce(s);
    RrefResult res;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = m.rows;
        for (std::size_t i = r; i < m.rows; ++i)
            if (!F.is_zero(m.at(i, c))) {
                sel = i;
                break;
            }
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar piv_inv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(piv_inv, m.at(r, j));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || F.is_zero(m.at(i, c))) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    res.m = std::move(m);
    res.rank = r;
    res.pivots = std::move(pivots);
    return res;
}

inline std::size_t rank(const Field& F, const Matrix& m) { return rref(F, m).rank; }

// Some solution of m x = rhs, if consistent.
inline std::optional<Vec> solve(const Field& F, const Matrix& m, const Vec& rhs) {
    if (m.rows != rhs.size()) throw PreconditionError("solve: shape mismatch");
    Matrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = rhs[i];
    }
    RrefResult r = rref(F, aug);
    Vec x(m.cols, Scalar(0));
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == m.cols) return std::nullopt;  // 0 = 1 row
        x[r.pivots[i]] = r.m.at(i, m.cols);
    }
    return x;
}

class Subspace;
inline Subspace kernel(const Field& F, const Matrix& m);

// Canonical subspace of F^ambient: basis rows in RREF, pivots strictly
// increasing. Two subspaces over the same field are equal as sets iff their
// bases compare equal.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    static Subspace full(std::size_t ambient) {
        Subspace s(ambient);
        s.basis_ = Matrix::identity(ambient);
        return s;
    }

    static Subspace span(const Field& F, const std::vector<Vec>& vectors, std::size_t ambient) {
        for (const auto& v : vectors)
            if (v.size() != ambient) throw PreconditionError("span: dimension mismatch");
        Matrix m(vectors.size(), ambient);
        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
        return from_rows(F, m);
    }

    static Subspace from_rows(const Field& F, const Matrix& m) {
        RrefResult r = rref(F, m);
        Subspace s(m.cols);
        s.basis_ = Matrix(r.rank, m.cols);
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) s.basis_.at(i, j) = r.m.at(i, j);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows; }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains_vector(const Field& F, const Vec& v) const {
        auto res = reduce_vector(F, v);
        return res.has_value() && vec_is_zero(F, *res);
    }

    // Residue of v after elimination against the basis; zero iff v lies in
    // the subspace.
    std::optional<Vec> reduce_vector(const Field& F, Vec v) const {
        if (v.size() != ambient_) return std::nullopt;
        for (std::size_t r = 0; r < basis_.rows; ++r) {
            std::size_t p = pivot_col(r);
            if (p == ambient_ || F.is_zero(v[p])) continue;
            Scalar f = v[p];
            for (std::size_t j = p; j < ambient_; ++j)
                v[j] = F.sub(v[j], F.mul(f, basis_.at(r, j)));
        }
        return v;
    }

    bool is_contained_in(const Field& F, const Subspace& other) const {
        if (ambient_ != other.ambient_) throw PreconditionError("subspace: ambient mismatch");
        for (std::size_t i = 0; i < basis_.rows; ++i) {
            auto res = other.reduce_vector(F, basis_.row(i));
            if (!res || !vec_is_zero(F, *res)) return false;
        }
        return true;
    }

    bool equals(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

    static Subspace sum(const Field& F, const Subspace& x, const Subspace& y) {
        if (x.ambient_ != y.ambient_) throw PreconditionError("subspace sum: ambient mismatch");
        Matrix m(x.dim() + y.dim(), x.ambient_);
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t j = 0; j < x.ambient_; ++j) m.at(i, j) = x.basis_.at(i, j);
        for (std::size_t i = 0; i < y.dim(); ++i)
            for (std::size_t j = 0; j < x.ambient_; ++j) m.at(x.dim() + i, j) = y.basis_.at(i, j);
        return from_rows(F, m);
    }

    // Zassenhaus: RREF of [X X; Y 0]; rows with zero left half carry the
    // intersection in their right half.
    static Subspace intersect(const Field& F, const Subspace& x, const Subspace& y) {
        if (x.ambient_ != y.ambient_)
            throw PreconditionError("subspace intersect: ambient mismatch");
        std::size_t n = x.ambient_;
        Matrix m(x.dim() + y.dim(), 2 * n);
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = x.basis_.at(i, j);
                m.at(i, n + j) = x.basis_.at(i, j);
            }
        for (std::size_t i = 0; i < y.dim(); ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(x.dim() + i, j) = y.basis_.at(i, j);
        RrefResult r = rref(F, m);
        std::vector<Vec> inter;
        for (std::size_t i = 0; i < r.rank; ++i)
            if (r.pivots[i] >= n) inter.push_back(Vec(r.m.a.begin() + i * 2 * n + n,
                                                      r.m.a.begin() + (i + 1) * 2 * n));
        return span(F, inter, n);
    }

    bool operator==(const Subspace&) const = default;

  private:
    std::size_t pivot_col(std::size_t row) const {
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!(basis_.at(row, c) == 0)) return c;
        return ambient_;
    }

    std::size_t ambient_ = 0;
    Matrix basis_;
};

inline bool subspace_contains(const Field& F, const Subspace& a, const Subspace& b) {
    return a.is_contained_in(F, b);  // a ⊆ b
}

inline bool subspace_equal(const Field& F, const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw PreconditionError("subspace_equal: ambient mismatch");
    (void)F;
    return a.equals(b);
}

// Null space of m, as a subspace of F^cols.
inline Subspace kernel(const Field& F, const Matrix& m) {
    RrefResult r = rref(F, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols, Scalar(0));
        v[c] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = F.neg(r.m.at(i, c));
        basis.push_back(std::move(v));
    }
    return Subspace::span(F, basis, m.cols);
}

inline std::optional<Matrix> mat_inverse(const Field& F, const Matrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    std::size_t n = m.rows;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(F, aug);
    // Pivots are strictly increasing, so pivots[n-1] == n-1 forces the left
    // block to have full rank.
    if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

// Incremental row-rank accumulator: keeps at most `width` pivot rows, reduces
// each incoming row in place. Used wherever rows are streamed.
class RankAccumulator {
  public:
    RankAccumulator(const Field& F, std::size_t width) : F_(&F), width_(width) {}

    // Returns true if the row was independent (rank grew).
    bool add_row(Vec row) {
        if (row.size() != width_) throw PreconditionError("RankAccumulator: bad row width");
        for (const auto& [c, prow] : pivots_) {
            if (F_->is_zero(row[c])) continue;
            Scalar f = row[c];
            for (std::size_t j = c; j < width_; ++j) row[j] = F_->sub(row[j], F_->mul(f, prow[j]));
        }
        std::size_t lead = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (!F_->is_zero(row[j])) {
                lead = j;
                break;
            }
        if (lead == width_) return false;
        Scalar inv = F_->inv(row[lead]);
        for (std::size_t j = lead; j < width_; ++j) row[j] = F_->mul(inv, row[j]);
        pivots_.emplace_back(lead, std::move(row));
        std::sort(pivots_.begin(), pivots_.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }

  private:
    const Field* F_;
    std::size_t width_;
    std::vector<std::pair<std::size_t, Vec>> pivots_;
};

}  // namespace hopfeq

#endif
