#ifndef HOPFEQ_STRUCTCONST_HPP
#define HOPFEQ_STRUCTCONST_HPP

#include <algorithm>
#include <utility>

#include "hopfeq/core_types.hpp"

namespace hopfeq {

struct AlgebraReport {
    CheckReport base;
    bool associative = false;
    bool associativity_checked = false;
    bool unital = false;
    std::optional<Vec> unit;
    bool ok() const { return base.ok; }
};

// Verifies shape, optionally associativity (exhaustive over basis triples),
// and locates a two-sided unit by solving the linear system u*b_j = b_j,
// b_j*u = b_j, or certifies none exists.
inline AlgebraReport check_algebra(const Field& F, const FinAlgebra& A,
                                   bool require_associative) {
    AlgebraReport rep;
    if (!A.shapes_ok()) {
        rep.base.fail("shape", {}, "malformed structure tensor");
        return rep;
    }
    const std::size_t n = A.dim;

    if (require_associative) {
        rep.associativity_checked = true;
        rep.associative = true;
        for (std::size_t i = 0; i < n && rep.associative; ++i)
            for (std::size_t j = 0; j < n && rep.associative; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vec lhs = A.product(F, A.mult[i][j], unit_vec(n, k));
                    Vec rhs = A.product(F, unit_vec(n, i), A.mult[j][k]);
                    if (!vec_is_zero(F, vec_sub(F, lhs, rhs))) {
                        rep.associative = false;
                        rep.base.fail("associativity", {i, j, k});
                        break;
                    }
                }
    }

    // unit: 2n^2 linear conditions on the n coordinates of u
    Matrix sys(2 * n * n, n);
    Vec rhs(2 * n * n, Scalar(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                sys.at(j * n + k, i) = A.mult[i][j][k];
                sys.at(n * n + j * n + k, i) = A.mult[j][i][k];
            }
            rhs[j * n + k] = (j == k) ? F.one() : F.zero();
            rhs[n * n + j * n + k] = (j == k) ? F.one() : F.zero();
        }
    auto u = solve(F, sys, rhs);
    rep.unital = u.has_value();
    if (u) rep.unit = *u;

    if (A.unit) {
        if (!u || !vec_is_zero(F, vec_sub(F, *A.unit, *u)))
            rep.base.fail("unit", {}, "declared unit is not a two-sided unit");
    }
    return rep;
}

inline CheckReport check_coalgebra(const Field& F, const FinCoalgebra& C) {
    CheckReport rep;
    if (!C.shapes_ok()) {
        rep.fail("shape", {}, "malformed coalgebra data");
        return rep;
    }
    const std::size_t n = C.dim;
    for (std::size_t k = 0; k < n; ++k) {
        // coassociativity at basis vector k, coordinates (i,j,l)
        bool bad = false;
        for (std::size_t i = 0; i < n && !bad; ++i)
            for (std::size_t j = 0; j < n && !bad; ++j)
                for (std::size_t l = 0; l < n; ++l) {
                    Scalar lhs = F.zero(), rhs = F.zero();
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs = F.add(lhs, F.mul(C.delta[k].at(m, l), C.delta[m].at(i, j)));
                        rhs = F.add(rhs, F.mul(C.delta[k].at(i, m), C.delta[m].at(j, l)));
                    }
                    if (!F.eq(lhs, rhs)) {
                        rep.fail("coassociativity", {k, i, j, l});
                        bad = true;
                        break;
                    }
                }
        // counit laws (eps (x) id) Delta = id = (id (x) eps) Delta
        for (std::size_t j = 0; j < n; ++j) {
            Scalar left = F.zero(), right = F.zero();
            for (std::size_t i = 0; i < n; ++i) {
                left = F.add(left, F.mul(C.counit[i], C.delta[k].at(i, j)));
                right = F.add(right, F.mul(C.counit[i], C.delta[k].at(j, i)));
            }
            Scalar expect = (j == k) ? F.one() : F.zero();
            if (!F.eq(left, expect)) rep.fail("counit-left", {k, j});
            if (!F.eq(right, expect)) rep.fail("counit-right", {k, j});
        }
    }
    return rep;
}

struct HopfReport {
    CheckReport base;
    AlgebraReport algebra;
    CheckReport coalgebra;
    bool ok() const { return base.ok && algebra.ok() && coalgebra.ok; }
};

inline HopfReport check_hopf(const Field& F, const FinHopf& H) {
    HopfReport rep;
    rep.algebra = check_algebra(F, H.algebra, true);
    rep.coalgebra = check_coalgebra(F, H.coalgebra);
    const std::size_t n = H.dim();
    if (H.coalgebra.dim != n || H.antipode.rows != n || H.antipode.cols != n) {
        rep.base.fail("shape", {}, "algebra/coalgebra/antipode dimension mismatch");
        return rep;
    }
    if (!H.algebra.unit) {
        rep.base.fail("unit", {}, "Hopf algebra must be unital");
        return rep;
    }
    if (!rep.algebra.ok() || !rep.coalgebra.ok) return rep;
    const Vec& one = *H.algebra.unit;
    const FinAlgebra& A = H.algebra;
    const FinCoalgebra& C = H.coalgebra;

    // Delta and eps are algebra maps
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = C.delta_of(F, A.mult[i][j]);
            Matrix rhs(n, n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    if (F.is_zero(C.delta[i].at(p, q))) continue;
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t s = 0; s < n; ++s) {
                            if (F.is_zero(C.delta[j].at(r, s))) continue;
                            Scalar c = F.mul(C.delta[i].at(p, q), C.delta[j].at(r, s));
                            for (std::size_t x = 0; x < n; ++x) {
                                if (F.is_zero(A.mult[p][r][x])) continue;
                                for (std::size_t y = 0; y < n; ++y)
                                    rhs.at(x, y) =
                                        F.add(rhs.at(x, y),
                                              F.mul(c, F.mul(A.mult[p][r][x], A.mult[q][s][y])));
                            }
                        }
                }
            if (!mat_is_zero(F, mat_sub(F, lhs, rhs))) rep.base.fail("bialgebra-delta", {i, j});
            Scalar el = C.counit_of(F, A.mult[i][j]);
            Scalar er = F.mul(C.counit[i], C.counit[j]);
            if (!F.eq(el, er)) rep.base.fail("bialgebra-counit", {i, j});
        }
    {
        Matrix d1 = C.delta_of(F, one);
        Matrix expect(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) expect.at(i, j) = F.mul(one[i], one[j]);
        if (!mat_is_zero(F, mat_sub(F, d1, expect))) rep.base.fail("bialgebra-delta-unit", {});
        if (!F.eq(C.counit_of(F, one), F.one())) rep.base.fail("bialgebra-counit-unit", {});
    }

    // antipode law m(S (x) id)Delta = unit*eps = m(id (x) S)Delta
    for (std::size_t k = 0; k < n; ++k) {
        Vec left(n, Scalar(0)), right(n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (F.is_zero(C.delta[k].at(i, j))) continue;
                Vec si = H.antipode.col(i), sj = H.antipode.col(j);
                Vec l = A.product(F, si, unit_vec(n, j));
                Vec r = A.product(F, unit_vec(n, i), sj);
                for (std::size_t t = 0; t < n; ++t) {
                    left[t] = F.add(left[t], F.mul(C.delta[k].at(i, j), l[t]));
                    right[t] = F.add(right[t], F.mul(C.delta[k].at(i, j), r[t]));
                }
            }
        Vec expect = vec_scale(F, C.counit[k], one);
        if (!vec_is_zero(F, vec_sub(F, left, expect))) rep.base.fail("antipode-left", {k});
        if (!vec_is_zero(F, vec_sub(F, right, expect))) rep.base.fail("antipode-right", {k});
    }
    return rep;
}

inline CheckReport check_group(const FiniteGroup& G) {
    CheckReport rep;
    const std::size_t n = G.order;
    if (G.names.size() != n || G.table.size() != n) {
        rep.fail("shape", {});
        return rep;
    }
    for (const auto& row : G.table)
        if (row.size() != n) {
            rep.fail("shape", {});
            return rep;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (G.table[i][j] >= n) {
                rep.fail("table-range", {i, j});
                return rep;
            }
    for (std::size_t i = 0; i < n; ++i) {
        if (G.table[G.identity][i] != i) rep.fail("identity-left", {i});
        if (G.table[i][G.identity] != i) rep.fail("identity-right", {i});
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inv = false;
        for (std::size_t j = 0; j < n; ++j)
            if (G.table[i][j] == G.identity && G.table[j][i] == G.identity) has_inv = true;
        if (!has_inv) rep.fail("inverse", {i});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (G.table[G.table[i][j]][k] != G.table[i][G.table[j][k]]) {
                    rep.fail("associativity", {i, j, k});
                    return rep;
                }
    return rep;
}

// H* on the dual basis: multiplication is the transpose of Delta,
// comultiplication the transpose of multiplication, antipode the transpose
// of S.
inline FinHopf dual_hopf(const Field& F, const FinHopf& H) {
    const std::size_t n = H.dim();
    FinHopf D;
    D.algebra.field = H.field();
    D.algebra.dim = n;
    D.coalgebra.field = H.field();
    D.coalgebra.dim = n;
    for (const auto& name : H.algebra.basis_names) {
        D.algebra.basis_names.push_back(name + "*");
        D.coalgebra.basis_names.push_back(name + "*");
    }
    D.algebra.mult.assign(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                D.algebra.mult[i][j][k] = H.coalgebra.delta[k].at(i, j);
    D.algebra.unit = H.coalgebra.counit;
    D.coalgebra.delta.assign(n, Matrix(n, n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                D.coalgebra.delta[k].at(i, j) = H.algebra.mult[i][j][k];
    D.coalgebra.counit = H.unit();
    D.antipode = transpose(H.antipode);
    for (auto& s : D.antipode.a) s = F.reduce(s);
    return D;
}

struct GrouplikeResult {
    std::vector<Vec> elements;
    bool complete = true;
    std::string method;
};

namespace detail {

// Plain associative algebra used by the group-like solver: structure
// constants plus unit, with a projection matrix back to the original dual
// basis coordinates.
struct PlainAlgebra {
    std::size_t dim = 0;
    std::vector<std::vector<Vec>> mult;
    Vec unit;
    Matrix proj;  // dim x n_original

    Vec product(const Field& F, const Vec& x, const Vec& y) const {
        Vec out(dim, Scalar(0));
        for (std::size_t i = 0; i < dim; ++i) {
            if (F.is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (F.is_zero(y[j])) continue;
                Scalar c = F.mul(x[i], y[j]);
                for (std::size_t k = 0; k < dim; ++k)
                    out[k] = F.add(out[k], F.mul(c, mult[i][j][k]));
            }
        }
        return out;
    }
};

// Two-sided ideal closure of the span of `gens` inside B.
inline Subspace ideal_closure(const Field& F, const PlainAlgebra& B,
                              const std::vector<Vec>& gens) {
    Subspace W = Subspace::span(F, gens, B.dim);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> next;
        for (std::size_t r = 0; r < W.dim(); ++r) {
            Vec w = W.basis_vector(r);
            for (std::size_t i = 0; i < B.dim; ++i) {
                next.push_back(B.product(F, unit_vec(B.dim, i), w));
                next.push_back(B.product(F, w, unit_vec(B.dim, i)));
            }
        }
        Subspace W2 = W;
        for (auto& v : next) W2 = Subspace::sum(F, W2, Subspace::span(F, {v}, B.dim));
        if (W2.dim() > W.dim()) {
            W = W2;
            grew = true;
        }
    }
    return W;
}

// Quotient B/I on the complement of the pivot coordinates of I.
inline PlainAlgebra quotient(const Field& F, const PlainAlgebra& B, const Subspace& I) {
    // complement coordinates: non-pivot columns of the RREF basis of I
    std::vector<bool> is_pivot(B.dim, false);
    for (std::size_t r = 0; r < I.dim(); ++r)
        for (std::size_t c = 0; c < B.dim; ++c)
            if (!F.is_zero(I.basis().at(r, c))) {
                is_pivot[c] = true;
                break;
            }
    std::vector<std::size_t> comp;
    for (std::size_t c = 0; c < B.dim; ++c)
        if (!is_pivot[c]) comp.push_back(c);

    auto project = [&](const Vec& v) {
        Vec red = *I.reduce_vector(F, v);
        Vec out(comp.size());
        for (std::size_t t = 0; t < comp.size(); ++t) out[t] = red[comp[t]];
        return out;
    };

    PlainAlgebra Q;
    Q.dim = comp.size();
    Q.mult.assign(Q.dim, std::vector<Vec>(Q.dim));
    for (std::size_t i = 0; i < Q.dim; ++i)
        for (std::size_t j = 0; j < Q.dim; ++j)
            Q.mult[i][j] =
                project(B.product(F, unit_vec(B.dim, comp[i]), unit_vec(B.dim, comp[j])));
    Q.unit = project(B.unit);
    Q.proj = Matrix(Q.dim, B.proj.cols);
    for (std::size_t k = 0; k < B.proj.cols; ++k) {
        Vec pk = project(B.proj.col(k));
        for (std::size_t t = 0; t < Q.dim; ++t) Q.proj.at(t, k) = pk[t];
    }
    return Q;
}

// Monic minimal polynomial of g inside the unital subalgebra it generates.
inline std::vector<Scalar> minimal_polynomial(const Field& F, const PlainAlgebra& B,
                                              const Vec& g) {
    std::vector<Vec> krylov{B.unit};
    Vec cur = B.unit;
    for (;;) {
        cur = B.product(F, cur, g);
        // test dependence of cur on krylov
        Matrix m(krylov.size(), B.dim);
        for (std::size_t i = 0; i < krylov.size(); ++i)
            for (std::size_t j = 0; j < B.dim; ++j) m.at(i, j) = krylov[i][j];
        auto sol = solve(F, transpose(m), cur);
        if (sol) {
            std::vector<Scalar> poly(krylov.size() + 1);
            for (std::size_t i = 0; i < krylov.size(); ++i) poly[i] = F.neg((*sol)[i]);
            poly[krylov.size()] = F.one();
            return poly;  // g^k - sum sol_i g^i = 0
        }
        krylov.push_back(cur);
        if (krylov.size() > B.dim + 1)
            throw std::logic_error("minimal_polynomial: no dependence found");
    }
}

inline std::vector<mpz_class> divisors(const mpz_class& n0) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// All roots of poly in the base field; complete over Q (rational root
// theorem) and over F_p for p within the trial budget.
inline std::pair<std::vector<Scalar>, bool> field_roots(const Field& F,
                                                        std::vector<Scalar> poly) {
    auto eval = [&](const Scalar& t) {
        Scalar acc = F.zero();
        for (std::size_t i = poly.size(); i-- > 0;) acc = F.add(F.mul(acc, t), poly[i]);
        return acc;
    };
    std::vector<Scalar> roots;
    if (!F.is_rationals()) {
        long p = F.characteristic();
        if (p > 1000000) return {roots, false};
        for (long v = 0; v < p; ++v) {
            Scalar t(v);
            if (F.is_zero(eval(t))) roots.push_back(t);
        }
        return {roots, true};
    }
    // strip roots at zero
    std::size_t low = 0;
    while (low < poly.size() - 1 && poly[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<Scalar> p(poly.begin() + low, poly.end());
    // clear denominators
    mpz_class den_lcm = 1;
    for (const auto& c : p) den_lcm = den_lcm / gcd(den_lcm, c.get_den()) * c.get_den();
    std::vector<mpz_class> ip;
    for (const auto& c : p) ip.push_back(mpz_class(c * den_lcm));
    if (ip.front() == 0 || ip.back() == 0) return {roots, true};  // constant handled above
    for (const auto& num : divisors(ip.front()))
        for (const auto& den : divisors(ip.back())) {
            if (gcd(num, den) != 1) continue;
            for (int sign : {1, -1}) {
                Scalar cand(sign * num, den);
                cand.canonicalize();
                if (F.is_zero(eval(cand))) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end(), [](const Scalar& x, const Scalar& y) { return x < y; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return {roots, true};
}

// All unital algebra homomorphisms B -> F, as functionals on the original
// dual basis (rows of length proj.cols). Branches on field roots of minimal
// polynomials after factoring out the commutator ideal.
inline void algebra_homs(const Field& F, const PlainAlgebra& B, std::vector<Vec>& out,
                         bool& complete) {
    if (B.dim == 0) return;

    // factor out commutators so the quotient is commutative
    std::vector<Vec> comms;
    for (std::size_t i = 0; i < B.dim; ++i)
        for (std::size_t j = i + 1; j < B.dim; ++j)
            comms.push_back(vec_sub(F, B.mult[i][j], B.mult[j][i]));
    Subspace K = ideal_closure(F, B, comms);
    if (K.dim() > 0) {
        if (K.contains_vector(F, B.unit)) return;  // quotient collapses, no homs
        algebra_homs(F, quotient(F, B, K), out, complete);
        return;
    }

    // find a basis vector independent from the unit
    Subspace unit_line = Subspace::span(F, {B.unit}, B.dim);
    std::size_t gen = B.dim;
    for (std::size_t i = 0; i < B.dim; ++i)
        if (!unit_line.contains_vector(F, unit_vec(B.dim, i))) {
            gen = i;
            break;
        }
    if (gen == B.dim) {
        // B = F * unit: the unique hom sends unit to 1
        Scalar lead;
        std::size_t idx = 0;
        for (std::size_t i = 0; i < B.dim; ++i)
            if (!F.is_zero(B.unit[i])) {
                lead = B.unit[i];
                idx = i;
                break;
            }
        // lambda(v) = v_idx / unit_idx on the span of unit
        Vec lambda(B.proj.cols);
        for (std::size_t k = 0; k < B.proj.cols; ++k)
            lambda[k] = F.div(B.proj.at(idx, k), lead);
        out.push_back(std::move(lambda));
        return;
    }

    Vec g = unit_vec(B.dim, gen);
    auto [roots, roots_complete] = field_roots(F, minimal_polynomial(F, B, g));
    if (!roots_complete) complete = false;
    for (const Scalar& theta : roots) {
        Vec shifted = vec_sub(F, g, vec_scale(F, theta, B.unit));
        Subspace I = ideal_closure(F, B, {shifted});
        if (I.contains_vector(F, B.unit)) continue;
        algebra_homs(F, quotient(F, B, I), out, complete);
    }
}

}  // namespace detail

// Group-like elements of the coalgebra underlying H: all x with
// Delta x = x (x) x and eps(x) = 1. Over F_p with p^n small the search is
// exhaustive; otherwise solutions are the unital algebra homomorphisms
// C* -> F, found exactly by eigenvalue branching (complete over Q).
inline GrouplikeResult grouplikes(const Field& F, const FinCoalgebra& C,
                                  long enumeration_budget = 1000000) {
    const std::size_t n = C.dim;
    GrouplikeResult res;

    auto is_grouplike = [&](const Vec& x) {
        if (!F.eq(C.counit_of(F, x), F.one())) return false;
        Matrix d = C.delta_of(F, x);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!F.eq(d.at(i, j), F.mul(x[i], x[j]))) return false;
        return true;
    };

    if (!F.is_rationals()) {
        long p = F.characteristic();
        double total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(p);
        if (total <= static_cast<double>(enumeration_budget)) {
            res.method = "enumeration";
            std::vector<long> digits(n, 0);
            bool done = false;
            while (!done) {
                Vec x(n);
                for (std::size_t i = 0; i < n; ++i) x[i] = Scalar(digits[i]);
                if (!vec_is_zero(F, x) && is_grouplike(x)) res.elements.push_back(x);
                // lexicographic odometer, last coordinate fastest
                std::size_t pos = n;
                while (pos > 0) {
                    if (++digits[pos - 1] < p) break;
                    digits[pos - 1] = 0;
                    --pos;
                }
                done = (pos == 0);
            }
            return res;
        }
    }

    res.method = "structured";
    detail::PlainAlgebra B;  // dual algebra C*
    B.dim = n;
    B.mult.assign(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) B.mult[i][j][k] = C.delta[k].at(i, j);
    B.unit = C.counit;
    B.proj = Matrix::identity(n);
    for (auto& s : B.proj.a) s = F.reduce(s);

    detail::algebra_homs(F, B, res.elements, res.complete);
    for (const auto& x : res.elements)
        if (!is_grouplike(x)) throw std::logic_error("grouplikes: solver returned a non-solution");
    std::sort(res.elements.begin(), res.elements.end());
    res.elements.erase(std::unique(res.elements.begin(), res.elements.end()),
                       res.elements.end());
    return res;
}

inline GrouplikeResult grouplikes(const Field& F, const FinHopf& H,
                                  long enumeration_budget = 1000000) {
    return grouplikes(F, H.coalgebra, enumeration_budget);
}

// Solution space of Delta x = x (x) 1 + 1 (x) x.
inline Subspace primitives(const Field& F, const FinHopf& H) {
    const std::size_t n = H.dim();
    const Vec& one = H.unit();
    Matrix sys(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar c = H.coalgebra.delta[k].at(i, j);
                if (i == k) c = F.sub(c, one[j]);
                if (j == k) c = F.sub(c, one[i]);
                sys.at(i * n + j, k) = c;
            }
    return kernel(F, sys);
}

// Group algebra FG with its standard Hopf structure: group-like basis,
// antipode from inversion.
inline FinHopf group_hopf(const Field& F, const FiniteGroup& G) {
    const std::size_t n = G.order;
    FinHopf H;
    H.algebra.field = F.spec();
    H.algebra.dim = n;
    H.algebra.basis_names = G.names;
    H.algebra.mult.assign(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) H.algebra.mult[i][j][G.mul(i, j)] = 1;
    H.algebra.unit = unit_vec(n, G.identity);
    H.coalgebra.field = F.spec();
    H.coalgebra.dim = n;
    H.coalgebra.basis_names = G.names;
    H.coalgebra.delta.assign(n, Matrix(n, n));
    for (std::size_t k = 0; k < n; ++k) H.coalgebra.delta[k].at(k, k) = 1;
    H.coalgebra.counit.assign(n, Scalar(1));
    H.antipode = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) H.antipode.at(G.inverse(k), k) = 1;
    return H;
}

inline FiniteGroup cyclic_group(std::size_t n) {
    FiniteGroup G;
    G.order = n;
    G.identity = 0;
    for (std::size_t i = 0; i < n; ++i) G.names.push_back(std::to_string(i));
    G.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) G.table[i][j] = (i + j) % n;
    return G;
}

// The one-dimensional Hopf algebra F itself.
inline FinHopf trivial_hopf(const Field& F) { return group_hopf(F, cyclic_group(1)); }

// Smash product A # H of a unital H-module algebra, together with the right
// H-coaction a # h |-> a # h_(1) (x) h_(2). Basis order: (a_i, h_j) with the
// H index fastest.
inline std::pair<FinAlgebra, Coaction> smash_product(const Field& F,
                                                     const ModuleStructure& zeta) {
    const FinAlgebra& A = zeta.algebra;
    const FinHopf& H = zeta.hopf;
    if (!A.unit) throw PreconditionError("smash_product: A must be unital");
    const std::size_t nA = A.dim, nH = H.dim(), n = nA * nH;
    auto idx = [nH](std::size_t i, std::size_t j) { return i * nH + j; };

    FinAlgebra S;
    S.field = A.field;
    S.dim = n;
    for (std::size_t i = 0; i < nA; ++i)
        for (std::size_t j = 0; j < nH; ++j)
            S.basis_names.push_back(A.basis_names[i] + "#" + H.algebra.basis_names[j]);
    S.mult.assign(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    // (a # h)(b # g) = a (h_(1) b) # h_(2) g
    for (std::size_t i = 0; i < nA; ++i)
        for (std::size_t j = 0; j < nH; ++j)
            for (std::size_t k = 0; k < nA; ++k)
                for (std::size_t l = 0; l < nH; ++l) {
                    Vec& out = S.mult[idx(i, j)][idx(k, l)];
                    for (std::size_t p = 0; p < nH; ++p)
                        for (std::size_t q = 0; q < nH; ++q) {
                            const Scalar& dc = H.coalgebra.delta[j].at(p, q);
                            if (F.is_zero(dc)) continue;
                            Vec hb = zeta.action[p].col(k);         // h_p b_k
                            Vec left = A.product(F, unit_vec(nA, i), hb);
                            const Vec& right = H.algebra.mult[q][l];  // h_q h_l
                            for (std::size_t x = 0; x < nA; ++x) {
                                if (F.is_zero(left[x])) continue;
                                for (std::size_t y = 0; y < nH; ++y)
                                    out[idx(x, y)] =
                                        F.add(out[idx(x, y)],
                                              F.mul(dc, F.mul(left[x], right[y])));
                            }
                        }
                }
    Vec unit(n, Scalar(0));
    for (std::size_t i = 0; i < nA; ++i)
        for (std::size_t j = 0; j < nH; ++j)
            unit[idx(i, j)] = F.mul((*A.unit)[i], H.unit()[j]);
    S.unit = unit;

    Coaction rho;
    rho.algebra = S;
    rho.hopf = H;
    rho.coeff.assign(n, std::vector<Vec>(n, Vec(nH, Scalar(0))));
    // rho(a_k # h_l) = sum_{p,q} delta_l(p,q) (a_k # h_p) (x) h_q
    for (std::size_t k = 0; k < nA; ++k)
        for (std::size_t l = 0; l < nH; ++l)
            for (std::size_t p = 0; p < nH; ++p)
                for (std::size_t q = 0; q < nH; ++q)
                    rho.coeff[idx(k, p)][idx(k, l)][q] =
                        F.add(rho.coeff[idx(k, p)][idx(k, l)][q],
                              H.coalgebra.delta[l].at(p, q));
    return {std::move(S), std::move(rho)};
}

}  // namespace hopfeq

#endif
