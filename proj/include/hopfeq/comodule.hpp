#ifndef HOPFEQ_COMODULE_HPP
#define HOPFEQ_COMODULE_HPP

#include "hopfeq/grading.hpp"

namespace hopfeq {

// Verifies the comodule coefficient identities (Delta h_ab = sum_c h_ac (x)
// h_cb, eps(h_ab) = delta_ab), multiplicativity of rho on basis pairs, and
// unitality when A is unital.
struct ComoduleReport {
    CheckReport base;
    bool unital = false;
    bool unitality_checked = false;
    bool ok() const { return base.ok; }
};

inline ComoduleReport check_comodule_algebra(const Field& F, const Coaction& rho) {
    ComoduleReport rep;
    if (!rho.shapes_ok()) {
        rep.base.fail("shape", {}, "coefficient tensor has wrong shape");
        return rep;
    }
    const std::size_t n = rho.algebra.dim, m = rho.hopf.dim();
    const FinAlgebra& A = rho.algebra;
    const FinHopf& H = rho.hopf;

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix lhs = H.coalgebra.delta_of(F, rho.coeff[a][b]);
            Matrix rhs(m, m);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t i = 0; i < m; ++i) {
                    if (F.is_zero(rho.coeff[a][c][i])) continue;
                    for (std::size_t j = 0; j < m; ++j)
                        rhs.at(i, j) = F.add(rhs.at(i, j),
                                             F.mul(rho.coeff[a][c][i], rho.coeff[c][b][j]));
                }
            if (!mat_is_zero(F, mat_sub(F, lhs, rhs)))
                rep.base.fail("comodule-coassociativity", {a, b});
            Scalar eps = H.coalgebra.counit_of(F, rho.coeff[a][b]);
            Scalar expect = (a == b) ? F.one() : F.zero();
            if (!F.eq(eps, expect)) rep.base.fail("comodule-counit", {a, b});
        }

    // multiplicativity: sum_v k^v_ab h_cv = sum_{r,q} k^c_rq h_ra h_qb in H
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Vec lhs(m, Scalar(0));
                for (std::size_t v = 0; v < n; ++v) {
                    if (F.is_zero(A.mult[a][b][v])) continue;
                    for (std::size_t k = 0; k < m; ++k)
                        lhs[k] = F.add(lhs[k], F.mul(A.mult[a][b][v], rho.coeff[c][v][k]));
                }
                Vec rhs(m, Scalar(0));
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t q = 0; q < n; ++q) {
                        if (F.is_zero(A.mult[r][q][c])) continue;
                        Vec prod = H.algebra.product(F, rho.coeff[r][a], rho.coeff[q][b]);
                        for (std::size_t k = 0; k < m; ++k)
                            rhs[k] = F.add(rhs[k], F.mul(A.mult[r][q][c], prod[k]));
                    }
                if (!vec_is_zero(F, vec_sub(F, lhs, rhs)))
                    rep.base.fail("comodule-multiplicativity", {a, b, c});
            }

    if (A.unit) {
        rep.unitality_checked = true;
        rep.unital = true;
        for (std::size_t b = 0; b < n; ++b) {
            Vec got(m, Scalar(0));
            for (std::size_t a = 0; a < n; ++a) {
                if (F.is_zero((*A.unit)[a])) continue;
                for (std::size_t k = 0; k < m; ++k)
                    got[k] = F.add(got[k], F.mul((*A.unit)[a], rho.coeff[b][a][k]));
            }
            Vec expect = vec_scale(F, (*A.unit)[b], H.unit());
            if (!vec_is_zero(F, vec_sub(F, got, expect))) rep.unital = false;
        }
    }
    return rep;
}

struct GradingCoactionResult {
    Coaction coaction;
    Matrix basis_change;               // columns: homogeneous basis in original coordinates
    std::vector<std::size_t> degrees;  // group index of each new basis vector
};

// The FG-coaction of a grading, written in a homogeneous basis (the algebra
// is rebased accordingly): the coefficient tensor is diagonal with group
// elements on the diagonal.
inline GradingCoactionResult grading_to_coaction(const Field& F, const Grading& G) {
    auto rep = check_grading(F, G);
    if (!rep.ok) throw PreconditionError("grading_to_coaction: invalid grading");
    const std::size_t n = G.algebra.dim;

    std::vector<std::pair<std::size_t, Vec>> cols;
    for (const auto& [g, comp] : G.components)
        for (std::size_t i = 0; i < comp.dim(); ++i) cols.emplace_back(g, comp.basis_vector(i));
    Matrix T(n, n);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) T.at(r, c) = cols[c].second[r];
    Matrix Tinv = *mat_inverse(F, T);

    FinAlgebra A2;
    A2.field = G.algebra.field;
    A2.dim = n;
    A2.mult.assign(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i) {
        A2.basis_names.push_back(G.group.names[cols[i].first] + ":" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            A2.mult[i][j] = mat_vec(F, Tinv, G.algebra.product(F, T.col(i), T.col(j)));
    }
    if (G.algebra.unit) A2.unit = mat_vec(F, Tinv, *G.algebra.unit);

    GradingCoactionResult out;
    out.coaction.algebra = std::move(A2);
    out.coaction.hopf = group_hopf(F, G.group);
    out.coaction.coeff.assign(n, std::vector<Vec>(n, Vec(G.group.order, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i) out.coaction.coeff[i][i][cols[i].first] = 1;
    out.basis_change = std::move(T);
    for (const auto& [g, v] : cols) out.degrees.push_back(g);
    return out;
}

// C(rho): the span of all coefficient elements h_ab, with its restricted
// coalgebra structure, the embedding into H, and the tensor re-expressed in
// C-coordinates. Also verifies ker(zeta) = C(rho)-perp on the induced dual
// module.
inline SupportCoalgebra support_coalgebra(const Field& F, const Coaction& rho) {
    const std::size_t n = rho.algebra.dim, m = rho.hopf.dim();
    std::vector<Vec> fam;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) fam.push_back(rho.coeff[a][b]);
    Subspace C = Subspace::span(F, fam, m);
    const std::size_t d = C.dim();

    SupportCoalgebra sc;
    sc.inclusion = Matrix(m, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < m; ++i) sc.inclusion.at(i, k) = C.basis().at(k, i);

    // coordinates of an element of C in the chosen basis
    auto c_coords = [&](const Vec& v) -> Vec {
        auto sol = solve(F, sc.inclusion, v);
        if (!sol)
            throw PreconditionError("support_coalgebra: element outside C; invalid coaction");
        return *sol;
    };

    sc.coalgebra.field = rho.hopf.field();
    sc.coalgebra.dim = d;
    for (std::size_t k = 0; k < d; ++k) sc.coalgebra.basis_names.push_back("c" + std::to_string(k));
    sc.coalgebra.delta.assign(d, Matrix(d, d));
    sc.coalgebra.counit.assign(d, Scalar(0));

    // restrict Delta: solve Delta(c_k) = sum t_pq c_p (x) c_q
    Matrix kron_basis(m * m, d * d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    kron_basis.at(i * m + j, p * d + q) =
                        F.mul(sc.inclusion.at(i, p), sc.inclusion.at(j, q));
    for (std::size_t k = 0; k < d; ++k) {
        Matrix dk = rho.hopf.coalgebra.delta_of(F, sc.inclusion.col(k));
        auto sol = solve(F, kron_basis, vectorize(dk));
        if (!sol)
            throw PreconditionError(
                "support_coalgebra: Delta does not restrict to C; invalid coaction");
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) sc.coalgebra.delta[k].at(p, q) = (*sol)[p * d + q];
        sc.coalgebra.counit[k] = rho.hopf.coalgebra.counit_of(F, sc.inclusion.col(k));
    }

    sc.coeff_in_C.assign(n, std::vector<Vec>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) sc.coeff_in_C[a][b] = c_coords(rho.coeff[a][b]);

    // ker zeta = C-perp and dim zeta(H*) = dim C
    Matrix Z(n * n, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t a = 0; a < n; ++a) Z.at(b * n + a, k) = rho.coeff[b][a][k];
    Subspace ker_zeta = kernel(F, Z);
    Subspace c_perp = kernel(F, C.basis());
    if (!ker_zeta.equals(c_perp))
        throw std::logic_error("support_coalgebra: ker(zeta) != C-perp");
    if (rank(F, Z) != d) throw std::logic_error("support_coalgebra: dim zeta(H*) != dim C");
    return sc;
}

// The H*-module structure induced by a coaction: zeta(f_k) has matrix
// entries coeff[b][a][k].
inline ModuleStructure induced_dual_module(const Field& F, const Coaction& rho) {
    const std::size_t n = rho.algebra.dim, m = rho.hopf.dim();
    ModuleStructure zeta;
    zeta.algebra = rho.algebra;
    zeta.hopf = dual_hopf(F, rho.hopf);
    zeta.action.assign(m, Matrix(n, n));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t a = 0; a < n; ++a) zeta.action[k].at(b, a) = rho.coeff[b][a][k];
    return zeta;
}

namespace detail {

// Coefficient tensor of rho transported along an isomorphism phi:
// h'_{w,alpha} = sum_{u,v} phi[w][v] h_{v,u} phi^{-1}[u][alpha].
inline std::vector<std::vector<Vec>> transport_coeff(const Field& F,
                                                     const std::vector<std::vector<Vec>>& coeff,
                                                     const Matrix& phi, const Matrix& phi_inv) {
    const std::size_t n = phi.rows;
    const std::size_t m = coeff[0][0].size();
    std::vector<std::vector<Vec>> out(n, std::vector<Vec>(n, Vec(m, Scalar(0))));
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t al = 0; al < n; ++al)
            for (std::size_t v = 0; v < n; ++v) {
                if (F.is_zero(phi.at(w, v))) continue;
                for (std::size_t u = 0; u < n; ++u) {
                    Scalar c = F.mul(phi.at(w, v), phi_inv.at(u, al));
                    if (F.is_zero(c)) continue;
                    for (std::size_t k = 0; k < m; ++k)
                        out[w][al][k] = F.add(out[w][al][k], F.mul(c, coeff[v][u][k]));
                }
            }
    return out;
}

// Linear dependencies among the pair family {h_ab} in lexicographic (a,b)
// order: the kernel of the (pairs x dim H) matrix transposed.
inline Subspace pair_dependencies(const Field& F, const std::vector<std::vector<Vec>>& coeff,
                                  std::size_t n, std::size_t m) {
    Matrix V(n * n, m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < m; ++k) V.at(a * n + b, k) = coeff[a][b][k];
    return kernel(F, transpose(V));
}

}  // namespace detail

struct ComoduleEquivalence {
    bool equivalent = false;
    // tau on the support-coalgebra bases: dim C2 x dim C1 (when equivalent)
    std::optional<Matrix> tau;
    // a linear dependency vector (pair-indexed) holding in one family only
    std::optional<Vec> separating_dependency;
};

// Support equivalence of coactions through phi: after transporting rho1, the
// two coefficient families must satisfy identical linear dependencies. The
// certificate tau: C(rho1) -> C(rho2) maps h_ab to h'_ab and is verified to
// be a coalgebra isomorphism intertwining the coactions.
inline ComoduleEquivalence comodule_support_equiv(const Field& F, const Coaction& rho1,
                                                  const Coaction& rho2,
                                                  const std::optional<Matrix>& phi_opt = {}) {
    Matrix phi = require_isomorphism(F, rho1.algebra, rho2.algebra, phi_opt);
    Matrix phi_inv = *mat_inverse(F, phi);
    const std::size_t n = rho1.algebra.dim;
    const std::size_t m1 = rho1.hopf.dim(), m2 = rho2.hopf.dim();

    auto moved = detail::transport_coeff(F, rho1.coeff, phi, phi_inv);
    Subspace dep1 = detail::pair_dependencies(F, moved, n, m1);
    Subspace dep2 = detail::pair_dependencies(F, rho2.coeff, n, m2);

    ComoduleEquivalence out;
    if (!dep1.equals(dep2)) {
        for (std::size_t r = 0; r < dep1.dim(); ++r)
            if (!dep2.contains_vector(F, dep1.basis_vector(r))) {
                out.separating_dependency = dep1.basis_vector(r);
                return out;
            }
        for (std::size_t r = 0; r < dep2.dim(); ++r)
            if (!dep1.contains_vector(F, dep2.basis_vector(r))) {
                out.separating_dependency = dep2.basis_vector(r);
                return out;
            }
        throw std::logic_error("comodule_support_equiv: unequal kernels with no witness");
    }
    out.equivalent = true;

    // build tau on the transported rho1; both supports are computed from the
    // same pair family, so the pair-to-basis bookkeeping matches
    Coaction moved_rho1;
    moved_rho1.algebra = rho2.algebra;
    moved_rho1.hopf = rho1.hopf;
    moved_rho1.coeff = moved;
    SupportCoalgebra c1 = support_coalgebra(F, moved_rho1);
    SupportCoalgebra c2 = support_coalgebra(F, rho2);
    const std::size_t d = c1.coalgebra.dim;
    if (d != c2.coalgebra.dim)
        throw std::logic_error("comodule_support_equiv: support dimensions differ");

    // tau(c_k): express c_k through pair vectors of family 1, map to family 2
    Matrix V1(n * n, m1), V2(n * n, m2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < m1; ++k) V1.at(a * n + b, k) = moved[a][b][k];
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < m2; ++k) V2.at(a * n + b, k) = rho2.coeff[a][b][k];
    Matrix tau_h(m2, d);  // images in H2 coordinates
    for (std::size_t k = 0; k < d; ++k) {
        auto lambda = solve(F, transpose(V1), c1.inclusion.col(k));
        if (!lambda) throw std::logic_error("comodule_support_equiv: basis not in pair span");
        Vec img = mat_vec(F, transpose(V2), *lambda);
        for (std::size_t i = 0; i < m2; ++i) tau_h.at(i, k) = img[i];
    }
    // express images in the C2 basis
    Matrix tau(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        auto coords = solve(F, c2.inclusion, tau_h.col(k));
        if (!coords) throw std::logic_error("comodule_support_equiv: tau image outside C2");
        for (std::size_t i = 0; i < d; ++i) tau.at(i, k) = (*coords)[i];
    }

    // verify: tau is a coalgebra map and (phi (x) tau) rho1 = rho2 phi
    for (std::size_t k = 0; k < d; ++k) {
        Matrix lhs(d, d);  // (tau (x) tau) Delta1 c_k
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) {
                const Scalar& t = c1.coalgebra.delta[k].at(p, q);
                if (F.is_zero(t)) continue;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        lhs.at(i, j) =
                            F.add(lhs.at(i, j), F.mul(t, F.mul(tau.at(i, p), tau.at(j, q))));
            }
        Matrix rhs = c2.coalgebra.delta_of(F, tau.col(k));
        if (!mat_is_zero(F, mat_sub(F, lhs, rhs)))
            throw std::logic_error("comodule_support_equiv: tau is not a coalgebra map");
        Scalar e1 = c1.coalgebra.counit[k];
        Scalar e2 = c2.coalgebra.counit_of(F, tau.col(k));
        if (!F.eq(e1, e2))
            throw std::logic_error("comodule_support_equiv: tau does not preserve counit");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec img = mat_vec(F, tau, c1.coeff_in_C[a][b]);
            if (!vec_is_zero(F, vec_sub(F, img, c2.coeff_in_C[a][b])))
                throw std::logic_error("comodule_support_equiv: tau fails to intertwine");
        }
    out.tau = std::move(tau);
    return out;
}

struct CoarserMorphism {
    Matrix tau;  // dim C2 x dim C1, on the support-coalgebra bases
    SupportCoalgebra c1, c2;
};

// The unique morphism (id (x) tau) rho1 = rho2, existing iff the induced
// dual image of rho2 is contained in that of rho1.
inline std::optional<CoarserMorphism> coarser_morphism(const Field& F, const Coaction& rho1,
                                                       const Coaction& rho2) {
    if (!(rho1.algebra.field == rho2.algebra.field) || rho1.algebra.dim != rho2.algebra.dim ||
        rho1.algebra.mult != rho2.algebra.mult)
        throw PreconditionError("coarser_morphism: coactions live on different algebras");
    const std::size_t n = rho1.algebra.dim;
    const std::size_t m1 = rho1.hopf.dim(), m2 = rho2.hopf.dim();

    auto z1 = induced_dual_module(F, rho1);
    auto z2 = induced_dual_module(F, rho2);
    Subspace s1 = operator_span(F, z1.action);
    Subspace s2 = operator_span(F, z2.action);
    if (!s2.is_contained_in(F, s1)) return std::nullopt;

    CoarserMorphism out;
    out.c1 = support_coalgebra(F, rho1);
    out.c2 = support_coalgebra(F, rho2);
    const std::size_t d1 = out.c1.coalgebra.dim, d2 = out.c2.coalgebra.dim;

    Matrix V1(n * n, m1), V2(n * n, m2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t k = 0; k < m1; ++k) V1.at(a * n + b, k) = rho1.coeff[a][b][k];
            for (std::size_t k = 0; k < m2; ++k) V2.at(a * n + b, k) = rho2.coeff[a][b][k];
        }
    // well-definedness: dependencies of family 1 must hold in family 2
    Subspace dep1 = kernel(F, transpose(V1));
    for (std::size_t r = 0; r < dep1.dim(); ++r) {
        Vec img = mat_vec(F, transpose(V2), dep1.basis_vector(r));
        if (!vec_is_zero(F, img))
            throw std::logic_error("coarser_morphism: dependency not preserved");
    }

    out.tau = Matrix(d2, d1);
    for (std::size_t k = 0; k < d1; ++k) {
        auto lambda = solve(F, transpose(V1), out.c1.inclusion.col(k));
        if (!lambda) throw std::logic_error("coarser_morphism: basis not in pair span");
        Vec img = mat_vec(F, transpose(V2), *lambda);
        auto coords = solve(F, out.c2.inclusion, img);
        if (!coords) throw std::logic_error("coarser_morphism: tau image outside C2");
        for (std::size_t i = 0; i < d2; ++i) out.tau.at(i, k) = (*coords)[i];
    }

    // verify coalgebra map + intertwining (id (x) tau) rho1 = rho2
    for (std::size_t k = 0; k < d1; ++k) {
        Matrix lhs(d2, d2);
        for (std::size_t p = 0; p < d1; ++p)
            for (std::size_t q = 0; q < d1; ++q) {
                const Scalar& t = out.c1.coalgebra.delta[k].at(p, q);
                if (F.is_zero(t)) continue;
                for (std::size_t i = 0; i < d2; ++i)
                    for (std::size_t j = 0; j < d2; ++j)
                        lhs.at(i, j) = F.add(lhs.at(i, j),
                                             F.mul(t, F.mul(out.tau.at(i, p), out.tau.at(j, q))));
            }
        Matrix rhs = out.c2.coalgebra.delta_of(F, out.tau.col(k));
        if (!mat_is_zero(F, mat_sub(F, lhs, rhs)))
            throw std::logic_error("coarser_morphism: tau is not a coalgebra map");
        if (!F.eq(out.c1.coalgebra.counit[k], out.c2.coalgebra.counit_of(F, out.tau.col(k))))
            throw std::logic_error("coarser_morphism: tau does not preserve counit");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec img = mat_vec(F, out.tau, out.c1.coeff_in_C[a][b]);
            if (!vec_is_zero(F, vec_sub(F, img, out.c2.coeff_in_C[a][b])))
                throw std::logic_error("coarser_morphism: tau fails to intertwine");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Universal Hopf algebra presentation
// ---------------------------------------------------------------------------

struct PairSymbol {
    std::size_t alpha = 0, beta = 0;
    bool operator==(const PairSymbol&) const = default;
};

struct NCTerm {
    Scalar coef;
    std::vector<std::size_t> word;  // generator indices, possibly empty
};

struct NCPoly {
    std::vector<NCTerm> terms;
    bool zero() const { return terms.empty(); }
};

struct LinearDependency {
    std::size_t alpha = 0, beta = 0;
    Vec expansion;  // h_{alpha,beta} = sum expansion[g] * x_{generators[g]}
};

// Generators-and-relations description of the universal Hopf algebra of a
// coaction: generators x_ab for a chosen basis of C(rho), the quadratic
// relation family over all (alpha, beta, gamma), formulaic Delta/counit data
// (Delta x_ab = sum_c x_ac (x) x_cb, eps(x_ab) = delta_ab), and the flag that
// the defining ideal is closed under all antipode powers.
struct HopfPresentation {
    std::size_t algebra_dim = 0;
    std::vector<PairSymbol> generators;
    std::vector<LinearDependency> lin_deps;
    std::vector<NCPoly> relations;
    bool antipode_closed = true;
    std::optional<std::size_t> unit_grouplike;
};

namespace detail {

inline void poly_accumulate(const Field& F, std::vector<NCTerm>& terms, const Scalar& c,
                            std::vector<std::size_t> word) {
    if (F.is_zero(c)) return;
    for (auto& t : terms)
        if (t.word == word) {
            t.coef = F.add(t.coef, c);
            return;
        }
    terms.push_back({c, std::move(word)});
}

inline NCPoly poly_canonical(const Field& F, std::vector<NCTerm> terms) {
    NCPoly out;
    for (auto& t : terms)
        if (!F.is_zero(t.coef)) out.terms.push_back(std::move(t));
    std::sort(out.terms.begin(), out.terms.end(), [](const NCTerm& x, const NCTerm& y) {
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return x.word < y.word;
    });
    return out;
}

}  // namespace detail

inline HopfPresentation universal_hopf_presentation(const Field& F, const Coaction& rho) {
    auto crep = check_comodule_algebra(F, rho);
    if (!crep.ok()) throw PreconditionError("universal_hopf_presentation: invalid coaction");
    const std::size_t n = rho.algebra.dim, m = rho.hopf.dim();
    const FinAlgebra& A = rho.algebra;

    HopfPresentation pres;
    pres.algebra_dim = n;

    // choose generator pairs greedily in lexicographic (alpha, beta) order
    RankAccumulator acc(F, m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (acc.add_row(rho.coeff[a][b])) pres.generators.push_back({a, b});

    Matrix G(pres.generators.size(), m);
    for (std::size_t g = 0; g < pres.generators.size(); ++g)
        for (std::size_t k = 0; k < m; ++k)
            G.at(g, k) = rho.coeff[pres.generators[g].alpha][pres.generators[g].beta][k];

    // expansion of an arbitrary pair through the generator basis
    auto expand = [&](std::size_t a, std::size_t b) -> Vec {
        auto sol = solve(F, transpose(G), rho.coeff[a][b]);
        if (!sol) throw std::logic_error("universal_hopf_presentation: pair outside basis span");
        return *sol;
    };
    std::vector<std::vector<Vec>> expansions(n, std::vector<Vec>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            expansions[a][b] = expand(a, b);
            bool is_gen = false;
            for (std::size_t g = 0; g < pres.generators.size(); ++g)
                if (pres.generators[g].alpha == a && pres.generators[g].beta == b) is_gen = true;
            if (!is_gen) pres.lin_deps.push_back({a, b, expansions[a][b]});
        }

    // relation family: sum_{r,q} k^c_rq x_ra x_qb - sum_u k^u_ab x_cu,
    // expanded through the generator basis
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<NCTerm> terms;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Scalar& k = A.mult[r][q][c];
                        if (F.is_zero(k)) continue;
                        const Vec& e1 = expansions[r][a];
                        const Vec& e2 = expansions[q][b];
                        for (std::size_t g1 = 0; g1 < e1.size(); ++g1) {
                            if (F.is_zero(e1[g1])) continue;
                            for (std::size_t g2 = 0; g2 < e2.size(); ++g2)
                                detail::poly_accumulate(
                                    F, terms, F.mul(k, F.mul(e1[g1], e2[g2])), {g1, g2});
                        }
                    }
                for (std::size_t u = 0; u < n; ++u) {
                    const Scalar& k = A.mult[a][b][u];
                    if (F.is_zero(k)) continue;
                    const Vec& e = expansions[c][u];
                    for (std::size_t g = 0; g < e.size(); ++g)
                        detail::poly_accumulate(F, terms, F.neg(F.mul(k, e[g])), {g});
                }
                NCPoly poly = detail::poly_canonical(F, std::move(terms));
                if (poly.zero()) continue;
                bool dup = false;
                for (const auto& r : pres.relations)
                    if (r.terms.size() == poly.terms.size()) {
                        bool same = true;
                        for (std::size_t t = 0; t < r.terms.size(); ++t)
                            if (r.terms[t].word != poly.terms[t].word ||
                                !F.eq(r.terms[t].coef, poly.terms[t].coef)) {
                                same = false;
                                break;
                            }
                        if (same) {
                            dup = true;
                            break;
                        }
                    }
                if (!dup) pres.relations.push_back(std::move(poly));
            }

    // unital coaction: locate the generator equal to 1_H
    if (A.unit && crep.unital) {
        for (std::size_t g = 0; g < pres.generators.size(); ++g) {
            Vec diff = vec_sub(F, G.row(g), rho.hopf.unit());
            if (vec_is_zero(F, diff)) {
                pres.unit_grouplike = g;
                break;
            }
        }
    }
    return pres;
}

// Counit value of an emitted relation: eps(x_ab) = delta_ab extended
// multiplicatively over words. Zero for every relation of a valid coaction.
inline Scalar relation_counit_value(const Field& F, const HopfPresentation& pres,
                                    const NCPoly& poly) {
    Scalar total = F.zero();
    for (const auto& t : poly.terms) {
        Scalar v = t.coef;
        for (std::size_t g : t.word) {
            const PairSymbol& p = pres.generators[g];
            if (p.alpha != p.beta) {
                v = F.zero();
                break;
            }
        }
        total = F.add(total, v);
    }
    return total;
}

// Symbol-level coideal identity behind the presentation: in the free algebra
// on all pair symbols x_ab (with Delta x_ab = sum_c x_ac (x) x_cb),
//   Delta(rel_abc) = sum_{u,v} rel_uvc (x) x_ua x_vb + sum_w x_cw (x) rel_abw
// holds for every triple; this places Delta(I0) inside the two-sided coideal
// generated by the relations. Verified exactly over the structure constants.
inline bool coideal_identity_check(const Field& F, const FinAlgebra& A) {
    const std::size_t n = A.dim;
    // formal tensor: map (left word, right word) -> coefficient, where words
    // are lists of pair symbols encoded as a*n+b
    using Word = std::vector<std::size_t>;
    using Tensor = std::map<std::pair<Word, Word>, Scalar>;
    auto add = [&](Tensor& t, const Word& l, const Word& r, const Scalar& c) {
        if (F.is_zero(c)) return;
        auto key = std::make_pair(l, r);
        auto it = t.find(key);
        if (it == t.end())
            t.emplace(key, c);
        else {
            it->second = F.add(it->second, c);
            if (F.is_zero(it->second)) t.erase(it);
        }
    };
    auto enc = [n](std::size_t a, std::size_t b) { return a * n + b; };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Tensor lhs, rhs;
                // Delta of rel_abc = sum_{r,q} k^c_rq x_ra x_qb - sum_u k^u_ab x_cu
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Scalar& k = A.mult[r][q][c];
                        if (F.is_zero(k)) continue;
                        // Delta(x_ra x_qb) = sum_{u,v} x_ru x_qv (x) x_ua x_vb
                        for (std::size_t u = 0; u < n; ++u)
                            for (std::size_t v = 0; v < n; ++v)
                                add(lhs, {enc(r, u), enc(q, v)}, {enc(u, a), enc(v, b)}, k);
                    }
                for (std::size_t u = 0; u < n; ++u) {
                    const Scalar& k = A.mult[a][b][u];
                    if (F.is_zero(k)) continue;
                    // Delta(x_cu) = sum_w x_cw (x) x_wu
                    for (std::size_t w = 0; w < n; ++w)
                        add(lhs, {enc(c, w)}, {enc(w, u)}, F.neg(k));
                }
                // sum_{u,v} rel_uvc (x) x_ua x_vb
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        for (std::size_t r = 0; r < n; ++r)
                            for (std::size_t q = 0; q < n; ++q) {
                                const Scalar& k = A.mult[r][q][c];
                                if (F.is_zero(k)) continue;
                                add(rhs, {enc(r, u), enc(q, v)}, {enc(u, a), enc(v, b)}, k);
                            }
                        for (std::size_t w = 0; w < n; ++w) {
                            const Scalar& k = A.mult[u][v][w];
                            if (F.is_zero(k)) continue;
                            add(rhs, {enc(c, w)}, {enc(u, a), enc(v, b)}, F.neg(k));
                        }
                    }
                // sum_w x_cw (x) rel_abw
                for (std::size_t w = 0; w < n; ++w) {
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t q = 0; q < n; ++q) {
                            const Scalar& k = A.mult[r][q][w];
                            if (F.is_zero(k)) continue;
                            add(rhs, {enc(c, w)}, {enc(r, a), enc(q, b)}, k);
                        }
                    for (std::size_t u = 0; u < n; ++u) {
                        const Scalar& k = A.mult[a][b][u];
                        if (F.is_zero(k)) continue;
                        add(rhs, {enc(c, w)}, {enc(w, u)}, F.neg(k));
                    }
                }
                if (lhs != rhs) return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// Grading detection and the canonical map
// ---------------------------------------------------------------------------

struct DetectedGrading {
    // group-like element (H coordinates) and its simultaneous component
    std::vector<std::pair<Vec, Subspace>> components;
    GroupPresentation presentation;
};

// Recognizes coactions that are gradings in disguise: C(rho) must be spanned
// by group-likes and A must decompose into their simultaneous components.
inline std::optional<DetectedGrading> detect_grading(const Field& F, const Coaction& rho) {
    const std::size_t n = rho.algebra.dim;
    SupportCoalgebra sc = support_coalgebra(F, rho);
    const std::size_t d = sc.coalgebra.dim;

    GrouplikeResult gl = grouplikes(F, sc.coalgebra);
    if (!gl.complete)
        throw BudgetExceeded("detect_grading: group-like search incomplete over this field");
    std::vector<Vec> gl_in_C = gl.elements;
    {
        Subspace span_gl = Subspace::span(F, gl_in_C, d);
        if (span_gl.dim() != d) return std::nullopt;  // not group-like-spanned
    }

    DetectedGrading out;
    std::vector<Vec> gl_in_H;
    for (const auto& g : gl_in_C) gl_in_H.push_back(mat_vec(F, sc.inclusion, g));

    std::size_t total = 0;
    std::vector<Vec> all_rows;
    for (const auto& g : gl_in_H) {
        // component: rho(x) = x (x) g
        const std::size_t m = rho.hopf.dim();
        Matrix sys(n * m, n);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t a = 0; a < n; ++a) {
                    Scalar coef = rho.coeff[b][a][k];
                    if (a == b) coef = F.sub(coef, g[k]);
                    sys.at(b * m + k, a) = coef;
                }
        Subspace comp = kernel(F, sys);
        if (comp.dim() == 0) continue;
        total += comp.dim();
        for (std::size_t i = 0; i < comp.dim(); ++i) all_rows.push_back(comp.basis_vector(i));
        out.components.emplace_back(g, comp);
    }
    if (total != n || Subspace::span(F, all_rows, n).dim() != n) return std::nullopt;

    // universal group presentation over the detected support
    auto find_component = [&](const Vec& g) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < out.components.size(); ++i)
            if (vec_is_zero(F, vec_sub(F, out.components[i].first, g))) return i;
        return std::nullopt;
    };
    GroupPresentation& pres = out.presentation;
    for (std::size_t i = 0; i < out.components.size(); ++i)
        pres.generator_names.push_back("g" + std::to_string(i));
    for (std::size_t i = 0; i < out.components.size(); ++i)
        for (std::size_t j = 0; j < out.components.size(); ++j) {
            const auto& [gi, ci] = out.components[i];
            const auto& [gj, cj] = out.components[j];
            std::vector<Vec> prods;
            for (std::size_t r = 0; r < ci.dim(); ++r)
                for (std::size_t s = 0; s < cj.dim(); ++s)
                    prods.push_back(
                        rho.algebra.product(F, ci.basis_vector(r), cj.basis_vector(s)));
            Subspace ps = Subspace::span(F, prods, n);
            if (ps.dim() == 0) continue;
            Vec gprod = rho.hopf.algebra.product(F, gi, gj);
            auto t = find_component(gprod);
            if (!t || !ps.is_contained_in(F, out.components[*t].second))
                throw std::logic_error("detect_grading: product escapes the decomposition");
            pres.relations.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                                      -static_cast<int>(*t) - 1});
        }
    IntMatrix rel(pres.relations.size(), out.components.size());
    for (std::size_t r = 0; r < pres.relations.size(); ++r)
        for (int s : pres.relations[r])
            rel.at(r, static_cast<std::size_t>((s > 0 ? s : -s) - 1)) += (s > 0 ? 1 : -1);
    pres.abelianization = abelian_invariants(rel, out.components.size());
    return out;
}

struct CanComoduleReport {
    Matrix can;                      // (dim A * dim H) x (dim A)^2
    std::size_t coinvariant_dim = 0;
    std::size_t balanced_dim = 0;    // dim of A (x)_{A^coH} A
    std::size_t rank = 0;
    bool injective = false;
    bool surjective = false;
    bool hopf_galois = false;
    std::string note;
};

// Exact rank analysis of can: A (x)_{A^coH} A -> A (x) H,
// can(a (x) b) = a b_(0) (x) b_(1).
inline CanComoduleReport can_map_comodule(const Field& F, const Coaction& rho) {
    if (!rho.algebra.unit) throw PreconditionError("can_map_comodule: A must be unital");
    const std::size_t n = rho.algebra.dim, m = rho.hopf.dim();
    const FinAlgebra& A = rho.algebra;

    CanComoduleReport rep;
    // coinvariants: rho(a) = a (x) 1_H
    Matrix sys(n * m, n);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t a = 0; a < n; ++a) {
                Scalar c = rho.coeff[b][a][k];
                if (a == b) c = F.sub(c, rho.hopf.unit()[k]);
                sys.at(b * m + k, a) = c;
            }
    Subspace coinv = kernel(F, sys);
    rep.coinvariant_dim = coinv.dim();

    // balancing relations (a c) (x) b - a (x) (c b) over a basis of A^coH
    std::vector<Vec> rels;
    for (std::size_t l = 0; l < coinv.dim(); ++l) {
        Vec c = coinv.basis_vector(l);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec left = A.product(F, unit_vec(n, i), c);
                Vec right = A.product(F, c, unit_vec(n, j));
                Vec rel(n * n, Scalar(0));
                for (std::size_t r = 0; r < n; ++r) rel[r * n + j] = F.add(rel[r * n + j], left[r]);
                for (std::size_t s = 0; s < n; ++s)
                    rel[i * n + s] = F.sub(rel[i * n + s], right[s]);
                rels.push_back(std::move(rel));
            }
    }
    Subspace relspan = Subspace::span(F, rels, n * n);
    rep.balanced_dim = n * n - relspan.dim();

    rep.can = Matrix(n * m, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t k = 0; k < m; ++k) {
                    Scalar s = F.zero();
                    for (std::size_t b = 0; b < n; ++b)
                        s = F.add(s, F.mul(A.mult[i][b][g], rho.coeff[b][j][k]));
                    rep.can.at(g * m + k, i * n + j) = s;
                }

    // balancing relations must lie in ker(can)
    for (std::size_t r = 0; r < relspan.dim(); ++r) {
        Vec img = mat_vec(F, rep.can, relspan.basis_vector(r));
        if (!vec_is_zero(F, img))
            throw std::logic_error("can_map_comodule: can is not balanced");
    }
    rep.rank = rank(F, rep.can);
    rep.injective = rep.rank == rep.balanced_dim;
    rep.surjective = rep.rank == n * m;
    rep.hopf_galois = rep.injective && rep.surjective;
    if (rep.surjective) rep.note = "universal Hopf algebra of this coaction is H itself";
    return rep;
}

}  // namespace hopfeq

#endif
