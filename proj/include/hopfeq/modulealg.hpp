#ifndef HOPFEQ_MODULEALG_HPP
#define HOPFEQ_MODULEALG_HPP

#include "hopfeq/comodule.hpp"

namespace hopfeq {

struct ModuleReport {
    CheckReport base;
    bool unital = false;
    bool unitality_checked = false;
    bool ok() const { return base.ok; }
};

// Verifies that zeta is an algebra map (zeta(hh') = zeta(h)zeta(h'),
// zeta(1) = id) satisfying h(ab) = (h_(1) a)(h_(2) b) on all basis triples;
// reports unitality h 1_A = eps(h) 1_A when A is unital.
inline ModuleReport check_module_algebra(const Field& F, const ModuleStructure& zeta) {
    ModuleReport rep;
    if (!zeta.shapes_ok()) {
        rep.base.fail("shape", {}, "action tensor has wrong shape");
        return rep;
    }
    const std::size_t n = zeta.algebra.dim, m = zeta.hopf.dim();
    const FinAlgebra& A = zeta.algebra;
    const FinHopf& H = zeta.hopf;

    Matrix id_n = Matrix::identity(n);
    if (!mat_is_zero(F, mat_sub(F, zeta.action_of(F, H.unit()), id_n)))
        rep.base.fail("algebra-map-unit", {}, "zeta(1_H) != id");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Matrix lhs = zeta.action_of(F, H.algebra.mult[i][j]);
            Matrix rhs = mat_mul(F, zeta.action[i], zeta.action[j]);
            if (!mat_is_zero(F, mat_sub(F, lhs, rhs))) rep.base.fail("algebra-map", {i, j});
        }

    // compatibility h(ab) = (h_(1) a)(h_(2) b)
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Vec lhs = mat_vec(F, zeta.action[k], A.mult[a][b]);
                Vec rhs(n, Scalar(0));
                for (std::size_t p = 0; p < m; ++p)
                    for (std::size_t q = 0; q < m; ++q) {
                        const Scalar& d = H.coalgebra.delta[k].at(p, q);
                        if (F.is_zero(d)) continue;
                        Vec prod = A.product(F, zeta.action[p].col(a), zeta.action[q].col(b));
                        for (std::size_t t = 0; t < n; ++t)
                            rhs[t] = F.add(rhs[t], F.mul(d, prod[t]));
                    }
                if (!vec_is_zero(F, vec_sub(F, lhs, rhs)))
                    rep.base.fail("module-compatibility", {k, a, b});
            }

    if (A.unit) {
        rep.unitality_checked = true;
        rep.unital = true;
        for (std::size_t k = 0; k < m; ++k) {
            Vec got = mat_vec(F, zeta.action[k], *A.unit);
            Vec expect = vec_scale(F, H.coalgebra.counit[k], *A.unit);
            if (!vec_is_zero(F, vec_sub(F, got, expect))) rep.unital = false;
        }
    }
    return rep;
}

struct UnitalEigenReport {
    bool common_eigenvector = false;
    bool functional_is_counit = false;
    bool contradiction = false;  // eigenvector exists but functional != eps
    Vec functional;              // eigenvalue per H basis vector, when defined
};

// When 1_A is a common eigenvector of all operators from H, the eigenvalue
// functional must equal the counit; a mismatch certifies the input is not a
// module algebra.
inline UnitalEigenReport check_unital_eigen(const Field& F, const ModuleStructure& zeta) {
    if (!zeta.algebra.unit) throw PreconditionError("check_unital_eigen: A must be unital");
    const std::size_t n = zeta.algebra.dim, m = zeta.hopf.dim();
    const Vec& one = *zeta.algebra.unit;
    UnitalEigenReport rep;
    rep.common_eigenvector = true;
    rep.functional.assign(m, Scalar(0));

    // pick a coordinate where 1_A is nonzero to read off the eigenvalue
    std::size_t lead = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!F.is_zero(one[i])) {
            lead = i;
            break;
        }
    for (std::size_t k = 0; k < m; ++k) {
        Vec img = mat_vec(F, zeta.action[k], one);
        Scalar lambda = F.div(img[lead], one[lead]);
        if (!vec_is_zero(F, vec_sub(F, img, vec_scale(F, lambda, one)))) {
            rep.common_eigenvector = false;
            return rep;
        }
        rep.functional[k] = lambda;
    }
    rep.functional_is_counit = true;
    for (std::size_t k = 0; k < m; ++k)
        if (!F.eq(rep.functional[k], zeta.hopf.coalgebra.counit[k]))
            rep.functional_is_counit = false;
    rep.contradiction = !rep.functional_is_counit;
    return rep;
}

struct ModuleEquivalence {
    bool equivalent = false;
    // image bases: operator indices (into action[]) spanning each image
    std::vector<std::size_t> image_basis_1, image_basis_2;
    // lambda on those bases (dim im2 x dim im1), an algebra isomorphism
    std::optional<Matrix> lambda;
    std::optional<Matrix> separating_operator;
};

// Support equivalence of module structures through phi: conjugation must
// carry zeta1(H1) onto zeta2(H2) as subspaces of End(A2). The certificate is
// the induced isomorphism between the images, on explicit operator bases.
inline ModuleEquivalence support_equiv_modules(const Field& F, const ModuleStructure& z1,
                                               const ModuleStructure& z2,
                                               const std::optional<Matrix>& phi_opt = {}) {
    Matrix phi = require_isomorphism(F, z1.algebra, z2.algebra, phi_opt);
    Matrix phi_inv = *mat_inverse(F, phi);
    const std::size_t n = z2.algebra.dim;

    std::vector<Matrix> moved;
    for (const auto& op : z1.action) moved.push_back(conjugate(F, phi, phi_inv, op));
    Subspace s1 = operator_span(F, moved);
    Subspace s2 = operator_span(F, z2.action);

    ModuleEquivalence out;
    if (!s1.equals(s2)) {
        for (std::size_t r = 0; r < s2.dim(); ++r)
            if (!s1.contains_vector(F, s2.basis_vector(r))) {
                out.separating_operator = unvectorize(s2.basis_vector(r), n, n);
                return out;
            }
        for (std::size_t r = 0; r < s1.dim(); ++r)
            if (!s2.contains_vector(F, s1.basis_vector(r))) {
                out.separating_operator = unvectorize(s1.basis_vector(r), n, n);
                return out;
            }
        throw std::logic_error("support_equiv_modules: unequal spans without witness");
    }
    out.equivalent = true;

    // greedy operator bases of the two images
    RankAccumulator acc1(F, n * n), acc2(F, n * n);
    for (std::size_t k = 0; k < z1.action.size(); ++k)
        if (acc1.add_row(vectorize(moved[k]))) out.image_basis_1.push_back(k);
    for (std::size_t k = 0; k < z2.action.size(); ++k)
        if (acc2.add_row(vectorize(z2.action[k]))) out.image_basis_2.push_back(k);
    const std::size_t d = out.image_basis_1.size();
    if (d != out.image_basis_2.size())
        throw std::logic_error("support_equiv_modules: equal spans, unequal dimensions");

    Matrix B2(d, n * n);
    for (std::size_t r = 0; r < d; ++r) {
        Vec v = vectorize(z2.action[out.image_basis_2[r]]);
        for (std::size_t c = 0; c < n * n; ++c) B2.at(r, c) = v[c];
    }
    // lambda maps the conjugated basis operators of im1 into im2 coordinates
    Matrix lambda(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        auto coords = solve(F, transpose(B2), vectorize(moved[out.image_basis_1[k]]));
        if (!coords) throw std::logic_error("support_equiv_modules: conjugate outside image");
        for (std::size_t r = 0; r < d; ++r) lambda.at(r, k) = (*coords)[r];
    }
    // lambda must be invertible and multiplicative on the image algebra
    if (!mat_inverse(F, lambda))
        throw std::logic_error("support_equiv_modules: lambda not invertible");
    auto in_coords_2 = [&](const Matrix& op) {
        auto coords = solve(F, transpose(B2), vectorize(op));
        if (!coords) throw std::logic_error("support_equiv_modules: product escapes image");
        return *coords;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix prod1 = mat_mul(F, moved[out.image_basis_1[i]], moved[out.image_basis_1[j]]);
            Vec lhs = in_coords_2(prod1);  // lambda(o_i o_j) in im2 coordinates
            Matrix prod2 = mat_mul(F, z2.action[out.image_basis_2[i]],
                                   z2.action[out.image_basis_2[j]]);
            // lambda(o_i) lambda(o_j): expand through lambda columns
            Matrix li(n, n), lj(n, n);
            for (std::size_t r = 0; r < d; ++r) {
                li = mat_add(F, li, mat_scale(F, lambda.at(r, i), z2.action[out.image_basis_2[r]]));
                lj = mat_add(F, lj, mat_scale(F, lambda.at(r, j), z2.action[out.image_basis_2[r]]));
            }
            Vec rhs = in_coords_2(mat_mul(F, li, lj));
            if (!vec_is_zero(F, vec_sub(F, lhs, rhs)))
                throw std::logic_error("support_equiv_modules: lambda not multiplicative");
            (void)prod2;
        }
    out.lambda = std::move(lambda);
    return out;
}

// zeta1 finer than zeta2: zeta2(H2) contained in zeta1(H1).
inline bool finer_modules(const Field& F, const ModuleStructure& z1, const ModuleStructure& z2) {
    if (!(z1.algebra.field == z2.algebra.field) || z1.algebra.dim != z2.algebra.dim ||
        z1.algebra.mult != z2.algebra.mult)
        throw PreconditionError("finer_modules: structures live on different algebras");
    Subspace s1 = operator_span(F, z1.action);
    Subspace s2 = operator_span(F, z2.action);
    return s2.is_contained_in(F, s1);
}

// H-module <-> H*-comodule correspondence (finite dimensional H): the
// coefficient data transposes, so the roundtrip is the identity on it.
inline Coaction module_to_comodule(const Field& F, const ModuleStructure& zeta) {
    const std::size_t n = zeta.algebra.dim, m = zeta.hopf.dim();
    Coaction rho;
    rho.algebra = zeta.algebra;
    rho.hopf = dual_hopf(F, zeta.hopf);
    rho.coeff.assign(n, std::vector<Vec>(n, Vec(m, Scalar(0))));
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < m; ++k) rho.coeff[b][a][k] = zeta.action[k].at(b, a);
    return rho;
}

inline ModuleStructure comodule_to_module(const Field& F, const Coaction& rho) {
    return induced_dual_module(F, rho);
}

struct RegularDualResult {
    ModuleStructure zeta;
    bool faithful = false;
    std::string note;
};

// The unital H-module structure on the algebra H* given by
// (zeta(h)lambda)(t) = lambda(t h); zeta is injective and its universal Hopf
// algebra is (H, zeta) itself.
inline RegularDualResult regular_action_on_dual(const Field& F, const FinHopf& H) {
    const std::size_t m = H.dim();
    RegularDualResult out;
    out.zeta.algebra = dual_hopf(F, H).algebra;
    out.zeta.hopf = H;
    out.zeta.action.assign(m, Matrix(m, m));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t i = 0; i < m; ++i)
                out.zeta.action[k].at(t, i) = H.algebra.mult[t][k][i];
    Matrix Z(m * m, m);
    for (std::size_t k = 0; k < m; ++k) {
        Vec v = vectorize(out.zeta.action[k]);
        for (std::size_t r = 0; r < m * m; ++r) Z.at(r, k) = v[r];
    }
    out.faithful = kernel(F, Z).dim() == 0;
    out.note = "universal Hopf algebra of this module structure is (H, zeta) itself";
    return out;
}

struct CanModuleReport {
    Matrix can;  // (dim H * dim A) x (dim A)^2, into Hom(H, A)
    std::size_t invariant_dim = 0;
    std::size_t balanced_dim = 0;
    std::size_t rank = 0;
    bool injective = false;
    bool dense = false;  // = surjective at finite dimension
    std::string note;
};

// can: A (x)_{A^H} A -> Hom(H, A), can(a (x) b)(h) = a (h b): exact rank
// analysis; density in the finite topology equals surjectivity here.
inline CanModuleReport can_map_module(const Field& F, const ModuleStructure& zeta) {
    if (!zeta.algebra.unit) throw PreconditionError("can_map_module: A must be unital");
    const std::size_t n = zeta.algebra.dim, m = zeta.hopf.dim();
    const FinAlgebra& A = zeta.algebra;

    CanModuleReport rep;
    // invariants: h a = eps(h) a for all h
    Matrix sys(m * n, n);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t a = 0; a < n; ++a) {
                Scalar c = zeta.action[k].at(r, a);
                if (r == a) c = F.sub(c, zeta.hopf.coalgebra.counit[k]);
                sys.at(k * n + r, a) = c;
            }
    Subspace inv = kernel(F, sys);
    rep.invariant_dim = inv.dim();

    std::vector<Vec> rels;
    for (std::size_t l = 0; l < inv.dim(); ++l) {
        Vec c = inv.basis_vector(l);
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

    rep.can = Matrix(m * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Vec hb = zeta.action[k].col(j);
                Vec val = A.product(F, unit_vec(n, i), hb);
                for (std::size_t g = 0; g < n; ++g) rep.can.at(k * n + g, i * n + j) = val[g];
            }
    for (std::size_t r = 0; r < relspan.dim(); ++r)
        if (!vec_is_zero(F, mat_vec(F, rep.can, relspan.basis_vector(r))))
            throw std::logic_error("can_map_module: can is not balanced");
    rep.rank = rank(F, rep.can);
    rep.injective = rep.rank == rep.balanced_dim;
    rep.dense = rep.rank == m * n;
    if (rep.dense) rep.note = "universal Hopf algebra of this module structure is (H, zeta)";
    return rep;
}

// A group action by automorphisms is exactly an FG-module algebra structure.
inline ModuleStructure group_action_to_module(const Field& F, const GroupAction& ga) {
    ModuleStructure z;
    z.algebra = ga.algebra;
    z.hopf = group_hopf(F, ga.group);
    z.action = ga.images;
    return z;
}

inline CheckReport check_group_action(const Field& F, const GroupAction& ga) {
    CheckReport rep;
    const std::size_t n = ga.algebra.dim;
    if (ga.images.size() != ga.group.order) {
        rep.fail("shape", {});
        return rep;
    }
    auto grep = check_group(ga.group);
    rep.merge(grep);
    if (!grep.ok) return rep;
    for (std::size_t g = 0; g < ga.group.order; ++g) {
        const Matrix& M = ga.images[g];
        if (M.rows != n || M.cols != n) {
            rep.fail("shape", {g});
            return rep;
        }
        if (!mat_inverse(F, M)) rep.fail("invertible", {g});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec lhs = mat_vec(F, M, ga.algebra.mult[i][j]);
                Vec rhs = ga.algebra.product(F, M.col(i), M.col(j));
                if (!vec_is_zero(F, vec_sub(F, lhs, rhs))) {
                    rep.fail("automorphism", {g, i, j});
                    i = n;
                    break;
                }
            }
    }
    for (std::size_t g = 0; g < ga.group.order; ++g)
        for (std::size_t h = 0; h < ga.group.order; ++h) {
            Matrix lhs = mat_mul(F, ga.images[g], ga.images[h]);
            if (!mat_is_zero(F, mat_sub(F, lhs, ga.images[ga.group.mul(g, h)])))
                rep.fail("group-homomorphism", {g, h});
        }
    if (!mat_is_zero(F,
                     mat_sub(F, ga.images[ga.group.identity], Matrix::identity(n))))
        rep.fail("identity-image", {});
    return rep;
}

// Equivalence of group actions through phi: the linear spans of the image
// automorphisms must match after conjugation.
inline bool group_action_equiv(const Field& F, const GroupAction& a1, const GroupAction& a2,
                               const std::optional<Matrix>& phi_opt = {}) {
    auto r1 = check_group_action(F, a1), r2 = check_group_action(F, a2);
    if (!r1.ok || !r2.ok) throw PreconditionError("group_action_equiv: invalid group action");
    Matrix phi = require_isomorphism(F, a1.algebra, a2.algebra, phi_opt);
    Matrix phi_inv = *mat_inverse(F, phi);
    std::vector<Matrix> moved;
    for (const auto& m : a1.images) moved.push_back(conjugate(F, phi, phi_inv, m));
    return operator_span(F, moved).equals(operator_span(F, a2.images));
}

inline bool is_algebra_automorphism(const Field& F, const FinAlgebra& A, const Matrix& M) {
    if (M.rows != A.dim || M.cols != A.dim) return false;
    if (!mat_inverse(F, M)) return false;
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            Vec lhs = mat_vec(F, M, A.mult[i][j]);
            Vec rhs = A.product(F, M.col(i), M.col(j));
            if (!vec_is_zero(F, vec_sub(F, lhs, rhs))) return false;
        }
    return true;
}

struct MembershipReport {
    bool member = false;
    bool invertible = false;
    bool automorphism = false;
    bool in_span = false;
};

// Membership in the universal group of an action: candidate must be an
// invertible algebra automorphism lying in the linear span of the images.
inline MembershipReport action_universal_group_membership(const Field& F, const GroupAction& ga,
                                                          const Matrix& candidate) {
    if (candidate.rows != ga.algebra.dim || candidate.cols != ga.algebra.dim)
        throw PreconditionError("membership: candidate must be square of dim A");
    MembershipReport rep;
    rep.invertible = mat_inverse(F, candidate).has_value();
    rep.automorphism = is_algebra_automorphism(F, ga.algebra, candidate);
    rep.in_span = operator_span(F, ga.images).contains_vector(F, vectorize(candidate));
    rep.member = rep.invertible && rep.automorphism && rep.in_span;
    return rep;
}

// Exhaustive list of invertible automorphisms inside the span of a set of
// operators, over a prime field with |span| within budget.
inline std::vector<Matrix> enumerate_unit_automorphisms(const Field& F, const FinAlgebra& A,
                                                        const std::vector<Matrix>& span_ops,
                                                        long budget = 1000000) {
    if (F.is_rationals())
        throw PreconditionError("enumerate_unit_automorphisms: finite fields only");
    long p = F.characteristic();
    Subspace span = operator_span(F, span_ops);
    double total = 1;
    for (std::size_t i = 0; i < span.dim(); ++i) total *= static_cast<double>(p);
    if (total > static_cast<double>(budget))
        throw BudgetExceeded("enumerate_unit_automorphisms: span too large (" +
                             std::to_string(total) + " candidates)");
    std::vector<Matrix> found;
    std::vector<long> digits(span.dim(), 0);
    bool done = span.dim() == 0;
    while (!done) {
        Matrix M(A.dim, A.dim);
        for (std::size_t i = 0; i < span.dim(); ++i) {
            if (digits[i] == 0) continue;
            M = mat_add(F, M,
                        mat_scale(F, Scalar(digits[i]),
                                  unvectorize(span.basis_vector(i), A.dim, A.dim)));
        }
        if (is_algebra_automorphism(F, A, M)) found.push_back(M);
        std::size_t pos = span.dim();
        while (pos > 0) {
            if (++digits[pos - 1] < p) break;
            digits[pos - 1] = 0;
            --pos;
        }
        done = (pos == 0);
    }
    return found;
}

inline std::vector<Matrix> enumerate_G0(const Field& F, const GroupAction& ga,
                                        long budget = 1000000) {
    return enumerate_unit_automorphisms(F, ga.algebra, ga.images, budget);
}

struct CocommutativeData {
    Subspace operator_span;
    std::vector<Matrix> l0_basis;  // derivations inside the image span
    bool g0_enumerated = false;
    std::vector<Matrix> g0_elements;            // finite-field enumeration
    std::vector<Matrix> g0_twists;              // conjugation on L0, per element
    std::string g0_descriptor;                  // membership oracle over Q
    std::string smash_description;
    bool theorem_hypotheses = false;  // char 0 required for the universality claim
};

// Der(A): kernel of the linearized Leibniz system D(xy) = D(x)y + xD(y).
inline Subspace derivation_space(const Field& F, const FinAlgebra& A) {
    const std::size_t n = A.dim;
    // unknowns D[r][c] indexed r*n+c; one equation per (i,j,t)
    Matrix sys(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                std::size_t row = (i * n + j) * n + t;
                for (std::size_t g = 0; g < n; ++g) {
                    // D(b_i b_j) term: sum_g k^g_ij D[t][g]
                    sys.at(row, t * n + g) = F.add(sys.at(row, t * n + g), A.mult[i][j][g]);
                }
                for (std::size_t a = 0; a < n; ++a) {
                    // -(D b_i) b_j: -sum_a D[a][i] k^t_aj
                    sys.at(row, a * n + i) = F.sub(sys.at(row, a * n + i), A.mult[a][j][t]);
                    // -b_i (D b_j): -sum_a D[a][j] k^t_ia
                    sys.at(row, a * n + j) = F.sub(sys.at(row, a * n + j), A.mult[i][a][t]);
                }
            }
    return kernel(F, sys);
}

// Conjugation action of an automorphism g on the L0 basis, in L0 coordinates.
inline Matrix conjugation_on_l0(const Field& F, const CocommutativeData& data, const Matrix& g) {
    const std::size_t d = data.l0_basis.size();
    if (d == 0) return Matrix(0, 0);
    auto ginv = mat_inverse(F, g);
    if (!ginv) throw PreconditionError("conjugation_on_l0: g not invertible");
    const std::size_t n = g.rows;
    Matrix basis_mat(d, n * n);
    for (std::size_t r = 0; r < d; ++r) {
        Vec v = vectorize(data.l0_basis[r]);
        for (std::size_t c = 0; c < n * n; ++c) basis_mat.at(r, c) = v[c];
    }
    Matrix twist(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        Matrix conj = mat_mul(F, mat_mul(F, g, data.l0_basis[k]), *ginv);
        auto coords = solve(F, transpose(basis_mat), vectorize(conj));
        if (!coords) throw std::logic_error("conjugation_on_l0: L0 not stable");
        for (std::size_t r = 0; r < d; ++r) twist.at(r, k) = (*coords)[r];
    }
    return twist;
}

// The cocommutative-universal data of a module structure:
// L0 = Der(A) ∩ zeta(H) by pure linear algebra, G0 = U(zeta(H)) ∩ Aut(A)
// (enumerated over small prime fields, a membership oracle over Q), and the
// smash presentation U(L0) # F[G0] with the conjugation twist.
inline CocommutativeData cocommutative_data(const Field& F, const ModuleStructure& zeta,
                                            long budget = 1000000) {
    auto mrep = check_module_algebra(F, zeta);
    if (!mrep.ok()) throw PreconditionError("cocommutative_data: invalid module structure");
    const std::size_t n = zeta.algebra.dim;

    CocommutativeData out;
    out.operator_span = operator_span(F, zeta.action);
    Subspace der = derivation_space(F, zeta.algebra);
    Subspace l0 = Subspace::intersect(F, der, out.operator_span);
    for (std::size_t r = 0; r < l0.dim(); ++r)
        out.l0_basis.push_back(unvectorize(l0.basis_vector(r), n, n));

    // sanity: every reported L0 element is a derivation inside the span
    for (const auto& D : out.l0_basis) {
        if (!der.contains_vector(F, vectorize(D)) ||
            !out.operator_span.contains_vector(F, vectorize(D)))
            throw std::logic_error("cocommutative_data: bad L0 element");
    }

    out.theorem_hypotheses = F.characteristic() == 0;
    if (!F.is_rationals()) {
        std::vector<Matrix> ops;
        for (const auto& m : zeta.action) ops.push_back(m);
        out.g0_elements = enumerate_unit_automorphisms(F, zeta.algebra, ops, budget);
        out.g0_enumerated = true;
        for (const auto& g : out.g0_elements) {
            if (!out.operator_span.contains_vector(F, vectorize(g)))
                throw std::logic_error("cocommutative_data: G0 element outside span");
            out.g0_twists.push_back(conjugation_on_l0(F, out, g));
        }
        out.smash_description = "U(L0) # FG0, dim L0 = " + std::to_string(out.l0_basis.size()) +
                                ", |G0| = " + std::to_string(out.g0_elements.size()) +
                                ", G0 acting on L0 by conjugation";
    } else {
        out.g0_descriptor =
            "invertible algebra automorphisms inside the operator span "
            "(membership-tested per candidate)";
        out.smash_description = "U(L0) # FG0, dim L0 = " + std::to_string(out.l0_basis.size()) +
                                ", G0 given by the membership oracle, acting on L0 by "
                                "conjugation";
    }
    return out;
}

// Membership test for G0 = U(zeta(H)) ∩ Aut(A) of a module structure.
inline MembershipReport g0_membership(const Field& F, const ModuleStructure& zeta,
                                      const Matrix& candidate) {
    GroupAction fake;  // reuse the span machinery: images = action operators
    fake.algebra = zeta.algebra;
    fake.group = cyclic_group(1);
    MembershipReport rep;
    rep.invertible = mat_inverse(F, candidate).has_value();
    rep.automorphism = is_algebra_automorphism(F, zeta.algebra, candidate);
    rep.in_span = operator_span(F, zeta.action).contains_vector(F, vectorize(candidate));
    rep.member = rep.invertible && rep.automorphism && rep.in_span;
    return rep;
}

// The ordered pair ((h_(1) a)(h_(2) b), (h_(2) a)(h_(1) b)); inequality
// certifies the action cannot factor through any cocommutative Hopf algebra.
inline std::pair<Vec, Vec> cocommutativity_obstruction(const Field& F,
                                                       const ModuleStructure& zeta, const Vec& h,
                                                       const Vec& a, const Vec& b) {
    const std::size_t n = zeta.algebra.dim, m = zeta.hopf.dim();
    if (h.size() != m || a.size() != n || b.size() != n)
        throw PreconditionError("cocommutativity_obstruction: bad shapes");
    Matrix d = zeta.hopf.coalgebra.delta_of(F, h);
    Vec straight(n, Scalar(0)), swapped(n, Scalar(0));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            if (F.is_zero(d.at(p, q))) continue;
            Vec pa = mat_vec(F, zeta.action[p], a), qb = mat_vec(F, zeta.action[q], b);
            Vec qa = mat_vec(F, zeta.action[q], a), pb = mat_vec(F, zeta.action[p], b);
            Vec s1 = zeta.algebra.product(F, pa, qb);
            Vec s2 = zeta.algebra.product(F, qa, pb);
            for (std::size_t t = 0; t < n; ++t) {
                straight[t] = F.add(straight[t], F.mul(d.at(p, q), s1[t]));
                swapped[t] = F.add(swapped[t], F.mul(d.at(p, q), s2[t]));
            }
        }
    return {straight, swapped};
}

struct DualNumbersClassification {
    int case_number = 0;        // 1: scalars, 2: diagonal, 3: upper triangular
    Matrix adapted_basis;       // columns: (1, x) with x^2 = 0
    Subspace span_witness;      // zeta(H) in the adapted coordinates
    Vec alpha, beta;            // functionals from the triangular form
};

// Classifies a unital module structure on a two-dimensional algebra
// isomorphic to F[x]/(x^2): extracts the triangular form
// zeta(h) = (eps(h), beta(h); 0, alpha(h)) in an adapted basis (1, x) and
// decides the case by the image span.
inline DualNumbersClassification classify_dual_numbers(const Field& F,
                                                       const ModuleStructure& zeta) {
    const FinAlgebra& A = zeta.algebra;
    if (A.dim != 2) throw PreconditionError("classify_dual_numbers: dim A must be 2");
    if (F.characteristic() == 2) throw PreconditionError("classify_dual_numbers: char F != 2");
    auto arep = check_algebra(F, A, true);
    if (!arep.ok() || !arep.unital)
        throw PreconditionError("classify_dual_numbers: A must be associative and unital");
    Vec u = *arep.unit;

    auto mrep = check_module_algebra(F, zeta);
    if (!mrep.ok())
        throw PreconditionError("classify_dual_numbers: input violates the module axioms");
    if (!mrep.unital)
        throw PreconditionError("classify_dual_numbers: module structure must be unital");

    // adapted radical generator: w independent from 1, shifted so x^2 = 0
    std::size_t wi = 2;
    Subspace uline = Subspace::span(F, {u}, 2);
    for (std::size_t i = 0; i < 2; ++i)
        if (!uline.contains_vector(F, unit_vec(2, i))) {
            wi = i;
            break;
        }
    if (wi == 2) throw PreconditionError("classify_dual_numbers: degenerate unit");
    Vec w = unit_vec(2, wi);
    Matrix T0(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
        T0.at(r, 0) = u[r];
        T0.at(r, 1) = w[r];
    }
    Matrix T0inv = *mat_inverse(F, T0);
    Vec w2 = mat_vec(F, T0inv, A.product(F, w, w));  // w^2 = c0*1 + c1*w
    Scalar s = F.div(F.neg(w2[1]), Scalar(2));
    Vec x = vec_add(F, w, vec_scale(F, s, u));
    if (!vec_is_zero(F, A.product(F, x, x)))
        throw PreconditionError("classify_dual_numbers: A has no square-zero radical generator");

    DualNumbersClassification out;
    out.adapted_basis = Matrix(2, 2);
    for (std::size_t r = 0; r < 2; ++r) {
        out.adapted_basis.at(r, 0) = u[r];
        out.adapted_basis.at(r, 1) = x[r];
    }
    Matrix Tinv = *mat_inverse(F, out.adapted_basis);

    const std::size_t m = zeta.hopf.dim();
    out.alpha.assign(m, Scalar(0));
    out.beta.assign(m, Scalar(0));
    std::vector<Matrix> adapted;
    for (std::size_t k = 0; k < m; ++k) {
        Matrix Mk = mat_mul(F, mat_mul(F, Tinv, zeta.action[k]), out.adapted_basis);
        if (!F.is_zero(Mk.at(1, 0)) || !F.eq(Mk.at(0, 0), zeta.hopf.coalgebra.counit[k]))
            throw std::logic_error("classify_dual_numbers: action not triangular-unital");
        out.beta[k] = Mk.at(0, 1);
        out.alpha[k] = Mk.at(1, 1);
        adapted.push_back(std::move(Mk));
    }
    out.span_witness = operator_span(F, adapted);

    std::size_t d = out.span_witness.dim();
    if (d == 3) {
        out.case_number = 3;
        return out;
    }
    // alpha independent from eps?
    Matrix two(2, m);
    for (std::size_t k = 0; k < m; ++k) {
        two.at(0, k) = zeta.hopf.coalgebra.counit[k];
        two.at(1, k) = out.alpha[k];
    }
    bool alpha_indep = rank(F, two) == 2;
    if (alpha_indep) {
        if (!vec_is_zero(F, out.beta))
            throw std::logic_error("classify_dual_numbers: beta must vanish in case 2");
        out.case_number = 2;
    } else {
        if (!vec_is_zero(F, out.beta))
            throw std::logic_error("classify_dual_numbers: beta must vanish in case 1");
        out.case_number = 1;
    }
    return out;
}

// Dimension of the maximal H-invariant nilpotent ideal of a dual-numbers
// module structure: 1 when span{x} is stable under the action, 0 otherwise.
inline int dual_numbers_invariant_nilpotent_dim(const Field& F, const ModuleStructure& zeta) {
    auto cls = classify_dual_numbers(F, zeta);
    Vec x = cls.adapted_basis.col(1);
    Subspace rad = Subspace::span(F, {x}, 2);
    for (const auto& op : zeta.action)
        if (!rad.contains_vector(F, mat_vec(F, op, x))) return 0;
    return 1;
}

}  // namespace hopfeq

#endif
