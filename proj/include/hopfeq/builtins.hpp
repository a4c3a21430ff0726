#ifndef HOPFEQ_BUILTINS_HPP
#define HOPFEQ_BUILTINS_HPP

#include <array>
#include <variant>

#include "hopfeq/modulealg.hpp"

namespace hopfeq {

// --------------------------------------------------------------------------
// Algebras
// --------------------------------------------------------------------------

// F[x]/(x^2) on the basis (1, x).
inline FinAlgebra algebra_dual_numbers(const Field& F) {
    FinAlgebra A;
    A.field = F.spec();
    A.dim = 2;
    A.basis_names = {"1", "x"};
    A.mult.assign(2, std::vector<Vec>(2, Vec(2, Scalar(0))));
    A.mult[0][0][0] = 1;  // 1*1 = 1
    A.mult[0][1][1] = 1;  // 1*x = x
    A.mult[1][0][1] = 1;  // x*1 = x
    A.unit = Vec{Scalar(1), Scalar(0)};
    return A;
}

// M_2(F) on the matrix-unit basis (e11, e12, e21, e22).
inline FinAlgebra algebra_m2(const Field& F) {
    FinAlgebra A;
    A.field = F.spec();
    A.dim = 4;
    A.basis_names = {"e11", "e12", "e21", "e22"};
    A.mult.assign(4, std::vector<Vec>(4, Vec(4, Scalar(0))));
    auto idx = [](std::size_t a, std::size_t b) { return a * 2 + b; };
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    if (b == c) A.mult[idx(a, b)][idx(c, d)][idx(a, d)] = 1;
    A.unit = Vec{Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    return A;
}

// The four-dimensional algebra on (1, a, b, ab) with a^2 = b^2 = ba = 0.
inline FinAlgebra algebra_example59(const Field& F) {
    FinAlgebra A;
    A.field = F.spec();
    A.dim = 4;
    A.basis_names = {"1", "a", "b", "ab"};
    A.mult.assign(4, std::vector<Vec>(4, Vec(4, Scalar(0))));
    for (std::size_t i = 0; i < 4; ++i) {
        A.mult[0][i][i] = 1;  // 1*y = y
        if (i != 0) A.mult[i][0][i] = 1;
    }
    A.mult[1][2][3] = 1;  // a*b = ab; every other nonunit product vanishes
    A.unit = unit_vec(4, 0);
    return A;
}

// --------------------------------------------------------------------------
// Groups and Hopf algebras
// --------------------------------------------------------------------------

// Symmetric group S3; composition is right-to-left, (fg)(t) = f(g(t)).
inline FiniteGroup group_s3() {
    FiniteGroup G;
    G.order = 6;
    G.identity = 0;
    G.names = {"id", "(12)", "(23)", "(123)", "(132)", "(13)"};
    const std::vector<std::array<std::size_t, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto compose = [&](std::size_t f, std::size_t g) {
        std::array<std::size_t, 3> fg{};
        for (std::size_t t = 0; t < 3; ++t) fg[t] = perms[f][perms[g][t]];
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == fg) return k;
        throw std::logic_error("group_s3: composition escaped the table");
    };
    G.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) G.table[i][j] = compose(i, j);
    return G;
}

// Sweedler's four-dimensional Hopf algebra on the basis (1, c, v, cv):
// c^2 = 1, v^2 = 0, vc = -cv; Delta c = c (x) c, Delta v = c (x) v + v (x) 1;
// S(c) = c, S(v) = -cv.
inline FinHopf sweedler_hopf(const Field& F) {
    FinHopf H;
    H.algebra.field = F.spec();
    H.algebra.dim = 4;
    H.algebra.basis_names = {"1", "c", "v", "cv"};
    H.algebra.mult.assign(4, std::vector<Vec>(4, Vec(4, Scalar(0))));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
        H.algebra.mult[i][j][k] = F.reduce(Scalar(c));
    };
    // row: left factor 1
    for (std::size_t j = 0; j < 4; ++j) set(0, j, j, 1);
    set(1, 0, 1, 1);  // c*1 = c
    set(1, 1, 0, 1);  // c*c = 1
    set(1, 2, 3, 1);  // c*v = cv
    set(1, 3, 2, 1);  // c*cv = v
    set(2, 0, 2, 1);  // v*1 = v
    set(2, 1, 3, -1); // v*c = -cv
    set(3, 0, 3, 1);  // cv*1 = cv
    set(3, 1, 2, -1); // cv*c = -v
    H.algebra.unit = unit_vec(4, 0);

    H.coalgebra.field = F.spec();
    H.coalgebra.dim = 4;
    H.coalgebra.basis_names = H.algebra.basis_names;
    H.coalgebra.delta.assign(4, Matrix(4, 4));
    H.coalgebra.delta[0].at(0, 0) = 1;                                // 1 (x) 1
    H.coalgebra.delta[1].at(1, 1) = 1;                                // c (x) c
    H.coalgebra.delta[2].at(1, 2) = 1;                                // c (x) v
    H.coalgebra.delta[2].at(2, 0) = 1;                                // v (x) 1
    H.coalgebra.delta[3].at(0, 3) = 1;                                // 1 (x) cv
    H.coalgebra.delta[3].at(3, 1) = 1;                                // cv (x) c
    H.coalgebra.counit = {Scalar(1), Scalar(1), Scalar(0), Scalar(0)};

    H.antipode = Matrix(4, 4);
    H.antipode.at(0, 0) = 1;                    // S(1) = 1
    H.antipode.at(1, 1) = 1;                    // S(c) = c
    H.antipode.at(3, 2) = F.reduce(Scalar(-1)); // S(v) = -cv
    H.antipode.at(2, 3) = 1;                    // S(cv) = v
    return H;
}

// --------------------------------------------------------------------------
// Gradings
// --------------------------------------------------------------------------

// Z/2-grading of M_2: even part diagonal, odd part antidiagonal.
inline Grading m2_z2_grading(const Field& F) {
    Grading G;
    G.algebra = algebra_m2(F);
    G.group = cyclic_group(2);
    G.components.emplace(0, Subspace::span(F, {unit_vec(4, 0), unit_vec(4, 3)}, 4));
    G.components.emplace(1, Subspace::span(F, {unit_vec(4, 1), unit_vec(4, 2)}, 4));
    return G;
}

// The two equivalent gradings of the (1, a, b, ab) algebra: by S3 on the
// components (id, (12), (23), (123)) and by Z/4 on (0, 1, 2, 3).
inline Grading example59_s3_grading(const Field& F) {
    Grading G;
    G.algebra = algebra_example59(F);
    G.group = group_s3();
    G.components.emplace(0, Subspace::span(F, {unit_vec(4, 0)}, 4));
    G.components.emplace(1, Subspace::span(F, {unit_vec(4, 1)}, 4));
    G.components.emplace(2, Subspace::span(F, {unit_vec(4, 2)}, 4));
    G.components.emplace(3, Subspace::span(F, {unit_vec(4, 3)}, 4));
    return G;
}

inline Grading example59_z4_grading(const Field& F) {
    Grading G;
    G.algebra = algebra_example59(F);
    G.group = cyclic_group(4);
    for (std::size_t i = 0; i < 4; ++i)
        G.components.emplace(i, Subspace::span(F, {unit_vec(4, i)}, 4));
    return G;
}

// Z/2-grading of the dual numbers: even part F1, odd part Fx.
inline Grading dual_numbers_z2_grading(const Field& F) {
    Grading G;
    G.algebra = algebra_dual_numbers(F);
    G.group = cyclic_group(2);
    G.components.emplace(0, Subspace::span(F, {unit_vec(2, 0)}, 2));
    G.components.emplace(1, Subspace::span(F, {unit_vec(2, 1)}, 2));
    return G;
}

// Everything in the identity component.
inline Grading trivial_grading(const Field& F, const FinAlgebra& A) {
    Grading G;
    G.algebra = A;
    G.group = cyclic_group(1);
    G.components.emplace(0, Subspace::full(A.dim));
    return G;
}

// --------------------------------------------------------------------------
// Module structures on the dual numbers (the three canonical cases)
// --------------------------------------------------------------------------

inline ModuleStructure dual_numbers_trivial_action(const Field& F) {
    ModuleStructure z;
    z.algebra = algebra_dual_numbers(F);
    z.hopf = trivial_hopf(F);
    z.action = {Matrix::identity(2)};
    return z;
}

inline ModuleStructure dual_numbers_z2_action(const Field& F) {
    ModuleStructure z;
    z.algebra = algebra_dual_numbers(F);
    z.hopf = group_hopf(F, cyclic_group(2));
    Matrix c(2, 2);
    c.at(0, 0) = 1;
    c.at(1, 1) = F.reduce(Scalar(-1));
    z.action = {Matrix::identity(2), c};
    return z;
}

// c 1 = 1, c x = -x, v 1 = 0, v x = 1.
inline ModuleStructure dual_numbers_h4_action(const Field& F) {
    ModuleStructure z;
    z.algebra = algebra_dual_numbers(F);
    z.hopf = sweedler_hopf(F);
    Matrix c(2, 2), v(2, 2), cv(2, 2);
    c.at(0, 0) = 1;
    c.at(1, 1) = F.reduce(Scalar(-1));
    v.at(0, 1) = 1;
    cv = mat_mul(F, c, v);
    z.action = {Matrix::identity(2), c, v, cv};
    return z;
}

inline ModuleStructure trivial_action(const Field& F, const FinAlgebra& A) {
    ModuleStructure z;
    z.algebra = A;
    z.hopf = trivial_hopf(F);
    z.action = {Matrix::identity(A.dim)};
    return z;
}

// --------------------------------------------------------------------------
// Group actions on the dual numbers
// --------------------------------------------------------------------------

inline GroupAction dual_numbers_z2_group_action(const Field& F) {
    GroupAction ga;
    ga.algebra = algebra_dual_numbers(F);
    ga.group = cyclic_group(2);
    Matrix c(2, 2);
    c.at(0, 0) = 1;
    c.at(1, 1) = F.reduce(Scalar(-1));
    ga.images = {Matrix::identity(2), c};
    return ga;
}

// Z/4 acting through diag(1, r); r must have multiplicative order 4
// (e.g. 2 over F_5).
inline GroupAction dual_numbers_z4_group_action(const Field& F, const Scalar& r) {
    Matrix g(2, 2);
    g.at(0, 0) = 1;
    g.at(1, 1) = F.reduce(r);
    Matrix acc = Matrix::identity(2);
    GroupAction ga;
    ga.algebra = algebra_dual_numbers(F);
    ga.group = cyclic_group(4);
    for (std::size_t k = 0; k < 4; ++k) {
        ga.images.push_back(acc);
        acc = mat_mul(F, acc, g);
    }
    if (!mat_is_zero(F, mat_sub(F, acc, Matrix::identity(2))))
        throw PreconditionError("dual_numbers_z4_group_action: r must have order 4");
    for (std::size_t k = 1; k < 4; ++k)
        if (mat_is_zero(F, mat_sub(F, ga.images[k], Matrix::identity(2))))
            throw PreconditionError("dual_numbers_z4_group_action: r must have order 4");
    return ga;
}

// --------------------------------------------------------------------------
// Coactions
// --------------------------------------------------------------------------

// H coacting on itself via its comultiplication.
inline Coaction delta_coaction(const Field& F, const FinHopf& H) {
    const std::size_t n = H.dim();
    Coaction rho;
    rho.algebra = H.algebra;
    rho.hopf = H;
    rho.coeff.assign(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k) rho.coeff[b][a][k] = H.coalgebra.delta[a].at(b, k);
    return rho;
}

// rho(a) = a (x) 1_H.
inline Coaction trivial_coaction(const Field& F, const FinAlgebra& A, const FinHopf& H) {
    (void)F;
    Coaction rho;
    rho.algebra = A;
    rho.hopf = H;
    rho.coeff.assign(A.dim, std::vector<Vec>(A.dim, Vec(H.dim(), Scalar(0))));
    for (std::size_t a = 0; a < A.dim; ++a) rho.coeff[a][a] = H.unit();
    return rho;
}

// --------------------------------------------------------------------------
// Named catalog
// --------------------------------------------------------------------------

using BuiltinValue =
    std::variant<FinAlgebra, FinHopf, FiniteGroup, Grading, ModuleStructure, Coaction,
                 GroupAction>;

inline std::vector<std::string> builtin_names() {
    return {
        "dual-numbers", "m2", "example59",
        "z2", "z4", "s3",
        "fz2", "fz4", "fs3", "fz2-dual", "fz4-dual", "fs3-dual",
        "sweedler", "sweedler-dual",
        "m2-z2-grading", "example59-s3-grading", "example59-z4-grading",
        "dual-numbers-z2-grading", "dual-numbers-trivial-grading",
        "dual-numbers-trivial-action", "dual-numbers-z2-action", "dual-numbers-h4-action",
        "dual-numbers-z2-group-action", "dual-numbers-z4-group-action",
        "m2-z2-coaction", "m2-trivial-coaction",
        "fz2-delta-coaction", "fz4-delta-coaction", "h4-delta-coaction",
        "dual-h4-smash-algebra", "dual-h4-smash-coaction",
    };
}

inline BuiltinValue builtin(const Field& F, const std::string& name) {
    if (name == "dual-numbers") return algebra_dual_numbers(F);
    if (name == "m2") return algebra_m2(F);
    if (name == "example59") return algebra_example59(F);
    if (name == "z2") return cyclic_group(2);
    if (name == "z4") return cyclic_group(4);
    if (name == "s3") return group_s3();
    if (name == "fz2") return group_hopf(F, cyclic_group(2));
    if (name == "fz4") return group_hopf(F, cyclic_group(4));
    if (name == "fs3") return group_hopf(F, group_s3());
    if (name == "fz2-dual") return dual_hopf(F, group_hopf(F, cyclic_group(2)));
    if (name == "fz4-dual") return dual_hopf(F, group_hopf(F, cyclic_group(4)));
    if (name == "fs3-dual") return dual_hopf(F, group_hopf(F, group_s3()));
    if (name == "sweedler") return sweedler_hopf(F);
    if (name == "sweedler-dual") return dual_hopf(F, sweedler_hopf(F));
    if (name == "m2-z2-grading") return m2_z2_grading(F);
    if (name == "example59-s3-grading") return example59_s3_grading(F);
    if (name == "example59-z4-grading") return example59_z4_grading(F);
    if (name == "dual-numbers-z2-grading") return dual_numbers_z2_grading(F);
    if (name == "dual-numbers-trivial-grading")
        return trivial_grading(F, algebra_dual_numbers(F));
    if (name == "dual-numbers-trivial-action") return dual_numbers_trivial_action(F);
    if (name == "dual-numbers-z2-action") return dual_numbers_z2_action(F);
    if (name == "dual-numbers-h4-action") return dual_numbers_h4_action(F);
    if (name == "dual-numbers-z2-group-action") return dual_numbers_z2_group_action(F);
    if (name == "dual-numbers-z4-group-action") {
        if (F.is_rationals())
            throw PreconditionError("builtin: " + name + " needs a 4th root of unity");
        // smallest element of multiplicative order 4
        long p = F.characteristic();
        for (long r = 2; r < p; ++r) {
            Scalar s(r);
            if (F.eq(F.pow(s, 4), F.one()) && !F.eq(F.pow(s, 2), F.one()))
                return dual_numbers_z4_group_action(F, s);
        }
        throw PreconditionError("builtin: " + name + " needs a 4th root of unity");
    }
    if (name == "m2-z2-coaction") return grading_to_coaction(F, m2_z2_grading(F)).coaction;
    if (name == "m2-trivial-coaction")
        return trivial_coaction(F, algebra_m2(F), group_hopf(F, cyclic_group(2)));
    if (name == "fz2-delta-coaction") return delta_coaction(F, group_hopf(F, cyclic_group(2)));
    if (name == "fz4-delta-coaction") return delta_coaction(F, group_hopf(F, cyclic_group(4)));
    if (name == "h4-delta-coaction") return delta_coaction(F, sweedler_hopf(F));
    if (name == "dual-h4-smash-algebra")
        return smash_product(F, dual_numbers_h4_action(F)).first;
    if (name == "dual-h4-smash-coaction")
        return smash_product(F, dual_numbers_h4_action(F)).second;
    throw ParseError("builtin: unknown name '" + name + "'");
}

}  // namespace hopfeq

#endif
