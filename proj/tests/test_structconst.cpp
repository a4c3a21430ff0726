#include <catch2/catch_amalgamated.hpp>

#include "hopfeq/builtins.hpp"

using namespace hopfeq;

namespace {
const Field Q{FieldSpec::Q()};
const Field F5{FieldSpec::Fp(5)};

Vec vec(std::vector<long> entries) {
    Vec v;
    for (long e : entries) v.emplace_back(e);
    return v;
}
}  // namespace

TEST_CASE("check_algebra on the catalog") {
    auto m2 = check_algebra(Q, algebra_m2(Q), true);
    CHECK(m2.ok());
    CHECK(m2.associative);
    REQUIRE(m2.unit.has_value());
    CHECK(*m2.unit == vec({1, 0, 0, 1}));

    auto dn = check_algebra(Q, algebra_dual_numbers(Q), true);
    CHECK(dn.ok());
    CHECK(dn.associative);
    CHECK(dn.unital);

    auto ex = check_algebra(Q, algebra_example59(Q), true);
    CHECK(ex.ok());
    CHECK(ex.associative);
    CHECK(ex.unital);
    // ba = 0 while ab is a basis vector
    const FinAlgebra A = algebra_example59(Q);
    CHECK(vec_is_zero(Q, A.product(Q, unit_vec(4, 2), unit_vec(4, 1))));
    CHECK(A.product(Q, unit_vec(4, 1), unit_vec(4, 2)) == unit_vec(4, 3));
}

TEST_CASE("check_algebra detects a broken associativity") {
    FinAlgebra A = algebra_m2(Q);
    A.mult[1][2][0] = Scalar(2);  // e12*e21 = 2*e11 breaks associativity
    auto rep = check_algebra(Q, A, true);
    CHECK_FALSE(rep.associative);
    REQUIRE_FALSE(rep.base.failures.empty());
    CHECK(rep.base.failures.front().law == "associativity");
}

TEST_CASE("algebra without unit is certified unit-free") {
    // one-dimensional algebra with zero multiplication
    FinAlgebra A;
    A.field = Q.spec();
    A.dim = 1;
    A.basis_names = {"n"};
    A.mult.assign(1, std::vector<Vec>(1, Vec(1, Scalar(0))));
    auto rep = check_algebra(Q, A, true);
    CHECK(rep.ok());
    CHECK_FALSE(rep.unital);
}

TEST_CASE("group algebra and Sweedler Hopf axioms") {
    for (const Field& F : {Q, F5}) {
        auto fz2 = group_hopf(F, cyclic_group(2));
        CHECK(check_hopf(F, fz2).ok());
        auto h4 = sweedler_hopf(F);
        CHECK(check_hopf(F, h4).ok());
        auto fs3 = group_hopf(F, group_s3());
        CHECK(check_hopf(F, fs3).ok());
    }
}

TEST_CASE("corrupted antipode is localized") {
    FinHopf H = sweedler_hopf(Q);
    // S(v) = v instead of -cv
    for (std::size_t i = 0; i < 4; ++i) H.antipode.at(i, 2) = 0;
    H.antipode.at(2, 2) = 1;
    auto rep = check_hopf(Q, H);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& f : rep.base.failures)
        if ((f.law == "antipode-left" || f.law == "antipode-right") &&
            f.witness == std::vector<std::size_t>{2})
            found = true;
    CHECK(found);
}

TEST_CASE("group table checker") {
    CHECK(check_group(cyclic_group(4)).ok);
    CHECK(check_group(group_s3()).ok);
    FiniteGroup bad = cyclic_group(3);
    bad.table[1][1] = 1;  // not a Latin square / breaks associativity
    CHECK_FALSE(check_group(bad).ok);
}

TEST_CASE("dual Hopf of a group algebra") {
    auto fz2 = group_hopf(Q, cyclic_group(2));
    auto dual = dual_hopf(Q, fz2);
    CHECK(check_hopf(Q, dual).ok());
    // pointwise products on the dual basis: h_g h_g' = delta h_g
    CHECK(dual.algebra.mult[0][0] == vec({1, 0}));
    CHECK(dual.algebra.mult[0][1] == vec({0, 0}));
    CHECK(dual.algebra.mult[1][1] == vec({0, 1}));
    // Delta h_0 = h_0 (x) h_0 + h_1 (x) h_1 over Z/2
    CHECK(dual.coalgebra.delta[0].at(0, 0) == Scalar(1));
    CHECK(dual.coalgebra.delta[0].at(1, 1) == Scalar(1));
    CHECK(dual.coalgebra.delta[0].at(0, 1) == Scalar(0));
    CHECK(dual.coalgebra.delta[1].at(0, 1) == Scalar(1));
    CHECK(dual.coalgebra.delta[1].at(1, 0) == Scalar(1));
}

TEST_CASE("double dual is the identity on the catalog") {
    for (const std::string name : {"fz2", "fz4", "fs3", "sweedler"}) {
        auto H = std::get<FinHopf>(builtin(Q, name));
        auto dd = dual_hopf(Q, dual_hopf(Q, H));
        CHECK(dd.algebra.mult == H.algebra.mult);
        CHECK(dd.algebra.unit == H.algebra.unit);
        CHECK(dd.coalgebra.delta == H.coalgebra.delta);
        CHECK(dd.coalgebra.counit == H.coalgebra.counit);
        CHECK(dd.antipode == H.antipode);
    }
}

TEST_CASE("sweedler dual passes the axioms") {
    auto h4d = dual_hopf(Q, sweedler_hopf(Q));
    CHECK(check_hopf(Q, h4d).ok());
}

TEST_CASE("grouplikes of group algebras") {
    for (const Field& F : {Q, F5}) {
        for (const std::string name : {"fz2", "fz4", "fs3"}) {
            auto H = std::get<FinHopf>(builtin(F, name));
            auto gl = grouplikes(F, H);
            CHECK(gl.complete);
            CHECK(gl.elements.size() == H.dim());
            // each group element is group-like
            for (std::size_t k = 0; k < H.dim(); ++k) {
                bool found = false;
                for (const auto& x : gl.elements)
                    if (x == unit_vec(H.dim(), k)) found = true;
                CHECK(found);
            }
            CHECK(primitives(F, H).dim() == 0);
        }
    }
}

TEST_CASE("grouplikes of Sweedler H4: 1 and c") {
    auto H = sweedler_hopf(Q);
    auto gl = grouplikes(Q, H);
    CHECK(gl.complete);
    REQUIRE(gl.elements.size() == 2);
    CHECK(Subspace::span(Q, gl.elements, 4)
              .equals(Subspace::span(Q, {unit_vec(4, 0), unit_vec(4, 1)}, 4)));
    CHECK(primitives(Q, H).dim() == 0);
}

TEST_CASE("grouplikes of (FZ/2)* are the characters") {
    // oracle: exhaustive enumeration over F5 finds exactly h_0 + h_1 and
    // h_0 - h_1; the Q values below were frozen from it after verifying the
    // group-like equations directly over Q
    auto d5 = dual_hopf(F5, group_hopf(F5, cyclic_group(2)));
    auto g5 = grouplikes(F5, d5);
    CHECK(g5.method == "enumeration");
    REQUIRE(g5.elements.size() == 2);
    CHECK(g5.elements[0] == vec({1, 1}));
    CHECK(g5.elements[1] == vec({1, 4}));  // (1, -1) mod 5

    auto dq = dual_hopf(Q, group_hopf(Q, cyclic_group(2)));
    auto gq = grouplikes(Q, dq);
    CHECK(gq.method == "structured");
    CHECK(gq.complete);
    REQUIRE(gq.elements.size() == 2);
    CHECK(gq.elements[0] == vec({1, -1}));
    CHECK(gq.elements[1] == vec({1, 1}));
}

TEST_CASE("grouplikes of (FS3)* over Q: the two characters of S3") {
    auto d = dual_hopf(Q, group_hopf(Q, group_s3()));
    auto gl = grouplikes(Q, d);
    CHECK(gl.complete);
    REQUIRE(gl.elements.size() == 2);
    // sign character and trivial character (basis order: id,(12),(23),(123),(132),(13))
    CHECK(gl.elements[0] == vec({1, -1, -1, 1, 1, -1}));
    CHECK(gl.elements[1] == vec({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("grouplikes of H4 dual over Q match the 1-dim representations of H4") {
    auto d = dual_hopf(Q, sweedler_hopf(Q));
    auto gl = grouplikes(Q, d);
    CHECK(gl.complete);
    REQUIRE(gl.elements.size() == 2);
    CHECK(gl.elements[0] == vec({1, -1, 0, 0}));
    CHECK(gl.elements[1] == vec({1, 1, 0, 0}));
}

TEST_CASE("smash product: dual numbers # H4") {
    auto [S, rho] = smash_product(Q, dual_numbers_h4_action(Q));
    CHECK(S.dim == 8);
    auto arep = check_algebra(Q, S, true);
    CHECK(arep.ok());
    CHECK(arep.unital);
    auto crep = check_comodule_algebra(Q, rho);
    CHECK(crep.ok());
    CHECK(crep.unital);
}

TEST_CASE("smash with the trivial Hopf algebra is A itself") {
    auto A = algebra_m2(Q);
    auto [S, rho] = smash_product(Q, trivial_action(Q, A));
    CHECK(S.dim == A.dim);
    CHECK(S.mult == A.mult);
    auto crep = check_comodule_algebra(Q, rho);
    CHECK(crep.ok());
}

TEST_CASE("every builtin passes its checker") {
    for (const auto& name : builtin_names()) {
        Field F = Q;
        if (name == "dual-numbers-z4-group-action") F = F5;  // needs i in the field
        auto value = builtin(F, name);
        INFO("builtin " << name);
        if (std::holds_alternative<FinAlgebra>(value))
            CHECK(check_algebra(F, std::get<FinAlgebra>(value), true).ok());
        else if (std::holds_alternative<FinHopf>(value))
            CHECK(check_hopf(F, std::get<FinHopf>(value)).ok());
        else if (std::holds_alternative<FiniteGroup>(value))
            CHECK(check_group(std::get<FiniteGroup>(value)).ok);
        else if (std::holds_alternative<Grading>(value))
            CHECK(check_grading(F, std::get<Grading>(value)).ok);
        else if (std::holds_alternative<ModuleStructure>(value))
            CHECK(check_module_algebra(F, std::get<ModuleStructure>(value)).ok());
        else if (std::holds_alternative<Coaction>(value))
            CHECK(check_comodule_algebra(F, std::get<Coaction>(value)).ok());
        else if (std::holds_alternative<GroupAction>(value))
            CHECK(check_group_action(F, std::get<GroupAction>(value)).ok);
    }
    CHECK_THROWS_AS(builtin(Q, "no-such-structure"), ParseError);
}
