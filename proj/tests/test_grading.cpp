#include <catch2/catch_amalgamated.hpp>

#include "hopfeq/builtins.hpp"

using namespace hopfeq;

namespace {
const Field Q{FieldSpec::Q()};
const Field F5{FieldSpec::Fp(5)};

Matrix diag2(const Field& F, long a, long b) {
    Matrix m(2, 2);
    m.at(0, 0) = F.reduce(Scalar(a));
    m.at(1, 1) = F.reduce(Scalar(b));
    return m;
}
}  // namespace

TEST_CASE("coset enumeration on known presentations") {
    // <a | a^2>
    CHECK(CosetEnumerator(1, {{1, 1}}).enumerate() == 2);
    // <a | a> is trivial
    CHECK(CosetEnumerator(1, {{1}}).enumerate() == 1);
    // <a | a^6>
    CHECK(CosetEnumerator(1, {{1, 1, 1, 1, 1, 1}}).enumerate() == 6);
    // S3 = <a, b | a^2, b^2, (ab)^3>
    CHECK(CosetEnumerator(2, {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}}).enumerate() == 6);
    // Q8 = <a, b | a^4, a^2 b^-2, b^-1 a b a>
    CHECK(CosetEnumerator(2, {{1, 1, 1, 1}, {1, 1, -2, -2}, {-2, 1, 2, 1}}).enumerate() == 8);
    // free group of rank 2: budget exhausted
    CHECK_FALSE(CosetEnumerator(2, {}).enumerate(200).has_value());
}

TEST_CASE("check_grading accepts the catalog and rejects a reassignment") {
    CHECK(check_grading(Q, m2_z2_grading(Q)).ok);
    CHECK(check_grading(Q, example59_s3_grading(Q)).ok);
    CHECK(check_grading(Q, example59_z4_grading(Q)).ok);

    // swap the components at (12) and (23): now Fa sits at (23) and Fb at
    // (12), so Fb*Fa = 0 is fine but Fa*Fb = Fab must land at (23)(12)=(132)
    // whose component is zero
    Grading bad = example59_s3_grading(Q);
    std::swap(bad.components.at(1), bad.components.at(2));
    auto rep = check_grading(Q, bad);
    CHECK_FALSE(rep.ok);
    bool witnessed = false;
    for (const auto& f : rep.failures)
        if (f.law == "grading-axiom" && f.witness == std::vector<std::size_t>{2, 1})
            witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("support") {
    CHECK(support(m2_z2_grading(Q)) == std::vector<std::size_t>{0, 1});
    CHECK(support(trivial_grading(Q, algebra_m2(Q))) == std::vector<std::size_t>{0});
    CHECK(support(example59_z4_grading(Q)) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("dual action of the M2 grading is the projection pair") {
    auto zeta = dual_action(Q, m2_z2_grading(Q));
    CHECK(check_module_algebra(Q, zeta).ok());
    Matrix diag_proj(4, 4);
    diag_proj.at(0, 0) = 1;
    diag_proj.at(3, 3) = 1;
    CHECK(zeta.action[0] == diag_proj);
    Matrix anti_proj(4, 4);
    anti_proj.at(1, 1) = 1;
    anti_proj.at(2, 2) = 1;
    CHECK(zeta.action[1] == anti_proj);
}

TEST_CASE("dual action of the trivial grading is the identity") {
    auto zeta = dual_action(Q, trivial_grading(Q, algebra_dual_numbers(Q)));
    CHECK(zeta.action.size() == 1);
    CHECK(zeta.action[0] == Matrix::identity(2));
}

TEST_CASE("both example59 dual actions span the diagonal operators") {
    Subspace diag4 = Subspace::span(
        Q,
        {vectorize(Matrix::identity(4)), [] {
             Matrix m(4, 4);
             m.at(1, 1) = 1;
             return vectorize(m);
         }(),
         [] {
             Matrix m(4, 4);
             m.at(2, 2) = 1;
             return vectorize(m);
         }(),
         [] {
             Matrix m(4, 4);
             m.at(3, 3) = 1;
             return vectorize(m);
         }()},
        16);
    auto s3span = operator_span(Q, dual_action(Q, example59_s3_grading(Q)).action);
    auto z4span = operator_span(Q, dual_action(Q, example59_z4_grading(Q)).action);
    CHECK(s3span.equals(diag4));
    CHECK(z4span.equals(diag4));
}

TEST_CASE("character action over Q for Z/2") {
    auto zeta = character_action(Q, dual_numbers_z2_grading(Q));
    CHECK(check_module_algebra(Q, zeta).ok());
    REQUIRE(zeta.action.size() == 2);
    // one character acts as the identity, the other as diag(1,-1)
    bool has_id = false, has_sign = false;
    for (const auto& m : zeta.action) {
        if (m == Matrix::identity(2)) has_id = true;
        if (m == diag2(Q, 1, -1)) has_sign = true;
    }
    CHECK(has_id);
    CHECK(has_sign);
    // the trivial character is the group identity of the character group
    CHECK(zeta.action[zeta.hopf.algebra.unit ? 0 : 0].rows == 2);
}

TEST_CASE("character action span equals dual action span (Z/4 over F5)") {
    Grading G = example59_z4_grading(F5);
    auto chi = character_action(F5, G, Scalar(2));  // 2 has order 4 in F5*
    auto dual = dual_action(F5, G);
    CHECK(operator_span(F5, chi.action).equals(operator_span(F5, dual.action)));
    CHECK(check_module_algebra(F5, chi).ok());
}

TEST_CASE("character action requires roots of unity") {
    // Q has no primitive 4th root of unity
    CHECK_THROWS_AS(character_action(Q, example59_z4_grading(Q)), PreconditionError);
    // 3 also has order 4 in F5*, so it is accepted as a supplied root
    CHECK(check_module_algebra(F5, character_action(F5, example59_z4_grading(F5), Scalar(3)))
              .ok());
}

TEST_CASE("supplied primitive root is validated") {
    // 4 has order 2 in F5*, not 4
    CHECK_THROWS_AS(character_action(F5, example59_z4_grading(F5), Scalar(4)),
                    PreconditionError);
}

TEST_CASE("example59 gradings are equivalent via the identity") {
    auto res = grading_equivalent(Q, example59_s3_grading(Q), example59_z4_grading(Q));
    CHECK(res.equivalent);
    // id -> 0, (12) -> 1, (23) -> 2, (123) -> 3
    std::map<std::size_t, std::size_t> expect{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    CHECK(res.support_bijection == expect);
}

TEST_CASE("grading is equivalent to itself, also through a nontrivial automorphism") {
    auto G = dual_numbers_z2_grading(Q);
    CHECK(grading_equivalent(Q, G, G).equivalent);
    Matrix phi = diag2(Q, 1, 2);  // x -> 2x is an algebra automorphism
    auto res = grading_equivalent(Q, G, G, phi);
    CHECK(res.equivalent);
    auto res_inv = grading_equivalent(Q, G, G, *mat_inverse(Q, phi));
    CHECK(res_inv.equivalent);
}

TEST_CASE("M2 Z/2 grading is not equivalent to the trivial grading") {
    auto res = grading_equivalent(Q, m2_z2_grading(Q), trivial_grading(Q, algebra_m2(Q)));
    CHECK_FALSE(res.equivalent);
    CHECK(res.separating_operator.has_value());
}

TEST_CASE("a non-isomorphism is a precondition error, not a false") {
    Matrix bad(4, 4);  // zero map
    CHECK_THROWS_AS(grading_equivalent(Q, m2_z2_grading(Q), m2_z2_grading(Q), bad),
                    PreconditionError);
}

TEST_CASE("finer: every grading refines the trivial one") {
    auto m2 = m2_z2_grading(Q);
    auto triv = trivial_grading(Q, algebra_m2(Q));
    CHECK(grading_finer(Q, m2, triv));
    CHECK_FALSE(grading_finer(Q, triv, m2));
    CHECK(grading_finer(Q, m2, m2));
}

TEST_CASE("finer is a preorder and two-sided finer means equivalent") {
    auto s3 = example59_s3_grading(Q);
    auto z4 = example59_z4_grading(Q);
    auto triv = trivial_grading(Q, algebra_example59(Q));
    // reflexivity
    for (const auto& g : {s3, z4, triv}) CHECK(grading_finer(Q, g, g));
    // transitivity chain: s3 finer than z4 finer than trivial
    CHECK(grading_finer(Q, s3, z4));
    CHECK(grading_finer(Q, z4, triv));
    CHECK(grading_finer(Q, s3, triv));
    // two-sided finer <=> equivalent via identity
    CHECK(grading_finer(Q, z4, s3));
    CHECK(grading_equivalent(Q, s3, z4).equivalent);
    CHECK_FALSE(grading_finer(Q, triv, z4));
}

TEST_CASE("universal group of the M2 Z/2 grading") {
    auto pres = universal_group(Q, m2_z2_grading(Q));
    REQUIRE(pres.generator_names.size() == 2);
    // relations: [0][0][0]^-1, [0][1][1]^-1, [1][0][1]^-1, [1][1][0]^-1
    CHECK(pres.relations.size() == 4);
    // oracle: bounded coset enumeration gives order 2
    CHECK(presented_group_order(pres) == 2);
    // oracle: SNF of the abelianized relations gives Z/2
    REQUIRE(pres.abelianization.size() == 2);
    CHECK(pres.abelianization[0] == 1);
    CHECK(pres.abelianization[1] == 2);
}

TEST_CASE("universal group of a trivial grading is trivial") {
    auto pres = universal_group(Q, trivial_grading(Q, algebra_m2(Q)));
    REQUIRE(pres.generator_names.size() == 1);
    CHECK(presented_group_order(pres) == 1);
}

TEST_CASE("universal group of the example59 Z/4 grading is free of rank 2") {
    auto pres = universal_group(Q, example59_z4_grading(Q));
    REQUIRE(pres.generator_names.size() == 4);
    // oracle (enumerate nonzero component products): unit relations plus
    // [1][2][3]^-1; the SNF oracle then gives invariants (1,1,0,0), i.e. the
    // abelianization is Z^2, and the enumeration cannot close (infinite group)
    REQUIRE(pres.abelianization.size() == 4);
    CHECK(pres.abelianization[0] == 1);
    CHECK(pres.abelianization[1] == 1);
    CHECK(pres.abelianization[2] == 0);
    CHECK(pres.abelianization[3] == 0);
    CHECK_FALSE(presented_group_order(pres, 2000).has_value());
}

TEST_CASE("abelianization is invariant under support relabeling of equivalent gradings") {
    auto p1 = universal_group(Q, example59_s3_grading(Q));
    auto p2 = universal_group(Q, example59_z4_grading(Q));
    CHECK(p1.abelianization == p2.abelianization);
}

TEST_CASE("verify_regrading on the M2 grading") {
    auto G = m2_z2_grading(Q);
    std::map<std::size_t, std::size_t> to_z2{{0, 0}, {1, 1}};
    auto ok = verify_regrading(Q, G, cyclic_group(2), to_z2);
    CHECK(ok.relations_hold);
    CHECK(ok.regrading_valid);
    CHECK(ok.injective_on_support);

    // collapsing onto the trivial group: a homomorphism exists and the merged
    // decomposition is still a grading, but injectivity on the support fails
    std::map<std::size_t, std::size_t> to_triv{{0, 0}, {1, 0}};
    auto collapsed = verify_regrading(Q, G, cyclic_group(1), to_triv);
    CHECK(collapsed.relations_hold);
    CHECK(collapsed.regrading_valid);
    CHECK_FALSE(collapsed.injective_on_support);
}

TEST_CASE("verify_regrading example59 onto Z/4 via the listed bijection") {
    auto G = example59_s3_grading(Q);
    std::map<std::size_t, std::size_t> bij{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    auto rep = verify_regrading(Q, G, cyclic_group(4), bij);
    CHECK(rep.relations_hold);
    CHECK(rep.regrading_valid);
    CHECK(rep.injective_on_support);
}

TEST_CASE("verify_regrading rejects a wrong relabeling") {
    // sending (12) and (23) to the same Z/4 element but (123) elsewhere
    // violates the product relation [1][2]=[3]
    auto G = example59_s3_grading(Q);
    std::map<std::size_t, std::size_t> wrong{{0, 0}, {1, 1}, {2, 1}, {3, 3}};
    auto rep = verify_regrading(Q, G, cyclic_group(4), wrong);
    CHECK_FALSE(rep.relations_hold);
}
