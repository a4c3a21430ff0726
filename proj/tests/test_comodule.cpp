#include <catch2/catch_amalgamated.hpp>

#include "hopfeq/builtins.hpp"

using namespace hopfeq;

namespace {
const Field Q{FieldSpec::Q()};
const Field F5{FieldSpec::Fp(5)};
}  // namespace

TEST_CASE("check_comodule_algebra on catalog coactions") {
    auto m2 = grading_to_coaction(Q, m2_z2_grading(Q)).coaction;
    auto rep = check_comodule_algebra(Q, m2);
    CHECK(rep.ok());
    CHECK(rep.unital);

    for (const std::string name : {"fz2-delta-coaction", "h4-delta-coaction"}) {
        auto rho = std::get<Coaction>(builtin(Q, name));
        auto r = check_comodule_algebra(Q, rho);
        INFO(name);
        CHECK(r.ok());
        CHECK(r.unital);
    }
}

TEST_CASE("corrupting any coefficient entry is detected") {
    auto rho = grading_to_coaction(Q, m2_z2_grading(Q)).coaction;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            for (std::size_t k = 0; k < 2; ++k) {
                Coaction bad = rho;
                bad.coeff[a][b][k] = Q.add(bad.coeff[a][b][k], Q.one());
                INFO("entry (" << a << "," << b << "," << k << ")");
                CHECK_FALSE(check_comodule_algebra(Q, bad).ok());
            }
}

TEST_CASE("a corrupted entry yields a localized multiplicativity witness") {
    auto rho = std::get<Coaction>(builtin(Q, "fz2-delta-coaction"));
    Coaction bad = rho;
    // rho(e_0) = e_0 (x) g_0 becomes e_0 (x) g_1
    std::swap(bad.coeff[0][0][0], bad.coeff[0][0][1]);
    auto rep = check_comodule_algebra(Q, bad);
    CHECK_FALSE(rep.ok());
    REQUIRE_FALSE(rep.base.failures.empty());
    bool mult_witness = false;
    for (const auto& f : rep.base.failures)
        if (f.law == "comodule-multiplicativity") mult_witness = true;
    CHECK(mult_witness);
}

TEST_CASE("grading_to_coaction produces a diagonal group-element tensor") {
    auto res = grading_to_coaction(Q, m2_z2_grading(Q));
    const Coaction& rho = res.coaction;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            if (a != b) {
                CHECK(vec_is_zero(Q, rho.coeff[a][b]));
            } else {
                CHECK(rho.coeff[a][a] == unit_vec(2, res.degrees[a]));
            }
        }
    CHECK(res.degrees == std::vector<std::size_t>{0, 0, 1, 1});

    auto triv = grading_to_coaction(Q, trivial_grading(Q, algebra_dual_numbers(Q)));
    for (std::size_t a = 0; a < 2; ++a) CHECK(triv.coaction.coeff[a][a] == unit_vec(1, 0));

    auto s3 = grading_to_coaction(Q, example59_s3_grading(Q));
    CHECK(s3.degrees == std::vector<std::size_t>{0, 1, 2, 3});  // id,(12),(23),(123)
}

TEST_CASE("dual module of a grading coaction matches the dual action") {
    auto G = m2_z2_grading(Q);
    auto res = grading_to_coaction(Q, G);
    auto induced = induced_dual_module(Q, res.coaction);
    auto direct = dual_action(Q, G);
    Matrix T = res.basis_change;
    Matrix Tinv = *mat_inverse(Q, T);
    REQUIRE(induced.action.size() == direct.action.size());
    for (std::size_t k = 0; k < induced.action.size(); ++k)
        CHECK(induced.action[k] == mat_mul(Q, mat_mul(Q, Tinv, direct.action[k]), T));
}

TEST_CASE("support coalgebra of grading coactions: group-like basis of size |supp|") {
    for (const std::string name :
         {"m2-z2-grading", "example59-s3-grading", "example59-z4-grading",
          "dual-numbers-z2-grading"}) {
        auto G = std::get<Grading>(builtin(Q, name));
        auto rho = grading_to_coaction(Q, G).coaction;
        auto sc = support_coalgebra(Q, rho);
        INFO(name);
        CHECK(sc.coalgebra.dim == support(G).size());
        // every basis vector of C is group-like in H
        for (std::size_t k = 0; k < sc.coalgebra.dim; ++k) {
            Vec c = sc.inclusion.col(k);
            Matrix d = rho.hopf.coalgebra.delta_of(Q, c);
            for (std::size_t i = 0; i < rho.hopf.dim(); ++i)
                for (std::size_t j = 0; j < rho.hopf.dim(); ++j)
                    CHECK(Q.eq(d.at(i, j), Q.mul(c[i], c[j])));
            CHECK(Q.eq(rho.hopf.coalgebra.counit_of(Q, c), Q.one()));
        }
        CHECK(check_coalgebra(Q, sc.coalgebra).ok);
    }
}

TEST_CASE("support coalgebra of Delta is all of H") {
    for (const std::string name : {"fz2-delta-coaction", "h4-delta-coaction"}) {
        auto rho = std::get<Coaction>(builtin(Q, name));
        auto sc = support_coalgebra(Q, rho);
        INFO(name);
        CHECK(sc.coalgebra.dim == rho.hopf.dim());
    }
}

TEST_CASE("support coalgebra of the zero algebra is zero") {
    Coaction rho;
    rho.algebra.field = Q.spec();
    rho.algebra.dim = 0;
    rho.hopf = group_hopf(Q, cyclic_group(2));
    auto sc = support_coalgebra(Q, rho);
    CHECK(sc.coalgebra.dim == 0);
}

TEST_CASE("induced dual module image dimensions") {
    auto m2 = grading_to_coaction(Q, m2_z2_grading(Q)).coaction;
    auto z = induced_dual_module(Q, m2);
    CHECK(check_module_algebra(Q, z).ok());
    CHECK(operator_span(Q, z.action).dim() == 2);

    auto triv = trivial_coaction(Q, algebra_m2(Q), group_hopf(Q, cyclic_group(2)));
    CHECK(operator_span(Q, induced_dual_module(Q, triv).action).dim() == 1);

    auto h4 = std::get<Coaction>(builtin(Q, "h4-delta-coaction"));
    CHECK(operator_span(Q, induced_dual_module(Q, h4).action).dim() == 4);
}

TEST_CASE("a coaction is support equivalent to itself with tau = id") {
    auto rho = grading_to_coaction(Q, m2_z2_grading(Q)).coaction;
    auto res = comodule_support_equiv(Q, rho, rho);
    CHECK(res.equivalent);
    REQUIRE(res.tau.has_value());
    CHECK(*res.tau == Matrix::identity(2));
}

TEST_CASE("example59 coactions are support equivalent; tau matches the listed bijection") {
    auto r1 = grading_to_coaction(Q, example59_s3_grading(Q)).coaction;
    auto r2 = grading_to_coaction(Q, example59_z4_grading(Q)).coaction;
    auto res = comodule_support_equiv(Q, r1, r2);
    CHECK(res.equivalent);
    REQUIRE(res.tau.has_value());
    // C1 basis: group elements id,(12),(23),(123) ascending; C2 basis: 0,1,2,3;
    // the identity matrix encodes id->0, (12)->1, (23)->2, (123)->3
    CHECK(*res.tau == Matrix::identity(4));
}

TEST_CASE("inequivalent coactions produce a separating dependency") {
    auto rho = grading_to_coaction(Q, m2_z2_grading(Q)).coaction;
    auto triv = trivial_coaction(Q, rho.algebra, rho.hopf);
    auto res = comodule_support_equiv(Q, rho, triv);
    CHECK_FALSE(res.equivalent);
    CHECK(res.separating_dependency.has_value());
}

TEST_CASE("coarser morphism onto the trivial coaction collapses to the unit") {
    auto rho = grading_to_coaction(Q, m2_z2_grading(Q)).coaction;
    auto triv = trivial_coaction(Q, rho.algebra, rho.hopf);
    auto down = coarser_morphism(Q, rho, triv);
    REQUIRE(down.has_value());
    CHECK(down->tau.rows == 1);
    for (std::size_t k = 0; k < down->tau.cols; ++k) CHECK(down->tau.at(0, k) == Scalar(1));
    CHECK_FALSE(coarser_morphism(Q, triv, rho).has_value());
}

TEST_CASE("mutually coarser in both directions iff support equivalent via identity") {
    auto r1 = grading_to_coaction(Q, example59_s3_grading(Q)).coaction;
    auto r2 = grading_to_coaction(Q, example59_z4_grading(Q)).coaction;
    CHECK(coarser_morphism(Q, r1, r2).has_value());
    CHECK(coarser_morphism(Q, r2, r1).has_value());
    CHECK(comodule_support_equiv(Q, r1, r2).equivalent);
}

TEST_CASE("support equivalence transfers to the induced dual modules") {
    auto r1 = grading_to_coaction(Q, example59_s3_grading(Q)).coaction;
    auto r2 = grading_to_coaction(Q, example59_z4_grading(Q)).coaction;
    auto z1 = induced_dual_module(Q, r1);
    auto z2 = induced_dual_module(Q, r2);
    CHECK(support_equiv_modules(Q, z1, z2).equivalent);
}

TEST_CASE("universal Hopf presentation of the M2 grading coaction") {
    auto rho = grading_to_coaction(Q, m2_z2_grading(Q)).coaction;
    auto pres = universal_hopf_presentation(Q, rho);
    REQUIRE(pres.generators.size() == 2);  // the two group elements
    CHECK(pres.generators[0].alpha == 0);
    CHECK(pres.generators[0].beta == 0);
    CHECK(pres.antipode_closed);
    REQUIRE(pres.unit_grouplike.has_value());
    CHECK(*pres.unit_grouplike == 0);
    CHECK_FALSE(pres.relations.empty());
    for (const auto& rel : pres.relations)
        CHECK(Q.is_zero(relation_counit_value(Q, pres, rel)));
}

TEST_CASE("trivial coaction: one generator forced to be the unit group-like") {
    auto rho = trivial_coaction(Q, algebra_dual_numbers(Q), group_hopf(Q, cyclic_group(1)));
    auto pres = universal_hopf_presentation(Q, rho);
    REQUIRE(pres.generators.size() == 1);
    REQUIRE(pres.unit_grouplike.has_value());
    // the only surviving relation is x0 x0 - x0
    REQUIRE(pres.relations.size() == 1);
    REQUIRE(pres.relations[0].terms.size() == 2);
    CHECK(pres.relations[0].terms[0].word == std::vector<std::size_t>{0});
    CHECK(pres.relations[0].terms[0].coef == Scalar(-1));
    CHECK(pres.relations[0].terms[1].word == std::vector<std::size_t>{0, 0});
    CHECK(pres.relations[0].terms[1].coef == Scalar(1));
}

TEST_CASE("presentation of the dual-numbers H4 comodule: counit kills every relation") {
    auto rho = module_to_comodule(Q, dual_numbers_h4_action(Q));
    CHECK(check_comodule_algebra(Q, rho).ok());
    auto pres = universal_hopf_presentation(Q, rho);
    // pair family: (0,0),(0,1),(1,0),(1,1) with h_{10} = 0, so 3 independent
    CHECK(pres.generators.size() == 3);
    CHECK(pres.lin_deps.size() == 1);
    CHECK_FALSE(pres.relations.empty());
    for (const auto& rel : pres.relations)
        CHECK(Q.is_zero(relation_counit_value(Q, pres, rel)));
}

TEST_CASE("formal coideal identity holds over catalog algebras") {
    CHECK(coideal_identity_check(Q, algebra_dual_numbers(Q)));
    CHECK(coideal_identity_check(Q, algebra_m2(Q)));
    CHECK(coideal_identity_check(Q, algebra_example59(Q)));
    CHECK(coideal_identity_check(F5, algebra_m2(F5)));
}

TEST_CASE("detect_grading round-trips every catalog grading") {
    for (const std::string name :
         {"m2-z2-grading", "example59-s3-grading", "example59-z4-grading",
          "dual-numbers-z2-grading", "dual-numbers-trivial-grading"}) {
        auto G = std::get<Grading>(builtin(Q, name));
        auto res = grading_to_coaction(Q, G);
        auto detected = detect_grading(Q, res.coaction);
        INFO(name);
        REQUIRE(detected.has_value());
        CHECK(detected->components.size() == support(G).size());
        // every detected component is the coordinate block of the matching
        // group element in the homogeneous basis
        for (const auto& [g, comp] : detected->components) {
            // g must be a group element: a unit vector at index gi
            std::size_t gi = res.coaction.hopf.dim();
            for (std::size_t k = 0; k < res.coaction.hopf.dim(); ++k)
                if (g == unit_vec(res.coaction.hopf.dim(), k)) gi = k;
            REQUIRE(gi < res.coaction.hopf.dim());
            std::vector<Vec> expected_rows;
            for (std::size_t i = 0; i < res.degrees.size(); ++i)
                if (res.degrees[i] == gi) expected_rows.push_back(unit_vec(G.algebra.dim, i));
            CHECK(comp.equals(Subspace::span(Q, expected_rows, G.algebra.dim)));
        }
    }
}

TEST_CASE("detect_grading refuses the Sweedler comultiplication") {
    auto rho = std::get<Coaction>(builtin(Q, "h4-delta-coaction"));
    CHECK_FALSE(detect_grading(Q, rho).has_value());
}

TEST_CASE("detect_grading on the example59 Z/4 coaction reports abelianization Z^2") {
    auto rho = grading_to_coaction(Q, example59_z4_grading(Q)).coaction;
    auto detected = detect_grading(Q, rho);
    REQUIRE(detected.has_value());
    auto inv = detected->presentation.abelianization;
    REQUIRE(inv.size() == 4);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 1);
    CHECK(inv[2] == 0);
    CHECK(inv[3] == 0);
}

TEST_CASE("can map of H coacting on itself is bijective") {
    for (const std::string name :
         {"fz2-delta-coaction", "fz4-delta-coaction", "h4-delta-coaction"}) {
        auto rho = std::get<Coaction>(builtin(Q, name));
        auto rep = can_map_comodule(Q, rho);
        INFO(name);
        CHECK(rep.coinvariant_dim == 1);
        CHECK(rep.injective);
        CHECK(rep.surjective);
        CHECK(rep.hopf_galois);
    }
}

TEST_CASE("can map of the smash product coaction is bijective") {
    auto rho = std::get<Coaction>(builtin(Q, "dual-h4-smash-coaction"));
    auto rep = can_map_comodule(Q, rho);
    CHECK(rep.coinvariant_dim == 2);  // coinvariants are A itself
    CHECK(rep.injective);
    CHECK(rep.surjective);
}

TEST_CASE("trivial coaction on M2 is not Hopf-Galois") {
    auto rho = trivial_coaction(Q, algebra_m2(Q), group_hopf(Q, cyclic_group(2)));
    auto rep = can_map_comodule(Q, rho);
    CHECK_FALSE(rep.surjective);
}
