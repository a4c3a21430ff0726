#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfeq/field.hpp"
#include "hopfeq/linalg.hpp"
#include "hopfeq/smith.hpp"

using namespace hopfeq;

namespace {

Matrix make(std::size_t r, std::size_t c, std::vector<long> entries) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < entries.size(); ++i) m.a[i] = Scalar(entries[i]);
    return m;
}

Vec vec(std::vector<long> entries) {
    Vec v;
    for (long e : entries) v.emplace_back(e);
    return v;
}

// Random small matrix with entries in [-3, 3].
Matrix random_matrix(std::mt19937& rng, const Field& F, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> d(-3, 3);
    Matrix m(r, c);
    for (auto& s : m.a) s = F.reduce(Scalar(d(rng)));
    return m;
}

mpz_class int_det(const IntMatrix& m) {
    REQUIRE(m.rows == m.cols);
    // cofactor expansion; fine for the tiny sizes used here
    if (m.rows == 1) return m.at(0, 0);
    mpz_class det = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(m.rows - 1, m.cols - 1);
        for (std::size_t i = 1; i < m.rows; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < m.cols; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        mpz_class term = m.at(0, j) * int_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

}  // namespace

TEST_CASE("field arithmetic over Q") {
    Field F{FieldSpec::Q()};
    CHECK(F.add(Scalar(1, 2), Scalar(1, 3)) == Scalar(5, 6));
    CHECK(F.mul(Scalar(-2, 3), Scalar(3, 4)) == Scalar(-1, 2));
    CHECK(F.inv(Scalar(-2, 5)) == Scalar(-5, 2));
    CHECK(F.parse("-1/2") == Scalar(-1, 2));
    CHECK(F.to_string(Scalar(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(F.inv(Scalar(0)), PreconditionError);
}

TEST_CASE("field arithmetic over F5") {
    Field F{FieldSpec::Fp(5)};
    CHECK(F.reduce(Scalar(7)) == Scalar(2));
    CHECK(F.reduce(Scalar(-1)) == Scalar(4));
    CHECK(F.parse("-1/2") == Scalar(2));  // -1 * inv(2) = 4*3 = 12 = 2
    CHECK(F.inv(Scalar(3)) == Scalar(2));
    CHECK(F.pow(Scalar(2), 4) == Scalar(1));
    CHECK_THROWS_AS(FieldSpec::Fp(6), PreconditionError);
}

TEST_CASE("rref basics") {
    Field F{FieldSpec::Q()};

    auto id2 = Matrix::identity(2);
    auto r = rref(F, id2);
    CHECK(r.m == id2);
    CHECK(r.rank == 2);

    auto z = Matrix(3, 3);
    auto rz = rref(F, z);
    CHECK(rz.rank == 0);
    CHECK(rz.m == z);

    // rows (1,2),(2,4): hand elimination gives single row (1,2)
    auto m = make(2, 2, {1, 2, 2, 4});
    auto rm = rref(F, m);
    CHECK(rm.rank == 1);
    CHECK(rm.m.at(0, 0) == Scalar(1));
    CHECK(rm.m.at(0, 1) == Scalar(2));
    CHECK(rm.m.at(1, 0) == Scalar(0));
    CHECK(rm.m.at(1, 1) == Scalar(0));
}

TEST_CASE("span canonicalization") {
    Field F{FieldSpec::Q()};

    CHECK(Subspace::span(F, {}, 3).dim() == 0);

    auto full = Subspace::span(F, {vec({1, 0}), vec({1, 1})}, 2);
    CHECK(full.equals(Subspace::full(2)));

    auto s = Subspace::span(F, {vec({2, 4})}, 2);
    CHECK(s.dim() == 1);
    CHECK(s.basis_vector(0) == vec({1, 2}));

    CHECK_THROWS_AS(Subspace::span(F, {vec({1, 2, 3})}, 2), PreconditionError);
}

TEST_CASE("span invariance under row operations") {
    std::mt19937 rng(12345);
    for (FieldSpec spec : {FieldSpec::Q(), FieldSpec::Fp(5)}) {
        Field F{spec};
        for (int iter = 0; iter < 50; ++iter) {
            Matrix m = random_matrix(rng, F, 3, 4);
            auto base = Subspace::from_rows(F, m);

            Matrix scaled = m;  // scale a row by a nonzero constant
            for (std::size_t j = 0; j < m.cols; ++j)
                scaled.at(1, j) = F.mul(Scalar(2), scaled.at(1, j));
            CHECK(Subspace::from_rows(F, scaled).equals(base));

            Matrix permuted = m;  // swap two rows
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(permuted.at(0, j), permuted.at(2, j));
            CHECK(Subspace::from_rows(F, permuted).equals(base));

            Matrix sheared = m;  // add one row to another
            for (std::size_t j = 0; j < m.cols; ++j)
                sheared.at(0, j) = F.add(sheared.at(0, j), sheared.at(1, j));
            CHECK(Subspace::from_rows(F, sheared).equals(base));
        }
    }
}

TEST_CASE("subspace containment") {
    Field F{FieldSpec::Q()};

    auto zero = Subspace::zero(4);
    auto any = Subspace::span(F, {vec({1, 2, 3, 4}), vec({0, 1, 0, 1})}, 4);
    CHECK(subspace_contains(F, zero, any));
    CHECK_FALSE(subspace_contains(F, any, zero));

    // span{E11, E22} inside span{E11, E12, E22} in End(F^2) coordinates
    auto diag = Subspace::span(F, {vec({1, 0, 0, 0}), vec({0, 0, 0, 1})}, 4);
    auto upper = Subspace::span(F, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 0, 1})}, 4);
    CHECK(subspace_contains(F, diag, upper));
    CHECK_FALSE(subspace_contains(F, upper, diag));

    auto full = Subspace::full(4);
    CHECK_FALSE(subspace_equal(F, full, any));
    CHECK(subspace_equal(F, any, any));

    CHECK_THROWS_AS(subspace_contains(F, zero, Subspace::zero(3)), PreconditionError);
}

TEST_CASE("containment is a partial order, equality is two-sided containment") {
    std::mt19937 rng(777);
    Field F{FieldSpec::Q()};
    for (int iter = 0; iter < 30; ++iter) {
        auto a = Subspace::from_rows(F, random_matrix(rng, F, 2, 4));
        auto b = Subspace::from_rows(F, random_matrix(rng, F, 3, 4));
        auto c = Subspace::sum(F, a, b);
        CHECK(subspace_contains(F, a, a));
        CHECK(subspace_contains(F, a, c));
        CHECK(subspace_contains(F, b, c));
        if (subspace_contains(F, a, b) && subspace_contains(F, b, a))
            CHECK(subspace_equal(F, a, b));
        auto inter = Subspace::intersect(F, a, b);
        CHECK(subspace_contains(F, inter, a));
        CHECK(subspace_contains(F, inter, b));
        // dim(a) + dim(b) = dim(a+b) + dim(a∩b)
        CHECK(a.dim() + b.dim() == c.dim() + inter.dim());
    }
}

TEST_CASE("solve and kernel") {
    Field F{FieldSpec::Q()};

    auto sol = solve(F, Matrix::identity(3), vec({1, 2, 3}));
    REQUIRE(sol.has_value());
    CHECK(*sol == vec({1, 2, 3}));

    CHECK(kernel(F, Matrix(2, 2)).equals(Subspace::full(2)));

    auto k = kernel(F, make(1, 2, {1, 1}));
    CHECK(k.dim() == 1);
    // canonical basis vector of span{(1,-1)}
    CHECK(k.basis_vector(0) == vec({1, -1}));

    auto none = solve(F, make(2, 1, {1, 1}), vec({1, 2}));
    CHECK_FALSE(none.has_value());
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(99);
    for (FieldSpec spec : {FieldSpec::Q(), FieldSpec::Fp(7)}) {
        Field F{spec};
        for (int iter = 0; iter < 40; ++iter) {
            std::uniform_int_distribution<std::size_t> dim(1, 5);
            Matrix m = random_matrix(rng, F, dim(rng), dim(rng));
            CHECK(rank(F, m) + kernel(F, m).dim() == m.cols);
        }
    }
}

TEST_CASE("matrix inverse") {
    Field F{FieldSpec::Q()};
    auto m = make(2, 2, {1, 2, 3, 4});
    auto inv = mat_inverse(F, m);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(F, m, *inv) == Matrix::identity(2));
    CHECK_FALSE(mat_inverse(F, make(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("rank accumulator matches batch rref") {
    std::mt19937 rng(4242);
    Field F{FieldSpec::Q()};
    for (int iter = 0; iter < 20; ++iter) {
        Matrix m = random_matrix(rng, F, 6, 4);
        RankAccumulator acc(F, 4);
        for (std::size_t i = 0; i < m.rows; ++i) acc.add_row(m.row(i));
        CHECK(acc.rank() == rank(F, m));
    }
}

TEST_CASE("smith normal form examples") {
    // diag(2,3) -> diag(1,6)
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    auto s = smith_normal_form(m);
    REQUIRE(s.diagonal.size() == 2);
    CHECK(s.diagonal[0] == 1);
    CHECK(s.diagonal[1] == 6);

    IntMatrix z(3, 3);
    auto sz = smith_normal_form(z);
    for (const auto& d : sz.diagonal) CHECK(d == 0);

    IntMatrix one(1, 1);
    one.at(0, 0) = 2;
    CHECK(smith_normal_form(one).diagonal[0] == 2);
}

TEST_CASE("smith normal form properties on random integer matrices") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int iter = 0; iter < 60; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        IntMatrix m(dim(rng), dim(rng));
        for (auto& e : m.a) e = d(rng);
        auto s = smith_normal_form(m);

        // U*A*V equals the diagonal form
        IntMatrix prod = int_mat_mul(int_mat_mul(s.U, m), s.V);
        for (std::size_t i = 0; i < prod.rows; ++i)
            for (std::size_t j = 0; j < prod.cols; ++j) {
                mpz_class expect = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : 0;
                CHECK(prod.at(i, j) == expect);
            }

        // divisibility chain, nonnegative entries
        for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] >= 0);
            if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
            else CHECK(s.diagonal[i + 1] == 0);
        }

        // transforms are unimodular
        CHECK(abs(int_det(s.U)) == 1);
        CHECK(abs(int_det(s.V)) == 1);

        // |det| equals product of diagonal for square input
        if (m.rows == m.cols) {
            mpz_class prod_diag = 1;
            for (const auto& di : s.diagonal) prod_diag *= di;
            CHECK(prod_diag == abs(int_det(m)));
        }
    }
}

TEST_CASE("abelian invariants") {
    // single relation x+y-z over three generators: quotient is Z^2
    IntMatrix rel(1, 3);
    rel.at(0, 0) = 1;
    rel.at(0, 1) = 1;
    rel.at(0, 2) = -1;
    auto inv = abelian_invariants(rel, 3);
    REQUIRE(inv.size() == 3);
    CHECK(inv[0] == 1);
    CHECK(inv[1] == 0);
    CHECK(inv[2] == 0);
}
