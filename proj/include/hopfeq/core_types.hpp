#ifndef HOPFEQ_CORE_TYPES_HPP
#define HOPFEQ_CORE_TYPES_HPP

#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "hopfeq/linalg.hpp"
#include "hopfeq/smith.hpp"

namespace hopfeq {

// Finite-dimensional algebra by structure constants; not necessarily
// associative or unital. mult[i][j] is the coordinate vector of b_i * b_j.
struct FinAlgebra {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<std::vector<Vec>> mult;
    std::optional<Vec> unit;

    Vec product(const Field& F, const Vec& x, const Vec& y) const {
        if (x.size() != dim || y.size() != dim) throw PreconditionError("product: bad shape");
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

    // Operator of left multiplication by x.
    Matrix left_mult(const Field& F, const Vec& x) const {
        Matrix m(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Vec col = product(F, x, unit_vec(dim, j));
            for (std::size_t k = 0; k < dim; ++k) m.at(k, j) = col[k];
        }
        return m;
    }

    bool shapes_ok() const {
        if (basis_names.size() != dim || mult.size() != dim) return false;
        for (const auto& row : mult) {
            if (row.size() != dim) return false;
            for (const auto& v : row)
                if (v.size() != dim) return false;
        }
        if (unit && unit->size() != dim) return false;
        return true;
    }
};

// Finite-dimensional coalgebra: delta[k] is the dim x dim matrix of
// coefficients of b_i (x) b_j in Delta(b_k); counit is a coordinate
// functional.
struct FinCoalgebra {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Matrix> delta;
    Vec counit;

    Matrix delta_of(const Field& F, const Vec& x) const {
        Matrix out(dim, dim);
        for (std::size_t k = 0; k < dim; ++k) {
            if (F.is_zero(x[k])) continue;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    out.at(i, j) = F.add(out.at(i, j), F.mul(x[k], delta[k].at(i, j)));
        }
        return out;
    }

    Scalar counit_of(const Field& F, const Vec& x) const {
        Scalar s = F.zero();
        for (std::size_t k = 0; k < dim; ++k) s = F.add(s, F.mul(x[k], counit[k]));
        return s;
    }

    bool shapes_ok() const {
        if (basis_names.size() != dim || delta.size() != dim || counit.size() != dim)
            return false;
        for (const auto& d : delta)
            if (d.rows != dim || d.cols != dim) return false;
        return true;
    }
};

// Finite-dimensional Hopf algebra: algebra and coalgebra on one basis plus
// the antipode matrix.
struct FinHopf {
    FinAlgebra algebra;
    FinCoalgebra coalgebra;
    Matrix antipode;

    std::size_t dim() const { return algebra.dim; }
    const FieldSpec& field() const { return algebra.field; }
    const Vec& unit() const {
        if (!algebra.unit) throw PreconditionError("hopf: missing unit");
        return *algebra.unit;
    }
};

// Finite group by its multiplication table: table[i][j] = index of g_i g_j.
struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;

    std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }

    std::size_t inverse(std::size_t i) const {
        for (std::size_t j = 0; j < order; ++j)
            if (table[i][j] == identity) return j;
        throw PreconditionError("group: no inverse for " + std::to_string(i));
    }

    bool is_abelian() const {
        for (std::size_t i = 0; i < order; ++i)
            for (std::size_t j = 0; j < order; ++j)
                if (table[i][j] != table[j][i]) return false;
        return true;
    }

    std::size_t exponent() const {
        std::size_t e = 1;
        for (std::size_t i = 0; i < order; ++i) {
            std::size_t k = 1, g = i;
            while (g != identity) {
                g = table[g][i];
                ++k;
            }
            e = std::lcm(e, k);
        }
        return e;
    }
};

// Group grading: components indexed by group element index. Entries with a
// zero subspace may be present; support() filters them.
struct Grading {
    FinAlgebra algebra;
    FiniteGroup group;
    std::map<std::size_t, Subspace> components;
};

// Generators-and-relations presentation of a group; relations are words in
// signed 1-based generator indices, abelianization as invariant factors
// (zero meaning a free factor).
struct GroupPresentation {
    std::vector<std::string> generator_names;
    std::vector<std::vector<int>> relations;
    std::vector<mpz_class> abelianization;
};

// Right coaction rho: A -> A (x) H by its coefficient tensor:
// rho(a_alpha) = sum_beta a_beta (x) h_{beta,alpha} with
// coeff[beta][alpha] the H-coordinates of h_{beta,alpha}.
struct Coaction {
    FinAlgebra algebra;
    FinHopf hopf;
    std::vector<std::vector<Vec>> coeff;

    bool shapes_ok() const {
        if (coeff.size() != algebra.dim) return false;
        for (const auto& row : coeff) {
            if (row.size() != algebra.dim) return false;
            for (const auto& v : row)
                if (v.size() != hopf.dim()) return false;
        }
        return true;
    }
};

// The minimal subcoalgebra through which a coaction factors, with its
// embedding into H and the coefficient tensor re-expressed in C-coordinates.
struct SupportCoalgebra {
    FinCoalgebra coalgebra;
    Matrix inclusion;  // dim H x dim C; columns are the chosen basis of C in H
    std::vector<std::vector<Vec>> coeff_in_C;
};

// Left H-module structure: action[k] = zeta(b_k) as an operator on A.
struct ModuleStructure {
    FinAlgebra algebra;
    FinHopf hopf;
    std::vector<Matrix> action;

    bool shapes_ok() const {
        if (action.size() != hopf.dim()) return false;
        for (const auto& m : action)
            if (m.rows != algebra.dim || m.cols != algebra.dim) return false;
        return true;
    }

    Matrix action_of(const Field& F, const Vec& h) const {
        Matrix out(algebra.dim, algebra.dim);
        for (std::size_t k = 0; k < hopf.dim(); ++k) {
            if (F.is_zero(h[k])) continue;
            out = mat_add(F, out, mat_scale(F, h[k], action[k]));
        }
        return out;
    }
};

// Group acting by algebra automorphisms.
struct GroupAction {
    FiniteGroup group;
    FinAlgebra algebra;
    std::vector<Matrix> images;
};

// Shared report shape for all axiom checkers. A failed law carries the name
// of the identity and a witness (basis indices where it breaks).
struct CheckFailure {
    std::string law;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct CheckReport {
    bool ok = true;
    std::vector<CheckFailure> failures;

    void fail(std::string law, std::vector<std::size_t> witness, std::string detail = {}) {
        ok = false;
        failures.push_back({std::move(law), std::move(witness), std::move(detail)});
    }

    void merge(const CheckReport& other) {
        if (!other.ok) ok = false;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

}  // namespace hopfeq

#endif
