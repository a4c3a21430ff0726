#ifndef HOPFEQ_GRADING_HPP
#define HOPFEQ_GRADING_HPP

#include <set>

#include "hopfeq/coset.hpp"
#include "hopfeq/structconst.hpp"

namespace hopfeq {

// Span of vectorized operators inside End(A) ~ F^(n^2).
inline Subspace operator_span(const Field& F, const std::vector<Matrix>& ops) {
    if (ops.empty()) throw PreconditionError("operator_span: no operators");
    std::size_t n2 = ops.front().rows * ops.front().cols;
    std::vector<Vec> rows;
    for (const auto& m : ops) rows.push_back(vectorize(m));
    return Subspace::span(F, rows, n2);
}

// Conjugation phi . M . phi^{-1}.
inline Matrix conjugate(const Field& F, const Matrix& phi, const Matrix& phi_inv,
                        const Matrix& m) {
    return mat_mul(F, mat_mul(F, phi, m), phi_inv);
}

// Verifies that phi is an algebra isomorphism A1 -> A2 (bijective and
// multiplicative on basis pairs). Throws PreconditionError otherwise; this is
// a distinct failure from a negative equivalence decision.
inline Matrix require_isomorphism(const Field& F, const FinAlgebra& A1, const FinAlgebra& A2,
                                  const std::optional<Matrix>& phi_opt) {
    if (A1.dim != A2.dim) throw PreconditionError("isomorphism: dimension mismatch");
    if (!(A1.field == A2.field)) throw PreconditionError("isomorphism: field mismatch");
    Matrix phi = phi_opt.value_or(Matrix::identity(A1.dim));
    if (phi.rows != A2.dim || phi.cols != A1.dim)
        throw PreconditionError("isomorphism: bad shape");
    if (!mat_inverse(F, phi)) throw PreconditionError("isomorphism: not invertible");
    for (std::size_t i = 0; i < A1.dim; ++i)
        for (std::size_t j = 0; j < A1.dim; ++j) {
            Vec lhs = mat_vec(F, phi, A1.mult[i][j]);
            Vec rhs = A2.product(F, phi.col(i), phi.col(j));
            if (!vec_is_zero(F, vec_sub(F, lhs, rhs)))
                throw PreconditionError("isomorphism: not multiplicative at basis pair (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return phi;
}

inline CheckReport check_grading(const Field& F, const Grading& G) {
    CheckReport rep;
    const std::size_t n = G.algebra.dim;
    for (const auto& [g, comp] : G.components) {
        if (g >= G.group.order) {
            rep.fail("component-index", {g});
            return rep;
        }
        if (comp.ambient() != n) {
            rep.fail("component-ambient", {g});
            return rep;
        }
    }

    // direct sum: dimensions add up and the union of bases has full rank
    std::vector<Vec> all;
    std::size_t total = 0;
    for (const auto& [g, comp] : G.components) {
        total += comp.dim();
        for (std::size_t i = 0; i < comp.dim(); ++i) all.push_back(comp.basis_vector(i));
    }
    if (total != n || Subspace::span(F, all, n).dim() != n)
        rep.fail("direct-sum", {}, "components do not decompose A");

    // A^(g) A^(h) contained in A^(gh)
    for (const auto& [g, cg] : G.components) {
        if (cg.dim() == 0) continue;
        for (const auto& [h, ch] : G.components) {
            if (ch.dim() == 0) continue;
            std::size_t gh = G.group.mul(g, h);
            auto it = G.components.find(gh);
            for (std::size_t i = 0; i < cg.dim(); ++i)
                for (std::size_t j = 0; j < ch.dim(); ++j) {
                    Vec prod = G.algebra.product(F, cg.basis_vector(i), ch.basis_vector(j));
                    if (vec_is_zero(F, prod)) continue;
                    if (it == G.components.end() || !it->second.contains_vector(F, prod)) {
                        rep.fail("grading-axiom", {g, h},
                                 "product leaves the target component");
                        break;
                    }
                }
        }
    }
    return rep;
}

inline std::vector<std::size_t> support(const Grading& G) {
    std::vector<std::size_t> s;
    for (const auto& [g, comp] : G.components)
        if (comp.dim() > 0) s.push_back(g);
    return s;
}

namespace detail {

// Projections onto the components along the decomposition, indexed by group
// element (zero map for absent/zero components).
inline std::vector<Matrix> component_projections(const Field& F, const Grading& G) {
    const std::size_t n = G.algebra.dim;
    std::vector<std::pair<std::size_t, Vec>> cols;  // (group index, basis vector)
    for (const auto& [g, comp] : G.components)
        for (std::size_t i = 0; i < comp.dim(); ++i) cols.emplace_back(g, comp.basis_vector(i));
    Matrix T(n, n);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) T.at(r, c) = cols[c].second[r];
    auto Tinv = mat_inverse(F, T);
    if (!Tinv) throw PreconditionError("grading: components do not decompose A");
    std::vector<Matrix> proj(G.group.order, Matrix(n, n));
    for (std::size_t g = 0; g < G.group.order; ++g) {
        Matrix D(n, n);
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (cols[c].first == g) D.at(c, c) = 1;
        proj[g] = mat_mul(F, mat_mul(F, T, D), *Tinv);
    }
    return proj;
}

}  // namespace detail

// The (FG)*-module structure of a grading: the dual basis element at g acts
// as the projection onto A^(g).
inline ModuleStructure dual_action(const Field& F, const Grading& G) {
    auto rep = check_grading(F, G);
    if (!rep.ok) throw PreconditionError("dual_action: invalid grading");
    ModuleStructure zeta;
    zeta.algebra = G.algebra;
    zeta.hopf = dual_hopf(F, group_hopf(F, G.group));
    zeta.action = detail::component_projections(F, G);
    return zeta;
}

// The action of the character group on a grading by a finite abelian group:
// chi sends a in A^(g) to chi(g) a. Requires all |G| characters to exist over
// the base field (enough roots of unity); `primitive_root`, when supplied, is
// validated to have order exp(G).
inline ModuleStructure character_action(const Field& F, const Grading& G,
                                        std::optional<Scalar> primitive_root = std::nullopt) {
    auto rep = check_grading(F, G);
    if (!rep.ok) throw PreconditionError("character_action: invalid grading");
    if (!G.group.is_abelian()) throw PreconditionError("character_action: group not abelian");
    const std::size_t n = G.group.order;
    std::size_t e = G.group.exponent();

    if (primitive_root) {
        Scalar w = F.reduce(*primitive_root);
        if (!F.eq(F.pow(w, static_cast<long>(e)), F.one()))
            throw PreconditionError("character_action: supplied root has wrong order");
        for (std::size_t k = 1; k < e; ++k)
            if (F.eq(F.pow(w, static_cast<long>(k)), F.one()))
                throw PreconditionError("character_action: supplied root has wrong order");
    }

    auto gl = grouplikes(F, dual_hopf(F, group_hopf(F, G.group)));
    if (gl.elements.size() != n)
        throw PreconditionError("character_action: missing roots of unity (found " +
                                std::to_string(gl.elements.size()) + " of " +
                                std::to_string(n) + " characters)");
    std::vector<Vec> chars = gl.elements;  // chars[c][g] = chi_c(g), sorted canonically

    // character group table by pointwise multiplication
    FiniteGroup Ghat;
    Ghat.order = n;
    Ghat.table.assign(n, std::vector<std::size_t>(n));
    auto locate = [&](const Vec& v) {
        for (std::size_t i = 0; i < chars.size(); ++i)
            if (vec_is_zero(F, vec_sub(F, chars[i], v))) return i;
        throw std::logic_error("character_action: characters not closed under product");
    };
    for (std::size_t i = 0; i < n; ++i) {
        std::string nm = "chi" + std::to_string(i);
        Ghat.names.push_back(nm);
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod(n);
            for (std::size_t g = 0; g < n; ++g) prod[g] = F.mul(chars[i][g], chars[j][g]);
            Ghat.table[i][j] = locate(prod);
        }
    }
    Vec ones(n, Scalar(1));
    Ghat.identity = locate(ones);

    auto proj = detail::component_projections(F, G);
    ModuleStructure zeta;
    zeta.algebra = G.algebra;
    zeta.hopf = group_hopf(F, Ghat);
    zeta.action.assign(n, Matrix(G.algebra.dim, G.algebra.dim));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t g = 0; g < G.group.order; ++g)
            zeta.action[c] = mat_add(F, zeta.action[c], mat_scale(F, chars[c][g], proj[g]));
    return zeta;
}

struct GradingEquivalence {
    bool equivalent = false;
    // support index of Gamma1 -> support index of Gamma2 (when equivalent)
    std::map<std::size_t, std::size_t> support_bijection;
    // an operator of one span missing from the other (when not equivalent)
    std::optional<Matrix> separating_operator;
};

// Decides support equivalence of two gradings through a supplied algebra
// isomorphism (identity when absent): conjugation must carry the span of the
// first dual action onto the second.
inline GradingEquivalence grading_equivalent(const Field& F, const Grading& G1,
                                             const Grading& G2,
                                             const std::optional<Matrix>& phi_opt = {}) {
    auto r1 = check_grading(F, G1), r2 = check_grading(F, G2);
    if (!r1.ok || !r2.ok) throw PreconditionError("grading_equivalent: invalid grading");
    Matrix phi = require_isomorphism(F, G1.algebra, G2.algebra, phi_opt);
    Matrix phi_inv = *mat_inverse(F, phi);

    auto p1 = detail::component_projections(F, G1);
    auto p2 = detail::component_projections(F, G2);
    std::vector<Matrix> moved;
    for (auto& m : p1) moved.push_back(conjugate(F, phi, phi_inv, m));
    Subspace s1 = operator_span(F, moved);
    Subspace s2 = operator_span(F, p2);

    GradingEquivalence out;
    if (s1.equals(s2)) {
        out.equivalent = true;
        for (std::size_t g1 : support(G1)) {
            const Subspace& c1 = G1.components.at(g1);
            std::vector<Vec> image;
            for (std::size_t i = 0; i < c1.dim(); ++i)
                image.push_back(mat_vec(F, phi, c1.basis_vector(i)));
            Subspace moved_comp = Subspace::span(F, image, G2.algebra.dim);
            for (std::size_t g2 : support(G2))
                if (moved_comp.is_contained_in(F, G2.components.at(g2))) {
                    out.support_bijection[g1] = g2;
                    break;
                }
        }
        if (out.support_bijection.size() != support(G1).size())
            throw std::logic_error("grading_equivalent: spans equal but no bijection");
    } else {
        for (std::size_t r = 0; r < s2.dim(); ++r)
            if (!s1.contains_vector(F, s2.basis_vector(r))) {
                out.separating_operator =
                    unvectorize(s2.basis_vector(r), G2.algebra.dim, G2.algebra.dim);
                break;
            }
        if (!out.separating_operator)
            for (std::size_t r = 0; r < s1.dim(); ++r)
                if (!s2.contains_vector(F, s1.basis_vector(r))) {
                    out.separating_operator =
                        unvectorize(s1.basis_vector(r), G2.algebra.dim, G2.algebra.dim);
                    break;
                }
    }
    return out;
}

// Gamma1 finer than Gamma2 (both on the same algebra): the dual-action span
// of Gamma1 contains that of Gamma2. Cross-checked against the componentwise
// criterion.
inline bool grading_finer(const Field& F, const Grading& G1, const Grading& G2) {
    if (!(G1.algebra.field == G2.algebra.field) || G1.algebra.dim != G2.algebra.dim ||
        G1.algebra.mult != G2.algebra.mult)
        throw PreconditionError("grading_finer: gradings live on different algebras");
    auto r1 = check_grading(F, G1), r2 = check_grading(F, G2);
    if (!r1.ok || !r2.ok) throw PreconditionError("grading_finer: invalid grading");

    Subspace s1 = operator_span(F, detail::component_projections(F, G1));
    Subspace s2 = operator_span(F, detail::component_projections(F, G2));
    bool span_decision = s2.is_contained_in(F, s1);

    bool componentwise = true;
    for (std::size_t g : support(G1)) {
        bool found = false;
        for (std::size_t h : support(G2))
            if (G1.components.at(g).is_contained_in(F, G2.components.at(h))) {
                found = true;
                break;
            }
        if (!found) {
            componentwise = false;
            break;
        }
    }
    if (span_decision != componentwise)
        throw std::logic_error("grading_finer: span and componentwise criteria disagree");
    return span_decision;
}

// Universal group of a grading: one generator per support element, one
// relation [g][h][t]^-1 for every pair with a nonzero component product
// landing in A^(t). Abelianization via Smith normal form.
inline GroupPresentation universal_group(const Field& F, const Grading& G) {
    auto rep = check_grading(F, G);
    if (!rep.ok) throw PreconditionError("universal_group: invalid grading");
    std::vector<std::size_t> supp = support(G);  // ascending group index
    std::map<std::size_t, int> gen_index;        // group index -> 1-based generator
    GroupPresentation pres;
    for (std::size_t i = 0; i < supp.size(); ++i) {
        gen_index[supp[i]] = static_cast<int>(i) + 1;
        pres.generator_names.push_back(G.group.names[supp[i]]);
    }
    for (std::size_t g : supp)
        for (std::size_t h : supp) {
            const Subspace& cg = G.components.at(g);
            const Subspace& ch = G.components.at(h);
            std::vector<Vec> prods;
            for (std::size_t i = 0; i < cg.dim(); ++i)
                for (std::size_t j = 0; j < ch.dim(); ++j)
                    prods.push_back(G.algebra.product(F, cg.basis_vector(i), ch.basis_vector(j)));
            Subspace ps = Subspace::span(F, prods, G.algebra.dim);
            if (ps.dim() == 0) continue;
            // the unique support component containing the product span
            std::size_t t = G.group.order;
            for (std::size_t cand : supp)
                if (ps.is_contained_in(F, G.components.at(cand))) {
                    t = cand;
                    break;
                }
            if (t == G.group.order)
                throw std::logic_error("universal_group: product straddles components");
            pres.relations.push_back({gen_index[g], gen_index[h], -gen_index[t]});
        }
    IntMatrix rel(pres.relations.size(), supp.size());
    for (std::size_t r = 0; r < pres.relations.size(); ++r)
        for (int s : pres.relations[r]) {
            std::size_t col = static_cast<std::size_t>((s > 0 ? s : -s) - 1);
            rel.at(r, col) += (s > 0 ? 1 : -1);
        }
    pres.abelianization = abelian_invariants(rel, supp.size());
    return pres;
}

struct RegradingReport {
    bool relations_hold = false;
    bool regrading_valid = false;
    bool injective_on_support = false;
    CheckReport details;
    bool homomorphism_exists() const { return relations_hold; }
};

// Certifies that `gen_map` (support element -> candidate group element)
// satisfies every presentation relation and that relabeling the components
// yields a valid candidate-grading. This certifies a homomorphism from the
// universal group, not universality of the candidate.
inline RegradingReport verify_regrading(const Field& F, const Grading& G,
                                        const FiniteGroup& candidate,
                                        const std::map<std::size_t, std::size_t>& gen_map) {
    RegradingReport out;
    auto grep = check_group(candidate);
    if (!grep.ok) throw PreconditionError("verify_regrading: candidate is not a group");
    std::vector<std::size_t> supp = support(G);
    for (std::size_t g : supp)
        if (!gen_map.count(g) || gen_map.at(g) >= candidate.order)
            throw PreconditionError("verify_regrading: gen_map must cover the support");

    GroupPresentation pres = universal_group(F, G);
    out.relations_hold = true;
    for (const auto& word : pres.relations) {
        std::size_t acc = candidate.identity;
        for (int s : word) {
            std::size_t gen = supp[static_cast<std::size_t>((s > 0 ? s : -s) - 1)];
            std::size_t img = gen_map.at(gen);
            if (s < 0) img = candidate.inverse(img);
            acc = candidate.mul(acc, img);
        }
        if (acc != candidate.identity) {
            out.relations_hold = false;
            std::vector<std::size_t> w;
            for (int s : word) w.push_back(static_cast<std::size_t>(s > 0 ? s : -s));
            out.details.fail("relation", w, "relation violated in candidate group");
        }
    }

    // relabel components; a non-injective map merges components
    Grading relabeled;
    relabeled.algebra = G.algebra;
    relabeled.group = candidate;
    for (std::size_t g : supp) {
        std::size_t target = gen_map.at(g);
        auto it = relabeled.components.find(target);
        if (it == relabeled.components.end())
            relabeled.components.emplace(target, G.components.at(g));
        else
            it->second = Subspace::sum(F, it->second, G.components.at(g));
    }
    auto rrep = check_grading(F, relabeled);
    out.regrading_valid = rrep.ok;
    out.details.merge(rrep);

    std::set<std::size_t> images;
    for (std::size_t g : supp) images.insert(gen_map.at(g));
    out.injective_on_support = images.size() == supp.size();
    return out;
}

}  // namespace hopfeq

#endif
