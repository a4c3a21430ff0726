#ifndef HOPFEQ_HIDENT_HPP
#define HOPFEQ_HIDENT_HPP

#include <cctype>
#include <sstream>

#include "hopfeq/modulealg.hpp"

namespace hopfeq {

// Multilinear H-polynomial of degree n: every term is a coefficient, a
// permutation (variable order) and one H-basis index per slot, i.e.
// coef * x_{perm[0]+1}^{h_{hidx[0]}} ... x_{perm[n-1]+1}^{h_{hidx[n-1]}}.
// Terms are kept canonically ordered (permutation, then index tuple).
struct MultilinearHPolynomial {
    struct Term {
        Scalar coef;
        std::vector<std::size_t> perm;  // 0-based variable in each slot
        std::vector<std::size_t> hidx;  // H basis index per slot
    };
    std::size_t degree = 0;
    std::vector<Term> terms;
};

inline void hp_normalize(const Field& F, MultilinearHPolynomial& p) {
    for (const auto& t : p.terms) {
        if (t.perm.size() != p.degree || t.hidx.size() != p.degree)
            throw PreconditionError("h-polynomial: slot count mismatch");
        std::vector<bool> seen(p.degree, false);
        for (std::size_t v : t.perm) {
            if (v >= p.degree || seen[v])
                throw PreconditionError("h-polynomial: not multilinear");
            seen[v] = true;
        }
    }
    std::sort(p.terms.begin(), p.terms.end(), [](const auto& x, const auto& y) {
        if (x.perm != y.perm) return x.perm < y.perm;
        return x.hidx < y.hidx;
    });
    std::vector<MultilinearHPolynomial::Term> merged;
    for (auto& t : p.terms) {
        if (!merged.empty() && merged.back().perm == t.perm && merged.back().hidx == t.hidx)
            merged.back().coef = F.add(merged.back().coef, t.coef);
        else
            merged.push_back(t);
    }
    p.terms.clear();
    for (auto& t : merged)
        if (!F.is_zero(t.coef)) p.terms.push_back(std::move(t));
}

// Text mini-grammar: "x1^{h:0} x2^{h:1} - x2^{h:1} x1^{h:0}", with an
// optional rational coefficient ("2/3 x1^{h:0} ...") in front of each term.
inline MultilinearHPolynomial parse_h_polynomial(const Field& F, const std::string& text,
                                                 std::size_t hopf_dim) {
    MultilinearHPolynomial poly;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_number = [&]() -> std::string {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        return text.substr(start, pos - start);
    };

    bool first = true;
    std::size_t degree = 0;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        Scalar sign = F.one();
        if (text[pos] == '+') {
            ++pos;
        } else if (text[pos] == '-') {
            sign = F.neg(F.one());
            ++pos;
        } else if (!first) {
            throw ParseError("h-polynomial: expected '+' or '-' at position " +
                             std::to_string(pos));
        }
        skip_ws();
        Scalar coef = sign;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coef = F.mul(sign, F.parse(parse_number()));
            skip_ws();
        }
        std::vector<std::pair<std::size_t, std::size_t>> factors;  // (variable, h index)
        while (pos < text.size() && text[pos] == 'x') {
            ++pos;
            std::string var = parse_number();
            if (var.empty()) throw ParseError("h-polynomial: missing variable number");
            if (pos + 4 >= text.size() || text.compare(pos, 4, "^{h:") != 0)
                throw ParseError("h-polynomial: expected ^{h:k} after x" + var);
            pos += 4;
            std::string hk = parse_number();
            if (hk.empty() || pos >= text.size() || text[pos] != '}')
                throw ParseError("h-polynomial: malformed superscript");
            ++pos;
            std::size_t v = std::stoul(var), h = std::stoul(hk);
            if (v == 0) throw ParseError("h-polynomial: variables are numbered from x1");
            if (h >= hopf_dim) throw ParseError("h-polynomial: H basis index out of range");
            factors.emplace_back(v - 1, h);
            skip_ws();
        }
        if (factors.empty()) throw ParseError("h-polynomial: empty term");
        if (first) degree = factors.size();
        if (factors.size() != degree)
            throw ParseError("h-polynomial: terms of unequal degree");
        MultilinearHPolynomial::Term term;
        term.coef = coef;
        for (auto& [v, h] : factors) {
            term.perm.push_back(v);
            term.hidx.push_back(h);
        }
        poly.terms.push_back(std::move(term));
        first = false;
    }
    poly.degree = degree;
    hp_normalize(F, poly);
    return poly;
}

// Exact evaluation at basis arguments: slot j contributes
// zeta(h_{hidx[j]}) a_{args[perm[j]]}, multiplied left-normed.
inline Vec evaluate(const Field& F, const MultilinearHPolynomial& p, const ModuleStructure& zeta,
                    const std::vector<std::size_t>& args) {
    const std::size_t n = zeta.algebra.dim;
    if (args.size() != p.degree) throw PreconditionError("evaluate: argument count mismatch");
    for (std::size_t a : args)
        if (a >= n) throw PreconditionError("evaluate: argument index out of range");
    Vec total(n, Scalar(0));
    for (const auto& t : p.terms) {
        Vec cur = zeta.action[t.hidx[0]].col(args[t.perm[0]]);
        for (std::size_t j = 1; j < p.degree; ++j)
            cur = zeta.algebra.product(F, cur, zeta.action[t.hidx[j]].col(args[t.perm[j]]));
        for (std::size_t k = 0; k < n; ++k) total[k] = F.add(total[k], F.mul(t.coef, cur[k]));
    }
    return total;
}

struct IdentityVerdict {
    bool is_identity = true;
    std::vector<std::size_t> witness;  // first argument tuple with nonzero value
};

// Multilinearity makes basis substitutions sufficient.
inline IdentityVerdict is_identity(const Field& F, const MultilinearHPolynomial& p,
                                   const ModuleStructure& zeta) {
    const std::size_t n = zeta.algebra.dim;
    IdentityVerdict v;
    if (p.degree == 0 || p.terms.empty()) return v;
    std::vector<std::size_t> args(p.degree, 0);
    while (true) {
        if (!vec_is_zero(F, evaluate(F, p, zeta, args))) {
            v.is_identity = false;
            v.witness = args;
            return v;
        }
        std::size_t pos = p.degree;
        while (pos > 0) {
            if (++args[pos - 1] < n) break;
            args[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return v;
}

struct CodimOptions {
    long row_budget = 200000;    // n! * (dim H)^n must stay within this
    std::size_t shard_size = 64; // batches row generation only
};

namespace detail {

// Streams the evaluation rows of the degree-n monomial basis in canonical
// order (permutations lex, then H-index tuples lex) into `sink`. The row of a
// monomial lists, per argument tuple (lex), the coordinates of its value.
template <typename Sink>
void stream_codim_rows(const Field& F, const ModuleStructure& zeta, std::size_t n, Sink&& sink) {
    const std::size_t dimA = zeta.algebra.dim, dimH = zeta.hopf.dim();
    std::vector<std::vector<Vec>> applied(dimH, std::vector<Vec>(dimA));
    for (std::size_t k = 0; k < dimH; ++k)
        for (std::size_t a = 0; a < dimA; ++a) applied[k][a] = zeta.action[k].col(a);

    std::size_t tuples = 1;
    for (std::size_t i = 0; i < n; ++i) tuples *= dimA;
    const std::size_t width = tuples * dimA;

    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        std::vector<std::size_t> hidx(n, 0);
        bool hdone = false;
        while (!hdone) {
            Vec row(width, Scalar(0));
            std::vector<std::size_t> args(n, 0);
            std::size_t tuple_index = 0;
            bool adone = false;
            while (!adone) {
                Vec cur = applied[hidx[0]][args[perm[0]]];
                for (std::size_t j = 1; j < n && !vec_is_zero(F, cur); ++j)
                    cur = zeta.algebra.product(F, cur, applied[hidx[j]][args[perm[j]]]);
                for (std::size_t k = 0; k < dimA; ++k) row[tuple_index * dimA + k] = cur[k];
                ++tuple_index;
                std::size_t pos = n;
                while (pos > 0) {
                    if (++args[pos - 1] < dimA) break;
                    args[pos - 1] = 0;
                    --pos;
                }
                adone = (pos == 0);
            }
            sink(std::move(row));
            std::size_t pos = n;
            while (pos > 0) {
                if (++hidx[pos - 1] < dimH) break;
                hidx[pos - 1] = 0;
                --pos;
            }
            hdone = (pos == 0);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline long monomial_count(std::size_t n, std::size_t dimH, long budget) {
    double count = 1;
    for (std::size_t i = 2; i <= n; ++i) count *= static_cast<double>(i);
    for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(dimH);
    if (count > static_cast<double>(budget)) return -1;
    return static_cast<long>(count);
}

}  // namespace detail

// c_n = rank of the evaluation map P_n^H -> {n-linear maps A^n -> A},
// computed by streaming incremental row reduction over monomial shards.
inline std::size_t codim(const Field& F, const ModuleStructure& zeta, std::size_t n,
                         const CodimOptions& opt = {}) {
    if (n < 1) throw PreconditionError("codim: n must be at least 1");
    const std::size_t dimA = zeta.algebra.dim;
    if (detail::monomial_count(n, zeta.hopf.dim(), opt.row_budget) < 0)
        throw BudgetExceeded("codim: monomial count exceeds the row budget");
    std::size_t width = dimA;
    for (std::size_t i = 0; i < n; ++i) width *= dimA;

    RankAccumulator acc(F, width);
    std::vector<Vec> shard;
    shard.reserve(opt.shard_size == 0 ? 1 : opt.shard_size);
    auto flush = [&] {
        for (auto& row : shard) acc.add_row(std::move(row));
        shard.clear();
    };
    detail::stream_codim_rows(F, zeta, n, [&](Vec row) {
        shard.push_back(std::move(row));
        if (opt.shard_size != 0 && shard.size() >= opt.shard_size) flush();
    });
    flush();
    return acc.rank();
}

struct CodimReport {
    std::vector<std::size_t> values;  // c_1 .. c_N (or fewer when partial)
    std::vector<Scalar> ratios;       // c_{k+1} / c_k, exact
    std::optional<int> nilpotent_dim;
    std::optional<Scalar> predicted_base;  // 2 - d
    bool partial = false;                  // budget ran out before N
};

inline CodimReport codim_series(const Field& F, const ModuleStructure& zeta, std::size_t N,
                                std::optional<int> supplied_d = std::nullopt,
                                const CodimOptions& opt = {}) {
    CodimReport rep;
    if (supplied_d) {
        rep.nilpotent_dim = supplied_d;
    } else {
        // automatic only for the dual-numbers shape
        try {
            rep.nilpotent_dim = dual_numbers_invariant_nilpotent_dim(F, zeta);
        } catch (const PreconditionError&) {
        }
    }
    if (rep.nilpotent_dim)
        rep.predicted_base = F.sub(Scalar(2), Scalar(*rep.nilpotent_dim));
    for (std::size_t k = 1; k <= N; ++k) {
        try {
            rep.values.push_back(codim(F, zeta, k, opt));
        } catch (const BudgetExceeded&) {
            rep.partial = true;
            break;
        }
    }
    for (std::size_t k = 0; k + 1 < rep.values.size(); ++k) {
        if (rep.values[k] == 0) break;
        Scalar r(static_cast<long>(rep.values[k + 1]), static_cast<long>(rep.values[k]));
        r.canonicalize();
        rep.ratios.push_back(r);
    }
    return rep;
}

// Verdict windows are configuration, not theorem constants; the defaults are
// a [1/2, 3/2] multiplicative window around 2-d and, for d = 1, an increment
// bound c_k - c_{k-1} <= 4 standing in for polynomial growth.
struct GrowthWindow {
    Scalar lo = Scalar(1, 2);
    Scalar hi = Scalar(3, 2);
    long poly_increment = 4;
};

struct GrowthVerdict {
    bool ok = false;
    Scalar base;        // 2 - d
    Scalar last_ratio;  // c_N / c_{N-1}
    std::string detail;
};

inline GrowthVerdict growth_check(const Field& F, const CodimReport& rep, int d,
                                  const GrowthWindow& window = {}) {
    if (rep.values.size() < 2)
        throw PreconditionError("growth_check: need at least two codimension values");
    GrowthVerdict v;
    v.base = F.sub(Scalar(2), Scalar(d));
    std::size_t N = rep.values.size();
    v.last_ratio = Scalar(static_cast<long>(rep.values[N - 1]),
                          static_cast<long>(rep.values[N - 2]));
    v.last_ratio.canonicalize();
    Scalar lo = F.mul(window.lo, v.base), hi = F.mul(window.hi, v.base);
    bool in_window = v.last_ratio >= lo && v.last_ratio <= hi;
    if (d == 1) {
        long inc = static_cast<long>(rep.values[N - 1]) - static_cast<long>(rep.values[N - 2]);
        bool poly_ok = inc <= window.poly_increment;
        v.ok = in_window && poly_ok;
        v.detail = poly_ok ? "increment within the polynomial bound"
                           : "increment exceeds the polynomial bound";
    } else {
        v.ok = in_window;
        v.detail = in_window ? "ratio within the window around 2-d"
                             : "ratio outside the window around 2-d";
    }
    return v;
}

// Graded codimension via graded variables: one block per degree tuple over
// the support, substituting homogeneous basis vectors; asserts the computed
// value against codim of the dual (FG)*-module structure.
inline std::size_t graded_codim(const Field& F, const Grading& G, std::size_t n,
                                const CodimOptions& opt = {}) {
    auto grep = check_grading(F, G);
    if (!grep.ok) throw PreconditionError("graded_codim: invalid grading");
    std::vector<std::size_t> supp = support(G);
    const std::size_t dimA = G.algebra.dim;

    double rows = 1;
    for (std::size_t i = 2; i <= n; ++i) rows *= static_cast<double>(i);
    for (std::size_t i = 0; i < n; ++i) rows *= static_cast<double>(supp.size());
    if (rows > static_cast<double>(opt.row_budget))
        throw BudgetExceeded("graded_codim: block rows exceed the row budget");

    std::size_t total = 0;
    std::vector<std::size_t> deg(n, 0);  // indices into supp
    bool ddone = false;
    while (!ddone) {
        // columns: substitution tuples within the chosen components
        std::vector<std::size_t> comp_dims(n);
        std::size_t tuples = 1;
        for (std::size_t i = 0; i < n; ++i) {
            comp_dims[i] = G.components.at(supp[deg[i]]).dim();
            tuples *= comp_dims[i];
        }
        if (tuples > 0) {
            RankAccumulator acc(F, tuples * dimA);
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            do {
                Vec row(tuples * dimA, Scalar(0));
                std::vector<std::size_t> choice(n, 0);
                std::size_t tuple_index = 0;
                bool cdone = false;
                while (!cdone) {
                    Vec cur =
                        G.components.at(supp[deg[perm[0]]]).basis_vector(choice[perm[0]]);
                    for (std::size_t j = 1; j < n && !vec_is_zero(F, cur); ++j)
                        cur = G.algebra.product(
                            F, cur,
                            G.components.at(supp[deg[perm[j]]]).basis_vector(choice[perm[j]]));
                    for (std::size_t k = 0; k < dimA; ++k)
                        row[tuple_index * dimA + k] = cur[k];
                    ++tuple_index;
                    std::size_t pos = n;
                    while (pos > 0) {
                        if (++choice[pos - 1] < comp_dims[pos - 1]) break;
                        choice[pos - 1] = 0;
                        --pos;
                    }
                    cdone = (pos == 0);
                }
                acc.add_row(std::move(row));
            } while (std::next_permutation(perm.begin(), perm.end()));
            total += acc.rank();
        }
        std::size_t pos = n;
        while (pos > 0) {
            if (++deg[pos - 1] < supp.size()) break;
            deg[pos - 1] = 0;
            --pos;
        }
        ddone = (pos == 0);
    }

    std::size_t via_dual = codim(F, dual_action(F, G), n, opt);
    if (via_dual != total)
        throw std::logic_error("graded_codim: graded and dual-module codimensions disagree (" +
                               std::to_string(total) + " vs " + std::to_string(via_dual) + ")");
    return total;
}

struct CodimEquivVerdict {
    bool equal = false;
    std::size_t c1 = 0, c2 = 0;
    // full evaluation matrices, populated only on failure for diagnosis
    std::optional<Matrix> matrix1, matrix2;
};

// For support-equivalent structures the codimensions agree unconditionally;
// inequality therefore indicates an implementation bug, and the evaluation
// matrices are dumped for inspection.
inline CodimEquivVerdict codim_equiv_check(const Field& F, const ModuleStructure& z1,
                                           const ModuleStructure& z2,
                                           const std::optional<Matrix>& phi, std::size_t n,
                                           const CodimOptions& opt = {}) {
    auto eq = support_equiv_modules(F, z1, z2, phi);
    if (!eq.equivalent)
        throw PreconditionError("codim_equiv_check: structures are not support equivalent");
    CodimEquivVerdict v;
    v.c1 = codim(F, z1, n, opt);
    v.c2 = codim(F, z2, n, opt);
    v.equal = v.c1 == v.c2;
    if (!v.equal) {
        auto dump = [&](const ModuleStructure& z) {
            std::vector<Vec> rows;
            detail::stream_codim_rows(F, z, n, [&](Vec row) { rows.push_back(std::move(row)); });
            Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
            return m;
        };
        v.matrix1 = dump(z1);
        v.matrix2 = dump(z2);
    }
    return v;
}

// Transport of an H1-polynomial along a support equivalence: each superscript
// h is rewritten through a linear map xi with zeta2(xi(h)) = phi zeta1(h)
// phi^{-1}, expanding multilinearly.
inline MultilinearHPolynomial transport_polynomial(const Field& F,
                                                   const MultilinearHPolynomial& p,
                                                   const ModuleStructure& z1,
                                                   const ModuleStructure& z2,
                                                   const std::optional<Matrix>& phi_opt = {}) {
    Matrix phi = require_isomorphism(F, z1.algebra, z2.algebra, phi_opt);
    Matrix phi_inv = *mat_inverse(F, phi);
    const std::size_t n2 = z2.algebra.dim;
    const std::size_t m1 = z1.hopf.dim(), m2 = z2.hopf.dim();
    Matrix Z2(n2 * n2, m2);
    for (std::size_t k = 0; k < m2; ++k) {
        Vec v = vectorize(z2.action[k]);
        for (std::size_t r = 0; r < n2 * n2; ++r) Z2.at(r, k) = v[r];
    }
    std::vector<Vec> xi(m1);
    for (std::size_t k = 0; k < m1; ++k) {
        Matrix moved = conjugate(F, phi, phi_inv, z1.action[k]);
        auto sol = solve(F, Z2, vectorize(moved));
        if (!sol)
            throw PreconditionError("transport_polynomial: spans do not match");
        xi[k] = *sol;
    }
    MultilinearHPolynomial out;
    out.degree = p.degree;
    for (const auto& t : p.terms) {
        std::vector<std::size_t> choice(p.degree, 0);
        bool done = false;
        while (!done) {
            Scalar c = t.coef;
            for (std::size_t j = 0; j < p.degree && !F.is_zero(c); ++j)
                c = F.mul(c, xi[t.hidx[j]][choice[j]]);
            if (!F.is_zero(c)) {
                MultilinearHPolynomial::Term nt;
                nt.coef = c;
                nt.perm = t.perm;
                nt.hidx = std::vector<std::size_t>(choice.begin(), choice.end());
                out.terms.push_back(std::move(nt));
            }
            std::size_t pos = p.degree;
            while (pos > 0) {
                if (++choice[pos - 1] < m2) break;
                choice[pos - 1] = 0;
                --pos;
            }
            done = (pos == 0);
        }
    }
    hp_normalize(F, out);
    return out;
}

}  // namespace hopfeq

#endif
