#ifndef HOPFEQ_COSET_HPP
#define HOPFEQ_COSET_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfeq/core_types.hpp"

namespace hopfeq {

// Bounded Todd-Coxeter coset enumeration over the trivial subgroup (HLT
// style with lookahead-free scanning). Returns the group order when the
// enumeration closes within `max_cosets` live cosets, std::nullopt when the
// budget is exhausted. Words use signed 1-based generator indices.
class CosetEnumerator {
  public:
    CosetEnumerator(std::size_t num_generators, std::vector<std::vector<int>> relations)
        : ngens_(num_generators), relations_(std::move(relations)) {}

    std::optional<std::size_t> enumerate(std::size_t max_cosets = 10000) {
        const std::size_t width = 2 * ngens_;
        table_.assign(1, std::vector<long>(width, -1));
        rep_.assign(1, 0);
        max_ = max_cosets;

        // convert words to column indices: +g -> 2(g-1), -g -> 2(g-1)+1
        std::vector<std::vector<std::size_t>> rels;
        for (const auto& w : relations_) {
            std::vector<std::size_t> r;
            for (int s : w) {
                if (s == 0 || static_cast<std::size_t>(s > 0 ? s : -s) > ngens_)
                    throw PreconditionError("coset enumeration: bad generator index");
                r.push_back(s > 0 ? 2 * (s - 1) : 2 * (-s - 1) + 1);
            }
            rels.push_back(std::move(r));
        }

        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t c = 0; c < table_.size(); ++c) {
                if (rep_[c] != c) continue;  // dead coset
                for (const auto& r : rels) {
                    if (!scan(c, r)) return std::nullopt;  // budget
                    progress |= pending_;
                }
            }
            // fill any remaining hole to keep the enumeration moving
            if (!progress) {
                bool hole = false;
                for (std::size_t c = 0; c < table_.size() && !hole; ++c) {
                    if (rep_[c] != c) continue;
                    for (std::size_t x = 0; x < width; ++x)
                        if (table_[c][x] < 0) {
                            if (!define(c, x)) return std::nullopt;
                            hole = true;
                            progress = true;
                            break;
                        }
                }
                if (!hole) break;  // table complete
            }
        }

        std::size_t live = 0;
        for (std::size_t c = 0; c < table_.size(); ++c)
            if (rep_[c] == c) ++live;
        return live;
    }

  private:
    std::size_t find(std::size_t c) {
        while (rep_[c] != c) {
            rep_[c] = rep_[rep_[c]];
            c = rep_[c];
        }
        return c;
    }

    static std::size_t flip(std::size_t x) { return x ^ 1u; }

    void set_edge(std::size_t a, std::size_t x, std::size_t b) {
        a = find(a);
        b = find(b);
        long old = table_[a][x];
        if (old >= 0 && find(static_cast<std::size_t>(old)) != b)
            merge(find(static_cast<std::size_t>(old)), b);
        table_[a][x] = static_cast<long>(find(b));
        std::size_t bb = find(b), aa = find(a);
        long oldback = table_[bb][flip(x)];
        if (oldback >= 0 && find(static_cast<std::size_t>(oldback)) != aa)
            merge(find(static_cast<std::size_t>(oldback)), aa);
        table_[find(b)][flip(x)] = static_cast<long>(find(a));
    }

    void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        rep_[b] = a;
        pending_ = true;
        // fold b's edges into a
        for (std::size_t x = 0; x < table_[b].size(); ++x) {
            long t = table_[b][x];
            if (t < 0) continue;
            std::size_t target = find(static_cast<std::size_t>(t));
            long cur = table_[a][x];
            if (cur < 0)
                set_edge(a, x, target);
            else if (find(static_cast<std::size_t>(cur)) != target)
                merge(find(static_cast<std::size_t>(cur)), target);
        }
    }

    bool define(std::size_t c, std::size_t x) {
        if (table_.size() >= max_) return false;
        table_.push_back(std::vector<long>(2 * ngens_, -1));
        rep_.push_back(table_.size() - 1);
        set_edge(find(c), x, table_.size() - 1);
        pending_ = true;
        return true;
    }

    // Scan relation word r at coset c, defining cosets as needed.
    bool scan(std::size_t c, const std::vector<std::size_t>& r) {
        pending_ = false;
        std::size_t cur = find(c);
        for (std::size_t i = 0; i < r.size(); ++i) {
            long next = table_[cur][r[i]];
            if (next < 0) {
                if (i + 1 == r.size()) {
                    set_edge(cur, r[i], find(c));  // close the cycle
                    pending_ = true;
                    return true;
                }
                if (!define(cur, r[i])) return false;
                next = table_[find(cur)][r[i]];
            }
            cur = find(static_cast<std::size_t>(next));
        }
        if (cur != find(c)) {
            merge(cur, find(c));
            pending_ = true;
        }
        return true;
    }

    std::size_t ngens_;
    std::vector<std::vector<int>> relations_;
    std::vector<std::vector<long>> table_;
    std::vector<std::size_t> rep_;
    std::size_t max_ = 10000;
    bool pending_ = false;
};

// Order of the group presented by `pres`, within a coset budget.
inline std::optional<std::size_t> presented_group_order(const GroupPresentation& pres,
                                                        std::size_t max_cosets = 10000) {
    CosetEnumerator e(pres.generator_names.size(), pres.relations);
    return e.enumerate(max_cosets);
}

}  // namespace hopfeq

#endif
