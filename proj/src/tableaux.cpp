#include "khopf/tableaux.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace khopf {

namespace {

int list_max(const std::vector<int>& v) { return v.back(); }
int list_min(const std::vector<int>& v) { return v.front(); }

// Enumerates sorted value lists with entries in [low, m], size in
// [1, max_size]; strict lists are sets, weak lists are multisets.
// Lexicographic order: each list is visited before its extensions' order
// peers via DFS smallest-value-first.
void gen_value_lists(int low, int m, int max_size, bool strict, std::vector<int>& acc,
                     const std::function<void(const std::vector<int>&)>& visit) {
    if (!acc.empty()) visit(acc);
    if (static_cast<int>(acc.size()) == max_size) return;
    int next_low = acc.empty() ? low : acc.back() + (strict ? 1 : 0);
    for (int v = next_low; v <= m; ++v) {
        acc.push_back(v);
        gen_value_lists(low, m, max_size, strict, acc, visit);
        acc.pop_back();
    }
}

struct PosetEnumerator {
    const LabeledPoset& poset;
    int m;
    int max_total;
    bool multiset;
    const std::function<void(const PosetFilling&)>& visit;
    PosetFilling assignment;
    int total = 0;

    void run() {
        assignment.assign(static_cast<std::size_t>(poset.size()), {});
        if (poset.size() == 0) {
            visit(assignment);
            return;
        }
        place(0);
    }

    void place(int topo_pos) {
        if (topo_pos == poset.size()) {
            visit(assignment);
            return;
        }
        int e = poset.topological_order()[static_cast<std::size_t>(topo_pos)];
        int low = 1;
        for (auto [s, t] : poset.covers()) {
            if (t != e) continue;
            const auto& below = assignment[static_cast<std::size_t>(s)];
            bool strict = poset.label(s) > poset.label(t);
            low = std::max(low, list_max(below) + (strict ? 1 : 0));
        }
        int remaining_elements = poset.size() - topo_pos - 1;
        int budget = max_total - total - remaining_elements;
        if (budget < 1 || low > m) return;
        std::vector<int> acc;
        gen_value_lists(low, m, budget, !multiset, acc, [&](const std::vector<int>& list) {
            auto& slot = assignment[static_cast<std::size_t>(e)];
            slot = list;
            total += static_cast<int>(list.size());
            place(topo_pos + 1);
            total -= static_cast<int>(list.size());
            slot.clear();
        });
    }
};

TruncatedSeries fold_poset_fillings(const LabeledPoset& poset, SeriesContext ctx, bool multiset) {
    TruncatedSeries out(ctx);
    std::function<void(const PosetFilling&)> add = [&](const PosetFilling& sigma) {
        std::vector<int> exps(static_cast<std::size_t>(ctx.num_vars), 0);
        for (const auto& list : sigma)
            for (int v : list) ++exps[static_cast<std::size_t>(v) - 1];
        out.add_term(exps, 1);
    };
    PosetEnumerator{poset, ctx.num_vars, ctx.max_degree, multiset, add, {}, 0}.run();
    return out;
}

}  // namespace

void enumerate_set_valued(const LabeledPoset& poset, int m, int max_total,
                          const std::function<void(const PosetFilling&)>& visit) {
    PosetEnumerator{poset, m, max_total, false, visit, {}, 0}.run();
}

void enumerate_multiset_valued(const LabeledPoset& poset, int m, int max_total,
                               const std::function<void(const PosetFilling&)>& visit) {
    PosetEnumerator{poset, m, max_total, true, visit, {}, 0}.run();
}

namespace {

bool check_poset_filling(const LabeledPoset& poset, const PosetFilling& sigma, bool multiset) {
    if (static_cast<int>(sigma.size()) != poset.size()) return false;
    for (const auto& list : sigma) {
        if (list.empty()) return false;
        for (std::size_t i = 0; i + 1 < list.size(); ++i) {
            if (multiset ? list[i] > list[i + 1] : list[i] >= list[i + 1]) return false;
        }
        if (list.front() < 1) return false;
    }
    for (auto [s, t] : poset.covers()) {
        int hi = list_max(sigma[static_cast<std::size_t>(s)]);
        int lo = list_min(sigma[static_cast<std::size_t>(t)]);
        if (poset.label(s) < poset.label(t) ? hi > lo : hi >= lo) return false;
    }
    return true;
}

}  // namespace

bool is_set_valued_partition(const LabeledPoset& poset, const PosetFilling& sigma) {
    return check_poset_filling(poset, sigma, false);
}

bool is_multiset_valued_partition(const LabeledPoset& poset, const PosetFilling& sigma) {
    return check_poset_filling(poset, sigma, true);
}

TruncatedSeries set_valued_partitions(const LabeledPoset& poset, SeriesContext ctx) {
    return fold_poset_fillings(poset, ctx, false);
}

TruncatedSeries multiset_valued_partitions(const LabeledPoset& poset, SeriesContext ctx) {
    return fold_poset_fillings(poset, ctx, true);
}

namespace {

// Shared driver for cell-based fillings by value lists. Constraints give,
// per neighbor direction, whether the relation is strict.
struct CellListEnumerator {
    const SkewShape& shape;
    int m;
    int max_total;
    bool multiset;
    bool row_strict;  // left neighbor's max vs this cell's min
    bool col_strict;  // upper neighbor's max vs this cell's min
    const std::function<void(const CellFilling&)>& visit;

    std::vector<Cell> cells;
    CellFilling filling;
    int total = 0;

    void run() {
        cells = shape.cells();
        place(0);
    }

    void place(std::size_t idx) {
        if (idx == cells.size()) {
            visit(filling);
            return;
        }
        Cell cell = cells[idx];
        int low = 1;
        if (auto it = filling.find({cell.row, cell.col - 1}); it != filling.end())
            low = std::max(low, list_max(it->second) + (row_strict ? 1 : 0));
        if (auto it = filling.find({cell.row - 1, cell.col}); it != filling.end())
            low = std::max(low, list_max(it->second) + (col_strict ? 1 : 0));
        int remaining = static_cast<int>(cells.size() - idx - 1);
        int budget = max_total - total - remaining;
        if (budget < 1 || low > m) return;
        std::vector<int> acc;
        gen_value_lists(low, m, budget, !multiset, acc, [&](const std::vector<int>& list) {
            filling[cell] = list;
            total += static_cast<int>(list.size());
            place(idx + 1);
            total -= static_cast<int>(list.size());
            filling.erase(cell);
        });
    }
};

}  // namespace

TruncatedSeries weak_set_valued_tableaux(const SkewShape& shape, SeriesContext ctx) {
    TruncatedSeries out(ctx);
    std::function<void(const CellFilling&)> add = [&](const CellFilling& filling) {
        std::vector<int> exps(static_cast<std::size_t>(ctx.num_vars), 0);
        for (const auto& [cell, list] : filling)
            for (int v : list) ++exps[static_cast<std::size_t>(v) - 1];
        out.add_term(exps, 1);
    };
    CellListEnumerator{shape, ctx.num_vars, ctx.max_degree, true, true, false, add, {}, {}, 0}
        .run();
    return out;
}

bool is_weak_set_valued_tableau(const SkewShape& shape, const CellFilling& filling) {
    auto cells = shape.cells();
    if (filling.size() != cells.size()) return false;
    for (const Cell& cell : cells) {
        auto it = filling.find(cell);
        if (it == filling.end() || it->second.empty()) return false;
        if (!std::is_sorted(it->second.begin(), it->second.end())) return false;
        if (it->second.front() < 1) return false;
        if (auto left = filling.find({cell.row, cell.col - 1}); left != filling.end())
            if (list_max(left->second) >= list_min(it->second)) return false;
        if (auto up = filling.find({cell.row - 1, cell.col}); up != filling.end())
            if (list_max(up->second) > list_min(it->second)) return false;
    }
    return true;
}

void enumerate_reverse_plane_partitions(const SkewShape& shape, int m,
                                        const std::function<void(const CellFilling&)>& visit) {
    auto cells = shape.cells();
    CellFilling filling;
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(filling);
            return;
        }
        Cell cell = cells[idx];
        int low = 1;
        if (auto it = filling.find({cell.row, cell.col - 1}); it != filling.end())
            low = std::max(low, it->second[0]);
        if (auto it = filling.find({cell.row - 1, cell.col}); it != filling.end())
            low = std::max(low, it->second[0]);
        for (int v = low; v <= m; ++v) {
            filling[cell] = {v};
            place(idx + 1);
            filling.erase(cell);
        }
    };
    place(0);
}

TruncatedSeries reverse_plane_partitions(const SkewShape& shape, int m) {
    SeriesContext ctx{m, shape.cell_count()};
    TruncatedSeries out(ctx);
    enumerate_reverse_plane_partitions(shape, m, [&](const CellFilling& filling) {
        // Weight: one factor x_v per column containing v.
        std::map<int, std::set<int>> values_per_column;
        for (const auto& [cell, list] : filling)
            values_per_column[cell.col].insert(list[0]);
        std::vector<int> exps(static_cast<std::size_t>(m), 0);
        for (const auto& [col, values] : values_per_column)
            for (int v : values) ++exps[static_cast<std::size_t>(v) - 1];
        out.add_term(exps, 1);
    });
    return out;
}

namespace {

void enumerate_transpose_semistandard(const SkewShape& shape, int m,
                                      const std::function<void(const CellFilling&)>& visit) {
    auto cells = shape.cells();
    CellFilling filling;
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(filling);
            return;
        }
        Cell cell = cells[idx];
        int low = 1;
        if (auto it = filling.find({cell.row, cell.col - 1}); it != filling.end())
            low = std::max(low, it->second[0] + 1);
        if (auto it = filling.find({cell.row - 1, cell.col}); it != filling.end())
            low = std::max(low, it->second[0]);
        for (int v = low; v <= m; ++v) {
            filling[cell] = {v};
            place(idx + 1);
            filling.erase(cell);
        }
    };
    place(0);
}

}  // namespace

bool is_valued_set_base_filling(const SkewShape& shape, const CellFilling& filling) {
    auto cells = shape.cells();
    if (filling.size() != cells.size()) return false;
    for (const Cell& cell : cells) {
        auto it = filling.find(cell);
        if (it == filling.end() || it->second.size() != 1 || it->second[0] < 1) return false;
        if (auto left = filling.find({cell.row, cell.col - 1}); left != filling.end())
            if (left->second[0] >= it->second[0]) return false;
        if (auto up = filling.find({cell.row - 1, cell.col}); up != filling.end())
            if (up->second[0] > it->second[0]) return false;
    }
    return true;
}

TruncatedSeries valued_set_decompositions(const SkewShape& shape, const CellFilling& filling,
                                          SeriesContext ctx) {
    // Maximal constant runs down each column; a run of length k splits into
    // j groups in binomial(k-1, j-1) ways, each group contributing one
    // factor of its value.
    TruncatedSeries result = TruncatedSeries::one(ctx);
    int rows = shape.outer().length();
    int max_col = shape.outer().empty() ? 0 : shape.outer().parts()[0];
    for (int c = 1; c <= max_col; ++c) {
        int r = 1;
        while (r <= rows) {
            if (!shape.contains(r, c)) {
                ++r;
                continue;
            }
            int v = filling.at({r, c})[0];
            int k = 0;
            while (r <= rows && shape.contains(r, c) && filling.at({r, c})[0] == v) {
                ++k;
                ++r;
            }
            TruncatedSeries run_poly(ctx);
            for (int j = 1; j <= k; ++j) {
                std::vector<int> exps(static_cast<std::size_t>(ctx.num_vars), 0);
                exps[static_cast<std::size_t>(v) - 1] = j;
                run_poly.add_term(exps, binomial(k - 1, j - 1));
            }
            result = result * run_poly;
        }
    }
    return result;
}

TruncatedSeries valued_set_tableaux(const SkewShape& shape, int m) {
    SeriesContext ctx{m, shape.cell_count()};
    TruncatedSeries out(ctx);
    enumerate_transpose_semistandard(shape, m, [&](const CellFilling& filling) {
        out += valued_set_decompositions(shape, filling, ctx);
    });
    return out;
}

namespace {

// Semistandard fillings of outer/inner with per-row value caps (0 = no
// cells allowed in that row at all; the cap for elegant fillings of row i
// is i-1). strict_rows upgrades rows to strictly increasing.
Int count_row_capped(const Partition& inner, const Partition& outer, bool strict_rows,
                     const std::function<void(const CellFilling&)>* visit) {
    if (!outer.contains(inner)) return 0;
    SkewShape shape(outer, inner);
    auto cells = shape.cells();
    Int count = 0;
    CellFilling filling;
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            if (visit) (*visit)(filling);
            return;
        }
        Cell cell = cells[idx];
        int cap = cell.row - 1;
        int low = 1;
        if (auto it = filling.find({cell.row, cell.col - 1}); it != filling.end())
            low = std::max(low, it->second[0] + (strict_rows ? 1 : 0));
        if (auto it = filling.find({cell.row - 1, cell.col}); it != filling.end())
            low = std::max(low, it->second[0] + 1);
        for (int v = low; v <= cap; ++v) {
            filling[cell] = {v};
            place(idx + 1);
            filling.erase(cell);
        }
    };
    place(0);
    return count;
}

}  // namespace

Int elegant_count(const Partition& lambda, const Partition& mu) {
    return count_row_capped(lambda, mu, false, nullptr);
}

Int strict_elegant_count(const Partition& mu, const Partition& lambda) {
    return count_row_capped(lambda, mu, true, nullptr);
}

void enumerate_strict_elegant(const Partition& mu, const Partition& lambda,
                              const std::function<void(const CellFilling&)>& visit) {
    count_row_capped(lambda, mu, true, &visit);
}

void enumerate_transposed_elegant(const Partition& outer, const Partition& inner,
                                  const std::function<void(const CellFilling&)>& visit) {
    if (!outer.contains(inner)) return;
    SkewShape shape(outer, inner);
    auto cells = shape.cells();
    CellFilling filling;
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(filling);
            return;
        }
        Cell cell = cells[idx];
        int cap = cell.col - 1;
        int low = 1;
        if (auto it = filling.find({cell.row, cell.col - 1}); it != filling.end())
            low = std::max(low, it->second[0] + 1);
        if (auto it = filling.find({cell.row - 1, cell.col}); it != filling.end())
            low = std::max(low, it->second[0]);
        for (int v = low; v <= cap; ++v) {
            filling[cell] = {v};
            place(idx + 1);
            filling.erase(cell);
        }
    };
    place(0);
}

int restricted_h_value(const Partition& mu, Cell b) {
    int above = 0;
    for (int r = 1; r < b.row; ++r)
        if (mu.part(r) >= b.col) ++above;
    int left = std::min(mu.part(b.row), b.col - 1);
    return above + left;
}

std::map<Cell, int> restricted_corner_bounds(const Partition& mu, const Partition& lambda) {
    std::map<Cell, int> bounds;
    SkewShape shape(lambda, mu);
    for (const Cell& b : shape.cells()) {
        bool corner = mu.part(b.row) == b.col - 1 && (b.row == 1 || mu.part(b.row - 1) >= b.col);
        if (corner) bounds[b] = restricted_h_value(mu, b);
    }
    return bounds;
}

void enumerate_restricted_pp(const Partition& mu, const Partition& lambda,
                             const std::function<void(const CellFilling&)>& visit) {
    if (!lambda.contains(mu)) return;
    SkewShape shape(lambda, mu);
    auto cells = shape.cells();
    auto bounds = restricted_corner_bounds(mu, lambda);
    CellFilling filling;
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(filling);
            return;
        }
        Cell cell = cells[idx];
        // Weakly decreasing along rows and columns; every cell picks up a
        // finite ceiling from a neighbor or a corner bound.
        int high = std::numeric_limits<int>::max();
        bool have_neighbor = false;
        if (auto it = filling.find({cell.row, cell.col - 1}); it != filling.end()) {
            high = std::min(high, it->second[0]);
            have_neighbor = true;
        }
        if (auto it = filling.find({cell.row - 1, cell.col}); it != filling.end()) {
            high = std::min(high, it->second[0]);
            have_neighbor = true;
        }
        if (auto it = bounds.find(cell); it != bounds.end()) {
            high = std::min(high, it->second);
            have_neighbor = true;
        }
        if (!have_neighbor)
            throw std::logic_error("every source cell of a skew shape is an inner corner");
        for (int v = 1; v <= high; ++v) {
            filling[cell] = {v};
            place(idx + 1);
            filling.erase(cell);
        }
    };
    place(0);
}

bool is_restricted_pp(const Partition& mu, const Partition& lambda, const CellFilling& filling) {
    if (!lambda.contains(mu)) return false;
    SkewShape shape(lambda, mu);
    auto cells = shape.cells();
    if (filling.size() != cells.size()) return false;
    auto bounds = restricted_corner_bounds(mu, lambda);
    for (const Cell& cell : cells) {
        auto it = filling.find(cell);
        if (it == filling.end() || it->second.size() != 1 || it->second[0] < 1) return false;
        int v = it->second[0];
        if (auto left = filling.find({cell.row, cell.col - 1}); left != filling.end())
            if (left->second[0] < v) return false;
        if (auto up = filling.find({cell.row - 1, cell.col}); up != filling.end())
            if (up->second[0] < v) return false;
        if (auto bound = bounds.find(cell); bound != bounds.end())
            if (v > bound->second) return false;
    }
    return true;
}

Int restricted_pp_count(const Partition& mu, const Partition& lambda) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    if (!lambda.contains(mu)) return 0;
    if (mu == lambda) return 1;
    Int count = 0;
    enumerate_restricted_pp(mu, lambda, [&](const CellFilling&) { ++count; });
    return count;
}

std::vector<std::pair<Composition, Int>> mergings(const Composition& alpha) {
    std::map<Composition, Int> counts;
    if (alpha.empty()) {
        counts[Composition{}] = 1;
    } else {
        RibbonWord word = ribbon_word(alpha);
        std::size_t k = word.steps.size();
        for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
            RibbonWord kept;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1UL << i)) kept.steps.push_back(word.steps[i]);
            counts[composition_of_ribbon_word(kept)] += 1;
        }
    }
    return {counts.begin(), counts.end()};
}

Int merging_multiplicity(const Composition& alpha, const Composition& beta) {
    for (const auto& [target, count] : mergings(alpha))
        if (target == beta) return count;
    return 0;
}

CellFilling phi_map(const Partition& lambda, const Partition& nu_t, const ElegantPair& pair) {
    CellFilling out;
    SkewShape middle(pair.mu, lambda);
    for (const Cell& b : middle.cells()) {
        int d = b.row + b.col - 1;
        out[b] = {d - pair.inner_filling.at(b)[0]};
    }
    SkewShape top(nu_t, pair.mu);
    for (const Cell& b : top.cells()) out[b] = {b.col - pair.outer_filling.at(b)[0]};
    return out;
}

ElegantPair psi_map(const Partition& lambda, const Partition& nu_t, const CellFilling& rpp) {
    // A box belongs to mu exactly when its entry reaches its column index.
    std::vector<int> mu_rows(static_cast<std::size_t>(nu_t.length()), 0);
    for (int r = 1; r <= nu_t.length(); ++r) {
        int width = lambda.part(r);
        while (width < nu_t.part(r)) {
            auto it = rpp.find({r, width + 1});
            if (it == rpp.end() || it->second[0] < width + 1) break;
            ++width;
        }
        mu_rows[static_cast<std::size_t>(r) - 1] = width;
    }
    while (!mu_rows.empty() && mu_rows.back() == 0) mu_rows.pop_back();
    Partition mu(mu_rows);

    ElegantPair pair;
    pair.mu = mu;
    for (const Cell& b : SkewShape(mu, lambda).cells())
        pair.inner_filling[b] = {b.row + b.col - 1 - rpp.at(b)[0]};
    for (const Cell& b : SkewShape(nu_t, mu).cells())
        pair.outer_filling[b] = {b.col - rpp.at(b)[0]};
    return pair;
}

void enumerate_elegant_pairs(const Partition& lambda, const Partition& nu_t,
                             const std::function<void(const ElegantPair&)>& visit) {
    if (!nu_t.contains(lambda)) return;
    for (const Partition& mu : partitions_up_to(nu_t.size())) {
        if (!mu.contains(lambda) || !nu_t.contains(mu)) continue;
        enumerate_strict_elegant(mu, lambda, [&](const CellFilling& inner) {
            enumerate_transposed_elegant(nu_t, mu, [&](const CellFilling& outer) {
                visit(ElegantPair{mu, inner, outer});
            });
        });
    }
}

}  // namespace khopf
