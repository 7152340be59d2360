#include "khopf/ksym.hpp"

#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "khopf/tableaux.hpp"

namespace khopf {

namespace {

using ShapeKey = std::tuple<Partition, Partition, int, int>;

ShapeKey key_of(const SkewShape& shape, SeriesContext ctx) {
    return {shape.outer(), shape.inner(), ctx.num_vars, ctx.max_degree};
}

struct ShapeSeriesCache {
    std::map<ShapeKey, TruncatedSeries> entries;
    std::mutex mutex;

    template <typename Compute>
    TruncatedSeries get(const ShapeKey& key, Compute&& compute) {
        {
            std::lock_guard<std::mutex> lock(mutex);
            if (auto it = entries.find(key); it != entries.end()) return it->second;
        }
        TruncatedSeries s = compute();
        std::lock_guard<std::mutex> lock(mutex);
        return entries.emplace(key, std::move(s)).first->second;
    }
};

// A finite enumerator's natural window is (m, #cells); re-key it to the
// requested one.
TruncatedSeries fit_context(TruncatedSeries s, SeriesContext ctx) {
    if (s.context() == ctx) return s;
    if (s.context().max_degree <= ctx.max_degree) {
        TruncatedSeries widened(ctx);
        for (const auto& [mono, c] : s.terms()) widened.add_term(mono.exponents(), c);
        return widened;
    }
    return s.restricted(ctx);
}

}  // namespace

TruncatedSeries ktilde_series(const SkewShape& shape, SeriesContext ctx) {
    static ShapeSeriesCache cache;
    return cache.get(key_of(shape, ctx), [&] {
        return set_valued_partitions(row_reading_poset(shape), ctx);
    });
}

TruncatedSeries G_series(const SkewShape& shape, SeriesContext ctx) {
    static ShapeSeriesCache cache;
    return cache.get(key_of(shape, ctx), [&] {
        TruncatedSeries out(ctx);
        int cells = shape.cell_count();
        enumerate_set_valued(row_reading_poset(shape), ctx.num_vars, ctx.max_degree,
                             [&](const PosetFilling& sigma) {
                                 std::vector<int> exps(static_cast<std::size_t>(ctx.num_vars), 0);
                                 int total = 0;
                                 for (const auto& list : sigma)
                                     for (int v : list) {
                                         ++exps[static_cast<std::size_t>(v) - 1];
                                         ++total;
                                     }
                                 out.add_term(exps, (total - cells) % 2 == 0 ? 1 : -1);
                             });
        return out;
    });
}

TruncatedSeries J_series(const SkewShape& shape, SeriesContext ctx) {
    static ShapeSeriesCache cache;
    return cache.get(key_of(shape, ctx), [&] { return weak_set_valued_tableaux(shape, ctx); });
}

TruncatedSeries g_series(const SkewShape& shape, SeriesContext ctx) {
    static ShapeSeriesCache cache;
    return cache.get(key_of(shape, ctx), [&] {
        return fit_context(reverse_plane_partitions(shape, ctx.num_vars), ctx);
    });
}

TruncatedSeries j_series(const SkewShape& shape, SeriesContext ctx) {
    static ShapeSeriesCache cache;
    return cache.get(key_of(shape, ctx), [&] {
        return fit_context(valued_set_tableaux(shape, ctx.num_vars), ctx);
    });
}

TruncatedSeries Jtilde_series(const SkewShape& shape, SeriesContext ctx) {
    TruncatedSeries s = J_series(shape, ctx).negate_variables();
    return shape.cell_count() % 2 == 0 ? s : s.scaled(-1);
}

TruncatedSeries jtilde_series(const SkewShape& shape, SeriesContext ctx) {
    TruncatedSeries s = j_series(shape, ctx).negate_variables();
    return shape.cell_count() % 2 == 0 ? s : s.scaled(-1);
}

TruncatedSeries antipode_K(const Partition& lambda, SeriesContext ctx) {
    return J_series(SkewShape(lambda), ctx).negate_variables();
}

TruncatedSeries antipode_G(const Partition& lambda, SeriesContext ctx) {
    TruncatedSeries s = J_series(SkewShape(lambda), ctx);
    return lambda.size() % 2 == 0 ? s : s.scaled(-1);
}

PartitionSum antipode_G_expansion(const Partition& mu, int max_size) {
    PartitionSum out;
    out.truncated_at = max_size;
    Partition mu_t = conjugate(mu);
    Int sign = mu.size() % 2 == 0 ? 1 : -1;
    for (const Partition& lambda : partitions_up_to(max_size))
        out.terms.add(lambda, sign * restricted_pp_count(mu_t, lambda));
    return out;
}

PartitionSum antipode_jtilde_expansion(const Partition& lambda) {
    PartitionSum out;
    Partition lambda_t = conjugate(lambda);
    Int sign = lambda.size() % 2 == 0 ? 1 : -1;
    for (const Partition& mu : partitions_up_to(lambda_t.size()))
        if (lambda_t.contains(mu)) out.terms.add(mu, sign * restricted_pp_count(mu, lambda_t));
    return out;
}

PartitionSum lenart_s_to_G(const Partition& lambda, int max_size) {
    PartitionSum out;
    out.truncated_at = max_size;
    for (const Partition& mu : partitions_up_to(max_size))
        if (mu.contains(lambda)) out.terms.add(mu, elegant_count(lambda, mu));
    return out;
}

PartitionSum lenart_G_to_s(const Partition& lambda, int max_size) {
    PartitionSum out;
    out.truncated_at = max_size;
    for (const Partition& mu : partitions_up_to(max_size)) {
        if (!mu.contains(lambda)) continue;
        Int r = strict_elegant_count(mu, lambda);
        out.terms.add(mu, (mu.size() - lambda.size()) % 2 == 0 ? r : -r);
    }
    return out;
}

TransitionCheck transition_identity_check(const Partition& lambda, const Partition& nu) {
    TransitionCheck check;
    Partition nu_t = conjugate(nu);

    // Route one: products of the two transition counts.
    check.sum_of_products = 0;
    for (const Partition& mu : partitions_up_to(nu_t.size())) {
        if (!mu.contains(lambda) || !nu_t.contains(mu)) continue;
        check.sum_of_products +=
            strict_elegant_count(mu, lambda) * elegant_count(conjugate(mu), nu);
    }

    // Route two: restricted plane partitions of nu^t/lambda (equivalently
    // of nu/lambda^t by transposition).
    check.rpp_count = restricted_pp_count(lambda, nu_t);

    // Route three: direct enumeration of the pairs, plus phi/psi.
    check.pair_count = 0;
    std::set<CellFilling> images;
    bool round_trips = true;
    enumerate_elegant_pairs(lambda, nu_t, [&](const ElegantPair& pair) {
        ++check.pair_count;
        CellFilling rpp = phi_map(lambda, nu_t, pair);
        if (!is_restricted_pp(lambda, nu_t, rpp)) round_trips = false;
        if (!(psi_map(lambda, nu_t, rpp) == pair)) round_trips = false;
        images.insert(rpp);
    });
    check.bijection_ok =
        round_trips && Int(static_cast<long>(images.size())) == check.rpp_count &&
        Int(static_cast<long>(images.size())) == check.pair_count;
    check.ok = check.sum_of_products == check.rpp_count &&
               check.pair_count == check.rpp_count && check.bijection_ok;
    return check;
}

HallDualityReport hall_duality_check(int max_size, SeriesContext ctx) {
    HallDualityReport report;
    report.ok = true;
    std::map<Partition, FormalSum<Partition>> g_exp, G_exp;
    for (const Partition& p : partitions_up_to(max_size)) {
        g_exp[p] = expand_in_schur(g_series(SkewShape(p), ctx));
        G_exp[p] = expand_in_schur(G_series(SkewShape(p), ctx));
    }
    for (const auto& [lambda, a] : g_exp) {
        for (const auto& [mu, b] : G_exp) {
            Int expected = lambda == mu ? 1 : 0;
            if (hall_pairing(a, b) != expected) {
                report.ok = false;
                if (report.first_failure.empty())
                    report.first_failure = "<g_" + lambda.to_string() + ", G_" + mu.to_string() +
                                           "> = " + hall_pairing(a, b).get_str();
            }
        }
    }
    return report;
}

}  // namespace khopf
