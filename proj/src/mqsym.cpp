#include "khopf/mqsym.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "khopf/words.hpp"

namespace khopf {

namespace {

using SeriesKey = std::tuple<Composition, int, int>;

TruncatedSeries chain_series(const Composition& alpha, SeriesContext ctx, bool multiset) {
    static std::map<std::pair<SeriesKey, bool>, TruncatedSeries> cache;
    static std::mutex cache_mutex;
    SeriesKey key{alpha, ctx.num_vars, ctx.max_degree};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find({key, multiset}); it != cache.end()) return it->second;
    }
    LabeledPoset chain = LabeledPoset::chain(canonical_permutation(alpha));
    TruncatedSeries s = multiset ? multiset_valued_partitions(chain, ctx)
                                 : set_valued_partitions(chain, ctx);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(key, multiset), s);
    return s;
}

}  // namespace

TruncatedSeries ltilde_series(const Composition& alpha, SeriesContext ctx) {
    if (alpha.size() > ctx.max_degree)
        throw std::invalid_argument("label size exceeds the degree bound");
    return chain_series(alpha, ctx, false);
}

TruncatedSeries lhat_series(const Composition& alpha, SeriesContext ctx) {
    if (alpha.size() > ctx.max_degree)
        throw std::invalid_argument("label size exceeds the degree bound");
    return chain_series(alpha, ctx, true);
}

TruncatedSeries realize(const LSum& sum, SeriesContext ctx, LBasis basis) {
    if (sum.max_size < ctx.max_degree)
        throw std::invalid_argument(
            "realizing an LSum needs its label bound to reach the degree bound");
    TruncatedSeries out(ctx);
    for (const auto& [alpha, c] : sum.terms.terms()) {
        if (alpha.size() > ctx.max_degree) continue;  // contributes nothing below the bound
        TruncatedSeries s =
            basis == LBasis::Ltilde ? ltilde_series(alpha, ctx) : lhat_series(alpha, ctx);
        out += s.scaled(c);
    }
    return out;
}

LSum ltilde_product(const Composition& alpha, const Composition& beta, int max_size) {
    LSum out;
    out.max_size = max_size;
    Word u = canonical_permutation(alpha);
    Word v = shift(canonical_permutation(beta), alpha.size());
    for (int n = alpha.size() + beta.size(); n <= max_size; ++n)
        for (const Word& w : multishuffles(u, v, n)) out.terms.add(descent_composition(w), 1);
    return out;
}

TensorSum<Composition> ltilde_coproduct(const Composition& alpha) {
    TensorSum<Composition> out;
    for (const TensorSplit& split : cuut(canonical_permutation(alpha)))
        out.add({descent_composition(split.left), descent_composition(split.right)}, 1);
    return out;
}

LSum ltilde_antipode(const Composition& alpha, int max_size) {
    LSum out;
    out.max_size = max_size;
    Composition target = omega(alpha);
    for (const Composition& beta : compositions_up_to(max_size)) {
        Int mult = merging_multiplicity(beta, target);
        if (mult == 0) continue;
        out.terms.add(beta, beta.size() % 2 == 0 ? mult : -mult);
    }
    return out;
}

TruncatedSeries lhat_antipode_series(const Composition& alpha, SeriesContext ctx) {
    return lhat_series(omega(alpha), ctx).negate_variables();
}

LSum expand_ktilde(const LabeledPoset& poset, int n_max) {
    if (n_max < poset.size())
        throw std::invalid_argument("expansion bound must reach the poset size");
    LSum out;
    out.max_size = n_max;
    for (int n = poset.size(); n <= n_max; ++n)
        for (const Word& w : multi_jordan_holder(poset, n))
            out.terms.add(descent_composition(w), 1);
    return out;
}

// The label sum is the same for K^; only the basis read changes.
LSum expand_khat(const LabeledPoset& poset, int n_max) { return expand_ktilde(poset, n_max); }

FormalSum<Composition> degree_component_ltilde(const Composition& alpha, int i) {
    FormalSum<Composition> out;
    int n = alpha.size();
    for_each_i_extension(subset_of_composition(alpha), n, i, [&](const std::set<int>& e) {
        out.add(composition_of_subset(e, n + i), 1);
    });
    return out;
}

FormalSum<Composition> degree_component_lhat(const Composition& alpha, int i) {
    FormalSum<Composition> out;
    int n = alpha.size();
    Composition target = omega(alpha);
    for_each_i_extension(subset_of_composition(target), n, i, [&](const std::set<int>& e) {
        out.add(omega(composition_of_subset(e, n + i)), 1);
    });
    return out;
}

FormalSum<Composition> expand_series_in_ltilde(const TruncatedSeries& f) {
    FormalSum<Composition> out;
    TruncatedSeries residual = f;
    for (int d = 0; d <= f.context().max_degree; ++d) {
        TruncatedSeries component = residual.homogeneous_component(d);
        if (component.is_zero()) continue;
        FormalSum<Composition> coeffs = expand_in_fundamental(residual, d);
        for (const auto& [alpha, c] : coeffs.terms()) {
            out.add(alpha, c);
            residual -= ltilde_series(alpha, f.context()).scaled(c);
        }
    }
    if (!residual.is_zero())
        throw std::runtime_error("series is not an L~ combination within the context");
    return out;
}

KhatBijectionImage khat_bijection_forward(const LabeledPoset& poset, const PosetFilling& sigma) {
    if (!is_multiset_valued_partition(poset, sigma))
        throw std::invalid_argument("not a multiset-valued (P,theta)-partition");
    int max_value = 0;
    for (const auto& list : sigma)
        for (int v : list) max_value = std::max(max_value, v);

    // Concatenate the sorted level words; remember each position's level.
    Word w_sigma;
    std::vector<int> level_of_position;
    for (int value = 1; value <= max_value; ++value) {
        std::vector<int> labels;
        for (int e = 0; e < poset.size(); ++e)
            for (int v : sigma[static_cast<std::size_t>(e)])
                if (v == value) labels.push_back(poset.label(e));
        std::sort(labels.begin(), labels.end());
        for (int lab : labels) {
            w_sigma.push_back(lab);
            level_of_position.push_back(value);
        }
    }

    // Run-length compression yields the unique m-permutation carrier.
    KhatBijectionImage image;
    std::size_t pos = 0;
    while (pos < w_sigma.size()) {
        std::size_t end = pos;
        while (end < w_sigma.size() && w_sigma[end] == w_sigma[pos]) ++end;
        image.w.push_back(w_sigma[pos]);
        std::vector<int> block(level_of_position.begin() + static_cast<long>(pos),
                               level_of_position.begin() + static_cast<long>(end));
        image.sigma_prime.push_back(std::move(block));
        pos = end;
    }
    return image;
}

PosetFilling khat_bijection_backward(const LabeledPoset& poset, const KhatBijectionImage& image) {
    if (image.w.size() != image.sigma_prime.size())
        throw std::invalid_argument("carrier word and chain filling lengths differ");
    if (!is_m_permutation(image.w))
        throw std::invalid_argument("carrier word must be an m-permutation");
    // The carrier word repeats letters, so check the chain conditions
    // directly: weak steps under ascents of w, strict under descents.
    for (std::size_t j = 0; j < image.sigma_prime.size(); ++j) {
        const auto& block = image.sigma_prime[j];
        if (block.empty() || !std::is_sorted(block.begin(), block.end()) || block.front() < 1)
            throw std::invalid_argument("chain filling blocks must be sorted nonempty multisets");
        if (j + 1 < image.sigma_prime.size()) {
            int hi = block.back();
            int lo = image.sigma_prime[j + 1].front();
            bool strict = image.w[j] > image.w[j + 1];
            if (strict ? hi >= lo : hi > lo)
                throw std::invalid_argument("chain filling violates the partition conditions");
        }
    }
    PosetFilling sigma(static_cast<std::size_t>(poset.size()));
    for (std::size_t j = 0; j < image.w.size(); ++j) {
        int lab = image.w[j];
        if (lab < 1 || lab > poset.size())
            throw std::invalid_argument("carrier word letter outside [n]");
        int element = poset.element_with_label(lab);
        auto& dst = sigma[static_cast<std::size_t>(element)];
        dst.insert(dst.end(), image.sigma_prime[j].begin(), image.sigma_prime[j].end());
    }
    for (auto& list : sigma) {
        if (list.empty()) throw std::invalid_argument("carrier word must use every label");
        std::sort(list.begin(), list.end());
    }
    return sigma;
}

}  // namespace khopf
