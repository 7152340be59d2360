#pragma once

#include <vector>

#include "khopf/core.hpp"
#include "khopf/formal_sum.hpp"
#include "khopf/series.hpp"
#include "khopf/tableaux.hpp"

namespace khopf {

/// Finite truncation of an (in general infinite) combination of L~ or L^
/// basis elements; labels above max_size are not represented.
struct LSum {
    FormalSum<Composition> terms;
    int max_size = 0;
};

enum class LBasis { Ltilde, Lhat };

/// L~_alpha: set-valued partitions of the chain labeled by the canonical
/// permutation of alpha. Memoized per (alpha, context).
TruncatedSeries ltilde_series(const Composition& alpha, SeriesContext ctx);
/// L^_alpha: the multiset-valued analogue.
TruncatedSeries lhat_series(const Composition& alpha, SeriesContext ctx);

/// Realizes an LSum as a series; requires max_size >= max_degree so that
/// no representable label is missing below the degree bound.
TruncatedSeries realize(const LSum& sum, SeriesContext ctx, LBasis basis);

/// Multishuffle product, truncated at label size max_size.
LSum ltilde_product(const Composition& alpha, const Composition& beta, int max_size);

/// Cuut coproduct; finite at the label level.
TensorSum<Composition> ltilde_coproduct(const Composition& alpha);

/// Merging antipode: sum over beta of (-1)^{|beta|} M_{beta,omega(alpha)},
/// truncated at label size max_size.
LSum ltilde_antipode(const Composition& alpha, int max_size);

/// The closed form S(L~_alpha) = L^_{omega(alpha)}(-x), as a series.
TruncatedSeries lhat_antipode_series(const Composition& alpha, SeriesContext ctx);

/// K~_{P,theta} (resp. K^) expanded over multi-Jordan-Holder words with
/// label sizes up to n_max.
LSum expand_ktilde(const LabeledPoset& poset, int n_max);
LSum expand_khat(const LabeledPoset& poset, int n_max);

/// Homogeneous piece |alpha|+i of L~_alpha in the fundamental basis, via
/// i-extension counts.
FormalSum<Composition> degree_component_ltilde(const Composition& alpha, int i);
/// The same for L^_alpha.
FormalSum<Composition> degree_component_lhat(const Composition& alpha, int i);

/// Peels a quasisymmetric series into L~ coefficients degree by degree;
/// exact for labels of size up to the context degree bound.
FormalSum<Composition> expand_series_in_ltilde(const TruncatedSeries& f);

/// Image of a multiset-valued (P,theta)-partition under the chain
/// bijection: the m-permutation w and the chain filling sigma'.
struct KhatBijectionImage {
    Word w;
    std::vector<std::vector<int>> sigma_prime;
    friend bool operator==(const KhatBijectionImage&, const KhatBijectionImage&) = default;
};

KhatBijectionImage khat_bijection_forward(const LabeledPoset& poset, const PosetFilling& sigma);
PosetFilling khat_bijection_backward(const LabeledPoset& poset, const KhatBijectionImage& image);

}  // namespace khopf
