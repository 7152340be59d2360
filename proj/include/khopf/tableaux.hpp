#pragma once

#include <functional>
#include <map>
#include <vector>

#include "khopf/core.hpp"
#include "khopf/series.hpp"

namespace khopf {

/// Value list per poset element: strictly increasing for set-valued
/// fillings, weakly increasing for multiset-valued ones.
using PosetFilling = std::vector<std::vector<int>>;

/// Filling of the cells of a skew shape by value lists (or single values,
/// lists of length one).
using CellFilling = std::map<Cell, std::vector<int>>;

// --- (P,theta) partitions ---------------------------------------------------

/// Streams all set-valued (P,theta)-partitions with entries <= m and total
/// size <= max_total, elements in topological order, value lists in
/// lexicographic order.
void enumerate_set_valued(const LabeledPoset& poset, int m, int max_total,
                          const std::function<void(const PosetFilling&)>& visit);
void enumerate_multiset_valued(const LabeledPoset& poset, int m, int max_total,
                               const std::function<void(const PosetFilling&)>& visit);

bool is_set_valued_partition(const LabeledPoset& poset, const PosetFilling& sigma);
bool is_multiset_valued_partition(const LabeledPoset& poset, const PosetFilling& sigma);

/// K~_{P,theta} truncated by the context.
TruncatedSeries set_valued_partitions(const LabeledPoset& poset, SeriesContext ctx);
/// K^_{P,theta} truncated by the context.
TruncatedSeries multiset_valued_partitions(const LabeledPoset& poset, SeriesContext ctx);

// --- shape enumerators -------------------------------------------------------

/// J_{lambda/nu}: multiset fillings with rows strictly increasing and
/// columns weakly increasing, truncated by the context.
TruncatedSeries weak_set_valued_tableaux(const SkewShape& shape, SeriesContext ctx);
bool is_weak_set_valued_tableau(const SkewShape& shape, const CellFilling& filling);

/// g_{lambda/mu}: reverse plane partitions with entries <= m; the weight of
/// a filling records, for each value, the number of columns containing it.
TruncatedSeries reverse_plane_partitions(const SkewShape& shape, int m);
void enumerate_reverse_plane_partitions(const SkewShape& shape, int m,
                                        const std::function<void(const CellFilling&)>& visit);

/// j_{lambda/mu}: valued-set tableaux with entries <= m. A maximal constant
/// run of length k in a column contributes its 2^{k-1} interval splits.
TruncatedSeries valued_set_tableaux(const SkewShape& shape, int m);
bool is_valued_set_base_filling(const SkewShape& shape, const CellFilling& filling);
/// The generating polynomial of all decompositions of one base filling.
TruncatedSeries valued_set_decompositions(const SkewShape& shape, const CellFilling& filling,
                                          SeriesContext ctx);

// --- elegant fillings and restricted plane partitions ------------------------

/// f^lambda_mu: semistandard fillings of mu/lambda with row-i entries in
/// [1, i-1]; zero when lambda is not contained in mu, one when equal.
Int elegant_count(const Partition& lambda, const Partition& mu);

/// r_{mu,lambda}: elegant fillings of mu/lambda with rows and columns both
/// strictly increasing.
Int strict_elegant_count(const Partition& mu, const Partition& lambda);

void enumerate_strict_elegant(const Partition& mu, const Partition& lambda,
                              const std::function<void(const CellFilling&)>& visit);
/// Fillings of the skew shape whose transpose is elegant: rows strict,
/// columns weak, column-j entries in [1, j-1].
void enumerate_transposed_elegant(const Partition& outer, const Partition& inner,
                                  const std::function<void(const CellFilling&)>& visit);

/// h(b) for a cell of lambda/mu: boxes of mu above b in its column plus
/// boxes of mu to the left of b in its row.
int restricted_h_value(const Partition& mu, Cell b);

/// Outer corners of mu lying inside lambda/mu, with their h-values.
std::map<Cell, int> restricted_corner_bounds(const Partition& mu, const Partition& lambda);

/// P^mu_lambda: zero unless mu is contained in lambda (by convention the
/// empty inner shape pairs only with the empty outer shape), one when
/// equal, otherwise the number of restricted plane partitions of
/// lambda/mu.
Int restricted_pp_count(const Partition& mu, const Partition& lambda);
void enumerate_restricted_pp(const Partition& mu, const Partition& lambda,
                             const std::function<void(const CellFilling&)>& visit);
bool is_restricted_pp(const Partition& mu, const Partition& lambda, const CellFilling& filling);

// --- ribbon mergings ----------------------------------------------------------

/// All mergings of the ribbon alpha: each subset of kept edges of the
/// ribbon walk contracts to one target shape. Returns (beta, M_{alpha,beta})
/// pairs in label order.
std::vector<std::pair<Composition, Int>> mergings(const Composition& alpha);
Int merging_multiplicity(const Composition& alpha, const Composition& beta);

// --- the phi/psi bijection -----------------------------------------------------

/// A filling pair on nu^t/lambda split by a middle shape mu: strictly
/// elegant on mu/lambda, transposed-elegant on nu^t/mu.
struct ElegantPair {
    Partition mu;
    CellFilling inner_filling;  // on mu/lambda
    CellFilling outer_filling;  // on nu_t/mu
    friend bool operator==(const ElegantPair&, const ElegantPair&) = default;
};

/// phi: sends an elegant pair to the restricted plane partition of
/// nu^t/lambda with d(b)-e_b on mu/lambda and c(b)-e_b on nu^t/mu.
CellFilling phi_map(const Partition& lambda, const Partition& nu_t, const ElegantPair& pair);

/// psi: recovers mu (a box lies in mu exactly when its entry is at least
/// its column index) and the two fillings.
ElegantPair psi_map(const Partition& lambda, const Partition& nu_t, const CellFilling& rpp);

void enumerate_elegant_pairs(const Partition& lambda, const Partition& nu_t,
                             const std::function<void(const ElegantPair&)>& visit);

}  // namespace khopf
