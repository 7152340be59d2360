#pragma once

#include <optional>
#include <string>

#include "khopf/core.hpp"
#include "khopf/formal_sum.hpp"
#include "khopf/series.hpp"

namespace khopf {

/// Combination of partition-indexed basis elements. The truncation marker
/// is set whenever the source formula is an infinite G-expansion, and
/// printing always shows it; finite combinations carry no marker.
struct PartitionSum {
    FormalSum<Partition> terms;
    std::optional<int> truncated_at;

    std::string to_string() const {
        std::string s = terms.to_string();
        if (truncated_at) s += " (truncated at size " + std::to_string(*truncated_at) + ")";
        return s;
    }
};

/// K~ of a straight or skew shape via its row-reading poset.
TruncatedSeries ktilde_series(const SkewShape& shape, SeriesContext ctx);

/// Stable Grothendieck polynomial: set-valued tableaux signed by
/// (-1)^{|T| - #cells}.
TruncatedSeries G_series(const SkewShape& shape, SeriesContext ctx);

/// Weak set-valued tableau generating function.
TruncatedSeries J_series(const SkewShape& shape, SeriesContext ctx);

/// Dual stable Grothendieck polynomial (reverse plane partitions with the
/// column-count weight). Finite; the context only truncates.
TruncatedSeries g_series(const SkewShape& shape, SeriesContext ctx);

/// Valued-set tableau generating function. Finite.
TruncatedSeries j_series(const SkewShape& shape, SeriesContext ctx);

/// J~ = (-1)^{#cells} J(-x) and j~ = (-1)^{#cells} j(-x).
TruncatedSeries Jtilde_series(const SkewShape& shape, SeriesContext ctx);
TruncatedSeries jtilde_series(const SkewShape& shape, SeriesContext ctx);

/// S(K~_lambda) = J_lambda(-x).
TruncatedSeries antipode_K(const Partition& lambda, SeriesContext ctx);
/// S(G_lambda) = (-1)^{|lambda|} J_lambda.
TruncatedSeries antipode_G(const Partition& lambda, SeriesContext ctx);

/// S(G_mu) expanded over stable Grothendieck polynomials via restricted
/// plane partition counts; an infinite sum, truncated at label size.
PartitionSum antipode_G_expansion(const Partition& mu, int max_size);

/// S(j~_lambda) expanded over j~; a finite sum.
PartitionSum antipode_jtilde_expansion(const Partition& lambda);

/// s_lambda = sum of f^lambda_mu G_mu (truncated) and
/// G_lambda = sum of (-1)^{|mu/lambda|} r_{mu,lambda} s_mu (truncated).
PartitionSum lenart_s_to_G(const Partition& lambda, int max_size);
PartitionSum lenart_G_to_s(const Partition& lambda, int max_size);

struct TransitionCheck {
    bool ok = false;
    Int sum_of_products;   // sum over mu of r_{mu,lambda} f^{mu^t}_nu
    Int rpp_count;         // P^{lambda^t}_nu
    Int pair_count;        // direct enumeration of elegant pairs
    bool bijection_ok = false;  // phi lands on distinct valid rpps, psi inverts
};

/// Verifies the transition identity behind the G-expansion of the
/// antipode for one (lambda, nu), by three independent counts plus the
/// phi/psi round-trip.
TransitionCheck transition_identity_check(const Partition& lambda, const Partition& nu);

struct HallDualityReport {
    bool ok = false;
    std::string first_failure;
};

/// <g_lambda, G_mu> = delta for all labels up to max_size, evaluated by
/// Schur expansion inside the context.
HallDualityReport hall_duality_check(int max_size, SeriesContext ctx);

}  // namespace khopf
