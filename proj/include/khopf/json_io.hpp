#pragma once

#include <json.hpp>

#include "khopf/core.hpp"
#include "khopf/formal_sum.hpp"
#include "khopf/ksym.hpp"
#include "khopf/series.hpp"

namespace khopf {

using nlohmann::json;

inline json int_to_json(const Int& v) {
    if (fits_int64(v)) return to_int64(v);
    return v.get_str();
}

/// {"m":..,"D":..,"terms":[{"exps":[...],"coeff":..}]} with terms in the
/// deterministic (degree, lexicographic) order.
inline json series_to_json(const TruncatedSeries& f) {
    json terms = json::array();
    for (const auto& [mono, coeff] : f.terms())
        terms.push_back({{"exps", mono.exponents()}, {"coeff", int_to_json(coeff)}});
    return {{"m", f.context().num_vars}, {"D", f.context().max_degree}, {"terms", terms}};
}

template <typename Label>
json formal_sum_to_json(const FormalSum<Label>& sum) {
    json terms = json::array();
    for (const auto& [label, coeff] : sum.terms())
        terms.push_back({{"index", label.parts()}, {"coeff", int_to_json(coeff)}});
    return {{"terms", terms}};
}

template <typename Label>
json tensor_sum_to_json(const TensorSum<Label>& sum) {
    json terms = json::array();
    for (const auto& [pair, coeff] : sum.terms())
        terms.push_back({{"left", pair.left.parts()},
                         {"right", pair.right.parts()},
                         {"coeff", int_to_json(coeff)}});
    return {{"terms", terms}};
}

inline json partition_sum_to_json(const PartitionSum& sum) {
    json out = formal_sum_to_json(sum.terms);
    if (sum.truncated_at) out["truncated_at"] = *sum.truncated_at;
    return out;
}

inline json word_to_json(const Word& w) { return json(w); }

}  // namespace khopf
