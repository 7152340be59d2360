#pragma once

#include <functional>
#include <set>
#include <vector>

#include "khopf/core.hpp"
#include "khopf/ints.hpp"

namespace khopf {

/// One term of Cuut(w). Concatenating left and right recovers w either
/// exactly (a disjoint split) or with one shared letter (an overlap split).
struct TensorSplit {
    Word left;
    Word right;
    friend bool operator==(const TensorSplit&, const TensorSplit&) = default;
};

/// Whether w arises from a by repeating letters in place, i.e. there is a
/// non-decreasing surjection t with w_j = a_{t(j)}.
bool is_multiword(const Word& w, const Word& a);

/// w with every letter shifted by n.
Word shift(const Word& w, int n);

/// All multishuffles of u and v of exactly the given length, in
/// lexicographic order. u and v must have distinct letters and disjoint
/// alphabets.
std::vector<Word> multishuffles(const Word& u, const Word& v, int exact_length);

/// The 2k+1 splits of w: the empty prefix split first, then for each i
/// the overlap split sharing w_i followed by the disjoint split after
/// w_i.
std::vector<TensorSplit> cuut(const Word& w);

/// A linear multi-extension by [N], stored as e[element] = sorted block.
using MultiExtension = std::vector<std::vector<int>>;

/// All maps e assigning disjoint nonempty blocks partitioning [N] to the
/// elements of P with e(x) entirely below e(y) whenever x < y, and no block
/// containing two consecutive integers.
std::vector<MultiExtension> linear_multi_extensions(const LabeledPoset& poset, int n_letters);

/// The words theta(e^{-1}(1)) ... theta(e^{-1}(N)) over all linear
/// multi-extensions; every entry is an m-permutation of [|P|].
std::vector<Word> multi_jordan_holder(const LabeledPoset& poset, int n_letters);

/// |T(D,E)|: injective order-preserving maps t:[n-1] -> [n+i-1] with
/// t(D) inside E and E \ t(D) equal to the complement of the image.
Int i_extension_count(const std::set<int>& d, int n, const std::set<int>& e, int i);

/// Enumerates every order-preserving injection t:[n-1] -> [n+i-1] together
/// with the unique E it extends D to; E = t(D) plus the non-image elements.
void for_each_i_extension(const std::set<int>& d, int n, int i,
                          const std::function<void(const std::set<int>& e)>& visit);

}  // namespace khopf
