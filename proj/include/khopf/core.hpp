#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace khopf {

/// Ordered sequence of positive parts. The empty composition is the unit
/// label of every algebra in this library.
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Total order used for map keys and printed term order: by size, then
    // lexicographically on the parts.
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Composition&, const Composition&) = default;

    std::string to_string() const;

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int row) const;  // 1-based, 0 beyond the last row

    bool contains(const Partition& inner) const;

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition&, const Partition&) = default;

    std::string to_string() const;

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A cell of a Young diagram in matrix coordinates, 1-based: row grows
/// downward, column grows to the right.
struct Cell {
    int row = 0;
    int col = 0;
    friend std::strong_ordering operator<=>(const Cell&, const Cell&) = default;
};

/// Skew shape outer/inner with the containment invariant checked.
class SkewShape {
  public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int cell_count() const { return outer_.size() - inner_.size(); }
    bool contains(int row, int col) const;

    /// Cells in row reading order: top row first, left to right.
    std::vector<Cell> cells() const;

    SkewShape transpose() const;

    std::string to_string() const;

  private:
    Partition outer_;
    Partition inner_;
};

enum class Step : std::uint8_t { R, U };

/// Walk of a ribbon from its bottom-left box: R moves right within a row,
/// U moves up to the next row. A ribbon with n boxes has n-1 steps.
struct RibbonWord {
    std::vector<Step> steps;
    friend bool operator==(const RibbonWord&, const RibbonWord&) = default;
    std::string to_string() const;
};

/// Word over the positive integers. An m-permutation additionally has no
/// two equal adjacent letters.
using Word = std::vector<int>;

bool is_m_permutation(const Word& w);
std::string word_to_string(const Word& w);

/// Finite poset with an explicit covering relation and a bijective
/// labeling theta onto [n]. Elements are indexed 0..n-1; labels are 1..n.
class LabeledPoset {
  public:
    LabeledPoset() = default;
    LabeledPoset(int n, std::vector<std::pair<int, int>> covers, std::vector<int> theta);

    /// Chain p_1 < ... < p_k labeled theta(p_i) = w_i.
    static LabeledPoset chain(const Word& w);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    int label(int element) const { return theta_[static_cast<std::size_t>(element)]; }
    int element_with_label(int lab) const { return theta_inv_[static_cast<std::size_t>(lab) - 1]; }

    /// Strict order relation, computed once by reachability over the covers.
    bool less(int a, int b) const { return less_[static_cast<std::size_t>(a * n_ + b)]; }

    /// Elements listed so that every element appears after all elements
    /// below it; ties broken by element index.
    const std::vector<int>& topological_order() const { return topo_; }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<int> theta_;
    std::vector<int> theta_inv_;
    std::vector<bool> less_;
    std::vector<int> topo_;
};

// --- subset/composition dictionary ---------------------------------------

/// C(S): the composition of n with partial sums S = {s_1 < ... < s_k}.
Composition composition_of_subset(const std::set<int>& s, int n);

/// S_alpha: partial sums of alpha excluding the total.
std::set<int> subset_of_composition(const Composition& alpha);

/// C(w) from the descent set of an m-permutation.
Composition descent_composition(const Word& w);

/// Lexicographically smallest permutation of [|alpha|] whose descent
/// composition is alpha.
Word canonical_permutation(const Composition& alpha);

/// All permutations of [|alpha|] with descent composition alpha.
std::vector<Word> permutations_with_descent_composition(const Composition& alpha);

/// The involution on compositions of n: partial sums of omega(alpha) are
/// the complement in [n-1] of the partial sums of rev(alpha).
Composition omega(const Composition& alpha);

Composition reverse(const Composition& alpha);

/// Transpose of a Young diagram.
Partition conjugate(const Partition& lambda);

/// All partitions of n, ordered by the Partition total order.
std::vector<Partition> partitions_of(int n);
/// All partitions of size <= n.
std::vector<Partition> partitions_up_to(int n);
/// All compositions of n.
std::vector<Composition> compositions_of(int n);
std::vector<Composition> compositions_up_to(int n);

// --- ribbons ---------------------------------------------------------------

RibbonWord ribbon_word(const Composition& alpha);
Composition composition_of_ribbon_word(const RibbonWord& word);

/// Poset of the cells of a skew shape: each cell is covered by the cell to
/// its right and the cell below it; theta_s labels the bottom row 1,2,...
/// left to right, then the next row up, and so on.
LabeledPoset row_reading_poset(const SkewShape& shape);

// --- text notation ----------------------------------------------------------

/// Comma-separated parts; "-" denotes the empty label.
Composition parse_composition(const std::string& text);
Partition parse_partition(const std::string& text);
/// "outer/inner", a bare "outer", or "-" for the empty shape.
SkewShape parse_skew_shape(const std::string& text);
/// Digit string when all letters are <= 9, else comma-separated.
Word parse_word(const std::string& text);

}  // namespace khopf
