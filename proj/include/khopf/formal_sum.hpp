#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "khopf/ints.hpp"

namespace khopf {

/// Finite integer combination of basis labels. Zero coefficients are never
/// stored; iteration order is the label order (size, then lexicographic).
template <typename Label>
class FormalSum {
  public:
    using Terms = std::map<Label, Int>;

    FormalSum() = default;

    static FormalSum unit(const Label& label, Int coeff = 1) {
        FormalSum s;
        s.add(label, std::move(coeff));
        return s;
    }

    void add(const Label& label, const Int& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(label, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const FormalSum& other, const Int& scale = 1) {
        for (const auto& [label, coeff] : other.terms_) add(label, coeff * scale);
    }

    Int coefficient(const Label& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? Int(0) : it->second;
    }

    const Terms& terms() const { return terms_; }
    typename Terms::const_iterator begin() const { return terms_.begin(); }
    typename Terms::const_iterator end() const { return terms_.end(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    FormalSum scaled(const Int& c) const {
        FormalSum out;
        if (c == 0) return out;
        for (const auto& [label, coeff] : terms_) out.terms_.emplace(label, coeff * c);
        return out;
    }

    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [label, coeff] : terms_) {
            if (!first) out << (coeff > 0 ? " + " : " - ");
            else if (coeff < 0) out << "-";
            first = false;
            Int mag = abs(coeff);
            if (mag != 1) out << mag.get_str() << "*";
            out << "[" << label.to_string() << "]";
        }
        return out.str();
    }

  private:
    Terms terms_;
};

/// A label pair for tensor terms a (x) b.
template <typename Label>
struct TensorLabel {
    Label left;
    Label right;
    friend auto operator<=>(const TensorLabel&, const TensorLabel&) = default;
    std::string to_string() const { return left.to_string() + " (x) " + right.to_string(); }
};

template <typename Label>
using TensorSum = FormalSum<TensorLabel<Label>>;

}  // namespace khopf
