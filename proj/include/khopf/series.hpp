#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khopf/core.hpp"
#include "khopf/formal_sum.hpp"
#include "khopf/ints.hpp"

namespace khopf {

/// Evaluation window for series: variables x_1..x_m, total degree <= D.
/// Quasisymmetric or symmetric comparisons at degree d are faithful only
/// when m >= d; operations that rely on that refuse smaller contexts
/// unless noted.
struct SeriesContext {
    int num_vars = 0;
    int max_degree = 0;
    friend bool operator==(const SeriesContext&, const SeriesContext&) = default;
};

/// Exponent vector over the context's variables, ordered by total degree
/// then lexicographically.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    int degree() const { return degree_; }
    const std::vector<int>& exponents() const { return exps_; }
    int exponent(int var) const;  // 1-based

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.exps_ <=> b.exps_;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;

  private:
    std::vector<int> exps_;
    int degree_ = 0;
};

/// Sparse integer polynomial truncated by its context. All arithmetic is
/// exact; multiplication silently discards degrees above the bound, which
/// is the whole point of the truncation.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(SeriesContext ctx) : ctx_(ctx) {}

    static TruncatedSeries one(SeriesContext ctx);
    static TruncatedSeries variable(SeriesContext ctx, int var);

    const SeriesContext& context() const { return ctx_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^exps, ignoring monomials outside the context window.
    void add_term(const std::vector<int>& exps, const Int& coeff);
    Int coefficient(const std::vector<int>& exps) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries scaled(const Int& c) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// x_i -> -x_i: homogeneous degree-d terms pick up (-1)^d.
    TruncatedSeries negate_variables() const;

    /// The homogeneous degree-d part, same context.
    TruncatedSeries homogeneous_component(int degree) const;

    /// Re-evaluates in a smaller window: variables above the new m are set
    /// to zero and higher degrees dropped.
    TruncatedSeries restricted(SeriesContext smaller) const;

    std::string to_string() const;

  private:
    SeriesContext ctx_;
    std::map<Monomial, Int> terms_;
};

/// Thrown when a component fails a (quasi)symmetry precondition; carries
/// the first offending monomial pair.
struct NotSymmetricError : std::runtime_error {
    NotSymmetricError(const std::string& what, Monomial a, Monomial b)
        : std::runtime_error(what), witness_a(std::move(a)), witness_b(std::move(b)) {}
    Monomial witness_a;
    Monomial witness_b;
};

/// Quasisymmetry of the degree-d component; on failure returns the first
/// pair of monomials with equal packed exponents but different
/// coefficients.
bool is_quasisymmetric_component(const TruncatedSeries& f, int degree,
                                 std::pair<Monomial, Monomial>* witness = nullptr);
bool is_symmetric_component(const TruncatedSeries& f, int degree,
                            std::pair<Monomial, Monomial>* witness = nullptr);

// --- classical bases, realized in a context --------------------------------

/// Fundamental quasisymmetric function L_alpha.
TruncatedSeries fundamental_L(const Composition& alpha, SeriesContext ctx);

/// Monomial quasisymmetric function M_alpha.
TruncatedSeries monomial_M(const Composition& alpha, SeriesContext ctx);

/// Schur function via semistandard tableaux with entries <= m. Straight or
/// skew shapes.
TruncatedSeries schur(const Partition& lambda, SeriesContext ctx);
TruncatedSeries schur_skew(const SkewShape& shape, SeriesContext ctx);

// --- basis decomposition ----------------------------------------------------

/// Coefficients of the degree-d component in the fundamental basis.
/// Requires quasisymmetry; with m >= d the expansion is complete, and for
/// m < d the result is verified to reproduce the component exactly (labels
/// with more than m parts are not representable in m variables).
FormalSum<Composition> expand_in_fundamental(const TruncatedSeries& f, int degree);

/// Schur coefficients of every homogeneous component, by unitriangular
/// elimination on leading monomials. Requires m >= max_degree.
FormalSum<Partition> expand_in_schur(const TruncatedSeries& f);

/// Sum over partitions of products of coefficients.
Int hall_pairing(const FormalSum<Partition>& a, const FormalSum<Partition>& b);

/// Hall pairing of two symmetric series: expand both in Schur coefficients
/// and contract.
Int hall_pairing(const TruncatedSeries& a, const TruncatedSeries& b);

/// The omega involution on a symmetric series: conjugate every Schur index.
TruncatedSeries omega_sym(const TruncatedSeries& f);

}  // namespace khopf
