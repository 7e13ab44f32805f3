#ifndef DQCHAR_LAURENT_HPP
#define DQCHAR_LAURENT_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqchar/numeric.hpp"

namespace dqchar {

class DynkinD;

// One formal variable Y_{node,shift}.
struct YVar {
    int node = 0;
    int shift = 0;

    auto operator<=>(const YVar&) const = default;
};

// Element of the free abelian group on the Y variables, kept in canonical
// sparse form: factors sorted by (node, shift), no zero exponents.
class LaurentMonomial {
  public:
    LaurentMonomial() = default;

    // Y_{node,shift}^exp
    static LaurentMonomial y(int node, int shift, int exp = 1);

    static LaurentMonomial from_factors(std::vector<std::pair<YVar, int>> factors);

    bool is_identity() const { return factors_.empty(); }
    const std::vector<std::pair<YVar, int>>& factors() const { return factors_; }
    int exponent(YVar v) const;

    LaurentMonomial operator*(const LaurentMonomial& rhs) const;
    LaurentMonomial inverse() const;
    LaurentMonomial pow(int e) const;

    // All exponents > 0 / all < 0.  The identity is both.
    bool is_dominant() const;
    bool is_antidominant() const;

    // Exchanges Y_{n-1,l} and Y_{n,l} for every l; an involution.
    LaurentMonomial swapped_spin_nodes(int rank) const;

    // Every shift translated by delta.
    LaurentMonomial shifted(int delta) const;

    // "Y[i,l]" / "Y[i,l]^e" factors joined by single spaces; "1" when empty.
    std::string canonical_string() const;

    // Inverse of canonical_string; throws std::invalid_argument on
    // malformed input.
    static LaurentMonomial parse(const std::string& text);

    bool operator==(const LaurentMonomial&) const = default;
    auto operator<=>(const LaurentMonomial&) const = default;

  private:
    std::vector<std::pair<YVar, int>> factors_;
};

// Finite Z-linear combination of monomials, no zero coefficients stored.
class LaurentPolynomial {
  public:
    using TermMap = std::map<LaurentMonomial, Int>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const LaurentMonomial& m) { add(m, 1); }

    static LaurentPolynomial one() { return LaurentPolynomial(LaurentMonomial()); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coefficient(const LaurentMonomial& m) const;

    void add(const LaurentMonomial& m, const Int& c);
    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
    LaurentPolynomial operator+(const LaurentPolynomial& rhs) const;
    LaurentPolynomial operator-(const LaurentPolynomial& rhs) const;

    LaurentPolynomial operator*(const LaurentMonomial& m) const;
    LaurentPolynomial operator*(const LaurentPolynomial& rhs) const;
    LaurentPolynomial operator*(const Int& c) const;

    Int coefficient_sum() const;
    LaurentPolynomial swapped_spin_nodes(int rank) const;
    LaurentPolynomial shifted(int delta) const;

    bool operator==(const LaurentPolynomial&) const = default;

  private:
    TermMap terms_;
};

// Nonnegative exponents e with  m = reference * prod A_{node,shift}^{-e},
// keyed by (node, shift); empty map when m == reference; std::nullopt when
// no such factorization exists with A-shifts inside [window_lo, window_hi].
// Solved exactly by elimination from the lowest shift upward (the map from
// A-exponents to Y-exponents is injective on a bounded window).
std::optional<std::map<std::pair<int, int>, long>> factor_over_A(
    const DynkinD& d, const LaurentMonomial& reference, const LaurentMonomial& m,
    int window_lo, int window_hi);

// Same, with the default window: shifts of both inputs padded by the
// rank on each side.
std::optional<std::map<std::pair<int, int>, long>> factor_over_A(
    const DynkinD& d, const LaurentMonomial& reference, const LaurentMonomial& m);

}  // namespace dqchar

#endif
