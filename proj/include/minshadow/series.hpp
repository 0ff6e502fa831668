#pragma once

#include <utility>
#include <vector>

#include "minshadow/exact.hpp"

namespace minshadow {

/// Truncated formal power series in one variable y with exact rational
/// coefficients. Only degrees in [0, trunc) are represented; terms are kept
/// sorted by degree and zero coefficients are never stored.
class Series {
 public:
  using Term = std::pair<int, Rational>;

  explicit Series(int trunc);

  static Series constant(const Rational& c, int trunc);
  static Series monomial(const Rational& c, int degree, int trunc);

  /// (1 + sign * y^step)^exponent, sign in {+1, -1}, exponent >= 0.
  static Series from_binomial_power(int sign, int exponent, int step, int trunc);

  /// (1 - y^2)^{-a} = sum_j C(a + j - 1, j) y^{2j}, a > 0.
  static Series inv_even_power(int a, int trunc);

  int trunc() const { return trunc_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of y^degree; throws std::out_of_range if degree >= trunc
  /// (the truncation was too small for the question being asked).
  Rational coeff(int degree) const;

  /// factor * y^shift * s, re-truncated.
  Series scale_shift(const Rational& factor, int shift) const;

  /// Exact quotient s / (1 + sign * y^step) in the truncated power series ring.
  Series divided_by_binomial(int sign, int step) const;

  /// Sum of stored coefficients, i.e. the value at y = 1 of the truncated part.
  Rational sum_of_coefficients() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b);

 private:
  Series(int trunc, std::vector<Term> terms);
  static void require_same_trunc(const Series& a, const Series& b);

  int trunc_;
  std::vector<Term> terms_;
};

}  // namespace minshadow
