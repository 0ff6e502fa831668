#pragma once

// Gleason-type bases for the weight enumerator W(y) of a singly-even
// self-dual code of length n = 24m + 8l + 2r and for its shadow S(y):
//
//   W(y) = sum_i c_i (1 + y^2)^{n/2 - 4i} (y^2 (1 - y^2)^2)^i
//   S(y) = sum_i (-1)^i c_i 2^{n/2 - 6i} y^{n/2 - 4i} (1 - y^4)^{2i}
//
// with 0 <= i <= k = 3m + l. The alpha/beta coefficients express c_i in
// terms of the low-order W coefficients a_j (weight 2j) and the low-order
// S coefficients b_j (weight 4j + r).

#include <optional>
#include <vector>

#include "minshadow/exact.hpp"
#include "minshadow/series.hpp"

namespace minshadow {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// n = 24m + 8l + 2r = 24m + 2t with l in {0,1,2}, r in {0,1,2,3}.
struct ParamSet {
  int n = 0;
  int m = 0;
  int l = 0;
  int r = 0;
  int t = 0;
  int d = 0;  // extremal minimum distance: 4m + 6 when t == 11, else 4m + 4

  static ParamSet from_length(int n);
  static ParamSet from_family(int m, int t);

  int k() const { return 3 * m + l; }
  int half() const { return n / 2; }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

/// i-th W basis element (1 + y^2)^{n/2 - 4i} y^{2i} (1 - y^2)^{2i}.
Series basis_W(const ParamSet& p, int i, int trunc);

/// i-th S basis element (-1)^i 2^{n/2 - 6i} y^{n/2 - 4i} (1 - y^4)^{2i}.
Series basis_S(const ParamSet& p, int i, int trunc);

/// alpha_{i,0} by coefficient extraction:
///   -n/(2i) [y^{i-1}] (1 + y)^{-n/2 - 1 + 4i} (1 - y)^{-2i},
/// with the negative powers folded into (1 - y^2)^{-a} times a nonnegative
/// power of (1 + y) or (1 - y). Defined for every i >= 1.
Rational alpha_direct(const ParamSet& p, int i);

/// alpha_{2m+1,0} from the binomial sums (separate forms for t <= 5 and t > 5).
Rational alpha_2m1_closed(const ParamSet& p);

/// alpha_{2m,0} from its binomial sum; m >= 1.
Rational alpha_2m_closed(const ParamSet& p);

/// Tabulated product forms of alpha_{2m+1,0} / alpha_{2m,0}. These carry
/// denominators such as m(m-1)(m-2); nullopt where a denominator vanishes or
/// no product form exists for the residue class.
std::optional<Rational> alpha_2m1_product_form(const ParamSet& p);
std::optional<Rational> alpha_2m_product_form(const ParamSet& p);

/// beta_{ij} = (-1)^i 2^{-n/2 + 6i} (k - j)/i C(k + i - j - 1, k - i - j), i >= 1.
/// Zero outside 0 <= j <= k - i.
Rational beta(const ParamSet& p, int i, int j);

/// Rows j = 0..max_row of the map c -> a: entry [j][i] is the coefficient of
/// y^{2j} in basis_W(i). Columns run over i = 0..k.
RationalMatrix w_coefficient_rows(const ParamSet& p, int max_row);

/// Rows j = 0..max_row of the map c -> b: entry [j][i] is the coefficient of
/// y^{4j + r} in basis_S(i).
RationalMatrix s_coefficient_rows(const ParamSet& p, int max_row);

struct BasisMatrices {
  RationalMatrix a;  // (k+1) x (k+1), lower triangular with unit diagonal
  RationalMatrix b;  // (k+1) x (k+1), nonzero only for i + j >= k
};

BasisMatrices basis_matrices(const ParamSet& p);

}  // namespace minshadow
