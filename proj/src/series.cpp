#include "minshadow/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minshadow {

Series::Series(int trunc) : trunc_(trunc) {
  if (trunc < 0) {
    throw std::invalid_argument("series truncation must be nonnegative");
  }
}

Series::Series(int trunc, std::vector<Term> terms) : trunc_(trunc), terms_(std::move(terms)) {}

Series Series::constant(const Rational& c, int trunc) { return monomial(c, 0, trunc); }

Series Series::monomial(const Rational& c, int degree, int trunc) {
  if (degree < 0) {
    throw std::invalid_argument("monomial degree must be nonnegative");
  }
  Series out(trunc);
  if (c != 0 && degree < trunc) {
    out.terms_.emplace_back(degree, c);
  }
  return out;
}

Series Series::from_binomial_power(int sign, int exponent, int step, int trunc) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("binomial power sign must be +1 or -1");
  }
  if (exponent < 0) {
    throw std::invalid_argument("binomial power exponent must be nonnegative");
  }
  if (step < 1) {
    throw std::invalid_argument("binomial power step must be positive");
  }
  Series out(trunc);
  BigInt c = 1;
  for (int s = 0; s <= exponent; ++s) {
    const long degree = static_cast<long>(step) * s;
    if (degree >= trunc) {
      break;
    }
    out.terms_.emplace_back(static_cast<int>(degree), Rational((sign < 0 && s % 2 == 1) ? BigInt(-c) : c));
    // C(e, s + 1) = C(e, s) (e - s) / (s + 1)
    c *= exponent - s;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(s + 1));
  }
  return out;
}

Series Series::inv_even_power(int a, int trunc) {
  if (a <= 0) {
    throw std::invalid_argument("inv_even_power needs a > 0, got " + std::to_string(a));
  }
  Series out(trunc);
  BigInt c = 1;
  for (int j = 0; 2L * j < trunc; ++j) {
    out.terms_.emplace_back(2 * j, Rational(c));
    // C(a + j, j + 1) = C(a + j - 1, j) (a + j) / (j + 1)
    c *= a + j;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
  }
  return out;
}

Rational Series::coeff(int degree) const {
  if (degree < 0) {
    return Rational(0);
  }
  if (degree >= trunc_) {
    throw std::out_of_range("coefficient of y^" + std::to_string(degree) +
                            " requested from series truncated at " + std::to_string(trunc_));
  }
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                                   [](const Term& t, int d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree) {
    return it->second;
  }
  return Rational(0);
}

Series Series::scale_shift(const Rational& factor, int shift) const {
  if (shift < 0) {
    throw std::invalid_argument("scale_shift needs a nonnegative shift");
  }
  Series out(trunc_);
  if (factor == 0) {
    return out;
  }
  for (const auto& [deg, c] : terms_) {
    if (static_cast<long>(deg) + shift >= trunc_) {
      break;
    }
    out.terms_.emplace_back(deg + shift, c * factor);
  }
  return out;
}

Series Series::divided_by_binomial(int sign, int step) const {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("divisor sign must be +1 or -1");
  }
  if (step < 1) {
    throw std::invalid_argument("divisor step must be positive");
  }
  if (terms_.empty()) {
    return *this;
  }
  const int lo = terms_.front().first;
  std::vector<Rational> q(static_cast<std::size_t>(trunc_ - lo));
  for (const auto& [deg, c] : terms_) {
    q[static_cast<std::size_t>(deg - lo)] = c;
  }
  // q_d = p_d - sign * q_{d - step}
  for (std::size_t d = static_cast<std::size_t>(step); d < q.size(); ++d) {
    if (sign > 0) {
      q[d] -= q[d - static_cast<std::size_t>(step)];
    } else {
      q[d] += q[d - static_cast<std::size_t>(step)];
    }
  }
  Series out(trunc_);
  for (std::size_t d = 0; d < q.size(); ++d) {
    if (q[d] != 0) {
      out.terms_.emplace_back(lo + static_cast<int>(d), std::move(q[d]));
    }
  }
  return out;
}

Rational Series::sum_of_coefficients() const {
  Rational sum;
  for (const auto& term : terms_) {
    sum += term.second;
  }
  return sum;
}

void Series::require_same_trunc(const Series& a, const Series& b) {
  if (a.trunc_ != b.trunc_) {
    throw std::invalid_argument("series truncation mismatch: " + std::to_string(a.trunc_) + " vs " +
                                std::to_string(b.trunc_));
  }
}

namespace {

template <typename Combine>
std::vector<Series::Term> merge(const std::vector<Series::Term>& a, const std::vector<Series::Term>& b,
                                Combine combine, bool negate_b) {
  std::vector<Series::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, negate_b ? Rational(-ib->second) : ib->second);
      ++ib;
    } else {
      Rational c = combine(ia->second, ib->second);
      if (c != 0) {
        out.emplace_back(ia->first, std::move(c));
      }
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
  Series::require_same_trunc(a, b);
  return Series(a.trunc_, merge(a.terms_, b.terms_, [](const Rational& x, const Rational& y) {
                  return Rational(x + y);
                }, false));
}

Series operator-(const Series& a, const Series& b) {
  Series::require_same_trunc(a, b);
  return Series(a.trunc_, merge(a.terms_, b.terms_, [](const Rational& x, const Rational& y) {
                  return Rational(x - y);
                }, true));
}

Series operator*(const Series& a, const Series& b) {
  Series::require_same_trunc(a, b);
  Series out(a.trunc_);
  if (a.terms_.empty() || b.terms_.empty()) {
    return out;
  }
  const long lo = static_cast<long>(a.terms_.front().first) + b.terms_.front().first;
  const long hi = std::min<long>(a.trunc_ - 1, static_cast<long>(a.terms_.back().first) + b.terms_.back().first);
  if (lo > hi) {
    return out;
  }
  std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
  Rational product;
  for (const auto& [da, ca] : a.terms_) {
    if (da + static_cast<long>(b.terms_.front().first) > hi) {
      break;
    }
    for (const auto& [db, cb] : b.terms_) {
      const long d = static_cast<long>(da) + db;
      if (d > hi) {
        break;
      }
      mpq_mul(product.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[static_cast<std::size_t>(d - lo)] += product;
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) {
      out.terms_.emplace_back(static_cast<int>(lo + static_cast<long>(i)), std::move(acc[i]));
    }
  }
  return out;
}

bool operator==(const Series& a, const Series& b) { return a.trunc_ == b.trunc_ && a.terms_ == b.terms_; }

}  // namespace minshadow
