#include "minshadow/exact.hpp"

#include <stdexcept>

namespace minshadow {

BigInt binom(long a, long k) {
  if (a < 0) {
    throw std::invalid_argument("binom: negative upper index " + std::to_string(a));
  }
  BigInt out;
  if (k < 0 || k > a) {
    return out;  // zero
  }
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return out;
}

Rational pow2(long e) {
  Rational out(1);
  if (e >= 0) {
    mpz_mul_2exp(out.get_num_mpz_t(), out.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(out.get_den_mpz_t(), out.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational checked_div(const Rational& a, const Rational& b) {
  if (b == 0) {
    throw std::domain_error("division by zero");
  }
  return a / b;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (is_integer(x)) {
    return x.get_num().get_str();
  }
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  std::size_t pos = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) {
    pos = 1;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("empty integer literal");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("bad digit in '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, true));
  }
  const BigInt num = parse_integer(text.substr(0, slash), true);
  const BigInt den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

}  // namespace minshadow
