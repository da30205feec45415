#include "hodgesig/rational.hpp"

#include <stdexcept>

namespace hodgesig {

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("rpow: zero to a negative power");
    Rational inv = 1 / base;
    return rpow(inv, -exponent);
  }
  Rational out(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
               ipow(base.get_den(), static_cast<unsigned long>(exponent)));
  out.canonicalize();
  return out;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Rational sqrt_upper(const Rational& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt_upper of a negative number");
  if (x == 0) return Rational(0);
  // sqrt(a/b) = sqrt(a*b)/b; scale by 4^bits to keep `bits` fractional bits.
  Integer ab = x.get_num() * x.get_den();
  Integer scaled = ab << (2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  root += 1;
  Rational out(root, x.get_den() << bits);
  out.canonicalize();
  return out;
}

Rational round_dyadic(const Rational& x, unsigned bits) {
  Integer scaled_num = x.get_num() << bits;
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
  Integer twice_r = abs(r) * 2;
  if (twice_r >= x.get_den()) q += (sgn(x) >= 0 ? 1 : -1);
  Rational out(q, Integer(1) << bits);
  out.canonicalize();
  return out;
}

bool is_perfect_square(const Integer& x) {
  return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

}  // namespace hodgesig
