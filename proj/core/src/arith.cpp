#include "hodgesig/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>

namespace hodgesig {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// These twelve witnesses are deterministic for every n < 3.3 * 10^24.
bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 w : witnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : witnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_nonzero(const Rational& x, const char* what) {
  if (x == 0) throw DomainError(std::string(what) + ": argument must be nonzero");
}

void require_prime(const Integer& p, const char* what) {
  if (!is_prime(p)) throw DomainError(std::string(what) + ": " + p.get_str() + " is not prime");
}

// Residue of the 2-adic unit u modulo 8. den^-1 = den (mod 8) for odd den.
unsigned long unit_mod8(const Rational& u) {
  Integer n = u.get_num() * u.get_den();
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), 8);
  return r.get_ui();
}

int epsilon2(unsigned long u_mod8) { return static_cast<int>(((u_mod8 - 1) / 2) % 2); }
int omega2(unsigned long u_mod8) { return static_cast<int>(((u_mod8 * u_mod8 - 1) / 8) % 2); }

// Legendre symbol of a p-unit rational: (num * den / p).
int unit_legendre(const Rational& u, const Integer& p) {
  return legendre(u.get_num() * u.get_den(), p);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return miller_rabin_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  if (n == 0) throw DomainError("prime_divisors: zero has no finite factorization");
  std::vector<Integer> out;
  Integer m = abs(n);
  if (m.fits_ulong_p()) {
    u64 v = m.get_ui();
    for (u64 d = 2; d <= v / d; d += (d == 2 ? 1 : 2)) {
      if (v % d == 0) {
        out.emplace_back(static_cast<unsigned long>(d));
        while (v % d == 0) v /= d;
      }
    }
    if (v > 1) out.emplace_back(static_cast<unsigned long>(v));
    return out;
  }
  for (Integer d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      out.push_back(d);
      while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

Place Place::finite(const Integer& p) {
  require_prime(p, "Place");
  Place out;
  out.prime_ = p;
  return out;
}

std::string Place::to_string() const { return is_real() ? "real" : prime_.get_str(); }

long val_p(const Integer& x, const Integer& p) {
  if (x == 0) throw DomainError("val_p: valuation of zero");
  if (p < 2) throw DomainError("val_p: modulus must be prime");
  Integer tmp = x;
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), p.get_mpz_t()));
}

long val_p(const Rational& x, const Integer& p) {
  require_nonzero(x, "val_p");
  return val_p(x.get_num(), p) - val_p(x.get_den(), p);
}

Rational unit_part(const Rational& x, const Integer& p) {
  require_nonzero(x, "unit_part");
  Integer num = x.get_num();
  Integer den = x.get_den();
  mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  return Rational(num, den);
}

int legendre(const Integer& a, const Integer& p) {
  if (p == 2 || !is_prime(p)) throw DomainError("legendre: modulus must be an odd prime");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (r == 0) throw DomainError("legendre: p divides a");
  Integer e = (p - 1) / 2;
  Integer s;
  mpz_powm(s.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return s == 1 ? 1 : -1;
}

Integer least_nonresidue(const Integer& p) {
  for (Integer u = 2;; ++u) {
    if (legendre(u, p) == -1) return u;
  }
}

bool is_square(const Rational& x, const Place& place) {
  require_nonzero(x, "is_square");
  if (place.is_real()) return x > 0;
  const Integer& p = place.prime();
  if (val_p(x, p) % 2 != 0) return false;
  Rational u = unit_part(x, p);
  if (p == 2) return unit_mod8(u) == 1;
  return unit_legendre(u, p) == 1;
}

SquareClass square_class(const Rational& x, const Place& place) {
  require_nonzero(x, "square_class");
  SquareClass out;
  out.place = place;
  if (place.is_real()) {
    out.representative = x > 0 ? 1 : -1;
    return out;
  }
  const Integer& p = place.prime();
  bool odd_val = val_p(x, p) % 2 != 0;
  Rational u = unit_part(x, p);
  Rational rep;
  if (p == 2) {
    switch (unit_mod8(u)) {
      case 1: rep = 1; break;
      case 3: rep = -5; break;
      case 5: rep = 5; break;
      default: rep = -1; break;
    }
  } else {
    rep = unit_legendre(u, p) == 1 ? Rational(1) : Rational(least_nonresidue(p));
  }
  if (odd_val) rep *= p;
  out.representative = rep;
  return out;
}

int hilbert(const Rational& a, const Rational& b, const Place& place) {
  require_nonzero(a, "hilbert");
  require_nonzero(b, "hilbert");
  if (place.is_real()) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = place.prime();
  long alpha = val_p(a, p);
  long beta = val_p(b, p);
  Rational u = unit_part(a, p);
  Rational v = unit_part(b, p);
  if (p == 2) {
    unsigned long um = unit_mod8(u);
    unsigned long vm = unit_mod8(v);
    long exponent = epsilon2(um) * epsilon2(vm) + alpha * omega2(vm) + beta * omega2(um);
    return (exponent % 2 == 0) ? 1 : -1;
  }
  int sign = 1;
  // (-1)^(alpha*beta*(p-1)/2)
  if ((alpha * beta) % 2 != 0) {
    Integer half = (p - 1) / 2;
    if (mpz_odd_p(half.get_mpz_t())) sign = -sign;
  }
  if (beta % 2 != 0) sign *= unit_legendre(u, p);
  if (alpha % 2 != 0) sign *= unit_legendre(v, p);
  return sign;
}

std::vector<Place> hilbert_support(const std::vector<Rational>& values) {
  std::set<Integer> primes{Integer(2)};
  for (const Rational& v : values) {
    require_nonzero(v, "hilbert_support");
    for (const Integer* part : {&v.get_num(), &v.get_den()}) {
      if (abs(*part) == 1) continue;
      for (Integer& q : prime_divisors(*part)) primes.insert(std::move(q));
    }
  }
  std::vector<Place> out{Place::real()};
  for (const Integer& q : primes) out.push_back(Place::finite(q));
  return out;
}

}  // namespace hodgesig
