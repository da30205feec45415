#include "hodgesig/weil.hpp"

#include <algorithm>
#include <sstream>

namespace hodgesig {

PrimePower split_prime_power(const Integer& q) {
  if (q < 2) throw DomainError("q must be a prime power, got " + q.get_str());
  Integer p = prime_divisors(q).front();
  Integer rest = q;
  unsigned e = static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t()));
  if (rest != 1) throw DomainError("q must be a prime power, got " + q.get_str());
  return {p, e};
}

IntPoly real_weil_polynomial(const IntPoly& coeffs, const Integer& q) {
  int n = static_cast<int>(coeffs.size()) - 1;
  int g = n / 2;
  for (int i = 0; i < g; ++i) {
    Integer expected = ipow(q, static_cast<unsigned long>(g - i)) * coeffs[static_cast<std::size_t>(n - i)];
    if (coeffs[static_cast<std::size_t>(i)] != expected) {
      throw WeilValidationError(
          WeilDefect::functional_equation, i,
          "functional equation fails at index " + std::to_string(i) + ": expected q^" +
              std::to_string(g - i) + " * c_" + std::to_string(n - i) + " = " + expected.get_str() +
              ", found " + coeffs[static_cast<std::size_t>(i)].get_str());
    }
  }
  // Peel x^(g-k) (x^2 + q)^k = x^g (x + q/x)^k off from the top.
  IntPoly rest = coeffs;
  IntPoly h(static_cast<std::size_t>(g + 1), Integer(0));
  std::vector<IntPoly> powers{{Integer(1)}};
  for (int k = 1; k <= g; ++k) powers.push_back(poly::mul(powers.back(), IntPoly{q, 0, 1}));
  for (int k = g; k >= 0; --k) {
    Integer b = rest[static_cast<std::size_t>(g + k)];
    h[static_cast<std::size_t>(k)] = b;
    if (b == 0) continue;
    const IntPoly& pk = powers[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < pk.size(); ++j) rest[j + static_cast<std::size_t>(g - k)] -= b * pk[j];
  }
  if (poly::degree(rest) >= 0) {
    throw WeilValidationError(WeilDefect::functional_equation, -1,
                              "polynomial is not of the form x^g h(x + q/x)");
  }
  return h;
}

bool real_roots_in_weil_interval(const IntPoly& h, const Integer& q) {
  std::vector<poly::SquarefreeFactor> parts = poly::squarefree_decomposition(poly::to_rational(h));
  RatPoly sf{Rational(1)};
  for (const auto& part : parts) sf = poly::mul(sf, part.factor);
  int remaining = poly::degree(sf);
  if (remaining == 0) return true;

  // Endpoints +-2 sqrt q; divide out any endpoint roots before counting.
  poly::Surd hi{0, 2, q};
  poly::Surd lo{0, -2, q};
  bool root_hi = poly::sign(poly::evaluate(sf, hi)) == 0;
  bool root_lo = poly::sign(poly::evaluate(sf, lo)) == 0;
  if (root_hi || root_lo) {
    if (is_perfect_square(q)) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
      if (root_hi) sf = poly::divmod(sf, RatPoly{Rational(-2 * s), 1}).quotient;
      if (root_lo) sf = poly::divmod(sf, RatPoly{Rational(2 * s), 1}).quotient;
    } else {
      // h rational: both conjugate endpoints are roots of y^2 - 4q.
      sf = poly::divmod(sf, RatPoly{Rational(-4 * q), 0, 1}).quotient;
    }
  }
  int degree = poly::degree(sf);
  if (degree == 0) return true;
  auto chain = poly::sturm_chain(sf);
  return poly::count_real_roots(chain, lo, hi) == degree;
}

WeilPolynomial validate_weil(const IntPoly& coeffs, const Integer& q) {
  if (coeffs.empty()) throw WeilValidationError(WeilDefect::empty, -1, "empty coefficient list");
  if (coeffs.back() != 1) {
    throw WeilValidationError(WeilDefect::not_monic, static_cast<int>(coeffs.size()) - 1,
                              "polynomial is not monic: leading coefficient " +
                                  coeffs.back().get_str());
  }
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n == 0 || n % 2 != 0) {
    throw WeilValidationError(WeilDefect::odd_degree, -1,
                              "degree must be even and positive, got " + std::to_string(n));
  }
  PrimePower pp;
  try {
    pp = split_prime_power(q);
  } catch (const DomainError& err) {
    throw WeilValidationError(WeilDefect::bad_q, -1, err.what());
  }
  IntPoly h = real_weil_polynomial(coeffs, q);
  if (!real_roots_in_weil_interval(h, q)) {
    throw WeilValidationError(WeilDefect::off_critical_circle, -1,
                              "some root does not lie on |z| = sqrt(" + q.get_str() + ")");
  }
  return WeilPolynomial(coeffs, q, pp);
}

std::vector<Rational> newton_slopes(const WeilPolynomial& P) {
  const IntPoly& a = P.coeffs();
  struct Point {
    long x;
    long y;
  };
  std::vector<Point> pts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) pts.push_back({static_cast<long>(i), val_p(a[i], P.p())});
  }
  // Lower convex hull, left to right (Andrew's monotone chain).
  std::vector<Point> hull;
  for (const Point& pt : pts) {
    while (hull.size() >= 2) {
      const Point& o = hull[hull.size() - 2];
      const Point& m = hull.back();
      long cross = (m.x - o.x) * (pt.y - o.y) - (m.y - o.y) * (pt.x - o.x);
      if (cross <= 0) hull.pop_back(); else break;
    }
    hull.push_back(pt);
  }
  std::vector<Rational> slopes;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    long width = hull[i].x - hull[i - 1].x;
    Rational root_val(hull[i - 1].y - hull[i].y, width);
    root_val.canonicalize();
    root_val /= static_cast<long>(P.e());
    for (long k = 0; k < width; ++k) slopes.push_back(root_val);
  }
  std::sort(slopes.begin(), slopes.end());
  return slopes;
}

IntPoly characteristic_polynomial(const std::vector<std::vector<Integer>>& A) {
  std::size_t n = A.size();
  using Matrix = std::vector<std::vector<Integer>>;
  Matrix M(n, std::vector<Integer>(n, Integer(0)));
  IntPoly c(n + 1, Integer(0));
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // M <- A M + c_{n-k+1} I
    Matrix next(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer acc = 0;
        for (std::size_t l = 0; l < n; ++l) acc += A[i][l] * M[l][j];
        next[i][j] = std::move(acc);
      }
      next[i][i] += c[n - k + 1];
    }
    M = std::move(next);
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += A[i][l] * M[l][i];
    }
    Integer ck = -trace;
    mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = ck;
  }
  return c;
}

WeilPolynomial base_extension(const WeilPolynomial& P, unsigned s) {
  if (s == 0) throw DomainError("base_extension: degree must be positive");
  PrimePower pp{P.p(), P.e() * s};
  if (s == 1) return WeilPolynomial(P.coeffs(), P.q(), pp);
  std::size_t n = static_cast<std::size_t>(P.degree());
  using Matrix = std::vector<std::vector<Integer>>;
  Matrix companion(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n) companion[i + 1][i] = 1;
    companion[i][n - 1] = -P.coeffs()[i];
  }
  auto multiply = [n](const Matrix& X, const Matrix& Y) {
    Matrix Z(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (X[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) Z[i][j] += X[i][l] * Y[l][j];
      }
    }
    return Z;
  };
  Matrix power(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  Matrix base = companion;
  for (unsigned k = s; k > 0; k >>= 1) {
    if (k & 1) power = multiply(power, base);
    if (k > 1) base = multiply(base, base);
  }
  return WeilPolynomial(characteristic_polynomial(power), ipow(P.q(), s), pp);
}

std::string format_polynomial(const IntPoly& f, char var) {
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    const Integer& c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace hodgesig
