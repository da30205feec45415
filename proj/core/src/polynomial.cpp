#include "hodgesig/polynomial.hpp"

#include "hodgesig/arith.hpp"

#include <algorithm>

namespace hodgesig::poly {

namespace {

template <class T>
int degree_of(const std::vector<T>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

}  // namespace

int degree(const RatPoly& f) { return degree_of(f); }
int degree(const IntPoly& f) { return degree_of(f); }

void trim(RatPoly& f) { f.resize(static_cast<std::size_t>(degree(f) + 1)); }
void trim(IntPoly& f) { f.resize(static_cast<std::size_t>(degree(f) + 1)); }

RatPoly to_rational(const IntPoly& f) {
  RatPoly out;
  out.reserve(f.size());
  for (const Integer& c : f) out.emplace_back(c);
  return out;
}

IntPoly to_integer(const RatPoly& f) {
  IntPoly out;
  out.reserve(f.size());
  for (const Rational& c : f) {
    if (c.get_den() != 1) throw DomainError("polynomial has a non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

Rational evaluate(const RatPoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer evaluate(const IntPoly& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly derivative(const RatPoly& f) {
  RatPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long>(i));
  trim(out);
  return out;
}

RatPoly add(const RatPoly& f, const RatPoly& g) {
  RatPoly out(std::max(f.size(), g.size()), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
  trim(out);
  return out;
}

RatPoly sub(const RatPoly& f, const RatPoly& g) {
  RatPoly out(std::max(f.size(), g.size()), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
  trim(out);
  return out;
}

RatPoly mul(const RatPoly& f, const RatPoly& g) {
  if (f.empty() || g.empty()) return {};
  RatPoly out(f.size() + g.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  trim(out);
  return out;
}

IntPoly mul(const IntPoly& f, const IntPoly& g) {
  if (f.empty() || g.empty()) return {};
  IntPoly out(f.size() + g.size() - 1, Integer(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  trim(out);
  return out;
}

RatPoly scale(const RatPoly& f, const Rational& c) {
  RatPoly out = f;
  for (Rational& x : out) x *= c;
  trim(out);
  return out;
}

RatPoly monic(const RatPoly& f) {
  int d = degree(f);
  if (d < 0) return {};
  return scale(f, 1 / f[static_cast<std::size_t>(d)]);
}

DivMod divmod(const RatPoly& f, const RatPoly& g) {
  int dg = degree(g);
  if (dg < 0) throw DomainError("polynomial division by zero");
  RatPoly rem = f;
  trim(rem);
  int dr = degree(rem);
  RatPoly quot(static_cast<std::size_t>(std::max(dr - dg + 1, 0)), Rational(0));
  const Rational& lead = g[static_cast<std::size_t>(dg)];
  while (dr >= dg) {
    Rational c = rem[static_cast<std::size_t>(dr)] / lead;
    int shift = dr - dg;
    quot[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= dg; ++i) {
      rem[static_cast<std::size_t>(i + shift)] -= c * g[static_cast<std::size_t>(i)];
    }
    trim(rem);
    dr = degree(rem);
  }
  trim(quot);
  return {quot, rem};
}

RatPoly gcd(const RatPoly& f, const RatPoly& g) {
  RatPoly a = f, b = g;
  trim(a);
  trim(b);
  while (degree(b) >= 0) {
    RatPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const RatPoly& f) {
  std::vector<SquarefreeFactor> out;
  RatPoly a = monic(f);
  if (degree(a) <= 0) return out;
  RatPoly da = derivative(a);
  RatPoly g = gcd(a, da);
  RatPoly b = divmod(a, g).quotient;
  RatPoly c = divmod(da, g).quotient;
  RatPoly d = sub(c, derivative(b));
  for (int m = 1; degree(b) > 0; ++m) {
    RatPoly h = gcd(b, d);
    if (degree(h) > 0) out.push_back({h, m});
    b = divmod(b, h).quotient;
    c = divmod(d, h).quotient;
    d = sub(c, derivative(b));
  }
  return out;
}

std::vector<Integer> power_sums(const IntPoly& f, int count) {
  int n = degree(f);
  if (n < 0 || f[static_cast<std::size_t>(n)] != 1) {
    throw DomainError("power_sums: polynomial must be monic");
  }
  // e_k = (-1)^k a_{n-k}
  auto e = [&](int k) -> Integer {
    if (k > n) return 0;
    Integer c = f[static_cast<std::size_t>(n - k)];
    return (k % 2 == 0) ? c : Integer(-c);
  };
  std::vector<Integer> s(static_cast<std::size_t>(count + 1), Integer(0));
  for (int m = 1; m <= count; ++m) {
    Integer acc = 0;
    for (int i = 1; i < m && i <= n; ++i) {
      Integer term = e(i) * s[static_cast<std::size_t>(m - i)];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    if (m <= n) {
      Integer term = e(m) * m;
      if (m % 2 == 1) acc += term; else acc -= term;
    }
    s[static_cast<std::size_t>(m)] = acc;
  }
  s.erase(s.begin());
  return s;
}

IntPoly from_power_sums(const std::vector<Integer>& sums, int n) {
  if (static_cast<int>(sums.size()) < n) throw DomainError("from_power_sums: too few power sums");
  // k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i
  std::vector<Integer> e(static_cast<std::size_t>(n + 1), Integer(0));
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Integer acc = 0;
    for (int i = 1; i <= k; ++i) {
      Integer term = e[static_cast<std::size_t>(k - i)] * sums[static_cast<std::size_t>(i - 1)];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw DomainError("from_power_sums: non-integral elementary symmetric function");
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
    e[static_cast<std::size_t>(k)] = acc;
  }
  IntPoly out(static_cast<std::size_t>(n + 1), Integer(0));
  for (int k = 0; k <= n; ++k) {
    out[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? e[static_cast<std::size_t>(k)]
                                                        : Integer(-e[static_cast<std::size_t>(k)]);
  }
  return out;
}

int root_multiplicity(const IntPoly& f, const Integer& root) {
  IntPoly g = f;
  trim(g);
  if (g.empty()) throw DomainError("root_multiplicity of the zero polynomial");
  int mult = 0;
  while (g.size() > 1) {
    // Synthetic division by (x - root).
    IntPoly q(g.size() - 1, Integer(0));
    Integer carry = 0;
    for (std::size_t i = g.size() - 1; i >= 1; --i) {
      carry = carry * root + g[i];
      q[i - 1] = carry;
    }
    Integer remainder = carry * root + g[0];
    if (remainder != 0) break;
    ++mult;
    g = std::move(q);
  }
  return mult;
}

int sign(const Surd& s) {
  int sa = sgn(s.a);
  int sb = (s.radicand == 0) ? 0 : sgn(s.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 r.
  Rational lhs = s.a * s.a;
  Rational rhs = s.b * s.b * Rational(s.radicand);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

Surd evaluate(const RatPoly& f, const Surd& s) {
  Surd acc{0, 0, s.radicand};
  Rational r(s.radicand);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    Rational a = acc.a * s.a + acc.b * s.b * r + *it;
    Rational b = acc.a * s.b + acc.b * s.a;
    acc.a = std::move(a);
    acc.b = std::move(b);
  }
  return acc;
}

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain;
  RatPoly a = f;
  trim(a);
  if (degree(a) < 0) return chain;
  chain.push_back(a);
  RatPoly b = derivative(a);
  while (degree(b) >= 0) {
    chain.push_back(b);
    RatPoly r = scale(divmod(chain[chain.size() - 2], b).remainder, -1);
    b = std::move(r);
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<RatPoly>& chain, const Surd& x) {
  int variations = 0;
  int last = 0;
  for (const RatPoly& p : chain) {
    int s = sign(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int count_real_roots(const std::vector<RatPoly>& chain, const Surd& lo, const Surd& hi) {
  if (chain.empty()) return 0;
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace hodgesig::poly
