#include "oracles.hpp"

#include <algorithm>
#include <complex>
#include <cmath>

namespace oracle {

namespace {

long mod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

long power(long base, int exp) {
  long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

int valuation(long x, long p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// c0 X^2 + c1 Y^2 + c2 Z^2 = 0 (mod p^k) with (X, Y, Z) primitive.
struct Ternary {
  long c[3];
  long p;
  int k;

  long form(const long s[3], long m) const {
    long acc = 0;
    for (int i = 0; i < 3; ++i) acc = mod(acc + mod(c[i], m) * mod(s[i] * s[i], m), m);
    return acc;
  }

  // s solves the congruence mod p^j; try to extend it to mod p^k. The
  // coordinate `fixed` is held at 1.
  bool lift(long s[3], int j, int fixed) const {
    if (j == k) return true;
    const long step = power(p, j);
    const long m = step * p;
    long base[3] = {s[0], s[1], s[2]};
    for (long t0 = 0; t0 < p; ++t0) {
      for (long t1 = 0; t1 < p; ++t1) {
        for (long t2 = 0; t2 < p; ++t2) {
          long t[3] = {t0, t1, t2};
          if (t[fixed] != 0) continue;
          long next[3];
          for (int i = 0; i < 3; ++i) next[i] = base[i] + t[i] * step;
          if (form(next, m) != 0) continue;
          if (lift(next, j + 1, fixed)) return true;
        }
      }
    }
    return false;
  }

  bool solvable() const {
    // Primitive solutions up to unit scaling: the first coordinate that is a
    // unit can be taken to be exactly 1.
    for (int fixed = 0; fixed < 3; ++fixed) {
      long s[3] = {0, 0, 0};
      s[fixed] = 1;
      auto try_rest = [&](auto&& self, int i) -> bool {
        if (i == 3) return form(s, p) == 0 && lift(s, 1, fixed);
        if (i == fixed) return self(self, i + 1);
        if (i < fixed) {
          s[i] = 0;  // coordinates before the first unit vanish mod p
          return self(self, i + 1);
        }
        for (long v = 0; v < p; ++v) {
          s[i] = v;
          if (self(self, i + 1)) return true;
        }
        return false;
      };
      if (try_rest(try_rest, 0)) return true;
    }
    return false;
  }
};

bool is_square_mod(long u, long m) {
  for (long t = 0; t < m; ++t) {
    if (mod(t * t, m) == mod(u, m)) return true;
  }
  return false;
}

std::pair<int, long> class_key(long w, long p) {
  int v = valuation(w, p);
  long u = w / power(p, v);
  if (p == 2) return {v % 2, mod(u, 8)};
  return {v % 2, is_square_mod(u, p) ? 1 : 0};
}

}  // namespace

int hilbert_symbol(long a, long b, long p) {
  // a and b matter only up to squares, so drop even powers of p.
  while (a % (p * p) == 0) a /= p * p;
  while (b % (p * p) == 0) b /= p * p;
  int k = 2 * std::max(valuation(a, p), valuation(b, p)) + 3;
  Ternary t{{-a, -b, 1}, p, k};
  return t.solvable() ? 1 : -1;
}

std::set<std::pair<int, long>> represented_classes(long g11, long g12, long g22, long p) {
  // Near an isotropic line values have high valuation, so the box has to be
  // deep enough for every class to show up there too.
  const int k = p == 2 ? 12 : p == 3 ? 8 : 6;
  const long m = power(p, k);
  std::set<std::pair<int, long>> out;
  auto visit = [&](long x, long y) {
    long w = g11 * x * x + 2 * g12 * x * y + g22 * y * y;
    if (w != 0) out.insert(class_key(w, p));
  };
  for (long y = 0; y < m; ++y) visit(1, y);
  for (long x = 0; x < m; ++x) visit(p * x, 1);
  return out;
}

bool locally_isomorphic(const hodgesig::BinaryForm& f1, const hodgesig::BinaryForm& f2, long p) {
  auto integral = [](const hodgesig::BinaryForm& f) {
    Integer l = 1;
    for (const auto& e : {f.g11(), f.g12(), f.g22()}) l = lcm(l, Integer(e.get_den()));
    std::vector<long> out;
    for (const auto& e : {f.g11(), f.g12(), f.g22()}) {
      hodgesig::Rational scaled = e * l * l;
      out.push_back(scaled.get_num().get_si());
    }
    return out;
  };
  auto a = integral(f1);
  auto b = integral(f2);
  return represented_classes(a[0], a[1], a[2], p) == represented_classes(b[0], b[1], b[2], p);
}

bool norm_mod_power_of_two(long x, long d, int k) {
  Ternary t{{1, -d, -x}, 2, k};
  return t.solvable();
}

QuadInt multiply(QuadInt x, QuadInt y, long r) {
  return {x.a * y.a - r * x.b * y.b, x.a * y.b + x.b * y.a};
}

SupersingularCounts supersingular_counts(long p) {
  std::vector<QuadInt> roots;
  for (int i = 0; i < 4; ++i) roots.push_back({0, 1});
  for (int i = 0; i < 4; ++i) roots.push_back({0, -1});
  SupersingularCounts out;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      QuadInt prod = multiply(roots[static_cast<std::size_t>(i)], roots[static_cast<std::size_t>(j)], p);
      if (prod.a == p && prod.b == 0) ++out.rho1;
    }
  }
  std::set<std::vector<std::pair<long, long>>> exotic;
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 4) continue;
    QuadInt prod{1, 0};
    std::vector<std::pair<long, long>> values;
    for (int i = 0; i < 8; ++i) {
      if (!(mask >> i & 1)) continue;
      prod = multiply(prod, roots[static_cast<std::size_t>(i)], p);
      values.push_back({roots[static_cast<std::size_t>(i)].a, roots[static_cast<std::size_t>(i)].b});
    }
    if (prod.a != p * p || prod.b != 0) continue;
    ++out.rho2;
    bool has_pair = false;
    for (const auto& v : values) {
      if (std::find(values.begin(), values.end(), std::make_pair(v.first, -v.second)) != values.end()) has_pair = true;
    }
    std::sort(values.begin(), values.end());
    if (!has_pair) exotic.insert(values);
  }
  out.exotic = static_cast<long>(exotic.size());
  return out;
}

std::vector<IntPoly> weil_by_root_check(long q, int g) {
  const int n = 2 * g;
  std::vector<long> bounds;
  for (int i = 1; i <= g; ++i) {
    double binom = 1;
    for (int j = 1; j <= i; ++j) binom = binom * (n - i + j) / j;
    bounds.push_back(static_cast<long>(std::floor(binom * std::pow(std::sqrt(static_cast<double>(q)), i) + 1e-9)));
  }
  std::vector<IntPoly> out;
  std::vector<long> a(static_cast<std::size_t>(g), 0);
  auto visit = [&](auto&& self, int i) -> void {
    if (i == g) {
      // Descending a_1..a_g; ascending coefficients with c_i = q^(g-i) c_(2g-i).
      IntPoly c(static_cast<std::size_t>(n + 1), Integer(0));
      c[static_cast<std::size_t>(n)] = 1;
      for (int j = 1; j <= g; ++j) c[static_cast<std::size_t>(n - j)] = a[static_cast<std::size_t>(j - 1)];
      for (int j = 0; j < g; ++j) {
        Integer qp = 1;
        for (int t = 0; t < g - j; ++t) qp *= q;
        c[static_cast<std::size_t>(j)] = qp * c[static_cast<std::size_t>(n - j)];
      }
      // Durand-Kerner on the monic polynomial.
      using C = std::complex<long double>;
      std::vector<long double> coef;
      for (const Integer& x : c) coef.push_back(static_cast<long double>(x.get_d()));
      std::vector<C> z;
      for (int r = 0; r < n; ++r) z.push_back(std::pow(C(0.4L, 0.9L), r));
      for (int iter = 0; iter < 5000; ++iter) {
        for (int r = 0; r < n; ++r) {
          C val = 0;
          for (int t = n; t >= 0; --t) val = val * z[static_cast<std::size_t>(r)] + coef[static_cast<std::size_t>(t)];
          C den = 1;
          for (int s = 0; s < n; ++s) {
            if (s != r) den *= z[static_cast<std::size_t>(r)] - z[static_cast<std::size_t>(s)];
          }
          if (std::abs(den) > 0) z[static_cast<std::size_t>(r)] -= val / den;
        }
      }
      // Loose tolerance: iterates on a root of multiplicity m stall at about
      // eps^(1/m), while a root off the circle moves |z| by roughly the square
      // root of its distance from the interval, far more than 1e-2 here.
      const long double target = std::sqrt(static_cast<long double>(q));
      bool ok = true;
      for (const C& root : z) ok = ok && std::fabs(std::abs(root) - target) < 1e-2L;
      if (ok) out.push_back(c);
      return;
    }
    for (long v = -bounds[static_cast<std::size_t>(i)]; v <= bounds[static_cast<std::size_t>(i)]; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  visit(visit, 0);
  return out;
}

std::set<long> elliptic_traces(long p) {
  std::set<long> traces;
  for (long code = 0; code < power(p, 5); ++code) {
    long a[5];
    long rest = code;
    for (long& x : a) {
      x = rest % p;
      rest /= p;
    }
    const long a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    const long b2 = a1 * a1 + 4 * a2;
    const long b4 = 2 * a4 + a1 * a3;
    const long b6 = a3 * a3 + 4 * a6;
    const long b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    const long disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (mod(disc, p) == 0) continue;
    long points = 1;  // point at infinity
    for (long x = 0; x < p; ++x) {
      for (long y = 0; y < p; ++y) {
        long lhs = y * y + a1 * x * y + a3 * y;
        long rhs = x * x * x + a2 * x * x + a4 * x + a6;
        if (mod(lhs - rhs, p) == 0) ++points;
      }
    }
    traces.insert(p + 1 - points);
  }
  return traces;
}

IntPoly power_sum_base_extension(const IntPoly& P, int s) {
  const int n = static_cast<int>(P.size()) - 1;
  // e_j from the monic coefficients: P = sum (-1)^j e_j x^(n-j).
  std::vector<Integer> e(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) e[static_cast<std::size_t>(j)] = (j % 2 ? -1 : 1) * P[static_cast<std::size_t>(n - j)];
  const int count = n * s;
  std::vector<Integer> pw(static_cast<std::size_t>(count + 1), Integer(0));
  for (int m = 1; m <= count; ++m) {
    Integer acc = 0;
    for (int i = 1; i <= std::min(m - 1, n); ++i) {
      Integer term = e[static_cast<std::size_t>(i)] * pw[static_cast<std::size_t>(m - i)];
      acc += (i % 2 ? 1 : -1) * term;
    }
    if (m <= n) acc += (m % 2 ? 1 : -1) * m * e[static_cast<std::size_t>(m)];
    pw[static_cast<std::size_t>(m)] = acc;
  }
  std::vector<Integer> f(static_cast<std::size_t>(n + 1), Integer(0));
  f[0] = 1;
  for (int j = 1; j <= n; ++j) {
    Integer acc = 0;
    for (int i = 1; i <= j; ++i) {
      Integer term = f[static_cast<std::size_t>(j - i)] * pw[static_cast<std::size_t>(i * s)];
      acc += (i % 2 ? 1 : -1) * term;
    }
    f[static_cast<std::size_t>(j)] = acc / j;
  }
  IntPoly out(static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) out[static_cast<std::size_t>(n - j)] = (j % 2 ? -1 : 1) * f[static_cast<std::size_t>(j)];
  return out;
}

long nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  long v = 0;
  while (v == 0) v = dist(rng);
  return v;
}

}  // namespace oracle
