#include "hodgesig/io/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace hodgesig::io {

namespace {

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// floor(C(g, k) (2 sqrt q)^(g - k)) bounds |b_k|.
Integer coefficient_bound(const Integer& q, int g, int k) {
  Integer c = factorial(g) / (factorial(k) * factorial(g - k));
  Integer square = c * c * ipow(4 * q, static_cast<unsigned long>(g - k));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), square.get_mpz_t());
  return root;
}

IntPoly derivative(const IntPoly& h, int order) {
  IntPoly out;
  for (std::size_t j = static_cast<std::size_t>(order); j < h.size(); ++j) {
    out.push_back(h[j] * factorial(static_cast<int>(j)) / factorial(static_cast<int>(j) - order));
  }
  return out;
}

// P(x) = sum_k b_k x^(g-k) (x^2 + q)^k.
IntPoly weil_from_real(const IntPoly& h, const Integer& q) {
  const int g = static_cast<int>(h.size()) - 1;
  IntPoly P(static_cast<std::size_t>(2 * g + 1), Integer(0));
  IntPoly power{Integer(1)};
  for (int k = 0; k <= g; ++k) {
    for (std::size_t j = 0; j < power.size(); ++j) P[j + static_cast<std::size_t>(g - k)] += h[static_cast<std::size_t>(k)] * power[j];
    power = poly::mul(power, IntPoly{q, 0, 1});
  }
  return P;
}

struct Search {
  Integer q;
  int g;
  std::vector<Integer> bounds;

  // Admissible values of b_k given h[k+1..g]; contiguous, see enumerate_weil.
  std::vector<Integer> admissible(IntPoly& h, int k) const {
    std::vector<Integer> out;
    const Integer& bound = bounds[static_cast<std::size_t>(k)];
    for (Integer b = -bound; b <= bound; ++b) {
      h[static_cast<std::size_t>(k)] = b;
      if (real_roots_in_weil_interval(derivative(h, k), q)) {
        out.push_back(b);
      } else if (!out.empty()) {
        break;
      }
    }
    h[static_cast<std::size_t>(k)] = 0;
    return out;
  }

  void descend(IntPoly& h, int k, std::vector<IntPoly>& found) const {
    if (k < 0) {
      found.push_back(weil_from_real(h, q));
      return;
    }
    for (const Integer& b : admissible(h, k)) {
      h[static_cast<std::size_t>(k)] = b;
      descend(h, k - 1, found);
    }
    h[static_cast<std::size_t>(k)] = 0;
  }
};

std::vector<WeilPolynomial> finish(std::vector<IntPoly> found, const Integer& q) {
  std::vector<WeilPolynomial> out;
  out.reserve(found.size());
  for (const IntPoly& P : found) out.push_back(validate_weil(P, q));
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

}  // namespace

bool enumeration_less(const WeilPolynomial& a, const WeilPolynomial& b) {
  const IntPoly& x = a.coeffs();
  const IntPoly& y = b.coeffs();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = x.size() - 1; i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

std::vector<WeilPolynomial> enumerate_weil(const Integer& q, int g, unsigned jobs) {
  if (g < 1) throw DomainError("genus must be positive");
  split_prime_power(q);
  Search search{q, g, {}};
  for (int k = 0; k < g; ++k) search.bounds.push_back(coefficient_bound(q, g, k));

  IntPoly h(static_cast<std::size_t>(g + 1), Integer(0));
  h[static_cast<std::size_t>(g)] = 1;
  std::vector<Integer> top = search.admissible(h, g - 1);

  // Branches on the top coefficient are independent; merge and sort after.
  std::vector<std::vector<IntPoly>> parts(top.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    IntPoly local = h;
    for (std::size_t i = next++; i < top.size(); i = next++) {
      local[static_cast<std::size_t>(g - 1)] = top[i];
      search.descend(local, g - 2, parts[i]);
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(top.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<IntPoly> found;
  for (auto& part : parts) {
    for (auto& P : part) found.push_back(std::move(P));
  }
  return finish(std::move(found), q);
}

std::vector<WeilPolynomial> enumerate_split(const Integer& q, int g, int max_factor_genus,
                                            unsigned jobs) {
  if (max_factor_genus < 1) throw DomainError("factor genus must be positive");
  std::vector<std::vector<IntPoly>> factors(static_cast<std::size_t>(max_factor_genus + 1));
  for (int d = 1; d <= std::min(g, max_factor_genus); ++d) {
    for (const WeilPolynomial& P : enumerate_weil(q, d, jobs)) factors[static_cast<std::size_t>(d)].push_back(P.coeffs());
  }
  // Flatten to one list ordered by genus so factor choices can be taken
  // non-decreasing in position, which avoids reordered duplicates.
  std::vector<IntPoly> pool;
  std::vector<int> genus;
  for (int d = 1; d < static_cast<int>(factors.size()); ++d) {
    for (const IntPoly& f : factors[static_cast<std::size_t>(d)]) {
      pool.push_back(f);
      genus.push_back(d);
    }
  }
  std::set<IntPoly> seen;
  std::vector<IntPoly> found;
  auto visit = [&](auto&& self, std::size_t start, int remaining, const IntPoly& product) -> void {
    if (remaining == 0) {
      if (seen.insert(product).second) found.push_back(product);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (genus[i] > remaining) continue;
      self(self, i, remaining - genus[i], poly::mul(product, pool[i]));
    }
  };
  visit(visit, 0, g, IntPoly{Integer(1)});
  return finish(std::move(found), q);
}

}  // namespace hodgesig::io
