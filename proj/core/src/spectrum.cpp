#include "hodgesig/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hodgesig {

namespace {

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

unsigned ball_bits(unsigned precision_bits) { return precision_bits + 32; }

Gauss real_point(const Integer& x) { return {Rational(x), 0}; }

// Precision ladder as an explicit list of bit sizes.
std::vector<unsigned> ladder_bits(const PrecisionLadder& ladder) {
  std::vector<unsigned> out;
  unsigned bits = ladder.initial_bits;
  for (unsigned step = 0; step <= ladder.max_escalations; ++step) {
    out.push_back(bits);
    bits *= 2;
  }
  return out;
}

void require_codim(const WeilPolynomial& P, int size) {
  if (size < 1 || size > P.degree()) {
    throw DomainError("subset size must lie in [1, " + std::to_string(P.degree()) + "]");
  }
}

struct MultisetScan {
  std::vector<CertifiedSubset> matches;
  long weight = 0;  // number of index subsets represented by the matches
};

// Every size-k value multiset whose product enclosure contains q^w.
MultisetScan scan_value_multisets(const RootSystem& rs, int k, const Integer& target) {
  MultisetScan scan;
  const std::size_t values = rs.values.size();
  const unsigned bits = ball_bits(rs.precision_bits);
  const Gauss point = real_point(target);
  ValueMultiset counts(values, 0);
  std::function<void(std::size_t, int, const Ball&, long)> visit =
      [&](std::size_t id, int remaining, const Ball& product, long weight) {
        if (remaining == 0) {
          if (product.contains(point)) {
            scan.matches.push_back({counts, {target, product, 0, rs.precision_bits}});
            scan.weight += weight;
          }
          return;
        }
        if (id == values) return;
        const RootValue& v = rs.values[id];
        Ball acc = product;
        for (int c = 0; c <= std::min(remaining, v.multiplicity); ++c) {
          if (c > 0) acc = multiply(acc, v.enclosure, bits);
          counts[id] = c;
          visit(id + 1, remaining - c, acc, weight * binomial(v.multiplicity, c));
        }
        counts[id] = 0;
      };
  visit(0, k, Ball{{1, 0}, 0}, 1);
  return scan;
}

bool free_of_conjugate_pairs(const ValueMultiset& subset, const RootSystem& rs) {
  for (std::size_t id = 0; id < subset.size(); ++id) {
    if (subset[id] == 0) continue;
    int partner = rs.values[id].conjugate;
    if (subset[static_cast<std::size_t>(partner)] > 0) return false;
  }
  return true;
}

// One certification attempt at a fixed precision; nullopt asks for more bits.
std::optional<SubsetSearch> special_subsets_at(const WeilPolynomial& P, int k, const Integer& target,
                                               long exact, unsigned bits) {
  RootSystem rs = conjugate_pairing(P, bits);
  MultisetScan scan = scan_value_multisets(rs, k, target);
  if (scan.weight < exact) {
    throw std::logic_error("subset-product enclosures missed an exact match");
  }
  if (scan.weight != exact) return std::nullopt;
  SubsetSearch out{std::move(rs), {}};
  for (CertifiedSubset& s : scan.matches) {
    if (!free_of_conjugate_pairs(s.values, out.roots)) continue;
    s.certificate.exact_index_count = exact;
    out.subsets.push_back(std::move(s));
  }
  return out;
}

// Value ids of alpha^n among the distinct roots of the n-th base extension.
std::vector<int> power_map(const RootSystem& rs, const RootSystem& extended, unsigned n) {
  std::vector<int> image;
  for (const RootValue& v : rs.values) {
    Ball powered = power(v.enclosure, n, ball_bits(rs.precision_bits));
    int match = -1;
    for (std::size_t j = 0; j < extended.values.size(); ++j) {
      if (!powered.intersects(extended.values[j].enclosure)) continue;
      if (match != -1) throw CertificationError("ambiguous n-th power image");
      match = static_cast<int>(j);
    }
    if (match == -1) throw CertificationError("n-th power of a root is not enclosed");
    image.push_back(match);
  }
  return image;
}

}  // namespace

IntPoly exterior_power_polynomial(const WeilPolynomial& P, int k) {
  const int n = P.degree();
  if (k < 0 || k > n) throw DomainError("exterior power degree out of range");
  const long count = binomial(n, k);
  std::vector<Integer> s = poly::power_sums(P.coeffs(), static_cast<int>(count) * std::max(k, 1));
  // S_m = e_k(alpha_1^m, ..., alpha_n^m), whose power sums are s_{m i}.
  std::vector<Integer> sums;
  for (long m = 1; m <= count; ++m) {
    std::vector<Integer> e(static_cast<std::size_t>(k + 1), Integer(0));
    e[0] = 1;
    for (int j = 1; j <= k; ++j) {
      Integer acc = 0;
      for (int i = 1; i <= j; ++i) {
        Integer term = e[static_cast<std::size_t>(j - i)] * s[static_cast<std::size_t>(m * i - 1)];
        if (i % 2 == 1) acc += term; else acc -= term;
      }
      mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(j));
      e[static_cast<std::size_t>(j)] = acc;
    }
    sums.push_back(e[static_cast<std::size_t>(k)]);
  }
  return poly::from_power_sums(sums, static_cast<int>(count));
}

long tate_class_count(const WeilPolynomial& P, int codim, const PrecisionLadder& ladder) {
  if (codim < 1 || codim > P.genus()) {
    throw DomainError("codimension must lie in [1, g]");
  }
  const int k = 2 * codim;
  const Integer target = ipow(P.q(), static_cast<unsigned long>(codim));
  const long exact = poly::root_multiplicity(exterior_power_polynomial(P, k), target);
  for (unsigned bits : ladder_bits(ladder)) {
    RootSystem rs;
    try {
      rs = conjugate_pairing(P, bits);
    } catch (const CertificationError&) {
      continue;
    }
    std::vector<Ball> roots;
    for (int id : rs.index_roots()) roots.push_back(rs.values[static_cast<std::size_t>(id)].enclosure);
    const Gauss point = real_point(target);
    const unsigned wbits = ball_bits(bits);
    long matches = 0;
    std::function<void(std::size_t, int, const Ball&)> visit = [&](std::size_t start, int remaining,
                                                                    const Ball& product) {
      if (remaining == 0) {
        if (product.contains(point)) ++matches;
        return;
      }
      for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= roots.size(); ++i) {
        visit(i + 1, remaining - 1, multiply(product, roots[i], wbits));
      }
    };
    visit(0, k, Ball{{1, 0}, 0});
    if (matches < exact) throw std::logic_error("subset-product enclosures missed an exact match");
    if (matches == exact) return exact;
  }
  throw CertificationError("Tate class count not certified within the precision ladder");
}

SubsetSearch special_subsets(const WeilPolynomial& P, int size, int power,
                             const PrecisionLadder& ladder) {
  require_codim(P, size);
  if (power < 0) throw DomainError("power must be nonnegative");
  const Integer target = ipow(P.q(), static_cast<unsigned long>(power));
  const long exact = poly::root_multiplicity(exterior_power_polynomial(P, size), target);
  for (unsigned bits : ladder_bits(ladder)) {
    try {
      if (auto found = special_subsets_at(P, size, target, exact, bits)) return std::move(*found);
    } catch (const CertificationError&) {
    }
  }
  throw CertificationError("special subsets not certified within the precision ladder");
}

SubsetSearch exotic_subsets(const WeilPolynomial& P, int extension_depth, const PrecisionLadder& ladder) {
  if (P.degree() != 8) {
    throw DomainError("exotic subsets need a degree-8 Weil polynomial, got degree " +
                      std::to_string(P.degree()));
  }
  if (extension_depth < 1) throw DomainError("extension depth must be at least 1");
  const Integer target = P.q() * P.q();
  const long exact = poly::root_multiplicity(exterior_power_polynomial(P, 4), target);
  for (unsigned bits : ladder_bits(ladder)) {
    try {
      auto found = special_subsets_at(P, 4, target, exact, bits);
      if (!found) continue;
      SubsetSearch search = std::move(*found);
      auto unstable = [](const CertifiedSubset& s) { return !s.stable(); };
      for (int n = 2; n <= extension_depth; ++n) {
        if (std::all_of(search.subsets.begin(), search.subsets.end(), unstable)) break;
        RootSystem extended = conjugate_pairing(base_extension(P, static_cast<unsigned>(n)), bits);
        std::vector<int> image = power_map(search.roots, extended, static_cast<unsigned>(n));
        for (CertifiedSubset& s : search.subsets) {
          if (!s.stable()) continue;
          ValueMultiset powered(extended.values.size(), 0);
          for (std::size_t id = 0; id < s.values.size(); ++id) {
            powered[static_cast<std::size_t>(image[id])] += s.values[id];
          }
          if (!free_of_conjugate_pairs(powered, extended)) s.breaks_at_power = n;
        }
      }
      return search;
    } catch (const CertificationError&) {
    }
  }
  throw CertificationError("exotic subsets not certified within the precision ladder");
}

ValueMultiset conjugate(const ValueMultiset& subset, const RootSystem& roots) {
  ValueMultiset out(subset.size(), 0);
  for (std::size_t id = 0; id < subset.size(); ++id) {
    out[static_cast<std::size_t>(roots.values[id].conjugate)] += subset[id];
  }
  return out;
}

int intersection_size(const ValueMultiset& a, const ValueMultiset& b) {
  int total = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) total += std::min(a[i], b[i]);
  return total;
}

StructureReport check_structure(const SubsetSearch& exotic, const WeilPolynomial& P) {
  StructureReport report;
  report.count = static_cast<int>(exotic.subsets.size());
  std::vector<ValueMultiset> subsets;
  for (const CertifiedSubset& s : exotic.subsets) {
    if (s.stable()) subsets.push_back(s.values);
  }
  report.stable_count = static_cast<int>(subsets.size());
  auto find = [&](const ValueMultiset& target) {
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (subsets[i] == target) return static_cast<int>(i);
    }
    return -1;
  };

  const int n = report.stable_count;
  if (n != 0 && n != 2 && n != 4) {
    report.count_in_range = false;
    report.violations.push_back("stable exotic subset count " + std::to_string(n) +
                                " is not 0, 2 or 4");
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    int j = find(conjugate(subsets[i], exotic.roots));
    if (j == -1 || j == static_cast<int>(i)) {
      report.conjugation_free = false;
      report.violations.push_back("subset " + std::to_string(i) +
                                  (j == -1 ? " has no conjugate in the list" : " is self-conjugate"));
    }
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (intersection_size(subsets[i], subsets[j]) == 2) {
        report.no_pair_meets_in_two = false;
        report.violations.push_back("subsets " + std::to_string(i) + " and " + std::to_string(j) +
                                    " meet in exactly two values");
      }
    }
  }
  if (n == 4) {
    const ValueMultiset& I = subsets[0];
    ValueMultiset I_bar = conjugate(I, exotic.roots);
    bool shape = false;
    for (std::size_t j = 1; j < subsets.size(); ++j) {
      if (subsets[j] == I_bar) continue;
      ValueMultiset J_bar = conjugate(subsets[j], exotic.roots);
      int a = intersection_size(I, subsets[j]);
      int b = intersection_size(I, J_bar);
      shape = shape || ((a == 3 || b == 3) && find(J_bar) != -1);
    }
    bool has_q = poly::evaluate(base_extension(P, 2).coeffs(), P.q()) == 0;
    report.four_case_ok = shape && has_q;
    if (!shape) report.violations.push_back("four exotic subsets are not of the form I, conj I, J, conj J with |I & J| = 3");
    if (!has_q) report.violations.push_back("four exotic subsets but q is not an eigenvalue over F_{q^2}");
  }
  return report;
}

}  // namespace hodgesig
