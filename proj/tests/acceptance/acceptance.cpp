// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance --only N   run criterion N
//
// Exit status is 0 iff every criterion that ran passed.

#include "hodgesig/io/commands.hpp"
#include "hodgesig/io/enumerate.hpp"
#include "hodgesig/signature.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace hodgesig;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string timing(double s) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << s << " s";
  return out.str();
}

const ExtensionKind kNonsplit[] = {ExtensionKind::unramified, ExtensionKind::tame_ramified,
                                   ExtensionKind::wild_Q2_sqrt_minus1, ExtensionKind::wild_Q2_sqrt3};

bool exists_at(ExtensionKind kind, long p) {
  return p == 2 || (kind != ExtensionKind::wild_Q2_sqrt_minus1 && kind != ExtensionKind::wild_Q2_sqrt3);
}

BinaryForm random_form(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    long a = dist(rng), b = dist(rng), c = dist(rng);
    if (a * c - b * b != 0) return BinaryForm(a, b, c);
  }
}

// The degree-8 corpus over F_2 built from factors of degree <= 4, as the
// enumerate command produces it.
const std::vector<WeilPolynomial>& split_corpus() {
  static const std::vector<WeilPolynomial> corpus = [] {
    io::Config config;
    std::vector<WeilPolynomial> out;
    for (const io::WeilRecord& r : io::enumerate_records(2, 4, 2, config)) out.push_back(io::validated(r));
    return out;
  }();
  return corpus;
}

Outcome product_formula() {
  auto start = Clock::now();
  std::mt19937_64 rng(1);
  int failures = 0;
  for (int n = 0; n < 10000; ++n) failures += !product_formula_check(random_form(rng, 30));
  double t = seconds_since(start);
  return {failures == 0 && t < 10,
          "10000 forms, " + std::to_string(failures) + " failures, " + timing(t)};
}

Outcome hilbert_oracle() {
  auto start = Clock::now();
  long checked = 0, mismatches = 0;
  for (long p : {2, 3, 5, 7}) {
    Place place = Place::finite(p);
    for (long a = -50; a <= 50; ++a) {
      for (long b = -50; b <= 50; ++b) {
        if (a == 0 || b == 0) continue;
        ++checked;
        if (hilbert(a, b, place) != oracle::hilbert_symbol(a, b, p)) {
          if (mismatches++ < 3) std::cerr << "hilbert(" << a << ", " << b << ")_" << p << " disagrees\n";
        }
      }
    }
  }
  double t = seconds_since(start);
  return {mismatches == 0 && t < 60, std::to_string(checked) + " symbols, " + std::to_string(mismatches) +
                                         " mismatches, " + timing(t)};
}

Outcome local_classification_oracle() {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> small(-3, 3);
  long mismatches = 0, isomorphic = 0;
  for (long p : {2, 3, 5}) {
    Place place = Place::finite(p);
    for (int n = 0; n < 1000; ++n) {
      BinaryForm f1 = random_form(rng, 12);
      BinaryForm f2 = random_form(rng, 12);
      if (n % 2 == 0) {
        // an integral change of basis, often not invertible over Z_p
        for (;;) {
          long b11 = small(rng), b12 = small(rng), b21 = small(rng), b22 = small(rng);
          if (b11 * b22 - b12 * b21 == 0) continue;
          f2 = f1.transformed(b11, b12, b21, b22);
          break;
        }
      }
      bool got = locally_isomorphic(f1, f2, place);
      isomorphic += got;
      if (got != oracle::locally_isomorphic(f1, f2, p)) {
        if (mismatches++ < 3) {
          std::cerr << "local iso at " << p << " disagrees for (" << f1.g11() << "," << f1.g12() << ","
                    << f1.g22() << ") vs (" << f2.g11() << "," << f2.g12() << "," << f2.g22() << ")\n";
        }
      }
    }
  }
  return {mismatches == 0, "3000 pairs (" + std::to_string(isomorphic) + " isomorphic), " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome constants() {
  bool wild = hilbert(-9, -1, Place::finite(2)) == -1 && hilbert(-9, 3, Place::finite(2)) == -1;
  int norms = 0, primes = 0;
  for (long p = 2; p <= 100; ++p) {
    if (!is_prime(Integer(p))) continue;
    ++primes;
    norms += is_norm(Rational(1, p), extension_of_kind(ExtensionKind::unramified, p));
  }
  return {wild && norms == 0, std::string("(-9,-1)_2 = (-9,3)_2 = -1: ") + (wild ? "yes" : "no") +
                                  "; 1/p a norm for " + std::to_string(norms) + " of " +
                                  std::to_string(primes) + " primes"};
}

Outcome parity() {
  int cases = 0, failures = 0;
  for (long p : {2, 3, 5, 7, 11}) {
    for (ExtensionKind k : kNonsplit) {
      if (!exists_at(k, p)) continue;
      auto ext = extension_of_kind(k, p);
      for (int i = 1; i <= 20; ++i) {
        ++cases;
        failures += decide_p_isomorphic(i, ext) != (i % 2 == 0);
      }
    }
  }
  return {failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

Outcome definiteness_grid() {
  int cases = 0, failures = 0;
  auto check = [&](const MotiveDescriptor& m) {
    ++cases;
    failures += predict_definiteness(m) != Definiteness::positive;
  };
  for (long p : {2, 3, 5, 7, 11}) {
    MotiveDescriptor zero;
    zero.p = p;
    check(zero);
    for (ExtensionKind k : kNonsplit) {
      if (!exists_at(k, p)) continue;
      for (int i = 1; i <= 20; ++i) {
        MotiveDescriptor m;
        m.hodge_gap = i;
        m.p = p;
        m.extension = extension_of_kind(k, p);
        Rational s = i % 2 == 0 ? 1 : -1;
        m.q_B = BinaryForm::diagonal(s, s);
        check(m);
      }
    }
  }
  return {failures == 0, std::to_string(cases) + " descriptors, " + std::to_string(failures) + " not positive"};
}

Outcome supersingular() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (long p : {2, 3, 7}) {
    IntPoly f{1};
    for (int i = 0; i < 4; ++i) f = poly::mul(f, IntPoly{p, 0, 1});
    FourfoldReport r = fourfold_signature_report(validate_weil(f, p));
    oracle::SupersingularCounts o = oracle::supersingular_counts(p);
    SignaturePair oracle_sig{static_cast<int>(o.rho2 - o.rho1 + 1), static_cast<int>(o.rho1 - 1)};
    bool agree = r.rho1 == o.rho1 && r.rho2_tate == o.rho2 && r.exotic_count() == o.exotic &&
                 r.predicted_signature == oracle_sig;
    bool expected = r.rho1 == 16 && r.rho2_tate == 38 && r.exotic_count() == 2 &&
                    r.predicted_signature == SignaturePair{23, 15};
    ok = ok && agree && expected;
    detail += "p=" + std::to_string(p) + ": " + std::to_string(r.rho1) + "/" + std::to_string(r.rho2_tate) +
              "/" + std::to_string(r.exotic_count()) + " (" +
              std::to_string(r.predicted_signature.s_plus) + ";" +
              std::to_string(r.predicted_signature.s_minus) + ")" + (agree ? "" : " oracle differs") + ", ";
  }
  double t = seconds_since(start);
  return {ok && t < 5, detail + timing(t)};
}

Outcome structure() {
  constexpr std::size_t kRequiredCorpus = 10000;
  auto start = Clock::now();
  const auto& corpus = split_corpus();
  long violations = 0;
  std::map<std::pair<int, int>, int> histogram;
  for (const WeilPolynomial& P : corpus) {
    StructureReport r = check_structure(exotic_subsets(P), P);
    ++histogram[{r.count, r.stable_count}];
    if (!r.passed()) {
      if (violations++ < 3) std::cerr << format_polynomial(P.coeffs()) << ": " << r.violations.front() << "\n";
    }
  }
  double t_split = seconds_since(start);

  // Every degree-8 Weil polynomial over F_2, irreducible factors included.
  auto all = io::enumerate_weil(2, 4);
  long all_violations = 0;
  for (const WeilPolynomial& P : all) all_violations += !check_structure(exotic_subsets(P), P).passed();
  double t = seconds_since(start);

  std::string hist;
  for (const auto& [key, n] : histogram) {
    hist += " " + std::to_string(key.first) + "/" + std::to_string(key.second) + ":" + std::to_string(n);
  }
  bool size_ok = corpus.size() >= kRequiredCorpus;
  std::string detail = "split corpus " + std::to_string(corpus.size()) + " polynomials (required >= " +
                       std::to_string(kRequiredCorpus) + (size_ok ? "" : ", not attainable over F_2") +
                       "), " + std::to_string(violations) + " violations in " + timing(t_split) +
                       "; count/stable:" + hist + "; all " + std::to_string(all.size()) +
                       " degree-8 polynomials: " + std::to_string(all_violations) + " violations, " + timing(t);
  return {size_ok && violations == 0 && all_violations == 0 && t < 600, detail};
}

Outcome base_extension_coherence() {
  const auto& corpus = split_corpus();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  int failures = 0;
  for (int n = 0; n < 500; ++n) {
    const WeilPolynomial& P = corpus[pick(rng)];
    for (unsigned s : {2u, 3u}) {
      WeilPolynomial Ps = base_extension(P, s);
      try {
        WeilPolynomial checked = validate_weil(Ps.coeffs(), Ps.q());
        failures += newton_slopes(checked) != newton_slopes(P);
        failures += Ps.coeffs() != oracle::power_sum_base_extension(P.coeffs(), static_cast<int>(s));
      } catch (const WeilValidationError&) {
        ++failures;
      }
    }
  }
  return {failures == 0, "500 samples x s in {2,3}, " + std::to_string(failures) + " failures"};
}

Outcome honda_tate() {
  Rational a = honda_tate_invariant(1, 4, 4);
  Rational b = honda_tate_invariant(1, 2, 1);
  Rational c = honda_tate_invariant(1, 2, 2);
  bool ok = a == 0 && b == Rational(1, 2) && c == 0;
  return {ok, "(1/4,4) -> " + to_string(a) + ", (1/2,1) -> " + to_string(b) + ", (1/2,2) -> " + to_string(c)};
}

Outcome rank2() {
  // x^2 - 2x + 16: roots 1 +- i sqrt 15, modulus 4 = q^(4/2) over F_2
  Rank2Verdict trivial = rank2_pathway({16, -2, 1}, 2, 1, 2);
  // (x - 4)^2 = Frobenius on H^4 of a supersingular piece over F_2
  Rank2Verdict algebraic = rank2_pathway({16, -8, 1}, 2, 1, 2);
  bool ok = !trivial.rational_roots && !trivial.definiteness && algebraic.rational_roots &&
            algebraic.definiteness == Definiteness::positive;
  return {ok, std::string("irrational: ") + (trivial.definiteness ? "verdict" : "trivial") + "; rational: " +
                  (algebraic.definiteness ? std::string(to_string(*algebraic.definiteness)) : "none")};
}

Outcome elliptic_counts() {
  io::Config config;
  bool ok = true;
  std::string detail;
  for (long p : {2, 3}) {
    auto records = io::enumerate_records(p, 1, std::nullopt, config);
    std::set<long> traces;
    for (const io::WeilRecord& r : records) traces.insert(-r.coeffs[1].get_si());
    std::set<long> brute = oracle::elliptic_traces(p);
    ok = ok && traces == brute;
    detail += "F_" + std::to_string(p) + ": " + std::to_string(records.size()) + " enumerated, " +
              std::to_string(brute.size()) + " by point counting; ";
  }
  return {ok, detail};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"Hilbert product formula", product_formula},
      {"Hilbert symbol vs solvability oracle", hilbert_oracle},
      {"local classification vs represented-classes oracle", local_classification_oracle},
      {"norm constants", constants},
      {"p-adic isomorphy parity", parity},
      {"definiteness prediction", definiteness_grid},
      {"supersingular fourfold counts", supersingular},
      {"exotic subset structure on the split corpus", structure},
      {"base extension coherence", base_extension_coherence},
      {"Honda-Tate invariant", honda_tate},
      {"rank-2 pathway", rank2},
      {"elliptic isogeny class counts", elliptic_counts},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--only N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& err) {
      o = {false, std::string("exception: ") + err.what()};
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << ": " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
