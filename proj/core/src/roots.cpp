#include "hodgesig/roots.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace hodgesig {

Gauss operator/(const Gauss& a, const Gauss& b) {
  Rational n = b.norm();
  if (n == 0) throw DomainError("Gaussian division by zero");
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

bool Ball::contains(const Gauss& z) const { return (center - z).norm() <= radius * radius; }

bool Ball::intersects(const Ball& other) const {
  Rational reach = radius + other.radius;
  return (center - other.center).norm() <= reach * reach;
}

namespace {

Rational ceil_dyadic(const Rational& x, unsigned bits) {
  Integer scaled = x.get_num() << bits;
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  Rational out(q, Integer(1) << bits);
  out.canonicalize();
  return out;
}

// Rounds the center and returns the ball widened by the rounding error.
Ball rounded(const Gauss& center, const Rational& radius, unsigned bits) {
  Gauss c{round_dyadic(center.re, bits), round_dyadic(center.im, bits)};
  Rational err = abs(center.re - c.re) + abs(center.im - c.im);
  return {c, ceil_dyadic(radius + err, bits)};
}

Gauss evaluate(const RatPoly& f, const Gauss& z) {
  Gauss acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

Rational magnitude_upper(const Gauss& z, unsigned bits) { return sqrt_upper(z.norm(), bits); }

Rational decimal_to_rational(const std::string& text) {
  std::string mantissa = text;
  long exponent = 0;
  if (auto pos = text.find_first_of("eE"); pos != std::string::npos) {
    mantissa = text.substr(0, pos);
    exponent = std::stol(text.substr(pos + 1));
  }
  bool negative = !mantissa.empty() && mantissa[0] == '-';
  if (negative || (!mantissa.empty() && mantissa[0] == '+')) mantissa.erase(0, 1);
  std::string digits;
  for (char ch : mantissa) {
    if (ch == '.') {
      continue;
    }
    digits.push_back(ch);
  }
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
  }
  if (digits.empty()) digits = "0";
  Rational value(Integer(digits, 10));
  value *= rpow(Rational(10), exponent);
  return negative ? Rational(-value) : value;
}

// Aberth-Ehrlich simultaneous iteration on a monic polynomial.
template <class Complex, class Real>
std::vector<Complex> aberth(const std::vector<Complex>& coeffs, int max_iterations, Real tolerance) {
  using std::abs;
  using std::cos;
  using std::pow;
  using std::sin;
  std::size_t n = coeffs.size() - 1;
  Real radius = pow(Real(abs(coeffs[0])), Real(1) / Real(static_cast<double>(n)));
  if (!(radius > Real(0))) radius = Real(1);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = Complex(radius * Real(std::cos(angle)), radius * Real(std::sin(angle)));
  }
  for (int iter = 0; iter < max_iterations; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex f = coeffs[n];
      Complex df = Complex(0);
      for (std::size_t k = n; k-- > 0;) {
        df = df * z[i] + f;
        f = f * z[i] + coeffs[k];
      }
      if (abs(f) == Real(0)) continue;
      Complex ratio = f / df;
      Complex repulsion = Complex(0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) repulsion += Complex(1) / (z[i] - z[j]);
      }
      Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[i] -= step;
      Real rel = abs(step) / (Real(1) + abs(z[i]));
      if (rel > worst) worst = rel;
    }
    if (worst < tolerance) break;
  }
  return z;
}

std::vector<Gauss> seeds_double(const RatPoly& f) {
  std::vector<std::complex<double>> c;
  for (const Rational& a : f) c.emplace_back(a.get_d(), 0.0);
  auto z = aberth<std::complex<double>, double>(c, 500, 1e-15);
  std::vector<Gauss> out;
  for (const auto& w : z) out.push_back({Rational(w.real()), Rational(w.imag())});
  return out;
}

std::vector<Gauss> seeds_extended(const RatPoly& f) {
  using boost::multiprecision::cpp_bin_float_100;
  using boost::multiprecision::cpp_complex_100;
  std::vector<cpp_complex_100> c;
  for (const Rational& a : f) {
    cpp_bin_float_100 num(a.get_num().get_str());
    cpp_bin_float_100 den(a.get_den().get_str());
    c.emplace_back(num / den);
  }
  auto z = aberth<cpp_complex_100, cpp_bin_float_100>(c, 2000, cpp_bin_float_100("1e-90"));
  std::vector<Gauss> out;
  for (const auto& w : z) {
    out.push_back({decimal_to_rational(w.real().str(110, std::ios_base::scientific)),
                   decimal_to_rational(w.imag().str(110, std::ios_base::scientific))});
  }
  return out;
}

void newton_refine(const RatPoly& f, const RatPoly& df, Gauss& z, unsigned bits) {
  Rational threshold = rpow(Rational(2), -2 * static_cast<long>(bits));
  z = {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
  for (int iter = 0; iter < 64; ++iter) {
    Gauss d = evaluate(df, z);
    if (d.norm() == 0) return;
    Gauss step = evaluate(f, z) / d;
    z = z - step;
    z = {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
    Rational scale = z.norm();
    if (scale < 1) scale = 1;
    if (step.norm() <= threshold * scale) return;
  }
}

// Braess-Hadeler inclusion radii; empty result when the disks overlap.
std::vector<Ball> certify(const RatPoly& f, const std::vector<Gauss>& z, unsigned bits) {
  std::size_t n = z.size();
  std::vector<Ball> balls;
  for (std::size_t i = 0; i < n; ++i) {
    Gauss denom{1, 0};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom = denom * (z[i] - z[j]);
    }
    if (denom.norm() == 0) return {};
    Gauss w = evaluate(f, z[i]) / denom;
    Rational r = sqrt_upper(w.norm() * Rational(static_cast<long>(n * n)), bits + 16);
    balls.push_back({z[i], ceil_dyadic(r, bits + 16)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (balls[i].intersects(balls[j])) return {};
    }
  }
  return balls;
}

bool pairwise_disjoint(const std::vector<RootValue>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i].enclosure.intersects(values[j].enclosure)) return false;
    }
  }
  return true;
}

}  // namespace

Ball multiply(const Ball& a, const Ball& b, unsigned bits) {
  Gauss c = a.center * b.center;
  Rational r = a.radius * b.radius;
  if (b.radius != 0) r += magnitude_upper(a.center, bits) * b.radius;
  if (a.radius != 0) r += magnitude_upper(b.center, bits) * a.radius;
  return rounded(c, r, bits);
}

Ball power(const Ball& a, unsigned exponent, unsigned bits) {
  Ball result{{1, 0}, 0};
  Ball base = a;
  for (unsigned k = exponent; k > 0; k >>= 1) {
    if (k & 1) result = multiply(result, base, bits);
    if (k > 1) base = multiply(base, base, bits);
  }
  return result;
}

DecimalEnclosure to_decimal(const Ball& ball, int digits) {
  Integer scale = ipow(Integer(10), static_cast<unsigned long>(digits));
  auto render = [&](const Rational& x) {
    Rational scaled = x * Rational(scale);
    Integer rounded_value;
    // Round half away from zero.
    Integer twice = scaled.get_num() * 2 + (sgn(scaled) >= 0 ? scaled.get_den() : Integer(-scaled.get_den()));
    Integer den2 = scaled.get_den() * 2;
    mpz_tdiv_q(rounded_value.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
    bool negative = rounded_value < 0;
    std::string body = Integer(abs(rounded_value)).get_str();
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return (negative ? "-" : "") + body;
  };
  // Printed center is off by at most 10^-digits / 2 in each coordinate.
  Rational slack = ball.radius + Rational(1, scale);
  int exponent = 0;
  while (rpow(Rational(10), exponent - 1) >= slack) --exponent;
  while (rpow(Rational(10), exponent) < slack) ++exponent;
  std::ostringstream radius;
  radius << "1e" << exponent;
  return {render(ball.center.re), render(ball.center.im), radius.str()};
}

std::vector<Ball> isolate_roots(const RatPoly& f, unsigned bits) {
  int n = poly::degree(f);
  if (n < 1) return {};
  if (f[static_cast<std::size_t>(n)] != 1) throw DomainError("isolate_roots: polynomial must be monic");
  if (n == 1) return {Ball{{-f[0], 0}, 0}};
  RatPoly df = poly::derivative(f);
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<Gauss> z = attempt == 0 ? seeds_double(f) : seeds_extended(f);
    for (unsigned working = bits; working <= 4 * bits; working *= 2) {
      for (Gauss& w : z) newton_refine(f, df, w, working);
      auto balls = certify(f, z, working);
      if (!balls.empty()) return balls;
    }
  }
  throw CertificationError("could not isolate the roots of a degree-" + std::to_string(n) +
                           " factor at " + std::to_string(bits) + " bits");
}

int RootSystem::degree() const {
  int total = 0;
  for (const RootValue& v : values) total += v.multiplicity;
  return total;
}

std::vector<int> RootSystem::index_roots() const {
  std::vector<int> out;
  for (std::size_t id = 0; id < values.size(); ++id) {
    for (int k = 0; k < values[id].multiplicity; ++k) out.push_back(static_cast<int>(id));
  }
  return out;
}

RootSystem conjugate_pairing(const WeilPolynomial& P, unsigned bits) {
  auto factors = poly::squarefree_decomposition(poly::to_rational(P.coeffs()));
  RootSystem rs;
  rs.precision_bits = bits;
  for (const auto& part : factors) {
    for (Ball& b : isolate_roots(part.factor, bits)) {
      rs.values.push_back({std::move(b), part.multiplicity, -1});
    }
  }
  if (!pairwise_disjoint(rs.values)) {
    throw CertificationError("root enclosures of distinct factors overlap at " +
                             std::to_string(bits) + " bits");
  }
  for (std::size_t i = 0; i < rs.values.size(); ++i) {
    Ball mirrored = rs.values[i].enclosure.conj();
    int match = -1;
    for (std::size_t j = 0; j < rs.values.size(); ++j) {
      if (!mirrored.intersects(rs.values[j].enclosure)) continue;
      if (match != -1) {
        throw CertificationError("ambiguous complex conjugate at " + std::to_string(bits) + " bits");
      }
      match = static_cast<int>(j);
    }
    if (match == -1 || rs.values[static_cast<std::size_t>(match)].multiplicity != rs.values[i].multiplicity) {
      throw CertificationError("complex conjugate of a root value was not found");
    }
    rs.values[i].conjugate = match;
  }
  return rs;
}

RootSystem conjugate_pairing(const WeilPolynomial& P, const PrecisionLadder& ladder) {
  unsigned bits = ladder.initial_bits;
  for (unsigned step = 0;; ++step) {
    try {
      return conjugate_pairing(P, bits);
    } catch (const CertificationError&) {
      if (step >= ladder.max_escalations) throw;
    }
    bits *= 2;
  }
}

}  // namespace hodgesig
