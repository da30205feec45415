#pragma once

// Certified complex root enclosures for Weil polynomials.
//
// Roots are approximated in floating point, refined by Newton steps in exact
// dyadic arithmetic and then certified with Braess-Hadeler inclusion disks
// D(z_i, n |f(z_i) / prod_{j != i} (z_i - z_j)|): when the disks of a monic
// squarefree f are pairwise disjoint each one holds exactly one root.
// Repeated roots are handled upstream by a squarefree decomposition, so every
// distinct value carries an exact multiplicity.

#include "hodgesig/weil.hpp"

#include <string>
#include <vector>

namespace hodgesig {

/// Gaussian rational re + i*im.
struct Gauss {
  Rational re = 0;
  Rational im = 0;

  Gauss conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gauss operator/(const Gauss& a, const Gauss& b);
  friend bool operator==(const Gauss&, const Gauss&) = default;
};

/// Closed disk {z : |z - center| <= radius} with exact rational data.
struct Ball {
  Gauss center;
  Rational radius = 0;

  bool contains(const Gauss& z) const;
  bool intersects(const Ball& other) const;
  Ball conj() const { return {center.conj(), radius}; }
};

/// Product enclosure; the center is rounded to `bits` fractional bits and the
/// rounding error folded into the radius.
Ball multiply(const Ball& a, const Ball& b, unsigned bits);
Ball power(const Ball& a, unsigned exponent, unsigned bits);

/// Decimal rendering "re", "im" to `digits` places and an upward-rounded
/// radius that also covers the rounding of the printed center.
struct DecimalEnclosure {
  std::string re;
  std::string im;
  std::string radius;
};
DecimalEnclosure to_decimal(const Ball& ball, int digits);

struct PrecisionLadder {
  unsigned initial_bits = 128;
  unsigned max_escalations = 8;
};

/// Raised when certification does not succeed within the precision ladder.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enclosures of the n roots of a monic squarefree rational polynomial,
/// pairwise disjoint. Precision `bits` is the target center accuracy.
std::vector<Ball> isolate_roots(const RatPoly& monic_squarefree, unsigned bits);

/// One distinct root value of a Weil polynomial.
struct RootValue {
  Ball enclosure;
  int multiplicity = 0;
  int conjugate = -1;  // id of q/alpha = conj(alpha)
};

/// Distinct root values with multiplicities and the conjugation involution.
struct RootSystem {
  std::vector<RootValue> values;
  unsigned precision_bits = 0;

  int degree() const;
  /// Value id of every root listed with multiplicity (length = degree).
  std::vector<int> index_roots() const;
  bool is_self_conjugate(int id) const { return values[static_cast<std::size_t>(id)].conjugate == id; }
};

/// Clusters the roots of P into distinct values and pairs each value with
/// q/value; real values +-sqrt q are self-paired.
RootSystem conjugate_pairing(const WeilPolynomial& P, unsigned bits = 128);
RootSystem conjugate_pairing(const WeilPolynomial& P, const PrecisionLadder& ladder);

}  // namespace hodgesig
