#pragma once

// Valuations, square classes and Hilbert symbols at every place of Q.

#include "hodgesig/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodgesig {

/// Raised when an operation is applied outside its mathematical domain
/// (zero where a unit is required, a non-prime place, a degenerate form, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Deterministic Miller-Rabin below 2^64; GMP's BPSW test above.
bool is_prime(const Integer& n);

/// Prime divisors of |n| in increasing order, by trial division. n != 0.
std::vector<Integer> prime_divisors(const Integer& n);

/// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place real() { return Place(); }
  /// Throws DomainError unless p is prime.
  static Place finite(const Integer& p);
  static Place finite(long p) { return finite(Integer(p)); }

  bool is_real() const { return prime_ == 0; }
  bool is_finite() const { return prime_ != 0; }
  /// The prime; 0 for the real place.
  const Integer& prime() const { return prime_; }

  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
  friend bool operator<(const Place& a, const Place& b) { return a.prime_ < b.prime_; }

 private:
  Place() = default;
  Integer prime_ = 0;
};

/// p-adic valuation of a nonzero rational.
long val_p(const Rational& x, const Integer& p);
long val_p(const Integer& x, const Integer& p);

/// x / p^val_p(x): the part of x prime to p.
Rational unit_part(const Rational& x, const Integer& p);

/// Legendre symbol (a/p) for an odd prime p not dividing a, via Euler's criterion.
int legendre(const Integer& a, const Integer& p);

/// Least positive quadratic nonresidue modulo the odd prime p.
Integer least_nonresidue(const Integer& p);

bool is_square(const Rational& x, const Place& place);

/// Element of Q_v^* / (Q_v^*)^2 with a canonical representative:
/// real: +1 or -1; odd p: 1, u, p, u*p with u the least nonresidue;
/// p = 2: one of +-1, +-2, +-5, +-10.
struct SquareClass {
  Place place = Place::real();
  Rational representative = 1;

  bool is_trivial() const { return representative == 1; }
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.place == b.place && a.representative == b.representative;
  }
};

SquareClass square_class(const Rational& x, const Place& place);

/// Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nonzero solution
/// over Q_v. Closed formulas: sign test at the real place, valuations and
/// Legendre symbols at odd p, the epsilon/omega unit-class formula at p = 2.
int hilbert(const Rational& a, const Rational& b, const Place& place);

/// The finite places at which (a, b)_v can differ from +1, together with the
/// real place: real, 2, and every prime dividing a numerator or denominator.
std::vector<Place> hilbert_support(const std::vector<Rational>& values);

}  // namespace hodgesig
