#pragma once

// Weil q-polynomials: validation, Newton slopes and base extension.

#include "hodgesig/arith.hpp"
#include "hodgesig/polynomial.hpp"

#include <string>
#include <vector>

namespace hodgesig {

/// Why validate_weil rejected its input.
enum class WeilDefect {
  empty,
  not_monic,
  odd_degree,
  bad_q,
  functional_equation,
  off_critical_circle,
};

class WeilValidationError : public DomainError {
 public:
  WeilValidationError(WeilDefect defect, int index, const std::string& message)
      : DomainError(message), defect_(defect), index_(index) {}
  WeilDefect defect() const { return defect_; }
  /// Offending coefficient index for functional_equation, else -1.
  int index() const { return index_; }

 private:
  WeilDefect defect_;
  int index_;
};

struct PrimePower {
  Integer p;
  unsigned e = 0;
};

/// Throws DomainError unless q = p^e with p prime, e >= 1.
PrimePower split_prime_power(const Integer& q);

/// A monic integer polynomial of degree 2g whose complex roots all have
/// absolute value sqrt(q). Only produced by validate_weil and base_extension.
class WeilPolynomial {
 public:
  const IntPoly& coeffs() const { return coeffs_; }
  const Integer& q() const { return q_; }
  const Integer& p() const { return p_; }
  unsigned e() const { return e_; }
  int genus() const { return static_cast<int>(coeffs_.size() - 1) / 2; }
  int degree() const { return static_cast<int>(coeffs_.size() - 1); }

  friend bool operator==(const WeilPolynomial& a, const WeilPolynomial& b) {
    return a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
  }

 private:
  friend WeilPolynomial validate_weil(const IntPoly& coeffs, const Integer& q);
  friend WeilPolynomial base_extension(const WeilPolynomial& P, unsigned s);
  WeilPolynomial(IntPoly coeffs, Integer q, PrimePower pp)
      : coeffs_(std::move(coeffs)), q_(std::move(q)), p_(std::move(pp.p)), e_(pp.e) {}

  IntPoly coeffs_;
  Integer q_;
  Integer p_;
  unsigned e_ = 0;
};

/// The polynomial h of degree g with P(x) = x^g h(x + q/x). Requires the
/// functional equation c_i = q^(g-i) c_(2g-i) on ascending coefficients;
/// throws WeilValidationError otherwise.
IntPoly real_weil_polynomial(const IntPoly& coeffs, const Integer& q);

/// Whether every root of h is real and lies in [-2 sqrt q, 2 sqrt q], decided
/// exactly by Sturm sequences with endpoints evaluated in Q(sqrt q).
bool real_roots_in_weil_interval(const IntPoly& h, const Integer& q);

/// Accepts monic, even-degree integer polynomials satisfying the functional
/// equation whose roots all lie on |z| = sqrt q.
WeilPolynomial validate_weil(const IntPoly& coeffs, const Integer& q);

/// Normalized valuations v_p(alpha)/v_p(q) of the roots, ascending, with
/// multiplicity, read off the lower convex hull of (i, v_p(a_i)).
std::vector<Rational> newton_slopes(const WeilPolynomial& P);

/// Characteristic polynomial of the s-th power of the companion matrix: the
/// Weil q^s-polynomial with roots alpha^s.
WeilPolynomial base_extension(const WeilPolynomial& P, unsigned s);

/// Characteristic polynomial of a square integer matrix (Faddeev-LeVerrier).
IntPoly characteristic_polynomial(const std::vector<std::vector<Integer>>& matrix);

std::string format_polynomial(const IntPoly& f, char var = 'x');

}  // namespace hodgesig
