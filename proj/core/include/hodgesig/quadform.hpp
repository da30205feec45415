#pragma once

// Nondegenerate rank-2 quadratic forms over Q and their local invariants.

#include "hodgesig/arith.hpp"

#include <string_view>
#include <utility>

namespace hodgesig {

/// q(x, y) = g11 x^2 + 2 g12 x y + g22 y^2, given by its symmetric Gram matrix.
class BinaryForm {
 public:
  /// Throws DomainError if g11*g22 - g12^2 = 0.
  BinaryForm(Rational g11, Rational g12, Rational g22);

  static BinaryForm diagonal(const Rational& d1, const Rational& d2) { return {d1, 0, d2}; }

  const Rational& g11() const { return g11_; }
  const Rational& g12() const { return g12_; }
  const Rational& g22() const { return g22_; }
  Rational determinant() const { return g11_ * g22_ - g12_ * g12_; }
  Rational evaluate(const Rational& x, const Rational& y) const {
    return g11_ * x * x + 2 * g12_ * x * y + g22_ * y * y;
  }

  /// Gram matrix of the form in the basis given by the columns of B:
  /// B^T G B. B must be invertible.
  BinaryForm transformed(const Rational& b11, const Rational& b12, const Rational& b21,
                         const Rational& b22) const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  Rational g11_, g12_, g22_;
};

struct Diagonalization {
  Rational d1;
  Rational d2;
};

enum class Definiteness { positive, negative, indefinite, unknown };

std::string_view to_string(Definiteness d);

struct SignaturePair {
  int s_plus = 0;
  int s_minus = 0;
  friend bool operator==(const SignaturePair&, const SignaturePair&) = default;
};

struct LocalInvariantRecord {
  Place place = Place::real();
  int epsilon = 1;
  SquareClass disc_class;
};

/// <d1, d2> equivalent to f. d1 = g11 when nonzero, else g22, else q(1,1) = 2 g12;
/// always d2 = det / d1.
Diagonalization diagonalize(const BinaryForm& f);

int epsilon_place(const BinaryForm& f, const Place& place);
SquareClass discriminant_class(const BinaryForm& f, const Place& place);
LocalInvariantRecord local_invariants(const BinaryForm& f, const Place& place);

SignaturePair real_signature(const BinaryForm& f);
Definiteness definiteness(const BinaryForm& f);

/// Equal discriminant class and equal epsilon at a finite place; equal
/// signature at the real place.
bool locally_isomorphic(const BinaryForm& f1, const BinaryForm& f2, const Place& place);

/// Product of epsilon over the real place and every prime dividing 2 and the
/// diagonal entries. Always true for a valid form.
bool product_formula_check(const BinaryForm& f);

/// Definiteness of f1 from local data, assuming f1 and f2 are isomorphic at
/// every prime other than p (the caller's contract).
Definiteness infer_definiteness(bool f1_disc_positive, bool p_isomorphic, Definiteness f2);

}  // namespace hodgesig
