#include "hodgesig/quadform.hpp"

namespace hodgesig {

BinaryForm::BinaryForm(Rational g11, Rational g12, Rational g22)
    : g11_(std::move(g11)), g12_(std::move(g12)), g22_(std::move(g22)) {
  if (determinant() == 0) throw DomainError("BinaryForm: degenerate Gram matrix");
}

BinaryForm BinaryForm::transformed(const Rational& b11, const Rational& b12, const Rational& b21,
                                   const Rational& b22) const {
  // Columns (b11, b21) and (b12, b22).
  auto bilinear = [&](const Rational& x1, const Rational& y1, const Rational& x2,
                      const Rational& y2) -> Rational {
    return g11_ * x1 * x2 + g12_ * (x1 * y2 + y1 * x2) + g22_ * y1 * y2;
  };
  return BinaryForm(bilinear(b11, b21, b11, b21), bilinear(b11, b21, b12, b22),
                    bilinear(b12, b22, b12, b22));
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::negative: return "negative";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::unknown: return "unknown";
  }
  return "unknown";
}

Diagonalization diagonalize(const BinaryForm& f) {
  Rational det = f.determinant();
  Rational d1;
  if (f.g11() != 0) {
    d1 = f.g11();
  } else if (f.g22() != 0) {
    d1 = f.g22();
  } else {
    // Hyperbolic antidiagonal form; q(1, 1) = 2 g12 is nonzero.
    d1 = 2 * f.g12();
  }
  return {d1, det / d1};
}

int epsilon_place(const BinaryForm& f, const Place& place) {
  auto [d1, d2] = diagonalize(f);
  return hilbert(d1, d2, place);
}

SquareClass discriminant_class(const BinaryForm& f, const Place& place) {
  return square_class(f.determinant(), place);
}

LocalInvariantRecord local_invariants(const BinaryForm& f, const Place& place) {
  return {place, epsilon_place(f, place), discriminant_class(f, place)};
}

SignaturePair real_signature(const BinaryForm& f) {
  Rational det = f.determinant();
  if (det < 0) return {1, 1};
  return diagonalize(f).d1 > 0 ? SignaturePair{2, 0} : SignaturePair{0, 2};
}

Definiteness definiteness(const BinaryForm& f) {
  SignaturePair s = real_signature(f);
  if (s.s_plus == 2) return Definiteness::positive;
  if (s.s_minus == 2) return Definiteness::negative;
  return Definiteness::indefinite;
}

bool locally_isomorphic(const BinaryForm& f1, const BinaryForm& f2, const Place& place) {
  if (place.is_real()) return real_signature(f1) == real_signature(f2);
  return discriminant_class(f1, place) == discriminant_class(f2, place) &&
         epsilon_place(f1, place) == epsilon_place(f2, place);
}

bool product_formula_check(const BinaryForm& f) {
  auto [d1, d2] = diagonalize(f);
  int product = 1;
  for (const Place& v : hilbert_support({d1, d2})) product *= hilbert(d1, d2, v);
  return product == 1;
}

Definiteness infer_definiteness(bool f1_disc_positive, bool p_isomorphic, Definiteness f2) {
  if (!f1_disc_positive) return Definiteness::indefinite;
  if (f2 != Definiteness::positive && f2 != Definiteness::negative) return Definiteness::unknown;
  bool f2_positive = f2 == Definiteness::positive;
  return (p_isomorphic == f2_positive) ? Definiteness::positive : Definiteness::negative;
}

}  // namespace hodgesig
