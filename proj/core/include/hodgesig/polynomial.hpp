#pragma once

// Dense univariate polynomials over Z and Q, coefficients in ascending order.

#include "hodgesig/rational.hpp"

#include <vector>

namespace hodgesig {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

namespace poly {

/// Degree after trimming; -1 for the zero polynomial.
int degree(const RatPoly& f);
int degree(const IntPoly& f);
void trim(RatPoly& f);
void trim(IntPoly& f);

RatPoly to_rational(const IntPoly& f);
/// Throws DomainError if some coefficient is not an integer.
IntPoly to_integer(const RatPoly& f);

Rational evaluate(const RatPoly& f, const Rational& x);
Integer evaluate(const IntPoly& f, const Integer& x);

RatPoly derivative(const RatPoly& f);
RatPoly add(const RatPoly& f, const RatPoly& g);
RatPoly sub(const RatPoly& f, const RatPoly& g);
RatPoly mul(const RatPoly& f, const RatPoly& g);
IntPoly mul(const IntPoly& f, const IntPoly& g);
RatPoly scale(const RatPoly& f, const Rational& c);
RatPoly monic(const RatPoly& f);

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};
DivMod divmod(const RatPoly& f, const RatPoly& g);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& f, const RatPoly& g);

struct SquarefreeFactor {
  RatPoly factor;  // monic, squarefree, pairwise coprime
  int multiplicity;
};
/// Yun's algorithm: f = lc * prod factor^multiplicity; constant factors omitted.
std::vector<SquarefreeFactor> squarefree_decomposition(const RatPoly& f);

/// Power sums s_1..s_count of the roots of the monic polynomial f (Newton's identities).
std::vector<Integer> power_sums(const IntPoly& monic_f, int count);

/// The monic polynomial of degree n with root power sums s_1..s_n.
/// Throws DomainError if the result is not integral.
IntPoly from_power_sums(const std::vector<Integer>& sums, int n);

/// Multiplicity of x = root as a root of f (f nonzero).
int root_multiplicity(const IntPoly& f, const Integer& root);

/// A real number a + b*sqrt(r) with r a nonnegative integer.
struct Surd {
  Rational a;
  Rational b;
  Integer radicand;
};
int sign(const Surd& s);
/// f(s) evaluated exactly in Q(sqrt r).
Surd evaluate(const RatPoly& f, const Surd& s);

/// Sturm sequence f, f', -rem(f, f'), ... (f squarefree for the usual count).
std::vector<RatPoly> sturm_chain(const RatPoly& f);

/// Number of distinct real roots in (lo, hi) of the squarefree polynomial
/// heading the chain. lo < hi, and neither endpoint may be a root.
int count_real_roots(const std::vector<RatPoly>& chain, const Surd& lo, const Surd& hi);

}  // namespace poly
}  // namespace hodgesig
