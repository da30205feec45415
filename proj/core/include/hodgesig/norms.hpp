#pragma once

// Quadratic extensions of Q_p, their norm groups, and the norm classes that
// decide whether the Betti and algebraic quadratic forms agree at p.

#include "hodgesig/arith.hpp"

#include <optional>
#include <string_view>

namespace hodgesig {

enum class ExtensionKind { split, unramified, tame_ramified, wild_Q2_sqrt_minus1, wild_Q2_sqrt3 };

std::string_view to_string(ExtensionKind kind);
/// Inverse of to_string; throws DomainError on an unknown name.
ExtensionKind parse_extension_kind(std::string_view name);

/// Q_p(sqrt d).
struct LocalQuadExtension {
  Integer p;
  Rational d;
  ExtensionKind kind = ExtensionKind::split;
};

/// Kind from the square class of d at p. d != 0, p prime.
LocalQuadExtension classify_extension(const Rational& d, const Integer& p);

/// A canonical d realising the kind at p: 1, the least nonresidue (5 at
/// p = 2), p, -1 or 3. Wild kinds need p = 2.
LocalQuadExtension extension_of_kind(ExtensionKind kind, const Integer& p);

/// x is a norm from Q_p(sqrt d) iff (x, d)_p = +1. Split extensions throw.
bool is_norm(const Rational& x, const LocalQuadExtension& ext);

/// Norm class of lambda * conj(lambda) for a unit Hodge gap.
struct NormClassRule {
  ExtensionKind kind;
  Rational base_class;
};

/// 1/p when unramified; a unit u with (u, d)_p = -1 when tamely ramified
/// (the least nonresidue for odd p, 5 = class of -3 for p = 2); -9 for both
/// wild extensions. Each constant is checked to be a non-norm before it is
/// returned.
NormClassRule norm_class_rule(const LocalQuadExtension& ext);

/// base_class^i, i >= 1.
Rational period_norm_class(int i, const LocalQuadExtension& ext);

/// Whether the two forms are isomorphic over Q_p: true for i = 0, otherwise
/// whether period_norm_class(i) is a norm from the extension.
bool decide_p_isomorphic(int i, const std::optional<LocalQuadExtension>& ext);

}  // namespace hodgesig
