#include "hodgesig/norms.hpp"

#include <array>
#include <stdexcept>

namespace hodgesig {

namespace {

constexpr std::array<std::pair<ExtensionKind, std::string_view>, 5> kKindNames{{
    {ExtensionKind::split, "split"},
    {ExtensionKind::unramified, "unramified"},
    {ExtensionKind::tame_ramified, "tame_ramified"},
    {ExtensionKind::wild_Q2_sqrt_minus1, "wild_Q2_sqrt_minus1"},
    {ExtensionKind::wild_Q2_sqrt3, "wild_Q2_sqrt3"},
}};

void require_nonsplit(const LocalQuadExtension& ext) {
  if (ext.kind == ExtensionKind::split) {
    throw DomainError("Q_" + ext.p.get_str() + "(sqrt " + to_string(ext.d) +
                      ") is split; every nonzero element is a norm");
  }
}

}  // namespace

std::string_view to_string(ExtensionKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

ExtensionKind parse_extension_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw DomainError("unknown extension kind '" + std::string(name) + "'");
}

LocalQuadExtension classify_extension(const Rational& d, const Integer& p) {
  if (d == 0) throw DomainError("classify_extension: d must be nonzero");
  Place place = Place::finite(p);
  SquareClass cls = square_class(d, place);
  ExtensionKind kind;
  if (cls.is_trivial()) {
    kind = ExtensionKind::split;
  } else if (p == 2) {
    const Rational& r = cls.representative;
    if (r == 5) kind = ExtensionKind::unramified;
    else if (r == -1) kind = ExtensionKind::wild_Q2_sqrt_minus1;
    else if (r == -5) kind = ExtensionKind::wild_Q2_sqrt3;  // 3 = -5 mod squares
    else kind = ExtensionKind::tame_ramified;
  } else {
    kind = val_p(d, p) % 2 == 0 ? ExtensionKind::unramified : ExtensionKind::tame_ramified;
  }
  return {p, d, kind};
}

LocalQuadExtension extension_of_kind(ExtensionKind kind, const Integer& p) {
  Place::finite(p);
  const bool two = p == 2;
  switch (kind) {
    case ExtensionKind::split:
      return classify_extension(1, p);
    case ExtensionKind::unramified:
      return classify_extension(two ? Integer(5) : least_nonresidue(p), p);
    case ExtensionKind::tame_ramified:
      return classify_extension(p, p);
    case ExtensionKind::wild_Q2_sqrt_minus1:
    case ExtensionKind::wild_Q2_sqrt3:
      if (!two) throw DomainError(std::string(to_string(kind)) + " exists only over Q_2");
      return classify_extension(kind == ExtensionKind::wild_Q2_sqrt3 ? 3 : -1, p);
  }
  throw std::logic_error("unhandled extension kind");
}

bool is_norm(const Rational& x, const LocalQuadExtension& ext) {
  if (x == 0) throw DomainError("is_norm: x must be nonzero");
  require_nonsplit(ext);
  return hilbert(x, ext.d, Place::finite(ext.p)) == 1;
}

NormClassRule norm_class_rule(const LocalQuadExtension& ext) {
  require_nonsplit(ext);
  Rational base;
  switch (ext.kind) {
    case ExtensionKind::unramified:
      base = Rational(1, ext.p);
      base.canonicalize();
      break;
    case ExtensionKind::tame_ramified:
      base = ext.p == 2 ? Integer(5) : least_nonresidue(ext.p);
      break;
    default:
      base = -9;
      break;
  }
  if (is_norm(base, ext)) {
    throw std::logic_error("norm class " + to_string(base) + " is a norm from Q_" +
                           ext.p.get_str() + "(sqrt " + to_string(ext.d) + ")");
  }
  return {ext.kind, base};
}

Rational period_norm_class(int i, const LocalQuadExtension& ext) {
  if (i < 1) throw DomainError("period_norm_class: i must be positive");
  return rpow(norm_class_rule(ext).base_class, i);
}

bool decide_p_isomorphic(int i, const std::optional<LocalQuadExtension>& ext) {
  if (i < 0) throw DomainError("Hodge gap must be nonnegative");
  if (i == 0) return true;
  if (!ext) throw DomainError("a positive Hodge gap needs a quadratic extension of Q_p");
  return is_norm(period_norm_class(i, *ext), *ext);
}

}  // namespace hodgesig
