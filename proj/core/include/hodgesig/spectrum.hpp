#pragma once

// Subset products of Frobenius eigenvalues: Tate-class counts, special and
// exotic subsets, and the structural checks on exotic subsets.
//
// Every equality "product = q^w" is certified twice: the product's ball
// enclosure must contain q^w, and the number of index subsets whose enclosure
// matches must equal the multiplicity of q^w as a root of the exact integer
// polynomial whose roots are all k-subset products. If the two disagree the
// whole pass restarts at twice the precision.

#include "hodgesig/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodgesig {

/// Multiset of root values: counts[id] copies of value id of a RootSystem.
using ValueMultiset = std::vector<int>;

/// Monic integer polynomial of degree C(2g, k) whose roots are the products
/// of all k-element index subsets of the roots of P.
IntPoly exterior_power_polynomial(const WeilPolynomial& P, int k);

/// Number of 2n-element index subsets of the 2g roots with product q^n.
long tate_class_count(const WeilPolynomial& P, int codim, const PrecisionLadder& ladder = {});

struct ProductCertificate {
  Integer target;             // q^w
  Ball enclosure;             // enclosure of the subset product
  long exact_index_count = 0; // multiplicity of q^w in the exterior-power polynomial
  unsigned precision_bits = 0;
};

struct CertifiedSubset {
  ValueMultiset values;
  ProductCertificate certificate;
  // Exotic subsets only: least n at which the n-th powers contain a conjugate
  // pair; empty if none up to the search depth.
  std::optional<int> breaks_at_power;

  bool stable() const { return !breaks_at_power; }
};

/// Subsets with certified product together with the root system their value
/// ids refer to.
struct SubsetSearch {
  RootSystem roots;
  std::vector<CertifiedSubset> subsets;
};

/// All size-k value multisets with product q^w that never contain both a
/// value and its conjugate q/value.
SubsetSearch special_subsets(const WeilPolynomial& P, int size, int power,
                             const PrecisionLadder& ladder = {});

inline constexpr int kDefaultExtensionDepth = 12;

/// Exotic subsets of a degree-8 P: special_subsets(P, 4, 2). Each one is
/// tested over the base extensions of degree 2..depth and marked with the
/// first degree at which its powers contain a conjugate pair. Subsets that
/// never break are the ones that stay exotic once every algebraic class is
/// defined over the base field.
SubsetSearch exotic_subsets(const WeilPolynomial& P, int extension_depth = kDefaultExtensionDepth,
                            const PrecisionLadder& ladder = {});

/// The multiset of conjugate values.
ValueMultiset conjugate(const ValueMultiset& subset, const RootSystem& roots);

/// Size of the multiset intersection.
int intersection_size(const ValueMultiset& a, const ValueMultiset& b);

struct StructureReport {
  int count = 0;                     // all exotic subsets
  int stable_count = 0;              // the ones the checks below apply to
  bool count_in_range = true;        // 0, 2 or 4
  bool conjugation_free = true;      // closed under conjugation, no fixed point
  bool no_pair_meets_in_two = true;
  std::optional<bool> four_case_ok;  // set only when count == 4
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks the structure of the stable exotic subsets: count in {0, 2, 4};
/// conjugation acts without fixed points; no two subsets share exactly two
/// values; with four subsets, they are I, conj I, J, conj J with |I & J| = 3
/// and q is an eigenvalue after quadratic base extension.
StructureReport check_structure(const SubsetSearch& exotic, const WeilPolynomial& P);

}  // namespace hodgesig
