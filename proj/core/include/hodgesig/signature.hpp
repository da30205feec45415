#pragma once

// Verdicts on the intersection form of a rank-2 motive, the signature report
// for abelian fourfolds, the rank-2 pathway and Honda-Tate local invariants.

#include "hodgesig/norms.hpp"
#include "hodgesig/quadform.hpp"
#include "hodgesig/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodgesig {

/// A rank-2 motive with Hodge type (i, -i) + (-i, i) at a prime p. q_B is the
/// polarization form on the Betti realization, q_Z the intersection form on
/// algebraic classes when it is known.
struct MotiveDescriptor {
  int hodge_gap = 0;
  Integer p = 2;
  std::optional<LocalQuadExtension> extension;  // required iff hodge_gap >= 1
  BinaryForm q_B = BinaryForm::diagonal(1, 1);
  std::optional<BinaryForm> q_Z;
};

/// Throws DomainError unless p is prime, the extension is present (over the
/// same p) exactly when hodge_gap >= 1, and q_B is definite of sign (-1)^i.
void validate(const MotiveDescriptor& m);

/// Definiteness of q_Z inferred from q_B and the p-adic comparison alone.
Definiteness predict_definiteness(const MotiveDescriptor& m);

struct ConsistencyReport {
  Definiteness predicted = Definiteness::unknown;
  Definiteness observed = Definiteness::unknown;
  bool p_isomorphic_expected = false;
  bool p_isomorphic_observed = false;
  std::vector<Integer> witness_failures;  // primes l != p where q_B, q_Z differ
  std::vector<std::string> issues;

  bool consistent() const { return issues.empty(); }
};

/// Checks a known q_Z against the prediction, the p-adic verdict and
/// isomorphy with q_B at each witness prime. Mismatches are reported.
ConsistencyReport verify_qZ_when_known(const MotiveDescriptor& m,
                                       const std::vector<Integer>& witness_primes);

struct ConditionalityFlags {
  bool rho1_conditional = false;  // divisor classes: Tate is known
  bool rho2_conditional = true;   // codimension 2 relies on Tate
  bool signature_conditional = true;
};

struct FourfoldReport {
  long rho1 = 0;
  long rho2_tate = 0;
  SubsetSearch exotic;
  StructureReport structure;
  SignaturePair predicted_signature;
  ConditionalityFlags flags;

  int exotic_count() const { return static_cast<int>(exotic.subsets.size()); }
};

/// rho1, rho2 and exotic data of a degree-8 Weil polynomial, with predicted
/// signature (rho2 - rho1 + 1; rho1 - 1) of the codimension-2 intersection form.
FourfoldReport fourfold_signature_report(const WeilPolynomial& P, const PrecisionLadder& ladder = {},
                                         int extension_depth = kDefaultExtensionDepth);

struct Rank2Verdict {
  bool rational_roots = false;
  std::optional<Definiteness> definiteness;  // set when the classes are algebraic
  std::string explanation;
};

/// Rank-2 piece with Frobenius characteristic polynomial x^2 + c1 x + c0 whose
/// roots have modulus q^(weight/2). Irrational roots leave no algebraic
/// classes; rational roots span the piece by algebraic classes and the form
/// is decided with predict_definiteness. Without an explicit extension a
/// positive gap uses the unramified extension of Q_p.
Rank2Verdict rank2_pathway(const IntPoly& charpoly, const Integer& q, int hodge_gap,
                           const Integer& p, int weight = 4,
                           const std::optional<LocalQuadExtension>& extension = std::nullopt);

/// (v_alpha / v_q) * local_degree mod 1, in [0, 1).
Rational honda_tate_invariant(const Rational& v_alpha, const Rational& v_q, long local_degree);

}  // namespace hodgesig
