#include "hodgesig/signature.hpp"

namespace hodgesig {

void validate(const MotiveDescriptor& m) {
  if (m.hodge_gap < 0) throw DomainError("Hodge gap must be nonnegative");
  Place::finite(m.p);
  if (m.hodge_gap >= 1 && !m.extension) {
    throw DomainError("Hodge gap " + std::to_string(m.hodge_gap) +
                      " needs the quadratic extension of Q_p");
  }
  if (m.extension) {
    if (m.extension->p != m.p) {
      throw DomainError("extension is over Q_" + m.extension->p.get_str() + ", motive is at p = " +
                        m.p.get_str());
    }
    if (m.hodge_gap >= 1 && m.extension->kind == ExtensionKind::split) {
      throw DomainError("a positive Hodge gap needs a nonsplit extension of Q_p");
    }
  }
  Definiteness expected = m.hodge_gap % 2 == 0 ? Definiteness::positive : Definiteness::negative;
  if (definiteness(m.q_B) != expected) {
    throw DomainError("q_B must be " + std::string(to_string(expected)) + " definite for Hodge gap " +
                      std::to_string(m.hodge_gap) + ", got " +
                      std::string(to_string(definiteness(m.q_B))));
  }
}

Definiteness predict_definiteness(const MotiveDescriptor& m) {
  validate(m);
  bool iso = decide_p_isomorphic(m.hodge_gap, m.extension);
  // q_B and q_Z agree at every l != p, so their discriminants agree in Q*/Q*^2.
  bool disc_positive = m.q_B.determinant() > 0;
  return infer_definiteness(disc_positive, iso, definiteness(m.q_B));
}

ConsistencyReport verify_qZ_when_known(const MotiveDescriptor& m,
                                       const std::vector<Integer>& witness_primes) {
  if (!m.q_Z) throw DomainError("verify_qZ_when_known needs q_Z");
  ConsistencyReport report;
  report.predicted = predict_definiteness(m);
  report.observed = definiteness(*m.q_Z);
  if (report.predicted != report.observed) {
    report.issues.push_back("q_Z is " + std::string(to_string(report.observed)) + ", predicted " +
                            std::string(to_string(report.predicted)));
  }
  Place at_p = Place::finite(m.p);
  report.p_isomorphic_expected = decide_p_isomorphic(m.hodge_gap, m.extension);
  report.p_isomorphic_observed = locally_isomorphic(m.q_B, *m.q_Z, at_p);
  if (report.p_isomorphic_expected != report.p_isomorphic_observed) {
    report.issues.push_back(std::string("q_B and q_Z are ") +
                            (report.p_isomorphic_observed ? "" : "not ") + "isomorphic over Q_" +
                            m.p.get_str() + ", expected the opposite");
  }
  for (const Integer& l : witness_primes) {
    if (l == m.p) continue;
    if (!locally_isomorphic(m.q_B, *m.q_Z, Place::finite(l))) {
      report.witness_failures.push_back(l);
      report.issues.push_back("q_B and q_Z differ over Q_" + l.get_str());
    }
  }
  return report;
}

FourfoldReport fourfold_signature_report(const WeilPolynomial& P, const PrecisionLadder& ladder,
                                         int extension_depth) {
  if (P.degree() != 8) {
    throw DomainError("degree must be 8 for a fourfold report, got " + std::to_string(P.degree()));
  }
  FourfoldReport report;
  report.rho1 = tate_class_count(P, 1, ladder);
  report.rho2_tate = tate_class_count(P, 2, ladder);
  report.exotic = exotic_subsets(P, extension_depth, ladder);
  report.structure = check_structure(report.exotic, P);
  // rho1 >= 1 always: the polarization is a Tate divisor class.
  report.predicted_signature = {static_cast<int>(report.rho2_tate - report.rho1 + 1),
                                static_cast<int>(report.rho1 - 1)};
  return report;
}

Rank2Verdict rank2_pathway(const IntPoly& charpoly, const Integer& q, int hodge_gap,
                           const Integer& p, int weight,
                           const std::optional<LocalQuadExtension>& extension) {
  if (poly::degree(charpoly) != 2 || charpoly[2] != 1) {
    throw DomainError("rank-2 pathway needs a monic degree-2 characteristic polynomial");
  }
  if (weight < 0) throw DomainError("weight must be nonnegative");
  Place::finite(p);
  const Integer& c1 = charpoly[1];
  const Integer& c0 = charpoly[0];
  const Integer qw = ipow(q, static_cast<unsigned long>(weight));
  const Integer disc = c1 * c1 - 4 * c0;

  Rank2Verdict verdict;
  if (disc < 0) {
    if (c0 != qw) throw DomainError("complex roots do not have modulus q^(w/2)");
  } else if (is_perfect_square(disc)) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    Integer twice_r1 = -c1 + s;
    Integer twice_r2 = -c1 - s;
    if (twice_r1 * twice_r1 != 4 * qw || twice_r2 * twice_r2 != 4 * qw) {
      throw DomainError("rational roots do not have absolute value q^(w/2)");
    }
    verdict.rational_roots = true;
  } else if (!(c1 == 0 && c0 == -qw)) {
    throw DomainError("real roots do not have absolute value q^(w/2)");
  }

  if (!verdict.rational_roots) {
    verdict.explanation = "irrational Frobenius eigenvalues: no algebraic classes, nothing to check";
    return verdict;
  }
  MotiveDescriptor m;
  m.hodge_gap = hodge_gap;
  m.p = p;
  if (hodge_gap >= 1) {
    m.extension = extension ? *extension : extension_of_kind(ExtensionKind::unramified, p);
  }
  Rational sign = hodge_gap % 2 == 0 ? 1 : -1;
  m.q_B = BinaryForm::diagonal(sign, sign);
  verdict.definiteness = predict_definiteness(m);
  verdict.explanation = "rational Frobenius eigenvalues: the piece is spanned by algebraic classes; "
                        "intersection form is " + std::string(to_string(*verdict.definiteness)) +
                        " definite";
  return verdict;
}

Rational honda_tate_invariant(const Rational& v_alpha, const Rational& v_q, long local_degree) {
  if (v_q <= 0) throw DomainError("v_q must be positive");
  if (local_degree < 1) throw DomainError("local degree must be positive");
  Rational x = v_alpha / v_q;
  if (x < 0 || x > 1) throw DomainError("v_alpha / v_q must lie in [0, 1]");
  x *= local_degree;
  Integer whole;
  mpz_fdiv_q(whole.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - whole;
}

}  // namespace hodgesig
