#include "hodgesig/quadform.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hodgesig;

namespace {

BinaryForm random_form(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    long a = dist(rng), b = dist(rng), c = dist(rng);
    if (a * c - b * b != 0) return BinaryForm(a, b, c);
  }
}

// Places where forms built from these entries can have nontrivial invariants.
std::vector<Place> support(std::vector<Rational> values) {
  std::erase(values, Rational(0));
  return hilbert_support(values);
}

}  // namespace

TEST(BinaryForm, RejectsDegenerate) {
  EXPECT_THROW(BinaryForm(1, 1, 1), DomainError);
  EXPECT_THROW(BinaryForm::diagonal(0, 3), DomainError);
}

TEST(BinaryForm, Diagonalize) {
  Diagonalization d = diagonalize(BinaryForm(0, 1, 0));
  EXPECT_EQ(d.d1, 2);
  EXPECT_EQ(d.d2, Rational(-1, 2));
  d = diagonalize(BinaryForm(0, 1, 3));
  EXPECT_EQ(d.d1, 3);
  EXPECT_EQ(d.d2, Rational(-1, 3));
  d = diagonalize(BinaryForm(2, 1, 3));
  EXPECT_EQ(d.d1, 2);
  EXPECT_EQ(d.d2, Rational(5, 2));
}

TEST(BinaryForm, LocalInvariantsOfSampleForms) {
  BinaryForm f = BinaryForm::diagonal(-1, -1);
  EXPECT_EQ(epsilon_place(f, Place::finite(2)), -1);
  EXPECT_EQ(epsilon_place(f, Place::finite(3)), 1);
  EXPECT_EQ(epsilon_place(f, Place::real()), -1);
  EXPECT_EQ(epsilon_place(BinaryForm::diagonal(1, 1), Place::finite(2)), 1);
  EXPECT_EQ(real_signature(BinaryForm(1, 2, 1 - 5)), (SignaturePair{1, 1}));
  EXPECT_EQ(definiteness(BinaryForm::diagonal(-1, -3)), Definiteness::negative);
  EXPECT_EQ(definiteness(BinaryForm::diagonal(1, -3)), Definiteness::indefinite);
  EXPECT_TRUE(discriminant_class(BinaryForm::diagonal(2, 2), Place::finite(3)).is_trivial());
}

TEST(BinaryForm, IsomorphicEverywhereListed) {
  BinaryForm a = BinaryForm::diagonal(1, 1);
  BinaryForm b = BinaryForm::diagonal(2, 2);
  for (const Place& v : {Place::real(), Place::finite(2), Place::finite(3), Place::finite(5)}) {
    EXPECT_TRUE(locally_isomorphic(a, b, v)) << v.to_string();
  }
  EXPECT_FALSE(locally_isomorphic(a, BinaryForm::diagonal(3, 3), Place::finite(3)));
}

TEST(BinaryForm, InvariantUnderChangeOfBasis) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryForm f = random_form(rng, 12);
    long b11, b12, b21, b22;
    do {
      b11 = entry(rng); b12 = entry(rng); b21 = entry(rng); b22 = entry(rng);
    } while (b11 * b22 - b12 * b21 == 0);
    BinaryForm g = f.transformed(b11, b12, b21, b22);
    for (const Place& v : support({f.g11(), f.g22(), f.determinant(), g.g11(), g.g22(), g.determinant()})) {
      ASSERT_EQ(epsilon_place(f, v), epsilon_place(g, v));
      ASSERT_EQ(discriminant_class(f, v), discriminant_class(g, v));
      ASSERT_TRUE(locally_isomorphic(f, g, v)) << v.to_string();
    }
  }
}

TEST(BinaryForm, ProductFormula) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) ASSERT_TRUE(product_formula_check(random_form(rng, 30)));
}

TEST(BinaryForm, LocalIsomorphyMatchesRepresentedValues) {
  std::mt19937_64 rng(17);
  for (long p : {2, 3, 5}) {
    for (int trial = 0; trial < 60; ++trial) {
      BinaryForm f = random_form(rng, 10);
      BinaryForm g = random_form(rng, 10);
      ASSERT_EQ(locally_isomorphic(f, g, Place::finite(p)), oracle::locally_isomorphic(f, g, p))
          << p << ": [" << f.g11() << "," << f.g12() << "," << f.g22() << "] vs [" << g.g11() << ","
          << g.g12() << "," << g.g22() << "]";
    }
  }
}

TEST(InferDefiniteness, Cases) {
  EXPECT_EQ(infer_definiteness(true, true, Definiteness::positive), Definiteness::positive);
  EXPECT_EQ(infer_definiteness(true, false, Definiteness::negative), Definiteness::positive);
  EXPECT_EQ(infer_definiteness(true, true, Definiteness::negative), Definiteness::negative);
  EXPECT_EQ(infer_definiteness(false, true, Definiteness::positive), Definiteness::indefinite);
  EXPECT_EQ(infer_definiteness(true, true, Definiteness::indefinite), Definiteness::unknown);
}

// f1 is built from f2 so that they agree at every prime except p; the
// inferred definiteness must equal the real signature of f1.
TEST(InferDefiniteness, AgreesWithDirectComputation) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> small(1, 9);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    BinaryForm f2 = random_form(rng, 9);
    if (definiteness(f2) == Definiteness::indefinite) continue;
    for (long p : {3, 5, 7}) {
      // Scaled copies of f2; keep those that pass the finite-support check
      // away from p.
      for (Rational c : {Rational(small(rng) * small(rng) * small(rng)), Rational(-1), Rational(p), Rational(-p)}) {
        BinaryForm f1(f2.g11() * c, f2.g12() * c, f2.g22() * c);
        bool away = true;
        std::vector<Rational> vals{f1.g11(), f1.g12(), f1.g22(), f1.determinant(),
                                   f2.g11(), f2.g12(), f2.g22(), f2.determinant()};
        for (const Place& v : support(vals)) {
          if (v.is_finite() && v.prime() != p) away = away && locally_isomorphic(f1, f2, v);
        }
        if (!away) continue;
        bool iso_p = locally_isomorphic(f1, f2, Place::finite(p));
        EXPECT_EQ(infer_definiteness(f1.determinant() > 0, iso_p, definiteness(f2)), definiteness(f1));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}
