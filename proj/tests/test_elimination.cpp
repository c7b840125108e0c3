#include <random>

#include <gtest/gtest.h>

#include "humbert/elimination.hpp"
#include "humbert/kummer.hpp"
#include "humbert/poly_io.hpp"

using namespace humbert;

namespace {

const Polynomial X = Polynomial::variable(var::x);

Polynomial random_univariate(std::mt19937_64& rng, unsigned deg) {
  Polynomial p = Polynomial(static_cast<long>(rng() % 7) + 1) * pow(X, deg);
  for (unsigned i = 0; i < deg; ++i) p += Polynomial(static_cast<long>(rng() % 21) - 10) * pow(X, i);
  return p;
}

Polynomial linear_root(std::mt19937_64& rng) {
  // (den x - num) for a random rational root
  return Polynomial(static_cast<long>(rng() % 9) + 1) * X - Polynomial(static_cast<long>(rng() % 21) - 10);
}

} // namespace

TEST(Elimination, ChainExamples) {
  EXPECT_TRUE(eliminate_chain({X - Polynomial(1), X - Polynomial(1)}, {var::x}).is_zero());
  Polynomial a1 = Polynomial::variable(var::a1), a2 = Polynomial::variable(var::a2);
  Polynomial r = eliminate_chain({X - a1, X - a2}, {var::x});
  EXPECT_TRUE(r == a1 - a2 || r == a2 - a1) << to_string(r);
  EXPECT_THROW(eliminate_chain({X, X}, {var::x, var::y}), DomainError);
}

TEST(Elimination, StrategiesAgreeWithSign) {
  std::mt19937_64 rng(21);
  Polynomial a1 = Polynomial::variable(var::a1);
  for (int i = 0; i < 30; ++i) {
    unsigned m = 1 + rng() % 4, n = 1 + rng() % 4;
    Polynomial p = random_univariate(rng, m) + a1 * random_univariate(rng, m - 1);
    Polynomial q = random_univariate(rng, n) + a1 * a1 * random_univariate(rng, n - 1);
    EXPECT_EQ(sylvester_resultant(p, q, var::x, ResultantStrategy::modular),
              sylvester_resultant(p, q, var::x, ResultantStrategy::determinant));
  }
}

TEST(Elimination, PlantedCommonRootGivesZero) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    Polynomial root = linear_root(rng);
    Polynomial p = root * random_univariate(rng, 1 + rng() % 2);
    Polynomial q = root * random_univariate(rng, 1 + rng() % 2);
    ASSERT_TRUE(sylvester_resultant(p, q, var::x).is_zero());
  }
}

TEST(Elimination, DistinctRootsGiveNonzero) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    // p has roots 0..m-1 shifted by an even offset, q roots at odd points.
    Polynomial p(1), q(1);
    long shift = static_cast<long>(rng() % 10);
    for (long k = 0; k < 1 + static_cast<long>(rng() % 3); ++k) p *= X - Polynomial(2 * (k + shift));
    for (long k = 0; k < 1 + static_cast<long>(rng() % 3); ++k) q *= X - Polynomial(2 * (k + shift) + 1);
    ASSERT_FALSE(sylvester_resultant(p, q, var::x).is_zero());
  }
}

TEST(Elimination, Multiplicativity) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 30; ++i) {
    Polynomial p = random_univariate(rng, 2), q = random_univariate(rng, 2), r = random_univariate(rng, 3);
    EXPECT_EQ(sylvester_resultant(p * q, r, var::x),
              sylvester_resultant(p, r, var::x) * sylvester_resultant(q, r, var::x));
  }
}

TEST(Elimination, DegreeLawForBinaryForms) {
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = 1; n <= 3; ++n) {
      Polynomial p, q;
      VarSet pc, qc;
      unsigned k = 0;
      for (unsigned i = 0; i <= m; ++i, ++k) {
        p += Polynomial::variable(var::t(k)) * pow(X, i) * pow(Polynomial::variable(var::z), m - i);
        pc.set(var::t(k).index());
      }
      for (unsigned i = 0; i <= n; ++i, ++k) {
        q += Polynomial::variable(var::t(k)) * pow(X, i) * pow(Polynomial::variable(var::z), n - i);
        qc.set(var::t(k).index());
      }
      Polynomial r = form_resultant(p, m, q, n, var::x, var::z);
      ASSERT_FALSE(r.is_zero());
      EXPECT_EQ(is_homogeneous(r, pc), std::optional<unsigned>(n));
      EXPECT_EQ(is_homogeneous(r, qc), std::optional<unsigned>(m));
    }
}

TEST(Elimination, BinaryDiscriminantDetectsDoubleRoot) {
  std::mt19937_64 rng(25);
  Polynomial z = Polynomial::variable(var::z);
  for (int i = 0; i < 50; ++i) {
    long r = static_cast<long>(rng() % 11) - 5, s = r + 1 + static_cast<long>(rng() % 5);
    Polynomial lr = X - Polynomial(r) * z, ls = X - Polynomial(s) * z;
    EXPECT_TRUE(binary_discriminant(lr * lr * ls, var::x, var::z).is_zero());
    EXPECT_FALSE(binary_discriminant(lr * ls * (X - Polynomial(s + 1) * z), var::x, var::z).is_zero());
  }
}

TEST(Elimination, SalmonIsHomogeneousOfDegree12) {
  Polynomial f;
  VarSet cs;
  unsigned i = 0;
  for (const auto& m : plane_monomials(3)) {
    f += Polynomial::variable(var::t(i)) * Polynomial::monomial(m, 1);
    cs.set(var::t(i++).index());
  }
  Polynomial d = cubic_discriminant_salmon(f);
  EXPECT_EQ(is_homogeneous(d, cs), std::optional<unsigned>(12));
  EXPECT_EQ(d.size(), 2040u);
}

TEST(Elimination, SalmonDetectsNodeAndDividesIterated) {
  Polynomial y = Polynomial::variable(var::y), z = Polynomial::variable(var::z);
  Polynomial nodal = y * y * z - X * X * (X + z);
  EXPECT_TRUE(cubic_discriminant_salmon(nodal).is_zero());
  Polynomial fermat_like = X * X * X + Polynomial(2) * y * y * y + Polynomial(5) * z * z * z + X * y * z;
  Polynomial s = cubic_discriminant_salmon(fermat_like);
  ASSERT_FALSE(s.is_zero());
  Polynomial a1 = Polynomial::variable(var::a1);
  Polynomial f = X * X * X + y * y * y + z * z * z + a1 * X * y * z + Polynomial(3) * X * X * z;
  Polynomial ps = primitive_part(cubic_discriminant_salmon(f));
  Polynomial pi = primitive_part(cubic_discriminant_iterated(f));
  EXPECT_TRUE(divide_exact(pi, ps).has_value());
}

TEST(Elimination, TangencyDiscriminantOnLines) {
  // The conic y z - x^2 is tangent to l5 (y = 0) at [0:0:1] and to l6 at [0:1:0].
  Polynomial y = Polynomial::variable(var::y), z = Polynomial::variable(var::z);
  Polynomial c = y * z - X * X;
  EXPECT_TRUE(tangency_discriminant(c, 5).is_zero());
  EXPECT_TRUE(tangency_discriminant(c, 6).is_zero());
  EXPECT_FALSE(tangency_discriminant(y * z - X * X - y * y, 6).is_zero());
  EXPECT_THROW(tangency_discriminant(y * X, 5), DegenerateError);
}

TEST(Elimination, ResidualTangencyDividesFullDiscriminant) {
  // Net of cubics through q15; on l5 the full discriminant is the residual
  // one times the square of the residual form's value at q15.
  Assignment spec{{var::a1, Rational(3)}, {var::a2, Rational(-2)}, {var::a3, Rational(7)}};
  Polynomial y = Polynomial::variable(var::y), z = Polynomial::variable(var::z);
  Polynomial a1 = Polynomial::variable(var::a1);
  Polynomial through = (Polynomial(2) * X + a1 * z) * X * X + y * y * y;
  Polynomial fam = Polynomial::variable(var::t(0)) * line_product({1, 3, 4}) +
                   Polynomial::variable(var::t(1)) * line_product({1, 2, 6}) +
                   Polynomial::variable(var::t(2)) * through;
  std::vector<ProjectivePoint> pts{specialize_point(point_q(1, 5), spec)};
  Polynomial full = specialize(tangency_discriminant(fam, 5), spec);
  Polynomial res = residual_tangency_discriminant(fam, 5, pts, spec);
  ASSERT_FALSE(res.is_zero());
  EXPECT_EQ(total_degree(res), 2 * total_degree(Polynomial::variable(var::t(0))));
  EXPECT_TRUE(divide_exact(full, res).has_value());
}

TEST(Elimination, PassThroughSkipsConstantPolynomials) {
  Polynomial t1 = Polynomial::variable(var::t(1)), t2 = Polynomial::variable(var::t(2));
  Polynomial a1 = Polynomial::variable(var::a1);
  // The middle polynomial is free of t1. The adjacent cascade turns both
  // level-0 resultants into powers of it and the last level vanishes.
  std::vector<Polynomial> polys{t1 - t2, t2 - a1, t1 + Polynomial(1)};
  EXPECT_TRUE(eliminate_chain(polys, {var::t(1), var::t(2)}).is_zero());
  ChainOptions through;
  through.pass_through_constant = true;
  Polynomial r = eliminate_chain(polys, {var::t(1), var::t(2)}, through);
  EXPECT_TRUE(r == a1 + Polynomial(1) || r == -(a1 + Polynomial(1))) << to_string(r);
  // Nothing left that involves the variable: degenerate.
  EXPECT_THROW(eliminate_chain({t2 - a1, t2 + a1}, {var::t(1)}, through), DegenerateError);
}
