#include <random>

#include <gtest/gtest.h>

#include "humbert/linalg.hpp"
#include "humbert/poly_io.hpp"

using namespace humbert;

namespace {

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n, unsigned max_exp) {
  PolyMatrix m(n, n);
  const VarId vars[] = {var::a1, var::a2};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Term> terms;
      for (int k = 0; k < 2; ++k) {
        Monomial mono;
        for (VarId v : vars) mono.set(v, static_cast<unsigned>(rng() % (max_exp + 1)));
        terms.push_back({mono, mpz_class(static_cast<long>(rng() % 11) - 5)});
      }
      m(r, c) = Polynomial::from_terms(std::move(terms));
    }
  return m;
}

} // namespace

TEST(ExactLinalg, StrategiesAgree) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 8; ++trial) {
      PolyMatrix m = random_matrix(rng, n, 2);
      Polynomial ref = determinant(m, DetStrategy::cofactor);
      EXPECT_EQ(determinant(m, DetStrategy::bareiss), ref) << "n=" << n;
      EXPECT_EQ(determinant(m, DetStrategy::modular), ref) << "n=" << n;
    }
}

TEST(ExactLinalg, DeterminantBasics) {
  Polynomial a = Polynomial::variable(var::a1), b = Polynomial::variable(var::a2);
  PolyMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = b;
  m(1, 1) = a;
  EXPECT_EQ(determinant(m), a * a - b * b);
  PolyMatrix singular(2, 2);
  singular(0, 0) = a;
  singular(0, 1) = b;
  singular(1, 0) = Polynomial(2) * a;
  singular(1, 1) = Polynomial(2) * b;
  EXPECT_TRUE(determinant(singular).is_zero());
  EXPECT_THROW(determinant(PolyMatrix(2, 3)), DomainError);
}

TEST(ExactLinalg, RankAndNullspace) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    PolyMatrix m(3, 5);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 5; ++c)
        m(r, c) = Polynomial(static_cast<long>(rng() % 9) - 4) + Polynomial::variable(var::a1) *
                                                                     Polynomial(static_cast<long>(rng() % 5));
    for (std::size_t c = 0; c < 5; ++c) m(2, c) = m(0, c) + Polynomial::variable(var::a2) * m(1, c);
    std::size_t rk = rank(m);
    auto basis = nullspace_over_fraction_field(m);
    EXPECT_EQ(rk + basis.size(), 5u);
    for (const auto& v : basis)
      for (std::size_t r = 0; r < 3; ++r) {
        Polynomial dot;
        for (std::size_t c = 0; c < 5; ++c) dot += m(r, c) * v[c];
        EXPECT_TRUE(dot.is_zero());
      }
  }
}

TEST(ExactLinalg, BudgetIsEnforced) {
  PolyMatrix m(8, 8);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      m(r, c) = pow(Polynomial::variable(var::a1) + Polynomial::variable(var::a2) + Polynomial::variable(var::a3) +
                        Polynomial(static_cast<long>(r * 8 + c)),
                    40);
  setenv("HUMBERT_MEM_BUDGET_MB", "1", 1);
  EXPECT_THROW(determinant(m, DetStrategy::modular), BudgetError);
  unsetenv("HUMBERT_MEM_BUDGET_MB");
}
