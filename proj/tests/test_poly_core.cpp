#include <random>

#include <gtest/gtest.h>

#include "humbert/gcd.hpp"
#include "humbert/poly_io.hpp"

using namespace humbert;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int terms = 4, unsigned max_exp = 2) {
  const VarId vars[] = {var::x, var::y, var::a1, var::t(0)};
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (VarId v : vars) m.set(v, static_cast<unsigned>(rng() % (max_exp + 1)));
    out.push_back({m, mpz_class(static_cast<long>(rng() % 19) - 9)});
  }
  return Polynomial::from_terms(std::move(out));
}

} // namespace

TEST(PolyCore, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(PolyCore, CanonicalFormDropsZerosAndMergesTerms) {
  Monomial m;
  m.set(var::x, 2);
  Polynomial p = Polynomial::from_terms({{m, 3}, {m, -3}, {Monomial(), 0}});
  EXPECT_TRUE(p.is_zero());
  Polynomial q = Polynomial::from_terms({{m, 2}, {m, 5}});
  EXPECT_EQ(q.size(), 1u);
  EXPECT_EQ(q.leading().coeff, 7);
}

TEST(PolyCore, ParsePrintRoundTrip) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = random_poly(rng, 6, 3);
    EXPECT_EQ(parse_polynomial(to_string(p)), p);
  }
  EXPECT_EQ(to_string(parse_polynomial("0")), "0");
  EXPECT_THROW(parse_polynomial("x +* y"), ParseError);
  EXPECT_THROW(parse_polynomial("w^2"), ParseError);
}

TEST(PolyCore, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(rng, 5, 3);
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  }
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"c":"1","e":[1,2]}]})")),
               ParseError);
}

TEST(PolyCore, SubstitutionCommutesWithRingOperations) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng), q = random_poly(rng, 2, 1);
    EXPECT_EQ(substitute(a * b, var::x, q), substitute(a, var::x, q) * substitute(b, var::x, q));
    EXPECT_EQ(substitute(a + b, var::x, q), substitute(a, var::x, q) + substitute(b, var::x, q));
  }
}

TEST(PolyCore, RationalSubstitutionClearsDenominator) {
  Polynomial x = Polynomial::variable(var::x), y = Polynomial::variable(var::y);
  auto [p, factor] = substitute_rational(x * x + y, var::x, Rational(1, 3));
  EXPECT_EQ(factor, 9);
  EXPECT_EQ(p, Polynomial(1) + Polynomial(9) * y);
}

TEST(PolyCore, ExactDivision) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto q = divide_exact(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  Polynomial x = Polynomial::variable(var::x);
  EXPECT_FALSE(divide_exact(x * x + Polynomial(1), x).has_value());
}

TEST(PolyCore, GcdRecoversPlantedFactor) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    Polynomial g = random_poly(rng, 3, 2), a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial d = gcd(g * a, g * b);
    EXPECT_TRUE(divide_exact(d, primitive_part(g)).has_value() || divide_exact(d, -primitive_part(g)).has_value())
        << to_string(g) << " / " << to_string(d);
  }
  Polynomial x = Polynomial::variable(var::x), a1 = Polynomial::variable(var::a1);
  Polynomial d = gcd(x * x + a1 * x - Polynomial(2) * x - Polynomial(2) * a1, x * x - Polynomial(4));
  EXPECT_EQ(d, x - Polynomial(2));
}

TEST(PolyCore, ContentAndPrimitivePart) {
  Polynomial x = Polynomial::variable(var::x);
  Polynomial p = Polynomial(6) * x + Polynomial(-4);
  auto [c, prim] = content_and_primitive(p);
  EXPECT_EQ(c * prim, p);
  EXPECT_EQ(content(prim), 1);
}
