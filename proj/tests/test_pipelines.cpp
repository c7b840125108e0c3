#include <gtest/gtest.h>

#include "humbert/poly_io.hpp"
#include "humbert/serialize.hpp"
#include "humbert/verify.hpp"

using namespace humbert;

namespace {

bool same_up_to_sign(const Polynomial& a, const Polynomial& b) {
  Polynomial pa = primitive_part(a), pb = primitive_part(b);
  return pa == pb || pa == -pb;
}

const Assignment kA2A3{{var::a2, Rational(2)}, {var::a3, Rational(5)}};

PipelineOptions specialized() {
  PipelineOptions o;
  o.specialization = kA2A3;
  return o;
}

} // namespace

TEST(Pipelines, Delta5IsHumbertsPolynomial) {
  ModularEquation m = compute_51();
  EXPECT_EQ(m.delta, 5);
  EXPECT_EQ(m.config, "(5,1)");
  EXPECT_EQ(content(m.equation), 1);
  Polynomial h = humbert_delta5_polynomial();
  auto q = divide_exact(m.equation, h);
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(q->is_constant());
}

TEST(Pipelines, Delta5VanishesWhereHumbertDoesModP) {
  SuiteReport r = verify_delta5(200, 3);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
}

TEST(Pipelines, Case42TangencyDiscriminantsAreQuadratic) {
  ModularEquation m = compute_42();
  EXPECT_EQ(m.delta, 8);
  ASSERT_EQ(m.homogeneity.tangency.size(), 2u);
  for (const auto& [line, d] : m.homogeneity.tangency) EXPECT_EQ(d, std::optional<unsigned>(2));
  EXPECT_FALSE(m.equation.is_zero());
}

TEST(Pipelines, Case42CoverSwapKeepsEquation) {
  EXPECT_TRUE(same_up_to_sign(compute_42().equation, compute_42({}, true).equation));
}

TEST(Pipelines, Case33TangencyDiscriminantsAreQuadratic) {
  ModularEquation m = compute_33();
  EXPECT_EQ(m.delta, 9);
  ASSERT_EQ(m.homogeneity.tangency.size(), 3u);
  for (const auto& [line, d] : m.homogeneity.tangency) EXPECT_EQ(d, std::optional<unsigned>(2));
}

TEST(Pipelines, SpecializationCommutesForConics) {
  for (int which = 0; which < 2; ++which) {
    auto run = [&](const PipelineOptions& o) { return which == 0 ? compute_51(o) : compute_42(o); };
    PipelineOptions o;
    o.specialization = {{var::a3, Rational(5)}};
    Polynomial first = run(o).equation;
    NormalizationLog log;
    Polynomial later = finalize_equation(specialize(run({}).equation, o.specialization), o.specialization, log);
    EXPECT_TRUE(same_up_to_sign(first, later)) << which;
  }
}

TEST(Pipelines, SpecializationRejectsDegenerateValues) {
  PipelineOptions o;
  o.specialization = {{var::a3, Rational(1)}};
  EXPECT_THROW(compute_51(o), DomainError);
  o.specialization = {{var::a2, Rational(5)}, {var::a3, Rational(5)}};
  EXPECT_THROW(compute_51(o), DomainError);
  o.specialization = {{var::a4, Rational(5)}};
  EXPECT_THROW(compute_51(o), DomainError);
}

TEST(Pipelines, CubicPolicyNeedsSpecialization) {
  EXPECT_THROW(compute_90b(), DomainError);
}

TEST(Pipelines, Case90bSpecializedIsUnivariate) {
  ModularEquation m = compute_90b(specialized());
  EXPECT_EQ(m.delta, 8);
  EXPECT_FALSE(m.equation.is_zero());
  EXPECT_EQ(content(m.equation), 1);
  VarSet only_a1 = var_set({var::a1});
  EXPECT_EQ(m.equation.variables() & ~only_a1, VarSet());
  EXPECT_GT(degree_in(m.equation, var::a1), 0);
}

TEST(Pipelines, Case90aIsDegenerate) {
  EXPECT_THROW(compute_90a(specialized()), DegenerateError);
  try {
    compute_by_label("9,0a", specialized());
    FAIL() << "no degeneracy error";
  } catch (const DegenerateError& e) {
    EXPECT_NE(std::string(e.what()).find("Cayley-Bacharach"), std::string::npos);
  }
}

TEST(Pipelines, Case81DualSeedStable) {
  PipelineOptions o = specialized();
  ModularEquation a = compute_81(o);
  o.seed = 2;
  ModularEquation b = compute_81(o);
  EXPECT_EQ(a.delta, 9);
  EXPECT_EQ(a.homogeneity.family_discriminant, std::optional<unsigned>(12));
  for (const auto& [line, d] : a.homogeneity.tangency) EXPECT_EQ(d, std::optional<unsigned>(4));
  EXPECT_TRUE(same_up_to_sign(a.equation, b.equation));
  EXPECT_EQ(a.family.front(), "cover 5,2,3");
}

TEST(Pipelines, Case72bDegeneratesAtFirstLevel) {
  EXPECT_THROW(compute_72('b', specialized()), DegenerateError);
  EXPECT_THROW(compute_72('c', specialized()), DomainError);
}

TEST(Pipelines, GenericDispatch) {
  EXPECT_EQ(compute_by_label("(9,0)b", specialized()).equation, compute_90b(specialized()).equation);
  EXPECT_THROW(compute_by_label("6,0a"), DomainError);
  EXPECT_THROW(compute_by_label("(2,1)"), DomainError);
  EXPECT_THROW(compute_generic_cubic("(2,7)", make_graph(3, {{1, 2}, {3, 4}}, {1, 2, 3, 4, 5, 5, 6}), {}),
               DomainError);
}

TEST(Pipelines, PencilThroughEightPointsHasTwelveSingularMembers) {
  SuiteReport r = verify_pencil12(5, 11);
  EXPECT_TRUE(r.pass) << r.to_json().dump();
}

TEST(Pipelines, LineTriplePencilIsNotIdenticallySingular) {
  Assignment at{{var::a1, Rational(3)}, {var::a2, Rational(-2)}, {var::a3, Rational(7, 3)}};
  Polynomial f1 = line_product({1, 3, 5}, at), f2 = line_product({2, 4, 6}, at);
  Polynomial d = cubic_discriminant_salmon(f1 + Polynomial::variable(var::t(0)) * f2);
  ASSERT_FALSE(d.is_zero());
  // t = 0 is the triangle l1 l3 l5 with three nodes.
  auto cs = coefficients_in(d, var::t(0));
  EXPECT_TRUE(cs[0].is_zero() && cs[1].is_zero() && cs[2].is_zero());
  EXPECT_FALSE(cs[3].is_zero());
}

TEST(Pipelines, SingularPencilRaises) {
  Polynomial x = Polynomial::variable(var::x), y = Polynomial::variable(var::y), z = Polynomial::variable(var::z);
  // Both cubics singular at [0:0:1]: every member is.
  EXPECT_THROW(count_singular_in_pencil(x * x * z - y * y * y, y * y * z + x * x * x), DegenerateError);
}

TEST(Pipelines, JsonAndTextOutput) {
  ModularEquation m = compute_42();
  auto j = to_json(m);
  EXPECT_EQ(j["delta"], 8);
  ModularEquation back = modular_equation_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.equation, m.equation);
  EXPECT_EQ(back.normalization_log, m.normalization_log);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  std::string text = to_text(m);
  auto pos = text.find("equation: ");
  ASSERT_NE(pos, std::string::npos);
  std::string eq = text.substr(pos + 10);
  eq.pop_back();
  EXPECT_EQ(parse_polynomial(eq), m.equation);
}
