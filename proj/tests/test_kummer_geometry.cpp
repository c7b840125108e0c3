#include <gtest/gtest.h>

#include "humbert/kummer.hpp"
#include "humbert/pipelines.hpp"
#include "humbert/graphs.hpp"
#include "humbert/poly_io.hpp"

using namespace humbert;

TEST(KummerGeometry, LineForms) {
  EXPECT_EQ(to_string(line_form(1)), to_string(parse_polynomial("y + 2*a1*x + a1^2*z")));
  EXPECT_EQ(line_form(4), parse_polynomial("y + 2*x + z"));
  EXPECT_EQ(line_form(5), Polynomial::variable(var::y));
  EXPECT_EQ(line_form(6), Polynomial::variable(var::z));
  EXPECT_THROW(line_form(7), DomainError);
}

TEST(KummerGeometry, IncidenceOfAllFifteenPoints) {
  auto [lines, points] = lines_and_points();
  for (const auto& [ij, q] : points) {
    for (const auto& l : lines) {
      bool on = l.index == ij.first || l.index == ij.second;
      Polynomial v = eval_at(l.form, q);
      if (on) {
        EXPECT_TRUE(v.is_zero()) << "q" << ij.first << ij.second << " on l" << l.index;
      } else {
        // Off the line for generic branch points.
        EXPECT_FALSE(specialize(v, generic_point()).is_zero()) << "q" << ij.first << ij.second << " l" << l.index;
      }
    }
  }
}

TEST(KummerGeometry, PointQi4UsesCorrectedCoordinates) {
  // q_i4 = [-(a_i + 1) : 2 a_i : 2]
  ProjectivePoint q = point_q(2, 4);
  EXPECT_EQ(q.coords[0], -(Polynomial::variable(var::a2) + Polynomial(1)));
  EXPECT_EQ(q.coords[1], Polynomial(2) * Polynomial::variable(var::a2));
  EXPECT_EQ(q.coords[2], Polynomial(2));
}

TEST(KummerGeometry, SymbolicA4Incidence) {
  for (unsigned i = 1; i <= 3; ++i) {
    ProjectivePoint q = point_q(i, 4, true);
    EXPECT_TRUE(eval_at(line_form(i, true), q).is_zero());
    EXPECT_TRUE(eval_at(line_form(4, true), q).is_zero());
  }
}

TEST(KummerGeometry, InterpolatedConicThroughFivePoints) {
  std::vector<ProjectivePoint> pts{point_q(1, 2), point_q(2, 3), point_q(3, 5), point_q(4, 5), point_q(1, 4)};
  Polynomial c = primitive_in_plane(interpolate_unique(2, pts));
  EXPECT_EQ(is_homogeneous(c, plane_vars()), std::optional<unsigned>(2));
  for (const auto& p : pts) EXPECT_TRUE(eval_at(c, p).is_zero());
}

TEST(KummerGeometry, BipartiteNinePointsAreDependent) {
  ConfigGraph g = paper_representatives().at("(9,0)a");
  EXPECT_THROW(interpolate_unique(3, configured_points(g)), DegenerateError);
  ConfigGraph b = paper_representatives().at("(9,0)b");
  Assignment spec{{var::a2, Rational(2)}, {var::a3, Rational(5)}};
  auto pts = configured_points(b, spec);
  Polynomial f = interpolate_unique(3, pts);
  for (const auto& p : pts) EXPECT_TRUE(specialize(eval_at(f, p), spec).is_zero());
}

TEST(KummerGeometry, CoverFamiliesPassThroughConfiguredPoints) {
  for (const char* label : {"(6,3)", "(5,4)", "(3,6)"}) {
    const ConfigGraph& g = paper_representatives().at(label);
    CurveFamily fam = family_from_vertex_covers(3, g, {}, {}, family_size(3, g.edges.size()));
    EXPECT_EQ(fam.basis.size(), family_size(3, g.edges.size())) << label;
    for (const auto& m : fam.basis)
      for (const auto& q : configured_points(g)) EXPECT_TRUE(eval_at(m.form, q).is_zero()) << label << m.origin;
  }
}

TEST(KummerGeometry, Case45CoversFallShortByOne) {
  const ConfigGraph& g = paper_representatives().at("(4,5)");
  EXPECT_THROW(family_from_vertex_covers(3, g), DomainError);
  CurveFamily fam = family_from_vertex_covers(3, g, {}, {}, 0, true);
  EXPECT_EQ(fam.basis.size() + 1, family_size(3, g.edges.size()));
  Assignment spec{{var::a2, Rational(2)}, {var::a3, Rational(5)}};
  CurveFamily full = cubic_family("(4,5)", g, spec, 0);
  ASSERT_EQ(full.basis.size(), family_size(3, g.edges.size()));
  for (const auto& m : full.basis)
    for (const auto& q : configured_points(g, spec)) EXPECT_TRUE(specialize(eval_at(m.form, q), spec).is_zero());
}

TEST(KummerGeometry, AuxFamiliesPassThroughConfiguredPoints) {
  Assignment spec{{var::a2, Rational(2)}, {var::a3, Rational(5)}};
  const ConfigGraph& g = paper_representatives().at("(8,1)");
  auto pts = configured_points(g, spec);
  CurveFamily a = family_with_aux_points(3, pts, 2, 0, spec);
  CurveFamily b = family_with_aux_points(3, pts, 2, 0, spec);
  ASSERT_EQ(a.basis.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(a.basis[i].form, b.basis[i].form);  // seeded
  for (const auto& m : a.basis)
    for (const auto& q : pts) EXPECT_TRUE(specialize(eval_at(m.form, q), spec).is_zero());
  EXPECT_EQ(generic_rank(3, {a.basis[0].form, a.basis[1].form}), 2u);
}

TEST(KummerGeometry, FamilySizes) {
  EXPECT_EQ(family_size(3, 9), 1u);
  EXPECT_EQ(family_size(3, 6), 4u);
  EXPECT_EQ(family_size(2, 4), 2u);
}
