#ifndef HUMBERT_LINES_HPP
#define HUMBERT_LINES_HPP

#include <array>
#include <map>
#include <utility>

#include "humbert/error.hpp"
#include "humbert/polynomial.hpp"

namespace humbert {

/// a_i as a polynomial; a4 is the constant 1 unless kept symbolic.
inline Polynomial branch_point(unsigned i, bool symbolic_a4 = false) {
  if (i == 4 && !symbolic_a4) return Polynomial(1);
  return Polynomial::variable(var::a(i));
}

/// l_i = y + 2 a_i x + a_i^2 z (i <= 4), l_5 = y, l_6 = z.
inline Polynomial line_form(unsigned i, bool symbolic_a4 = false) {
  const Polynomial x = Polynomial::variable(var::x), y = Polynomial::variable(var::y),
                   z = Polynomial::variable(var::z);
  if (i == 5) return y;
  if (i == 6) return z;
  if (i < 1 || i > 6) throw DomainError("line index must be in 1..6");
  Polynomial a = branch_point(i, symbolic_a4);
  return y + Polynomial(2) * a * x + a * a * z;
}

struct LineSpec {
  unsigned index;
  Polynomial form;
};

/// Point of the Kummer plane with polynomial coordinates.
struct ProjectivePoint {
  std::array<Polynomial, 3> coords;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// q_ij = l_i cap l_j, denominators cleared.
inline ProjectivePoint point_q(unsigned i, unsigned j, bool symbolic_a4 = false) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 6 || i == j) throw DomainError("q_ij needs 1 <= i < j <= 6");
  if (j <= 4) {
    Polynomial ai = branch_point(i, symbolic_a4), aj = branch_point(j, symbolic_a4);
    return {{-(ai + aj), Polynomial(2) * ai * aj, Polynomial(2)}};
  }
  if (j == 5 && i <= 4) return {{-branch_point(i, symbolic_a4), Polynomial(), Polynomial(2)}};
  if (j == 6 && i <= 4) return {{Polynomial(1), Polynomial(-2) * branch_point(i, symbolic_a4), Polynomial()}};
  return {{Polynomial(1), Polynomial(), Polynomial()}}; // q_56
}

/// f evaluated at a projective point (homogeneous substitution).
inline Polynomial eval_at(const Polynomial& f, const ProjectivePoint& p) {
  Polynomial r = substitute(f, var::x, p.coords[0]);
  r = substitute(r, var::y, p.coords[1]);
  return substitute(r, var::z, p.coords[2]);
}

inline std::pair<std::array<LineSpec, 6>, std::map<std::pair<unsigned, unsigned>, ProjectivePoint>>
lines_and_points(bool symbolic_a4 = false) {
  std::array<LineSpec, 6> lines;
  for (unsigned i = 1; i <= 6; ++i) lines[i - 1] = {i, line_form(i, symbolic_a4)};
  std::map<std::pair<unsigned, unsigned>, ProjectivePoint> points;
  for (unsigned i = 1; i <= 6; ++i)
    for (unsigned j = i + 1; j <= 6; ++j) points.emplace(std::pair{i, j}, point_q(i, j, symbolic_a4));
  return {std::move(lines), std::move(points)};
}

} // namespace humbert

#endif // HUMBERT_LINES_HPP
