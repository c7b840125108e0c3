#ifndef HUMBERT_KUMMER_HPP
#define HUMBERT_KUMMER_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "humbert/gcd.hpp"
#include "humbert/graphs.hpp"
#include "humbert/linalg.hpp"
#include "humbert/lines.hpp"
#include "humbert/normalize.hpp"

namespace humbert {

/// Monomials of degree d in x, y, z, descending.
inline std::vector<Monomial> plane_monomials(unsigned d) {
  std::vector<Monomial> out;
  for (unsigned i = d + 1; i-- > 0;)
    for (unsigned j = d - i + 1; j-- > 0;) {
      Monomial m;
      m.set(var::x, i);
      m.set(var::y, j);
      m.set(var::z, d - i - j);
      out.push_back(m);
    }
  return out;
}

/// Substitutes rational values into a point, rescaling all three coordinates
/// by the same factor so the point does not move.
inline ProjectivePoint specialize_point(const ProjectivePoint& p, const Assignment& spec) {
  ProjectivePoint out = p;
  for (const auto& [v, value] : spec) {
    long top = 0;
    for (const auto& c : out.coords) top = std::max(top, c.is_zero() ? 0L : degree_in(c, v));
    for (auto& c : out.coords) {
      if (c.is_zero()) continue;
      auto [q, factor] = substitute_rational(c, v, value);
      mpz_class den = mpq_class(value).get_den();
      mpz_class extra;
      mpz_pow_ui(extra.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(top - degree_in(c, v)));
      c = q * extra;
    }
  }
  return out;
}

/// Divides a plane curve by the gcd of its coefficients in the parameters
/// (same curve, smaller equation); leading coefficient made positive.
inline Polynomial primitive_in_plane(const Polynomial& f) {
  if (f.is_zero()) return f;
  std::map<Monomial, std::vector<Term>, std::greater<>> groups;
  for (const auto& t : f.terms()) {
    Monomial plane, rest = t.mono;
    for (VarId v : {var::x, var::y, var::z}) {
      plane.set(v, t.mono[v]);
      rest.set(v, 0);
    }
    groups[plane].push_back({rest, t.coeff});
  }
  Polynomial g;
  for (auto& [m, terms] : groups) {
    g = gcd(g, Polynomial::from_terms(terms));
    if (g == Polynomial(1)) break;
  }
  Polynomial r = g == Polynomial(1) ? f : *divide_exact(f, g);
  return r.leading().coeff < 0 ? -r : r;
}

/// Value of every degree-d monomial at p.
inline std::vector<Polynomial> monomial_row(unsigned d, const ProjectivePoint& p) {
  std::vector<std::vector<Polynomial>> pw(3);
  for (int c = 0; c < 3; ++c) {
    pw[c].push_back(Polynomial(1));
    for (unsigned e = 1; e <= d; ++e) pw[c].push_back(pw[c].back() * p.coords[c]);
  }
  std::vector<Polynomial> row;
  for (const auto& m : plane_monomials(d)) row.push_back(pw[0][m[var::x]] * pw[1][m[var::y]] * pw[2][m[var::z]]);
  return row;
}

/// The degree-d form through the given (d+1)(d+2)/2 - 1 points: the
/// interpolation determinant with the symbolic monomials as first row,
/// expanded along that row.
inline Polynomial interpolate_unique(unsigned d, const std::vector<ProjectivePoint>& points) {
  const auto monos = plane_monomials(d);
  const std::size_t n = monos.size();
  if (points.size() + 1 != n) throw DomainError("interpolate_unique needs (d+1)(d+2)/2 - 1 points");
  PolyMatrix values(n - 1, n);
  for (std::size_t r = 0; r < points.size(); ++r) {
    auto row = monomial_row(d, points[r]);
    for (std::size_t c = 0; c < n; ++c) values(r, c) = std::move(row[c]);
  }
  std::vector<Term> terms;
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0; r < n - 1; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r, k++) = values(r, cc);
    Polynomial m = determinant(minor);
    if (c % 2 == 1) m = -m;
    for (const auto& t : m.terms()) terms.push_back({t.mono * monos[c], t.coeff});
  }
  Polynomial f = Polynomial::from_terms(std::move(terms));
  if (f.is_zero()) throw DegenerateError("points impose dependent conditions on degree-" + std::to_string(d) + " curves");
  return f;
}

/// One generator of a linear system of plane curves.
struct FamilyMember {
  Polynomial form;
  std::string origin;          // "cover 1,2,4" or "aux"
  bool repeated_line = false;  // non-reduced product of lines
};

struct CurveFamily {
  unsigned degree = 0;
  std::vector<FamilyMember> basis;
  std::vector<VarId> parameters;  // t0, t1, ...

  /// f = sum t_i * basis_i.
  Polynomial general_member() const {
    Polynomial f;
    for (std::size_t i = 0; i < basis.size(); ++i) f += Polynomial::variable(parameters[i]) * basis[i].form;
    return f;
  }
};

/// Fixed integer values standing in for a generic choice of the free
/// branch points when testing linear independence.
inline Assignment generic_point() {
  return {{var::a1, Rational(37, 11)}, {var::a2, Rational(-53, 7)}, {var::a3, Rational(101, 13)},
          {var::a4, Rational(29, 17)}};
}

/// Rank of the basis coefficient vectors at the generic point.
inline std::size_t generic_rank(unsigned d, const std::vector<Polynomial>& forms) {
  const auto monos = plane_monomials(d);
  PolyMatrix m(forms.size(), monos.size());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    Polynomial f = specialize(forms[r], generic_point());
    for (const auto& t : f.terms())
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (t.mono == monos[c]) m(r, c) = Polynomial(t.coeff);
  }
  return rank(m);
}

inline Polynomial line_product(const std::vector<unsigned>& cover, const Assignment& spec = {}) {
  Polynomial f(1);
  for (unsigned i : cover) f *= line_form(i);
  return primitive_in_plane(specialize(f, spec));
}

inline std::vector<ProjectivePoint> configured_points(const ConfigGraph& g, const Assignment& spec = {}) {
  std::vector<ProjectivePoint> pts;
  for (auto [i, j] : g.edges) pts.push_back(specialize_point(point_q(i, j), spec));
  return pts;
}

/// Expected number of generators of degree-d curves through the k configured
/// points: (d+1)(d+2)/2 - k.
inline std::size_t family_size(unsigned d, std::size_t k) { return (d + 1) * (d + 2) / 2 - k; }

/// Generators that are products of lines along vertex covers. `preferred`
/// covers are tried first, then every other cover (reduced ones before
/// repeated ones); a cover is kept when it raises the rank. Throws DomainError
/// when fewer than `needed` independent covers exist (callers then fall back
/// to auxiliary points).
inline CurveFamily family_from_vertex_covers(unsigned d, const ConfigGraph& config,
                                             const std::vector<std::vector<unsigned>>& preferred = {},
                                             const Assignment& spec = {}, std::size_t needed = 0,
                                             bool allow_partial = false) {
  if (needed == 0) needed = family_size(d, config.edges.size());
  auto covers = vertex_covers(config, d);
  std::vector<std::vector<unsigned>> order;
  auto is_cover = [&](std::vector<unsigned> c) {
    std::sort(c.begin(), c.end());
    return std::find(covers.begin(), covers.end(), c) != covers.end();
  };
  for (const auto& c : preferred)
    if (is_cover(c)) order.push_back(c);
  auto repeated = [](const std::vector<unsigned>& c) {
    return std::adjacent_find(c.begin(), c.end()) != c.end();
  };
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& c : covers)
      if (repeated(c) == (pass == 1)) order.push_back(c);
  CurveFamily fam{d, {}, {}};
  std::vector<Polynomial> forms;
  std::vector<std::vector<unsigned>> tried;
  for (const auto& c : order) {
    if (fam.basis.size() == needed) break;
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::find(tried.begin(), tried.end(), sorted) != tried.end()) continue;
    tried.push_back(sorted);
    forms.push_back(line_product(c, spec));
    if (generic_rank(d, forms) < forms.size()) {
      forms.pop_back();
      continue;
    }
    std::string name;
    for (unsigned v : c) name += (name.empty() ? "" : ",") + std::to_string(v);
    fam.basis.push_back({forms.back(), "cover " + name, repeated(sorted)});
  }
  if (fam.basis.size() < needed && !allow_partial)
    throw DomainError("configuration has only " + std::to_string(fam.basis.size()) + " independent vertex covers, " +
                      std::to_string(needed) + " needed");
  for (std::size_t i = 0; i < fam.basis.size(); ++i) fam.parameters.push_back(var::t(static_cast<unsigned>(i)));
  return fam;
}

/// Deterministic source of small rational points off the six lines.
class AuxPointSampler {
public:
  explicit AuxPointSampler(std::uint64_t seed, const Assignment& spec = {}) : rng_(seed), spec_(spec) {}

  ProjectivePoint next() {
    for (;;) {
      mpq_class x(draw_num(), draw_den()), y(draw_num(), draw_den());
      x.canonicalize();
      y.canonicalize();
      mpz_class d = x.get_den() * y.get_den();
      ProjectivePoint p{{Polynomial(mpz_class(x.get_num() * y.get_den())),
                         Polynomial(mpz_class(y.get_num() * x.get_den())), Polynomial(d)}};
      if (off_lines(p)) return p;
    }
  }

private:
  long draw_num() { return static_cast<long>(rng_() % 101) - 50; }
  long draw_den() { return static_cast<long>(rng_() % 50) + 1; }

  // Rejects points on S: every l_i must be a nonzero polynomial at p, and
  // nonzero at the generic point as well so interpolation stays generic.
  bool off_lines(const ProjectivePoint& p) const {
    for (unsigned i = 1; i <= 6; ++i) {
      Polynomial v = specialize(eval_at(line_form(i), p), spec_);
      if (v.is_zero()) return false;
      if (specialize(v, generic_point()).is_zero()) return false;
    }
    return true;
  }

  std::mt19937_64 rng_;
  Assignment spec_;
};

/// `members` generators of degree-d curves, each interpolated through the
/// shared points plus its own seeded auxiliary points
/// ((d+1)(d+2)/2 - 1 - |points| of them). Members already present in `base`
/// are kept and only the missing ones are interpolated. Reseeds up to 8
/// times on linear dependence.
inline CurveFamily family_with_aux_points(unsigned d, const std::vector<ProjectivePoint>& points, std::size_t members,
                                          std::uint64_t seed, const Assignment& spec = {},
                                          const CurveFamily* base = nullptr) {
  const std::size_t n = (d + 1) * (d + 2) / 2;
  if (points.size() + 1 > n) throw DomainError("too many base points for the degree");
  const std::size_t aux_count = n - 1 - points.size();
  for (int attempt = 0; attempt <= 8; ++attempt) {
    AuxPointSampler sampler(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt), spec);
    CurveFamily fam{d, {}, {}};
    std::vector<Polynomial> forms;
    if (base)
      for (const auto& m : base->basis) {
        fam.basis.push_back(m);
        forms.push_back(m.form);
      }
    bool ok = true;
    while (fam.basis.size() < members) {
      auto pts = points;
      for (std::size_t a = 0; a < aux_count; ++a) pts.push_back(sampler.next());
      Polynomial f;
      try {
        f = primitive_in_plane(interpolate_unique(d, pts));
      } catch (const DegenerateError&) {
        ok = false;
        break;
      }
      forms.push_back(f);
      if (generic_rank(d, forms) < forms.size()) {
        ok = false;
        break;
      }
      fam.basis.push_back({f, "aux", false});
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < fam.basis.size(); ++i) fam.parameters.push_back(var::t(static_cast<unsigned>(i)));
    return fam;
  }
  throw DegenerateError("auxiliary-point family stayed dependent after 8 reseeds");
}

} // namespace humbert

#endif // HUMBERT_KUMMER_HPP
