#ifndef HUMBERT_ELIMINATION_HPP
#define HUMBERT_ELIMINATION_HPP

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "humbert/gcd.hpp"
#include "humbert/lines.hpp"
#include "humbert/linalg.hpp"
#include "humbert/normalize.hpp"

namespace humbert {

/// Sylvester matrix of p (formal degree m) and q (formal degree n) in v:
/// n rows of p's coefficients a_0..a_m, then m rows of q's, each row shifted
/// one column to the right.
inline PolyMatrix sylvester_matrix(const Polynomial& p, unsigned m, const Polynomial& q, unsigned n, VarId v) {
  auto pc = coefficients_in(p, v);
  auto qc = coefficients_in(q, v);
  if (pc.size() > m + 1 || qc.size() > n + 1) throw DomainError("formal degree below actual degree");
  pc.resize(m + 1);
  qc.resize(n + 1);
  PolyMatrix s(m + n, m + n);
  for (unsigned r = 0; r < n; ++r)
    for (unsigned i = 0; i <= m; ++i) s(r, r + i) = pc[i];
  for (unsigned r = 0; r < m; ++r)
    for (unsigned i = 0; i <= n; ++i) s(n + r, r + i) = qc[i];
  return s;
}

namespace detail {

// Classical resultant over F_p of two univariate polynomials with nonzero
// leading coefficients (ascending coefficient vectors, Montgomery form).
inline modular::u64 resultant_euclid(const modular::Field& f, std::vector<modular::u64> a,
                                     std::vector<modular::u64> b) {
  modular::u64 result = f.one();
  for (;;) {
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    const modular::u64 lcb = b.back();
    if (db == 0) return f.mul(result, f.pow(lcb, da));
    const modular::u64 inv = f.inv(lcb);
    for (std::size_t i = da + 1; i-- > db;) {
      if (a[i] == 0) continue;
      modular::u64 c = f.mul(a[i], inv);
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
    }
    std::size_t len = std::min(da + 1, db);
    while (len > 0 && a[len - 1] == 0) --len;
    if (len == 0) return 0;
    a.resize(len);
    const std::size_t dr = len - 1;
    if ((da * db) % 2 == 1) result = f.neg(result);
    result = f.mul(result, f.pow(lcb, da - dr));
    std::swap(a, b);
  }
}

} // namespace detail

/// Sylvester determinant of p, q (actual degrees m, n >= 1 in v) by
/// evaluation of the remaining variables modulo word-size primes. Each point
/// costs one Euclidean resultant over F_p; points where a leading
/// coefficient vanishes fall back to the numeric Sylvester determinant.
inline Polynomial resultant_modular(const Polynomial& p, const Polynomial& q, VarId v) {
  using modular::u64;
  const long m = degree_in(p, v), n = degree_in(q, v);
  if (m <= 0 || n <= 0) throw DomainError("resultant_modular needs positive degrees");
  auto pc = coefficients_in(p, v);
  auto qc = coefficients_in(q, v);
  auto plan = detail::plan_for_matrix(
      sylvester_matrix(p, static_cast<unsigned>(m), q, static_cast<unsigned>(n), v));
  std::vector<const Polynomial*> inputs;
  for (const auto& c : pc) inputs.push_back(&c);
  for (const auto& c : qc) inputs.push_back(&c);
  const std::size_t mm = static_cast<std::size_t>(m), nn = static_cast<std::size_t>(n), size = mm + nn;
  const bool flip = (mm * nn) % 2 == 1;  // ascending layout = (-1)^{mn} res(p, q)
  std::vector<u64> a(mm + 1), b(nn + 1), mat;
  return detail::evaluate_interpolate(plan, inputs, [&](const modular::Field& f, const std::vector<u64>& val) {
    std::copy(val.begin(), val.begin() + static_cast<long>(mm + 1), a.begin());
    std::copy(val.begin() + static_cast<long>(mm + 1), val.end(), b.begin());
    if (a.back() != 0 && b.back() != 0) {
      u64 r = detail::resultant_euclid(f, a, b);
      return flip ? f.neg(r) : r;
    }
    mat.assign(size * size, 0);
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t i = 0; i <= mm; ++i) mat[r * size + r + i] = a[i];
    for (std::size_t r = 0; r < mm; ++r)
      for (std::size_t i = 0; i <= nn; ++i) mat[(nn + r) * size + r + i] = b[i];
    return modular::determinant(f, mat, size);
  });
}

/// How sylvester_resultant evaluates the determinant.
enum class ResultantStrategy { automatic, determinant, modular };

/// Res_v(p, q) with the actual degrees; Res(c, q) = c^deg q.
inline Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, VarId v,
                                      ResultantStrategy strategy = ResultantStrategy::automatic) {
  long m = p.is_zero() ? 0 : degree_in(p, v);
  long n = q.is_zero() ? 0 : degree_in(q, v);
  if (m <= 0 && n <= 0) throw DomainError("resultant of two polynomials constant in " + std::string(var_name(v)));
  if (m <= 0) return pow(p, static_cast<unsigned>(n));
  if (n <= 0) return pow(q, static_cast<unsigned>(m));
  if (strategy == ResultantStrategy::automatic) {
    VarSet others = p.variables() | q.variables();
    others.reset(v.index());
    // Degree bound in w: n deg_w(p) + m deg_w(q).
    double grid = 1;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (!others.test(i)) continue;
      VarId w(static_cast<std::uint8_t>(i));
      grid *= static_cast<double>(n * std::max(0L, degree_in(p, w)) + m * std::max(0L, degree_in(q, w)) + 1);
    }
    strategy = (m + n >= 4 && others.any() && grid <= 2e7) ? ResultantStrategy::modular
                                                            : ResultantStrategy::determinant;
  }
  if (strategy == ResultantStrategy::modular) return resultant_modular(p, q, v);
  return determinant(sylvester_matrix(p, static_cast<unsigned>(m), q, static_cast<unsigned>(n), v));
}

/// Resultant of two binary forms in (v1, v2) of formal degrees m, n:
/// dehomogenize v2 := 1 and take the Sylvester determinant at formal degree.
inline Polynomial form_resultant(const Polynomial& p, unsigned m, const Polynomial& q, unsigned n, VarId v1,
                                 VarId v2) {
  if (m == 0 && n == 0) throw DomainError("resultant of two constant forms");
  Polynomial pd = substitute(p, v2, Polynomial(1));
  Polynomial qd = substitute(q, v2, Polynomial(1));
  if (m == 0) return pow(pd, n);
  if (n == 0) return pow(qd, m);
  return determinant(sylvester_matrix(pd, m, qd, n, v1));
}

/// disc(f) = Res_{d-1,d-1}(f_v1, f_v2) for f homogeneous of degree d >= 2 in
/// {v1, v2}.
inline Polynomial binary_discriminant(const Polynomial& f, VarId v1, VarId v2) {
  auto d = is_homogeneous(f, var_set({v1, v2}));
  if (!d || f.is_zero()) throw DomainError("binary_discriminant: input is not a nonzero binary form");
  if (*d < 2) throw DomainError("binary_discriminant: degree must be at least 2");
  return form_resultant(partial(f, v1), *d - 1, partial(f, v2), *d - 1, v1, v2);
}

/// Binary form obtained by restricting a plane curve to line l_i, together
/// with the two coordinates it is a form in. l_1..l_5 are solved for y,
/// l_6 (z = 0) for z.
struct Restriction {
  Polynomial form;
  VarId v1, v2;
};

inline Restriction restrict_to_line(const Polynomial& f, unsigned i) {
  if (i < 1 || i > 6) throw DomainError("line index out of range");
  if (i == 6) return {substitute(f, var::z, Polynomial()), var::x, var::y};
  Polynomial y_value = Polynomial::variable(var::y) - line_form(i);
  return {substitute(f, var::y, y_value), var::x, var::z};
}

/// Discriminant of f restricted to l_i: vanishes iff l_i is tangent to f.
inline Polynomial tangency_discriminant(const Polynomial& f, unsigned i) {
  auto r = restrict_to_line(f, i);
  auto d = is_homogeneous(f, plane_vars());
  if (!d) throw DomainError("tangency_discriminant: curve is not homogeneous");
  if (r.form.is_zero()) throw DegenerateError("curve contains line l" + std::to_string(i));
  return form_resultant(partial(r.form, r.v1), *d - 1, partial(r.form, r.v2), *d - 1, r.v1, r.v2);
}

/// Tangency discriminant with the contribution of known points of f on l_i
/// divided out: the restriction f|l_i is divided by the linear form of each
/// point before taking the discriminant. Full discriminant = residual times
/// the squared values of the residual form at those points (up to units).
/// `spec` is applied to the restriction; points must already be specialized.
inline Polynomial residual_tangency_discriminant(const Polynomial& f, unsigned i,
                                                 const std::vector<ProjectivePoint>& on_line,
                                                 const Assignment& spec = {}) {
  auto r = restrict_to_line(f, i);
  auto d = is_homogeneous(f, plane_vars());
  if (!d) throw DomainError("residual_tangency_discriminant: curve is not homogeneous");
  if (r.form.is_zero()) throw DegenerateError("curve contains line l" + std::to_string(i));
  Polynomial form = specialize(r.form, spec);
  unsigned degree = *d;
  for (const auto& q : on_line) {
    // Coordinates of q in the (v1, v2) chart of the restriction.
    const Polynomial& c1 = q.coords[0];
    const Polynomial& c2 = (i == 6) ? q.coords[1] : q.coords[2];
    Polynomial lin = c2 * Polynomial::variable(r.v1) - c1 * Polynomial::variable(r.v2);
    Polynomial g = gcd(c1, c2);
    if (!g.is_zero() && !g.is_constant()) lin = *divide_exact(lin, g);
    lin = primitive_part(lin);
    auto quotient = divide_exact(form, lin);
    if (!quotient) throw DomainError("point is not on the curve restricted to l" + std::to_string(i));
    form = std::move(*quotient);
    --degree;
  }
  if (degree < 2) throw DomainError("residual form has degree below 2");
  return form_resultant(partial(form, r.v1), degree - 1, partial(form, r.v2), degree - 1, r.v1, r.v2);
}

namespace detail {

inline void require_cubic(const Polynomial& f) {
  auto d = is_homogeneous(f, plane_vars());
  if (f.is_zero() || !d || *d != 3) throw DomainError("expected a nonzero ternary cubic form");
}

// Coefficients of a ternary quadric in the column order x^2, y^2, z^2, xy, xz, yz.
inline std::vector<Polynomial> quadric_row(const Polynomial& q) {
  static const Monomial cols[6] = {
      Monomial::of(var::x, 2), Monomial::of(var::y, 2), Monomial::of(var::z, 2),
      Monomial::of(var::x) * Monomial::of(var::y), Monomial::of(var::x) * Monomial::of(var::z),
      Monomial::of(var::y) * Monomial::of(var::z)};
  std::vector<std::vector<Term>> parts(6);
  for (const auto& t : q.terms()) {
    Monomial plane, rest = t.mono;
    for (VarId v : {var::x, var::y, var::z}) {
      plane.set(v, t.mono[v]);
      rest.set(v, 0);
    }
    for (int c = 0; c < 6; ++c)
      if (plane == cols[c]) parts[c].push_back({rest, t.coeff});
  }
  std::vector<Polynomial> row;
  for (auto& p : parts) row.push_back(Polynomial::from_terms(std::move(p)));
  return row;
}

} // namespace detail

/// Entries of the 6x6 Salmon matrix: rows f_x, f_y, f_z then F_x, F_y, F_z
/// where F is the Jacobian determinant of (f_x, f_y, f_z).
inline PolyMatrix salmon_matrix(const Polynomial& f) {
  detail::require_cubic(f);
  const VarId xyz[3] = {var::x, var::y, var::z};
  Polynomial g[3], h[3][3];
  for (int i = 0; i < 3; ++i) g[i] = partial(f, xyz[i]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = partial(g[i], xyz[j]);
  PolyMatrix hess(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) hess(i, j) = h[i][j];
  Polynomial F = determinant(hess, DetStrategy::cofactor);
  PolyMatrix m(6, 6);
  for (int i = 0; i < 3; ++i) {
    auto top = detail::quadric_row(g[i]);
    auto bottom = detail::quadric_row(partial(F, xyz[i]));
    for (int c = 0; c < 6; ++c) {
      m(i, c) = top[c];
      m(3 + i, c) = bottom[c];
    }
  }
  return m;
}

/// Res_{2,2,2}(f_x, f_y, f_z) via Salmon's 6x6 determinant.
inline Polynomial cubic_discriminant_salmon(const Polynomial& f, DetStrategy strategy = DetStrategy::automatic) {
  return determinant(salmon_matrix(f), strategy);
}

/// r1 = Res_x(f_x, f_y), r2 = Res_x(f_y, f_z), r3 = Res_y(r1, r2), z := 1.
/// A multiple of the Salmon discriminant.
inline Polynomial cubic_discriminant_iterated(const Polynomial& f) {
  detail::require_cubic(f);
  Polynomial fx = partial(f, var::x), fy = partial(f, var::y), fz = partial(f, var::z);
  Polynomial r1 = sylvester_resultant(fx, fy, var::x);
  Polynomial r2 = sylvester_resultant(fy, fz, var::x);
  Polynomial r3 = sylvester_resultant(r1, r2, var::y);
  return substitute(r3, var::z, Polynomial(1));
}

struct ChainOptions {
  /// Parameter set to 1 once all listed variables are gone.
  std::optional<VarId> dehomogenize;
  /// Apply the dehomogenization before the cascade (valid when every input
  /// is homogeneous in the eliminated variables plus `dehomogenize`).
  bool dehomogenize_early = false;
  /// Strip integer content at every level.
  bool strip_contents = true;
  /// At intermediate levels, also divide out the content with respect to
  /// the variables still to be eliminated (a polynomial in the remaining
  /// parameters). It only removes factors free of those variables.
  bool strip_parameter_content = true;
  /// Polynomials free of the current variable skip the level unchanged and
  /// only those involving it are paired (adjacently). Without this a
  /// constant-in-v neighbour turns its resultants into powers of itself,
  /// and two such powers vanish together at the next level.
  bool pass_through_constant = false;
};

/// gcd of the coefficients of p viewed as a polynomial in `vars`.
inline Polynomial content_in_vars(const Polynomial& p, const std::vector<VarId>& vars) {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    Monomial key, rest = t.mono;
    for (VarId v : vars) {
      key.set(v, t.mono[v]);
      rest.set(v, 0);
    }
    groups[key].push_back({rest, t.coeff});
  }
  std::vector<Polynomial> coeffs;
  for (auto& [key, ts] : groups) coeffs.push_back(Polynomial::from_terms(std::move(ts)));
  std::sort(coeffs.begin(), coeffs.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
  Polynomial g;
  for (const auto& c : coeffs) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

/// Cascade of pairwise Sylvester resultants: at level i the variable vars[i]
/// is eliminated from each adjacent pair of the current list.
inline Polynomial eliminate_chain(std::vector<Polynomial> polys, const std::vector<VarId>& vars,
                                  const ChainOptions& opts = {}, NormalizationLog* log = nullptr) {
  if (polys.size() != vars.size() + 1) throw DomainError("eliminate_chain: need |polys| = |vars| + 1");
  NormalizationLog scratch;
  NormalizationLog& out = log ? *log : scratch;
  if (opts.dehomogenize && opts.dehomogenize_early) {
    for (auto& p : polys) p = substitute(p, *opts.dehomogenize, Polynomial(1));
    out.push_back({"dehomogenize", "1", std::string(var_name(*opts.dehomogenize)), 0});
  }
  for (std::size_t level = 0; level < vars.size(); ++level) {
    const VarId v = vars[level];
    std::vector<Polynomial> paired, skipped;
    for (auto& p : polys) {
      if (opts.pass_through_constant && (p.is_zero() || degree_in(p, v) <= 0))
        skipped.push_back(std::move(p));
      else
        paired.push_back(std::move(p));
    }
    if (opts.pass_through_constant && paired.empty())
      throw DegenerateError("no polynomial involves " + std::string(var_name(v)) + " at level " + std::to_string(level),
                            static_cast<std::ptrdiff_t>(level));
    std::vector<Polynomial> next;
    for (std::size_t j = 0; j + 1 < paired.size(); ++j) {
      auto started = std::chrono::steady_clock::now();
      Polynomial r = sylvester_resultant(paired[j], paired[j + 1], v);
      if (std::getenv("HUMBERT_TRACE"))
        std::cerr << "[chain] level " << level << " pair " << j << ": " << r.size() << " terms, "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count() << " s\n";
      // An identically zero intermediate resultant kills the cascade; a zero
      // final resultant is a legitimate answer (common root).
      if (r.is_zero() && level + 1 < vars.size())
        throw DegenerateError("resultant in " + std::string(var_name(v)) + " vanishes identically at level " +
                                  std::to_string(level),
                              static_cast<std::ptrdiff_t>(level));
      if (opts.strip_contents && !r.is_zero()) r = strip_content(r, out);
      if (opts.strip_parameter_content && !r.is_zero() && level + 1 < vars.size()) {
        std::vector<VarId> later(vars.begin() + static_cast<long>(level) + 1, vars.end());
        if (opts.dehomogenize && !opts.dehomogenize_early) later.push_back(*opts.dehomogenize);
        Polynomial c = content_in_vars(r, later);
        if (!c.is_constant()) {
          r = *divide_exact(r, c);
          out.push_back({"parameter_content", "level " + std::to_string(level) + " pair " + std::to_string(j),
                         to_string(c), 1});
        }
      }
      next.push_back(std::move(r));
    }
    for (auto& p : skipped) next.push_back(std::move(p));
    polys = std::move(next);
  }
  Polynomial result = std::move(polys.front());
  if (opts.dehomogenize && !opts.dehomogenize_early) {
    result = substitute(result, *opts.dehomogenize, Polynomial(1));
    out.push_back({"dehomogenize", "1", std::string(var_name(*opts.dehomogenize)), 0});
  }
  return result;
}

} // namespace humbert


#endif // HUMBERT_ELIMINATION_HPP
