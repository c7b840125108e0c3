#ifndef HUMBERT_PIPELINES_HPP
#define HUMBERT_PIPELINES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "humbert/elimination.hpp"
#include "humbert/gcd.hpp"
#include "humbert/graphs.hpp"
#include "humbert/kummer.hpp"
#include "humbert/normalize.hpp"

namespace humbert {

struct PipelineOptions {
  Assignment specialization;
  std::uint64_t seed = 0;
  /// Allow cubic configurations with no specialized branch point.
  bool full_symbolic = false;
  /// Recompute aux-point families with a second seed and keep the gcd.
  bool dual_seed = true;
  /// Set t0 := 1 before the elimination cascade rather than after.
  bool dehomogenize_early = true;
  /// Cross-check the Salmon discriminant against the iterated one (k = 9).
  bool cross_check = true;
  /// Cubic cases: eliminate with the tangency discriminant of the residual
  /// form (configured point on the looped line divided out). The full
  /// degree-4 discriminant carries the square of a linear factor that only
  /// encodes tangency at that configured point.
  bool residual_tangency = true;
  /// Let polynomials free of the variable being eliminated skip a level
  /// (see ChainOptions). On for cubic families built from line products.
  bool pass_through_constant = true;
};

/// Degrees observed in the parameters t for the discriminant of the family
/// and for each tangency discriminant (nullopt = not homogeneous).
struct HomogeneityReport {
  std::optional<unsigned> family_discriminant;
  std::vector<std::pair<unsigned, std::optional<unsigned>>> tangency;  // (line, degree)
};

struct ModularEquation {
  std::string config;
  unsigned degree = 0;
  int delta = 0;
  Polynomial equation;
  Assignment specialization;
  NormalizationLog normalization_log;
  std::vector<std::string> family;  // origin of each generator
  std::optional<std::uint64_t> seed;
  HomogeneityReport homogeneity;
};

/// Rejects assignments outside the curve model (a_i not in {0, 1, infinity},
/// pairwise distinct) and variables other than a1, a2, a3.
inline void validate_specialization(const Assignment& spec) {
  std::vector<Rational> values;
  for (const auto& [v, value] : spec) {
    if (v != var::a1 && v != var::a2 && v != var::a3)
      throw DomainError("only a1, a2, a3 may be specialized (a4 = 1 is fixed), got " + std::string(var_name(v)));
    if (value == 0 || value == 1)
      throw DomainError("invalid specialization " + std::string(var_name(v)) + " = " + value.get_str() +
                        ": the branch points must satisfy a_i not in {0, 1, infinity}");
    for (const auto& w : values)
      if (w == value)
        throw DomainError("invalid specialization: branch points must be pairwise distinct (a_i != a_j)");
    values.push_back(value);
  }
}

/// Degenerate factors that collapse to a_i - r once a_j := r.
inline std::vector<Polynomial> specialized_degenerate_factors(const Assignment& spec) {
  std::vector<Polynomial> out;
  for (unsigned i = 1; i <= 3; ++i) {
    if (spec.count(var::a(i))) continue;
    for (const auto& [v, value] : spec) {
      Rational r = value;
      r.canonicalize();
      out.push_back(Polynomial(mpz_class(r.get_den())) * Polynomial::variable(var::a(i)) -
                    Polynomial(mpz_class(r.get_num())));
    }
  }
  return out;
}

/// Content stripping and removal of known degenerate factors. A zero input
/// is a degenerate configuration, never an equation.
inline Polynomial finalize_equation(const Polynomial& raw, const Assignment& spec, NormalizationLog& log) {
  if (raw.is_zero()) throw DegenerateError("elimination result vanishes identically");
  Polynomial p = strip_content(raw, log);
  p = remove_degenerate_factors(std::move(p), log, specialized_degenerate_factors(spec));
  return p;
}

/// Humbert's Delta = 5 polynomial, LHS - RHS of his displayed identity.
inline Polynomial humbert_delta5_polynomial() {
  const Polynomial a1 = Polynomial::variable(var::a1), a2 = Polynomial::variable(var::a2),
                   a3 = Polynomial::variable(var::a3), one(1);
  Polynomial u = a1 * a1 * a3 - a2 * a2 + a3 * a3 * (one - a1) + a2 - a3;
  Polynomial v = a1 * a1 * a2 * a3 - a1 * a2 * a2 * a3;
  Polynomial w = a1 * a1 * a3 * (a2 + one) - a2 * a2 * (a1 + a3) + a2 * a3 * a3 * (one - a1) + a1 * (a2 - a3);
  return Polynomial(4) * u * v - w * w;
}

namespace detail {

inline std::optional<unsigned> degree_in_params(const Polynomial& p, const std::vector<VarId>& ts) {
  VarSet s;
  for (VarId t : ts) s.set(t.index());
  return is_homogeneous(p, s);
}

inline bool fully_specialized(const Assignment& spec) {
  return spec.count(var::a2) && spec.count(var::a3) && !spec.count(var::a1);
}

inline void require_cubic_policy(const PipelineOptions& opts) {
  if (!opts.full_symbolic && opts.specialization.empty())
    throw DomainError("cubic configurations need at least one branch point fixed (e.g. --set a3=5) "
                      "or an explicit --full-symbolic run");
}

// Elimination of the family parameters from the discriminant list, t0 := 1.
inline Polynomial eliminate_parameters(const std::vector<Polynomial>& polys, const CurveFamily& fam,
                                       const PipelineOptions& opts, NormalizationLog& log) {
  if (polys.size() == 1) {
    Polynomial p = substitute(polys[0], fam.parameters[0], Polynomial(1));
    log.push_back({"dehomogenize", "1", std::string(var_name(fam.parameters[0])), 0});
    return p;
  }
  std::vector<VarId> vars(fam.parameters.begin() + 1, fam.parameters.end());
  ChainOptions chain;
  chain.dehomogenize = fam.parameters[0];
  chain.dehomogenize_early = opts.dehomogenize_early;
  chain.pass_through_constant = opts.pass_through_constant;
  return eliminate_chain(polys, vars, chain, &log);
}

} // namespace detail

/// Conic configurations (k = 3, 4, 5). For k = 5 the conic is unique; for
/// smaller k the system is spanned by vertex-cover products of two lines.
inline ModularEquation compute_conic(const std::string& label, const ConfigGraph& g,
                                     const std::vector<std::vector<unsigned>>& preferred,
                                     const PipelineOptions& opts = {}) {
  validate_specialization(opts.specialization);
  const auto& spec = opts.specialization;
  const std::size_t k = g.edges.size();
  if (k < 3 || k > 5 || g.degree != 2) throw DomainError("conic pipeline needs a (k, 6-k) graph with 3 <= k <= 5");
  ModularEquation out;
  out.config = label;
  out.degree = 2;
  out.delta = delta_of(2, static_cast<int>(k));
  out.specialization = spec;
  Polynomial raw;
  if (k == 5) {
    Polynomial conic = primitive_in_plane(interpolate_unique(2, configured_points(g, spec)));
    out.family.push_back("interpolated through 5 points");
    raw = specialize(tangency_discriminant(conic, g.loops.at(0)), spec);
  } else {
    CurveFamily fam = family_from_vertex_covers(2, g, preferred, spec);
    for (const auto& m : fam.basis) out.family.push_back(m.origin);
    Polynomial f = fam.general_member();
    std::vector<Polynomial> polys;
    for (unsigned line : g.loops) {
      Polynomial t = specialize(tangency_discriminant(f, line), spec);
      out.homogeneity.tangency.emplace_back(line, detail::degree_in_params(t, fam.parameters));
      polys.push_back(std::move(t));
    }
    raw = detail::eliminate_parameters(polys, fam, opts, out.normalization_log);
  }
  out.equation = finalize_equation(raw, spec, out.normalization_log);
  return out;
}

/// Labeling of the (5,1) pentagon used by compute_51: q12, q23, q35, q54, q41
/// with l6 tangent.
inline ConfigGraph graph_51() { return make_graph(2, {{1, 2}, {2, 3}, {3, 5}, {4, 5}, {1, 4}}, {6}); }

inline ModularEquation compute_51(const PipelineOptions& opts = {}) {
  return compute_conic("(5,1)", graph_51(), {}, opts);
}

inline ModularEquation compute_42(const PipelineOptions& opts = {}, bool swap_covers = false) {
  std::vector<std::vector<unsigned>> covers = {{1, 3}, {2, 4}};
  if (swap_covers) std::swap(covers[0], covers[1]);
  return compute_conic("(4,2)", paper_representatives().at("(4,2)"), covers, opts);
}

inline ModularEquation compute_33(const PipelineOptions& opts = {}) {
  return compute_conic("(3,3)", paper_representatives().at("(3,3)"), {{1, 2}, {2, 3}, {1, 3}}, opts);
}

/// Vertex covers the worked cubic cases name explicitly.
inline std::vector<std::vector<unsigned>> preferred_covers(const std::string& label) {
  if (label == "(7,2)a") return {{1, 4, 2}, {1, 4, 3}, {6, 5, 3}};
  if (label == "(8,1)") return {{5, 2, 3}};
  return {};
}

/// Family for a cubic configuration with k < 9: vertex covers first, the
/// remaining generators interpolated through auxiliary points.
inline CurveFamily cubic_family(const std::string& label, const ConfigGraph& g, const Assignment& spec,
                                std::uint64_t seed) {
  const std::size_t needed = family_size(3, g.edges.size());
  CurveFamily covers = family_from_vertex_covers(3, g, preferred_covers(label), spec, needed, true);
  if (covers.basis.size() == needed) return covers;
  return family_with_aux_points(3, configured_points(g, spec), needed, seed, spec, &covers);
}

struct CubicRun {
  Polynomial raw;
  NormalizationLog log;
  std::vector<std::string> family;
  HomogeneityReport homogeneity;
  bool used_aux = false;
};

namespace detail {

inline CubicRun run_cubic(const std::string& label, const ConfigGraph& g, const PipelineOptions& opts,
                          std::uint64_t seed) {
  const auto& spec = opts.specialization;
  CubicRun run;
  if (g.edges.size() == 9) {
    Polynomial f = primitive_in_plane(interpolate_unique(3, configured_points(g, spec)));
    run.family.push_back("interpolated through 9 points");
    require_cubic_policy(opts);
    Polynomial d = cubic_discriminant_salmon(f);
    if (d.is_zero()) throw DegenerateError("discriminant of the interpolated cubic vanishes identically");
    if (opts.cross_check && fully_specialized(spec)) {
      Polynomial it = cubic_discriminant_iterated(f);
      if (it.is_zero() || !divide_exact(primitive_part(it), primitive_part(d)))
        throw Error("internal: Salmon discriminant does not divide the iterated discriminant");
    }
    run.raw = std::move(d);
    return run;
  }
  CurveFamily fam = cubic_family(label, g, spec, seed);
  for (const auto& m : fam.basis) {
    run.family.push_back(m.origin);
    run.used_aux |= m.origin == "aux";
  }
  require_cubic_policy(opts);
  Polynomial f = fam.general_member();
  Polynomial d = cubic_discriminant_salmon(f);
  run.homogeneity.family_discriminant = degree_in_params(d, fam.parameters);
  std::vector<Polynomial> polys{std::move(d)};
  for (unsigned line : g.loops) {
    Polynomial t = specialize(tangency_discriminant(f, line), spec);
    run.homogeneity.tangency.emplace_back(line, degree_in_params(t, fam.parameters));
    if (opts.residual_tangency) {
      std::vector<ProjectivePoint> on_line;
      for (const auto& [i, j] : g.edges)
        if (i == line || j == line) on_line.push_back(specialize_point(point_q(i, j), spec));
      t = residual_tangency_discriminant(f, line, on_line, spec);
    }
    polys.push_back(std::move(t));
  }
  run.raw = eliminate_parameters(polys, fam, opts, run.log);
  return run;
}

} // namespace detail

/// Any cubic configuration (3 <= k <= 9): family of curves through the k
/// points, discriminant of the family, one tangency discriminant per loop,
/// cascaded elimination of t1..tm, t0 := 1. Aux-point families are run
/// with two seeds and the gcd of the two equations is kept.
inline ModularEquation compute_generic_cubic(const std::string& label, const ConfigGraph& g,
                                             const PipelineOptions& opts = {}) {
  validate_specialization(opts.specialization);
  const int k = static_cast<int>(g.edges.size());
  if (g.degree != 3 || !is_regular(g)) throw DomainError("expected a 3-regular configuration graph");
  ModularEquation out;
  out.config = label;
  out.degree = 3;
  out.delta = delta_of(3, k);
  out.specialization = opts.specialization;
  CubicRun first = detail::run_cubic(label, g, opts, opts.seed);
  out.family = first.family;
  out.homogeneity = first.homogeneity;
  out.normalization_log = first.log;
  Polynomial eq = finalize_equation(first.raw, opts.specialization, out.normalization_log);
  if (first.used_aux) {
    out.seed = opts.seed;
    if (opts.dual_seed) {
      const std::uint64_t second = opts.seed + 1;
      CubicRun other = detail::run_cubic(label, g, opts, second);
      NormalizationLog scratch;
      Polynomial eq2 = finalize_equation(other.raw, opts.specialization, scratch);
      Polynomial common = gcd(eq, eq2);
      if (common.is_constant()) throw DegenerateError("the two auxiliary-point seeds share no common factor");
      out.normalization_log.push_back({"seed_gcd", std::to_string(opts.seed) + "," + std::to_string(second), "", 0});
      eq = primitive_part(common);
    }
  }
  out.equation = std::move(eq);
  return out;
}

inline ModularEquation compute_90b(const PipelineOptions& opts = {}) {
  return compute_generic_cubic("(9,0)b", paper_representatives().at("(9,0)b"), opts);
}

/// The bipartite (9,0) configuration: the nine points are the complete
/// intersection of l1l3l5 and l2l4l6, so they impose only eight conditions
/// (Cayley-Bacharach) and the run raises DegenerateError.
inline ModularEquation compute_90a(const PipelineOptions& opts = {}) {
  try {
    return compute_generic_cubic("(9,0)a", paper_representatives().at("(9,0)a"), opts);
  } catch (const DegenerateError& e) {
    throw DegenerateError(std::string("(9,0)a is degenerate (Cayley-Bacharach): the nine points are the base locus "
                                      "of the pencil spanned by l1l3l5 and l2l4l6, so no unique cubic passes "
                                      "through them [") + e.what() + "]",
                          e.level());
  }
}

inline ModularEquation compute_81(const PipelineOptions& opts = {}) {
  return compute_generic_cubic("(8,1)", paper_representatives().at("(8,1)"), opts);
}

inline ModularEquation compute_72(char variant, const PipelineOptions& opts = {}) {
  if (variant != 'a' && variant != 'b') throw DomainError("(7,2) variant must be a or b");
  std::string label = std::string("(7,2)") + variant;
  return compute_generic_cubic(label, paper_representatives().at(label), opts);
}

inline ModularEquation compute_63(const PipelineOptions& opts = {}) {
  return compute_generic_cubic("(6,3)", paper_representatives().at("(6,3)"), opts);
}

/// Number of singular members of the pencil f1 + t f2 counted with
/// multiplicity: degree of the discriminant in t.
inline unsigned count_singular_in_pencil(const Polynomial& f1, const Polynomial& f2) {
  const VarId t = var::t(0);
  Polynomial d = cubic_discriminant_salmon(f1 + Polynomial::variable(t) * f2);
  if (d.is_zero()) throw DegenerateError("pencil discriminant vanishes identically");
  return static_cast<unsigned>(degree_in(d, t));
}

/// Dispatch by label: "(5,1)", "5,1", "9,0b", ...
inline ModularEquation compute_by_label(const std::string& raw_label, const PipelineOptions& opts = {}) {
  std::string label = raw_label;
  if (!label.empty() && label.front() != '(') {
    auto pos = label.find_first_not_of("0123456789,");
    label = "(" + label.substr(0, pos) + ")" + (pos == std::string::npos ? "" : label.substr(pos));
  }
  if (label == "(5,1)") return compute_51(opts);
  if (label == "(4,2)") return compute_42(opts);
  if (label == "(3,3)") return compute_33(opts);
  if (label == "(9,0)a") return compute_90a(opts);
  for (const auto& c : enumerate_classes(3))
    if (c.label == label) return compute_generic_cubic(label, c.representative, opts);
  for (const auto& c : enumerate_classes(2))
    if (c.label == label) throw DomainError("no pipeline for configuration " + label);
  throw DomainError("unknown configuration label " + raw_label);
}

} // namespace humbert

#endif // HUMBERT_PIPELINES_HPP
