#ifndef HUMBERT_NORMALIZE_HPP
#define HUMBERT_NORMALIZE_HPP

#include <string>
#include <vector>

#include "humbert/poly_io.hpp"
#include "humbert/polynomial.hpp"

namespace humbert {

/// One step of output normalization. Kinds:
///   content         integer content stripped (value)
///   dehomogenize    parameter set to 1 (poly holds its name)
///   factor          known degenerate factor removed (poly, multiplicity)
///   denominator     factor cleared when specializing to a rational (value)
struct NormalizationEntry {
  std::string kind;
  std::string value;
  std::string poly;
  unsigned multiplicity = 0;

  friend bool operator==(const NormalizationEntry&, const NormalizationEntry&) = default;
};

using NormalizationLog = std::vector<NormalizationEntry>;

/// Replaces p by its primitive part (positive leading coefficient) and logs
/// the content unless it is 1.
inline Polynomial strip_content(const Polynomial& p, NormalizationLog& log) {
  auto [c, prim] = content_and_primitive(p);
  bool flipped = !(prim * c == p);
  if (c != 1 || flipped) log.push_back({"content", (flipped ? mpz_class(-c) : c).get_str(), "", 0});
  return prim;
}

/// a_i, a_i - 1, a_i - a_j for the branch-point parameters present in p
/// (plus the same shapes involving a4 when it is symbolic).
inline std::vector<Polynomial> degenerate_factors(const VarSet& present) {
  std::vector<Polynomial> out;
  std::vector<VarId> as;
  for (unsigned i = 1; i <= 4; ++i)
    if (present.test(var::a(i).index())) as.push_back(var::a(i));
  for (VarId a : as) out.push_back(Polynomial::variable(a));
  for (VarId a : as) out.push_back(Polynomial::variable(a) - Polynomial(1));
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i + 1; j < as.size(); ++j)
      out.push_back(Polynomial::variable(as[i]) - Polynomial::variable(as[j]));
  return out;
}

/// Trial-divides p by every known degenerate factor, logging multiplicities.
/// Specialized parameters mean some factors became constants; callers pass
/// the extra specialized factors (e.g. a1 - 5 after a2 := 5) via `extra`.
inline Polynomial remove_degenerate_factors(Polynomial p, NormalizationLog& log,
                                            const std::vector<Polynomial>& extra = {}) {
  auto factors = degenerate_factors(p.variables());
  factors.insert(factors.end(), extra.begin(), extra.end());
  for (const auto& f : factors) {
    if (f.is_constant()) continue;
    auto [rest, mult] = remove_factor(std::move(p), f);
    p = std::move(rest);
    if (mult != 0) log.push_back({"factor", "", to_string(f), mult});
  }
  return p;
}

/// Applies every assignment in `spec` (clearing denominators). The product of
/// the cleared factors is logged once when a log is given and it is not 1.
inline Polynomial specialize(Polynomial p, const Assignment& spec, NormalizationLog* log = nullptr) {
  mpz_class cleared = 1;
  for (const auto& [v, value] : spec) {
    auto [q, factor] = substitute_rational(p, v, value);
    p = std::move(q);
    cleared *= factor;
  }
  if (log && cleared != 1) log->push_back({"denominator", cleared.get_str(), "", 0});
  return p;
}

} // namespace humbert

#endif // HUMBERT_NORMALIZE_HPP
