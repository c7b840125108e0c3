#ifndef HUMBERT_GCD_HPP
#define HUMBERT_GCD_HPP

#include <optional>
#include <vector>

#include "humbert/modular.hpp"
#include "humbert/polynomial.hpp"

namespace humbert {

namespace detail {

inline std::optional<VarId> first_var(const VarSet& s) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (s.test(i)) return VarId(static_cast<std::uint8_t>(i));
  return std::nullopt;
}

inline Polynomial normalize_sign(Polynomial p) {
  if (!p.is_zero() && p.leading().coeff < 0) p = -p;
  return p;
}

// Pseudo-remainder of a by b in v.
inline Polynomial prem(Polynomial a, const Polynomial& b, VarId v) {
  const long db = degree_in(b, v);
  auto bc = coefficients_in(b, v);
  const Polynomial& lb = bc.back();
  Polynomial rest = b - lb * Polynomial::variable(v, static_cast<unsigned>(db));
  while (!a.is_zero()) {
    long da = degree_in(a, v);
    if (da < db) break;
    auto ac = coefficients_in(a, v);
    Polynomial la = ac.back();
    Polynomial a_rest = a - la * Polynomial::variable(v, static_cast<unsigned>(da));
    Polynomial shift = da > db ? Polynomial::variable(v, static_cast<unsigned>(da - db)) : Polynomial(1);
    a = lb * a_rest - la * shift * rest;
  }
  return a;
}

// Monic gcd over F_p of ascending coefficient vectors (Montgomery form).
inline std::vector<modular::u64> gcd_mod(const modular::Field& f, std::vector<modular::u64> a,
                                         std::vector<modular::u64> b) {
  auto trim = [](std::vector<modular::u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::size_t db = b.size() - 1;
    const modular::u64 inv = f.inv(b.back());
    while (a.size() >= b.size()) {
      modular::u64 c = f.mul(a.back(), inv);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const modular::u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

// Gcd of two primitive univariate polynomials in v of positive degree:
// images modulo word-size primes, scaled by gcd of leading coefficients,
// lifted by CRT until the primitive candidate divides both inputs.
inline Polynomial gcd_univariate_modular(const Polynomial& a, const Polynomial& b, VarId v) {
  using modular::u64;
  auto ac = coefficients_in(a, v), bc = coefficients_in(b, v);
  mpz_class lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), ac.back().leading().coeff.get_mpz_t(), bc.back().leading().coeff.get_mpz_t());
  auto constant_of = [](const Polynomial& c) { return c.is_zero() ? mpz_class(0) : c.leading().coeff; };
  std::size_t best_degree = std::min(ac.size(), bc.size());  // exceeds any gcd degree
  std::optional<modular::CrtAccumulator> crt;
  std::vector<mpz_class> previous;
  for (std::size_t index = 0;; ++index) {
    const u64 p = modular::prime_at(index);
    if (mpz_fdiv_ui(constant_of(ac.back()).get_mpz_t(), p) == 0 ||
        mpz_fdiv_ui(constant_of(bc.back()).get_mpz_t(), p) == 0)
      continue;
    modular::Field f(p);
    std::vector<u64> am, bm;
    for (const auto& c : ac) am.push_back(f.to(constant_of(c)));
    for (const auto& c : bc) bm.push_back(f.to(constant_of(c)));
    auto g = gcd_mod(f, am, bm);
    const std::size_t deg = g.size() - 1;
    if (deg == 0) return Polynomial(1);
    if (deg > best_degree) continue;  // unlucky prime
    if (deg < best_degree) {
      best_degree = deg;
      crt.emplace(deg + 1);
      previous.clear();
    }
    const u64 scale = f.to(lc_gcd);
    std::vector<u64> plain;
    for (auto c : g) plain.push_back(f.from(f.mul(c, scale)));
    crt->add(p, plain);
    auto current = crt->symmetric();
    if (current != previous) {
      previous = std::move(current);
      continue;
    }
    std::vector<Term> terms;
    for (std::size_t e = 0; e < previous.size(); ++e)
      if (previous[e] != 0) terms.push_back({Monomial::of(v, static_cast<unsigned>(e)), previous[e]});
    Polynomial candidate = primitive_part(Polynomial::from_terms(std::move(terms)));
    if (divide_exact(a, candidate) && divide_exact(b, candidate)) return candidate;
  }
}

} // namespace detail

inline Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Gcd of the coefficients of p viewed as a polynomial in v.
inline Polynomial content_in(const Polynomial& p, VarId v) {
  Polynomial g;
  for (const auto& c : coefficients_in(p, v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g == Polynomial(1)) break;
  }
  return g;
}

/// Greatest common divisor over ZZ, normalized to a positive leading
/// coefficient. Recursive dense primitive PRS on the smallest-index variable.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return detail::normalize_sign(b);
  if (b.is_zero()) return detail::normalize_sign(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    return Polynomial(g);
  }
  auto v = detail::first_var(a.variables() | b.variables());
  if (degree_in(a, *v) == 0 || degree_in(b, *v) == 0) {
    // v occurs in one side only: the gcd lives in the coefficients.
    const Polynomial& with = degree_in(a, *v) == 0 ? b : a;
    const Polynomial& without = degree_in(a, *v) == 0 ? a : b;
    Polynomial g = without;
    for (const auto& c : coefficients_in(with, *v)) {
      if (c.is_zero()) continue;
      g = gcd(g, c);
      if (g == Polynomial(1)) break;
    }
    return detail::normalize_sign(g);
  }
  Polynomial ca = content_in(a, *v), cb = content_in(b, *v);
  Polynomial g_content = gcd(ca, cb);
  Polynomial pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
  VarSet both = a.variables() | b.variables();
  if (both.count() == 1)
    return detail::normalize_sign(g_content * detail::gcd_univariate_modular(pa, pb, *v));
  if (degree_in(pa, *v) < degree_in(pb, *v)) std::swap(pa, pb);
  while (!pb.is_zero() && degree_in(pb, *v) > 0) {
    Polynomial r = detail::prem(pa, pb, *v);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = Polynomial();
      break;
    }
    pb = *divide_exact(r, content_in(r, *v));
  }
  Polynomial g_prim = pb.is_zero() ? pa : Polynomial(1);
  if (!pb.is_zero() || degree_in(g_prim, *v) == 0) g_prim = Polynomial(1);
  g_prim = *divide_exact(g_prim, content_in(g_prim, *v));
  return detail::normalize_sign(g_content * g_prim);
}

} // namespace humbert

#endif // HUMBERT_GCD_HPP
