#ifndef HUMBERT_POLYNOMIAL_HPP
#define HUMBERT_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "humbert/error.hpp"
#include "humbert/variables.hpp"

namespace humbert {

/// Power product over the global variable set. Exponents are stored densely;
/// a zero exponent means the variable is absent.
class Monomial {
public:
  Monomial() = default;

  static Monomial of(VarId v, unsigned e = 1) {
    Monomial m;
    m.set(v, e);
    return m;
  }

  unsigned operator[](VarId v) const { return exp_[v.index()]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(VarId v, unsigned e) {
    if (e > std::numeric_limits<std::uint16_t>::max())
      throw BudgetError("exponent overflow in monomial");
    degree_ = degree_ - exp_[v.index()] + e;
    exp_[v.index()] = static_cast<std::uint16_t>(e);
  }

  unsigned degree_in(const VarSet& vars) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (vars.test(i)) d += exp_[i];
    return d;
  }

  VarSet support() const {
    VarSet s;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (exp_[i] != 0) s.set(i);
    return s;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial q;
    for (std::size_t i = 0; i < kNumVars; ++i)
      q.exp_[i] = static_cast<std::uint16_t>(other.exp_[i] - exp_[i]);
    q.degree_ = other.degree_ - degree_;
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = unsigned(a.exp_[i]) + b.exp_[i];
      if (e > std::numeric_limits<std::uint16_t>::max())
        throw BudgetError("exponent overflow in monomial");
      m.exp_[i] = static_cast<std::uint16_t>(e);
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  /// Graded lexicographic order with x > y > z > a1 > ... > t14.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] <=> b.exp_[i];
    return std::strong_ordering::equal;
  }

private:
  std::array<std::uint16_t, kNumVars> exp_{};
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial mono;
  mpz_class coeff;
};

/// Value standing in for deg(0).
inline constexpr long kDegreeOfZero = std::numeric_limits<long>::min();

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept strictly descending in the monomial order
/// with no zero coefficients, so equality is structural.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(mpz_class(c)) {} // NOLINT(implicit)
  Polynomial(const mpz_class& c) { // NOLINT(implicit)
    if (c != 0) terms_.push_back({Monomial(), c});
  }

  static Polynomial variable(VarId v, unsigned e = 1) {
    Polynomial p;
    p.terms_.push_back({Monomial::of(v, e), mpz_class(1)});
    return p;
  }

  static Polynomial monomial(const Monomial& m, mpz_class c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  /// Builds a polynomial from terms in any order, merging like terms.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Adopts terms that are already strictly descending and nonzero.
  static Polynomial from_sorted_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Constant term value (0 when absent).
  mpz_class constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
  }

  const Term& leading() const { return terms_.front(); }

  VarSet variables() const {
    VarSet s;
    for (const auto& t : terms_) s |= t.mono.support();
    return s;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = combine(*this, q, 1); }
  Polynomial& operator-=(const Polynomial& q) { return *this = combine(*this, q, -1); }
  Polynomial& operator*=(const Polynomial& q) { return *this = multiply(*this, q); }

  Polynomial& operator*=(const mpz_class& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.coeff *= c;
    }
    return *this;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) { return combine(p, q, 1); }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return combine(p, q, -1); }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) { return multiply(p, q); }
  friend Polynomial operator*(Polynomial p, const mpz_class& c) { return p *= c; }
  friend Polynomial operator*(const mpz_class& c, Polynomial p) { return p *= c; }

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coeff != q.terms_[i].coeff)
        return false;
    return true;
  }

private:
  static Polynomial combine(const Polynomial& p, const Polynomial& q, int sign) {
    Polynomial r;
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms_.size() || j < q.terms_.size()) {
      if (j == q.terms_.size() || (i < p.terms_.size() && p.terms_[i].mono > q.terms_[j].mono)) {
        r.terms_.push_back(p.terms_[i++]);
      } else if (i == p.terms_.size() || q.terms_[j].mono > p.terms_[i].mono) {
        r.terms_.push_back({q.terms_[j].mono, sign > 0 ? q.terms_[j].coeff : mpz_class(-q.terms_[j].coeff)});
        ++j;
      } else {
        mpz_class c = sign > 0 ? mpz_class(p.terms_[i].coeff + q.terms_[j].coeff)
                               : mpz_class(p.terms_[i].coeff - q.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({p.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Heap-merge multiplication: row i of the smaller operand times the larger
  // one is already sorted, rows are merged lazily.
  static Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const Polynomial& a = p.size() <= q.size() ? p : q;
    const Polynomial& b = p.size() <= q.size() ? q : p;
    if (a.size() == 1) {
      Polynomial r;
      r.terms_.reserve(b.size());
      for (const auto& t : b.terms_) r.terms_.push_back({a.terms_[0].mono * t.mono, a.terms_[0].coeff * t.coeff});
      return r;
    }
    struct Entry {
      Monomial mono;
      std::uint32_t i, j;
    };
    auto cmp = [](const Entry& u, const Entry& v) { return u.mono < v.mono; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    heap.push({a.terms_[0].mono * b.terms_[0].mono, 0, 0});
    Polynomial r;
    mpz_class acc;
    while (!heap.empty()) {
      Monomial m = heap.top().mono;
      acc = 0;
      while (!heap.empty() && heap.top().mono == m) {
        Entry e = heap.top();
        heap.pop();
        mpz_addmul(acc.get_mpz_t(), a.terms_[e.i].coeff.get_mpz_t(), b.terms_[e.j].coeff.get_mpz_t());
        if (e.j + 1 < b.size()) heap.push({a.terms_[e.i].mono * b.terms_[e.j + 1].mono, e.i, e.j + 1});
        if (e.j == 0 && e.i + 1 < a.size()) heap.push({a.terms_[e.i + 1].mono * b.terms_[0].mono, e.i + 1, 0});
      }
      if (acc != 0) r.terms_.push_back({m, acc});
    }
    return r;
  }

  std::vector<Term> terms_;
};

using Rational = mpq_class;
using Assignment = std::map<VarId, Rational>;

inline Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result(1), base = p;
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

/// Formal partial derivative.
inline Polynomial partial(const Polynomial& p, VarId v) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[v];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(v, e - 1);
    out.push_back({m, t.coeff * e});
  }
  // Dividing every surviving term by v preserves the (multiplicative) order.
  return Polynomial::from_sorted_terms(std::move(out));
}

inline long degree_in(const Polynomial& p, VarId v) {
  if (p.is_zero()) return kDegreeOfZero;
  long d = 0;
  for (const auto& t : p.terms()) d = std::max<long>(d, t.mono[v]);
  return d;
}

inline long total_degree(const Polynomial& p, const VarSet& vars) {
  if (p.is_zero()) return kDegreeOfZero;
  long d = 0;
  for (const auto& t : p.terms()) d = std::max<long>(d, t.mono.degree_in(vars));
  return d;
}

inline long total_degree(const Polynomial& p) {
  return p.is_zero() ? kDegreeOfZero : static_cast<long>(p.leading().mono.degree());
}

/// Common degree in `vars` of every term, or nothing. The zero polynomial is
/// reported as homogeneous of degree 0.
inline std::optional<unsigned> is_homogeneous(const Polynomial& p, const VarSet& vars) {
  if (p.is_zero()) return 0u;
  unsigned d = p.terms().front().mono.degree_in(vars);
  for (const auto& t : p.terms())
    if (t.mono.degree_in(vars) != d) return std::nullopt;
  return d;
}

/// Coefficients of p viewed as a polynomial in v: result[k] multiplies v^k.
inline std::vector<Polynomial> coefficients_in(const Polynomial& p, VarId v) {
  long d = degree_in(p, v);
  if (d == kDegreeOfZero) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[v];
    Monomial m = t.mono;
    m.set(v, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
  return out;
}

/// Inverse of coefficients_in.
inline Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, VarId v) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms()) {
      Monomial m = t.mono;
      m.set(v, m[v] + static_cast<unsigned>(k));
      out.push_back({m, t.coeff});
    }
  return Polynomial::from_terms(std::move(out));
}

/// Exact substitution v := q.
inline Polynomial substitute(const Polynomial& p, VarId v, const Polynomial& q) {
  if (q == Polynomial::variable(v)) return p;
  auto coeffs = coefficients_in(p, v);
  if (coeffs.empty()) return {};
  if (q.is_constant()) {
    mpz_class c = q.constant_term();
    std::vector<Term> out;
    mpz_class power = 1;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (k > 0) power *= c;
      if (power == 0) break;
      for (const auto& t : coeffs[k].terms()) out.push_back({t.mono, t.coeff * power});
    }
    return Polynomial::from_terms(std::move(out));
  }
  // Horner.
  Polynomial r = coeffs.back();
  for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
    r *= q;
    r += coeffs[k];
  }
  return r;
}

/// Substitutes v := num/den and multiplies through by den^deg_v(p) so the
/// result stays integral. Returns the polynomial and the cleared factor.
inline std::pair<Polynomial, mpz_class> substitute_rational(const Polynomial& p, VarId v, const Rational& value) {
  Rational r = value;
  r.canonicalize();
  long d = degree_in(p, v);
  if (d <= 0) return {p, mpz_class(1)};
  if (r.get_den() == 1) return {substitute(p, v, Polynomial(r.get_num())), mpz_class(1)};
  auto coeffs = coefficients_in(p, v);
  std::vector<mpz_class> num_pow(coeffs.size()), den_pow(coeffs.size());
  num_pow[0] = 1;
  den_pow[0] = 1;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    num_pow[k] = num_pow[k - 1] * r.get_num();
    den_pow[k] = den_pow[k - 1] * r.get_den();
  }
  std::vector<Term> out;
  std::size_t n = coeffs.size() - 1;
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& t : coeffs[k].terms()) out.push_back({t.mono, t.coeff * num_pow[k] * den_pow[n - k]});
  return {Polynomial::from_terms(std::move(out)), den_pow[n]};
}

class MissingVariableError : public DomainError {
public:
  explicit MissingVariableError(VarId v)
      : DomainError("assignment is missing variable " + std::string(var_name(v))), var_(v) {}
  VarId variable() const { return var_; }

private:
  VarId var_;
};

inline Rational eval_rational(const Polynomial& p, const Assignment& assignment) {
  VarSet used = p.variables();
  std::array<std::vector<Rational>, kNumVars> powers;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (!used.test(i)) continue;
    VarId v(static_cast<std::uint8_t>(i));
    auto it = assignment.find(v);
    if (it == assignment.end()) throw MissingVariableError(v);
    powers[i].push_back(Rational(1));
    powers[i].push_back(it->second);
  }
  auto power = [&](std::size_t i, unsigned e) -> const Rational& {
    auto& table = powers[i];
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  };
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational term(t.coeff);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      unsigned e = t.mono[VarId(static_cast<std::uint8_t>(i))];
      if (e != 0) term *= power(i, e);
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

/// Positive GCD of the coefficients; 0 for the zero polynomial.
inline mpz_class content(const Polynomial& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Splits p into (content, primitive part) with the primitive part's leading
/// coefficient positive. content * primitive == +-p.
inline std::pair<mpz_class, Polynomial> content_and_primitive(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("content of the zero polynomial");
  mpz_class g = content(p);
  std::vector<Term> out;
  out.reserve(p.size());
  bool negate = p.leading().coeff < 0;
  for (const auto& t : p.terms()) {
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
    if (negate) c = -c;
    out.push_back({t.mono, std::move(c)});
  }
  return {g, Polynomial::from_sorted_terms(std::move(out))};
}

inline Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  return content_and_primitive(p).second;
}

/// Divides by an integer that is known to divide every coefficient.
inline Polynomial divexact(const Polynomial& p, const mpz_class& c) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    out.push_back({t.mono, std::move(q)});
  }
  if (c < 0) return Polynomial::from_terms(std::move(out));
  return Polynomial::from_sorted_terms(std::move(out));
}

/// Exact quotient a / b over the integers, or nothing when b does not divide a.
/// Uses heap division: quotient terms are produced in descending order and the
/// products q_k * b_j (j >= 1) are merged lazily.
inline std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return Polynomial();
  const auto& bt = b.terms();
  const auto& at = a.terms();
  const Term& lead = bt.front();
  struct Entry {
    Monomial mono;
    std::uint32_t k, j;
  };
  auto cmp = [](const Entry& u, const Entry& v) { return u.mono < v.mono; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  std::vector<Term> quotient;
  std::size_t i = 0;
  mpz_class acc;
  while (i < at.size() || !heap.empty()) {
    Monomial m;
    if (heap.empty() || (i < at.size() && at[i].mono > heap.top().mono))
      m = at[i].mono;
    else
      m = heap.top().mono;
    acc = 0;
    if (i < at.size() && at[i].mono == m) acc = at[i++].coeff;
    while (!heap.empty() && heap.top().mono == m) {
      Entry e = heap.top();
      heap.pop();
      mpz_submul(acc.get_mpz_t(), quotient[e.k].coeff.get_mpz_t(), bt[e.j].coeff.get_mpz_t());
      if (e.j + 1 < bt.size()) heap.push({quotient[e.k].mono * bt[e.j + 1].mono, e.k, e.j + 1});
    }
    if (acc == 0) continue;
    if (!lead.mono.divides(m) || !mpz_divisible_p(acc.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), acc.get_mpz_t(), lead.coeff.get_mpz_t());
    quotient.push_back({lead.mono.quotient_of(m), std::move(c)});
    if (bt.size() > 1) {
      auto k = static_cast<std::uint32_t>(quotient.size() - 1);
      heap.push({quotient[k].mono * bt[1].mono, k, 1});
    }
  }
  return Polynomial::from_sorted_terms(std::move(quotient));
}

/// Divides out `factor` as many times as it goes; returns the cofactor and the
/// multiplicity.
inline std::pair<Polynomial, unsigned> remove_factor(Polynomial p, const Polynomial& factor) {
  unsigned mult = 0;
  if (p.is_zero() || factor.is_constant()) return {std::move(p), 0};
  while (auto q = divide_exact(p, factor)) {
    p = std::move(*q);
    ++mult;
  }
  return {std::move(p), mult};
}

/// Renames variables: each v in `mapping` is replaced by mapping[v].
/// The mapping must be injective on p's support.
inline Polynomial rename(const Polynomial& p, const std::map<VarId, VarId>& mapping) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      VarId v(static_cast<std::uint8_t>(i));
      unsigned e = t.mono[v];
      if (e == 0) continue;
      auto it = mapping.find(v);
      VarId w = it == mapping.end() ? v : it->second;
      m.set(w, m[w] + e);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(out));
}

} // namespace humbert

#endif // HUMBERT_POLYNOMIAL_HPP
