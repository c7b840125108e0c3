#ifndef HUMBERT_LINALG_HPP
#define HUMBERT_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <unordered_map>
#include <vector>

#include "humbert/budget.hpp"
#include "humbert/modular.hpp"
#include "humbert/polynomial.hpp"

namespace humbert {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Polynomial>& entries() const { return entries_; }

  PolyMatrix minor(std::size_t skip_row, std::size_t skip_col) const {
    PolyMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == skip_row) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == skip_col) continue;
        m(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return m;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> entries_;
};

enum class DetStrategy {
  automatic,
  /// Fraction-free elimination with exact division.
  bareiss,
  /// Laplace expansion along the first row (small matrices / test oracle).
  cofactor,
  /// Evaluation at integer points modulo word-size primes, dense
  /// interpolation and Chinese remaindering against a rigorous coefficient
  /// bound.
  modular,
};

namespace detail {

inline Polynomial det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Polynomial sum;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Polynomial term = m(0, c) * det_cofactor(m.minor(0, c));
    if (c % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

inline bool pivot_better(const Polynomial& a, const Polynomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.leading().mono < b.leading().mono;
}

inline Polynomial det_bareiss(PolyMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  bool negate = false;
  Polynomial prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r)
      if (!m(r, k).is_zero() && (best == n || pivot_better(m(r, k), m(best, k)))) best = r;
    if (best == n) return {};
    if (best != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(best, c));
      negate = !negate;
    }
    const Polynomial& pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = pivot * m(i, j) - m(i, k) * m(k, j);
        if (prev == Polynomial(1)) {
          m(i, j) = std::move(num);
        } else {
          auto q = divide_exact(num, prev);
          if (!q) throw Error("internal: inexact Bareiss division");
          m(i, j) = std::move(*q);
        }
      }
      m(i, k) = Polynomial();
    }
    prev = m(k, k);
  }
  Polynomial d = m(n - 1, n - 1);
  return negate ? -d : d;
}

inline std::size_t poly_hash(const Polynomial& p) {
  std::size_t h = p.size();
  for (const auto& t : p.terms()) {
    h = h * 1000003u ^ t.mono.degree();
    for (std::size_t i = 0; i < kNumVars; ++i) h = h * 31u + t.mono[VarId(static_cast<std::uint8_t>(i))];
    h ^= mpz_fdiv_ui(t.coeff.get_mpz_t(), 4294967291u) + (h << 6);
  }
  return h;
}

inline double log2_norm1(const Polynomial& p) {
  if (p.is_zero()) return -1.0e300;
  mpz_class s = 0;
  for (const auto& t : p.terms()) s += abs(t.coeff);
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, s.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

/// Free variables, a degree bound per variable and a bound on log2 of the
/// largest coefficient of the value being interpolated.
struct InterpolationPlan {
  std::vector<VarId> vars;
  std::vector<std::size_t> bound;
  double log2_bound = 0;
  bool zero = false;  // value known to vanish (zero row or column)

  double grid() const {
    double g = 1;
    for (auto b : bound) g *= static_cast<double>(b + 1);
    return g;
  }
};

/// Plan for det(m): degree bounds from row/column degree sums and the
/// Cauchy-Hadamard bound |coeff| <= prod_rows sqrt(sum_j ||a_ij||_1^2).
inline InterpolationPlan plan_for_matrix(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  InterpolationPlan plan;
  VarSet used;
  for (const auto& e : m.entries()) used |= e.variables();
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (used.test(i)) plan.vars.emplace_back(static_cast<std::uint8_t>(i));
  for (VarId v : plan.vars) {
    std::vector<long> row_max(n, 0), col_max(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        long d = std::max(0L, degree_in(m(r, c), v));
        row_max[r] = std::max(row_max[r], d);
        col_max[c] = std::max(col_max[c], d);
      }
    std::size_t by_rows = 0, by_cols = 0;
    for (std::size_t i = 0; i < n; ++i) {
      by_rows += static_cast<std::size_t>(row_max[i]);
      by_cols += static_cast<std::size_t>(col_max[i]);
    }
    plan.bound.push_back(std::min(by_rows, by_cols));
  }
  std::vector<double> l2(n * n);
  for (std::size_t i = 0; i < n * n; ++i) l2[i] = log2_norm1(m.entries()[i]);
  auto log2_sum_sq = [](const std::vector<double>& logs) {
    double top = -1.0e300;
    for (double x : logs) top = std::max(top, x);
    if (top < -1.0e299) return -1.0e300;
    double s = 0;
    for (double x : logs) s += std::exp2(2 * (x - top));
    return 2 * top + std::log2(s);
  };
  double by_rows = 0, by_cols = 0;
  std::vector<double> line(n);
  for (std::size_t r = 0; r < n && !plan.zero; ++r) {
    for (std::size_t c = 0; c < n; ++c) line[c] = l2[r * n + c];
    double s = log2_sum_sq(line);
    if (s < -1.0e299) plan.zero = true;
    by_rows += 0.5 * s;
  }
  for (std::size_t c = 0; c < n && !plan.zero; ++c) {
    for (std::size_t r = 0; r < n; ++r) line[r] = l2[r * n + c];
    double s = log2_sum_sq(line);
    if (s < -1.0e299) plan.zero = true;
    by_cols += 0.5 * s;
  }
  plan.log2_bound = std::min(by_rows, by_cols) + 2.0;
  return plan;
}

/// Throws BudgetError when the interpolation table would not fit the budget.
inline void check_budget(const InterpolationPlan& plan) {
  double bytes = plan.grid() * (std::max(plan.log2_bound, 64.0) / 8.0 + 32.0);
  double budget = static_cast<double>(memory_budget_bytes());
  if (bytes > budget)
    throw BudgetError("evaluation grid of " + std::to_string(static_cast<long long>(plan.grid())) + " points x " +
                      std::to_string(static_cast<long long>(plan.log2_bound)) + " bits exceeds the memory budget of " +
                      std::to_string(static_cast<long long>(budget / 1048576.0)) + " MB (HUMBERT_MEM_BUDGET_MB)");
}

/// Evaluates `inputs` on the grid {0..bound_v} of each variable modulo a
/// sequence of primes, combines the values with `combine(field, values)`,
/// interpolates densely and lifts by CRT until the coefficient bound is met.
template <class Combine>
Polynomial evaluate_interpolate(const InterpolationPlan& plan, const std::vector<const Polynomial*>& inputs,
                                Combine&& combine) {
  using namespace modular;
  if (plan.zero) return {};
  check_budget(plan);
  const auto& vars = plan.vars;
  const auto& bound = plan.bound;
  const std::size_t k = vars.size();
  const auto grid = static_cast<std::size_t>(plan.grid());

  // Axis-by-axis evaluation schedule: items at level v are the distinct
  // exponent tails (e_v, ..., e_{k-1}); substituting a node for vars[v]
  // folds item j into item target[v][j] of level v + 1.
  struct Schedule {
    std::vector<std::vector<std::uint32_t>> target, exponent;
    std::vector<std::size_t> count;
  };
  std::vector<Schedule> sched(inputs.size());
  std::vector<std::size_t> max_exp(k, 0);
  for (std::size_t d = 0; d < inputs.size(); ++d) {
    auto& sc = sched[d];
    std::vector<std::vector<std::uint32_t>> items;
    for (const auto& t : inputs[d]->terms()) {
      std::vector<std::uint32_t> e(k);
      for (std::size_t v = 0; v < k; ++v) {
        e[v] = t.mono[vars[v]];
        max_exp[v] = std::max<std::size_t>(max_exp[v], e[v]);
      }
      items.push_back(std::move(e));
    }
    sc.count.push_back(items.size());
    for (std::size_t v = 0; v < k; ++v) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> index;
      std::vector<std::vector<std::uint32_t>> next;
      std::vector<std::uint32_t> tgt, ex;
      for (const auto& e : items) {
        std::vector<std::uint32_t> tail(e.begin() + 1, e.end());
        auto [it, fresh] = index.emplace(tail, static_cast<std::uint32_t>(next.size()));
        if (fresh) next.push_back(tail);
        tgt.push_back(it->second);
        ex.push_back(e[0]);
      }
      sc.target.push_back(std::move(tgt));
      sc.exponent.push_back(std::move(ex));
      items = std::move(next);
      sc.count.push_back(items.size());
    }
  }

  CrtAccumulator crt(grid);
  std::vector<u64> values(grid);
  std::vector<u64> input_val(inputs.size());
  // buf[d][v]: coefficients of input d at level v.
  std::vector<std::vector<std::vector<u64>>> buf(inputs.size());
  for (std::size_t d = 0; d < inputs.size(); ++d)
    for (std::size_t v = 0; v <= k; ++v) buf[d].emplace_back(sched[d].count[v], 0);
  std::vector<std::vector<u64>> powers(k);
  for (std::size_t v = 0; v < k; ++v) powers[v].resize(max_exp[v] + 1);
  std::size_t prime_index = 0;
  double timing[3] = {0, 0, 0};
  while (static_cast<double>(mpz_sizeinbase(crt.modulus().get_mpz_t(), 2)) - 1 < plan.log2_bound) {
    u64 p = prime_at(prime_index++);
    Field f(p);
    for (std::size_t d = 0; d < inputs.size(); ++d) {
      std::size_t j = 0;
      for (const auto& t : inputs[d]->terms()) buf[d][0][j++] = f.to(t.coeff);
    }
    auto fold = [&](auto&& self, std::size_t v, std::size_t offset) -> void {
      if (v == k) {
        for (std::size_t d = 0; d < inputs.size(); ++d) {
          u64 acc = 0;
          for (u64 c : buf[d][k]) acc = f.add(acc, c);  // k == 0 sums the constant terms
          input_val[d] = acc;
        }
        values[offset] = combine(f, input_val);
        return;
      }
      auto& pw = powers[v];
      for (std::size_t i = 0; i <= bound[v]; ++i) {
        u64 node = f.to(static_cast<u64>(i));
        pw[0] = f.one();
        for (std::size_t e = 1; e < pw.size(); ++e) pw[e] = f.mul(pw[e - 1], node);
        for (std::size_t d = 0; d < inputs.size(); ++d) {
          const auto& src = buf[d][v];
          auto& dst = buf[d][v + 1];
          std::fill(dst.begin(), dst.end(), 0);
          const auto& tgt = sched[d].target[v];
          const auto& ex = sched[d].exponent[v];
          for (std::size_t j = 0; j < src.size(); ++j)
            if (src[j] != 0) dst[tgt[j]] = f.add(dst[tgt[j]], ex[j] == 0 ? src[j] : f.mul(src[j], pw[ex[j]]));
        }
        self(self, v + 1, offset * (bound[v] + 1) + i);
      }
    };
    auto t_eval = std::chrono::steady_clock::now();
    fold(fold, 0, 0);
    timing[0] += std::chrono::duration<double>(std::chrono::steady_clock::now() - t_eval).count();
    auto t_interp = std::chrono::steady_clock::now();
    // Tensor interpolation, one axis at a time.
    std::size_t stride = 1;
    for (std::size_t v = k; v-- > 0;) {
      std::size_t len = bound[v] + 1;
      std::vector<u64> line(len);
      for (std::size_t base = 0; base < grid; ++base) {
        if ((base / stride) % len != 0) continue;
        for (std::size_t i = 0; i < len; ++i) line[i] = values[base + i * stride];
        interpolate(f, line);
        for (std::size_t i = 0; i < len; ++i) values[base + i * stride] = line[i];
      }
      stride *= len;
    }
    std::vector<u64> plain(grid);
    for (std::size_t g = 0; g < grid; ++g) plain[g] = f.from(values[g]);
    auto t_crt = std::chrono::steady_clock::now();
    timing[1] += std::chrono::duration<double>(t_crt - t_interp).count();
    crt.add(p, plain);
    timing[2] += std::chrono::duration<double>(std::chrono::steady_clock::now() - t_crt).count();
  }
  auto coeffs = crt.symmetric();
  if (std::getenv("HUMBERT_TRACE")) {
    std::size_t bits = 0;
    for (const auto& c : coeffs) bits = std::max<std::size_t>(bits, c == 0 ? 0 : mpz_sizeinbase(c.get_mpz_t(), 2));
    std::cerr << "[modular] grid " << grid << ", bound " << static_cast<long>(plan.log2_bound) << " bits, " << prime_index
              << " primes, result " << bits << " bits; eval " << timing[0] << " s, interp "
              << timing[1] << " s, crt " << timing[2] << " s\n";
  }
  std::vector<Term> terms;
  std::vector<std::size_t> point(k, 0);
  for (std::size_t g = 0; g < grid; ++g) {
    if (coeffs[g] != 0) {
      Monomial mono;
      for (std::size_t v = 0; v < k; ++v) mono.set(vars[v], static_cast<unsigned>(point[v]));
      terms.push_back({mono, coeffs[g]});
    }
    for (std::size_t v = k; v-- > 0;) {
      if (++point[v] <= bound[v]) break;
      point[v] = 0;
    }
  }
  return Polynomial::from_terms(std::move(terms));
}

/// Determinant by evaluation/interpolation over word-size primes.
inline Polynomial det_modular(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  InterpolationPlan plan = plan_for_matrix(m);
  // Distinct entries, each evaluated once per grid point.
  std::vector<std::size_t> slot(n * n);
  std::vector<const Polynomial*> distinct;
  {
    std::unordered_multimap<std::size_t, std::size_t> seen;
    for (std::size_t i = 0; i < n * n; ++i) {
      const Polynomial& e = m.entries()[i];
      std::size_t h = poly_hash(e);
      std::size_t found = distinct.size();
      auto range = seen.equal_range(h);
      for (auto it = range.first; it != range.second; ++it)
        if (*distinct[it->second] == e) {
          found = it->second;
          break;
        }
      if (found == distinct.size()) {
        distinct.push_back(&e);
        seen.emplace(h, found);
      }
      slot[i] = found;
    }
  }
  std::vector<modular::u64> mat(n * n);
  return evaluate_interpolate(plan, distinct, [&](const modular::Field& f, const std::vector<modular::u64>& val) {
    for (std::size_t i = 0; i < n * n; ++i) mat[i] = val[slot[i]];
    return modular::determinant(f, mat, n);
  });
}

inline std::size_t modular_grid_size(const PolyMatrix& m) {
  VarSet used;
  for (const auto& e : m.entries()) used |= e.variables();
  double grid = 1;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (!used.test(i)) continue;
    VarId v(static_cast<std::uint8_t>(i));
    std::size_t by_rows = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      long best = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, std::max(0L, degree_in(m(r, c), v)));
      by_rows += static_cast<std::size_t>(best);
    }
    grid *= static_cast<double>(by_rows + 1);
  }
  return grid > 1e15 ? static_cast<std::size_t>(1e15) : static_cast<std::size_t>(grid);
}

} // namespace detail

/// Exact determinant of a square polynomial matrix.
inline Polynomial determinant(const PolyMatrix& m, DetStrategy strategy = DetStrategy::automatic) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  switch (strategy) {
  case DetStrategy::bareiss:
    return detail::det_bareiss(m);
  case DetStrategy::cofactor:
    return detail::det_cofactor(m);
  case DetStrategy::modular:
    return detail::det_modular(m);
  case DetStrategy::automatic:
    break;
  }
  const std::size_t n = m.rows();
  if (n <= 3) return detail::det_cofactor(m);
  VarSet used;
  for (const auto& e : m.entries()) used |= e.variables();
  const std::size_t nvars = used.count();
  if (nvars == 0) return detail::det_bareiss(m);
  if (n >= 5 && nvars <= 3) {
    std::size_t grid = detail::modular_grid_size(m);
    if (grid <= 4'000'000 && grid * n * n <= 2'000'000'000ULL) return detail::det_modular(m);
  }
  return detail::det_bareiss(m);
}

/// Fraction-free Gauss-Jordan reduction. Returns the pivot columns; on exit
/// every pivot row has the common pivot value at its pivot column and zeros in
/// the other pivot columns.
inline std::vector<std::size_t> fraction_free_rref(PolyMatrix& m) {
  std::vector<std::size_t> pivots;
  Polynomial prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero() && (best == m.rows() || detail::pivot_better(m(r, col), m(best, col)))) best = r;
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    Polynomial pivot = m(row, col);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      Polynomial factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == col) continue;
        Polynomial num = pivot * m(i, j) - factor * m(row, j);
        if (prev == Polynomial(1)) {
          m(i, j) = std::move(num);
        } else {
          auto q = divide_exact(num, prev);
          if (!q) throw Error("internal: inexact fraction-free division");
          m(i, j) = std::move(*q);
        }
      }
      m(i, col) = Polynomial();
    }
    pivots.push_back(col);
    prev = pivot;
    ++row;
  }
  return pivots;
}

inline std::size_t rank(PolyMatrix m) { return fraction_free_rref(m).size(); }

/// Basis of the right nullspace over the fraction field of the coefficient
/// ring, cleared to polynomial vectors with unit integer content.
inline std::vector<std::vector<Polynomial>> nullspace_over_fraction_field(PolyMatrix m) {
  auto pivots = fraction_free_rref(m);
  std::vector<std::vector<Polynomial>> basis;
  if (pivots.empty()) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Polynomial> v(m.cols());
      v[j] = Polynomial(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Polynomial d = m(pivots.size() - 1, pivots.back());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<Polynomial> v(m.cols());
    v[j] = d;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, j);
    mpz_class g = 0;
    for (const auto& e : v) {
      mpz_class c = content(e);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g > 1)
      for (auto& e : v) e = divexact(e, g);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace humbert

#endif // HUMBERT_LINALG_HPP
