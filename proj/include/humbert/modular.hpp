#ifndef HUMBERT_MODULAR_HPP
#define HUMBERT_MODULAR_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace humbert::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Arithmetic modulo an odd prime p < 2^63 in Montgomery form.
class Field {
public:
  explicit Field(u64 p) : p_(p) {
    u64 inv = p; // Newton iteration for p^-1 mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    u64 r = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<u64>(static_cast<u128>(r) * r % p);
  }

  u64 prime() const { return p_; }

  u64 to(u64 a) const { return redc(static_cast<u128>(a % p_) * r2_); }
  u64 from(u64 a) const { return redc(a); }

  u64 to(const mpz_class& a) const {
    u64 r = mpz_fdiv_ui(a.get_mpz_t(), p_);
    return to(r);
  }
  u64 to_signed(long a) const {
    if (a >= 0) return to(static_cast<u64>(a));
    return neg(to(static_cast<u64>(-a)));
  }

  u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 one() const { return to(1); }

  u64 pow(u64 a, u64 e) const {
    u64 r = one();
    while (e != 0) {
      if (e & 1u) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

private:
  u64 redc(u128 t) const {
    u64 m = static_cast<u64>(t) * neg_inv_;
    u128 s = t + static_cast<u128>(m) * p_;
    u64 r = static_cast<u64>(s >> 64);
    return r >= p_ ? r - p_ : r;
  }

  u64 p_;
  u64 neg_inv_;
  u64 r2_;
};

/// The n-th prime below 2^62 counting downwards (deterministic sequence).
inline u64 prime_at(std::size_t n) {
  static std::vector<u64> cache;
  mpz_class candidate = cache.empty() ? mpz_class(1) << 62 : mpz_class(std::to_string(cache.back()));
  while (cache.size() <= n) {
    mpz_class next;
    mpz_sub_ui(candidate.get_mpz_t(), candidate.get_mpz_t(), 1);
    for (;;) {
      if (mpz_odd_p(candidate.get_mpz_t()) && mpz_probab_prime_p(candidate.get_mpz_t(), 30) != 0) break;
      mpz_sub_ui(candidate.get_mpz_t(), candidate.get_mpz_t(), 1);
    }
    cache.push_back(mpz_get_ui(candidate.get_mpz_t()));
  }
  return cache[n];
}

/// Determinant of a dense row-major n x n matrix (entries in Montgomery form).
/// The matrix is destroyed.
inline u64 determinant(const Field& f, std::vector<u64>& a, std::size_t n) {
  u64 det = f.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = f.neg(det);
    }
    u64 pivot = a[k * n + k];
    det = f.mul(det, pivot);
    u64 pinv = f.inv(pivot);
    const u64* row_k = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      u64* row_i = &a[i * n];
      if (row_i[k] == 0) continue;
      u64 factor = f.mul(row_i[k], pinv);
      for (std::size_t j = k + 1; j < n; ++j)
        if (row_k[j] != 0) row_i[j] = f.sub(row_i[j], f.mul(factor, row_k[j]));
    }
  }
  return det;
}

/// Values at the nodes 0, 1, ..., n-1 (Montgomery form, in place) to monomial
/// coefficients c_0 .. c_{n-1}.
inline void interpolate(const Field& f, std::vector<u64>& values) {
  const std::size_t n = values.size();
  if (n <= 1) return;
  // Divided differences at integer nodes.
  std::vector<u64> inv_diff(n);
  for (std::size_t d = 1; d < n; ++d) inv_diff[d] = f.inv(f.to(static_cast<u64>(d)));
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      values[i] = f.mul(f.sub(values[i], values[i - 1]), inv_diff[level]);
      if (i == level) break;
    }
  // Newton form to monomial form: p = c0 + (x-0)(c1 + (x-1)(c2 + ...)).
  std::vector<u64> poly(n, 0);
  poly[0] = values[n - 1];
  std::size_t len = 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    u64 node = f.to(static_cast<u64>(k));
    // poly *= (x - node)
    poly[len] = 0;
    for (std::size_t j = len; j > 0; --j) poly[j] = f.sub(poly[j - 1], f.mul(node, poly[j]));
    poly[0] = f.neg(f.mul(node, poly[0]));
    ++len;
    poly[0] = f.add(poly[0], values[k]);
  }
  values = std::move(poly);
}

/// Incremental Chinese remaindering of a vector of integers.
class CrtAccumulator {
public:
  explicit CrtAccumulator(std::size_t size) : values_(size, 0), modulus_(1) {}

  /// residues are plain (non-Montgomery) values mod p.
  void add(u64 p, const std::vector<u64>& residues) {
    const Field f(p);
    u64 m_mod = mpz_fdiv_ui(modulus_.get_mpz_t(), p);
    u64 m_inv = f.from(f.inv(f.to(m_mod)));
    mpz_class tmp;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      u64 cur = mpz_fdiv_ui(values_[i].get_mpz_t(), p);
      u64 diff = residues[i] >= cur ? residues[i] - cur : residues[i] + p - cur;
      u64 t = static_cast<u64>(static_cast<u128>(diff) * m_inv % p);
      if (t != 0) mpz_addmul_ui(values_[i].get_mpz_t(), modulus_.get_mpz_t(), t);
    }
    modulus_ *= mpz_class(static_cast<unsigned long>(p));
  }

  const mpz_class& modulus() const { return modulus_; }

  /// Values mapped to the symmetric range (-M/2, M/2].
  std::vector<mpz_class> symmetric() const {
    std::vector<mpz_class> out = values_;
    mpz_class half = modulus_ / 2;
    for (auto& v : out)
      if (v > half) v -= modulus_;
    return out;
  }

private:
  std::vector<mpz_class> values_;
  mpz_class modulus_;
};

} // namespace humbert::modular

#endif // HUMBERT_MODULAR_HPP
