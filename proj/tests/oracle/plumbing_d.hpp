#pragma once

// d-invariants of a lens space from its negative-definite linear plumbing:
// for each spin^c structure, the maximum of (K^2 + l) / 4 over characteristic
// vectors K in that class.  Independent of the recursive formula.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "lensfill/arith.hpp"

namespace oracle {

using lensfill::Int;
using lensfill::Rational;

inline std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (a[r][c] == 0) ++r;
    std::swap(a[r], a[c]);
    std::swap(inv[r], inv[c]);
    const Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Sorted d-values, one per spin^c class found.
inline std::vector<Rational> plumbing_d_values(const std::vector<std::int64_t>& weights) {
  const std::size_t l = weights.size();
  std::vector<std::vector<Rational>> q(l, std::vector<Rational>(l));
  for (std::size_t i = 0; i < l; ++i) {
    q[i][i] = -weights[i];
    if (i + 1 < l) q[i][i + 1] = q[i + 1][i] = 1;
  }
  // det Q and the integer matrix det * Q^-1.
  Rational det = 1;
  {
    auto a = q;
    for (std::size_t c = 0; c < l; ++c) {
      det *= a[c][c];
      for (std::size_t r = c + 1; r < l; ++r) {
        const Rational f = a[r][c] / a[c][c];
        for (std::size_t j = c; j < l; ++j) a[r][j] -= f * a[c][j];
      }
    }
  }
  const auto qinv = rational_inverse(q);
  const std::int64_t d = boost::multiprecision::numerator(det).convert_to<std::int64_t>();
  std::vector<std::vector<std::int64_t>> adj(l, std::vector<std::int64_t>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const Rational x = qinv[i][j] * det;
      adj[i][j] = boost::multiprecision::numerator(x).convert_to<std::int64_t>();
    }
  const std::int64_t modulus = 2 * (d < 0 ? -d : d);
  // Keyed by adj K mod 2|det|, i.e. Q^-1 K / 2 mod Z^l; value is K^T adj K.
  std::map<std::vector<std::int64_t>, std::int64_t> best;
  std::vector<std::int64_t> k(l), y(l), key(l);
  for (std::size_t i = 0; i < l; ++i) k[i] = -weights[i];
  for (;;) {
    std::int64_t sq = 0;
    for (std::size_t i = 0; i < l; ++i) {
      y[i] = 0;
      for (std::size_t j = 0; j < l; ++j) y[i] += adj[i][j] * k[j];
      sq += y[i] * k[i];
      key[i] = ((y[i] % modulus) + modulus) % modulus;
    }
    // K^2 = sq / d; larger K^2 means larger d-value.
    auto it = best.find(key);
    if (it == best.end())
      best.emplace(key, sq);
    else if ((d > 0 && sq > it->second) || (d < 0 && sq < it->second))
      it->second = sq;
    std::size_t i = 0;
    while (i < l && k[i] + 2 > weights[i]) {
      k[i] = -weights[i];
      ++i;
    }
    if (i == l) break;
    k[i] += 2;
  }
  std::vector<Rational> out;
  for (auto& [key_, sq] : best) out.push_back((Rational(sq) / d + static_cast<long>(l)) / 4);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
