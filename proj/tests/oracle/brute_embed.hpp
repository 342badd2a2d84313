#pragma once

// Naive embedding enumerator used as a test oracle: every assignment of
// vectors of the right norm, checked pairwise, then reduced to a canonical
// form.  No symmetry breaking.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Matrix = std::vector<Vec>;  // rows are vertex images

inline std::vector<Vec> vectors_of_norm(std::int64_t norm, std::size_t rank) {
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) <= norm) ++bound;
  std::vector<Vec> out;
  Vec v(rank, -bound);
  for (;;) {
    std::int64_t s = 0;
    for (auto x : v) s += x * x;
    if (s == norm) out.push_back(v);
    std::size_t i = 0;
    while (i < rank && v[i] == bound) v[i++] = -bound;
    if (i == rank) break;
    ++v[i];
  }
  return out;
}

// Columns sign-normalised and sorted descending.
inline Matrix canonical(const Matrix& m) {
  const std::size_t rows = m.size(), cols = m.front().size();
  std::vector<Vec> c(cols, Vec(rows));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) c[j][i] = m[i][j];
    for (std::size_t i = 0; i < rows; ++i) {
      if (c[j][i] == 0) continue;
      if (c[j][i] < 0)
        for (auto& x : c[j]) x = -x;
      break;
    }
  }
  std::sort(c.begin(), c.end(), [](const Vec& a, const Vec& b) { return a > b; });
  Matrix out(rows, Vec(cols));
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) out[i][j] = c[j][i];
  return out;
}

inline std::set<Matrix> brute_force_embeddings(const std::vector<std::int64_t>& weights,
                                               std::size_t rank) {
  const std::size_t l = weights.size();
  std::vector<std::vector<Vec>> choices;
  for (auto w : weights) choices.push_back(vectors_of_norm(w, rank));
  std::set<Matrix> out;
  Matrix cur;
  auto dot = [](const Vec& a, const Vec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == l) {
      out.insert(canonical(cur));
      return;
    }
    for (const Vec& v : choices[i]) {
      bool ok = true;
      // -x.y must equal the Gram entry: 1 for neighbours, 0 otherwise.
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = dot(v, cur[j]) == (j + 1 == i ? -1 : 0);
      if (!ok) continue;
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace oracle
