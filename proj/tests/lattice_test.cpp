#include <numeric>
#include <gtest/gtest.h>

#include "lensfill/lattice.hpp"

using namespace lensfill;

namespace {

// Determinant of the chain's Gram matrix by cofactor expansion along the
// last row: D_k = -a_k D_{k-1} - D_{k-2}.
Int tridiagonal_det(const ChainLattice& c) {
  Int prev = 1, cur = -c.weight(0);
  for (std::size_t k = 1; k < c.size(); ++k) {
    Int next = -c.weight(k) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST(ChainLattice, GramMatrix) {
  ChainLattice c = ChainLattice::from_lens(LensSpace(7, 3));
  EXPECT_EQ(c.gram_matrix(), IntMatrix::from_rows({{-3, 1, 0}, {1, -2, 1}, {0, 1, -2}}));
  EXPECT_THROW(c.gram(0, 3), std::out_of_range);
}

TEST(ChainLattice, DeterminantIsP) {
  for (int p = 2; p <= 120; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ChainLattice c = ChainLattice::from_lens(LensSpace(p, q));
      const Int sign = c.size() % 2 ? -1 : 1;
      ASSERT_EQ(determinant(c.gram_matrix()), sign * p);
      ASSERT_EQ(tridiagonal_det(c), sign * p);
    }
}

TEST(ChainLattice, CokernelIsCyclic) {
  // The discriminant group of the plumbing is H1 of the lens space.
  for (int p = 2; p <= 60; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      AbelianGroup g = cokernel(ChainLattice::from_lens(LensSpace(p, q)).gram_matrix());
      ASSERT_EQ(g.free_rank, 0u);
      ASSERT_EQ(g.torsion, (std::vector<Int>{p}));
    }
}

TEST(DiagVector, Pairing) {
  DiagVector a(std::vector<Int>{1, -1, 0}), b(std::vector<Int>{0, 1, -1});
  EXPECT_EQ(pairing(a, b), 1);
  EXPECT_EQ(a.square(), -2);
  EXPECT_EQ(pairing(a, a), a.square());
  EXPECT_THROW(pairing(a, DiagVector(2)), std::invalid_argument);
  EXPECT_EQ(DiagVector(std::vector<Int>{2, 0, -1, 1}).to_string(), "2e1 - e3 + e4");
  EXPECT_EQ(DiagVector(std::vector<Int>{0, -3}).to_string(), "-3e2");
  EXPECT_EQ(DiagVector(3).to_string(), "0");
}
