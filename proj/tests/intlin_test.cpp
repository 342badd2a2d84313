#include <gtest/gtest.h>

#include <random>

#include "lensfill/intlin.hpp"

using namespace lensfill;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<int> d(-range, range);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Laplace expansion; only for tiny matrices.
Int laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    s += (j % 2 ? -1 : 1) * m(0, j) * laplace_det(minor);
  }
  return s;
}

void check_smith(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  ASSERT_EQ(f.U * m * f.V, f.S);
  ASSERT_EQ(boost::multiprecision::abs(determinant(f.U)), 1);
  ASSERT_EQ(boost::multiprecision::abs(determinant(f.V)), 1);
  for (std::size_t i = 0; i < f.S.rows(); ++i)
    for (std::size_t j = 0; j < f.S.cols(); ++j)
      if (i != j) ASSERT_EQ(f.S(i, j), 0);
  const auto d = f.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    ASSERT_GE(d[i], 0);
    if (i + 1 < d.size()) {
      if (d[i] == 0)
        ASSERT_EQ(d[i + 1], 0);
      else
        ASSERT_EQ(d[i + 1] % d[i], 0);
    }
  }
}

}  // namespace

TEST(Smith, Diagonal) {
  IntMatrix m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  SmithForm f = smith_normal_form(m);
  EXPECT_EQ(f.diagonal(), (std::vector<Int>{2, 6, 12}));
  EXPECT_EQ(f.U * m * f.V, f.S);
}

TEST(Smith, FuzzShapes) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    check_smith(random_matrix(rng, r, c, trial % 2 ? 3 : 40));
  }
}

TEST(Smith, FuzzRankDeficient) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = random_matrix(rng, 5, 2, 5), b = random_matrix(rng, 2, 5, 5);
    IntMatrix m = a * b;
    check_smith(m);
    EXPECT_LE(smith_normal_form(m).rank(), 2u);
  }
}

TEST(Smith, ProductOfDiagonalIsDeterminant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, n, n, 9);
    Int prod = 1;
    for (const Int& d : smith_normal_form(m).diagonal()) prod *= d;
    ASSERT_EQ(prod, boost::multiprecision::abs(laplace_det(m)));
  }
}

TEST(Determinant, MatchesLaplace) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 6;
    IntMatrix m = random_matrix(rng, n, n, trial % 3 ? 2 : 50);
    ASSERT_EQ(determinant(m), laplace_det(m));
  }
  EXPECT_THROW(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Cokernel, Examples) {
  EXPECT_EQ(cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}})).to_string(), "Z/6");
  EXPECT_EQ(cokernel(IntMatrix::from_rows({{2}, {0}})).to_string(), "Z + Z/2");
  EXPECT_TRUE(cokernel(IntMatrix::identity(3)).trivial());
  AbelianGroup g = cokernel(IntMatrix::from_rows({{4, 0, 0}, {0, 6, 0}, {0, 0, 0}}));
  EXPECT_EQ(g.free_rank, 1u);
  EXPECT_EQ(g.torsion, (std::vector<Int>{2, 12}));
}

TEST(Cokernel, OrderIsDeterminant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, n, n, 6);
    const Int det = boost::multiprecision::abs(determinant(m));
    AbelianGroup g = cokernel(m);
    if (det == 0)
      ASSERT_GT(g.free_rank, 0u);
    else
      ASSERT_EQ(g.torsion_order(), det);
  }
}

TEST(Kernel, Properties) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
    IntMatrix m = random_matrix(rng, r, c, 4);
    auto k = integer_kernel(m);
    ASSERT_EQ(k.size() + smith_normal_form(m).rank(), c);
    for (const auto& v : k) {
      Int g = 0;
      for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
      ASSERT_EQ(g, 1);
      auto first = std::find_if(v.begin(), v.end(), [](const Int& x) { return x != 0; });
      ASSERT_NE(first, v.end());
      ASSERT_GT(*first, 0);
      for (std::size_t i = 0; i < r; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
        ASSERT_EQ(s, 0);
      }
    }
    // Saturation: the kernel basis spans a primitive sublattice, so its
    // Smith diagonal is all ones.
    if (!k.empty()) {
      for (const Int& d : smith_normal_form(IntMatrix::from_rows(k)).diagonal())
        ASSERT_EQ(d, 1);
    }
  }
}

TEST(Kernel, Corank1Example) {
  IntMatrix m = IntMatrix::from_rows({{1, -1, 0}, {0, 1, -1}});
  auto k = integer_kernel(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (std::vector<Int>{1, 1, 1}));
}

TEST(Hermite, Deterministic) {
  IntMatrix a = IntMatrix::from_rows({{2, 4}, {3, 5}});
  IntMatrix b = IntMatrix::from_rows({{5, 9}, {3, 5}});  // same row lattice
  EXPECT_EQ(hermite_normal_form(a), hermite_normal_form(b));
  EXPECT_EQ(hermite_normal_form(a), IntMatrix::from_rows({{1, 1}, {0, 2}}));
}
