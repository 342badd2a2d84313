#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lensfill/arith.hpp"

namespace lensfill {

// Dense row-major matrix over the integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Rows must all have the same length.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Int> row(std::size_t r) const;
  std::vector<Int> col(std::size_t c) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& k);
  void add_col(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t r);

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ..., all
// diagonal entries non-negative.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::vector<Int> diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Z^free_rank + Z/t1 + ... with every ti > 1 and t1 | t2 | ...
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  Int torsion_order() const;
  std::string to_string() const;  // "0", "Z", "Z/2", "Z + Z/3 + Z/6"

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Z^rows / (column span of m).
AbelianGroup cokernel(const IntMatrix& m);

// Row-style Hermite normal form of the row lattice: echelon rows with
// positive pivots, entries above each pivot reduced into [0, pivot).  Zero
// rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& m);

// Basis of {x in Z^cols : m x = 0}.  The basis is Hermite normalized, so
// each vector is primitive and has a positive first nonzero coordinate.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m);

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& m);

}  // namespace lensfill
