#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lensfill/arith.hpp"
#include "lensfill/intlin.hpp"

namespace lensfill {

// The linear plumbing lattice of a chain of spheres with self-intersections
// -a1, ..., -al.  Its Gram matrix has -ai on the diagonal and 1 between
// neighbours, and |det| = p when the weights expand p/q.
class ChainLattice {
 public:
  ChainLattice() = default;
  explicit ChainLattice(ContinuedFraction weights);
  static ChainLattice from_lens(const LensSpace& lens);

  const ContinuedFraction& weights() const { return weights_; }
  const Int& weight(std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }

  // Gram entry between vertices i and j.
  Int gram(std::size_t i, std::size_t j) const;
  IntMatrix gram_matrix() const;

  friend bool operator==(const ChainLattice&, const ChainLattice&) = default;

 private:
  ContinuedFraction weights_;
};

// Element of the negative diagonal lattice -Z^N in coordinates e1..eN.
class DiagVector {
 public:
  DiagVector() = default;
  explicit DiagVector(std::size_t n) : coords_(n) {}
  explicit DiagVector(std::vector<Int> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  const std::vector<Int>& coords() const { return coords_; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const Int& operator[](std::size_t i) const { return coords_[i]; }

  // Self-pairing, always <= 0.
  Int square() const;
  // "e1 - e2 + 2e5"; "0" for the zero vector.
  std::string to_string() const;

  friend auto operator<=>(const DiagVector&, const DiagVector&) = default;
  friend bool operator==(const DiagVector&, const DiagVector&) = default;

 private:
  std::vector<Int> coords_;
};

// -sum xi yi.  Throws std::invalid_argument on rank mismatch.
Int pairing(const DiagVector& x, const DiagVector& y);

}  // namespace lensfill
