#include "lensfill/lattice.hpp"

#include <stdexcept>

namespace lensfill {

ChainLattice::ChainLattice(ContinuedFraction weights)
    : weights_(std::move(weights)) {
  if (weights_.size() == 0)
    throw std::invalid_argument("chain lattice needs at least one vertex");
}

ChainLattice ChainLattice::from_lens(const LensSpace& lens) {
  return ChainLattice(hj_expand(lens.p(), lens.q()));
}

Int ChainLattice::gram(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size())
    throw std::out_of_range("chain vertex index");
  if (i == j) return -weights_[i];
  if (i + 1 == j || j + 1 == i) return 1;
  return 0;
}

IntMatrix ChainLattice::gram_matrix() const {
  IntMatrix g(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) g(i, j) = gram(i, j);
  return g;
}

Int DiagVector::square() const { return pairing(*this, *this); }

std::string DiagVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Int& c = coords_[i];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += mag.str();
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Int pairing(const DiagVector& x, const DiagVector& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pairing of vectors of different rank");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s -= x[i] * y[i];
  return s;
}

}  // namespace lensfill
