#pragma once

#include <string>
#include <vector>

#include "lensfill/arith.hpp"

namespace lensfill {

// Which oriented manifold L(p, q) names.
//  NegativeSurgery: -p/q surgery on the unknot (the toolkit default).
//  PositiveSurgery: p/q surgery on the unknot, the orientation in which
//    d(1, 0, 0) = 0 and d(p, q, i) = -1/4 + (2i + 1 - p - q)^2 / (4pq)
//    - d(q, p mod q, i mod q).
enum class Orientation { NegativeSurgery, PositiveSurgery };

// d-invariant of the spin^c structure with label i in [0, p).
Rational d_invariant(const LensSpace& lens, const Int& label,
                     Orientation o = Orientation::NegativeSurgery);

// Image of label i under conjugation, (q - 1 - i) mod p.
Int conjugate_label(const LensSpace& lens, const Int& label);

// Self-conjugate labels in increasing order: two when p is even, one
// when p is odd.
std::vector<Int> spin_structures(const LensSpace& lens);

struct SpinD {
  Int label;
  Rational d;
  friend bool operator==(const SpinD&, const SpinD&) = default;
};

std::vector<SpinD> spin_d_values(const LensSpace& lens,
                                 Orientation o = Orientation::NegativeSurgery);

// Whether L(p, q) can bound a smooth W with H1(W) = 0 and intersection
// form (p), for even p.  Such a W has spin^c structures s0 (c1 = 0) and
// sp (c1^2 = p) restricting to the two spin structures, so one labelling
// of those must satisfy
//   d(s0) <= -1/4 and d(s0) = -1/4 mod 2,
//   d(sp) <= (p - 1)/4 and d(sp) = (p - 1)/4 mod 2.
// The topological test asks that -q be a square mod p.
struct SpinVerdict {
  bool applicable = false;  // p even
  std::vector<SpinD> values;
  bool d_obstructed = false;
  bool qr_obstructed = false;
  bool obstructed() const { return d_obstructed || qr_obstructed; }
  std::string notes;

  friend bool operator==(const SpinVerdict&, const SpinVerdict&) = default;
};

SpinVerdict spin_obstruction(const LensSpace& lens);

}  // namespace lensfill
