#include "lensfill/dinv.hpp"

#include <stdexcept>

namespace lensfill {

namespace mp = boost::multiprecision;

namespace {

Rational d_recursive(const Int& p, const Int& q, const Int& i) {
  if (p == 1) return Rational(0);
  const Int t = 2 * i + 1 - p - q;
  Rational head = Rational(-1, 4) + Rational(t * t, 4 * p * q);
  return head - d_recursive(q, mod_floor(p, q), mod_floor(i, q));
}

// r is congruent to target mod 2 as rationals.
bool congruent_mod_2(const Rational& r, const Rational& target) {
  Rational diff = (r - target) / 2;
  return mp::denominator(diff) == 1;
}

}  // namespace

Rational d_invariant(const LensSpace& lens, const Int& label, Orientation o) {
  if (label < 0 || label >= lens.p())
    throw std::invalid_argument("spin^c label out of range");
  Rational d = d_recursive(lens.p(), lens.q(), label);
  return o == Orientation::PositiveSurgery ? d : Rational(-d);
}

Int conjugate_label(const LensSpace& lens, const Int& label) {
  return mod_floor(lens.q() - 1 - label, lens.p());
}

std::vector<Int> spin_structures(const LensSpace& lens) {
  std::vector<Int> out;
  for (Int i = 0; i < lens.p(); ++i)
    if (conjugate_label(lens, i) == i) out.push_back(i);
  return out;
}

std::vector<SpinD> spin_d_values(const LensSpace& lens, Orientation o) {
  std::vector<SpinD> out;
  for (const Int& i : spin_structures(lens)) out.push_back({i, d_invariant(lens, i, o)});
  return out;
}

SpinVerdict spin_obstruction(const LensSpace& lens) {
  SpinVerdict v;
  v.qr_obstructed = !is_quadratic_residue(-lens.q(), lens.p());
  if (lens.p() % 2 != 0) {
    v.notes = "p is odd; the spin test does not apply";
    if (v.qr_obstructed) v.notes += "; -q is not a square mod p";
    return v;
  }
  v.applicable = true;
  v.values = spin_d_values(lens);
  if (v.values.size() != 2)
    throw std::logic_error("even p must give exactly two spin structures");

  const Rational zero_bound(-1, 4);
  const Rational p_bound(lens.p() - 1, 4);
  auto fits = [&](const Rational& d0, const Rational& dp) {
    return d0 <= zero_bound && congruent_mod_2(d0, zero_bound) && dp <= p_bound &&
           congruent_mod_2(dp, p_bound);
  };
  const Rational& a = v.values[0].d;
  const Rational& b = v.values[1].d;
  v.d_obstructed = !fits(a, b) && !fits(b, a);
  v.notes = v.d_obstructed
                ? "no labelling of the spin structures meets the bounds for c1 = 0 and c1^2 = p"
                : "the spin d-invariants are compatible with a definite filling";
  if (v.qr_obstructed) v.notes += "; -q is not a square mod p";
  return v;
}

}  // namespace lensfill
