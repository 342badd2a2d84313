#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lensfill/arith.hpp"

namespace lensfill {

// Parametrised lens space families.  Parameter ranges:
//   sec3: m >= 3, n >= 1      sec4: m, n >= 0
//   ex34: m >= 2, n >= 1      tange: m = l >= 1, n unused
//   four_n_sq: n >= 1 giving L(4n^2, 2n + 1), m unused
enum class FamilyId { Sec3, Sec4, Ex34, Tange, FourNSq };

std::string to_string(FamilyId f);
FamilyId family_from_string(const std::string& name);
std::vector<FamilyId> all_families();

// (p, q) of the family member.  Throws std::invalid_argument outside the
// parameter range.
LensSpace family_member(FamilyId f, long m, long n = 0);

// Closed-form continued fractions of the member and of its dual L(p, p - q).
// Empty when the family has no closed form for that side.
std::optional<ContinuedFraction> expected_cf(FamilyId f, long m, long n = 0);
std::optional<ContinuedFraction> expected_dual_cf(FamilyId f, long m, long n = 0);

struct CfCheck {
  bool ok = true;
  std::string detail;  // first mismatch, if any
};

// Compares hj_expand with the closed forms (and the evaluation round trip)
// for every (m, n) in [m_lo, m_hi] x [n_lo, n_hi].
CfCheck verify_cf_identities(FamilyId f, long m_lo, long m_hi, long n_lo = 0,
                             long n_hi = 0);

// 84 l^2 + 84 l + 25, the value of the square test for tange(l) on the
// singularity of type (p, p - q).
Int tange_d_closed_form(const Int& l);

// Every l in [1, l_max] for which that value is a perfect square.
std::vector<Int> tange_square_hits(const Int& l_max);

}  // namespace lensfill
