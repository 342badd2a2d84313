#include "lensfill/families.hpp"

#include <stdexcept>

namespace lensfill {

namespace mp = boost::multiprecision;

std::string to_string(FamilyId f) {
  switch (f) {
    case FamilyId::Sec3: return "sec3";
    case FamilyId::Sec4: return "sec4";
    case FamilyId::Ex34: return "ex34";
    case FamilyId::Tange: return "tange";
    case FamilyId::FourNSq: return "four_n_sq";
  }
  return "?";
}

FamilyId family_from_string(const std::string& name) {
  for (FamilyId f : all_families())
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<FamilyId> all_families() {
  return {FamilyId::Sec3, FamilyId::Sec4, FamilyId::Ex34, FamilyId::Tange,
          FamilyId::FourNSq};
}

namespace {

void require(bool ok, FamilyId f) {
  if (!ok) throw std::invalid_argument("parameters out of range for family " + to_string(f));
}

void push_twos(std::vector<Int>& v, long k) {
  for (long i = 0; i < k; ++i) v.push_back(2);
}

}  // namespace

LensSpace family_member(FamilyId f, long m_in, long n_in) {
  const Int m = m_in, n = n_in;
  Int p, q;
  switch (f) {
    case FamilyId::Sec3:
      require(m_in >= 3 && n_in >= 1, f);
      p = 4 * m * m * n + 5 * m * m - 4 * m - 4;
      q = m * m * n + m * m - m - 1;
      break;
    case FamilyId::Sec4:
      require(m_in >= 0 && n_in >= 0, f);
      p = (m + 2) * (m + 2) * (m * m * n + 4 * m * n + 2 * m + 4 * n + 2);
      q = m * m * m * m * n + 7 * m * m * m * n + 2 * m * m * m + 17 * m * m * n +
          8 * m * m + 16 * m * n + 8 * m + 4 * n + 1;
      break;
    case FamilyId::Ex34:
      require(m_in >= 2 && n_in >= 1, f);
      p = m * m * n + m - 1;
      q = m * m * n - m * m + m - 1;
      break;
    case FamilyId::Tange:
      require(m_in >= 1, f);
      p = 35 * m * m + 21 * m + 3;
      q = 21 * m * m + 14 * m + 2;
      break;
    case FamilyId::FourNSq:
      require(n_in >= 1, f);
      p = 4 * n * n;
      q = 2 * n + 1;
      break;
  }
  if (mp::gcd(p, q) != 1)
    throw std::logic_error("family " + to_string(f) + " produced a non-coprime pair");
  return LensSpace(p, q);
}

std::optional<ContinuedFraction> expected_cf(FamilyId f, long m, long n) {
  std::vector<Int> v;
  switch (f) {
    case FamilyId::Sec3:
      require(m >= 3 && n >= 1, f);
      v.push_back(5);
      push_twos(v, n - 1);
      v.push_back(3);
      push_twos(v, m - 3);
      v.push_back(m + 2);
      break;
    case FamilyId::Sec4:
      require(m >= 0 && n >= 0, f);
      push_twos(v, m);
      if (n == 0) {
        v.push_back(2 * m + 8);
      } else {
        v.push_back(m + 5);
        push_twos(v, n - 1);
        v.push_back(m + 5);
      }
      push_twos(v, m);
      break;
    case FamilyId::Ex34:
      require(m >= 2 && n >= 1, f);
      push_twos(v, n - 1);
      v.push_back(m + 3);
      push_twos(v, m - 2);
      break;
    case FamilyId::Tange:
      require(m >= 1, f);
      v = {2, 3, Int(m + 1), 8};
      push_twos(v, m - 1);
      break;
    case FamilyId::FourNSq:
      require(n >= 1, f);
      return std::nullopt;
  }
  return ContinuedFraction(std::move(v));
}

std::optional<ContinuedFraction> expected_dual_cf(FamilyId f, long m, long n) {
  std::vector<Int> v;
  switch (f) {
    case FamilyId::Sec3:
      require(m >= 3 && n >= 1, f);
      v = {2, 2, 2, Int(n + 2), Int(m)};
      push_twos(v, m);
      break;
    case FamilyId::Sec4:
      require(m >= 0 && n >= 0, f);
      v.push_back(m + 2);
      push_twos(v, m + 2);
      v.push_back(n + 2);
      push_twos(v, m + 2);
      v.push_back(m + 2);
      break;
    case FamilyId::Ex34:
      require(m >= 2 && n >= 1, f);
      v.push_back(n + 1);
      push_twos(v, m);
      v.push_back(m);
      break;
    case FamilyId::Tange:
      require(m >= 1, f);
      if (m == 1) {
        v = {3, 4};
        push_twos(v, 6);
      } else {
        v = {3, 3};
        push_twos(v, m - 2);
        v.push_back(3);
        push_twos(v, 5);
        v.push_back(m + 1);
      }
      break;
    case FamilyId::FourNSq:
      require(n >= 1, f);
      return std::nullopt;
  }
  return ContinuedFraction(std::move(v));
}

CfCheck verify_cf_identities(FamilyId f, long m_lo, long m_hi, long n_lo, long n_hi) {
  CfCheck out;
  for (long m = m_lo; m <= m_hi; ++m)
    for (long n = n_lo; n <= n_hi; ++n) {
      const LensSpace l = family_member(f, m, n);
      const ContinuedFraction cf = hj_expand(l.p(), l.q());
      const ContinuedFraction dual = hj_expand(l.p(), l.p() - l.q());
      const std::string at = to_string(f) + "(" + std::to_string(m) + "," +
                             std::to_string(n) + ")";
      auto fail = [&](const std::string& what) {
        out.ok = false;
        out.detail = at + ": " + what;
      };
      if (hj_evaluate(cf) != Fraction{l.p(), l.q()} ||
          hj_evaluate(dual) != Fraction{l.p(), l.p() - l.q()}) {
        fail("expansion does not evaluate back");
        return out;
      }
      if (auto e = expected_cf(f, m, n); e && *e != cf) {
        fail("p/q = " + cf.to_string() + ", expected " + e->to_string());
        return out;
      }
      if (auto e = expected_dual_cf(f, m, n); e && *e != dual) {
        fail("p/(p-q) = " + dual.to_string() + ", expected " + e->to_string());
        return out;
      }
      if (f == FamilyId::Sec4) {
        const Int M = m, N = n;
        const Int gap = M * M * M * N + 7 * M * M * N + 2 * M * M + 16 * M * N + 8 * M + 12 * N + 7;
        if (l.p() - l.q() != gap) {
          fail("p - q = " + to_string(Int(l.p() - l.q())) + ", expected " + to_string(gap));
          return out;
        }
      }
    }
  return out;
}

Int tange_d_closed_form(const Int& l) { return 84 * l * l + 84 * l + 25; }

std::vector<Int> tange_square_hits(const Int& l_max) {
  std::vector<Int> hits;
  for (Int l = 1; l <= l_max; ++l)
    if (is_perfect_square(tange_d_closed_form(l))) hits.push_back(l);
  return hits;
}

}  // namespace lensfill
