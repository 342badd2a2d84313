#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lensfill {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Int& x);
std::string to_string(const Rational& x);  // "a/b", or "a" when integral

// Floor division and the matching non-negative remainder for b > 0.
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// L(p, q) with p >= 2, 0 < q < p and gcd(p, q) = 1.  Throws
// std::invalid_argument otherwise.
class LensSpace {
 public:
  LensSpace(Int p, Int q);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  // L(p, p - q), the space whose chain is the Riemenschneider dual.
  LensSpace dual() const;
  // L(p, q') with q q' = 1 mod p; same space, reversed chain.
  LensSpace inverse() const;

  std::string to_string() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  Int p_;
  Int q_;
};

// Hirzebruch-Jung continued fraction [a1, ..., al], every ai >= 2.
class ContinuedFraction {
 public:
  ContinuedFraction() = default;
  explicit ContinuedFraction(std::vector<Int> entries);

  const std::vector<Int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Int& operator[](std::size_t i) const { return entries_[i]; }

  ContinuedFraction reversed() const;
  std::string to_string() const;  // "[2, 3, 2]"

  friend bool operator==(const ContinuedFraction&,
                         const ContinuedFraction&) = default;

 private:
  std::vector<Int> entries_;
};

struct Fraction {
  Int num;
  Int den;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

ContinuedFraction hj_expand(const Int& p, const Int& q);
Fraction hj_evaluate(const ContinuedFraction& cf);

// Inverse of a modulo n in [0, n).  Throws std::domain_error when
// gcd(a, n) != 1.
Int mod_inverse(const Int& a, const Int& n);

// Whether x is congruent to a square modulo p (p >= 1), by exhaustive
// search over residues.
bool is_quadratic_residue(const Int& x, const Int& p);

// (a, b) with a <= b, a^2 + b^2 = n and a as small as possible.
std::optional<std::pair<Int, Int>> sum_of_two_squares(const Int& n);

bool is_perfect_square(const Int& n);

// A cyclic quotient singularity of type (n, a): n/a = [b1, ..., bm] and
// a * a_prime = 1 mod n.
struct SingularityData {
  Int n;
  Int a;
  Int a_prime;
  std::vector<Int> b;

  // Fills in a_prime and b from (n, a).
  static SingularityData from_type(const Int& n, const Int& a);
};

struct DSquareResult {
  Rational value;
  bool passes = false;  // value is the square of a rational
};

// Throws std::invalid_argument on inconsistent data.
DSquareResult d_square_obstruction(const SingularityData& data);

}  // namespace lensfill
