#include "lensfill/arith.hpp"

#include <stdexcept>


namespace lensfill {

namespace mp = boost::multiprecision;

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += b;
  return r;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

LensSpace::LensSpace(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 2) throw std::invalid_argument("lens space needs p >= 2");
  if (q_ <= 0 || q_ >= p_)
    throw std::invalid_argument("lens space needs 0 < q < p");
  if (mp::gcd(p_, q_) != 1)
    throw std::invalid_argument("lens space needs gcd(p, q) = 1");
}

LensSpace LensSpace::dual() const { return LensSpace(p_, p_ - q_); }

LensSpace LensSpace::inverse() const {
  return LensSpace(p_, mod_inverse(q_, p_));
}

std::string LensSpace::to_string() const {
  return "L(" + p_.str() + "," + q_.str() + ")";
}

ContinuedFraction::ContinuedFraction(std::vector<Int> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("continued fraction must be non-empty");
  for (const Int& a : entries_)
    if (a < 2)
      throw std::invalid_argument("continued fraction entries must be >= 2");
}

ContinuedFraction ContinuedFraction::reversed() const {
  return ContinuedFraction(
      std::vector<Int>(entries_.rbegin(), entries_.rend()));
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].str();
  }
  return out + "]";
}

ContinuedFraction hj_expand(const Int& p, const Int& q) {
  if (q <= 0 || p <= q)
    throw std::invalid_argument("hj_expand needs p > q > 0");
  if (mp::gcd(p, q) != 1)
    throw std::invalid_argument("hj_expand needs gcd(p, q) = 1");
  std::vector<Int> out;
  Int a = p, b = q;
  while (b != 0) {
    Int c = ceil_div(a, b);
    out.push_back(c);
    Int next = c * b - a;
    a = b;
    b = next;
  }
  return ContinuedFraction(std::move(out));
}

Fraction hj_evaluate(const ContinuedFraction& cf) {
  if (cf.size() == 0)
    throw std::invalid_argument("hj_evaluate of an empty continued fraction");
  // Fold from the right: x = a - 1/x.
  Int num = cf.entries().back();
  Int den = 1;
  for (std::size_t i = cf.size() - 1; i-- > 0;) {
    Int next = cf[i] * num - den;
    den = num;
    num = next;
  }
  return {num, den};
}

Int mod_inverse(const Int& a, const Int& n) {
  if (n < 1) throw std::invalid_argument("mod_inverse needs n >= 1");
  Int r0 = n, r1 = mod_floor(a, n);
  Int s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int quo = r0 / r1;
    Int r2 = r0 - quo * r1;
    r0 = r1;
    r1 = r2;
    Int s2 = s0 - quo * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("mod_inverse: not invertible");
  return mod_floor(s0, n);
}

bool is_quadratic_residue(const Int& x, const Int& p) {
  if (p < 1) throw std::invalid_argument("is_quadratic_residue needs p >= 1");
  const Int target = mod_floor(x, p);
  // y^2 mod p for y = 0, 1, ..., p / 2 via (y + 1)^2 = y^2 + 2y + 1.
  Int sq = 0;
  Int step = 1;
  for (Int y = 0; 2 * y <= p; ++y) {
    if (sq == target) return true;
    sq += step;
    step += 2;
    while (sq >= p) sq -= p;
    while (step >= p) step -= p;
  }
  return false;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int r = mp::sqrt(n);
  return r * r == n;
}

std::optional<std::pair<Int, Int>> sum_of_two_squares(const Int& n) {
  if (n < 0) return std::nullopt;
  for (Int a = 0; 2 * a * a <= n; ++a) {
    Int rest = n - a * a;
    Int b = mp::sqrt(rest);
    if (b * b == rest) return std::make_pair(a, b);
  }
  return std::nullopt;
}

SingularityData SingularityData::from_type(const Int& n, const Int& a) {
  if (!(n > a && a > 0))
    throw std::invalid_argument("singularity type needs n > a > 0");
  SingularityData out;
  out.n = n;
  out.a = a;
  out.a_prime = mod_inverse(a, n);
  out.b = hj_expand(n, a).entries();
  return out;
}

DSquareResult d_square_obstruction(const SingularityData& d) {
  if (!(d.n > d.a && d.a > 0))
    throw std::invalid_argument("singularity type needs n > a > 0");
  if (mod_floor(d.a * d.a_prime, d.n) != 1 || d.a_prime <= 0 ||
      d.a_prime >= d.n)
    throw std::invalid_argument("a_prime is not the inverse of a mod n");
  if (d.b.empty() || hj_evaluate(ContinuedFraction(d.b)) != Fraction{d.n, d.a})
    throw std::invalid_argument("b is not the expansion of n/a");

  const Int m = d.b.size();
  Int sum_b = 0;
  for (const Int& x : d.b) sum_b += x;
  // n * (9 - 3m + sum(b) - 2 + (a + a' + 2) / n); the bracket times n is
  // an integer.
  Int value = d.n * (7 - 3 * m + sum_b) + d.a + d.a_prime + 2;
  DSquareResult out;
  out.value = Rational(value);
  out.passes = is_perfect_square(value);
  return out;
}

}  // namespace lensfill
