#include "lensfill/intlin.hpp"

#include <stdexcept>
#include <utility>

namespace lensfill {

namespace mp = boost::multiprecision;

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c)
      throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
  return std::vector<Int>(data_.begin() + r * cols_,
                          data_.begin() + (r + 1) * cols_);
}

std::vector<Int> IntMatrix::col(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += " ";
      out += (*this)(r, c).str();
    }
    out += "]\n";
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("IntMatrix product: shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> d;
  const std::size_t n = std::min(S.rows(), S.cols());
  for (std::size_t i = 0; i < n; ++i) d.push_back(S(i, i));
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const Int& x : diagonal())
    if (x != 0) ++r;
  return r;
}

namespace {

// Position of the smallest nonzero |entry| in the block [t.., t..].
bool find_min_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr,
                    std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = mp::abs(a(i, j));
      if (!found || v < best) {
        found = true;
        best = v;
        pr = i;
        pc = j;
      }
    }
  return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_min_pivot(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    u.swap_rows(t, pr);
    a.swap_cols(t, pc);
    v.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int k = a(i, t) / a(t, t);
        a.add_row(i, t, -k);
        u.add_row(i, t, -k);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int k = a(t, j) / a(t, t);
        a.add_col(j, t, -k);
        v.add_col(j, t, -k);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it into place.
        Int best = mp::abs(a(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && mp::abs(a(i, t)) < best) {
            best = mp::abs(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && mp::abs(a(t, j)) < best) {
            best = mp::abs(a(t, j));
            bi = t;
            bj = j;
          }
        a.swap_rows(t, bi);
        u.swap_rows(t, bi);
        a.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the rest.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

Int AbelianGroup::torsion_order() const {
  Int o = 1;
  for (const Int& t : torsion) o *= t;
  return o;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  for (std::size_t i = 0; i < free_rank; ++i) out += out.empty() ? "Z" : " + Z";
  for (const Int& t : torsion) out += (out.empty() ? "Z/" : " + Z/") + t.str();
  return out;
}

AbelianGroup cokernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  AbelianGroup g;
  std::size_t r = 0;
  for (const Int& d : snf.diagonal()) {
    if (d == 0) continue;
    ++r;
    if (d != 1) g.torsion.push_back(d);
  }
  g.free_rank = m.rows() - r;
  return g;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    // Euclid down the column until one nonzero entry remains.
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = lead; i < a.rows(); ++i)
        if (a(i, c) != 0 && (best == a.rows() || mp::abs(a(i, c)) < mp::abs(a(best, c))))
          best = i;
      if (best == a.rows()) break;
      a.swap_rows(lead, best);
      bool done = true;
      for (std::size_t i = lead + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        a.add_row(i, lead, -(a(i, c) / a(lead, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(lead, c) == 0) continue;
    if (a(lead, c) < 0) a.negate_row(lead);
    for (std::size_t i = 0; i < lead; ++i)
      a.add_row(i, lead, -floor_div(a(i, c), a(lead, c)));
    ++lead;
  }
  IntMatrix out(lead, a.cols());
  for (std::size_t i = 0; i < lead; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  // Columns r.. of V span the kernel, and that span is saturated.
  IntMatrix basis(m.cols() - r, m.cols());
  for (std::size_t k = r; k < m.cols(); ++k)
    for (std::size_t j = 0; j < m.cols(); ++j) basis(k - r, j) = snf.V(j, k);
  IntMatrix h = hermite_normal_form(basis);
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < h.rows(); ++i) out.push_back(h.row(i));
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      a.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace lensfill
