#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

// floor(a / b) for b != 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Truncating quotient; keeps |remainder| < |b|.
BigInt trunc_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

// --- IntMatrix -----------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw InvalidArgument("ragged matrix rows");
    std::size_t j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw InvalidArgument("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, cols[j]);
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

void IntMatrix::swap_columns(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::add_column_multiple(std::size_t j, std::size_t i, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) += factor * (*this)(r, i);
}

void IntMatrix::add_row_multiple(std::size_t j, std::size_t i, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(j, c) += factor * (*this)(i, c);
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_row(std::size_t j) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(j, c) = -(*this)(j, c);
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidArgument("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<BigInt> IntMatrix::operator*(std::span<const BigInt> v) const {
  if (cols_ != v.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << "]\n";
  }
  return out.str();
}

// --- Hermite -------------------------------------------------------------

IntMatrix HermiteForm::basis() const {
  std::vector<std::size_t> cols(rank);
  for (std::size_t j = 0; j < rank; ++j) cols[j] = j;
  return h.select_columns(cols);
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& t = out.transform;
  const std::size_t cols = m.cols();
  std::size_t k = 0;

  for (std::size_t i = 0; i < m.rows() && k < cols; ++i) {
    // Euclid along row i over columns k.. until one nonzero entry remains.
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = k; j < cols; ++j) {
        if (h(i, j) != 0 && (best == cols || abs(h(i, j)) < abs(h(i, best)))) best = j;
      }
      if (best == cols) break;
      h.swap_columns(k, best);
      t.swap_columns(k, best);
      bool reduced = true;
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (h(i, j) == 0) continue;
        BigInt q = -floor_div(h(i, j), h(i, k));
        h.add_column_multiple(j, k, q);
        t.add_column_multiple(j, k, q);
        if (h(i, j) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) {
      h.negate_column(k);
      t.negate_column(k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      BigInt q = -floor_div(h(i, j), h(i, k));
      h.add_column_multiple(j, k, q);
      t.add_column_multiple(j, k, q);
    }
    out.pivot_rows.push_back(i);
    ++k;
  }
  out.rank = k;
  return out;
}

std::optional<std::vector<BigInt>> hermite_coordinates(const HermiteForm& hnf,
                                                       std::span<const BigInt> target) {
  const IntMatrix& h = hnf.h;
  if (target.size() != h.rows()) throw InvalidArgument("target length mismatch");
  std::vector<BigInt> residual(target.begin(), target.end());
  std::vector<BigInt> coords(hnf.rank);
  for (std::size_t k = 0; k < hnf.rank; ++k) {
    std::size_t p = hnf.pivot_rows[k];
    // Rows above the pivot must already be cleared.
    std::size_t from = k == 0 ? 0 : hnf.pivot_rows[k - 1] + 1;
    for (std::size_t r = from; r < p; ++r) {
      if (residual[r] != 0) return std::nullopt;
    }
    if (!mpz_divisible_p(residual[p].get_mpz_t(), h(p, k).get_mpz_t())) return std::nullopt;
    coords[k] = residual[p] / h(p, k);
    if (coords[k] != 0) {
      for (std::size_t r = p; r < h.rows(); ++r) residual[r] -= coords[k] * h(r, k);
    }
  }
  for (const BigInt& x : residual) {
    if (x != 0) return std::nullopt;
  }
  return coords;
}

bool in_column_lattice(const IntMatrix& m, std::span<const BigInt> target) {
  return hermite_coordinates(hermite_normal_form(m), target).has_value();
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

IntMatrix integer_kernel(const IntMatrix& m) {
  HermiteForm hnf = hermite_normal_form(m);
  std::vector<std::size_t> cols;
  for (std::size_t j = hnf.rank; j < m.cols(); ++j) cols.push_back(j);
  return hnf.transform.select_columns(cols);
}

// --- Smith ---------------------------------------------------------------

std::size_t SmithForm::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt& d) { return d != 0; }));
}

BigInt SmithForm::nonzero_product() const {
  BigInt p = 1;
  for (const BigInt& d : diagonal) {
    if (d != 0) p *= d;
  }
  return p;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t steps = std::min(rows, cols);

  auto move_to_pivot = [&](std::size_t t, std::size_t r, std::size_t c) {
    d.swap_rows(t, r);
    u.swap_rows(t, r);
    d.swap_columns(t, c);
    v.swap_columns(t, c);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t br = rows, bc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 && (br == rows || abs(d(i, j)) < abs(d(br, bc)))) {
          br = i;
          bc = j;
        }
    if (br == rows) break;
    move_to_pivot(t, br, bc);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = -trunc_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = -trunc_div(d(t, j), d(t, t));
        d.add_column_multiple(j, t, q);
        v.add_column_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t br2 = t, bc2 = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(br2, bc2))) {
            br2 = i;
            bc2 = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(br2, bc2))) {
            br2 = t;
            bc2 = j;
          }
        move_to_pivot(t, br2, bc2);
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      d.add_row_multiple(t, bad_row, 1);
      u.add_row_multiple(t, bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithForm out;
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = d(t, t);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

BigInt saturation_index(const IntMatrix& generators) {
  return smith_normal_form(generators).nonzero_product();
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_with = i;
          break;
        }
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BigInt gcd_of(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const BigInt& x : values) g = gcd(g, x);
  return g;
}

}  // namespace toric
