#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

using BigInt = mpz_class;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  // Matrix whose columns are the given vectors, all of length `rows`.
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<BigInt> column(std::size_t c) const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  // Column operations used by the normal-form routines.
  void swap_columns(std::size_t i, std::size_t j);
  void swap_rows(std::size_t i, std::size_t j);
  // column j += factor * column i
  void add_column_multiple(std::size_t j, std::size_t i, const BigInt& factor);
  void add_row_multiple(std::size_t j, std::size_t i, const BigInt& factor);
  void negate_column(std::size_t j);
  void negate_row(std::size_t j);

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<BigInt> operator*(std::span<const BigInt> v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

// Column-style Hermite normal form: m * transform == h with transform
// unimodular. The first `rank` columns of h are nonzero and in echelon form
// with strictly increasing pivot rows, positive pivots, and entries left of a
// pivot reduced into [0, pivot). Remaining columns are zero.
struct HermiteForm {
  IntMatrix h;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;

  // First `rank` columns of h: a basis of the column lattice of m.
  IntMatrix basis() const;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

// u * m * v == diag(diagonal) padded with zeros; u and v unimodular. The
// nonzero diagonal entries are positive and each divides the next.
struct SmithForm {
  std::vector<BigInt> diagonal;  // length min(rows, cols)
  IntMatrix u;
  IntMatrix v;

  std::size_t rank() const;
  // Product of the nonzero invariant factors (1 for the zero matrix).
  BigInt nonzero_product() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Exact determinant (fraction-free Bareiss). Requires a square matrix.
BigInt determinant(const IntMatrix& m);

// Columns form a basis of { x in Z^cols : m x = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);

// Integer coordinates of `target` over the columns of a Hermite form, or
// nullopt when `target` is outside the column lattice.
std::optional<std::vector<BigInt>> hermite_coordinates(const HermiteForm& hnf,
                                                       std::span<const BigInt> target);

// True when `target` lies in the column lattice of m.
bool in_column_lattice(const IntMatrix& m, std::span<const BigInt> target);

// Index of the lattice spanned by `generators` (as columns, coordinates over a
// full lattice Z^k) inside its saturation: the product of the nonzero
// invariant factors.
BigInt saturation_index(const IntMatrix& generators);

BigInt gcd_of(std::span<const BigInt> values);

}  // namespace toric
