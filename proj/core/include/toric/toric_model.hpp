#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric/graph.hpp"
#include "toric/lattice.hpp"

namespace toric {

using Exponent = std::int64_t;

// Integer matrix whose columns are the generators a_1, ..., a_m of a toric
// ideal. For graphs the rows are vertices and the columns edges.
class ToricConfiguration {
 public:
  explicit ToricConfiguration(IntMatrix matrix);
  static ToricConfiguration from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  const IntMatrix& matrix() const { return matrix_; }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }
  std::size_t rank() const { return rank_; }

  std::int64_t entry(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }

  // Nonnegative entries and no zero column, as required by the completion
  // engine.
  bool is_nonnegative_pointed() const;

  // A * u, exactly.
  std::vector<BigInt> apply(std::span<const Exponent> u) const;
  bool annihilates(std::span<const Exponent> u) const;

 private:
  IntMatrix matrix_;
  std::vector<std::int64_t> entries_;
  std::size_t rank_ = 0;
};

// Vertex-by-edge incidence matrix: column e has ones at both endpoints.
ToricConfiguration incidence_configuration(const Graph& g);

// A-degree A * u of the monomial x^u. Throws InvalidArgument on negative
// entries or a length mismatch.
std::vector<BigInt> a_degree(std::span<const Exponent> u, const ToricConfiguration& a);

// Nonzero kernel vector u+ - u- standing for x^{u+} - x^{u-}, normalized so
// that its first nonzero entry is positive.
class Binomial {
 public:
  // Throws ZeroBinomial when every entry vanishes.
  static Binomial from_exponents(std::vector<Exponent> exponents);

  std::span<const Exponent> exponents() const { return exponents_; }
  std::size_t size() const { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }

  std::vector<Exponent> positive_part() const;
  std::vector<Exponent> negative_part() const;
  EdgeSet support() const;
  // (column, signed exponent) pairs over the support, increasing column.
  std::vector<std::pair<std::size_t, Exponent>> sparse_entries() const;

  // Usual degree of the positive monomial.
  Exponent degree() const;

  // "e1*e3^2 - e2*e4" with 1-based variable numbers in increasing order.
  std::string to_string(std::string_view variable = "e") const;

  auto operator<=>(const Binomial&) const = default;
  bool operator==(const Binomial&) const = default;

 private:
  explicit Binomial(std::vector<Exponent> e) : exponents_(std::move(e)) {}
  std::vector<Exponent> exponents_;
};

// Flips the sign so that the first nonzero entry is positive. Zero stays zero.
void canonicalize_sign(std::vector<Exponent>& v);

// Sum of the positive entries (0 for the zero vector).
Exponent degree(std::span<const Exponent> v);
inline Exponent degree(const Binomial& b) { return b.degree(); }

// B_w: +1 for each odd position, -1 for each even position (1-based),
// accumulated per edge. Throws InvalidArgument for an open or odd walk and
// ZeroBinomial when everything cancels.
Binomial binomial_of_walk(const ClosedWalk& w, const Graph& g);

// W' for a connected graph: every cut edge doubled. Throws InvalidArgument on
// disconnected input.
MultiGraph doubled_graph(const Graph& w);

}  // namespace toric
