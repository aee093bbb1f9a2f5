#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/limits.hpp"
#include "toric/lattice.hpp"
#include "toric/toric_model.hpp"

namespace toric {

// Integer vector with the conformal order: v is below u when v+ <= u+ and
// v- <= u- componentwise.
struct SignedVector {
  std::vector<Exponent> entries;

  std::vector<Exponent> positive() const;
  std::vector<Exponent> negative() const;
  bool is_zero() const;
  SignedVector negated() const;
  // Sign flipped so that the first nonzero entry is positive.
  SignedVector canonical() const;
  Exponent degree() const { return toric::degree(entries); }

  auto operator<=>(const SignedVector&) const = default;
};

// v below u in the conformal order. Lengths must match.
bool conformally_below(std::span<const Exponent> v, std::span<const Exponent> u);

// Canonically signed, sorted, duplicate-free set of kernel vectors.
class GraverSet {
 public:
  GraverSet() = default;
  explicit GraverSet(std::vector<SignedVector> vectors);

  std::span<const SignedVector> vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  // Membership up to sign.
  bool contains(const SignedVector& v) const;
  Exponent max_degree() const;

  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }
  bool operator==(const GraverSet&) const = default;

 private:
  std::vector<SignedVector> vectors_;
};

// Basis of { u : A u = 0 } as matrix columns.
IntMatrix kernel_lattice_basis(const ToricConfiguration& a);

// Graver basis by normal-form completion started from the kernel basis and
// its negation. Requires a nonnegative configuration without zero columns.
// Throws CapExceeded after max_insertions new elements.
GraverSet graver_completion(const ToricConfiguration& a,
                            std::size_t max_insertions = Limits{}.max_insertions);

// Same procedure started from explicitly given lattice generators (columns);
// they must generate the kernel lattice.
GraverSet graver_completion_from(const ToricConfiguration& a, const IntMatrix& generators,
                                 std::size_t max_insertions = Limits{}.max_insertions);

// Content-1 kernel vectors of minimal support, canonically signed. Visits
// column subsets of size up to rank + 1; throws CapExceeded past
// max_supports subsets.
GraverSet circuits_bruteforce(const ToricConfiguration& a,
                              std::size_t max_supports = Limits{}.max_supports);

// True when no element of s other than +-u lies conformally below u (either
// orientation of each element is considered). Throws InvalidArgument for the
// zero vector.
bool is_conformally_minimal(const SignedVector& u, const GraverSet& s);

}  // namespace toric
