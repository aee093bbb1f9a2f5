#pragma once

#include <span>

#include "toric/lattice.hpp"
#include "toric/toric_model.hpp"

namespace toric {

// Index of Z(supp C) in R(supp C) ∩ ZA for a circuit C of the configuration.
// Computed by expressing the support columns over a Hermite basis of ZA and
// multiplying the nonzero invariant factors of that coordinate matrix.
// Throws InvalidArgument when c is not a circuit of a (not in the kernel, not
// of minimal support, or not primitive).
BigInt circuit_index(std::span<const Exponent> c, const ToricConfiguration& a);
inline BigInt circuit_index(const Binomial& c, const ToricConfiguration& a) {
  return circuit_index(c.exponents(), a);
}

// degree(c) * circuit_index(c, a).
BigInt true_degree(std::span<const Exponent> c, const ToricConfiguration& a);
inline BigInt true_degree(const Binomial& c, const ToricConfiguration& a) {
  return true_degree(c.exponents(), a);
}

}  // namespace toric
