#include "toric/circuit_index.hpp"

#include <vector>

#include "toric/error.hpp"

namespace toric {

BigInt circuit_index(std::span<const Exponent> c, const ToricConfiguration& a) {
  if (c.size() != a.cols()) throw InvalidArgument("circuit_index: length does not match configuration");
  std::vector<std::size_t> support;
  std::vector<BigInt> entries;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) {
      support.push_back(i);
      entries.emplace_back(static_cast<long>(c[i]));
    }
  }
  if (support.empty()) throw InvalidArgument("circuit_index: zero vector");
  if (!a.annihilates(c)) throw InvalidArgument("circuit_index: vector is not in the kernel");
  if (rank(a.matrix().select_columns(support)) + 1 != support.size()) {
    throw InvalidArgument("circuit_index: support is not minimal");
  }
  if (gcd_of(entries) != 1) throw InvalidArgument("circuit_index: vector is not primitive");

  const HermiteForm hnf = hermite_normal_form(a.matrix());
  std::vector<std::vector<BigInt>> coords;
  coords.reserve(support.size());
  for (std::size_t i : support) {
    auto x = hermite_coordinates(hnf, a.matrix().column(i));
    if (!x) throw ConsistencyError("circuit_index: column outside its own lattice");
    coords.push_back(std::move(*x));
  }
  return saturation_index(IntMatrix::from_columns(hnf.rank, coords));
}

BigInt true_degree(std::span<const Exponent> c, const ToricConfiguration& a) {
  BigInt index = circuit_index(c, a);
  return BigInt(static_cast<long>(degree(c))) * index;
}

}  // namespace toric
