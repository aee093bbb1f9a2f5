#include "toric/error.hpp"

namespace toric {

CapExceeded::CapExceeded(const std::string& what_cap, std::size_t cap)
    : Error("enumeration cap exceeded: " + what_cap + " > " + std::to_string(cap)),
      cap_name_(what_cap),
      cap_(cap) {}

}  // namespace toric
