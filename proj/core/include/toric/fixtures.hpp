#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toric/graph.hpp"

namespace toric {

// Names of the bundled graphs: triangle, square, bowtie,
// two-triangles-bridge, square-pendant-triangle, K4, K33, G_1^3, G_2^3.
const std::vector<std::string>& fixture_names();

// Throws InvalidArgument for an unknown name.
Graph fixture(std::string_view name);

}  // namespace toric
