#include "toric/fixtures.hpp"

#include "toric/error.hpp"
#include "toric/graph_io.hpp"
#include "toric/grn.hpp"

namespace toric {

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "triangle", "square", "bowtie", "two-triangles-bridge", "square-pendant-triangle",
      "K4",       "K33",    "G_1^3",  "G_2^3",
  };
  return names;
}

Graph fixture(std::string_view name) {
  if (name == "triangle") return parse_graph("a b\nb c\nc a\n");
  if (name == "square") return parse_graph("a b\nb c\nc d\nd a\n");
  if (name == "bowtie") return parse_graph("a b\nb c\nc a\nc d\nd e\ne c\n");
  if (name == "two-triangles-bridge") {
    return parse_graph("a b\nb c\nc a\nc d\nd e\ne f\nf d\n");
  }
  if (name == "square-pendant-triangle") {
    return parse_graph("a b\nb c\nc d\nd a\na e\ne f\nf a\n");
  }
  if (name == "K4") return parse_graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  if (name == "K33") {
    return parse_graph("a1 b1\na1 b2\na1 b3\na2 b1\na2 b2\na2 b3\na3 b1\na3 b2\na3 b3\n");
  }
  if (name == "G_1^3") return build_grn({3, 1});
  if (name == "G_2^3") return build_grn({3, 2});
  throw InvalidArgument("unknown fixture: " + std::string(name));
}

}  // namespace toric
