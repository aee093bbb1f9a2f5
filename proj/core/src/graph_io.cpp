#include "toric/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

Graph read_graph(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex labels");
    }
    try {
      g.add_edge(a, b);
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open graph file: " + path.string());
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << g.label(e.a) << ' ' << g.label(e.b) << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace toric
