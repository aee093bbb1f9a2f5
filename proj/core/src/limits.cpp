#include "toric/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "toric/error.hpp"

namespace toric {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Limits Limits::parse(std::string_view spec, Limits base) {
  Limits out = base;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;

    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("cap setting without '=': " + std::string(item));
    }
    std::string_view key = trim(item.substr(0, eq));
    std::string_view val = trim(item.substr(eq + 1));
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
    if (ec != std::errc{} || ptr != val.data() + val.size() || value == 0) {
      throw InvalidArgument("bad cap value for " + std::string(key) + ": " + std::string(val));
    }
    if (key == "cycles") {
      out.max_cycles = value;
    } else if (key == "subgraphs") {
      out.max_subgraphs = value;
    } else if (key == "insertions") {
      out.max_insertions = value;
    } else if (key == "supports") {
      out.max_supports = value;
    } else {
      throw InvalidArgument("unknown cap: " + std::string(key));
    }
  }
  return out;
}

Limits Limits::parse(std::string_view spec) { return parse(spec, Limits{}); }

Limits Limits::from_environment() {
  const char* raw = std::getenv(std::string(kEnvVar).c_str());
  if (raw == nullptr) return {};
  return parse(raw);
}

}  // namespace toric
