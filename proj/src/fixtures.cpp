#include "tracklab/fixtures.hpp"

namespace tracklab {

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : fixture_table()) out.emplace_back(f.name);
  return out;
}

json fixture(std::string_view name) {
  for (const auto& f : fixture_table()) {
    if (f.name == name) return json::parse(f.text);
  }
  throw Error(ErrorKind::Parse, "no bundled fixture named '" + std::string(name) + "'");
}

SingularState fixture_state(std::string_view name) { return state_from_json(fixture(name)); }

SweepTrace fixture_trace(std::string_view name) { return trace_from_json(fixture(name)); }

}  // namespace tracklab
