#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tracklab/json_io.hpp"

namespace tracklab {

// Bundled example documents (the fixtures/ directory compiled in).
struct FixtureText {
  std::string_view name;
  std::string_view text;
};

const std::vector<FixtureText>& fixture_table();
std::vector<std::string> fixture_names();
json fixture(std::string_view name);  // throws Error(Parse) for unknown names

SingularState fixture_state(std::string_view name);
SweepTrace fixture_trace(std::string_view name);

}  // namespace tracklab
