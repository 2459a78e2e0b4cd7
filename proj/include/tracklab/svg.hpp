#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tracklab/state.hpp"

namespace tracklab {

struct NetPoint {
  double x = 0, y = 0;
};

// Unfolding of T into two squares. Left: u(0,0) v(0,4) z(4,4) w(4,0) with
// diagonal uz holding uvz and uwz. Right: the same corners shifted by 6 with
// diagonal vw holding uvw and vwz. uv, uw, vz, wz appear in both squares.
struct NetLayout {
  // Corner positions of triangle t in its square, indexed like
  // Triangle::vertices.
  std::array<std::array<NetPoint, 3>, 4> corners;
  NetPoint vertex(int triangle, int v) const;
  static NetLayout tetra();
};

// Position of a point of s inside the drawing of triangle t.
NetPoint point_position(const NetLayout& net, const SingularState& s, int triangle, int id);

// Deterministic SVG of one or more states side by side. Throws
// ComplexMismatch for complexes other than T.
std::string render_svg(const std::vector<std::pair<std::string, SingularState>>& panels);
std::string render_svg(const SingularState& s);

}  // namespace tracklab
