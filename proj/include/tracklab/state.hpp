#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracklab/complex.hpp"

namespace tracklab {

// Per-edge intersection counts, indexed by edge index of the owning complex.
using EdgeWeights = std::vector<std::int64_t>;

std::int64_t total(const EdgeWeights& w);

// Converts between the canonical T tuple (uv, wz, uz, vw, uw, vz) and
// edge-indexed weights.
EdgeWeights tetra_weights(const std::array<std::int64_t, 6>& tuple);
std::array<std::int64_t, 6> tetra_tuple(const EdgeWeights& w);

struct Point {
  std::string name;
  int edge = -1;
  std::optional<int> label;
};

struct Line {
  int a = -1;
  int b = -1;
  bool touches(int p) const { return a == p || b == p; }
  int other(int p) const { return a == p ? b : a; }
};

// Points on the 1-skeleton plus straight lines in each triangle.
//
// Point ids are indices into points(); they are dense and renumbered when
// points are removed. Point names are the stable identity used by JSON and
// traces. Each edge keeps its points ordered by position, position 0 being
// nearest the edge's low vertex.
//
// The class itself does not enforce the incidence rule; validate_state()
// reports violations. Lines may cross, and a line may join two points of
// the same edge (a returning arc).
class SingularState {
 public:
  SingularState() = default;
  explicit SingularState(std::shared_ptr<const Complex2> complex);

  const Complex2& complex() const { return *complex_; }
  const std::shared_ptr<const Complex2>& complex_ptr() const { return complex_; }

  int num_points() const { return static_cast<int>(points_.size()); }
  const Point& point(int id) const { return points_.at(id); }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<int>& points_on(int edge) const { return on_edge_.at(edge); }
  int position(int id) const { return position_.at(id); }
  std::optional<int> find_point(std::string_view name) const;
  int point_id(std::string_view name) const;  // throws Error(Parse)

  const std::vector<Line>& lines(int triangle) const { return lines_.at(triangle); }
  std::int64_t num_lines() const;

  EdgeWeights weights() const;
  std::int64_t total_weight() const { return num_points(); }
  bool has_returning_arcs() const;

  // Inserts a point at `position` on `edge`; later points shift up.
  int insert_point(int edge, int position, std::string name,
                   std::optional<int> label = std::nullopt);
  int append_point(int edge, std::string name, std::optional<int> label = std::nullopt);
  void add_line(int triangle, int a, int b);
  // Removes the line of `triangle` joining a and b; returns false if absent.
  bool remove_line(int triangle, int a, int b);
  void set_label(int id, std::optional<int> label) { points_.at(id).label = label; }
  // Replaces the point order on an edge (a permutation of points_on(edge)).
  void reorder_edge(int edge, std::vector<int> order);
  // Deletes points and every line touching them; ids are renumbered.
  void erase_points(std::vector<int> ids);

  // Index of a point in the boundary walk of a triangle (following the
  // triangle's cyclic orientation), or -1 if its edge is not on the triangle.
  int boundary_index(int triangle, int id) const;
  // Partner of point `id` in `triangle`, or -1 when it has none or several.
  int partner(int triangle, int id) const;

  friend bool operator==(const SingularState& a, const SingularState& b);

 private:
  void refresh_positions();

  std::shared_ptr<const Complex2> complex_;
  std::vector<Point> points_;
  std::vector<std::vector<int>> on_edge_;
  std::vector<int> position_;
  std::vector<std::vector<Line>> lines_;
};

// Incidence rule: every point on an edge is the endpoint of exactly one line
// in each triangle containing that edge; lines join points on edges of their
// own triangle. With allow_returning_arcs=false, same-edge lines are reported.
std::vector<Violation> validate_state(const SingularState& s, bool allow_returning_arcs = true);

// True iff the two lines of one triangle cross, i.e. their endpoints
// interleave in the boundary cyclic order.
bool lines_cross(const SingularState& s, int triangle, const Line& x, const Line& y);
std::int64_t count_crossings(const SingularState& s);

// Same complex, same per-edge counts and the same lines when points are
// identified by (edge, position). Names and labels are ignored.
bool same_structure(const SingularState& a, const SingularState& b);

// A connected component of the point-line structure. On a closed surface
// every point has exactly two lines and `cycle` lists the component's points
// in traversal order; otherwise `cycle` holds the points sorted by id and
// `closed` is false.
struct Component {
  std::vector<int> cycle;
  std::vector<int> exits;  // triangle of the line leaving cycle[i] (closed only)
  EdgeWeights weights;
  bool closed = false;
  std::int64_t weight() const { return static_cast<std::int64_t>(cycle.size()); }
};

// Components ordered by least point id. The traversal starts at the least
// point and first follows its line in the lower-indexed incident triangle.
std::vector<Component> decompose(const SingularState& s);

}  // namespace tracklab
