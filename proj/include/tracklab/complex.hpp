#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tracklab {

// Failures raised by library operations. Validation routines never throw;
// they return reports.
enum class ErrorKind {
  ParityViolation,
  TriangleInequalityViolation,
  ComplexMismatch,
  NotATrack,
  UnclassifiableWeights,
  NonSurfaceComplex,
  NotRemovable,
  ArityMismatch,
  InvalidState,
  InvalidEvent,
  NoThickSphere,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct Edge {
  std::string id;              // sorted vertex names, e.g. "uv"
  std::array<int, 2> vertices; // low (lexicographically smaller) vertex first
  std::vector<int> triangles;  // incident triangles, ascending by id
};

struct Triangle {
  std::string id;               // sorted vertex names, e.g. "uvw"
  std::array<int, 3> vertices;  // sorted
  std::array<int, 3> edges;     // edges[i] is opposite vertices[i]; -1 if degenerate
  std::array<int, 3> cyclic;    // boundary orientation (vertex indices)
};

// A finite triangulated 2-complex with edge/triangle incidence.
//
// Construction never rejects malformed input; use validate_complex() to see
// what is wrong with it. Edges and triangles are stored sorted by canonical
// id so that index order and id order agree.
class Complex2 {
 public:
  static Complex2 from_lists(std::vector<std::string> vertices,
                             const std::vector<std::array<std::string, 2>>& edges,
                             const std::vector<std::array<std::string, 3>>& triangles);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  const Triangle& triangle(int t) const { return triangles_.at(t); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }

  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_edge(std::string_view id) const;
  std::optional<int> find_edge(int a, int b) const;
  std::optional<int> find_triangle(std::string_view id) const;
  int edge_index(std::string_view id) const;  // throws Error(Parse)
  int triangle_index(std::string_view id) const;

  // Local slot (0..2) of edge e inside triangle t, or -1.
  int slot_of(int t, int e) const;

  bool is_closed_surface() const;
  // True for the boundary of a 3-simplex on vertices {u,v,w,z}.
  bool is_tetrahedron() const { return tetrahedron_; }
  int euler_characteristic() const {
    return num_vertices() - num_edges() + num_triangles();
  }

  friend bool operator==(const Complex2& a, const Complex2& b);

 private:
  friend Complex2 canonical_tetrahedron();
  void orient();

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<std::string> problems_;  // construction-time issues
  bool tetrahedron_ = false;

  friend struct ComplexValidator;
};

// T: vertices u,v,w,z; triangles uvz, uzw, uvw, vwz with a fixed outward
// orientation.
Complex2 canonical_tetrahedron();
// Shared immutable instance of T.
std::shared_ptr<const Complex2> tetrahedron();

struct Violation {
  std::string code;
  std::string simplex;
  std::string message;
};

std::vector<Violation> validate_complex(const Complex2& c);

struct OppositeEdgePair {
  std::array<int, 2> edges;  // ascending edge indices
  friend bool operator==(const OppositeEdgePair&, const OppositeEdgePair&) = default;
  friend auto operator<=>(const OppositeEdgePair&, const OppositeEdgePair&) = default;
};

std::vector<OppositeEdgePair> opposite_edge_pairs(const Complex2& c);
std::string to_string(const Complex2& c, const OppositeEdgePair& p);

// Canonical tuple order used for weight vectors on T: (uv, wz, uz, vw, uw, vz).
// Consecutive entries form the three opposite-edge pairs.
inline constexpr std::array<std::string_view, 6> kTetraEdgeOrder = {
    "uv", "wz", "uz", "vw", "uw", "vz"};

}  // namespace tracklab
