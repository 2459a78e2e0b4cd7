#include "tracklab/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace tracklab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::TriangleInequalityViolation: return "TriangleInequalityViolation";
    case ErrorKind::ComplexMismatch: return "ComplexMismatch";
    case ErrorKind::NotATrack: return "NotATrack";
    case ErrorKind::UnclassifiableWeights: return "UnclassifiableWeights";
    case ErrorKind::NonSurfaceComplex: return "NonSurfaceComplex";
    case ErrorKind::NotRemovable: return "NotRemovable";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidEvent: return "InvalidEvent";
    case ErrorKind::NoThickSphere: return "NoThickSphere";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

std::string joined_id(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  std::string id;
  for (const auto& n : names) id += n;
  return id;
}

}  // namespace

Complex2 Complex2::from_lists(std::vector<std::string> vertices,
                              const std::vector<std::array<std::string, 2>>& edges,
                              const std::vector<std::array<std::string, 3>>& triangles) {
  Complex2 c;
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) c.problems_.push_back("duplicate vertex " + vertices[i]);
  }
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  c.vertices_ = std::move(vertices);

  auto vidx = [&](const std::string& n) -> int {
    auto it = std::lower_bound(c.vertices_.begin(), c.vertices_.end(), n);
    if (it == c.vertices_.end() || *it != n) return -1;
    return static_cast<int>(it - c.vertices_.begin());
  };

  std::map<std::string, std::array<int, 2>> edge_map;
  for (const auto& e : edges) {
    int a = vidx(e[0]), b = vidx(e[1]);
    if (a < 0 || b < 0) {
      c.problems_.push_back("edge " + e[0] + e[1] + " references an unknown vertex");
      continue;
    }
    if (a == b) {
      c.problems_.push_back("edge " + e[0] + e[1] + " is degenerate");
      continue;
    }
    if (a > b) std::swap(a, b);
    std::string id = c.vertices_[a] + c.vertices_[b];
    if (!edge_map.emplace(id, std::array<int, 2>{a, b}).second) {
      c.problems_.push_back("duplicate edge " + id);
    }
  }
  // Triangles may imply edges that were not listed.
  struct RawTri {
    std::string id;
    std::array<int, 3> v;
    std::array<int, 3> given;
  };
  std::vector<RawTri> raw;
  for (const auto& t : triangles) {
    std::array<int, 3> given{vidx(t[0]), vidx(t[1]), vidx(t[2])};
    if (given[0] < 0 || given[1] < 0 || given[2] < 0) {
      c.problems_.push_back("triangle " + t[0] + t[1] + t[2] + " references an unknown vertex");
      continue;
    }
    std::array<int, 3> v = given;
    std::sort(v.begin(), v.end());
    raw.push_back({joined_id({t[0], t[1], t[2]}), v, given});
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (v[i] == v[j]) continue;
        edge_map.emplace(c.vertices_[v[i]] + c.vertices_[v[j]], std::array<int, 2>{v[i], v[j]});
      }
    }
  }
  for (const auto& [id, v] : edge_map) c.edges_.push_back({id, v, {}});

  std::sort(raw.begin(), raw.end(), [](const RawTri& a, const RawTri& b) { return a.id < b.id; });
  for (const auto& r : raw) {
    Triangle t;
    t.id = r.id;
    t.vertices = r.v;
    t.cyclic = r.given;
    for (int i = 0; i < 3; ++i) {
      int a = r.v[(i + 1) % 3], b = r.v[(i + 2) % 3];
      auto e = (a == b) ? std::nullopt : c.find_edge(a, b);
      t.edges[i] = e ? *e : -1;
    }
    c.triangles_.push_back(t);
  }
  for (int ti = 0; ti < c.num_triangles(); ++ti) {
    const auto& t = c.triangles_[ti];
    std::set<int> seen;
    for (int e : t.edges) {
      if (e >= 0 && seen.insert(e).second) c.edges_[e].triangles.push_back(ti);
    }
  }
  c.orient();
  return c;
}

// Propagates a coherent orientation across each connected closed-surface
// patch: every shared edge must be traversed in opposite directions.
void Complex2::orient() {
  if (!is_closed_surface()) return;
  auto traverses = [](const Triangle& t, int a, int b) {
    for (int i = 0; i < 3; ++i) {
      if (t.cyclic[i] == a && t.cyclic[(i + 1) % 3] == b) return true;
    }
    return false;
  };
  std::vector<bool> done(triangles_.size(), false);
  for (std::size_t seed = 0; seed < triangles_.size(); ++seed) {
    if (done[seed]) continue;
    done[seed] = true;
    std::queue<int> q;
    q.push(static_cast<int>(seed));
    while (!q.empty()) {
      int ti = q.front();
      q.pop();
      const Triangle& t = triangles_[ti];
      for (int e : t.edges) {
        for (int other : edges_[e].triangles) {
          if (other == ti || done[other]) continue;
          auto [a, b] = edges_[e].vertices;
          Triangle& o = triangles_[other];
          bool t_ab = traverses(t, a, b);
          bool o_ab = traverses(o, a, b);
          if (t_ab == o_ab) std::swap(o.cyclic[1], o.cyclic[2]);
          done[other] = true;
          q.push(other);
        }
      }
    }
  }
}

std::optional<int> Complex2::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> Complex2::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view s) { return e.id < s; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> Complex2::find_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < num_edges(); ++e) {
    if (edges_[e].vertices[0] == a && edges_[e].vertices[1] == b) return e;
  }
  return std::nullopt;
}

std::optional<int> Complex2::find_triangle(std::string_view id) const {
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), id,
                             [](const Triangle& t, std::string_view s) { return t.id < s; });
  if (it == triangles_.end() || it->id != id) return std::nullopt;
  return static_cast<int>(it - triangles_.begin());
}

int Complex2::edge_index(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) {
    // Accept either vertex order, e.g. "zw" for "wz".
    std::string s(id);
    std::reverse(s.begin(), s.end());
    e = find_edge(s);
  }
  if (!e) throw Error(ErrorKind::Parse, "unknown edge '" + std::string(id) + "'");
  return *e;
}

int Complex2::triangle_index(std::string_view id) const {
  std::string s(id);
  std::sort(s.begin(), s.end());
  auto t = find_triangle(s);
  if (!t) throw Error(ErrorKind::Parse, "unknown triangle '" + std::string(id) + "'");
  return *t;
}

int Complex2::slot_of(int t, int e) const {
  const auto& tri = triangles_.at(t);
  for (int i = 0; i < 3; ++i) {
    if (tri.edges[i] == e) return i;
  }
  return -1;
}

bool Complex2::is_closed_surface() const {
  if (triangles_.empty()) return false;
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.triangles.size() == 2; });
}

bool operator==(const Complex2& a, const Complex2& b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size() ||
      a.triangles_.size() != b.triangles_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    if (a.edges_[i].id != b.edges_[i].id) return false;
  }
  for (std::size_t i = 0; i < a.triangles_.size(); ++i) {
    if (a.triangles_[i].id != b.triangles_[i].id) return false;
  }
  return true;
}

Complex2 canonical_tetrahedron() {
  Complex2 c = Complex2::from_lists(
      {"u", "v", "w", "z"},
      {{{"u", "v"}}, {{"u", "w"}}, {{"u", "z"}}, {{"v", "w"}}, {{"v", "z"}}, {{"w", "z"}}},
      {{{"u", "v", "z"}}, {{"u", "z", "w"}}, {{"u", "v", "w"}}, {{"v", "w", "z"}}});
  // Outward orientation: uvz, uzw, uwv, vwz. Every edge is traversed once in
  // each direction.
  const std::map<std::string, std::array<std::string, 3>> outward = {
      {"uvz", {"u", "v", "z"}},
      {"uwz", {"u", "z", "w"}},
      {"uvw", {"u", "w", "v"}},
      {"vwz", {"v", "w", "z"}},
  };
  for (auto& t : c.triangles_) {
    const auto& names = outward.at(t.id);
    for (int i = 0; i < 3; ++i) t.cyclic[i] = *c.find_vertex(names[i]);
  }
  c.tetrahedron_ = true;
  return c;
}

std::shared_ptr<const Complex2> tetrahedron() {
  static const auto instance = std::make_shared<const Complex2>(canonical_tetrahedron());
  return instance;
}

struct ComplexValidator {
  static std::vector<Violation> run(const Complex2& c) {
    std::vector<Violation> out;
    for (const auto& p : c.problems_) out.push_back({"malformed_input", "", p});
    for (const auto& t : c.triangles_) {
      const auto& v = t.vertices;
      if (v[0] == v[1] || v[1] == v[2]) {
        out.push_back({"degenerate_triangle", t.id,
                       "triangle " + t.id + " has a repeated vertex"});
        continue;
      }
      if (std::any_of(t.edges.begin(), t.edges.end(), [](int e) { return e < 0; })) {
        out.push_back({"missing_edge", t.id, "triangle " + t.id + " lacks an edge"});
      }
    }
    std::set<std::string> tri_ids;
    for (const auto& t : c.triangles_) {
      if (!tri_ids.insert(t.id).second) {
        out.push_back({"duplicate_triangle", t.id, "triangle " + t.id + " listed twice"});
      }
    }
    for (const auto& e : c.edges_) {
      const auto n = e.triangles.size();
      if (n == 0) {
        out.push_back({"edge_without_triangle", e.id, "edge " + e.id + " in no triangle"});
      } else if (n != 2) {
        out.push_back({"edge_not_in_two_triangles", e.id,
                       "edge " + e.id + " in " + std::to_string(n) + " triangle" +
                           (n == 1 ? "" : "s")});
      }
    }
    if (c.is_closed_surface()) {
      for (const auto& e : c.edges_) {
        int dir = 0;
        for (int ti : e.triangles) {
          const auto& cy = c.triangles_[ti].cyclic;
          for (int i = 0; i < 3; ++i) {
            if (cy[i] == e.vertices[0] && cy[(i + 1) % 3] == e.vertices[1]) ++dir;
            if (cy[i] == e.vertices[1] && cy[(i + 1) % 3] == e.vertices[0]) --dir;
          }
        }
        if (dir != 0) {
          out.push_back({"non_orientable", e.id,
                         "edge " + e.id + " traversed twice in the same direction"});
        }
      }
    }
    return out;
  }
};

std::vector<Violation> validate_complex(const Complex2& c) { return ComplexValidator::run(c); }

std::vector<OppositeEdgePair> opposite_edge_pairs(const Complex2& c) {
  std::vector<OppositeEdgePair> out;
  for (int a = 0; a < c.num_edges(); ++a) {
    for (int b = a + 1; b < c.num_edges(); ++b) {
      const auto& ea = c.edge(a).vertices;
      const auto& eb = c.edge(b).vertices;
      bool shares = ea[0] == eb[0] || ea[0] == eb[1] || ea[1] == eb[0] || ea[1] == eb[1];
      if (!shares) out.push_back({{a, b}});
    }
  }
  return out;
}

std::string to_string(const Complex2& c, const OppositeEdgePair& p) {
  return "{" + c.edge(p.edges[0]).id + "," + c.edge(p.edges[1]).id + "}";
}

}  // namespace tracklab
