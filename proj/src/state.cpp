#include "tracklab/state.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace tracklab {

std::int64_t total(const EdgeWeights& w) {
  return std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

EdgeWeights tetra_weights(const std::array<std::int64_t, 6>& tuple) {
  const auto& t = *tetrahedron();
  EdgeWeights w(t.num_edges(), 0);
  for (std::size_t i = 0; i < kTetraEdgeOrder.size(); ++i) {
    w[t.edge_index(kTetraEdgeOrder[i])] = tuple[i];
  }
  return w;
}

std::array<std::int64_t, 6> tetra_tuple(const EdgeWeights& w) {
  const auto& t = *tetrahedron();
  std::array<std::int64_t, 6> out{};
  for (std::size_t i = 0; i < kTetraEdgeOrder.size(); ++i) {
    out[i] = w.at(t.edge_index(kTetraEdgeOrder[i]));
  }
  return out;
}

SingularState::SingularState(std::shared_ptr<const Complex2> complex)
    : complex_(std::move(complex)),
      on_edge_(complex_->num_edges()),
      lines_(complex_->num_triangles()) {}

std::optional<int> SingularState::find_point(std::string_view name) const {
  for (int i = 0; i < num_points(); ++i) {
    if (points_[i].name == name) return i;
  }
  return std::nullopt;
}

int SingularState::point_id(std::string_view name) const {
  auto id = find_point(name);
  if (!id) throw Error(ErrorKind::Parse, "unknown point '" + std::string(name) + "'");
  return *id;
}

std::int64_t SingularState::num_lines() const {
  std::int64_t n = 0;
  for (const auto& l : lines_) n += static_cast<std::int64_t>(l.size());
  return n;
}

EdgeWeights SingularState::weights() const {
  EdgeWeights w(on_edge_.size(), 0);
  for (std::size_t e = 0; e < on_edge_.size(); ++e) {
    w[e] = static_cast<std::int64_t>(on_edge_[e].size());
  }
  return w;
}

bool SingularState::has_returning_arcs() const {
  for (const auto& ls : lines_) {
    for (const auto& l : ls) {
      if (points_[l.a].edge == points_[l.b].edge) return true;
    }
  }
  return false;
}

int SingularState::insert_point(int edge, int position, std::string name,
                                std::optional<int> label) {
  auto& list = on_edge_.at(edge);
  if (position < 0 || position > static_cast<int>(list.size())) {
    throw Error(ErrorKind::InvalidState, "insert position out of range on edge " +
                                             complex_->edge(edge).id);
  }
  int id = num_points();
  points_.push_back({std::move(name), edge, label});
  list.insert(list.begin() + position, id);
  position_.push_back(0);
  for (std::size_t i = position; i < list.size(); ++i) position_[list[i]] = static_cast<int>(i);
  return id;
}

int SingularState::append_point(int edge, std::string name, std::optional<int> label) {
  return insert_point(edge, static_cast<int>(on_edge_.at(edge).size()), std::move(name), label);
}

void SingularState::add_line(int triangle, int a, int b) {
  lines_.at(triangle).push_back({a, b});
}

bool SingularState::remove_line(int triangle, int a, int b) {
  auto& ls = lines_.at(triangle);
  auto it = std::find_if(ls.begin(), ls.end(), [&](const Line& l) {
    return (l.a == a && l.b == b) || (l.a == b && l.b == a);
  });
  if (it == ls.end()) return false;
  ls.erase(it);
  return true;
}

void SingularState::reorder_edge(int edge, std::vector<int> order) {
  auto sorted_new = order;
  auto sorted_old = on_edge_.at(edge);
  std::sort(sorted_new.begin(), sorted_new.end());
  std::sort(sorted_old.begin(), sorted_old.end());
  if (sorted_new != sorted_old) {
    throw Error(ErrorKind::ArityMismatch, "reorder is not a permutation of edge " +
                                              complex_->edge(edge).id);
  }
  on_edge_[edge] = std::move(order);
  for (std::size_t i = 0; i < on_edge_[edge].size(); ++i) {
    position_[on_edge_[edge][i]] = static_cast<int>(i);
  }
}

void SingularState::erase_points(std::vector<int> ids) {
  std::vector<int> remap(points_.size(), 0);
  std::vector<bool> dead(points_.size(), false);
  for (int id : ids) dead.at(id) = true;
  int next = 0;
  std::vector<Point> kept;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (dead[i]) {
      remap[i] = -1;
    } else {
      remap[i] = next++;
      kept.push_back(std::move(points_[i]));
    }
  }
  points_ = std::move(kept);
  for (auto& list : on_edge_) {
    std::vector<int> out;
    for (int id : list) {
      if (remap[id] >= 0) out.push_back(remap[id]);
    }
    list = std::move(out);
  }
  for (auto& ls : lines_) {
    std::vector<Line> out;
    for (const auto& l : ls) {
      if (remap[l.a] >= 0 && remap[l.b] >= 0) out.push_back({remap[l.a], remap[l.b]});
    }
    ls = std::move(out);
  }
  refresh_positions();
}

void SingularState::refresh_positions() {
  position_.assign(points_.size(), 0);
  for (const auto& list : on_edge_) {
    for (std::size_t i = 0; i < list.size(); ++i) position_[list[i]] = static_cast<int>(i);
  }
}

int SingularState::boundary_index(int triangle, int id) const {
  const auto& tri = complex_->triangle(triangle);
  int offset = 0;
  for (int i = 0; i < 3; ++i) {
    int from = tri.cyclic[i], to = tri.cyclic[(i + 1) % 3];
    auto e = complex_->find_edge(from, to);
    if (!e) return -1;
    int n = static_cast<int>(on_edge_[*e].size());
    if (points_[id].edge == *e) {
      int pos = position_[id];
      bool forward = complex_->edge(*e).vertices[0] == from;
      return offset + (forward ? pos : n - 1 - pos);
    }
    offset += n;
  }
  return -1;
}

int SingularState::partner(int triangle, int id) const {
  int found = -1;
  for (const auto& l : lines_.at(triangle)) {
    if (l.touches(id)) {
      if (found >= 0) return -1;
      found = l.other(id);
    }
  }
  return found;
}

bool operator==(const SingularState& a, const SingularState& b) {
  if (!a.complex_ || !b.complex_) return a.complex_ == b.complex_;
  if (!(*a.complex_ == *b.complex_)) return false;
  if (a.points_.size() != b.points_.size()) return false;
  // Compare by names so that id numbering does not matter.
  for (std::size_t e = 0; e < a.on_edge_.size(); ++e) {
    const auto& la = a.on_edge_[e];
    const auto& lb = b.on_edge_[e];
    if (la.size() != lb.size()) return false;
    for (std::size_t i = 0; i < la.size(); ++i) {
      const auto& pa = a.points_[la[i]];
      const auto& pb = b.points_[lb[i]];
      if (pa.name != pb.name || pa.label != pb.label) return false;
    }
  }
  for (std::size_t t = 0; t < a.lines_.size(); ++t) {
    auto key = [](const SingularState& s, const Line& l) {
      auto x = s.points_[l.a].name, y = s.points_[l.b].name;
      if (y < x) std::swap(x, y);
      return std::make_pair(x, y);
    };
    std::vector<std::pair<std::string, std::string>> ka, kb;
    for (const auto& l : a.lines_[t]) ka.push_back(key(a, l));
    for (const auto& l : b.lines_[t]) kb.push_back(key(b, l));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return false;
  }
  return true;
}

std::vector<Violation> validate_state(const SingularState& s, bool allow_returning_arcs) {
  std::vector<Violation> out;
  const auto& c = s.complex();
  std::set<std::string> names;
  for (const auto& p : s.points()) {
    if (!names.insert(p.name).second) {
      out.push_back({"duplicate_point", p.name, "point name " + p.name + " used twice"});
    }
  }
  for (int t = 0; t < c.num_triangles(); ++t) {
    const auto& tri = c.triangle(t);
    std::vector<int> uses(s.num_points(), 0);
    for (const auto& l : s.lines(t)) {
      for (int p : {l.a, l.b}) {
        if (p < 0 || p >= s.num_points()) {
          out.push_back({"bad_line", tri.id, "line references a missing point"});
          continue;
        }
        ++uses[p];
        if (c.slot_of(t, s.point(p).edge) < 0) {
          out.push_back({"point_off_triangle", s.point(p).name,
                         "point " + s.point(p).name + " is not on an edge of " + tri.id});
        }
      }
      if (l.a == l.b) {
        out.push_back({"degenerate_line", tri.id, "line joins a point to itself in " + tri.id});
      } else if (!allow_returning_arcs && l.a >= 0 && l.b >= 0 && l.a < s.num_points() &&
                 l.b < s.num_points() && s.point(l.a).edge == s.point(l.b).edge) {
        out.push_back({"returning_arc", tri.id,
                       "line " + s.point(l.a).name + "-" + s.point(l.b).name + " in " + tri.id +
                           " joins two points of edge " + c.edge(s.point(l.a).edge).id});
      }
    }
    for (int slot = 0; slot < 3; ++slot) {
      int e = tri.edges[slot];
      if (e < 0) continue;
      for (int p : s.points_on(e)) {
        if (uses[p] != 1) {
          out.push_back({"incidence", s.point(p).name,
                         "point " + s.point(p).name + " is on " + std::to_string(uses[p]) +
                             " lines in " + tri.id});
        }
      }
    }
  }
  return out;
}

bool lines_cross(const SingularState& s, int triangle, const Line& x, const Line& y) {
  int a = s.boundary_index(triangle, x.a), b = s.boundary_index(triangle, x.b);
  int c = s.boundary_index(triangle, y.a), d = s.boundary_index(triangle, y.b);
  if (a > b) std::swap(a, b);
  auto inside = [&](int v) { return a < v && v < b; };
  return inside(c) != inside(d);
}

std::int64_t count_crossings(const SingularState& s) {
  std::int64_t n = 0;
  for (int t = 0; t < s.complex().num_triangles(); ++t) {
    const auto& ls = s.lines(t);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        if (lines_cross(s, t, ls[i], ls[j])) ++n;
      }
    }
  }
  return n;
}

bool same_structure(const SingularState& a, const SingularState& b) {
  if (!(a.complex() == b.complex()) || a.weights() != b.weights()) return false;
  for (int t = 0; t < a.complex().num_triangles(); ++t) {
    auto keys = [t](const SingularState& s) {
      std::vector<std::array<int, 4>> out;
      for (const auto& l : s.lines(t)) {
        std::array<int, 2> x{s.point(l.a).edge, s.position(l.a)};
        std::array<int, 2> y{s.point(l.b).edge, s.position(l.b)};
        if (y < x) std::swap(x, y);
        out.push_back({x[0], x[1], y[0], y[1]});
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    if (keys(a) != keys(b)) return false;
  }
  return true;
}

std::vector<Component> decompose(const SingularState& s) {
  const auto& c = s.complex();
  const int n = s.num_points();
  // Per point: (triangle, partner) for every line touching it.
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int t = 0; t < c.num_triangles(); ++t) {
    for (const auto& l : s.lines(t)) {
      inc[l.a].push_back({t, l.b});
      inc[l.b].push_back({t, l.a});
    }
  }
  for (auto& v : inc) std::sort(v.begin(), v.end());

  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (int seed = 0; seed < n; ++seed) {
    if (comp[seed] >= 0) continue;
    const int k = static_cast<int>(out.size());
    Component cc;
    cc.weights.assign(c.num_edges(), 0);

    bool two_regular = true;
    std::vector<int> members{seed};
    comp[seed] = k;
    for (std::size_t i = 0; i < members.size(); ++i) {
      int p = members[i];
      if (inc[p].size() != 2 || inc[p][0].first == inc[p][1].first) two_regular = false;
      for (auto [t, q] : inc[p]) {
        if (comp[q] < 0) {
          comp[q] = k;
          members.push_back(q);
        }
      }
    }
    for (int p : members) ++cc.weights[s.point(p).edge];

    if (two_regular) {
      // Walk: leave the seed through its lower triangle, then alternate.
      cc.closed = true;
      int prev_tri = inc[seed][1].first;
      int p = seed;
      do {
        cc.cycle.push_back(p);
        const auto& out_line = inc[p][0].first == prev_tri ? inc[p][1] : inc[p][0];
        prev_tri = out_line.first;
        cc.exits.push_back(prev_tri);
        p = out_line.second;
      } while (p != seed && cc.cycle.size() <= members.size());
      if (cc.cycle.size() != members.size()) {
        cc.closed = false;
        cc.exits.clear();
        cc.cycle = members;
        std::sort(cc.cycle.begin(), cc.cycle.end());
      }
    } else {
      cc.cycle = members;
      std::sort(cc.cycle.begin(), cc.cycle.end());
    }
    out.push_back(std::move(cc));
  }
  return out;
}

}  // namespace tracklab
