#include "tracklab/spattern.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace tracklab {

std::vector<Violation> validate_spattern(const SingularState& s) { return validate_state(s, true); }

std::vector<Strack> strack_decomposition(const SingularState& s) { return decompose(s); }

namespace {

void require_surface(const Complex2& c) {
  if (!c.is_closed_surface()) {
    throw Error(ErrorKind::NonSurfaceComplex, "an edge lacks exactly two incident triangles");
  }
}

}  // namespace

std::map<int, int> crossing_signs(const SingularState& s, const Strack& t, bool reversed) {
  const auto& c = s.complex();
  require_surface(c);
  if (!t.closed) throw Error(ErrorKind::InvalidState, "strack is not a closed curve");
  std::map<int, int> out;
  for (std::size_t i = 0; i < t.cycle.size(); ++i) {
    const auto& edge = c.edge(s.point(t.cycle[i]).edge);
    // Leaving through the second triangle means arriving from the first.
    int sign = t.exits[i] == edge.triangles[1] ? +1 : -1;
    out[t.cycle[i]] = reversed ? -sign : sign;
  }
  return out;
}

std::vector<PlusMinusPair> find_plus_minus_pairs(const SingularState& s) {
  require_surface(s.complex());
  std::vector<PlusMinusPair> out;
  for (const auto& t : decompose(s)) {
    if (!t.closed) continue;
    auto signs = crossing_signs(s, t);
    std::map<int, std::vector<int>> by_edge;  // edge -> cycle indices
    for (std::size_t i = 0; i < t.cycle.size(); ++i) {
      by_edge[s.point(t.cycle[i]).edge].push_back(static_cast<int>(i));
    }
    for (const auto& [edge, idx] : by_edge) {
      const int m = static_cast<int>(idx.size());
      for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
          int p = t.cycle[idx[a]], q = t.cycle[idx[b]];
          if (signs[p] == signs[q]) continue;
          bool clean = (b == a + 1) || (a == 0 && b == m - 1);
          if (s.position(p) > s.position(q)) std::swap(p, q);
          out.push_back({{edge, p, q}, clean});
        }
      }
    }
  }
  const auto& c = s.complex();
  std::sort(out.begin(), out.end(), [&](const PlusMinusPair& x, const PlusMinusPair& y) {
    auto kx = std::make_tuple(c.edge(x.pair.edge).id, s.position(x.pair.first), s.position(x.pair.second));
    auto ky = std::make_tuple(c.edge(y.pair.edge).id, s.position(y.pair.first), s.position(y.pair.second));
    return kx < ky;
  });
  return out;
}

const char* to_string(RemovableKind k) {
  return k == RemovableKind::ReturningArc ? "returning-arc" : "plus-minus";
}

std::vector<RemovablePair> find_removable_pairs(const SingularState& s) {
  const auto& c = s.complex();
  std::vector<RemovablePair> out;
  auto ordered = [&](int e, int p, int q) {
    if (s.position(p) > s.position(q)) std::swap(p, q);
    return PointPair{e, p, q};
  };
  for (int t = 0; t < c.num_triangles(); ++t) {
    for (const auto& l : s.lines(t)) {
      int e = s.point(l.a).edge;
      if (e == s.point(l.b).edge) out.push_back({ordered(e, l.a, l.b), RemovableKind::ReturningArc});
    }
  }
  if (c.is_closed_surface()) {
    for (const auto& pm : find_plus_minus_pairs(s)) {
      if (!pm.clean) continue;
      bool dup = std::any_of(out.begin(), out.end(),
                             [&](const RemovablePair& r) { return r.pair == pm.pair; });
      if (!dup) out.push_back({pm.pair, RemovableKind::PlusMinus});
    }
  }
  std::sort(out.begin(), out.end(), [&](const RemovablePair& x, const RemovablePair& y) {
    auto kx = std::make_tuple(c.edge(x.pair.edge).id, s.position(x.pair.first), s.position(x.pair.second));
    auto ky = std::make_tuple(c.edge(y.pair.edge).id, s.position(y.pair.first), s.position(y.pair.second));
    return kx < ky;
  });
  // The same returning arc seen from both triangles of a 2-cycle.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RemovablePair& x, const RemovablePair& y) { return x.pair == y.pair; }),
            out.end());
  return out;
}

SingularState splice_out(const SingularState& s, const PointPair& pair) {
  const auto& c = s.complex();
  const int p = pair.first, q = pair.second;
  if (p == q || s.point(p).edge != pair.edge || s.point(q).edge != pair.edge) {
    throw Error(ErrorKind::NotRemovable, "pair does not lie on one edge");
  }
  SingularState out = s;
  for (int t : c.edge(pair.edge).triangles) {
    int x = s.partner(t, p), y = s.partner(t, q);
    if (x < 0 || y < 0) {
      throw Error(ErrorKind::InvalidState, "point without a unique line in " + c.triangle(t).id);
    }
    if (x == q) {
      out.remove_line(t, p, q);
    } else {
      out.remove_line(t, p, x);
      out.remove_line(t, q, y);
      out.add_line(t, x, y);
    }
  }
  out.erase_points({p, q});
  return out;
}

SingularState remove_pair(const SingularState& s, const PointPair& pair) {
  auto removable = find_removable_pairs(s);
  auto same = [&](const RemovablePair& r) {
    return r.pair.edge == pair.edge &&
           ((r.pair.first == pair.first && r.pair.second == pair.second) ||
            (r.pair.first == pair.second && r.pair.second == pair.first));
  };
  if (std::none_of(removable.begin(), removable.end(), same)) {
    throw Error(ErrorKind::NotRemovable, "pair " + s.point(pair.first).name + "," +
                                             s.point(pair.second).name + " is not removable");
  }
  return splice_out(s, pair);
}

Pattern underlying_pattern(const SingularState& s) {
  if (s.has_returning_arcs()) {
    throw Error(ErrorKind::InvalidState, "underlying pattern needs a spattern without returning arcs");
  }
  return pattern_on_points(s);
}

EdgePermutation EdgePermutation::identity(int edge, int size) {
  EdgePermutation p{edge, std::vector<int>(size)};
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool EdgePermutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != static_cast<int>(i)) return false;
  }
  return true;
}

EdgePermutation EdgePermutation::after(const EdgePermutation& first) const {
  if (first.edge != edge || first.image.size() != image.size()) {
    throw Error(ErrorKind::ArityMismatch, "composing permutations of different edges");
  }
  EdgePermutation out{edge, std::vector<int>(image.size())};
  for (std::size_t i = 0; i < image.size(); ++i) out.image[i] = image.at(first.image[i]);
  return out;
}

SingularState apply_edge_permutation(const SingularState& s, const EdgePermutation& nu) {
  const auto& c = s.complex();
  if (nu.edge < 0 || nu.edge >= c.num_edges()) {
    throw Error(ErrorKind::ArityMismatch, "permutation edge is not in the complex");
  }
  const auto& old = s.points_on(nu.edge);
  if (nu.image.size() != old.size()) {
    throw Error(ErrorKind::ArityMismatch, "permutation of " + std::to_string(nu.image.size()) +
                                              " positions on edge " + c.edge(nu.edge).id +
                                              " carrying " + std::to_string(old.size()) + " points");
  }
  std::vector<int> order(old.size(), -1);
  for (std::size_t i = 0; i < old.size(); ++i) {
    int j = nu.image[i];
    if (j < 0 || j >= static_cast<int>(old.size()) || order[j] >= 0) {
      throw Error(ErrorKind::ArityMismatch, "image is not a bijection");
    }
    order[j] = old[i];
  }
  SingularState out = s;
  out.reorder_edge(nu.edge, std::move(order));
  return out;
}

namespace {

// partner[t][id] for every point, -1 when the point has no line in t.
std::vector<std::vector<int>> partner_table(const SingularState& s) {
  const auto& c = s.complex();
  std::vector<std::vector<int>> out(c.num_triangles(), std::vector<int>(s.num_points(), -1));
  for (int t = 0; t < c.num_triangles(); ++t) {
    for (const auto& l : s.lines(t)) {
      out[t][l.a] = l.b;
      out[t][l.b] = l.a;
    }
  }
  return out;
}

}  // namespace

UncrossOutcome uncross(const SingularState& s) {
  const auto& c = s.complex();
  if (auto v = validate_state(s, false); !v.empty()) {
    throw Error(ErrorKind::InvalidState, "uncross needs a valid spattern: " + v.front().message);
  }
  const Pattern target = underlying_pattern(s);
  const SingularState& ps = target.state();
  const auto s_partner = partner_table(s);
  const auto p_partner = partner_table(ps);
  auto slot = [&](int e, int pos) { return ps.points_on(e)[pos]; };

  const int n = s.num_points();
  std::vector<int> phi(n, -1);
  std::vector<bool> used(ps.num_points(), false);

  auto comps = decompose(s);
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  auto min_label = [&](const Component& k) {
    int best = INT_MAX;
    for (int id : k.cycle) {
      if (s.point(id).label) best = std::min(best, *s.point(id).label);
    }
    return best;
  };
  std::vector<int> comp_label(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) comp_label[i] = min_label(comps[i]);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return comp_label[a] < comp_label[b]; });

  for (int ci : order) {
    const auto& comp = comps[ci];
    int anchor = *std::min_element(comp.cycle.begin(), comp.cycle.end());
    if (comp_label[ci] != INT_MAX) {
      for (int id : comp.cycle) {
        if (s.point(id).label == comp_label[ci]) {
          anchor = id;
          break;
        }
      }
    }
    const int e = s.point(anchor).edge;

    std::vector<std::pair<int, int>> best;  // (s id, P id)
    int best_moved = INT_MAX;
    for (int pos = 0; pos < static_cast<int>(ps.points_on(e).size()); ++pos) {
      int image = slot(e, pos);
      if (used[image]) continue;
      std::vector<std::pair<int, int>> assigned{{anchor, image}};
      std::vector<int> local(n, -1);
      std::vector<bool> taken = used;
      local[anchor] = image;
      taken[image] = true;
      bool ok = true;
      for (std::size_t i = 0; i < assigned.size() && ok; ++i) {
        auto [x, fx] = assigned[i];
        for (int t : c.edge(s.point(x).edge).triangles) {
          int y = s_partner[t][x], fy = p_partner[t][fx];
          if (y < 0 || fy < 0 || s.point(y).edge != ps.point(fy).edge) {
            ok = false;
            break;
          }
          if (local[y] >= 0) {
            if (local[y] != fy) ok = false;
          } else if (taken[fy]) {
            ok = false;
          } else {
            local[y] = fy;
            taken[fy] = true;
            assigned.push_back({y, fy});
          }
          if (!ok) break;
        }
      }
      if (!ok) continue;
      int moved = 0;
      for (auto [x, fx] : assigned) moved += s.position(x) != ps.position(fx);
      if (moved < best_moved) {
        best_moved = moved;
        best = std::move(assigned);
      }
    }
    if (best.empty()) {
      Obstruction ob;
      ob.component = ci;
      ob.weight = comp.weight();
      ob.anchor = s.point(anchor).name;
      ob.reason = "no component of the underlying pattern matches the " +
                  std::to_string(comp.weight()) + "-strack through " + ob.anchor;
      return {std::nullopt, ob};
    }
    for (auto [x, fx] : best) {
      phi[x] = fx;
      used[fx] = true;
    }
  }

  UncrossResult r;
  r.result = s;
  for (int e = 0; e < c.num_edges(); ++e) {
    const auto& list = s.points_on(e);
    EdgePermutation nu{e, std::vector<int>(list.size())};
    for (std::size_t i = 0; i < list.size(); ++i) nu.image[i] = ps.position(phi[list[i]]);
    if (nu.is_identity()) continue;
    r.result = apply_edge_permutation(r.result, nu);
    r.mu.push_back(std::move(nu));
  }
  if (!same_structure(r.result, ps)) {
    throw Error(ErrorKind::InvalidState, "uncross produced a structure differing from the pattern");
  }
  return {std::move(r), std::nullopt};
}

GraphStats graph_stats(const SingularState& s) {
  GraphStats g;
  g.vertices = s.num_points();
  g.edges = s.num_lines();
  std::vector<int> parent(s.num_points());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::int64_t comps = s.num_points();
  for (int t = 0; t < s.complex().num_triangles(); ++t) {
    for (const auto& l : s.lines(t)) {
      int a = find(l.a), b = find(l.b);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
  }
  g.components = comps;
  g.connected = comps == 1;
  return g;
}

}  // namespace tracklab
