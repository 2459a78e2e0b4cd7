#include "tracklab/random.hpp"

#include <algorithm>
#include <numeric>

namespace tracklab {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Tuples of the small tracks on T: four 3-tracks, three 4-tracks, three octagons.
const std::vector<std::array<std::int64_t, 6>>& pieces() {
  static const std::vector<std::array<std::int64_t, 6>> p = {
      {1, 0, 1, 0, 1, 0}, {1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 1, 1, 0, 0, 1},
      {1, 1, 0, 0, 1, 1}, {1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1},
      {2, 2, 1, 1, 1, 1}, {1, 1, 2, 2, 1, 1}, {1, 1, 1, 1, 2, 2}};
  return p;
}

}  // namespace

EdgeWeights random_weights(Rng& rng, std::int64_t max_weight) {
  std::array<std::int64_t, 6> t{};
  std::int64_t total = 0;
  const int tries = uniform(rng, 1, 12);
  for (int i = 0; i < tries; ++i) {
    const auto& piece = pieces()[uniform(rng, 0, static_cast<int>(pieces().size()) - 1)];
    const std::int64_t w = std::accumulate(piece.begin(), piece.end(), std::int64_t{0});
    if (total + w > max_weight) continue;
    for (int k = 0; k < 6; ++k) t[k] += piece[k];
    total += w;
  }
  return tetra_weights(t);
}

SingularState random_spattern(Rng& rng, std::int64_t max_weight) {
  const auto w = random_weights(rng, max_weight);
  const auto& c = *tetrahedron();
  SingularState s(tetrahedron());
  for (int e = 0; e < c.num_edges(); ++e) {
    for (std::int64_t i = 0; i < w[e]; ++i) s.append_point(e, c.edge(e).id + "." + std::to_string(i));
  }
  for (int t = 0; t < c.num_triangles(); ++t) {
    const auto& tri = c.triangle(t);
    std::array<std::vector<int>, 3> pts;
    for (int i = 0; i < 3; ++i) {
      pts[i] = s.points_on(tri.edges[i]);
      std::shuffle(pts[i].begin(), pts[i].end(), rng);
    }
    const auto cc = corner_counts(w[tri.edges[0]], w[tri.edges[1]], w[tri.edges[2]]);
    std::array<std::size_t, 3> used{};
    // Corner i's lines join the two edges other than slot i.
    for (int i = 0; i < 3; ++i) {
      const int a = (i + 1) % 3, b = (i + 2) % 3;
      for (std::int64_t k = 0; k < cc.t[i]; ++k) s.add_line(t, pts[a][used[a]++], pts[b][used[b]++]);
    }
  }
  return s;
}

SingularState add_random_finger(Rng& rng, const SingularState& s, const std::string& tag) {
  const auto& c = s.complex();
  std::vector<std::pair<int, int>> choices;  // (triangle, line index)
  for (int t = 0; t < c.num_triangles(); ++t) {
    for (int i = 0; i < static_cast<int>(s.lines(t).size()); ++i) choices.push_back({t, i});
  }
  if (choices.empty()) return s;
  auto [t1, li] = choices[uniform(rng, 0, static_cast<int>(choices.size()) - 1)];
  Line l = s.lines(t1)[li];
  if (uniform(rng, 0, 1)) std::swap(l.a, l.b);
  const int x = l.a, y = l.b;
  const int edge = s.point(x).edge;
  const auto& tris = c.edge(edge).triangles;
  if (tris.size() != 2) return s;
  const int t2 = tris[0] == t1 ? tris[1] : tris[0];
  // New points sit right next to x, on a random side.
  const int pos = s.position(x) + uniform(rng, 0, 1);
  SingularState out = s;
  int p = out.insert_point(edge, pos, tag + ".a");
  int q = out.insert_point(edge, pos + 1, tag + ".b");
  const int xi = *out.find_point(s.point(x).name), yi = *out.find_point(s.point(y).name);
  // Keep x's new neighbour adjacent to it in the boundary walk.
  if (out.position(xi) > out.position(p)) std::swap(p, q);
  out.remove_line(t1, xi, yi);
  out.add_line(t1, xi, p);
  out.add_line(t1, q, yi);
  out.add_line(t2, p, q);
  return out;
}

SingularState random_singular_state(Rng& rng, std::int64_t max_weight) {
  SingularState s = random_spattern(rng, std::max<std::int64_t>(3, max_weight - 2 * uniform(rng, 0, 6)));
  const int fingers = uniform(rng, 0, 6);
  for (int i = 0; i < fingers && s.total_weight() + 2 <= max_weight; ++i) {
    s = add_random_finger(rng, s, "f" + std::to_string(i));
  }
  const int perms = uniform(rng, 0, 3);
  for (int i = 0; i < perms; ++i) {
    int e = uniform(rng, 0, s.complex().num_edges() - 1);
    s = apply_edge_permutation(s, random_permutation(rng, s, e));
  }
  return s;
}

EdgePermutation random_permutation(Rng& rng, const SingularState& s, int edge) {
  auto nu = EdgePermutation::identity(edge, static_cast<int>(s.points_on(edge).size()));
  std::shuffle(nu.image.begin(), nu.image.end(), rng);
  return nu;
}

}  // namespace tracklab
