#include "tracklab/pattern.hpp"

#include <algorithm>

namespace tracklab {

CornerArcCounts corner_counts(std::int64_t w_a, std::int64_t w_b, std::int64_t w_c) {
  if ((w_a + w_b + w_c) % 2 != 0) {
    throw Error(ErrorKind::ParityViolation, "odd weight sum " + std::to_string(w_a + w_b + w_c));
  }
  CornerArcCounts c{{(w_b + w_c - w_a) / 2, (w_a + w_c - w_b) / 2, (w_a + w_b - w_c) / 2}};
  for (auto t : c.t) {
    if (t < 0) {
      throw Error(ErrorKind::TriangleInequalityViolation,
                  "weights (" + std::to_string(w_a) + "," + std::to_string(w_b) + "," +
                      std::to_string(w_c) + ") violate the triangle inequality");
    }
  }
  return c;
}

namespace {

CornerArcCounts triangle_counts(const Complex2& c, int t, const EdgeWeights& w) {
  const auto& tri = c.triangle(t);
  try {
    return corner_counts(w[tri.edges[0]], w[tri.edges[1]], w[tri.edges[2]]);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(e.what()) + " in triangle " + tri.id);
  }
}

// k-th point (0-based) counted from vertex v along edge e.
int nth_from(const SingularState& s, int e, int v, std::int64_t k) {
  const auto& list = s.points_on(e);
  bool from_low = s.complex().edge(e).vertices[0] == v;
  return list[from_low ? k : list.size() - 1 - k];
}

void fill_lines(SingularState& s, const std::vector<CornerArcCounts>& corners) {
  const auto& c = s.complex();
  for (int t = 0; t < c.num_triangles(); ++t) {
    const auto& tri = c.triangle(t);
    for (int i = 0; i < 3; ++i) {
      int vertex = tri.vertices[i];
      int e1 = tri.edges[(i + 1) % 3], e2 = tri.edges[(i + 2) % 3];
      for (std::int64_t k = 0; k < corners[t].t[i]; ++k) {
        s.add_line(t, nth_from(s, e1, vertex, k), nth_from(s, e2, vertex, k));
      }
    }
  }
}

}  // namespace

bool weights_realizable(const Complex2& c, const EdgeWeights& w) {
  if (static_cast<int>(w.size()) != c.num_edges()) return false;
  for (auto x : w) {
    if (x < 0) return false;
  }
  for (const auto& tri : c.triangles()) {
    auto a = w[tri.edges[0]], b = w[tri.edges[1]], d = w[tri.edges[2]];
    if ((a + b + d) % 2 != 0 || a > b + d || b > a + d || d > a + b) return false;
  }
  return true;
}

Pattern pattern_from_weights(std::shared_ptr<const Complex2> complex, const EdgeWeights& w) {
  const auto& c = *complex;
  if (static_cast<int>(w.size()) != c.num_edges()) {
    throw Error(ErrorKind::ComplexMismatch, "weight vector has " + std::to_string(w.size()) +
                                                " entries for " + std::to_string(c.num_edges()) +
                                                " edges");
  }
  for (int e = 0; e < c.num_edges(); ++e) {
    if (w[e] < 0) {
      throw Error(ErrorKind::TriangleInequalityViolation, "negative weight on " + c.edge(e).id);
    }
  }
  Pattern p;
  p.weights_ = w;
  for (int t = 0; t < c.num_triangles(); ++t) p.corners_.push_back(triangle_counts(c, t, w));
  if (total(w) > kMaxMaterializedWeight) {
    throw Error(ErrorKind::InvalidState, "total weight " + std::to_string(total(w)) +
                                             " exceeds the materialization cap");
  }
  p.state_ = SingularState(std::move(complex));
  for (int e = 0; e < c.num_edges(); ++e) {
    for (std::int64_t i = 0; i < w[e]; ++i) {
      p.state_.append_point(e, c.edge(e).id + "." + std::to_string(i));
    }
  }
  fill_lines(p.state_, p.corners_);
  return p;
}

Pattern pattern_on_points(const SingularState& s) {
  Pattern p = pattern_from_weights(s.complex_ptr(), s.weights());
  SingularState named(s.complex_ptr());
  for (int e = 0; e < s.complex().num_edges(); ++e) {
    for (int id : s.points_on(e)) {
      const auto& pt = s.point(id);
      named.append_point(e, pt.name, pt.label);
    }
  }
  // Same slot layout, so line endpoints translate by (edge, position).
  for (int t = 0; t < s.complex().num_triangles(); ++t) {
    for (const auto& l : p.state_.lines(t)) {
      const auto& pa = p.state_.point(l.a);
      const auto& pb = p.state_.point(l.b);
      named.add_line(t, named.points_on(pa.edge)[p.state_.position(l.a)],
                     named.points_on(pb.edge)[p.state_.position(l.b)]);
    }
  }
  p.state_ = std::move(named);
  return p;
}

std::vector<Track> components(const Pattern& p) { return decompose(p.state()); }

Pattern track_pattern(const Pattern& p, const Track& t) {
  return pattern_from_weights(p.complex_ptr(), t.weights);
}

bool equivalent(const Pattern& p, const Pattern& q) {
  if (!(p.complex() == q.complex())) {
    throw Error(ErrorKind::ComplexMismatch, "patterns live on different complexes");
  }
  return p.weights() == q.weights();
}

bool is_normal(const Pattern& p) {
  auto comps = components(p);
  return std::all_of(comps.begin(), comps.end(), [](const Track& t) {
    return t.weight() == 3 || t.weight() == 4;
  });
}

}  // namespace tracklab
