#include "tracklab/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace tracklab {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

namespace {

const Complex2& T() { return *tetrahedron(); }

int tuple_slot(int edge) {
  const auto& id = T().edge(edge).id;
  for (int i = 0; i < 6; ++i) {
    if (kTetraEdgeOrder[i] == id) return i;
  }
  return -1;
}

void require_tetra(const Pattern& p) {
  if (!p.complex().is_tetrahedron()) {
    throw Error(ErrorKind::ComplexMismatch, "classification needs the tetrahedron T");
  }
}

void require_track(const Pattern& p) {
  require_tetra(p);
  auto comps = components(p);
  if (comps.size() != 1) {
    throw Error(ErrorKind::NotATrack,
                "pattern has " + std::to_string(comps.size()) + " components");
  }
}

std::string tuple_string(const TetraTuple& w) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 6; ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}

}  // namespace

const std::array<OppositeEdgePair, 3>& tetra_pairs() {
  static const std::array<OppositeEdgePair, 3> pairs = [] {
    std::array<OppositeEdgePair, 3> out{};
    for (int k = 0; k < 3; ++k) {
      int a = T().edge_index(kTetraEdgeOrder[2 * k]);
      int b = T().edge_index(kTetraEdgeOrder[2 * k + 1]);
      out[k] = {{std::min(a, b), std::max(a, b)}};
    }
    return out;
  }();
  return pairs;
}

std::string describe(const TrackClass& c) {
  if (c.kind == TrackClass::Kind::ThreeTrack) {
    return "ThreeTrack{" + T().vertices()[c.vertex] + "}";
  }
  return "FourN{n=" + std::to_string(c.n) + ",a=" + std::to_string(c.a) +
         ",b=" + std::to_string(c.b) + ",axis=" + to_string(T(), c.axis) + "}";
}

TrackClass classify(const Pattern& p) {
  require_track(p);
  auto w = tetra_tuple(p.weights());
  const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::UnclassifiableWeights, tuple_string(w) + ": " + why);
  };
  TrackClass c;
  if (total == 3) {
    for (int v = 0; v < 4; ++v) {
      bool cut = true;
      for (int e = 0; e < 6; ++e) {
        const auto& ev = T().edge(e).vertices;
        bool incident = ev[0] == v || ev[1] == v;
        if (w[tuple_slot(e)] != (incident ? 1 : 0)) cut = false;
      }
      if (cut) {
        c.kind = TrackClass::Kind::ThreeTrack;
        c.vertex = v;
        return c;
      }
    }
    throw fail("weight 3 but no vertex is cut off");
  }
  std::array<std::int64_t, 3> x{};
  for (int k = 0; k < 3; ++k) {
    if (w[2 * k] != w[2 * k + 1]) throw fail("opposite edges carry different weights");
    x[k] = w[2 * k];
  }
  const std::int64_t n = *std::max_element(x.begin(), x.end());
  if (total != 4 * n || n <= 0) throw fail("total is not 4 times the largest pair weight");
  int axis = -1, apair = -1;
  if (n == 1) {
    int zero = static_cast<int>(std::find(x.begin(), x.end(), 0) - x.begin());
    if (zero == 3) throw fail("no empty pair");
    apair = zero;
    axis = (zero + 2) % 3;
  } else {
    if (std::count(x.begin(), x.end(), n) != 1) throw fail("axis is not unique");
    axis = static_cast<int>(std::max_element(x.begin(), x.end()) - x.begin());
    if (n % 2 == 0) {
      apair = (axis + 1) % 3;
    } else {
      int p1 = (axis + 1) % 3, p2 = (axis + 2) % 3;
      if ((x[p1] % 2 == 0) == (x[p2] % 2 == 0)) throw fail("no even pair beside an odd axis");
      apair = x[p1] % 2 == 0 ? p1 : p2;
    }
  }
  c.kind = TrackClass::Kind::FourN;
  c.n = n;
  c.a = x[apair];
  c.b = x[3 - axis - apair];
  c.axis = tetra_pairs()[axis];
  c.a_pair = tetra_pairs()[apair];
  c.a_parity = c.a % 2 == 0 ? Parity::Even : Parity::Odd;
  return c;
}

TrackClass classify_weights(const TetraTuple& w) {
  return classify(pattern_from_weights(tetrahedron(), tetra_weights(w)));
}

char centre_name(const Complex2& c, int t) {
  static const std::map<std::string, char> names = {
      {"uvz", 'e'}, {"uvw", 'f'}, {"uwz", 'g'}, {"vwz", 'h'}};
  auto it = names.find(c.triangle(t).id);
  return it == names.end() ? '?' : it->second;
}

std::string describe(const Complex2& c, const SeparationPartition& s) {
  std::string out;
  for (int side = 0; side < 2; ++side) {
    if (side) out += " | ";
    out += "{";
    for (std::size_t i = 0; i < s.vertices[side].size(); ++i) {
      out += (i ? "," : "") + c.vertices()[s.vertices[side][i]];
    }
    out += "} {";
    for (std::size_t i = 0; i < s.centres[side].size(); ++i) {
      if (i) out += ",";
      out += centre_name(c, s.centres[side][i]);
    }
    out += "}";
  }
  return out;
}

SeparationPartition separation(const Pattern& p) {
  require_track(p);
  const auto& c = p.complex();
  const auto& w = p.weights();
  // Cells per triangle: corner regions (i, k) for k < t_i, then the middle.
  std::vector<int> base(c.num_triangles() + 1, 0);
  for (int t = 0; t < c.num_triangles(); ++t) {
    const auto& tc = p.corners()[t].t;
    base[t + 1] = base[t] + static_cast<int>(tc[0] + tc[1] + tc[2]) + 1;
  }
  auto corner_cell = [&](int t, int i, std::int64_t k) {
    const auto& tc = p.corners()[t].t;
    int off = base[t];
    for (int j = 0; j < i; ++j) off += static_cast<int>(tc[j]);
    return off + static_cast<int>(k);
  };
  auto middle = [&](int t) { return base[t + 1] - 1; };
  // Cell of triangle t touching segment j of edge e (counted from the low end).
  auto segment_cell = [&](int t, int e, std::int64_t j) {
    const auto& tri = c.triangle(t);
    const auto& tc = p.corners()[t].t;
    auto local = [&](int v) {
      return static_cast<int>(std::find(tri.vertices.begin(), tri.vertices.end(), v) -
                              tri.vertices.begin());
    };
    int lo = local(c.edge(e).vertices[0]), hi = local(c.edge(e).vertices[1]);
    if (j < tc[lo]) return corner_cell(t, lo, j);
    if (w[e] - j < tc[hi]) return corner_cell(t, hi, w[e] - j);
    return middle(t);
  };

  std::vector<int> parent(base.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < c.num_edges(); ++e) {
    const auto& tris = c.edge(e).triangles;
    for (std::int64_t j = 0; j <= w[e]; ++j) {
      for (std::size_t k = 1; k < tris.size(); ++k) {
        parent[find(segment_cell(tris[0], e, j))] = find(segment_cell(tris[k], e, j));
      }
    }
  }
  auto vertex_cell = [&](int v) {
    for (int e = 0; e < c.num_edges(); ++e) {
      const auto& ev = c.edge(e).vertices;
      if (ev[0] == v) return find(segment_cell(c.edge(e).triangles[0], e, 0));
      if (ev[1] == v) return find(segment_cell(c.edge(e).triangles[0], e, w[e]));
    }
    return -1;
  };

  std::set<int> roots;
  for (int x = 0; x < static_cast<int>(parent.size()); ++x) roots.insert(find(x));
  if (roots.size() != 2) {
    throw Error(ErrorKind::NotATrack, "complement has " + std::to_string(roots.size()) +
                                          " regions instead of 2");
  }
  const int side0 = vertex_cell(0);
  SeparationPartition s;
  for (int v = 0; v < c.num_vertices(); ++v) s.vertices[vertex_cell(v) == side0 ? 0 : 1].push_back(v);
  for (int t = 0; t < c.num_triangles(); ++t) s.centres[find(middle(t)) == side0 ? 0 : 1].push_back(t);
  // Order centres by name so that e,f,g,h read naturally.
  for (auto& side : s.centres) {
    std::sort(side.begin(), side.end(),
              [&](int a, int b) { return centre_name(c, a) < centre_name(c, b); });
  }
  return s;
}

bool is_octagon(const TetraTuple& w) {
  for (int k = 0; k < 3; ++k) {
    bool ok = true;
    for (int i = 0; i < 6; ++i) ok = ok && w[i] == (i / 2 == k ? 2 : 1);
    if (ok) return true;
  }
  return false;
}

bool is_octagon(const Pattern& p) {
  require_tetra(p);
  return is_octagon(tetra_tuple(p.weights()));
}

std::vector<std::string> check_track(const TetraTuple& w, const TrackClass& c,
                                     const SeparationPartition& s) {
  std::vector<std::string> out;
  const std::string tag = tuple_string(w) + ": ";
  auto side_of = [&](int v) {
    return std::find(s.vertices[0].begin(), s.vertices[0].end(), v) != s.vertices[0].end() ? 0 : 1;
  };
  if (s.vertices[0].empty() || s.vertices[1].empty()) out.push_back(tag + "a side holds no vertex");
  if (c.kind == TrackClass::Kind::ThreeTrack) {
    const int mine = side_of(c.vertex);
    if (s.vertices[mine].size() != 1) out.push_back(tag + "3-track does not isolate its vertex");
    return out;
  }
  const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
  if (total != 4 * c.n) out.push_back(tag + "weight is not 4n");
  if (c.a + c.b != c.n) out.push_back(tag + "a+b != n");
  if (std::gcd(c.a, c.b) != 1) out.push_back(tag + "gcd(a,b) != 1");
  if (c.n % 2 == 0 && (c.a % 2 == 0 || c.b % 2 == 0)) out.push_back(tag + "n even but a or b even");
  if (c.n % 2 == 1 && (c.a % 2) == (c.b % 2)) out.push_back(tag + "n odd but a,b same parity");
  // Even n: each axis edge stays on one side; odd n: each a-pair edge does.
  const auto& mono = c.n % 2 == 0 ? c.axis : c.a_pair;
  std::array<int, 2> sides{};
  for (int k = 0; k < 2; ++k) {
    const auto& ev = T().edge(mono.edges[k]).vertices;
    if (side_of(ev[0]) != side_of(ev[1])) {
      out.push_back(tag + "edge " + T().edge(mono.edges[k]).id + " is split by the track");
    }
    sides[k] = side_of(ev[0]);
  }
  if (sides[0] == sides[1]) out.push_back(tag + "separation does not follow the a-parity rule");
  return out;
}

const std::vector<std::array<int, 6>>& tetra_symmetries() {
  static const std::vector<std::array<int, 6>> group = [] {
    std::vector<std::array<int, 6>> out;
    std::array<int, 4> sigma{0, 1, 2, 3};
    do {
      std::array<int, 6> g{};
      for (int i = 0; i < 6; ++i) {
        const auto& ev = T().edge(T().edge_index(kTetraEdgeOrder[i])).vertices;
        int e = *T().find_edge(sigma[ev[0]], sigma[ev[1]]);
        g[i] = tuple_slot(e);
      }
      out.push_back(g);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
  }();
  return group;
}

TetraTuple act(const std::array<int, 6>& g, const TetraTuple& w) {
  TetraTuple out{};
  for (int i = 0; i < 6; ++i) out[g[i]] = w[i];
  return out;
}

TetraTuple canonical_form(const TetraTuple& w) {
  TetraTuple best = w;
  for (const auto& g : tetra_symmetries()) best = std::min(best, act(g, w));
  return best;
}

namespace {

bool tuple_realizable(const TetraTuple& w) {
  return weights_realizable(T(), tetra_weights(w));
}

void visit(const TetraTuple& w, bool symmetry, EnumerationReport& r) {
  ++r.vectors_visited;
  if (!tuple_realizable(w)) return;
  std::int64_t orbit = 1;
  if (symmetry) {
    if (canonical_form(w) != w) return;
    std::set<TetraTuple> images;
    for (const auto& g : tetra_symmetries()) images.insert(act(g, w));
    orbit = static_cast<std::int64_t>(images.size());
  }
  auto p = pattern_from_weights(tetrahedron(), tetra_weights(w));
  if (components(p).size() != 1) return;
  const std::int64_t weight = p.total_weight();
  r.track_count += orbit;
  r.weight_counts[weight] += orbit;
  if (weight != 3 && weight % 4 != 0) {
    r.violations.push_back(tuple_string(w) + ": track weight " + std::to_string(weight) +
                           " is neither 3 nor a multiple of 4");
  }
  TrackRecord rec;
  rec.weights = w;
  rec.orbit_size = orbit;
  try {
    rec.cls = classify(p);
    rec.sep = separation(p);
  } catch (const Error& e) {
    r.violations.push_back(std::string(e.what()));
    return;
  }
  for (auto& v : check_track(w, rec.cls, rec.sep)) r.violations.push_back(std::move(v));
  r.tracks.push_back(std::move(rec));
}

// All tuples with w[0] == first and total <= bound.
void sweep_first(std::int64_t first, std::int64_t bound, bool symmetry, EnumerationReport& r) {
  TetraTuple w{first, 0, 0, 0, 0, 0};
  auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
    if (i == 6) {
      visit(w, symmetry, r);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      w[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 1, bound - first);
}

}  // namespace

EnumerationReport enumerate_and_verify(std::int64_t max_total_weight, const EnumerateOptions& opts) {
  EnumerationReport r;
  r.max_total_weight = max_total_weight;
  r.symmetry = opts.symmetry;
  const int threads = std::max(1, opts.threads);
  std::vector<EnumerationReport> parts(static_cast<std::size_t>(max_total_weight + 1));
  if (threads == 1) {
    for (std::int64_t f = 0; f <= max_total_weight; ++f) sweep_first(f, max_total_weight, opts.symmetry, parts[f]);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
      pool.emplace_back([&] {
        for (std::int64_t f; (f = next++) <= max_total_weight;) {
          sweep_first(f, max_total_weight, opts.symmetry, parts[f]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& part : parts) {
    r.vectors_visited += part.vectors_visited;
    r.track_count += part.track_count;
    for (auto [k, v] : part.weight_counts) r.weight_counts[k] += v;
    for (auto& t : part.tracks) r.tracks.push_back(std::move(t));
    for (auto& v : part.violations) r.violations.push_back(std::move(v));
  }
  auto key = [](const TrackRecord& t) {
    return std::make_pair(std::accumulate(t.weights.begin(), t.weights.end(), std::int64_t{0}), t.weights);
  };
  std::sort(r.tracks.begin(), r.tracks.end(),
            [&](const TrackRecord& a, const TrackRecord& b) { return key(a) < key(b); });
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

}  // namespace tracklab
