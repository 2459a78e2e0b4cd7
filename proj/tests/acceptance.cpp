// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "tracklab/classify.hpp"
#include "tracklab/fixtures.hpp"
#include "tracklab/random.hpp"
#include "tracklab/spattern.hpp"
#include "tracklab/sweep.hpp"

using namespace tracklab;

namespace {

// Collects the first few failures of one criterion.
struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

std::vector<std::int64_t> sorted_weights(const std::vector<Component>& cs) {
  std::vector<std::int64_t> w;
  for (const auto& c : cs) w.push_back(c.weight());
  std::sort(w.begin(), w.end());
  return w;
}

std::string show(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str() + "}";
}

SingularState tps(const TetraTuple& t) {
  return pattern_from_weights(tetrahedron(), tetra_weights(t)).state();
}

// Unordered vertex and centre partitions, e.g. {"uv","wz"} and {"ef","gh"}.
using Split = std::set<std::string>;
std::pair<Split, Split> partitions(const SeparationPartition& sep) {
  const auto& T = *tetrahedron();
  Split v, c;
  for (int side = 0; side < 2; ++side) {
    std::string vs, cs;
    for (int x : sep.vertices[side]) vs += T.vertices()[x];
    for (int x : sep.centres[side]) cs += centre_name(T, x);
    std::sort(vs.begin(), vs.end());
    std::sort(cs.begin(), cs.end());
    v.insert(vs);
    c.insert(cs);
  }
  return {v, c};
}

bool threw(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error&) {
    return true;
  }
  return false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion1(Probe& p) {
  auto t0 = std::chrono::steady_clock::now();
  auto rep = enumerate_and_verify(24);
  double secs = seconds_since(t0);
  p.expect(rep.violations.empty(), "violations: " + std::to_string(rep.violations.size()));
  const std::set<std::int64_t> allowed{3, 4, 8, 12, 16, 20, 24};
  for (const auto& t : rep.tracks) {
    const auto w = t.cls.weight();
    p.expect(allowed.count(w) > 0, "weight " + std::to_string(w));
    if (t.cls.kind == TrackClass::Kind::FourN) {
      const auto n = t.cls.n;
      p.expect(4 * n == w, describe(t.cls) + ": weight is not 4n");
      p.expect(t.cls.a + t.cls.b == n && t.cls.a >= 0 && t.cls.b > 0, describe(t.cls) + ": a+b != n");
      p.expect(std::gcd(t.cls.a, t.cls.b) == 1, describe(t.cls) + ": not coprime");
      if (n % 2 == 0) p.expect(t.cls.a % 2 == 1 && t.cls.b % 2 == 1, describe(t.cls) + ": parity");
    } else {
      p.expect(w == 3, describe(t.cls) + ": 3-track of wrong weight");
    }
  }
  // The enumerated tracks are exactly the connected tuples found by brute
  // force over all non-crossing matchings.
  auto brute = oracle::connected_tuples(12);
  std::map<oracle::Tuple, std::int64_t> mine;
  for (const auto& t : rep.tracks) {
    if (t.cls.weight() <= 12) mine[t.weights] = t.cls.weight();
  }
  p.expect(brute == mine, "enumeration differs from brute force at bound 12");
  p.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
}

void criterion2(Probe& p) {
  auto pat = pattern_from_weights(tetrahedron(), tetra_weights({2, 2, 1, 1, 1, 1}));
  auto comps = components(pat);
  p.expect(comps.size() == 1 && comps[0].weight() == 8, "not a single 8-track");
  p.expect(is_octagon(pat), "is_octagon false");
  const auto& T = *tetrahedron();
  auto sep = separation(pat);
  auto [vs, cs] = partitions(sep);
  p.expect(vs == Split{"uv", "wz"} && cs == Split{"ef", "gh"}, "separation " + describe(T, sep));
  // Independent: ray parity on a planar embedding of the pattern.
  auto rays = oracle::sides({2, 2, 1, 1, 1, 1});
  p.expect(rays.vertex == std::array<int, 4>{0, 0, 1, 1}, "ray parity disagrees on vertices");
  std::array<std::string, 2> centres;
  for (int t = 0; t < 4; ++t) centres[rays.centre[t]] += centre_name(T, t);
  std::sort(centres[0].begin(), centres[0].end());
  std::sort(centres[1].begin(), centres[1].end());
  p.expect((Split{centres[0], centres[1]} == Split{"ef", "gh"}), "ray parity centres " + centres[0] + "|" + centres[1]);
  int octagons = 0;
  for (const auto& t : enumerate_and_verify(8).tracks) octagons += is_octagon(t.weights);
  p.expect(octagons == 3, "octagon classes at bound 8: " + std::to_string(octagons));
}

void criterion3(Probe& p) {
  auto pat = pattern_from_weights(tetrahedron(), tetra_weights({3, 3, 2, 2, 1, 1}));
  p.expect(components(pat).size() == 1, "not connected");
  auto c = classify(pat);
  p.expect(c.kind == TrackClass::Kind::FourN && c.n == 3 && c.a == 2 && c.b == 1, describe(c));
  auto sep = separation(pat);
  auto [vs, cs] = partitions(sep);
  p.expect(vs == Split{"uz", "vw"} && cs == Split{"eg", "fh"}, "separation " + describe(*tetrahedron(), sep));
  auto rays = oracle::sides({3, 3, 2, 2, 1, 1});
  p.expect(rays.vertex == std::array<int, 4>{0, 1, 1, 0}, "ray parity disagrees");
  std::array<std::string, 2> centres;
  for (int t = 0; t < 4; ++t) centres[rays.centre[t]] += centre_name(*tetrahedron(), t);
  for (auto& x : centres) std::sort(x.begin(), x.end());
  p.expect((Split{centres[0], centres[1]} == Split{"eg", "fh"}), "ray parity centres " + centres[0] + "|" + centres[1]);
}

void criterion4(Probe& p) {
  auto s = fixture_state("eleven_strack");
  p.expect(validate_spattern(s).empty(), "does not validate");
  auto st = strack_decomposition(s);
  p.expect(sorted_weights(st) == std::vector<std::int64_t>{11}, "stracks " + show(sorted_weights(st)));
  p.expect(find_plus_minus_pairs(s).empty(), "has +/- pairs");
  p.expect(oracle::plus_minus(s).empty(), "oracle finds +/- pairs");
  auto u = sorted_weights(components(underlying_pattern(s)));
  p.expect(u == std::vector<std::int64_t>{3, 4, 4}, "underlying " + show(u));
}

void criterion5(Probe& p) {
  auto s = fixture_state("twelve_plus_three");
  p.expect(validate_spattern(s).empty(), "does not validate");
  auto st = sorted_weights(strack_decomposition(s));
  p.expect(st == std::vector<std::int64_t>{3, 12}, "stracks " + show(st));
  auto under = underlying_pattern(s);
  auto u = sorted_weights(components(under));
  p.expect(u == std::vector<std::int64_t>{3, 12}, "underlying " + show(u));
  auto out = uncross(s);
  p.expect(out.ok(), "uncross obstructed");
  if (out.ok()) {
    p.expect(count_crossings(out.uncrossed->result) == 0, "crossings remain");
    p.expect(same_structure(out.uncrossed->result, under.state()), "differs from the underlying pattern");
    p.expect(out.uncrossed->result.weights() == under.weights(), "weights differ");
  }
}

void criterion6(Probe& p) {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(20260101);
  std::int64_t removals = 0;
  for (int i = 0; i < 600; ++i) {
    auto s = random_singular_state(rng, 40);
    p.expect(s.total_weight() <= 40 && validate_state(s).empty(), "bad generated state " + std::to_string(i));
    int steps = 0;
    for (auto pairs = find_removable_pairs(s); !pairs.empty(); pairs = find_removable_pairs(s)) {
      for (const auto& r : pairs) {
        auto next = remove_pair(s, r.pair);
        ++removals;
        p.expect(next.total_weight() == s.total_weight() - 2, "weight did not drop by 2 in case " + std::to_string(i));
        p.expect(validate_state(next).empty(), "invalid after removal in case " + std::to_string(i));
      }
      s = remove_pair(s, pairs.front().pair);
      if (++steps > 20) {
        p.expect(false, "reduction did not terminate in case " + std::to_string(i));
        break;
      }
    }
  }
  p.expect(removals > 500, "too few removals exercised: " + std::to_string(removals));
  for (const auto& t : enumerate_and_verify(16).tracks) {
    if (t.cls.weight() <= 4) continue;
    auto s = tps(t.weights);
    auto pm = find_plus_minus_pairs(s);
    p.expect(!pm.empty(), describe(t.cls) + ": no +/- pair");
    bool clean = std::any_of(pm.begin(), pm.end(), [](const PlusMinusPair& x) { return x.clean; });
    p.expect(clean, describe(t.cls) + ": no clean pair");
    p.expect(!find_removable_pairs(s).empty(), describe(t.cls) + ": nothing removable");
  }
  double secs = seconds_since(t0);
  p.expect(secs < 120.0, "took " + std::to_string(secs) + " s");
}

void criterion7(Probe& p) {
  Rng rng(777);
  for (int i = 0; i < 600; ++i) {
    auto s = random_spattern(rng, 40);
    auto base_under = underlying_pattern(s).state();
    auto base_st = sorted_weights(strack_decomposition(s));
    auto base_gs = graph_stats(s);
    auto t = s;
    for (int e = 0; e < 6; ++e) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) t = apply_edge_permutation(t, random_permutation(rng, t, e));
    }
    const auto tag = " (case " + std::to_string(i) + ")";
    p.expect(t.weights() == s.weights(), "weights" + tag);
    p.expect(same_structure(underlying_pattern(t).state(), base_under), "underlying pattern" + tag);
    p.expect(sorted_weights(strack_decomposition(t)) == base_st, "strack weights" + tag);
    p.expect(graph_stats(t) == base_gs, "graph_stats" + tag);
  }
}

void criterion8(Probe& p) {
  auto tr = fixture_trace("octagon_sweep");
  auto r = replay(tr);
  p.expect(is_normal_state(tr.initial), "initial state is not normal");
  p.expect(r.weights.size() >= 2 && r.weights[1] == r.weights[0] + 2, "w1 != w0 + 2");
  for (std::size_t i = 1; i < r.weights.size(); ++i) {
    p.expect(std::abs(r.weights[i] - r.weights[i - 1]) == 2, "step is not +-2");
  }
  // A bad step must be refused.
  auto broken = tr;
  broken.events.push_back(RemovePairEvent{{"uv.0", "uz.0"}});
  p.expect(threw([&] { replay(broken); }), "replay accepted a non-removable pair");
  auto sr = swap_reduce(tr);
  auto again = swap_reduce(sr.trace);
  p.expect(!again.reduced && width(again.trace) == width(sr.trace), "swap_reduce has no fixpoint");
  auto a = analyze_first_thick(sr.trace);
  p.expect(a.piece_removable_pairs == 2, "exceptional piece has " + std::to_string(a.piece_removable_pairs) + " removable pairs");
  p.expect(a.exceptional_weight == 8, "exceptional weight " + std::to_string(a.exceptional_weight));
  p.expect(a.disconnects && a.added.disconnects && a.removed.disconnects, "removal does not disconnect the piece");
  p.expect(a.almost_normal_after_uncross, "not almost normal after uncrossing");

  auto a8 = analyze_first_thick(swap_reduce(fixture_trace("twelve_strack_sweep")).trace);
  p.expect(a8.added.split == std::vector<std::int64_t>{3, 7}, "twelve-strack split " + show(a8.added.split));
  p.expect(a8.removed.split == std::vector<std::int64_t>{3, 7}, "twelve-strack split " + show(a8.removed.split));
}

void criterion9(Probe& p) {
  int reducible = 0;
  for (const auto& n : fixture_names()) {
    if (fixture(n).value("kind", "") != "trace") continue;
    auto t = fixture_trace(n);
    auto r = swap_reduce(t);
    int cmp = compare(width(r.trace), width(t));
    p.expect(cmp <= 0, n + ": width grew");
    p.expect(r.reduced == (cmp < 0), n + ": reduced flag disagrees with width");
    reducible += r.reduced;
    // The reduced trace must replay to the same endpoints.
    auto a = replay(t), b = replay(r.trace);
    p.expect(a.states.front() == b.states.front() && a.states.back() == b.states.back(), n + ": endpoints moved");
  }
  p.expect(reducible >= 3, "only " + std::to_string(reducible) + " reducible fixtures");
  Rng rng(99);
  std::uniform_int_distribution<int> d(0, 40);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::int64_t> w(1 + i % 12);
    for (auto& x : w) x = d(rng);
    auto q = w;
    std::shuffle(q.begin(), q.end(), rng);
    p.expect(width_of(w) == width_of(q), "width not permutation invariant");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Probe&)>>> criteria{
      {"classification of tracks up to weight 24", criterion1},
      {"octagon facts", criterion2},
      {"12-track facts", criterion3},
      {"11-strack fixture", criterion4},
      {"12+3 strack fixture", criterion5},
      {"reduction properties", criterion6},
      {"permutation invariance", criterion7},
      {"sweep analysis", criterion8},
      {"width mechanics", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Probe p;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(p);
    } catch (const std::exception& e) {
      p.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = p.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << seconds_since(t0) << " s)\n";
    for (const auto& f : p.failures) std::cout << "    " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
