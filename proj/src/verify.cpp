#include "tracklab/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tracklab/fixtures.hpp"
#include "tracklab/random.hpp"

namespace tracklab {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

json SuiteReport::to_json() const {
  json j{{"version", kSchemaVersion}, {"kind", "verify"}, {"suite", suite}, {"passed", passed()}};
  json arr = json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = arr;
  return j;
}

namespace {

// Runs f, turning any escaping error into a failed check.
template <typename F>
void run(SuiteReport& r, const std::string& name, F&& f) {
  Check c{name, false, ""};
  try {
    c.passed = f(c.detail);
  } catch (const std::exception& e) {
    c.detail = std::string("error: ") + e.what();
  }
  r.checks.push_back(std::move(c));
}

std::vector<std::int64_t> sorted_weights(const std::vector<Component>& comps) {
  std::vector<std::int64_t> out;
  for (const auto& k : comps) out.push_back(k.weight());
  std::sort(out.begin(), out.end());
  return out;
}

std::string list(const std::vector<std::int64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

SuiteReport verify_classification(const VerifyOptions& o) {
  SuiteReport r{"classification", {}};
  EnumerationReport full;
  run(r, "enumeration to the bound has no violations", [&](std::string& d) {
    full = enumerate_and_verify(o.max_weight, {false, o.threads});
    d = std::to_string(full.track_count) + " tracks, " + std::to_string(full.violations.size()) + " violations";
    if (!full.violations.empty()) d += "; first: " + full.violations.front();
    return full.violations.empty();
  });
  run(r, "track weights are 3 or multiples of 4", [&](std::string& d) {
    for (auto [w, n] : full.weight_counts) {
      d += std::to_string(w) + ":" + std::to_string(n) + " ";
      if (w != 3 && w % 4 != 0) return false;
    }
    return !full.weight_counts.empty();
  });
  run(r, "symmetry reduction gives the same counts", [&](std::string& d) {
    auto sym = enumerate_and_verify(o.max_weight, {true, o.threads});
    d = std::to_string(sym.tracks.size()) + " orbits covering " + std::to_string(sym.track_count) + " tracks";
    return sym.track_count == full.track_count && sym.weight_counts == full.weight_counts &&
           sym.violations.empty();
  });
  run(r, "bound 8: four 3-tracks, three 4-tracks, three octagons", [&](std::string& d) {
    auto small = enumerate_and_verify(8);
    int oct = 0;
    for (const auto& t : small.tracks) oct += is_octagon(t.weights);
    d = "octagons " + std::to_string(oct);
    return small.weight_counts == std::map<std::int64_t, std::int64_t>{{3, 4}, {4, 3}, {8, 3}} && oct == 3;
  });
  run(r, "octagon: one 8-track splitting {u,v}|{w,z} and {e,f}|{g,h}", [&](std::string& d) {
    auto p = pattern_from_weights(tetrahedron(), state_from_json(fixture("octagon")).weights());
    auto s = separation(p);
    auto c = classify(p);
    d = describe(c) + " " + describe(p.complex(), s);
    return components(p).size() == 1 && is_octagon(p) && c.n == 2 && c.a == 1 && c.b == 1 &&
           s.vertices[0] == std::vector<int>{0, 1} && s.vertices[1] == std::vector<int>{2, 3} &&
           d.find("{g,h}") != std::string::npos && d.find("{e,f}") != std::string::npos;
  });
  run(r, "12-track: n=3, a=2, b=1 splitting {u,z}|{v,w}", [&](std::string& d) {
    auto p = pattern_from_weights(tetrahedron(), state_from_json(fixture("twelve_track")).weights());
    auto c = classify(p);
    auto s = separation(p);
    d = describe(c) + " " + describe(p.complex(), s);
    const auto& T = *tetrahedron();
    return c.n == 3 && c.a == 2 && c.b == 1 && to_string(T, c.axis) == "{uv,wz}" &&
           s.vertices[0] == std::vector<int>{0, 3} && s.vertices[1] == std::vector<int>{1, 2};
  });
  return r;
}

SuiteReport verify_spattern(const VerifyOptions& o) {
  SuiteReport r{"spattern", {}};
  run(r, "11-strack: valid, no +/- pairs, underlying {3,4,4}", [&](std::string& d) {
    auto s = fixture_state("eleven_strack");
    auto under = sorted_weights(components(underlying_pattern(s)));
    d = "stracks " + list(sorted_weights(decompose(s))) + ", underlying " + list(under);
    return validate_spattern(s).empty() && sorted_weights(decompose(s)) == std::vector<std::int64_t>{11} &&
           find_plus_minus_pairs(s).empty() && under == std::vector<std::int64_t>{3, 4, 4};
  });
  run(r, "12+3 spattern: stracks {3,12}, uncross reaches the underlying pattern", [&](std::string& d) {
    auto s = fixture_state("twelve_plus_three");
    auto p = underlying_pattern(s);
    auto u = uncross(s);
    d = "stracks " + list(sorted_weights(decompose(s))) + ", underlying " + list(sorted_weights(components(p)));
    return validate_spattern(s).empty() && sorted_weights(decompose(s)) == std::vector<std::int64_t>{3, 12} &&
           sorted_weights(components(p)) == std::vector<std::int64_t>{3, 12} && u.ok() &&
           same_structure(u.uncrossed->result, p.state()) && count_crossings(u.uncrossed->result) == 0;
  });
  run(r, "random reductions drop weight by 2 and stay valid", [&](std::string& d) {
    Rng rng(o.seed);
    std::int64_t removals = 0;
    for (int i = 0; i < o.cases; ++i) {
      auto s = random_singular_state(rng, 40);
      const auto start = s.total_weight();
      for (int steps = 0;; ++steps) {
        auto pairs = find_removable_pairs(s);
        if (pairs.empty()) break;
        if (steps > start / 2) {
          d = "case " + std::to_string(i) + " did not terminate";
          return false;
        }
        const auto& pick = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        auto next = remove_pair(s, pick.pair);
        if (next.total_weight() != s.total_weight() - 2 || !validate_state(next).empty()) {
          d = "case " + std::to_string(i) + " broke at step " + std::to_string(steps);
          return false;
        }
        s = std::move(next);
        ++removals;
      }
    }
    d = std::to_string(o.cases) + " states, " + std::to_string(removals) + " removals";
    return true;
  });
  run(r, "edge permutations keep weights, underlying pattern, stracks and graph stats", [&](std::string& d) {
    Rng rng(o.seed + 1);
    for (int i = 0; i < o.cases; ++i) {
      auto s = random_spattern(rng, 40);
      int e = std::uniform_int_distribution<int>(0, 5)(rng);
      auto t = apply_edge_permutation(s, random_permutation(rng, s, e));
      bool same = t.weights() == s.weights() && validate_state(t, false).empty() &&
                  same_structure(underlying_pattern(t).state(), underlying_pattern(s).state()) &&
                  sorted_weights(decompose(t)) == sorted_weights(decompose(s)) && graph_stats(t) == graph_stats(s);
      if (!same) {
        d = "case " + std::to_string(i) + " changed";
        return false;
      }
    }
    d = std::to_string(o.cases) + " permutations";
    return true;
  });
  run(r, "embedded tracks of weight 8..16 have a clean removable +/- pair", [&](std::string& d) {
    auto rep = enumerate_and_verify(16);
    int checked = 0;
    for (const auto& t : rep.tracks) {
      auto s = pattern_from_weights(tetrahedron(), tetra_weights(t.weights)).state();
      const bool big = t.cls.weight() > 4;
      auto pm = find_plus_minus_pairs(s);
      bool clean = std::any_of(pm.begin(), pm.end(), [](const PlusMinusPair& p) { return p.clean; });
      if (big != !pm.empty() || big != clean || big != !find_removable_pairs(s).empty()) {
        d = "track " + describe(t.cls) + " breaks the rule";
        return false;
      }
      ++checked;
    }
    d = std::to_string(checked) + " tracks";
    return checked > 0;
  });
  return r;
}

SuiteReport verify_sweep(const VerifyOptions& o) {
  SuiteReport r{"sweep", {}};
  run(r, "octagon sweep: +-2 steps, thick octagon, almost normal", [&](std::string& d) {
    auto t = fixture_trace("octagon_sweep");
    auto rep = replay(t);
    auto sr = swap_reduce(t);
    auto a = analyze_first_thick(sr.trace);
    d = to_json(a).dump();
    return is_normal_state(t.initial) && rep.weights[1] == rep.weights[0] + 2 && !sr.reduced &&
           a.exceptional_weight == 8 && a.piece_removable_pairs == 2 && a.disconnects &&
           std::all_of(a.other_removable_pairs.begin(), a.other_removable_pairs.end(), [](int n) { return n == 0; }) &&
           a.almost_normal_after_uncross;
  });
  run(r, "12-strack sweep: each removal leaves {3,7}", [&](std::string& d) {
    auto t = fixture_trace("twelve_strack_sweep");
    auto a = analyze_first_thick(swap_reduce(t).trace);
    d = to_json(a).dump();
    const std::vector<std::int64_t> want{3, 7};
    return a.exceptional_weight == 12 && a.piece_removable_pairs == 2 && a.added.split == want &&
           a.removed.split == want && a.disconnects;
  });
  run(r, "swap_reduce strictly lowers width on reducible traces", [&](std::string& d) {
    for (const char* name : {"swap_two_stracks", "swap_one_strack", "finger_sweep"}) {
      auto t = fixture_trace(name);
      auto sr = swap_reduce(t);
      d += std::string(name) + ": " + list(width(t).sorted) + " -> " + list(width(sr.trace).sorted) + "; ";
      if (!sr.reduced || compare(width(sr.trace), width(t)) >= 0) return false;
    }
    return true;
  });
  run(r, "width ignores the order of the weights", [&](std::string& d) {
    Rng rng(o.seed);
    for (int i = 0; i < o.cases; ++i) {
      std::vector<std::int64_t> w(std::uniform_int_distribution<int>(1, 12)(rng));
      for (auto& x : w) x = std::uniform_int_distribution<int>(0, 40)(rng);
      auto before = width_of(w);
      std::shuffle(w.begin(), w.end(), rng);
      if (!(width_of(w) == before)) return false;
    }
    d = std::to_string(o.cases) + " shuffles";
    return true;
  });
  run(r, "connected sweep stays connected; disconnected states are rejected", [&](std::string& d) {
    auto ok = fixture_trace("finger_sweep");
    replay(ok);
    auto bad = fixture_trace("octagon_sweep");
    bad.sphere = true;
    try {
      replay(bad);
    } catch (const InvalidEventError& e) {
      d = e.what();
      return true;
    }
    return false;
  });
  return r;
}

}  // namespace tracklab
