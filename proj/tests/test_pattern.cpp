#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "oracle.hpp"
#include "tracklab/pattern.hpp"

using namespace tracklab;

namespace {

Pattern tp(const std::array<std::int64_t, 6>& t) { return pattern_from_weights(tetrahedron(), tetra_weights(t)); }

std::vector<std::int64_t> comp_weights(const Pattern& p) {
  std::vector<std::int64_t> out;
  for (const auto& k : components(p)) out.push_back(k.weight());
  std::sort(out.begin(), out.end());
  return out;
}

template <typename F>
void for_each_tuple(std::int64_t bound, F f) {
  std::array<std::int64_t, 6> t{};
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
    if (i == 6) return f(t);
    for (std::int64_t x = 0; x <= left; ++x) {
      t[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, bound);
}

}  // namespace

TEST(CornerCounts, Formula) {
  EXPECT_EQ(corner_counts(2, 1, 1), (CornerArcCounts{{0, 1, 1}}));
  EXPECT_EQ(corner_counts(3, 2, 1), (CornerArcCounts{{0, 1, 2}}));
  try {
    corner_counts(1, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParityViolation);
  }
  try {
    corner_counts(4, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TriangleInequalityViolation);
  }
}

TEST(Pattern, ErrorsNameTheTriangle) {
  try {
    tp({1, 0, 0, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParityViolation);
    EXPECT_NE(std::string(e.what()).find("in triangle uv"), std::string::npos);
  }
}

// The library's matching equals the only non-crossing matching found by
// exhaustive search, and realizability means exactly one exists per triangle.
TEST(Pattern, MatchesBruteForceMatchings) {
  int realized = 0;
  for_each_tuple(10, [&](const std::array<std::int64_t, 6>& t) {
    const auto w = oracle::by_edge(t);
    bool unique = true;
    std::vector<oracle::Matching> ms(4);
    for (int tri = 0; tri < 4; ++tri) {
      auto all = oracle::noncrossing_matchings(tri, w);
      unique = unique && all.size() == 1;
      if (all.size() == 1) ms[tri] = all.front();
    }
    const auto& T = *tetrahedron();
    ASSERT_EQ(weights_realizable(T, tetra_weights(t)), unique);
    if (!unique) return;
    ++realized;
    auto p = tp(t);
    const auto& s = p.state();
    for (int tri = 0; tri < 4; ++tri) {
      std::set<std::pair<oracle::Slot, oracle::Slot>> want(ms[tri].begin(), ms[tri].end()), got;
      for (const auto& l : s.lines(tri)) {
        oracle::Slot a{s.point(l.a).edge, s.position(l.a)}, b{s.point(l.b).edge, s.position(l.b)};
        // Oracle pairs list the lower slot first.
        got.insert(std::min(a, b) == a ? std::make_pair(a, b) : std::make_pair(b, a));
      }
      std::set<std::pair<oracle::Slot, oracle::Slot>> want_sorted;
      for (auto [a, b] : want) want_sorted.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
      ASSERT_EQ(got, want_sorted);
    }
    EXPECT_EQ(count_crossings(s), 0);
    EXPECT_TRUE(validate_state(s, false).empty());
  });
  EXPECT_GT(realized, 50);  // not vacuous
}

TEST(Pattern, ComponentsMatchOracle) {
  for_each_tuple(12, [&](const std::array<std::int64_t, 6>& t) {
    if (!weights_realizable(*tetrahedron(), tetra_weights(t))) return;
    ASSERT_EQ(comp_weights(tp(t)), oracle::component_sizes(t));
  });
}

TEST(Pattern, Examples) {
  EXPECT_EQ(comp_weights(tp({2, 2, 1, 1, 1, 1})), (std::vector<std::int64_t>{8}));
  EXPECT_EQ(comp_weights(tp({3, 0, 2, 1, 2, 1})), (std::vector<std::int64_t>{3, 3, 3}));
  EXPECT_EQ(comp_weights(tp({0, 0, 0, 0, 0, 0})), (std::vector<std::int64_t>{}));
  auto track = tp({3, 3, 2, 2, 1, 1});
  auto comps = components(track);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(track_pattern(track, comps[0]).weights(), track.weights());
}

TEST(Pattern, EquivalenceAndNormality) {
  EXPECT_TRUE(equivalent(tp({2, 2, 1, 1, 1, 1}), tp({2, 2, 1, 1, 1, 1})));
  EXPECT_FALSE(equivalent(tp({2, 2, 1, 1, 1, 1}), tp({1, 1, 2, 2, 1, 1})));
  auto oct = Complex2::from_lists({"a", "b", "c", "d", "n", "s"}, {},
                                  {{"n", "a", "b"}, {"n", "b", "c"}, {"n", "c", "d"}, {"n", "d", "a"},
                                   {"s", "a", "b"}, {"s", "b", "c"}, {"s", "c", "d"}, {"s", "d", "a"}});
  auto octp = std::make_shared<const Complex2>(oct);
  auto other = pattern_from_weights(octp, EdgeWeights(octp->num_edges(), 0));
  try {
    equivalent(tp({0, 0, 0, 0, 0, 0}), other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ComplexMismatch);
  }
  EXPECT_TRUE(is_normal(tp({1, 0, 2, 1, 2, 1})));   // 3-track at u plus a 4-track
  EXPECT_FALSE(is_normal(tp({2, 2, 1, 1, 1, 1})));  // octagon
  EXPECT_TRUE(is_normal(tp({0, 0, 0, 0, 0, 0})));
}

TEST(Pattern, OnPointsKeepsNamesAndLabels) {
  SingularState s = tp({2, 2, 1, 1, 1, 1}).state();
  s.set_label(0, 7);
  auto p = pattern_on_points(s);
  EXPECT_EQ(p.state().point(*p.state().find_point(s.point(0).name)).label, 7);
  EXPECT_TRUE(same_structure(p.state(), s));
}

TEST(Pattern, RealizableRejectsBadVectors) {
  const auto& T = *tetrahedron();
  EXPECT_FALSE(weights_realizable(T, {1, 1, 1}));
  EXPECT_FALSE(weights_realizable(T, tetra_weights({-1, 1, 0, 0, 0, 0})));
  EXPECT_TRUE(weights_realizable(T, tetra_weights({1, 0, 1, 0, 1, 0})));
}
