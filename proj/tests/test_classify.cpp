#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "oracle.hpp"
#include "tracklab/classify.hpp"

using namespace tracklab;

namespace {

const Complex2& T() { return *tetrahedron(); }
Pattern tp(const TetraTuple& t) { return pattern_from_weights(tetrahedron(), tetra_weights(t)); }

std::set<std::string> names(const std::vector<int>& vs) {
  std::set<std::string> out;
  for (int v : vs) out.insert(T().vertices()[v]);
  return out;
}

std::set<char> centres(const std::vector<int>& ts) {
  std::set<char> out;
  for (int t : ts) out.insert(centre_name(T(), t));
  return out;
}

// Number of coprime (a, b) with a + b = n, a, b >= 1, counted directly.
std::int64_t coprime_splits(std::int64_t n) {
  std::int64_t k = 0;
  for (std::int64_t a = 1; a < n; ++a) k += std::gcd(a, n - a) == 1;
  return k;
}

}  // namespace

TEST(Classify, ThreeTrack) {
  auto c = classify_weights({1, 0, 1, 0, 1, 0});
  EXPECT_EQ(c.kind, TrackClass::Kind::ThreeTrack);
  EXPECT_EQ(T().vertices()[c.vertex], "u");
  EXPECT_EQ(describe(c), "ThreeTrack{u}");
}

TEST(Classify, Octagon) {
  auto c = classify_weights({2, 2, 1, 1, 1, 1});
  EXPECT_EQ(describe(c), "FourN{n=2,a=1,b=1,axis={uv,wz}}");
  EXPECT_EQ(c.a_parity, Parity::Odd);
}

TEST(Classify, TwelveTrack) {
  auto c = classify_weights({3, 3, 2, 2, 1, 1});
  EXPECT_EQ(describe(c), "FourN{n=3,a=2,b=1,axis={uv,wz}}");
  EXPECT_EQ(to_string(T(), c.a_pair), "{uz,vw}");
  EXPECT_EQ(c.a_parity, Parity::Even);
}

// The quad with weight 0 on {uv,wz} has a = 0 on that pair; its axis is the
// preceding pair {uw,vz}. The quad whose axis is {uv,wz} is (1,1,0,0,1,1).
TEST(Classify, FourTracks) {
  auto c = classify_weights({0, 0, 1, 1, 1, 1});
  EXPECT_EQ(c.n, 1);
  EXPECT_EQ(c.a, 0);
  EXPECT_EQ(c.b, 1);
  EXPECT_EQ(to_string(T(), c.a_pair), "{uv,wz}");
  EXPECT_EQ(to_string(T(), c.axis), "{uw,vz}");
  auto d = classify_weights({1, 1, 0, 0, 1, 1});
  EXPECT_EQ(describe(d), "FourN{n=1,a=0,b=1,axis={uv,wz}}");
  auto s = separation(tp({1, 1, 0, 0, 1, 1}));
  EXPECT_EQ(names(s.vertices[0]), (std::set<std::string>{"u", "z"}));
}

TEST(Classify, Errors) {
  try {
    classify_weights({2, 0, 2, 0, 2, 0});  // two parallel 3-tracks
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotATrack);
  }
  try {
    classify_weights({1, 0, 0, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParityViolation);
  }
}

TEST(Separation, Examples) {
  auto s3 = separation(tp({1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(names(s3.vertices[0]), (std::set<std::string>{"u"}));
  EXPECT_EQ(names(s3.vertices[1]), (std::set<std::string>{"v", "w", "z"}));

  auto s8 = separation(tp({2, 2, 1, 1, 1, 1}));
  EXPECT_EQ(names(s8.vertices[0]), (std::set<std::string>{"u", "v"}));
  EXPECT_EQ(names(s8.vertices[1]), (std::set<std::string>{"w", "z"}));
  std::set<std::set<char>> c8{centres(s8.centres[0]), centres(s8.centres[1])};
  EXPECT_EQ(c8, (std::set<std::set<char>>{{'e', 'f'}, {'g', 'h'}}));

  auto s12 = separation(tp({3, 3, 2, 2, 1, 1}));
  EXPECT_EQ(names(s12.vertices[0]), (std::set<std::string>{"u", "z"}));
  EXPECT_EQ(names(s12.vertices[1]), (std::set<std::string>{"v", "w"}));
  std::set<std::set<char>> c12{centres(s12.centres[0]), centres(s12.centres[1])};
  EXPECT_EQ(c12, (std::set<std::set<char>>{{'e', 'g'}, {'f', 'h'}}));
}

// Union-find cells against crossing parity along edges and rays.
TEST(Separation, AgreesWithRayParity) {
  auto rep = enumerate_and_verify(20);
  ASSERT_FALSE(rep.tracks.empty());
  for (const auto& t : rep.tracks) {
    auto s = oracle::sides(t.weights);
    for (int v = 0; v < 4; ++v) {
      int side = std::count(t.sep.vertices[1].begin(), t.sep.vertices[1].end(), v) ? 1 : 0;
      ASSERT_EQ(side, s.vertex[v]) << describe(t.cls);
    }
    for (int f = 0; f < 4; ++f) {
      int side = std::count(t.sep.centres[1].begin(), t.sep.centres[1].end(), f) ? 1 : 0;
      ASSERT_EQ(side, s.centre[f]) << describe(t.cls);
    }
  }
}

TEST(Octagon, Predicate) {
  EXPECT_TRUE(is_octagon(TetraTuple{2, 2, 1, 1, 1, 1}));
  EXPECT_TRUE(is_octagon(TetraTuple{1, 1, 1, 1, 2, 2}));
  EXPECT_FALSE(is_octagon(TetraTuple{1, 0, 1, 0, 1, 0}));
  EXPECT_FALSE(is_octagon(TetraTuple{3, 3, 2, 2, 1, 1}));
  EXPECT_FALSE(is_octagon(TetraTuple{2, 1, 1, 1, 1, 2}));
}

TEST(Enumerate, SmallBounds) {
  auto r4 = enumerate_and_verify(4);
  EXPECT_EQ(r4.weight_counts, (std::map<std::int64_t, std::int64_t>{{3, 4}, {4, 3}}));
  EXPECT_TRUE(r4.violations.empty());
  std::set<int> cut;
  for (const auto& t : r4.tracks) {
    if (t.cls.kind == TrackClass::Kind::ThreeTrack) cut.insert(t.cls.vertex);
  }
  EXPECT_EQ(cut.size(), 4u);

  auto r8 = enumerate_and_verify(8);
  EXPECT_EQ(r8.weight_counts, (std::map<std::int64_t, std::int64_t>{{3, 4}, {4, 3}, {8, 3}}));
  std::set<OppositeEdgePair> axes;
  for (const auto& t : r8.tracks) {
    if (is_octagon(t.weights)) axes.insert(t.cls.axis);
  }
  EXPECT_EQ(axes.size(), 3u);
}

TEST(Enumerate, SameTracksAsBruteForce) {
  auto oracle_set = oracle::connected_tuples(12);
  auto rep = enumerate_and_verify(12);
  std::map<oracle::Tuple, std::int64_t> mine;
  for (const auto& t : rep.tracks) mine[t.weights] = t.cls.weight();
  EXPECT_EQ(mine, oracle_set);
}

// 4n-tracks for n >= 2 come one per axis for every coprime split of n.
TEST(Enumerate, CountsFollowCoprimeSplits) {
  auto rep = enumerate_and_verify(24);
  EXPECT_TRUE(rep.violations.empty());
  std::map<std::int64_t, std::int64_t> want{{3, 4}, {4, 3}};
  for (std::int64_t n = 2; 4 * n <= 24; ++n) want[4 * n] = 3 * coprime_splits(n);
  EXPECT_EQ(rep.weight_counts, want);
  EXPECT_EQ(want, (std::map<std::int64_t, std::int64_t>{{3, 4}, {4, 3}, {8, 3}, {12, 6}, {16, 6}, {20, 12}, {24, 6}}));
}

TEST(Enumerate, SymmetryAndThreadsAgree) {
  auto plain = enumerate_and_verify(20);
  auto sym = enumerate_and_verify(20, {true, 1});
  auto par = enumerate_and_verify(20, {false, 4});
  EXPECT_EQ(sym.track_count, plain.track_count);
  EXPECT_EQ(sym.weight_counts, plain.weight_counts);
  EXPECT_LT(sym.tracks.size(), plain.tracks.size());
  EXPECT_EQ(par.track_count, plain.track_count);
  ASSERT_EQ(par.tracks.size(), plain.tracks.size());
  for (std::size_t i = 0; i < par.tracks.size(); ++i) EXPECT_EQ(par.tracks[i].weights, plain.tracks[i].weights);
}

TEST(Symmetry, GroupActsOnTracks) {
  const auto& g = tetra_symmetries();
  EXPECT_EQ(g.size(), 24u);
  EXPECT_EQ((std::set<std::array<int, 6>>(g.begin(), g.end()).size()), 24u);
  auto rep = enumerate_and_verify(16);
  std::set<TetraTuple> tracks;
  for (const auto& t : rep.tracks) tracks.insert(t.weights);
  for (const auto& w : tracks) {
    for (const auto& s : g) {
      auto img = act(s, w);
      EXPECT_TRUE(tracks.count(img));
      EXPECT_EQ(canonical_form(img), canonical_form(w));
    }
  }
}

TEST(CheckTrack, FlagsBrokenRecords) {
  TetraTuple w{3, 3, 2, 2, 1, 1};
  auto p = tp(w);
  auto c = classify(p);
  auto s = separation(p);
  EXPECT_TRUE(check_track(w, c, s).empty());
  auto bad = c;
  bad.a = 1;
  bad.b = 2;
  bad.a_pair = tetra_pairs()[2];
  EXPECT_FALSE(check_track(w, bad, s).empty());
  auto swapped = s;
  std::swap(swapped.vertices[0][1], swapped.vertices[1][0]);
  EXPECT_FALSE(check_track(w, c, swapped).empty());
}
