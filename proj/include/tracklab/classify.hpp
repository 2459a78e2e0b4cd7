#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tracklab/pattern.hpp"

namespace tracklab {

using TetraTuple = std::array<std::int64_t, 6>;  // (uv, wz, uz, vw, uw, vz)

enum class Parity { Even, Odd };
const char* to_string(Parity p);

struct TrackClass {
  enum class Kind { ThreeTrack, FourN };
  Kind kind = Kind::ThreeTrack;
  int vertex = -1;  // ThreeTrack: the vertex cut off
  std::int64_t n = 0, a = 0, b = 0;
  OppositeEdgePair axis{};    // pair carrying weight n
  OppositeEdgePair a_pair{};  // pair carrying weight a
  Parity a_parity = Parity::Even;

  std::int64_t weight() const { return kind == Kind::ThreeTrack ? 3 : 4 * n; }
  friend bool operator==(const TrackClass&, const TrackClass&) = default;
};

std::string describe(const TrackClass& c);

// Opposite-edge pairs of T in cyclic order {uv,wz} -> {uz,vw} -> {uw,vz},
// i.e. consecutive entries of the canonical tuple.
const std::array<OppositeEdgePair, 3>& tetra_pairs();

// Throws NotATrack unless p is a single component on T, and
// UnclassifiableWeights when no (n, a, b, axis) fits the weights.
TrackClass classify(const Pattern& p);
TrackClass classify_weights(const TetraTuple& w);  // builds the pattern first

struct SeparationPartition {
  // sides[0] holds u. Vertex indices of T.
  std::array<std::vector<int>, 2> vertices;
  // Face centres e,f,g,h (triangles uvz, uvw, uwz, vwz), by triangle index.
  std::array<std::vector<int>, 2> centres;
  friend bool operator==(const SeparationPartition&, const SeparationPartition&) = default;
};

// Name of the centre of triangle t: 'e', 'f', 'g' or 'h'.
char centre_name(const Complex2& c, int t);
std::string describe(const Complex2& c, const SeparationPartition& s);

// Two-colouring of the complement of a track on T. Throws NotATrack.
SeparationPartition separation(const Pattern& p);

bool is_octagon(const TetraTuple& w);
bool is_octagon(const Pattern& p);

// Checks a classified track against the classification and separation rules;
// returns a list of human readable problems.
std::vector<std::string> check_track(const TetraTuple& w, const TrackClass& c,
                                     const SeparationPartition& s);

// The 24 symmetries of T as permutations of tuple slots: image[i] is the slot
// that slot i moves to.
const std::vector<std::array<int, 6>>& tetra_symmetries();
TetraTuple act(const std::array<int, 6>& g, const TetraTuple& w);
// Lexicographically least image under the symmetry group.
TetraTuple canonical_form(const TetraTuple& w);

struct EnumerateOptions {
  bool symmetry = false;  // visit one representative per orbit
  int threads = 1;
};

struct TrackRecord {
  TetraTuple weights{};
  TrackClass cls;
  SeparationPartition sep;
  std::int64_t orbit_size = 1;  // only meaningful with symmetry reduction
};

struct EnumerationReport {
  std::int64_t max_total_weight = 0;
  bool symmetry = false;
  std::int64_t vectors_visited = 0;
  // Every track in plain mode; one per orbit under symmetry reduction.
  std::vector<TrackRecord> tracks;
  std::int64_t track_count = 0;                       // all tracks, both modes
  std::map<std::int64_t, std::int64_t> weight_counts;  // all tracks, both modes
  std::vector<std::string> violations;
};

EnumerationReport enumerate_and_verify(std::int64_t max_total_weight,
                                       const EnumerateOptions& opts = {});

}  // namespace tracklab
