#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tracklab/pattern.hpp"
#include "tracklab/state.hpp"

namespace tracklab {

// Spattern operations. A Spattern is a SingularState without same-edge
// lines; the functions below say which of the two they require.

using Strack = Component;

std::vector<Violation> validate_spattern(const SingularState& s);
std::vector<Strack> strack_decomposition(const SingularState& s);

// Sign of each crossing of a closed strack: +1 when the traversal passes from
// the edge's first incident triangle (by id) to the second, -1 otherwise.
// `reversed` walks the strack backwards. Throws NonSurfaceComplex.
std::map<int, int> crossing_signs(const SingularState& s, const Strack& t, bool reversed = false);

struct PointPair {
  int edge = -1;
  int first = -1;   // lower position
  int second = -1;  // higher position
  friend bool operator==(const PointPair&, const PointPair&) = default;
};

struct PlusMinusPair {
  PointPair pair;
  // Some arc of the strack between the two points meets the edge only at
  // its endpoints.
  bool clean = false;
};

// All opposite-sign pairs of one strack on one edge, ordered by
// (edge id, lower position, higher position).
std::vector<PlusMinusPair> find_plus_minus_pairs(const SingularState& s);

enum class RemovableKind { ReturningArc, PlusMinus };
const char* to_string(RemovableKind k);

struct RemovablePair {
  PointPair pair;
  RemovableKind kind = RemovableKind::PlusMinus;
};

// Endpoints of returning arcs, plus clean +/- pairs (closed surfaces only).
// A pair qualifying both ways is reported once, as a returning arc.
std::vector<RemovablePair> find_removable_pairs(const SingularState& s);

// Deletes both points and splices the two lines ending at them in every
// incident triangle. Throws NotRemovable unless `pair` is currently
// removable.
SingularState remove_pair(const SingularState& s, const PointPair& pair);
// Splice without the removability check; used by oracles and swap search.
SingularState splice_out(const SingularState& s, const PointPair& pair);

// Requires no returning arcs (throws InvalidState). Same points, names and
// labels; lines replaced by the unique non-crossing matching.
Pattern underlying_pattern(const SingularState& s);

struct EdgePermutation {
  int edge = -1;
  // The point at old position i moves to new position image[i].
  std::vector<int> image;

  static EdgePermutation identity(int edge, int size);
  bool is_identity() const;
  // (this after first)[i] = image[first.image[i]]; edges must agree.
  EdgePermutation after(const EdgePermutation& first) const;
};

SingularState apply_edge_permutation(const SingularState& s, const EdgePermutation& nu);

struct UncrossResult {
  std::vector<EdgePermutation> mu;  // non-identity permutations, in application order
  SingularState result;
};

struct Obstruction {
  int component = -1;  // index in strack_decomposition order
  std::int64_t weight = 0;
  std::string anchor;  // point that could not be placed
  std::string reason;
};

struct UncrossOutcome {
  std::optional<UncrossResult> uncrossed;
  std::optional<Obstruction> obstructed;
  bool ok() const { return uncrossed.has_value(); }
};

// Searches for per-edge permutations taking s onto its underlying pattern.
// Components are placed in ascending order of their least label (unlabelled
// last), then least point id; each takes the placement moving fewest points.
UncrossOutcome uncross(const SingularState& s);

struct GraphStats {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t components = 0;
  bool connected = false;
  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats graph_stats(const SingularState& s);

}  // namespace tracklab
