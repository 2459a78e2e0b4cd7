#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "tracklab/complex.hpp"
#include "tracklab/state.hpp"

namespace tracklab {

// Arcs of an embedded pattern inside one triangle. t[i] counts the arcs that
// join the two edges other than edge slot i, i.e. the arcs cutting off the
// corner opposite that edge.
struct CornerArcCounts {
  std::array<std::int64_t, 3> t{};
  friend bool operator==(const CornerArcCounts&, const CornerArcCounts&) = default;
};

// ((b+c-a)/2, (a+c-b)/2, (a+b-c)/2). Throws ParityViolation on an odd sum and
// TriangleInequalityViolation when a count would be negative.
CornerArcCounts corner_counts(std::int64_t w_a, std::int64_t w_b, std::int64_t w_c);

// An embedded pattern: the unique non-crossing realization of a weight vector.
class Pattern {
 public:
  const Complex2& complex() const { return state_.complex(); }
  const std::shared_ptr<const Complex2>& complex_ptr() const { return state_.complex_ptr(); }
  const EdgeWeights& weights() const { return weights_; }
  const std::vector<CornerArcCounts>& corners() const { return corners_; }
  // Points and lines. Points are named "<edge>.<position>" unless the pattern
  // was built on another state's points.
  const SingularState& state() const { return state_; }
  std::int64_t total_weight() const { return total(weights_); }

 private:
  friend Pattern pattern_from_weights(std::shared_ptr<const Complex2>, const EdgeWeights&);
  friend Pattern pattern_on_points(const SingularState&);

  EdgeWeights weights_;
  std::vector<CornerArcCounts> corners_;
  SingularState state_;
};

// Largest total weight pattern_from_weights will materialize point by point.
inline constexpr std::int64_t kMaxMaterializedWeight = std::int64_t{1} << 24;

// Builds the unique embedded pattern with the given weights. Corner arcs take
// the point slots nearest their corner. Errors carry the offending triangle.
Pattern pattern_from_weights(std::shared_ptr<const Complex2> complex, const EdgeWeights& w);
// As pattern_from_weights(s.weights()) but reusing s's point names and labels
// slot by slot.
Pattern pattern_on_points(const SingularState& s);

// Parity and triangle inequality in every triangle, without building anything.
bool weights_realizable(const Complex2& c, const EdgeWeights& w);

using Track = Component;

std::vector<Track> components(const Pattern& p);
// Standalone pattern of one component's weights.
Pattern track_pattern(const Pattern& p, const Track& t);

// Weight-vector equality. Throws ComplexMismatch for different complexes.
bool equivalent(const Pattern& p, const Pattern& q);

// Every component has total weight 3 or 4.
bool is_normal(const Pattern& p);

}  // namespace tracklab
