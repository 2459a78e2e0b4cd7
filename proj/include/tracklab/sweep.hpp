#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tracklab/spattern.hpp"

namespace tracklab {

// Inserts two points on one edge. `positions` are their final positions
// (ascending). In each listed triangle, every old point named by a new line
// loses its previous line there; then the listed lines are added.
struct AddPair {
  int edge = -1;
  std::array<int, 2> positions{};
  std::array<std::string, 2> names;
  std::optional<int> label;
  std::map<int, std::vector<std::array<std::string, 2>>> lines;  // triangle -> lines
  friend bool operator==(const AddPair&, const AddPair&) = default;
};

// Removes a currently removable pair, named by its points.
struct RemovePairEvent {
  std::array<std::string, 2> names;
  friend bool operator==(const RemovePairEvent&, const RemovePairEvent&) = default;
};

using SweepEvent = std::variant<AddPair, RemovePairEvent>;

struct SweepTrace {
  std::string name;
  SingularState initial;
  // Every state must be connected (a single sphere proxy).
  bool sphere = false;
  std::vector<SweepEvent> events;
};

class InvalidEventError : public Error {
 public:
  InvalidEventError(int index, const std::string& reason)
      : Error(ErrorKind::InvalidEvent, "event " + std::to_string(index) + ": " + reason),
        index_(index),
        reason_(reason) {}
  int index() const { return index_; }
  const std::string& reason() const { return reason_; }

 private:
  int index_;
  std::string reason_;
};

// One event applied to a state, with full validation. Throws
// InvalidEventError carrying `index`.
SingularState apply_event(const SingularState& s, const SweepEvent& e, int index = 0);

struct Replay {
  std::vector<SingularState> states;  // f_0 .. f_N
  std::vector<std::int64_t> weights;  // w_0 .. w_N
};

// True for an embedded pattern all of whose components have weight 3 or 4.
bool is_normal_state(const SingularState& s);

Replay replay(const SweepTrace& trace);

struct WidthRecord {
  std::vector<std::int64_t> sorted;  // non-increasing
  friend bool operator==(const WidthRecord&, const WidthRecord&) = default;
  friend auto operator<=>(const WidthRecord& a, const WidthRecord& b) { return a.sorted <=> b.sorted; }
};

WidthRecord width_of(std::vector<std::int64_t> weights);
WidthRecord width(const SweepTrace& trace);
// Negative, zero or positive like strcmp.
int compare(const WidthRecord& a, const WidthRecord& b);

enum class SphereKind { Neither, Thick, Thin };
const char* to_string(SphereKind k);

std::vector<SphereKind> sphere_kinds(const std::vector<std::int64_t>& w);
std::vector<SphereKind> classify_spheres(const SweepTrace& trace);

struct SwapResult {
  SweepTrace trace;
  bool reduced = false;
  int swaps = 0;        // peak swaps applied
  int cancellations = 0;  // add immediately undone by its own removal
};

// Repeatedly exchanges the add/remove events around a thick state when the
// two pairs lie in different stracks, or in one strack that removing the
// later pair does not split; a swap is kept only when the new trace replays.
SwapResult swap_reduce(const SweepTrace& trace);

struct PairInfo {
  std::string edge;
  std::array<std::string, 2> names;
  std::array<int, 2> positions{};
  // Component weights of the exceptional piece after removing this pair.
  std::vector<std::int64_t> split;
  bool disconnects = false;
};

struct ThickAnalysis {
  int k = -1;
  std::vector<std::int64_t> weights;
  std::vector<std::int64_t> strack_weights;  // of f_k
  int exceptional_piece = -1;                 // strack index, -1 if the pairs are apart
  std::int64_t exceptional_weight = 0;
  PairInfo added;    // pair created by the event entering f_k
  PairInfo removed;  // pair removed by the event leaving f_k
  int piece_removable_pairs = 0;
  std::vector<int> other_removable_pairs;  // per other strack, in decomposition order
  bool disconnects = false;                // both removals split the piece
  bool uncross_obstructed = false;
  std::string obstruction;
  std::vector<std::int64_t> uncrossed_components;
  bool almost_normal_after_uncross = false;
};

// Throws NoThickSphere when no state is thick.
ThickAnalysis analyze_first_thick(const SweepTrace& trace);

}  // namespace tracklab
