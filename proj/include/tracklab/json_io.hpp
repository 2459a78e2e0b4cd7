#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tracklab/classify.hpp"
#include "tracklab/spattern.hpp"
#include "tracklab/sweep.hpp"

namespace tracklab {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Document kinds:
//   pattern   {"weights":{"uv":2,...}} and optionally the points/lines it expands to
//   spattern  {"points":{"uv":[names]},"lines":{"uvw":[[a,b],...]},"labels":{name:j},
//              "singular":bool}
//   trace     {"initial":<pattern|spattern>,"sphere":bool,"events":[...]}
// Every document carries "version" and "kind"; "complex" is "tetra" or an
// object {"vertices":[...],"edges":[[a,b],...],"triangles":[[a,b,c],...]}.

json load_json_file(const std::string& path);  // throws Error(Parse)
void save_json_file(const std::string& path, const json& doc);

std::shared_ptr<const Complex2> complex_from_json(const json& j);
json complex_to_json(const Complex2& c);

// Reads a pattern or spattern document. Throws Error(Parse) on malformed
// input (weights that break parity or the triangle inequality keep that kind)
// and when a non-singular document contains a returning arc.
SingularState state_from_json(const json& doc);
json state_to_json(const SingularState& s);
json pattern_to_json(const Pattern& p);

EdgeWeights weights_from_json(const Complex2& c, const json& j);
json weights_to_json(const Complex2& c, const EdgeWeights& w);
// "uv=2,wz=2,..." in any order; missing edges default to 0.
EdgeWeights parse_weight_list(const Complex2& c, std::string_view text);

SweepTrace trace_from_json(const json& doc);
json trace_to_json(const SweepTrace& t);

json to_json(const TrackClass& c);
json to_json(const Complex2& c, const SeparationPartition& s);
json to_json(const EnumerationReport& r);
json to_json(const SingularState& s, const PointPair& p);
json to_json(const SingularState& s, const RemovablePair& p);
json to_json(const SingularState& s, const UncrossOutcome& u);
json to_json(const ThickAnalysis& a);
json to_json(const GraphStats& g);

}  // namespace tracklab
