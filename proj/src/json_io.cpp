#include "tracklab/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace tracklab {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorKind::Parse, what); }

template <typename T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw parse_error(std::string("field '") + key + "': " + e.what());
  }
}

void check_kind(const json& doc, std::initializer_list<const char*> kinds) {
  if (!doc.is_object()) throw parse_error("document is not a JSON object");
  if (doc.contains("version") && doc["version"] != kSchemaVersion) {
    throw parse_error("unsupported version " + doc["version"].dump());
  }
  if (!doc.contains("kind")) return;
  const auto kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
  for (const char* k : kinds) {
    if (kind == k) return;
  }
  throw parse_error("unexpected document kind '" + kind + "'");
}

json header(const char* kind) { return json{{"version", kSchemaVersion}, {"kind", kind}}; }

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path);
  out << doc.dump(2) << "\n";
}

std::shared_ptr<const Complex2> complex_from_json(const json& j) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "tetra")) return tetrahedron();
  if (!j.is_object()) throw parse_error("complex must be \"tetra\" or an object");
  auto vertices = get<std::vector<std::string>>(j, "vertices");
  std::vector<std::array<std::string, 2>> edges;
  if (j.contains("edges")) edges = get<std::vector<std::array<std::string, 2>>>(j, "edges");
  auto triangles = get<std::vector<std::array<std::string, 3>>>(j, "triangles");
  auto c = Complex2::from_lists(std::move(vertices), edges, triangles);
  if (c.is_tetrahedron()) return tetrahedron();
  return std::make_shared<const Complex2>(std::move(c));
}

json complex_to_json(const Complex2& c) {
  if (c.is_tetrahedron()) return "tetra";
  json j;
  j["vertices"] = c.vertices();
  j["edges"] = json::array();
  for (const auto& e : c.edges()) j["edges"].push_back({c.vertices()[e.vertices[0]], c.vertices()[e.vertices[1]]});
  j["triangles"] = json::array();
  for (const auto& t : c.triangles()) {
    j["triangles"].push_back({c.vertices()[t.vertices[0]], c.vertices()[t.vertices[1]], c.vertices()[t.vertices[2]]});
  }
  return j;
}

EdgeWeights weights_from_json(const Complex2& c, const json& j) {
  EdgeWeights w(c.num_edges(), 0);
  if (j.is_array()) {
    if (!c.is_tetrahedron() || j.size() != 6) throw parse_error("weight arrays are 6-tuples on T");
    std::array<std::int64_t, 6> t{};
    for (int i = 0; i < 6; ++i) {
      if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 0) throw parse_error("weights are non-negative integers");
      t[i] = j[i].get<std::int64_t>();
    }
    return tetra_weights(t);
  }
  if (!j.is_object()) throw parse_error("weights must be an object or a 6-tuple");
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw parse_error("weight of " + k + " is not a non-negative integer");
    }
    w[c.edge_index(k)] = v.get<std::int64_t>();
  }
  return w;
}

json weights_to_json(const Complex2& c, const EdgeWeights& w) {
  json j = json::object();
  if (c.is_tetrahedron()) {
    for (auto id : kTetraEdgeOrder) j[std::string(id)] = w[c.edge_index(id)];
  } else {
    for (int e = 0; e < c.num_edges(); ++e) j[c.edge(e).id] = w[e];
  }
  return j;
}

EdgeWeights parse_weight_list(const Complex2& c, std::string_view text) {
  EdgeWeights w(c.num_edges(), 0);
  std::set<int> seen;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw parse_error("expected edge=weight, got '" + item + "'");
    int e = c.edge_index(item.substr(0, eq));
    if (!seen.insert(e).second) throw parse_error("edge " + c.edge(e).id + " given twice");
    try {
      std::size_t used = 0;
      w[e] = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1 || w[e] < 0) throw std::invalid_argument("bad weight");
    } catch (const std::exception&) {
      throw parse_error("bad weight in '" + item + "'");
    }
  }
  return w;
}

SingularState state_from_json(const json& doc) {
  check_kind(doc, {"pattern", "spattern", "state"});
  auto complex = complex_from_json(doc.contains("complex") ? doc["complex"] : json());
  const auto& c = *complex;
  if (!doc.contains("points")) {
    if (!doc.contains("weights")) throw parse_error("document has neither points nor weights");
    // Parity and triangle-inequality errors keep their kind; they name the triangle.
    return pattern_from_weights(complex, weights_from_json(c, doc["weights"])).state();
  }
  SingularState s(complex);
  const auto& points = doc["points"];
  if (!points.is_object()) throw parse_error("points must map edge ids to name lists");
  std::map<std::string, int> labels;
  if (doc.contains("labels")) labels = get<std::map<std::string, int>>(doc, "labels");
  for (const auto& [edge, names] : points.items()) {
    int e = c.edge_index(edge);
    if (!names.is_array()) throw parse_error("points of " + edge + " must be a list");
    for (const auto& n : names) {
      if (!n.is_string()) throw parse_error("point names must be strings");
      auto name = n.get<std::string>();
      if (s.find_point(name)) throw parse_error("duplicate point name '" + name + "'");
      std::optional<int> label;
      if (auto it = labels.find(name); it != labels.end()) label = it->second;
      s.append_point(e, name, label);
    }
  }
  for (const auto& [name, _] : labels) {
    if (!s.find_point(name)) throw parse_error("label for unknown point '" + name + "'");
  }
  const bool singular = doc.value("singular", false);
  if (doc.contains("lines")) {
    if (!doc["lines"].is_object()) throw parse_error("lines must map triangle ids to pairs");
    for (const auto& [tri, lines] : doc["lines"].items()) {
      int t = c.triangle_index(tri);
      for (const auto& l : lines) {
        if (!l.is_array() || l.size() != 2) throw parse_error("a line is a pair of point names");
        int a = s.point_id(l[0].get<std::string>());
        int b = s.point_id(l[1].get<std::string>());
        for (int id : {a, b}) {
          const auto& te = c.triangle(t).edges;
          if (std::find(te.begin(), te.end(), s.point(id).edge) == te.end()) {
            throw parse_error("point " + s.point(id).name + " is not on an edge of " + tri);
          }
        }
        if (!singular && a != b && s.point(a).edge == s.point(b).edge) {
          throw parse_error("returning arc " + s.point(a).name + "-" + s.point(b).name +
                            " in a document not marked singular");
        }
        s.add_line(t, a, b);
      }
    }
  }
  return s;
}

json state_to_json(const SingularState& s) {
  const auto& c = s.complex();
  json j = header("spattern");
  j["complex"] = complex_to_json(c);
  j["singular"] = s.has_returning_arcs();
  json points = json::object();
  for (int e = 0; e < c.num_edges(); ++e) {
    json names = json::array();
    for (int id : s.points_on(e)) names.push_back(s.point(id).name);
    points[c.edge(e).id] = names;
  }
  j["points"] = points;
  json lines = json::object();
  for (int t = 0; t < c.num_triangles(); ++t) {
    // Sorted by (edge, position) of endpoints for stable output.
    std::vector<std::array<int, 2>> ls;
    for (const auto& l : s.lines(t)) {
      auto key = [&](int id) { return std::make_pair(s.point(id).edge, s.position(id)); };
      int a = l.a, b = l.b;
      if (key(b) < key(a)) std::swap(a, b);
      ls.push_back({a, b});
    }
    std::sort(ls.begin(), ls.end(), [&](const auto& x, const auto& y) {
      auto k = [&](const std::array<int, 2>& v) {
        return std::make_tuple(s.point(v[0]).edge, s.position(v[0]), s.point(v[1]).edge, s.position(v[1]));
      };
      return k(x) < k(y);
    });
    json arr = json::array();
    for (const auto& l : ls) arr.push_back({s.point(l[0]).name, s.point(l[1]).name});
    lines[c.triangle(t).id] = arr;
  }
  j["lines"] = lines;
  json labels = json::object();
  for (const auto& p : s.points()) {
    if (p.label) labels[p.name] = *p.label;
  }
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

json pattern_to_json(const Pattern& p) {
  json j = state_to_json(p.state());
  j["kind"] = "pattern";
  j["weights"] = weights_to_json(p.complex(), p.weights());
  json comps = json::array();
  for (const auto& k : components(p)) comps.push_back(k.weight());
  j["components"] = comps;
  return j;
}

SweepTrace trace_from_json(const json& doc) {
  check_kind(doc, {"trace"});
  SweepTrace t;
  t.name = doc.value("name", "");
  t.sphere = doc.value("sphere", false);
  if (!doc.contains("initial")) throw parse_error("trace has no initial state");
  t.initial = state_from_json(doc["initial"]);
  const auto& c = t.initial.complex();
  if (!doc.contains("events")) return t;
  for (const auto& ev : doc["events"]) {
    const auto op = get<std::string>(ev, "op");
    if (op == "remove") {
      auto pair = get<std::array<std::string, 2>>(ev, "pair");
      t.events.push_back(RemovePairEvent{pair});
    } else if (op == "add") {
      AddPair a;
      a.edge = c.edge_index(get<std::string>(ev, "edge"));
      a.positions = get<std::array<int, 2>>(ev, "positions");
      if (ev.contains("label")) a.label = get<int>(ev, "label");
      if (ev.contains("names")) {
        a.names = get<std::array<std::string, 2>>(ev, "names");
      } else if (a.label) {
        a.names = {std::to_string(*a.label) + ".a", std::to_string(*a.label) + ".b"};
      } else {
        throw parse_error("add event needs names or a label");
      }
      if (ev.contains("lines")) {
        for (const auto& [tri, lines] : ev["lines"].items()) {
          a.lines[c.triangle_index(tri)] = lines.get<std::vector<std::array<std::string, 2>>>();
        }
      }
      t.events.push_back(std::move(a));
    } else {
      throw parse_error("unknown event op '" + op + "'");
    }
  }
  return t;
}

json trace_to_json(const SweepTrace& t) {
  const auto& c = t.initial.complex();
  json j = header("trace");
  if (!t.name.empty()) j["name"] = t.name;
  j["sphere"] = t.sphere;
  j["initial"] = state_to_json(t.initial);
  json events = json::array();
  for (const auto& ev : t.events) {
    if (const auto* a = std::get_if<AddPair>(&ev)) {
      json e{{"op", "add"}, {"edge", c.edge(a->edge).id}, {"positions", a->positions}};
      if (a->label) e["label"] = *a->label;
      e["names"] = a->names;
      json lines = json::object();
      for (const auto& [tri, ls] : a->lines) lines[c.triangle(tri).id] = ls;
      e["lines"] = lines;
      events.push_back(e);
    } else {
      events.push_back({{"op", "remove"}, {"pair", std::get<RemovePairEvent>(ev).names}});
    }
  }
  j["events"] = events;
  return j;
}

json to_json(const TrackClass& c) {
  const auto& T = *tetrahedron();
  if (c.kind == TrackClass::Kind::ThreeTrack) {
    return {{"type", "ThreeTrack"}, {"vertex", T.vertices()[c.vertex]}};
  }
  return {{"type", "FourN"},         {"n", c.n},
          {"a", c.a},                {"b", c.b},
          {"axis", to_string(T, c.axis)}, {"a_pair", to_string(T, c.a_pair)},
          {"a_parity", to_string(c.a_parity)}};
}

json to_json(const Complex2& c, const SeparationPartition& s) {
  json sides = json::array();
  for (int i = 0; i < 2; ++i) {
    json vs = json::array(), cs = json::array();
    for (int v : s.vertices[i]) vs.push_back(c.vertices()[v]);
    for (int t : s.centres[i]) cs.push_back(std::string(1, centre_name(c, t)));
    sides.push_back({{"vertices", vs}, {"centres", cs}});
  }
  return sides;
}

json to_json(const EnumerationReport& r) {
  const auto& T = *tetrahedron();
  json j = header("enumeration");
  j["max_total_weight"] = r.max_total_weight;
  j["symmetry"] = r.symmetry;
  j["edge_order"] = kTetraEdgeOrder;
  j["vectors_visited"] = r.vectors_visited;
  j["track_count"] = r.track_count;
  json counts = json::object();
  for (auto [w, n] : r.weight_counts) counts[std::to_string(w)] = n;
  j["weight_counts"] = counts;
  json tracks = json::array();
  for (const auto& t : r.tracks) {
    json rec{{"weights", t.weights}, {"class", to_json(t.cls)}, {"separation", to_json(T, t.sep)}};
    if (r.symmetry) rec["orbit_size"] = t.orbit_size;
    tracks.push_back(rec);
  }
  j["tracks"] = tracks;
  j["violations"] = r.violations;
  return j;
}

json to_json(const SingularState& s, const PointPair& p) {
  return {{"edge", s.complex().edge(p.edge).id},
          {"points", {s.point(p.first).name, s.point(p.second).name}},
          {"positions", {s.position(p.first), s.position(p.second)}}};
}

json to_json(const SingularState& s, const RemovablePair& p) {
  json j = to_json(s, p.pair);
  j["kind"] = to_string(p.kind);
  return j;
}

json to_json(const SingularState& s, const UncrossOutcome& u) {
  json j = header("uncross");
  if (u.ok()) {
    j["status"] = "uncrossed";
    json mu = json::array();
    for (const auto& nu : u.uncrossed->mu) {
      mu.push_back({{"edge", s.complex().edge(nu.edge).id}, {"image", nu.image}});
    }
    j["mu"] = mu;
    j["result"] = state_to_json(u.uncrossed->result);
  } else {
    j["status"] = "obstructed";
    j["obstruction"] = {{"component", u.obstructed->component},
                        {"weight", u.obstructed->weight},
                        {"anchor", u.obstructed->anchor},
                        {"reason", u.obstructed->reason}};
  }
  return j;
}

json to_json(const ThickAnalysis& a) {
  auto pair = [](const PairInfo& p) {
    return json{{"edge", p.edge},
                {"points", p.names},
                {"positions", p.positions},
                {"split", p.split},
                {"disconnects", p.disconnects}};
  };
  json j = header("thick-analysis");
  j["k"] = a.k;
  j["weights"] = a.weights;
  j["strack_weights"] = a.strack_weights;
  j["exceptional_piece"] = a.exceptional_piece;
  j["exceptional_weight"] = a.exceptional_weight;
  j["added_pair"] = pair(a.added);
  j["removed_pair"] = pair(a.removed);
  j["piece_removable_pairs"] = a.piece_removable_pairs;
  j["other_removable_pairs"] = a.other_removable_pairs;
  j["disconnects"] = a.disconnects;
  j["uncross_obstructed"] = a.uncross_obstructed;
  if (a.uncross_obstructed) j["obstruction"] = a.obstruction;
  j["uncrossed_components"] = a.uncrossed_components;
  j["almost_normal_after_uncross"] = a.almost_normal_after_uncross;
  return j;
}

json to_json(const GraphStats& g) {
  return {{"vertices", g.vertices}, {"edges", g.edges}, {"components", g.components}, {"connected", g.connected}};
}

}  // namespace tracklab
