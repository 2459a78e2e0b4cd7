#include "tracklab/sweep.hpp"

#include <algorithm>
#include <set>

#include "tracklab/classify.hpp"

namespace tracklab {

namespace {

SingularState apply_add(const SingularState& s, const AddPair& a, int index) {
  const auto& c = s.complex();
  auto bad = [&](const std::string& why) { return InvalidEventError(index, why); };
  if (a.edge < 0 || a.edge >= c.num_edges()) throw bad("add on an unknown edge");
  const int k = static_cast<int>(s.points_on(a.edge).size());
  if (a.names[0] == a.names[1]) throw bad("added points share a name");
  for (const auto& n : a.names) {
    if (n.empty() || s.find_point(n)) throw bad("point name '" + n + "' already in use");
  }
  if (!(0 <= a.positions[0] && a.positions[0] < a.positions[1] && a.positions[1] <= k + 1)) {
    throw bad("insert positions must be ascending within 0.." + std::to_string(k + 1));
  }
  SingularState out = s;
  const int p = out.insert_point(a.edge, a.positions[0], a.names[0], a.label);
  const int q = out.insert_point(a.edge, a.positions[1], a.names[1], a.label);
  const auto& incident = c.edge(a.edge).triangles;
  for (const auto& [t, lines] : a.lines) {
    if (std::find(incident.begin(), incident.end(), t) == incident.end()) {
      throw bad("lines given for a triangle not containing " + c.edge(a.edge).id);
    }
    std::vector<std::array<int, 2>> ids;
    std::set<int> old;
    for (const auto& l : lines) {
      std::array<int, 2> e{};
      for (int i = 0; i < 2; ++i) {
        auto id = out.find_point(l[i]);
        if (!id) throw bad("unknown point '" + l[i] + "'");
        e[i] = *id;
        if (*id != p && *id != q) old.insert(*id);
      }
      if (e[0] != p && e[0] != q && e[1] != p && e[1] != q) {
        throw bad("a listed line in " + c.triangle(t).id + " does not touch the new points");
      }
      ids.push_back(e);
    }
    for (int x : old) {
      int y = out.partner(t, x);
      if (y >= 0) out.remove_line(t, x, y);
    }
    for (const auto& e : ids) out.add_line(t, e[0], e[1]);
  }
  if (auto v = validate_state(out, true); !v.empty()) throw bad("result invalid: " + v.front().message);
  return out;
}

SingularState apply_remove(const SingularState& s, const RemovePairEvent& r, int index) {
  auto p = s.find_point(r.names[0]), q = s.find_point(r.names[1]);
  if (!p || !q) throw InvalidEventError(index, "removal names an unknown point");
  if (s.point(*p).edge != s.point(*q).edge) {
    throw InvalidEventError(index, "removed points lie on different edges");
  }
  if (s.position(*p) > s.position(*q)) std::swap(p, q);
  const PointPair pair{s.point(*p).edge, *p, *q};
  auto removable = find_removable_pairs(s);
  bool ok = std::any_of(removable.begin(), removable.end(),
                        [&](const RemovablePair& x) { return x.pair == pair; });
  if (!ok) {
    throw InvalidEventError(index, "pair " + r.names[0] + "," + r.names[1] + " is not removable");
  }
  return splice_out(s, pair);
}

// Name-keyed component index of every point.
std::map<std::string, int> component_of(const SingularState& s) {
  std::map<std::string, int> out;
  auto comps = decompose(s);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (int id : comps[i].cycle) out[s.point(id).name] = static_cast<int>(i);
  }
  return out;
}

}  // namespace

SingularState apply_event(const SingularState& s, const SweepEvent& e, int index) {
  if (const auto* a = std::get_if<AddPair>(&e)) return apply_add(s, *a, index);
  return apply_remove(s, std::get<RemovePairEvent>(e), index);
}

bool is_normal_state(const SingularState& s) {
  if (!validate_state(s, false).empty() || count_crossings(s) != 0) return false;
  auto comps = decompose(s);
  return std::all_of(comps.begin(), comps.end(),
                     [](const Component& k) { return k.weight() == 3 || k.weight() == 4; });
}

Replay replay(const SweepTrace& trace) {
  if (auto v = validate_state(trace.initial, true); !v.empty()) {
    throw Error(ErrorKind::InvalidState, "initial state invalid: " + v.front().message);
  }
  Replay r;
  r.states.push_back(trace.initial);
  r.weights.push_back(trace.initial.total_weight());
  auto check_sphere = [&](const SingularState& s, int index) {
    if (trace.sphere && !graph_stats(s).connected) {
      throw InvalidEventError(index, "state is not connected");
    }
  };
  check_sphere(trace.initial, 0);
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const int idx = static_cast<int>(i);
    r.states.push_back(apply_event(r.states.back(), trace.events[i], idx));
    r.weights.push_back(r.states.back().total_weight());
    auto step = r.weights[i + 1] - r.weights[i];
    if (step != 2 && step != -2) throw InvalidEventError(idx, "weight step is not +-2");
    check_sphere(r.states.back(), idx);
  }
  if (r.weights.size() > 1 && is_normal_state(trace.initial) && r.weights[1] != r.weights[0] + 2) {
    throw InvalidEventError(0, "a normal initial state must first gain a pair");
  }
  return r;
}

WidthRecord width_of(std::vector<std::int64_t> weights) {
  std::sort(weights.begin(), weights.end(), std::greater<>());
  return {std::move(weights)};
}

WidthRecord width(const SweepTrace& trace) { return width_of(replay(trace).weights); }

int compare(const WidthRecord& a, const WidthRecord& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

const char* to_string(SphereKind k) {
  switch (k) {
    case SphereKind::Thick: return "thick";
    case SphereKind::Thin: return "thin";
    default: return "neither";
  }
}

std::vector<SphereKind> sphere_kinds(const std::vector<std::int64_t>& w) {
  std::vector<SphereKind> out(w.size(), SphereKind::Neither);
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i - 1] == w[i] - 2 && w[i + 1] == w[i] - 2) out[i] = SphereKind::Thick;
    if (w[i - 1] == w[i] + 2 && w[i + 1] == w[i] + 2) out[i] = SphereKind::Thin;
  }
  return out;
}

std::vector<SphereKind> classify_spheres(const SweepTrace& trace) {
  return sphere_kinds(replay(trace).weights);
}

namespace {

// The add event that recreates the named pair exactly as it sits in `after`.
AddPair rederive_add(const SingularState& after, const AddPair& original) {
  AddPair a;
  auto p = *after.find_point(original.names[0]);
  auto q = *after.find_point(original.names[1]);
  if (after.position(p) > after.position(q)) std::swap(p, q);
  a.edge = after.point(p).edge;
  a.positions = {after.position(p), after.position(q)};
  a.names = {after.point(p).name, after.point(q).name};
  a.label = original.label;
  for (int t : after.complex().edge(a.edge).triangles) {
    auto& lines = a.lines[t];
    for (const auto& l : after.lines(t)) {
      if (l.touches(p) || l.touches(q)) lines.push_back({after.point(l.a).name, after.point(l.b).name});
    }
  }
  return a;
}

std::optional<Replay> try_replay(const SweepTrace& t) {
  try {
    return replay(t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// One improvement step around some thick state, or nullopt.
std::optional<SweepTrace> improve(const SweepTrace& cur, const Replay& r, bool& cancelled) {
  const auto kinds = sphere_kinds(r.weights);
  const WidthRecord before = width_of(r.weights);
  for (std::size_t i = 1; i + 1 < r.weights.size(); ++i) {
    if (kinds[i] != SphereKind::Thick) continue;
    const auto* add = std::get_if<AddPair>(&cur.events[i - 1]);
    const auto* rem = std::get_if<RemovePairEvent>(&cur.events[i]);
    if (!add || !rem) continue;
    std::set<std::string> a(add->names.begin(), add->names.end());
    std::set<std::string> b(rem->names.begin(), rem->names.end());
    SweepTrace cand = cur;
    if (a == b) {
      cand.events.erase(cand.events.begin() + (i - 1), cand.events.begin() + (i + 1));
      cancelled = true;
    } else {
      if (a.count(*b.begin()) || a.count(*b.rbegin())) continue;
      const auto& fi = r.states[i];
      auto comp = component_of(fi);
      bool apart = comp[add->names[0]] != comp[rem->names[0]];
      if (!apart) {
        auto p = *fi.find_point(rem->names[0]), q = *fi.find_point(rem->names[1]);
        if (fi.position(p) > fi.position(q)) std::swap(p, q);
        auto after = component_of(splice_out(fi, {fi.point(p).edge, p, q}));
        if (after[add->names[0]] != after[add->names[1]]) continue;
      }
      cand.events[i - 1] = *rem;
      cand.events[i] = rederive_add(r.states[i + 1], *add);
      cancelled = false;
    }
    auto rr = try_replay(cand);
    if (!rr) continue;
    if (!a.empty() && a != b && !(rr->states[i + 1] == r.states[i + 1])) continue;
    if (width_of(rr->weights) < before) return cand;
  }
  return std::nullopt;
}

}  // namespace

SwapResult swap_reduce(const SweepTrace& trace) {
  SwapResult out;
  out.trace = trace;
  Replay r = replay(trace);
  for (;;) {
    bool cancelled = false;
    auto next = improve(out.trace, r, cancelled);
    if (!next) break;
    out.trace = std::move(*next);
    r = replay(out.trace);
    out.reduced = true;
    ++(cancelled ? out.cancellations : out.swaps);
  }
  return out;
}

ThickAnalysis analyze_first_thick(const SweepTrace& trace) {
  const Replay r = replay(trace);
  const auto kinds = sphere_kinds(r.weights);
  auto it = std::find(kinds.begin(), kinds.end(), SphereKind::Thick);
  if (it == kinds.end()) throw Error(ErrorKind::NoThickSphere, "no thick state in the trace");
  ThickAnalysis out;
  out.k = static_cast<int>(it - kinds.begin());
  out.weights = r.weights;
  const auto& fk = r.states[out.k];
  const auto& add = std::get<AddPair>(trace.events[out.k - 1]);
  const auto& rem = std::get<RemovePairEvent>(trace.events[out.k]);

  auto comps = decompose(fk);
  for (const auto& k : comps) out.strack_weights.push_back(k.weight());
  auto comp = component_of(fk);
  if (comp[add.names[0]] == comp[rem.names[0]]) out.exceptional_piece = comp[add.names[0]];

  auto describe_pair = [&](const std::array<std::string, 2>& names) {
    PairInfo info;
    auto p = *fk.find_point(names[0]), q = *fk.find_point(names[1]);
    if (fk.position(p) > fk.position(q)) std::swap(p, q);
    info.edge = fk.complex().edge(fk.point(p).edge).id;
    info.names = {fk.point(p).name, fk.point(q).name};
    info.positions = {fk.position(p), fk.position(q)};
    const int piece = comp[names[0]];
    std::set<std::string> members;
    for (int id : comps[piece].cycle) members.insert(fk.point(id).name);
    auto rest = splice_out(fk, {fk.point(p).edge, p, q});
    for (const auto& k : decompose(rest)) {
      if (members.count(rest.point(k.cycle.front()).name)) info.split.push_back(k.weight());
    }
    std::sort(info.split.begin(), info.split.end());
    info.disconnects = info.split.size() >= 2;
    return info;
  };
  out.added = describe_pair(add.names);
  out.removed = describe_pair(rem.names);
  out.disconnects = out.exceptional_piece >= 0 && out.added.disconnects && out.removed.disconnects;

  std::vector<int> per(comps.size(), 0);
  for (const auto& rp : find_removable_pairs(fk)) ++per[comp[fk.point(rp.pair.first).name]];
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (static_cast<int>(i) == out.exceptional_piece) {
      out.piece_removable_pairs = per[i];
    } else {
      out.other_removable_pairs.push_back(per[i]);
    }
  }
  if (out.exceptional_piece >= 0) out.exceptional_weight = comps[out.exceptional_piece].weight();

  if (fk.has_returning_arcs()) {
    out.uncross_obstructed = true;
    out.obstruction = "state has returning arcs";
    return out;
  }
  auto un = uncross(fk);
  if (!un.ok()) {
    out.uncross_obstructed = true;
    out.obstruction = un.obstructed->reason;
    return out;
  }
  int octagons = 0;
  bool rest_normal = true;
  const bool tetra = fk.complex().is_tetrahedron();
  for (const auto& k : decompose(un.uncrossed->result)) {
    out.uncrossed_components.push_back(k.weight());
    if (k.weight() == 8 && tetra && is_octagon(tetra_tuple(k.weights))) {
      ++octagons;
    } else if (k.weight() != 3 && k.weight() != 4) {
      rest_normal = false;
    }
  }
  std::sort(out.uncrossed_components.begin(), out.uncrossed_components.end());
  out.almost_normal_after_uncross = rest_normal && octagons == 1;
  return out;
}

}  // namespace tracklab
