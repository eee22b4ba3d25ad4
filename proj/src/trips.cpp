#include "hourglass/trips.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hourglass {

namespace {

[[noreturn]] void internal_error(const std::string& msg) {
  throw std::logic_error("internal invariant violation: " + msg);
}

int slot_of(const HourglassWeb& w, int v, HourglassWeb::EndRef ref) {
  const auto& rot = w.verts[v].rot;
  for (int k = 0; k < (int)rot.size(); ++k)
    if (rot[k] == ref) return k;
  internal_error("edge end not registered at vertex");
}

// Exit end chosen by the rules of the road when entering vertex v along
// `entry`: the a-th counterclockwise successor at black vertices, the a-th
// predecessor at white ones.
HourglassWeb::EndRef road_exit(const HourglassWeb& w, int v,
                               HourglassWeb::EndRef entry, int a) {
  int idx = slot_of(w, v, entry);
  int m = (int)w.verts[v].rot.size();
  int j = w.verts[v].black ? (idx + a) % m : ((idx - a) % m + m) % m;
  return w.verts[v].rot[j];
}

// Inverse: the entry end whose rule-a exit at v is `exit`.
HourglassWeb::EndRef road_entry(const HourglassWeb& w, int v,
                                HourglassWeb::EndRef exit, int a) {
  int idx = slot_of(w, v, exit);
  int m = (int)w.verts[v].rot.size();
  int j = w.verts[v].black ? ((idx - a) % m + m) % m : (idx + a) % m;
  return w.verts[v].rot[j];
}

void append_strand(std::vector<Pt>& poly, const HourglassWeb& w, TripStep st) {
  const auto& pts = w.edges[st.edge].strands[st.strand];
  auto push = [&](Pt p) {
    if (poly.empty() || poly.back() != p) poly.push_back(p);
  };
  if (st.from_end == 0)
    for (const Pt& p : pts) push(p);
  else
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) push(*it);
}

std::vector<TripStep> extend_forward(const HourglassWeb& w, TripStep first, int a) {
  std::vector<TripStep> steps{first};
  long long guard = 0, limit = 0;
  for (const auto& e : w.edges) limit += 4 * (long long)e.strands.size();
  while (true) {
    TripStep cur = steps.back();
    int arrive = w.edges[cur.edge].vend(1 - cur.from_end);
    if (w.verts[arrive].boundary) return steps;
    HourglassWeb::EndRef entry{cur.edge, cur.strand, 1 - cur.from_end};
    HourglassWeb::EndRef exit = road_exit(w, arrive, entry, a);
    steps.push_back({exit.edge, exit.strand, exit.end});
    if (++guard > limit) internal_error("trip failed to terminate");
  }
}

std::vector<TripStep> extend_backward(const HourglassWeb& w, TripStep last, int a) {
  std::vector<TripStep> steps{last};
  long long guard = 0, limit = 0;
  for (const auto& e : w.edges) limit += 4 * (long long)e.strands.size();
  while (true) {
    TripStep cur = steps.front();
    int depart = w.edges[cur.edge].vend(cur.from_end);
    if (w.verts[depart].boundary) return steps;
    HourglassWeb::EndRef exit{cur.edge, cur.strand, cur.from_end};
    HourglassWeb::EndRef entry = road_entry(w, depart, exit, a);
    steps.insert(steps.begin(), {entry.edge, entry.strand, 1 - entry.end});
    if (++guard > limit) internal_error("trip failed to terminate");
  }
}

TripPath assemble(const HourglassWeb& w, int a, std::vector<TripStep> steps) {
  TripPath t;
  t.index = a;
  t.steps = std::move(steps);
  int sv = w.edges[t.steps.front().edge].vend(t.steps.front().from_end);
  int ev = w.edges[t.steps.back().edge].vend(1 - t.steps.back().from_end);
  if (!w.verts[sv].boundary || !w.verts[ev].boundary)
    internal_error("trip does not join two boundary vertices");
  for (int i = 0; i < w.n(); ++i) {
    if (w.boundary[i] == sv) t.start_pos = i;
    if (w.boundary[i] == ev) t.end_pos = i;
  }
  if (t.start_pos < 0 || t.end_pos < 0) internal_error("trip endpoint not on boundary list");
  for (const TripStep& st : t.steps) append_strand(t.polyline, w, st);
  return t;
}

}  // namespace

TripPath trip_path(const HourglassWeb& w, int pos, int a) {
  if (a < 1 || a > 3) throw std::invalid_argument("trip index must be 1, 2 or 3");
  if (pos < 0 || pos >= w.n()) throw std::invalid_argument("boundary position out of range");
  int bv = w.boundary[pos];
  HourglassWeb::EndRef end = w.verts[bv].rot[0];
  return assemble(w, a, extend_forward(w, {end.edge, end.strand, end.end}, a));
}

std::vector<int> trip_permutation(const HourglassWeb& w, int a) {
  std::vector<int> sigma(w.n());
  for (int i = 0; i < w.n(); ++i) sigma[i] = trip_path(w, i, a).end_pos;
  return sigma;
}

SeparationLabeler::SeparationLabeler(const HourglassWeb& w)
    : w_(w), simple_cache_(w.edges.size(), 0) {}

TripPath SeparationLabeler::trip_through(int edge_id, int a) const {
  const auto& e = w_.edges[edge_id];
  if (e.hourglass) throw std::invalid_argument("trips are traced through simple edges");
  // Traverse black -> white.
  int from_end = w_.verts[e.v0].black ? 0 : 1;
  TripStep base{edge_id, 0, from_end};
  auto fwd = extend_forward(w_, base, a);
  auto all = extend_backward(w_, fwd.front(), a);
  all.insert(all.end(), fwd.begin() + 1, fwd.end());
  return assemble(w_, a, std::move(all));
}

bool SeparationLabeler::separates(const TripPath& t, Pt f_rep) const {
  if (f_rep == w_.base_rep) return false;
  ClosedCurve curve;
  curve.pts = t.polyline;
  if (t.end_pos != t.start_pos) {
    int n = w_.n();
    for (int i = t.end_pos; i != t.start_pos; i = (i + 1) % n)
      for (const Pt& q : w_.rim_chunks[i]) curve.pts.push_back(q);
  }
  return point_inside_even_odd(f_rep, curve) !=
         point_inside_even_odd(w_.base_rep, curve);
}

Pt SeparationLabeler::right_rep_black_to_white(int edge_id) const {
  auto [right, left] = edge_flank_reps(w_, edge_id);
  return w_.verts[w_.edges[edge_id].v0].black ? right : left;
}

int SeparationLabeler::label_simple(int edge_id) {
  if (simple_cache_[edge_id]) return simple_cache_[edge_id];
  const auto& e = w_.edges[edge_id];
  if (e.hourglass) throw std::invalid_argument("label_simple on an hourglass edge");
  Pt f_rep = right_rep_black_to_white(edge_id);
  int count = 0;
  for (int a = 1; a <= 3; ++a)
    if (separates(trip_through(edge_id, a), f_rep)) ++count;
  return simple_cache_[edge_id] = count + 1;
}

std::set<int> SeparationLabeler::label_hourglass(int edge_id) {
  const auto& e = w_.edges[edge_id];
  if (!e.hourglass) throw std::invalid_argument("label_hourglass on a simple edge");
  std::set<int> result;
  for (int side = 0; side < 2; ++side) {
    int v = side == 0 ? e.v0 : e.v1;
    std::set<int> others;
    for (const auto& r : w_.verts[v].rot)
      if (r.edge != edge_id) others.insert(r.edge);
    std::set<int> used;
    for (int o : others) used.insert(label_simple(o));
    if (used.size() != others.size())
      internal_error("improper labeling next to hourglass");
    std::set<int> comp;
    for (int c = 1; c <= 4; ++c)
      if (!used.count(c)) comp.insert(c);
    if (comp.size() != 2) internal_error("hourglass complement is not a 2-set");
    if (side == 0)
      result = comp;
    else if (result != comp)
      internal_error("hourglass complements disagree at the two endpoints");
  }
  return result;
}

void SeparationLabeler::check_proper() {
  for (int v = 0; v < (int)w_.verts.size(); ++v) {
    if (w_.verts[v].boundary) continue;
    std::set<int> eids;
    for (const auto& r : w_.verts[v].rot) eids.insert(r.edge);
    std::set<int> used;
    int total = 0;
    for (int ei : eids) {
      if (w_.edges[ei].hourglass) {
        for (int c : label_hourglass(ei)) used.insert(c);
        total += 2;
      } else {
        used.insert(label_simple(ei));
        total += 1;
      }
    }
    if (total != 4 || used.size() != 4)
      internal_error("labels do not partition {1,2,3,4} at a vertex");
  }
}

int separation_label_simple(const HourglassWeb& w, int edge_id) {
  SeparationLabeler l(w);
  return l.label_simple(edge_id);
}

std::set<int> separation_label_hourglass(const HourglassWeb& w, int edge_id) {
  SeparationLabeler l(w);
  return l.label_hourglass(edge_id);
}

LatticeWord boundary_word(const HourglassWeb& w) {
  SeparationLabeler labeler(w);
  std::vector<int> letters;
  std::set<std::size_t> marks;
  for (int i = 0; i < w.n(); ++i) {
    int ei = w.boundary_edge_at(i);
    int label = labeler.label_simple(ei);
    bool white = !w.verts[w.boundary[i]].black;
    letters.push_back(white ? -label : label);
    if (i + 1 < w.n() &&
        w.edges[ei].split_partner == w.boundary_edge_at(i + 1))
      marks.insert(letters.size() - 1);
  }
  return LatticeWord(4, std::move(letters), std::move(marks));
}

}  // namespace hourglass
