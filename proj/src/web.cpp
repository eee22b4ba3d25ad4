#include "hourglass/web.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hourglass {

namespace {

[[noreturn]] void internal_error(const std::string& msg) {
  throw std::logic_error("internal invariant violation: " + msg);
}

long long exact_div(i128 num, i128 den) {
  if (den == 0) internal_error("division by zero in cut intersection");
  if (num % den != 0) internal_error("cut intersection not on the integer grid");
  i128 q = num / den;
  return (long long)q;
}

}  // namespace

HexLattice::HexLattice(Box3 box) : box_(box) {
  const int a = box.a, b = box.b, c = box.c;
  auto corner_ok = [&](LatticePt p) {
    return p.v <= 0 && p.u + p.v <= a && p.u <= a + c && p.v >= -b - c &&
           p.u + p.v >= -b && p.u >= 0;
  };
  auto tri_ok = [&](Triangle t) {
    LatticePt c1{t.u, t.v}, c2{t.u + 1, t.v}, c3{t.u, t.v + 1};
    if (!t.left) c1 = {t.u + 1, t.v + 1};
    return corner_ok(c1) && corner_ok(c2) && corner_ok(c3);
  };
  for (int u = -1; u <= a + c; ++u)
    for (int v = -b - c - 1; v <= 1; ++v)
      for (bool left : {true, false}) {
        Triangle t{u, v, left};
        if (tri_ok(t)) {
          tri_index_[t] = (int)tris_.size();
          tris_.push_back(t);
        }
      }
  if ((int)tris_.size() != 2 * (a * b + b * c + c * a))
    internal_error("triangle count mismatch");

  // Dual edges, enumerated from each black (left) triangle.
  auto add_dual = [&](int tb, int tw, LatticePt ep, LatticePt eq, char fam) {
    if (tb < 0 || tw < 0) return;
    if (eq < ep) std::swap(ep, eq);
    auto key = std::minmax(tb, tw);
    if (dual_index_.count({key.first, key.second})) return;
    dual_index_[{key.first, key.second}] = (int)duals_.size();
    duals_.push_back({tb, tw, ep, eq, fam});
  };
  for (int i = 0; i < (int)tris_.size(); ++i) {
    const Triangle& t = tris_[i];
    if (!t.left) continue;
    add_dual(i, tri_index(Triangle{t.u, t.v, false}), {t.u + 1, t.v},
             {t.u, t.v + 1}, 'N');
    add_dual(i, tri_index(Triangle{t.u - 1, t.v, false}), {t.u, t.v},
             {t.u, t.v + 1}, 'W');
    add_dual(i, tri_index(Triangle{t.u, t.v - 1, false}), {t.u, t.v},
             {t.u + 1, t.v}, 'E');
  }

  // Pendant boundary edges, clockwise from the NE segment nearest T.
  auto add_pendant = [&](Triangle t, LatticePt ep, LatticePt eq, int side, int k) {
    int idx = tri_index(t);
    if (idx < 0) internal_error("pendant triangle missing");
    pendants_.push_back({idx, ep, eq, side, k});
  };
  for (int k = 1; k <= a; ++k)  // NE
    add_pendant({k - 1, -1, false}, {k - 1, 0}, {k, 0}, 0, k);
  for (int k = 1; k <= c; ++k)  // E
    add_pendant({a + k - 1, -k, true}, {a + k - 1, -k + 1}, {a + k, -k}, 1, k);
  for (int k = 1; k <= b; ++k)  // SE
    add_pendant({a + c - 1, -c - k, false}, {a + c, -c - k + 1}, {a + c, -c - k}, 2, k);
  for (int k = 1; k <= a; ++k)  // SW
    add_pendant({a + c - k, -b - c, true}, {a + c - k + 1, -b - c}, {a + c - k, -b - c}, 3, k);
  for (int k = 1; k <= c; ++k)  // W
    add_pendant({c - k, -b - c + k - 1, false}, {c - k + 1, -b - c + k - 1}, {c - k, -b - c + k}, 4, k);
  for (int k = 1; k <= b; ++k)  // NW
    add_pendant({0, -b + k - 1, true}, {0, -b + k - 1}, {0, -b + k}, 5, k);
  if ((int)pendants_.size() != 2 * (a + b + c)) internal_error("pendant count mismatch");

  for (int u = 1; u <= a + c - 1; ++u)
    for (int v = -b - c + 1; v <= -1; ++v) {
      LatticePt p{u, v};
      if (p.u + p.v <= a - 1 && p.u + p.v >= -b + 1) interior_.push_back(p);
    }
}

int HexLattice::tri_index(Triangle t) const {
  auto it = tri_index_.find(t);
  return it == tri_index_.end() ? -1 : it->second;
}

Pt HexLattice::centroid(int idx) const {
  const Triangle& t = tris_[idx];
  long long off = t.left ? kScale / 3 : 2 * kScale / 3;
  return {kScale * t.u + off, kScale * t.v + off};
}

int HexLattice::dual_between(int t1, int t2) const {
  auto key = std::minmax(t1, t2);
  auto it = dual_index_.find({key.first, key.second});
  return it == dual_index_.end() ? -1 : it->second;
}

std::vector<int> HexLattice::matching_of(const PlanePartition& p) const {
  if (!(p.box() == box_)) throw std::invalid_argument("partition box does not match lattice");
  const int a = box_.a, b = box_.b, c = box_.c;
  std::vector<int> matched;
  auto match_pair = [&](Triangle tb, Triangle tw) {
    int ib = tri_index(tb), iw = tri_index(tw);
    if (ib < 0 || iw < 0) internal_error("lozenge outside hexagon");
    int d = dual_between(ib, iw);
    if (d < 0) internal_error("lozenge triangles not adjacent");
    matched.push_back(d);
  };
  // North faces: the top of every column (the floor when the column is empty).
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      LatticePt q = project(i - 1, j - 1, p.at(i, j));
      match_pair({q.u, q.v - 1, true}, {q.u, q.v - 1, false});
    }
  // East faces: walls facing +x, including the box's back wall at x=0.
  for (int i0 = 0; i0 <= a; ++i0)
    for (int j = 1; j <= b; ++j) {
      int hi = i0 == 0 ? c : p.at(i0, j);
      int lo = i0 == a ? 0 : p.at(i0 + 1, j);
      for (int h = lo + 1; h <= hi; ++h) {
        LatticePt q = project(i0, j - 1, h);
        match_pair({q.u, q.v - 1, true}, {q.u, q.v - 2, false});
      }
    }
  // West faces: walls facing +y, including the box's back wall at y=0.
  for (int j0 = 0; j0 <= b; ++j0)
    for (int i = 1; i <= a; ++i) {
      int hi = j0 == 0 ? c : p.at(i, j0);
      int lo = j0 == b ? 0 : p.at(i, j0 + 1);
      for (int h = lo + 1; h <= hi; ++h) {
        LatticePt q = project(i - 1, j0, h);
        match_pair({q.u + 1, q.v - 1, true}, {q.u, q.v - 1, false});
      }
    }
  std::sort(matched.begin(), matched.end());
  // The lozenges must tile the hexagon: every triangle covered exactly once.
  std::vector<int> cover(tris_.size(), 0);
  for (int d : matched) {
    ++cover[duals_[d].black_tri];
    ++cover[duals_[d].white_tri];
  }
  for (int cvr : cover)
    if (cvr != 1) internal_error("lozenges of the partition do not tile the hexagon");
  return matched;
}

std::array<int, 6> HexLattice::duals_around(LatticePt q) const {
  const int x = q.u, y = q.v;
  std::array<Triangle, 6> ring = {
      Triangle{x, y, true},         Triangle{x - 1, y, false},
      Triangle{x - 1, y, true},     Triangle{x - 1, y - 1, false},
      Triangle{x, y - 1, true},     Triangle{x, y - 1, false}};
  std::array<int, 6> out{};
  for (int i = 0; i < 6; ++i) {
    int t1 = tri_index(ring[i]), t2 = tri_index(ring[(i + 1) % 6]);
    if (t1 < 0 || t2 < 0) internal_error("duals_around called off the interior");
    out[i] = dual_between(t1, t2);
    if (out[i] < 0) internal_error("missing dual around interior point");
  }
  return out;
}

bool HexLattice::point_in_hexagon(LatticePt p) const {
  const int a = box_.a, b = box_.b, c = box_.c;
  return p.v <= 0 && p.u + p.v <= a && p.u <= a + c && p.v >= -b - c &&
         p.u + p.v >= -b && p.u >= 0;
}

Wedge fundamental_wedge(SymmetryClass cls, const Box3& box) {
  require_class_shape(cls, box);
  const int a = box.a, c = box.c;
  Wedge w;
  w.cls = cls;
  Pt T{0, 0};
  Pt O{kScale * (a + c) / 2, -kScale * (box.b + c) / 2};
  Pt C_SE{kScale * (a + c), -kScale * (box.b + c)};
  switch (cls) {
    case SymmetryClass::SPP:
      // Full diagonal T -> C_SE; keep the eastern half.
      w.lines.push_back({T, C_SE - T, +1});
      return w;
    case SymmetryClass::CSPP:
      w.lines.push_back({O, T - O, -1});
      w.lines.push_back({O, Pt{kScale * (a + c), -kScale * c} - O, +1});
      return w;
    case SymmetryClass::TSPP:
      w.lines.push_back({O, T - O, -1});
      w.lines.push_back({O, Pt{kScale * a, 0} - O, +1});
      return w;
    case SymmetryClass::TSSCPP:
      w.lines.push_back({O, T - O, -1});
      w.lines.push_back({O, Pt{kScale * a / 2, 0} - O, +1});
      return w;
    default:
      throw std::invalid_argument("no fundamental-domain cut for class " + to_string(cls));
  }
}

namespace {

struct StubSortKey {
  int line_rank;
  i128 key;
  i128 tie;  // outer-face walk key, used inside split pairs
  bool operator<(const StubSortKey& o) const {
    if (line_rank != o.line_rank) return line_rank < o.line_rank;
    if (key != o.key) return key < o.key;
    return tie < o.tie;
  }
};

struct PendingStub {
  int edge_id;
  StubSortKey sort;
};

// walk_key: increases along the clockwise boundary walk of the wedge.
i128 walk_key(const Wedge::Line& line, int line_idx, bool two_lines, Pt x) {
  i128 d = (i128)line.dir.x * (x.x - line.origin.x) +
           (i128)line.dir.y * (x.y - line.origin.y);
  // line 0 runs toward T (ascending for the hat lines, ascending toward T for
  // the SPP diagonal whose dir points away from T); line 1 runs from the
  // hexagon end toward O.
  if (!two_lines) return -d;      // SPP diagonal, dir = C_SE - T
  return line_idx == 1 ? -d : d;  // class ray descends; hat ascends
}

struct Builder {
  const HexLattice& lat;
  const std::set<int> matched;
  const Wedge* wedge;
  HourglassWeb web;

  std::vector<int> tri_vertex;  // triangle idx -> vertex id or -1

  Builder(const HexLattice& l, const std::vector<int>& m, const Wedge* w)
      : lat(l), matched(m.begin(), m.end()), wedge(w) {
    web.box = l.box();
    web.matched = m;
    std::sort(web.matched.begin(), web.matched.end());
  }

  bool keeps(Pt p) const { return !wedge || wedge->keeps(p); }

  int new_vertex(Pt pos, bool black, bool boundary) {
    web.verts.push_back({pos, black, boundary, {}});
    return (int)web.verts.size() - 1;
  }

  // Crossing of the polyline (walked from its kept end) with the wedge
  // boundary: returns (prefix length kept, crossing point, line index).
  std::tuple<int, Pt, int> find_crossing(const std::vector<Pt>& pts) const {
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      if (!keeps(pts[i])) internal_error("stub polyline leaves wedge early");
      if (keeps(pts[i + 1])) continue;
      Pt A = pts[i], B = pts[i + 1];
      int best_line = -1;
      Pt best{};
      i128 best_num = 0, best_den = 1;
      for (size_t li = 0; li < wedge->lines.size(); ++li) {
        const auto& L = wedge->lines[li];
        i128 s0 = cross(L.dir, A - L.origin);
        i128 s1 = cross(L.dir, B - L.origin);
        if (sgn(s0) == L.keep_sign && sgn(s1) == L.keep_sign) continue;
        // t = s0 / (s0 - s1), the first parameter where the side test fails.
        i128 num = s0, den = s0 - s1;
        if (den == 0) continue;
        if (num < 0) { num = -num; den = -den; }
        if (den <= 0 || num > den) continue;
        Pt X{A.x + exact_div(num * (B.x - A.x), den),
             A.y + exact_div(num * (B.y - A.y), den)};
        if (best_line < 0 || num * best_den < best_num * den) {
          best_line = (int)li;
          best = X;
          best_num = num;
          best_den = den;
        }
      }
      if (best_line < 0) internal_error("crossed edge has no cut intersection");
      return {(int)i, best, best_line};
    }
    internal_error("crossed edge never leaves the wedge");
  }

  // Midpoint with integrality check.
  static Pt midpoint(Pt a, Pt b) {
    if (((a.x + b.x) | (a.y + b.y)) & 1)
      internal_error("midpoint not on the integer grid");
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
  }

  void build(std::vector<PendingStub>& stubs,
             std::vector<std::pair<int, int>>& kept_pendants) {
    tri_vertex.assign(lat.tri_count(), -1);
    for (int t = 0; t < lat.tri_count(); ++t)
      if (keeps(lat.centroid(t)))
        tri_vertex[t] = new_vertex(lat.centroid(t), lat.tri_black(t), false);

    const bool two_lines = wedge && wedge->lines.size() == 2;

    for (int d = 0; d < (int)lat.duals().size(); ++d) {
      const auto& du = lat.duals()[d];
      int vb = tri_vertex[du.black_tri], vw = tri_vertex[du.white_tri];
      Pt gb = lat.centroid(du.black_tri), gw = lat.centroid(du.white_tri);
      Pt rp = scaled(du.ep), rq = scaled(du.eq);
      Pt M = midpoint(rp, rq);
      bool hg = matched.count(d) > 0;
      std::vector<std::vector<Pt>> strands;
      if (hg) {
        Pt delta{(rq.x - rp.x) / 8, (rq.y - rp.y) / 8};
        Pt h1 = midpoint(gb, M), h2 = midpoint(M, gw);
        strands.push_back({gb, h1 + delta, M, h2 - delta, gw});
        strands.push_back({gb, h1 - delta, M, h2 + delta, gw});
      } else {
        strands.push_back({gb, gw});
      }
      if (vb >= 0 && vw >= 0) {
        HourglassWeb::Edge e;
        e.v0 = vb;
        e.v1 = vw;
        e.hourglass = hg;
        e.dual_id = d;
        e.rep0 = rp;
        e.rep1 = rq;
        e.strands = std::move(strands);
        web.edges.push_back(std::move(e));
      } else if (vb >= 0 || vw >= 0) {
        // Crossed by the cut: each strand leaves a boundary stub.
        int vin = vb >= 0 ? vb : vw;
        std::vector<int> stub_ids;
        for (auto& s : strands) {
          std::vector<Pt> pts = s;
          if (vb < 0) std::reverse(pts.begin(), pts.end());
          auto [last_kept, X, line_idx] = find_crossing(pts);
          Pt tip = midpoint(pts[last_kept], X);
          std::vector<Pt> stub(pts.begin(), pts.begin() + last_kept + 1);
          stub.push_back(tip);
          int bv = new_vertex(tip, !web.verts[vin].black, true);
          HourglassWeb::Edge e;
          e.v0 = vin;
          e.v1 = bv;
          e.boundary_edge = true;
          e.dual_id = d;
          e.rep0 = rp;
          e.rep1 = rq;
          e.strands = {stub};
          StubSortKey key{};
          key.line_rank = two_lines ? (line_idx == 1 ? 0 : 1) : 0;
          key.key = walk_key(wedge->lines[line_idx], line_idx, two_lines, X);
          if (hg) {
            if (wedge->cls == SymmetryClass::TSSCPP && line_idx == 1)
              internal_error("the 30-degree cut crossed an hourglass");
            // the face wedged between the two stubs of the split pair
            e.has_mid_rep = true;
            e.mid_rep = M;
            // outer face: the crossed-lattice-edge endpoint on this strand's side
            Pt ref = stub[1];
            int side_ref = sgn(cross(gw - gb, ref - gb));
            int side_p = sgn(cross(gw - gb, rp - gb));
            if (side_ref == 0 || side_p == 0)
              internal_error("degenerate stub side computation");
            Pt outer = side_ref == side_p ? rp : rq;
            e.rep0 = outer;
            e.rep1 = outer;
            key.tie = walk_key(wedge->lines[line_idx], line_idx, two_lines, outer);
          }
          web.edges.push_back(std::move(e));
          stub_ids.push_back((int)web.edges.size() - 1);
          stubs.push_back({(int)web.edges.size() - 1, key});
        }
        if (stub_ids.size() == 2) {
          web.edges[stub_ids[0]].split_partner = stub_ids[1];
          web.edges[stub_ids[1]].split_partner = stub_ids[0];
        }
      }
    }

    for (int pi = 0; pi < (int)lat.pendants().size(); ++pi) {
      const auto& pd = lat.pendants()[pi];
      int vin = tri_vertex[pd.tri];
      if (vin < 0) continue;
      Pt g = lat.centroid(pd.tri);
      Pt rp = scaled(pd.ep), rq = scaled(pd.eq);
      Pt M = midpoint(rp, rq);
      Pt tip{3 * M.x - 2 * g.x, 3 * M.y - 2 * g.y};
      if (!keeps(tip)) internal_error("kept triangle with cut pendant");
      int bv = new_vertex(tip, !web.verts[vin].black, true);
      HourglassWeb::Edge e;
      e.v0 = vin;
      e.v1 = bv;
      e.boundary_edge = true;
      e.rep0 = rp;
      e.rep1 = rq;
      e.strands = {{g, tip}};
      web.edges.push_back(std::move(e));
      kept_pendants.push_back({(int)web.edges.size() - 1, pi});
    }
  }

  void build_rotations() {
    std::vector<std::vector<std::pair<Pt, HourglassWeb::EndRef>>> ends(web.verts.size());
    for (int ei = 0; ei < (int)web.edges.size(); ++ei) {
      const auto& e = web.edges[ei];
      for (int si = 0; si < (int)e.strands.size(); ++si) {
        const auto& s = e.strands[si];
        ends[e.v0].push_back({s[1] - s[0], {ei, si, 0}});
        ends[e.v1].push_back({s[s.size() - 2] - s.back(), {ei, si, 1}});
      }
    }
    for (int v = 0; v < (int)web.verts.size(); ++v) {
      auto& lst = ends[v];
      std::sort(lst.begin(), lst.end(),
                [](const auto& a, const auto& b) { return ccw_less(a.first, b.first); });
      if (web.verts[v].boundary) {
        if (lst.size() != 1) internal_error("boundary vertex degree != 1");
      } else if (lst.size() != 4) {
        internal_error("internal vertex degree != 4");
      }
      for (auto& [dir, ref] : lst) web.verts[v].rot.push_back(ref);
    }
  }

  void order_boundary(const std::vector<PendingStub>& stubs,
                      const std::vector<std::pair<int, int>>& kept_pendants) {
    // Kept pendants must form a prefix of the full clockwise pendant order,
    // so numbering can start at the NE segment nearest T.
    for (size_t i = 0; i < kept_pendants.size(); ++i)
      if (kept_pendants[i].second != (int)i)
        internal_error("kept pendants are not a clockwise prefix");
    std::vector<PendingStub> ordered = stubs;
    std::sort(ordered.begin(), ordered.end(),
              [](const PendingStub& a, const PendingStub& b) { return a.sort < b.sort; });
    for (auto [e, pi] : kept_pendants) web.boundary.push_back(web.edges[e].v1);
    for (const auto& s : ordered) web.boundary.push_back(web.edges[s.edge_id].v1);
    web.base_rep = Pt{0, 0};
    build_rim();
  }

  // The disk rim is an inflated copy of the wedge (or hexagon) boundary: the
  // hexagon sides pushed outward and the cut lines pushed onto their
  // discarded sides.  Each boundary vertex exits to the rim along its own
  // pendant/stub chord, which keeps the two faces flanking it on the correct
  // sides; the rim then follows the polygon.  Everything stays integral.
  struct RimSide {
    Pt origin, dir;  // clockwise; interior strictly to the right
  };

  std::vector<RimSide> rim_polygon() const {
    const long long a = web.box.a, b = web.box.b, c = web.box.c, s = kScale;
    const long long push = s, eps = s / 2;
    RimSide ne{{0, s * 1}, {1, 0}};
    RimSide east{{s * a + push, 0}, {1, -1}};
    RimSide se{{s * (a + c) + push, 0}, {0, -1}};
    RimSide sw{{0, -s * (b + c) - push}, {-1, 0}};
    RimSide west{{-s * b - push, 0}, {-1, 1}};
    RimSide nw{{-push, 0}, {0, 1}};
    RimSide diag{{-eps, 0}, {-1, 1}};  // x + y = -eps, traversed toward T
    if (!wedge) return {ne, east, se, sw, west, nw};
    switch (wedge->cls) {
      case SymmetryClass::SPP:
        return {ne, east, se, diag};
      case SymmetryClass::CSPP:
        return {ne, east, RimSide{{0, -s * a - eps}, {-1, 0}}, diag};
      case SymmetryClass::TSPP:
        return {ne, RimSide{{s * a + eps, 0}, {0, -1}}, diag};
      case SymmetryClass::TSSCPP:
        // the 30-degree cut line 2x + y = s*a + eps through O and mid-NE
        return {ne, RimSide{{(s * a + eps) / 2, 0}, {1, -2}}, diag};
      default:
        internal_error("unexpected wedge class");
    }
  }

  static Pt side_intersection(const RimSide& s1, const RimSide& s2) {
    i128 num = cross(s2.dir, s2.origin - s1.origin);
    i128 den = cross(s2.dir, s1.dir);
    if (den == 0) internal_error("parallel rim sides");
    return {s1.origin.x + exact_div(num * s1.dir.x, den),
            s1.origin.y + exact_div(num * s1.dir.y, den)};
  }

  void build_rim() {
    auto sides = rim_polygon();
    const int m = (int)sides.size();
    auto inside = [&](Pt q) {
      for (const auto& sd : sides)
        if (cross(sd.dir, q - sd.origin) >= 0) return false;
      return true;
    };
    std::vector<Pt> corners(m);  // corners[j] = end of side j = start of j+1
    for (int j = 0; j < m; ++j) corners[j] = side_intersection(sides[j], sides[(j + 1) % m]);

    struct Exit {
      int side;
      i128 tau_num, tau_den;  // parameter along the side direction, den > 0
      Pt q;                   // integral rim point on the chord, inside polygon
    };
    const int n = (int)web.boundary.size();
    std::vector<Exit> exits(n);
    for (int i = 0; i < n; ++i) {
      int bv = web.boundary[i];
      Pt tip = web.verts[bv].pos;
      int ei = web.boundary_edge_at(i);
      Pt g = web.verts[web.edges[ei].v0].pos;
      Pt d = tip - g;
      long long gg = std::gcd(std::abs(d.x), std::abs(d.y));
      if (gg == 0) internal_error("degenerate boundary chord");
      d = {d.x / gg, d.y / gg};
      // first polygon side hit by the ray tip + t*d
      int best = -1;
      i128 bn = 0, bd = 1;
      for (int j = 0; j < m; ++j) {
        i128 sv = cross(sides[j].dir, tip - sides[j].origin);  // < 0 inside
        i128 sp = cross(sides[j].dir, d);
        if (sp <= 0) continue;
        // t = -sv / sp
        if (best < 0 || (-sv) * bd < bn * sp) {
          best = j;
          bn = -sv;
          bd = sp;
        }
      }
      if (best < 0) internal_error("boundary chord never exits the rim polygon");
      long long t_int = (long long)(bn / bd);
      Pt q{tip.x + t_int * d.x, tip.y + t_int * d.y};
      while (t_int > 0 && !inside(q)) {
        --t_int;
        q = {q.x - d.x, q.y - d.y};
      }
      if (t_int < 1) internal_error("no room between web and rim polygon");
      // parameter of the exact exit point along the side, as a fraction
      const auto& sd = sides[best];
      i128 base = (i128)sd.dir.x * (tip.x - sd.origin.x) + (i128)sd.dir.y * (tip.y - sd.origin.y);
      i128 step = (i128)sd.dir.x * d.x + (i128)sd.dir.y * d.y;
      exits[i] = {best, base * bd + step * bn, bd, q};
    }
    // Exits must be met in clockwise polygon order.
    for (int i = 0; i + 1 < n; ++i) {
      const Exit &e1 = exits[i], &e2 = exits[i + 1];
      bool ok;
      if (e1.side != e2.side)
        ok = e1.side < e2.side;
      else
        ok = e1.tau_num * e2.tau_den < e2.tau_num * e1.tau_den;
      if (!ok) internal_error("rim exits out of clockwise order");
    }
    web.rim_chunks.assign(n, {});
    for (int i = 0; i < n; ++i) {
      const Exit &e1 = exits[i], &e2 = exits[(i + 1) % n];
      auto& chunk = web.rim_chunks[i];
      chunk.push_back(e1.q);
      int steps = (e2.side - e1.side + m) % m;
      if (i == n - 1 && steps == 0) steps = m;  // full wrap on a single side
      for (int k = 0, j = e1.side; k < steps; ++k, j = (j + 1) % m)
        chunk.push_back(corners[j]);
      chunk.push_back(e2.q);
    }
  }
};

}  // namespace

int HourglassWeb::boundary_edge_at(int pos) const {
  return verts[boundary[pos]].rot[0].edge;
}

namespace {

HourglassWeb build_web(const HexLattice& lat, const std::vector<int>& matched,
                       const Wedge* wedge) {
  Builder b(lat, matched, wedge);
  std::vector<PendingStub> stubs;
  std::vector<std::pair<int, int>> kept_pendants;
  b.build(stubs, kept_pendants);
  if (!wedge && !stubs.empty()) internal_error("stubs without a wedge");
  b.build_rotations();
  b.order_boundary(stubs, kept_pendants);
  if (wedge) b.web.domain = wedge->cls;
  return std::move(b.web);
}

}  // namespace

HourglassWeb web_from_matching(const Box3& box, const std::vector<int>& matched) {
  HexLattice lat(box);
  return build_web(lat, matched, nullptr);
}

HourglassWeb web_from_plane_partition(const PlanePartition& p) {
  HexLattice lat(p.box());
  return build_web(lat, lat.matching_of(p), nullptr);
}

HourglassWeb restrict_to_fundamental_domain(const PlanePartition& p,
                                            SymmetryClass cls) {
  if (!has_symmetry(p, cls))
    throw std::invalid_argument("partition lacks the " + to_string(cls) + " symmetry");
  if (cls == SymmetryClass::Plain || cls == SymmetryClass::SCPP)
    throw std::invalid_argument("no fundamental-domain restriction for " + to_string(cls));
  HexLattice lat(p.box());
  Wedge w = fundamental_wedge(cls, p.box());
  return build_web(lat, lat.matching_of(p), &w);
}

// (right, left) face representatives of a simple edge relative to v0 -> v1.
// Not meaningful for full hourglass edges, whose labels come from
// complementation instead.
std::pair<Pt, Pt> edge_flank_reps(const HourglassWeb& w, int ei) {
  const auto& e = w.edges[ei];
  const auto& s = e.strands[0];
  Pt A = s[0], B = s[1];
  Pt c1 = e.rep0, c2 = e.has_mid_rep ? e.mid_rep : e.rep1;
  int s1 = sgn(cross(B - A, c1 - A));
  int s2 = sgn(cross(B - A, c2 - A));
  if (s1 == 0 || s2 == 0 || s1 == s2) internal_error("face reps do not flank edge");
  return s1 < 0 ? std::make_pair(c1, c2) : std::make_pair(c2, c1);
}

void validate_web(const HourglassWeb& w) {
  for (int ei = 0; ei < (int)w.edges.size(); ++ei) {
    const auto& e = w.edges[ei];
    if (w.verts[e.v0].black == w.verts[e.v1].black)
      internal_error("edge endpoints share a color");
    for (const auto& s : e.strands) {
      if (s.front() != w.verts[e.v0].pos || s.back() != w.verts[e.v1].pos)
        internal_error("strand endpoints disagree with vertices");
    }
    if (e.hourglass && e.strands.size() != 2) internal_error("hourglass without two strands");
  }
  for (int v = 0; v < (int)w.verts.size(); ++v) {
    const auto& vert = w.verts[v];
    if (vert.boundary) {
      if (vert.rot.size() != 1) internal_error("boundary vertex degree != 1");
      continue;
    }
    if (vert.rot.size() != 4) internal_error("internal vertex degree != 4");
    int hg = 0, split = 0;
    std::set<int> eids;
    for (const auto& r : vert.rot) eids.insert(r.edge);
    for (int ei : eids) {
      if (w.edges[ei].hourglass) ++hg;
      if (w.edges[ei].split_partner >= 0) ++split;
    }
    if (!(hg == 1 && split == 0) && !(hg == 0 && split == 2))
      internal_error("internal vertex lacks its hourglass (or split pair)");
  }
  // Face representatives must chain around the boundary, with F0 wrapping T.
  int n = w.n();
  for (int i = 0; i < n; ++i) {
    int e1 = w.boundary_edge_at(i), e2 = w.boundary_edge_at((i + 1) % n);
    Pt right1 = edge_flank_reps(w, e1).first;  // v0 -> v1 is inward -> outward
    Pt left2 = edge_flank_reps(w, e2).second;
    if (right1 != left2) internal_error("boundary face representatives disagree");
    if (i == n - 1 && right1 != w.base_rep) internal_error("base face does not wrap T");
  }
  // Rim geometry: every boundary chord must keep its two flanking face
  // representatives on the correct sides, and the rim must stay clear of the
  // web, of face representatives, and of itself.
  for (int i = 0; i < n; ++i) {
    int ei = w.boundary_edge_at(i);
    const auto& e = w.edges[ei];
    Pt tip = w.verts[e.v1].pos, g = w.verts[e.v0].pos;
    Pt d = tip - g;
    auto [right, left] = edge_flank_reps(w, ei);
    if (!(cross(d, right - tip) < 0 && cross(d, left - tip) > 0))
      internal_error("boundary chord does not separate its two faces");
  }
  std::vector<std::pair<Pt, Pt>> rim;
  for (int i = 0; i < n; ++i) {
    const auto& chunk = w.rim_chunks[i];
    Pt prev = w.verts[w.boundary[i]].pos;
    for (const Pt& q : chunk) {
      if (q != prev) rim.push_back({prev, q});
      prev = q;
    }
    rim.push_back({prev, w.verts[w.boundary[(i + 1) % n]].pos});
  }
  std::vector<Pt> protect;
  protect.push_back(w.base_rep);
  for (const auto& e : w.edges) {
    protect.push_back(e.rep0);
    protect.push_back(e.rep1);
    if (e.has_mid_rep) protect.push_back(e.mid_rep);
  }
  for (size_t r1 = 0; r1 < rim.size(); ++r1) {
    auto [p1, p2] = rim[r1];
    for (const auto& e : w.edges)
      for (const auto& s : e.strands)
        for (size_t k = 0; k + 1 < s.size(); ++k)
          if (segments_cross(p1, p2, s[k], s[k + 1]))
            internal_error("rim crosses the web");
    for (const Pt& q : protect)
      if (q != p1 && q != p2 && on_segment(q, p1, p2))
        internal_error("face representative on the rim");
    for (int v : w.boundary)
      if (w.verts[v].pos != p1 && w.verts[v].pos != p2 &&
          on_segment(w.verts[v].pos, p1, p2))
        internal_error("boundary tip on the rim");
    for (size_t r2 = r1 + 1; r2 < rim.size(); ++r2)
      if (segments_cross(p1, p2, rim[r2].first, rim[r2].second))
        internal_error("rim self-intersects");
  }
}

std::vector<Face> faces(const HourglassWeb& w) {
  HexLattice lat(w.box);
  std::map<int, int> edge_of_dual;
  for (int ei = 0; ei < (int)w.edges.size(); ++ei)
    if (w.edges[ei].dual_id >= 0 && !w.edges[ei].boundary_edge)
      edge_of_dual[w.edges[ei].dual_id] = ei;

  std::vector<Face> out;
  Wedge wd;
  bool restricted = w.domain.has_value();
  if (restricted) wd = fundamental_wedge(*w.domain, w.box);
  for (LatticePt q : lat.interior_points()) {
    if (restricted && !wd.keeps(scaled(q))) continue;
    auto ring = lat.duals_around(q);
    std::vector<int> eids;
    bool complete = true;
    for (int d : ring) {
      auto it = edge_of_dual.find(d);
      if (it == edge_of_dual.end()) {
        complete = false;
        break;
      }
      eids.push_back(it->second);
    }
    if (!complete) continue;  // sliced by a cut; becomes a boundary face
    Face f;
    f.id = (int)out.size();
    f.internal = true;
    f.rep = scaled(q);
    f.edges = std::move(eids);
    f.center = q;
    out.push_back(std::move(f));
  }
  // Boundary faces between consecutive boundary vertices.
  int n = w.n();
  for (int i = 0; i < n; ++i) {
    int e1 = w.boundary_edge_at(i);
    Face f;
    f.id = (int)out.size();
    f.internal = false;
    f.is_base = (i == n - 1);
    f.rep = edge_flank_reps(w, e1).first;
    // Walk the face combinatorially: hourglass treated as one edge.
    int edge = e1;
    int at = w.edges[e1].v0;  // inward endpoint
    f.edges.push_back(e1);
    for (int guard = 0; guard < 4 * (int)w.edges.size(); ++guard) {
      // arrival end of `edge` at `at`
      const auto& rot = w.verts[at].rot;
      int idx = -1;
      for (int k = 0; k < (int)rot.size(); ++k)
        if (rot[k].edge == edge && w.edges[edge].vend(rot[k].end) == at) idx = k;
      if (idx < 0) internal_error("face walk lost its bearings");
      // clockwise successor, skipping the second strand of the same edge
      int next = idx;
      do {
        next = (next + (int)rot.size() - 1) % rot.size();
      } while (rot[next].edge == edge);
      int ne = rot[next].edge;
      f.edges.push_back(ne);
      int nv = w.edges[ne].other(at);
      if (w.verts[nv].boundary) break;
      at = nv;
      edge = ne;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Face> benzene_faces(const HourglassWeb& w) {
  std::vector<Face> out;
  for (Face& f : faces(w)) {
    if (!f.internal) continue;
    bool ok = true;
    for (int k = 0; k < 6; ++k)
      if (w.edges[f.edges[k]].hourglass == w.edges[f.edges[(k + 1) % 6]].hourglass)
        ok = false;
    if (ok) {
      f.id = (int)out.size();
      out.push_back(std::move(f));
    }
  }
  return out;
}

HourglassWeb apply_benzene(const HourglassWeb& w, const Face& f) {
  if (!f.internal || f.edges.size() != 6)
    throw std::invalid_argument("benzene move needs an internal hexagonal face");
  std::set<int> m(w.matched.begin(), w.matched.end());
  for (int k = 0; k < 6; ++k) {
    bool h1 = w.edges[f.edges[k]].hourglass;
    bool h2 = w.edges[f.edges[(k + 1) % 6]].hourglass;
    if (h1 == h2) throw std::invalid_argument("face is not flippable");
  }
  for (int ei : f.edges) {
    int d = w.edges[ei].dual_id;
    if (m.count(d))
      m.erase(d);
    else
      m.insert(d);
  }
  if (w.domain) throw std::invalid_argument("benzene moves apply to full webs");
  return web_from_matching(w.box, std::vector<int>(m.begin(), m.end()));
}

std::vector<HourglassWeb> benzene_class(const HourglassWeb& w) {
  std::vector<HourglassWeb> out;
  std::set<std::vector<int>> seen;
  std::deque<HourglassWeb> queue;
  seen.insert(w.dimer_key());
  queue.push_back(w);
  while (!queue.empty()) {
    HourglassWeb cur = std::move(queue.front());
    queue.pop_front();
    for (const Face& f : benzene_faces(cur)) {
      HourglassWeb next = apply_benzene(cur, f);
      if (seen.insert(next.dimer_key()).second) queue.push_back(std::move(next));
    }
    out.push_back(std::move(cur));
  }
  return out;
}

}  // namespace hourglass
