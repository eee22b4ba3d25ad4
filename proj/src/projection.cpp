#include "hourglass/projection.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hourglass/trips.hpp"
#include "hourglass/web.hpp"

namespace hourglass {

std::string MarkedNonCrossingMatching::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) os << ' ';
    os << arcs[i].a + 1 << '-' << arcs[i].b + 1;
    if (arcs[i].mark == Mark::white_mid) os << 'w';
    if (arcs[i].mark == Mark::black_mid) os << 'b';
  }
  return os.str();
}

LatticeWord project_word(const ClassWordSpec& spec, const LatticeWord& w) {
  if (spec.cls == SymmetryClass::CSPP)
    throw std::invalid_argument(
        "the projection is undefined for cyclically symmetric plane partitions");
  if (!validate_word(spec, w))
    throw std::invalid_argument("word is not a valid " + to_string(spec.cls) +
                                " boundary word for these parameters");
  // Fixed letters are identified structurally, by their position in the
  // class template, never by value.
  auto toks = w.tokens();
  std::size_t drop_head = 0, drop_tail = 0;
  std::vector<std::size_t> drop_mids;
  int shift = 2, rank = 2;
  switch (spec.cls) {
    case SymmetryClass::SPP:
      // 1^a (-4)^c 2^a {4,(34)}: drop the 1s and 2s
      drop_head = spec.a;
      for (std::size_t t = spec.a + spec.c; t < (std::size_t)(2 * spec.a + spec.c); ++t)
        drop_mids.push_back(t);
      break;
    case SymmetryClass::TSPP:
      drop_head = spec.a;
      shift = 1;
      rank = 3;
      break;
    case SymmetryClass::TSSCPP:
      // 1^d [2 -4 2 ... -4 2] block (34): drop the 1s, the alternation's 2s,
      // and the final pair
      drop_head = spec.d;
      for (int i = 0; i < spec.d; ++i) drop_mids.push_back(spec.d + 2 * i);
      drop_tail = 1;
      break;
    default:
      throw std::invalid_argument("no projection for class " + to_string(spec.cls));
  }
  std::vector<int> letters;
  std::set<std::size_t> marks;
  for (std::size_t t = drop_head; t < toks.size() - drop_tail; ++t) {
    if (std::find(drop_mids.begin(), drop_mids.end(), t) != drop_mids.end()) continue;
    const auto& tok = toks[t];
    for (int k = 0; k < tok.len; ++k) {
      if (tok.len == 2 && k == 0) marks.insert(letters.size());
      int x = w.letters[tok.pos + k];
      letters.push_back(x > 0 ? x - shift : x + shift);
    }
  }
  return LatticeWord(rank, std::move(letters), std::move(marks));
}

MarkedNonCrossingMatching sl2_growth(const LatticeWord& w) {
  if (w.rank != 2) throw std::invalid_argument("growth rules apply to rank-2 words");
  if (!is_yamanouchi(w)) throw std::invalid_argument("growth rules need a Yamanouchi word");
  MarkedNonCrossingMatching m;
  std::vector<int> stack;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    int x = w.letters[i];
    m.points.push_back({x > 0, std::abs(x)});
    bool opener = x == 1 || x == -2;
    if (opener) {
      stack.push_back((int)i);
    } else {
      if (stack.empty())
        throw std::invalid_argument("word is not matchable: closer with no open arc");
      int a = stack.back();
      stack.pop_back();
      int oa = w.letters[a], ob = x;
      MarkedNonCrossingMatching::Mark mark = MarkedNonCrossingMatching::Mark::plain;
      if (oa == 1 && ob == 2) mark = MarkedNonCrossingMatching::Mark::white_mid;
      if (oa == -2 && ob == -1) mark = MarkedNonCrossingMatching::Mark::black_mid;
      m.arcs.push_back({a, (int)i, mark});
    }
  }
  if (!stack.empty())
    throw std::invalid_argument("word is not matchable: open arcs remain");
  std::sort(m.arcs.begin(), m.arcs.end());
  return m;
}

bool matching_validate(const MarkedNonCrossingMatching& m) {
  const int n = (int)m.points.size();
  if ((int)m.arcs.size() * 2 != n) return false;
  std::vector<int> partner(n, -1);
  for (const auto& arc : m.arcs) {
    if (arc.a < 0 || arc.b >= n || arc.a >= arc.b) return false;
    if (partner[arc.a] != -1 || partner[arc.b] != -1) return false;
    partner[arc.a] = arc.b;
    partner[arc.b] = arc.a;
  }
  for (int i = 0; i < n; ++i)
    if (partner[i] < 0) return false;
  for (const auto& x : m.arcs)
    for (const auto& y : m.arcs)
      if (x.a < y.a && y.a < x.b && x.b < y.b) return false;
  for (const auto& arc : m.arcs) {
    const auto &p = m.points[arc.a], &q = m.points[arc.b];
    using Mark = MarkedNonCrossingMatching::Mark;
    Mark expect;
    if (p.black && q.black && p.label == 1 && q.label == 2)
      expect = Mark::white_mid;  // growth rule 1
    else if (!p.black && q.black && p.label == 2 && q.label == 2)
      expect = Mark::plain;  // rule 2
    else if (!p.black && !q.black && p.label == 2 && q.label == 1)
      expect = Mark::black_mid;  // rule 3
    else if (p.black && !q.black && p.label == 1 && q.label == 1)
      expect = Mark::plain;  // rule 4
    else
      return false;
    if (arc.mark != expect) return false;
  }
  return true;
}

ProjectionResult project_plane_partition(const PlanePartition& p, SymmetryClass cls) {
  if (cls == SymmetryClass::CSPP)
    throw std::invalid_argument(
        "the projection is undefined for cyclically symmetric plane partitions");
  ClassWordSpec spec = ClassWordSpec::for_box(cls, p.box());
  auto web = restrict_to_fundamental_domain(p, cls);
  ProjectionResult res;
  res.source = boundary_word(web);
  res.reduced = project_word(spec, res.source);
  if (res.reduced.rank == 2) res.matching = sl2_growth(res.reduced);
  return res;
}

}  // namespace hourglass
