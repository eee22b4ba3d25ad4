#include "hourglass/invariants.hpp"

#include <algorithm>
#include <deque>

namespace hourglass {

long long coinv(const std::vector<int>& w) {
  long long n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] <= w[j]) ++n;
  return n;
}

namespace {

constexpr unsigned kAll = 0b11110;  // colors 1..4 as bits

// Edges in breadth-first order from edge 0 over shared vertices, so the
// backtracking meets constrained edges early.
std::vector<int> coloring_order(const HourglassWeb& w) {
  std::vector<std::vector<int>> at_vertex(w.verts.size());
  for (int e = 0; e < (int)w.edges.size(); ++e) {
    at_vertex[w.edges[e].v0].push_back(e);
    at_vertex[w.edges[e].v1].push_back(e);
  }
  std::vector<int> order;
  std::vector<bool> seen(w.edges.size(), false);
  for (int start = 0; start < (int)w.edges.size(); ++start) {
    if (seen[start]) continue;
    std::deque<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      int e = queue.front();
      queue.pop_front();
      order.push_back(e);
      for (int v : {w.edges[e].v0, w.edges[e].v1})
        for (int e2 : at_vertex[v])
          if (!seen[e2]) {
            seen[e2] = true;
            queue.push_back(e2);
          }
    }
  }
  return order;
}

struct ColoringSearch {
  const HourglassWeb& w;
  const std::function<void(const ProperColoring&)>& fn;
  std::vector<int> order;
  ProperColoring current;
  std::vector<unsigned> vertex_used;

  void run() {
    order = coloring_order(w);
    current.edge_colors.assign(w.edges.size(), 0);
    vertex_used.assign(w.verts.size(), 0);
    place(0);
  }

  void place(std::size_t k) {
    if (k == order.size()) {
      fn(current);
      return;
    }
    int e = order[k];
    const auto& edge = w.edges[e];
    unsigned blocked = vertex_used[edge.v0] | vertex_used[edge.v1];
    unsigned free = kAll & ~blocked;
    if (edge.hourglass) {
      for (int c1 = 1; c1 <= 4; ++c1)
        for (int c2 = c1 + 1; c2 <= 4; ++c2) {
          unsigned m = (1u << c1) | (1u << c2);
          if ((free & m) != m) continue;
          assign(e, m, k);
        }
    } else {
      for (int c = 1; c <= 4; ++c) {
        unsigned m = 1u << c;
        if (!(free & m)) continue;
        assign(e, m, k);
      }
    }
  }

  void assign(int e, unsigned m, std::size_t k) {
    const auto& edge = w.edges[e];
    current.edge_colors[e] = m;
    vertex_used[edge.v0] |= m;
    vertex_used[edge.v1] |= m;
    place(k + 1);
    vertex_used[edge.v0] &= ~m;
    vertex_used[edge.v1] &= ~m;
    current.edge_colors[e] = 0;
  }
};

}  // namespace

void for_each_coloring(const HourglassWeb& w,
                       const std::function<void(const ProperColoring&)>& fn) {
  ColoringSearch search{w, fn};
  search.run();
}

std::vector<ProperColoring> enumerate_colorings(const HourglassWeb& w) {
  std::vector<ProperColoring> out;
  for_each_coloring(w, [&](const ProperColoring& c) { out.push_back(c); });
  return out;
}

long long count_colorings(const HourglassWeb& w) {
  long long n = 0;
  for_each_coloring(w, [&](const ProperColoring&) { ++n; });
  return n;
}

std::vector<InvariantMonomial> invariant_at_q1(const HourglassWeb& w) {
  std::vector<InvariantMonomial> out;
  for_each_coloring(w, [&](const ProperColoring& c) {
    InvariantMonomial mono;
    std::vector<int> boundary_colors;
    for (int i = 0; i < w.n(); ++i) {
      int e = w.boundary_edge_at(i);
      auto cols = c.colors_of(e);
      InvariantMonomial::Factor f;
      f.pos = i + 1;
      f.family = w.verts[w.boundary[i]].black ? 'x' : 'y';
      f.colors = cols;
      for (int col : cols) boundary_colors.push_back(col);
      mono.factors.push_back(std::move(f));
    }
    mono.sign = coinv(boundary_colors) % 2 == 0 ? 1 : -1;
    out.push_back(std::move(mono));
  });
  return out;
}

}  // namespace hourglass
