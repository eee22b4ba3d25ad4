#include "hourglass/render_svg.hpp"

#include <algorithm>
#include <sstream>

#include "hourglass/json_io.hpp"

namespace hourglass {

namespace {

struct Mapper {
  double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;
  double scale = 60.0, margin = 40.0;
  void see(Pt p) {
    auto [x, y] = real_coords(p);
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  std::pair<double, double> map(Pt p) const {
    auto [x, y] = real_coords(p);
    return {margin + (x - minx) * scale, margin + (maxy - y) * scale};
  }
  double width() const { return 2 * margin + (maxx - minx) * scale; }
  double height() const { return 2 * margin + (maxy - miny) * scale; }
};

}  // namespace

std::string render_svg(const HourglassWeb& w) {
  Mapper m;
  for (const auto& v : w.verts) m.see(v.pos);
  std::ostringstream os;
  os.precision(2);
  os << std::fixed;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << m.width() << "\" height=\"" << m.height() << "\" viewBox=\"0 0 "
     << m.width() << " " << m.height() << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : w.edges)
    for (const auto& s : e.strands) {
      os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.6\" points=\"";
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto [x, y] = m.map(s[i]);
        os << (i ? " " : "") << x << "," << y;
      }
      os << "\"/>\n";
    }
  for (const auto& v : w.verts) {
    auto [x, y] = m.map(v.pos);
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << (v.boundary ? 4.0 : 5.0)
       << "\" fill=\"" << (v.black ? "black" : "white")
       << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  }
  for (int i = 0; i < w.n(); ++i) {
    const auto& v = w.verts[w.boundary[i]];
    int e = w.boundary_edge_at(i);
    Pt g = w.verts[w.edges[e].v0].pos;
    Pt dir = v.pos - g;
    auto [x, y] = m.map(v.pos);
    auto [gx, gy] = m.map(g);
    double dx = x - gx, dy = y - gy, len = std::max(1.0, std::hypot(dx, dy));
    os << "<text x=\"" << x + 14 * dx / len << "\" y=\"" << y + 14 * dy / len
       << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">b"
       << i + 1 << "</text>\n";
    (void)dir;
  }
  // mark the base face
  auto [bx, by] = m.map(w.base_rep);
  os << "<text x=\"" << bx << "\" y=\"" << by - 10
     << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"gray\">F0</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace hourglass
