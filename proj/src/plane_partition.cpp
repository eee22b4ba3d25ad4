#include "hourglass/plane_partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hourglass {

namespace {

[[noreturn]] void bad_cell(const std::string& what, int i, int j) {
  std::ostringstream os;
  os << what << " at cell (" << i << "," << j << ")";
  throw std::invalid_argument(os.str());
}

}  // namespace

PlanePartition::PlanePartition(Box3 box, std::vector<std::vector<int>> heights)
    : box_(box), heights_(std::move(heights)) {
  if (box.a < 0 || box.b < 0 || box.c < 0)
    throw std::invalid_argument("box sides must be nonnegative");
  if ((int)heights_.size() != box.a)
    throw std::invalid_argument("height matrix has wrong number of rows");
  for (int i = 0; i < box.a; ++i)
    if ((int)heights_[i].size() != box.b)
      throw std::invalid_argument("height matrix has wrong number of columns");
  for (int i = 0; i < box.a; ++i)
    for (int j = 0; j < box.b; ++j) {
      int h = heights_[i][j];
      if (h < 0 || h > box.c) bad_cell("entry out of [0,c]", i + 1, j + 1);
      if (j + 1 < box.b && heights_[i][j + 1] > h)
        bad_cell("row not weakly decreasing", i + 1, j + 2);
      if (i + 1 < box.a && heights_[i + 1][j] > h)
        bad_cell("column not weakly decreasing", i + 2, j + 1);
    }
}

long long PlanePartition::cube_count() const {
  long long n = 0;
  for (const auto& row : heights_)
    for (int h : row) n += h;
  return n;
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Plain: return "plain";
    case SymmetryClass::SPP: return "spp";
    case SymmetryClass::CSPP: return "cspp";
    case SymmetryClass::TSPP: return "tspp";
    case SymmetryClass::SCPP: return "scpp";
    case SymmetryClass::TSSCPP: return "tsscpp";
  }
  return "?";
}

std::optional<SymmetryClass> symmetry_class_from_string(const std::string& s) {
  if (s == "plain") return SymmetryClass::Plain;
  if (s == "spp") return SymmetryClass::SPP;
  if (s == "cspp") return SymmetryClass::CSPP;
  if (s == "tspp") return SymmetryClass::TSPP;
  if (s == "scpp") return SymmetryClass::SCPP;
  if (s == "tsscpp") return SymmetryClass::TSSCPP;
  return std::nullopt;
}

void require_class_shape(SymmetryClass c, const Box3& box) {
  switch (c) {
    case SymmetryClass::Plain:
    case SymmetryClass::SCPP:
      return;
    case SymmetryClass::SPP:
      if (box.a != box.b)
        throw std::invalid_argument("SPP requires a box with a = b");
      return;
    case SymmetryClass::CSPP:
    case SymmetryClass::TSPP:
      if (box.a != box.b || box.b != box.c)
        throw std::invalid_argument(to_string(c) + " requires a cube box a = b = c");
      return;
    case SymmetryClass::TSSCPP:
      if (box.a != box.b || box.b != box.c || box.a % 2 != 0)
        throw std::invalid_argument("TSSCPP requires a = b = c even");
      return;
  }
}

namespace {

// Recursive row-by-row generation.  Within a row, cells are filled left to
// right, each bounded above by the left neighbor and the cell above; trying
// the largest value first yields descending lexicographic order overall.
void gen_rows(const Box3& box, std::vector<std::vector<int>>& rows, int i, int j,
              const std::function<void(const PlanePartition&)>& fn) {
  if (i == box.a) {
    fn(PlanePartition(box, rows));
    return;
  }
  int hi = box.c;
  if (j > 0) hi = std::min(hi, rows[i][j - 1]);
  if (i > 0) hi = std::min(hi, rows[i - 1][j]);
  for (int h = hi; h >= 0; --h) {
    rows[i][j] = h;
    if (j + 1 < box.b)
      gen_rows(box, rows, i, j + 1, fn);
    else
      gen_rows(box, rows, i + 1, 0, fn);
  }
}

}  // namespace

void for_each_in_box(const Box3& box,
                     const std::function<void(const PlanePartition&)>& fn) {
  if (box.a < 0 || box.b < 0 || box.c < 0)
    throw std::invalid_argument("box sides must be nonnegative");
  if (box.a == 0 || box.b == 0) {
    fn(PlanePartition(box, std::vector<std::vector<int>>(box.a, std::vector<int>(box.b, 0))));
    return;
  }
  std::vector<std::vector<int>> rows(box.a, std::vector<int>(box.b, 0));
  gen_rows(box, rows, 0, 0, fn);
}

std::vector<PlanePartition> enumerate_box(const Box3& box) {
  std::vector<PlanePartition> out;
  for_each_in_box(box, [&](const PlanePartition& p) { out.push_back(p); });
  return out;
}

BigInt macmahon_count(const Box3& box) {
  BigInt num = 1, den = 1;
  for (int i = 1; i <= box.a; ++i)
    for (int j = 1; j <= box.b; ++j) {
      num *= i + j + box.c - 1;
      den *= i + j - 1;
    }
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("MacMahon product did not divide exactly");
  return q;
}

namespace {

bool is_symmetric_matrix(const PlanePartition& p) {
  for (int i = 1; i <= p.box().a; ++i)
    for (int j = 1; j <= p.box().b; ++j)
      if (p.at(i, j) != p.at(j, i)) return false;
  return true;
}

bool cspp_by_rotation(const PlanePartition& p) {
  int n = p.box().a;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (p.contains_cube(i, j, k) != p.contains_cube(j, k, i)) return false;
  return true;
}

bool is_self_complementary(const PlanePartition& p) {
  const Box3& b = p.box();
  for (int i = 1; i <= b.a; ++i)
    for (int j = 1; j <= b.b; ++j)
      if (p.at(i, j) + p.at(b.a - i + 1, b.b - j + 1) != b.c) return false;
  return true;
}

}  // namespace

bool cspp_by_conjugation(const PlanePartition& p) {
  // Row i, read as an integer partition, must be conjugate to column i.
  int n = p.box().a;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int col_j = 0;  // j-th part of the conjugate of row i = #{l : p(i,l) >= j}
      for (int l = 1; l <= n; ++l)
        if (p.at(i, l) >= j) ++col_j;
      if (col_j != p.at(j, i)) return false;
    }
  return true;
}

bool has_symmetry(const PlanePartition& p, SymmetryClass c) {
  require_class_shape(c, p.box());
  switch (c) {
    case SymmetryClass::Plain: return true;
    case SymmetryClass::SPP: return is_symmetric_matrix(p);
    case SymmetryClass::CSPP: return cspp_by_rotation(p);
    case SymmetryClass::TSPP:
      return is_symmetric_matrix(p) && cspp_by_rotation(p);
    case SymmetryClass::SCPP: return is_self_complementary(p);
    case SymmetryClass::TSSCPP:
      return is_symmetric_matrix(p) && cspp_by_rotation(p) &&
             is_self_complementary(p);
  }
  return false;
}

namespace {

// Cell-by-cell generation with the class's equalities propagated onto cells
// that are determined by earlier ones; a final has_symmetry filter keeps the
// contract exact.  This is what makes TSSCPP(6,6,6) reachable without
// walking all of PP(6,6,6).
void gen_class(const Box3& box, SymmetryClass cls,
               std::vector<std::vector<int>>& h, int i, int j,
               std::vector<PlanePartition>& out) {
  if (i == box.a) {
    PlanePartition p(box, h);
    if (has_symmetry(p, cls)) out.push_back(p);
    return;
  }
  int ni = i, nj = j + 1;
  if (nj == box.b) ni = i + 1, nj = 0;

  int hi = box.c, lo = 0;
  if (j > 0) hi = std::min(hi, h[i][j - 1]);
  if (i > 0) hi = std::min(hi, h[i - 1][j]);

  bool transpose_like = cls == SymmetryClass::SPP || cls == SymmetryClass::TSPP ||
                        cls == SymmetryClass::TSSCPP;
  bool cyclic_like = cls == SymmetryClass::CSPP || cls == SymmetryClass::TSPP ||
                     cls == SymmetryClass::TSSCPP;
  bool sc_like = cls == SymmetryClass::SCPP || cls == SymmetryClass::TSSCPP;

  int forced = -1;
  auto require = [&](int v) {
    if (forced == -1) forced = v;
    else if (forced != v) forced = -2;
  };
  if (transpose_like && j < i) require(h[j][i]);
  if (cyclic_like && j < i) {
    int cnt = 0;  // row j is complete; conjugation forces this cell
    for (int l = 0; l < box.b; ++l)
      if (h[j][l] >= i + 1) ++cnt;
    require(cnt);
  }
  if (sc_like) {
    int pi = box.a - 1 - i, pj = box.b - 1 - j;
    if (pi < i || (pi == i && pj < j)) require(box.c - h[pi][pj]);
  }
  if (forced == -2) return;
  if (forced >= 0) {
    if (forced < lo || forced > hi) return;
    h[i][j] = forced;
    gen_class(box, cls, h, ni, nj, out);
    return;
  }
  for (int v = hi; v >= lo; --v) {
    h[i][j] = v;
    gen_class(box, cls, h, ni, nj, out);
  }
}

}  // namespace

std::vector<PlanePartition> enumerate_class(SymmetryClass c, const Box3& box) {
  require_class_shape(c, box);
  if (box.a == 0 || box.b == 0)
    return {PlanePartition(box, std::vector<std::vector<int>>(box.a, std::vector<int>(box.b, 0)))};
  std::vector<PlanePartition> out;
  std::vector<std::vector<int>> h(box.a, std::vector<int>(box.b, 0));
  gen_class(box, c, h, 0, 0, out);
  return out;
}

PlanePartition apply_symmetry_op(const PlanePartition& p, SymmetryOp op) {
  const Box3& b = p.box();
  switch (op) {
    case SymmetryOp::transpose: {
      std::vector<std::vector<int>> h(b.b, std::vector<int>(b.a));
      for (int i = 1; i <= b.b; ++i)
        for (int j = 1; j <= b.a; ++j) h[i - 1][j - 1] = p.at(j, i);
      return PlanePartition({b.b, b.a, b.c}, std::move(h));
    }
    case SymmetryOp::complement: {
      std::vector<std::vector<int>> h(b.a, std::vector<int>(b.b));
      for (int i = 1; i <= b.a; ++i)
        for (int j = 1; j <= b.b; ++j)
          h[i - 1][j - 1] = b.c - p.at(b.a - i + 1, b.b - j + 1);
      return PlanePartition(b, std::move(h));
    }
    case SymmetryOp::cyclic_rotate: {
      if (b.a != b.b || b.b != b.c)
        throw std::invalid_argument("cyclic_rotate requires a cube box");
      // (i,j,k) in rotated partition iff (j,k,i) in p.
      std::vector<std::vector<int>> h(b.a, std::vector<int>(b.b, 0));
      for (int i = 1; i <= b.a; ++i)
        for (int j = 1; j <= b.b; ++j) {
          int cnt = 0;
          for (int k = 1; k <= b.c; ++k)
            if (p.contains_cube(j, k, i)) ++cnt;
          h[i - 1][j - 1] = cnt;
        }
      return PlanePartition(b, std::move(h));
    }
  }
  throw std::logic_error("bad symmetry op");
}

PlanePartition toggle_cube(const PlanePartition& p, int i, int j, int k) {
  const Box3& b = p.box();
  if (i < 1 || i > b.a || j < 1 || j > b.b || k < 1 || k > b.c) {
    std::ostringstream os;
    os << "cube (" << i << "," << j << "," << k << ") outside box";
    throw std::invalid_argument(os.str());
  }
  auto h = p.heights();
  std::ostringstream os;
  os << "toggling cube (" << i << "," << j << "," << k << ") ";
  if (p.contains_cube(i, j, k)) {
    if (p.at(i, j) != k) {
      os << "would remove an interior cube (column height " << p.at(i, j) << ")";
      throw std::invalid_argument(os.str());
    }
    h[i - 1][j - 1] = k - 1;
  } else {
    if (p.at(i, j) != k - 1) {
      os << "would float above the column (height " << p.at(i, j) << ")";
      throw std::invalid_argument(os.str());
    }
    h[i - 1][j - 1] = k;
  }
  try {
    return PlanePartition(b, std::move(h));
  } catch (const std::invalid_argument& e) {
    os << "violates monotonicity: " << e.what();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace hourglass
