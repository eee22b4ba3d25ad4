#include "doctest.h"
#include "hourglass/plane_partition.hpp"

#include <algorithm>
#include <set>

using namespace hourglass;

namespace {

// Independent oracle: filter every height matrix with entries in [0,c].
long long brute_force_count(const Box3& box) {
  long long cells = (long long)box.a * box.b;
  long long total = 1;
  for (long long i = 0; i < cells; ++i) total *= box.c + 1;
  long long count = 0;
  std::vector<int> h(cells, 0);
  for (long long code = 0; code < total; ++code) {
    long long x = code;
    for (long long i = 0; i < cells; ++i) {
      h[i] = (int)(x % (box.c + 1));
      x /= box.c + 1;
    }
    bool ok = true;
    for (int i = 0; i < box.a && ok; ++i)
      for (int j = 0; j < box.b && ok; ++j) {
        if (j + 1 < box.b && h[i * box.b + j + 1] > h[i * box.b + j]) ok = false;
        if (i + 1 < box.a && h[(i + 1) * box.b + j] > h[i * box.b + j]) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

PlanePartition pp(Box3 box, std::vector<std::vector<int>> h) {
  return PlanePartition(box, std::move(h));
}

}  // namespace

TEST_CASE("validation accepts a symmetric 4x4x4 matrix") {
  CHECK_NOTHROW(pp({4, 4, 4}, {{4, 4, 3, 3}, {4, 4, 3, 2}, {3, 3, 3, 0}, {3, 2, 0, 0}}));
  CHECK_NOTHROW(pp({1, 1, 1}, {{0}}));
}

TEST_CASE("validation rejects bad matrices with cell references") {
  CHECK_THROWS_WITH_AS(pp({1, 2, 1}, {{0, 1}}),
                       "row not weakly decreasing at cell (1,2)", std::invalid_argument);
  CHECK_THROWS_AS(pp({1, 1, 1}, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(pp({2, 1, 1}, {{0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(pp({2, 2, 2}, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("enumeration counts match the brute-force oracle") {
  CHECK(enumerate_box({1, 1, 1}).size() == 2);
  CHECK(enumerate_box({2, 2, 2}).size() == 20);
  CHECK(enumerate_box({0, 3, 2}).size() == 1);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 2; ++c)
        CHECK((long long)enumerate_box({a, b, c}).size() == brute_force_count({a, b, c}));
}

TEST_CASE("enumeration is duplicate-free and descending-lex ordered") {
  auto all = enumerate_box({2, 2, 3});
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<int> prev;
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(seen.insert(all[i].heights()).second);
    std::vector<int> flat;
    for (const auto& row : all[i].heights())
      flat.insert(flat.end(), row.begin(), row.end());
    if (i > 0) CHECK(flat < prev);
    prev = flat;
  }
}

TEST_CASE("MacMahon formula") {
  CHECK(macmahon_count({1, 1, 1}) == 2);
  CHECK(macmahon_count({2, 2, 2}) == 20);
  CHECK(macmahon_count({3, 3, 0}) == 1);
  CHECK(macmahon_count({5, 4, 0}) == 1);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        CHECK(macmahon_count({a, b, c}) == (long long)enumerate_box({a, b, c}).size());
}

TEST_CASE("symmetry predicates on reference examples") {
  auto spp = pp({4, 4, 4}, {{4, 4, 3, 3}, {4, 4, 3, 2}, {3, 3, 3, 0}, {3, 2, 0, 0}});
  CHECK(has_symmetry(spp, SymmetryClass::SPP));
  CHECK_FALSE(has_symmetry(spp, SymmetryClass::CSPP));

  auto cspp = pp({4, 4, 4}, {{4, 4, 3, 3}, {4, 3, 3, 1}, {4, 3, 2, 0}, {2, 1, 1, 0}});
  CHECK(has_symmetry(cspp, SymmetryClass::CSPP));
  CHECK(cspp_by_conjugation(cspp));
  CHECK_FALSE(has_symmetry(cspp, SymmetryClass::SPP));

  auto tspp = pp({4, 4, 4}, {{4, 4, 4, 3}, {4, 3, 2, 1}, {4, 2, 1, 1}, {3, 1, 1, 0}});
  CHECK(has_symmetry(tspp, SymmetryClass::TSPP));

  auto tsscpp = pp({4, 4, 4}, {{4, 4, 3, 2}, {4, 3, 2, 1}, {3, 2, 1, 0}, {2, 1, 0, 0}});
  CHECK(has_symmetry(tsscpp, SymmetryClass::TSSCPP));

  auto zero2 = pp({2, 2, 2}, {{0, 0}, {0, 0}});
  CHECK(has_symmetry(zero2, SymmetryClass::SPP));
  CHECK(has_symmetry(zero2, SymmetryClass::CSPP));
  CHECK(has_symmetry(zero2, SymmetryClass::TSPP));
  CHECK_FALSE(has_symmetry(zero2, SymmetryClass::SCPP));
  CHECK_THROWS_AS(has_symmetry(pp({1, 2, 1}, {{1, 0}}), SymmetryClass::SPP),
                  std::invalid_argument);
}

TEST_CASE("the two CSPP formulations agree") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_box({n, n, n}))
      CHECK(has_symmetry(p, SymmetryClass::CSPP) == cspp_by_conjugation(p));
}

TEST_CASE("symmetry predicates are fixed-point conditions") {
  for (const auto& p : enumerate_box({3, 3, 3})) {
    CHECK(has_symmetry(p, SymmetryClass::SPP) ==
          (apply_symmetry_op(p, SymmetryOp::transpose) == p));
    CHECK(has_symmetry(p, SymmetryClass::CSPP) ==
          (apply_symmetry_op(p, SymmetryOp::cyclic_rotate) == p));
    CHECK(has_symmetry(p, SymmetryClass::SCPP) ==
          (apply_symmetry_op(p, SymmetryOp::complement) == p));
  }
}

TEST_CASE("symmetry operation orders") {
  for (const auto& p : enumerate_box({2, 2, 2})) {
    auto r = apply_symmetry_op(p, SymmetryOp::cyclic_rotate);
    auto rr = apply_symmetry_op(r, SymmetryOp::cyclic_rotate);
    auto rrr = apply_symmetry_op(rr, SymmetryOp::cyclic_rotate);
    CHECK(rrr == p);
    CHECK(apply_symmetry_op(apply_symmetry_op(p, SymmetryOp::transpose),
                            SymmetryOp::transpose) == p);
    CHECK(apply_symmetry_op(apply_symmetry_op(p, SymmetryOp::complement),
                            SymmetryOp::complement) == p);
  }
  auto empty = pp({2, 2, 2}, {{0, 0}, {0, 0}});
  auto full = apply_symmetry_op(empty, SymmetryOp::complement);
  CHECK(full.heights() == std::vector<std::vector<int>>{{2, 2}, {2, 2}});
}

TEST_CASE("class enumeration") {
  CHECK(enumerate_class(SymmetryClass::TSSCPP, {2, 2, 2}).size() == 1);
  CHECK(enumerate_class(SymmetryClass::TSSCPP, {2, 2, 2})[0].heights() ==
        std::vector<std::vector<int>>{{2, 1}, {1, 0}});
  CHECK(enumerate_class(SymmetryClass::TSSCPP, {6, 6, 6}).size() == 7);
  CHECK(enumerate_class(SymmetryClass::TSPP, {1, 1, 1}).size() == 2);
  CHECK(enumerate_class(SymmetryClass::TSPP, {2, 2, 2}).size() == 5);
  CHECK(enumerate_class(SymmetryClass::CSPP, {3, 3, 3}).size() == 20);
}

TEST_CASE("toggle_cube") {
  auto empty = pp({1, 1, 1}, {{0}});
  auto one = toggle_cube(empty, 1, 1, 1);
  CHECK(one.heights() == std::vector<std::vector<int>>{{1}});
  CHECK(toggle_cube(one, 1, 1, 1) == empty);
  auto empty2 = pp({2, 2, 2}, {{0, 0}, {0, 0}});
  CHECK_THROWS_AS(toggle_cube(empty2, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(toggle_cube(empty2, 1, 1, 2), std::invalid_argument);
  // involution wherever defined
  for (const auto& p : enumerate_box({2, 2, 2}))
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k) {
          PlanePartition q = p;
          bool ok = true;
          try {
            q = toggle_cube(p, i, j, k);
          } catch (const std::invalid_argument&) {
            ok = false;
          }
          if (ok) CHECK(toggle_cube(q, i, j, k) == p);
        }
}
