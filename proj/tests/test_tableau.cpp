#include "doctest.h"
#include "hourglass/tableau.hpp"

#include <random>
#include <stdexcept>

using namespace hourglass;

TEST_CASE("the golden word grows the golden tableau") {
  auto w = LatticeWord::parse("1 -4 2 -2 4 -1", 4);
  auto t = word_to_tableau(w);
  std::vector<std::vector<int>> expect_shapes = {
      {0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, -1}, {1, 1, 0, -1},
      {1, 0, 0, -1}, {1, 0, 0, 0}, {0, 0, 0, 0}};
  CHECK(t.shapes == expect_shapes);
  REQUIRE(t.filling.size() == 4);
  REQUIRE(t.filling[0].size() == 1);
  CHECK(t.filling[0][0].pos == 1);
  CHECK(t.filling[0][0].entries == std::vector<int>{1, -6});
  REQUIRE(t.filling[1].size() == 1);
  CHECK(t.filling[1][0].entries == std::vector<int>{3, -4});
  CHECK(t.filling[2].empty());
  REQUIRE(t.filling[3].size() == 1);
  CHECK(t.filling[3][0].pos == -1);
  CHECK(t.filling[3][0].entries == std::vector<int>{-2, 5});
  CHECK(tableau_to_word(t) == w);
}

TEST_CASE("a strictly increasing word opens one box per row") {
  auto t = word_to_tableau(LatticeWord::parse("1 2 3 4", 4));
  CHECK(t.shapes.back() == std::vector<int>{1, 1, 1, 1});
  for (int r = 0; r < 4; ++r) {
    REQUIRE(t.filling[r].size() == 1);
    CHECK(t.filling[r][0].pos == 1);
    CHECK(t.filling[r][0].entries == std::vector<int>{r + 1});
  }
}

TEST_CASE("empty word gives the empty tableau") {
  auto t = word_to_tableau(LatticeWord(4, {}));
  CHECK(t.shapes.size() == 1);
  CHECK(tableau_to_word(t).empty());
}

TEST_CASE("non-Yamanouchi words are rejected") {
  CHECK_THROWS_AS(word_to_tableau(LatticeWord::parse("2 1", 2)), std::invalid_argument);
  CHECK_THROWS_AS(word_to_tableau(LatticeWord::parse("-1", 4)), std::invalid_argument);
}

TEST_CASE("word/tableau round trip on seeded random Yamanouchi words") {
  std::mt19937 rng(20260811);
  std::uniform_int_distribution<int> len(0, 12);
  for (int trial = 0; trial < 100; ++trial) {
    LatticeWord w = random_yamanouchi_word(rng, 4, len(rng));
    CAPTURE(w.to_string());
    REQUIRE(is_yamanouchi(w));
    CHECK(tableau_to_word(word_to_tableau(w)) == w);
  }
}

TEST_CASE("row re-entry after closing keeps the round trip exact") {
  // row 2 opens, closes, and opens again
  auto w = LatticeWord::parse("1 2 -2 2", 4);
  REQUIRE(is_yamanouchi(w));
  auto t = word_to_tableau(w);
  CHECK(tableau_to_word(t) == w);
  CHECK(t.filling[1].size() == 2);
}

TEST_CASE("type vector reads the signs") {
  auto w = LatticeWord::parse("1 -4 2 -2 4 -1", 4);
  CHECK(type_vector(w) == std::vector<int>{1, -1, 1, -1, 1, -1});
  CHECK(type_vector(LatticeWord(4, {})).empty());
}
