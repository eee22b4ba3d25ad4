#include "hourglass/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace hourglass {

OscillatingTableau word_to_tableau(const LatticeWord& w) {
  OscillatingTableau t;
  t.rank = w.rank;
  t.shapes.push_back(std::vector<int>(w.rank, 0));
  t.filling.resize(w.rank);
  std::vector<int> right_created(w.rank, 0), left_created(w.rank, 0);
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    int letter = w.letters[i];
    int row = std::abs(letter) - 1;
    int entry = letter > 0 ? (int)i + 1 : -(int)(i + 1);
    auto shape = t.shapes.back();
    shape[row] += letter > 0 ? 1 : -1;
    for (int r = 0; r + 1 < w.rank; ++r)
      if (shape[r] < shape[r + 1])
        throw std::invalid_argument("word is not Yamanouchi: shape leaves the cone at letter " +
                                    std::to_string(i + 1));
    t.shapes.push_back(shape);

    auto& boxes = t.filling[row];
    if (letter < 0) {
      // Case 1: the furthest-right open box with a positive entry, else a new
      // box left of the lambda^0 line.
      OscillatingTableau::Box* target = nullptr;
      for (auto& b : boxes)
        if (b.entries.size() == 1 && b.entries[0] > 0)
          if (!target || b.pos > target->pos) target = &b;
      if (target) {
        target->entries.push_back(entry);
      } else {
        boxes.push_back({-(++left_created[row]), {entry}});
      }
    } else {
      // Case 2: the furthest-left open box with a barred entry, else a new
      // box right of the lambda^0 line.
      OscillatingTableau::Box* target = nullptr;
      for (auto& b : boxes)
        if (b.entries.size() == 1 && b.entries[0] < 0)
          if (!target || b.pos < target->pos) target = &b;
      if (target) {
        target->entries.push_back(entry);
      } else {
        boxes.push_back({++right_created[row], {entry}});
      }
    }
  }
  return t;
}

LatticeWord tableau_to_word(const OscillatingTableau& t) {
  if (t.shapes.empty() || (int)t.shapes.front().size() != t.rank)
    throw std::invalid_argument("tableau has no shape sequence");
  std::vector<int> letters;
  for (std::size_t i = 1; i < t.shapes.size(); ++i) {
    const auto& prev = t.shapes[i - 1];
    const auto& cur = t.shapes[i];
    int row = -1, delta = 0;
    for (int r = 0; r < t.rank; ++r) {
      if (cur[r] == prev[r]) continue;
      if (row >= 0 || std::abs(cur[r] - prev[r]) != 1)
        throw std::invalid_argument("shape sequence does not change by one box");
      row = r;
      delta = cur[r] - prev[r];
    }
    if (row < 0) throw std::invalid_argument("shape sequence repeats a shape");
    letters.push_back(delta > 0 ? row + 1 : -(row + 1));
  }
  return LatticeWord(t.rank, std::move(letters));
}

LatticeWord random_yamanouchi_word(std::mt19937& rng, int rank, int length) {
  std::vector<int> counts(rank + 1, 0), letters;
  for (int step = 0; step < length; ++step) {
    std::vector<int> candidates;
    for (int j = 1; j <= rank; ++j) {
      counts[j] += 1;  // try +j
      bool ok = true;
      for (int r = 1; r < rank; ++r)
        if (counts[r] < counts[r + 1]) ok = false;
      counts[j] -= 1;
      if (ok) candidates.push_back(j);
      counts[j] -= 1;  // try -j
      ok = true;
      for (int r = 1; r < rank; ++r)
        if (counts[r] < counts[r + 1]) ok = false;
      counts[j] += 1;
      if (ok) candidates.push_back(-j);
    }
    int pick = candidates[std::uniform_int_distribution<int>(0, (int)candidates.size() - 1)(rng)];
    letters.push_back(pick);
    counts[std::abs(pick)] += pick > 0 ? 1 : -1;
  }
  return LatticeWord(rank, std::move(letters));
}

}  // namespace hourglass
