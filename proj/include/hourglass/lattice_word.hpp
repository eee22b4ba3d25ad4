#pragma once

#include <set>
#include <string>
#include <vector>

namespace hourglass {

// A word in the alphabet {±1,...,±r}; barred letters are stored as negative
// integers.  pair_marks holds 0-based positions i meaning that
// letters i and i+1 were emitted by one split edge and print as one token
// "(x,y)".
struct LatticeWord {
  int rank = 4;
  std::vector<int> letters;
  std::set<std::size_t> pair_marks;

  LatticeWord() = default;
  LatticeWord(int r, std::vector<int> ls, std::set<std::size_t> marks = {});

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  // Tokens: (position, length) with length 2 for split pairs.
  struct Token {
    std::size_t pos;
    int len;
  };
  std::vector<Token> tokens() const;

  std::string to_string() const;
  static LatticeWord parse(const std::string& text, int rank);

  friend bool operator==(const LatticeWord&, const LatticeWord&) = default;
  friend bool operator<(const LatticeWord& a, const LatticeWord& b) {
    if (a.letters != b.letters) return a.letters < b.letters;
    return a.pair_marks < b.pair_marks;
  }
};

// Every prefix keeps the running row counts weakly decreasing:
// (#i - #ibar) >= (#(i+1) - #(i+1)bar) for all i < r.
bool is_yamanouchi(const LatticeWord& w);

// Signs of the letters, the type vector c of the invariant space.
std::vector<int> type_vector(const LatticeWord& w);

}  // namespace hourglass
