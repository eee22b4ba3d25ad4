#include "hourglass/lattice_word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hourglass {

LatticeWord::LatticeWord(int r, std::vector<int> ls, std::set<std::size_t> marks)
    : rank(r), letters(std::move(ls)), pair_marks(std::move(marks)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  for (int x : letters)
    if (x == 0 || x > rank || x < -rank)
      throw std::invalid_argument("letter outside alphabet {±1..±" + std::to_string(rank) + "}");
  std::size_t prev_end = 0;
  for (std::size_t i : pair_marks) {
    if (i + 1 >= letters.size()) throw std::invalid_argument("pair mark out of range");
    if (i < prev_end) throw std::invalid_argument("overlapping pair marks");
    prev_end = i + 2;
  }
}

std::vector<LatticeWord::Token> LatticeWord::tokens() const {
  std::vector<Token> out;
  for (std::size_t i = 0; i < letters.size();) {
    if (pair_marks.count(i)) {
      out.push_back({i, 2});
      i += 2;
    } else {
      out.push_back({i, 1});
      i += 1;
    }
  }
  return out;
}

std::string LatticeWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const Token& t : tokens()) {
    if (!first) os << ' ';
    first = false;
    if (t.len == 1)
      os << letters[t.pos];
    else
      os << '(' << letters[t.pos] << ',' << letters[t.pos + 1] << ')';
  }
  return os.str();
}

LatticeWord LatticeWord::parse(const std::string& text, int rank) {
  std::vector<int> letters;
  std::set<std::size_t> marks;
  std::istringstream is(text);
  std::string tok;
  auto parse_int = [](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != s.size()) throw std::invalid_argument("bad word letter '" + s + "'");
    return v;
  };
  while (is >> tok) {
    if (tok.front() == '(') {
      if (tok.back() != ')') throw std::invalid_argument("unterminated pair token '" + tok + "'");
      std::string body = tok.substr(1, tok.size() - 2);
      auto comma = body.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("pair token needs a comma: '" + tok + "'");
      marks.insert(letters.size());
      letters.push_back(parse_int(body.substr(0, comma)));
      letters.push_back(parse_int(body.substr(comma + 1)));
    } else {
      letters.push_back(parse_int(tok));
    }
  }
  return LatticeWord(rank, std::move(letters), std::move(marks));
}

bool is_yamanouchi(const LatticeWord& w) {
  std::vector<long long> count(w.rank + 1, 0);
  for (int x : w.letters) {
    int row = x > 0 ? x : -x;
    count[row] += x > 0 ? 1 : -1;
    for (int i = 1; i < w.rank; ++i)
      if (count[i] < count[i + 1]) return false;
  }
  return true;
}

std::vector<int> type_vector(const LatticeWord& w) {
  std::vector<int> c;
  c.reserve(w.letters.size());
  for (int x : w.letters) c.push_back(x > 0 ? 1 : -1);
  return c;
}

}  // namespace hourglass
