#include "hourglass/symmetry_words.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "hourglass/parallel.hpp"
#include "hourglass/trips.hpp"
#include "hourglass/web.hpp"

namespace hourglass {

namespace {

struct Tok {
  int x = 0, y = 0;  // y != 0 for a split pair (x,y)
  bool pair() const { return y != 0; }
};

LatticeWord from_tokens(const std::vector<Tok>& toks) {
  std::vector<int> letters;
  std::set<std::size_t> marks;
  for (const Tok& t : toks) {
    if (t.pair()) marks.insert(letters.size());
    letters.push_back(t.x);
    if (t.pair()) letters.push_back(t.y);
  }
  return LatticeWord(4, std::move(letters), std::move(marks));
}

// All 0/1 sequences with k ones among n slots, lexicographic.
void for_each_mask(int n, int k, const std::function<void(const std::vector<bool>&)>& fn) {
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + k, true);
  std::sort(mask.begin(), mask.end());
  do {
    fn(mask);
  } while (std::next_permutation(mask.begin(), mask.end()));
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

// TSPP seam condition between the 2/(23) block and the 4/(34) block:
// pair23[i] true when token i of the first block is a (23), four4[i] true
// when token i of the second block is a plain 4.
bool tspp_seam_ok(const std::vector<bool>& pair23, const std::vector<bool>& four4) {
  int a = (int)pair23.size();
  int suffix_pairs = 0, prefix_fours = 0;
  for (int k = 1; k <= a; ++k) {
    suffix_pairs += pair23[a - k];
    prefix_fours += four4[k - 1];
    if (suffix_pairs > prefix_fours) return false;
  }
  return true;
}

// TSSCPP block condition: Yamanouchi in the letters 4 and (34) after padding
// with a leading 4 and a trailing (34).
bool tsscpp_block_ok(const std::vector<bool>& pair34) {
  int fours = 1, pairs = 0;
  for (bool p : pair34) {
    (p ? pairs : fours) += 1;
    if (pairs > fours) return false;
  }
  return true;
}

}  // namespace

Box3 ClassWordSpec::box() const {
  switch (cls) {
    case SymmetryClass::SPP: return {a, a, c};
    case SymmetryClass::CSPP:
    case SymmetryClass::TSPP: return {a, a, a};
    case SymmetryClass::TSSCPP: return {2 * d, 2 * d, 2 * d};
    default: throw std::invalid_argument("no word family for class " + to_string(cls));
  }
}

void ClassWordSpec::check() const {
  switch (cls) {
    case SymmetryClass::SPP:
      if (a < 0 || c < 0) throw std::invalid_argument("SPP needs a, c >= 0");
      return;
    case SymmetryClass::CSPP:
    case SymmetryClass::TSPP:
      if (a < 0) throw std::invalid_argument(to_string(cls) + " needs a >= 0");
      return;
    case SymmetryClass::TSSCPP:
      if (d < 1) throw std::invalid_argument("TSSCPP needs d >= 1");
      return;
    default:
      throw std::invalid_argument("no word family for class " + to_string(cls));
  }
}

ClassWordSpec ClassWordSpec::for_box(SymmetryClass cls, const Box3& box) {
  require_class_shape(cls, box);
  switch (cls) {
    case SymmetryClass::SPP: return spp(box.a, box.c);
    case SymmetryClass::CSPP: return cspp(box.a);
    case SymmetryClass::TSPP: return tspp(box.a);
    case SymmetryClass::TSSCPP: return tsscpp(box.a / 2);
    default: throw std::invalid_argument("no word family for class " + to_string(cls));
  }
}

std::vector<LatticeWord> generate_words(const ClassWordSpec& spec) {
  spec.check();
  std::vector<LatticeWord> out;
  const int a = spec.a, c = spec.c, d = spec.d;
  switch (spec.cls) {
    case SymmetryClass::SPP: {
      std::vector<Tok> head;
      for (int i = 0; i < a; ++i) head.push_back({1});
      for (int i = 0; i < c; ++i) head.push_back({-4});
      for (int i = 0; i < a; ++i) head.push_back({2});
      for_each_mask(a + c, a, [&](const std::vector<bool>& pairs) {
        auto toks = head;
        for (bool p : pairs) toks.push_back(p ? Tok{3, 4} : Tok{4});
        out.push_back(from_tokens(toks));
      });
      break;
    }
    case SymmetryClass::CSPP: {
      std::vector<Tok> head;
      for (int i = 0; i < a; ++i) head.push_back({1});
      for (int i = 0; i < a; ++i) head.push_back({-4});
      for (int m = 0; m <= a; ++m)
        for_each_mask(a, m, [&](const std::vector<bool>& pairs) {
          auto toks = head;
          for (bool p : pairs) toks.push_back(p ? Tok{-3, -1} : Tok{-1});
          // the mirrored block: (34) at position a-1-i for each pair at i
          for (int i = 0; i < a; ++i)
            toks.push_back(pairs[a - 1 - i] ? Tok{3, 4} : Tok{4});
          out.push_back(from_tokens(toks));
        });
      break;
    }
    case SymmetryClass::TSPP: {
      std::vector<Tok> head;
      for (int i = 0; i < a; ++i) head.push_back({1});
      for (int m = 0; m <= a; ++m)
        for_each_mask(a, a - m, [&](const std::vector<bool>& pair23) {
          for_each_mask(a, a - m, [&](const std::vector<bool>& four4) {
            if (!tspp_seam_ok(pair23, four4)) return;
            auto toks = head;
            for (bool p : pair23) toks.push_back(p ? Tok{2, 3} : Tok{2});
            for (bool f : four4) toks.push_back(f ? Tok{4} : Tok{3, 4});
            out.push_back(from_tokens(toks));
          });
        });
      break;
    }
    case SymmetryClass::TSSCPP: {
      std::vector<Tok> head;
      for (int i = 0; i < d; ++i) head.push_back({1});
      head.push_back({2});
      for (int i = 0; i < d - 1; ++i) {
        head.push_back({-4});
        head.push_back({2});
      }
      for_each_mask(2 * (d - 1), d - 1, [&](const std::vector<bool>& pair34) {
        if (!tsscpp_block_ok(pair34)) return;
        auto toks = head;
        for (bool p : pair34) toks.push_back(p ? Tok{3, 4} : Tok{4});
        toks.push_back({3, 4});
        out.push_back(from_tokens(toks));
      });
      break;
    }
    default:
      throw std::invalid_argument("no word family for class " + to_string(spec.cls));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct TokenReader {
  std::vector<Tok> toks;
  std::size_t at = 0;

  explicit TokenReader(const LatticeWord& w) {
    for (const auto& t : w.tokens()) {
      if (t.len == 1)
        toks.push_back({w.letters[t.pos]});
      else
        toks.push_back({w.letters[t.pos], w.letters[t.pos + 1]});
    }
  }
  bool eat_single(int x, int count) {
    for (int i = 0; i < count; ++i) {
      if (at >= toks.size() || toks[at].pair() || toks[at].x != x) return false;
      ++at;
    }
    return true;
  }
  bool done() const { return at == toks.size(); }
};

}  // namespace

bool validate_word(const ClassWordSpec& spec, const LatticeWord& w) {
  spec.check();
  if (w.rank != 4) return false;
  TokenReader rd(w);
  const int a = spec.a, c = spec.c, d = spec.d;
  auto read_block = [&](Tok single, Tok pair, int len,
                        std::vector<bool>& pattern) {  // true = pair
    for (int i = 0; i < len; ++i) {
      if (rd.at >= rd.toks.size()) return false;
      const Tok& t = rd.toks[rd.at++];
      if (t.pair() && t.x == pair.x && t.y == pair.y)
        pattern.push_back(true);
      else if (!t.pair() && t.x == single.x)
        pattern.push_back(false);
      else
        return false;
    }
    return true;
  };
  switch (spec.cls) {
    case SymmetryClass::SPP: {
      std::vector<bool> mix;
      return rd.eat_single(1, a) && rd.eat_single(-4, c) && rd.eat_single(2, a) &&
             read_block({4}, {3, 4}, a + c, mix) && rd.done() &&
             (int)std::count(mix.begin(), mix.end(), true) == a;
    }
    case SymmetryClass::CSPP: {
      std::vector<bool> b3, b4;
      if (!(rd.eat_single(1, a) && rd.eat_single(-4, a) &&
            read_block({-1}, {-3, -1}, a, b3) && read_block({4}, {3, 4}, a, b4) &&
            rd.done()))
        return false;
      for (int i = 0; i < a; ++i)
        if (b3[i] != b4[a - 1 - i]) return false;
      return true;
    }
    case SymmetryClass::TSPP: {
      std::vector<bool> b1, b2;
      if (!(rd.eat_single(1, a) && read_block({2}, {2, 3}, a, b1) &&
            read_block({4}, {3, 4}, a, b2) && rd.done()))
        return false;
      int m1 = (int)std::count(b1.begin(), b1.end(), true);   // (23)s
      int m2 = (int)std::count(b2.begin(), b2.end(), false);  // 4s
      if (m1 != m2) return false;
      std::vector<bool> fours;
      for (bool pr : b2) fours.push_back(!pr);
      return tspp_seam_ok(b1, fours);
    }
    case SymmetryClass::TSSCPP: {
      if (!rd.eat_single(1, d)) return false;
      if (!rd.eat_single(2, 1)) return false;
      for (int i = 0; i < d - 1; ++i)
        if (!(rd.eat_single(-4, 1) && rd.eat_single(2, 1))) return false;
      std::vector<bool> blk;
      if (!read_block({4}, {3, 4}, 2 * (d - 1), blk)) return false;
      if ((int)std::count(blk.begin(), blk.end(), true) != d - 1) return false;
      if (rd.at >= rd.toks.size()) return false;
      const Tok& last = rd.toks[rd.at++];
      if (!(last.pair() && last.x == 3 && last.y == 4)) return false;
      return rd.done() && tsscpp_block_ok(blk);
    }
    default:
      return false;
  }
}

BigInt count_words_formula(const ClassWordSpec& spec) {
  spec.check();
  switch (spec.cls) {
    case SymmetryClass::SPP:
      return binomial(spec.a + spec.c, spec.a);
    case SymmetryClass::CSPP: {
      BigInt r = 1;
      for (int i = 0; i < spec.a; ++i) r *= 2;
      return r;
    }
    case SymmetryClass::TSPP: {
      BigInt r = 1 + binomial(2 * spec.a - 1, spec.a - 1);
      for (int l = 1; l <= spec.a - 1; ++l)
        r += binomial(2 * (spec.a - l) - 1, spec.a - l - 1);
      return r;
    }
    case SymmetryClass::TSSCPP:
      return binomial(2 * spec.d, spec.d) / (spec.d + 1);
    default:
      throw std::invalid_argument("no counting formula for class " + to_string(spec.cls));
  }
}

bool census_formula_agrees(const ClassWordSpec& spec) {
  // The published TSPP closed form counts a weaker seam condition and first
  // overshoots at a = 3 (15 against the 14 words realized by webs).
  return spec.cls != SymmetryClass::TSPP || spec.a <= 2;
}

CensusResult census(SymmetryClass cls, const Box3& box) {
  CensusResult res;
  auto parts = enumerate_class(cls, box);
  std::vector<LatticeWord> words(parts.size());
  parallel_for(parts.size(), [&](std::size_t i) {
    words[i] = boundary_word(restrict_to_fundamental_domain(parts[i], cls));
  });
  std::map<std::string, LatticeWord> seen;
  for (const auto& word : words) {
    res.word_multiset[word.to_string()]++;
    seen.emplace(word.to_string(), word);
    ++res.total;
  }
  for (auto& [text, word] : seen) res.distinct.push_back(word);
  std::sort(res.distinct.begin(), res.distinct.end());
  return res;
}

}  // namespace hourglass
