#pragma once

#include <map>
#include <string>
#include <vector>

#include "hourglass/lattice_word.hpp"
#include "hourglass/plane_partition.hpp"

namespace hourglass {

// Parameters of a symmetry-class boundary word: SPP uses (a, c); CSPP and
// TSPP use a; TSSCPP uses d (the box is 2d x 2d x 2d).
struct ClassWordSpec {
  SymmetryClass cls = SymmetryClass::SPP;
  int a = 0, c = 0, d = 0;

  static ClassWordSpec spp(int a, int c) { return {SymmetryClass::SPP, a, c, 0}; }
  static ClassWordSpec cspp(int a) { return {SymmetryClass::CSPP, a, a, 0}; }
  static ClassWordSpec tspp(int a) { return {SymmetryClass::TSPP, a, a, 0}; }
  static ClassWordSpec tsscpp(int d) { return {SymmetryClass::TSSCPP, 2 * d, 2 * d, d}; }
  static ClassWordSpec for_box(SymmetryClass cls, const Box3& box);

  Box3 box() const;
  void check() const;  // throws on bad parameters
};

// All boundary words of the class, each exactly once, sorted.
//
// The variable blocks follow the classification: SPP shuffles c 4s with a
// (34)s; CSPP shuffles (-3,-1)s with -1s and mirrors them into the 4/(34)
// block; TSSCPP words are the Catalan family (Yamanouchi in 4/(34) once
// padded); TSPP interleavings obey the seam condition that among the last k
// tokens of the 2/(23) block the number of (23)s never exceeds the number of
// 4s among the first k tokens of the 4/(34) block.
std::vector<LatticeWord> generate_words(const ClassWordSpec& spec);

// Membership test equivalent to generate_words, without materializing it.
bool validate_word(const ClassWordSpec& spec, const LatticeWord& w);

// The closed-form counts of the lattice-word classification: binomial for
// SPP, 2^a for CSPP, Catalan for TSSCPP, and for TSPP the closed form
// 1 + C(2a-1,a-1) + sum_l C(2(a-l)-1, a-l-1).  Note: the TSPP closed form
// disagrees with the true word count at a >= 3 (15 vs 14 at a = 3); see
// census_formula_agrees.
BigInt count_words_formula(const ClassWordSpec& spec);

// End-to-end loop: enumerate the class, restrict each partition, and read
// every boundary word.
struct CensusResult {
  std::map<std::string, int> word_multiset;  // word text -> number of webs
  std::vector<LatticeWord> distinct;         // sorted
  std::size_t total = 0;
};
CensusResult census(SymmetryClass cls, const Box3& box);

// Whether count_words_formula is expected to equal the census count for the
// given parameters (true everywhere except TSPP with a >= 3).
bool census_formula_agrees(const ClassWordSpec& spec);

}  // namespace hourglass
