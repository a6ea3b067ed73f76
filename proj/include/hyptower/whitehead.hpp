#pragma once

#include <string>
#include <vector>

#include "hyptower/word.hpp"

namespace hyptower {

// A Whitehead automorphism of the free group of rank n, independent of the
// concrete alphabet: either a signed permutation of the generators, or a
// multiplier move that fixes one generator a and sends every other generator
// x to one of x, x a, a^-1 x, a^-1 x a.
struct WhiteheadAuto {
  enum class Act : unsigned char { Fix, Right, Left, Both };

  int rank = 0;
  bool is_permutation = true;
  std::vector<Sym> perm;   // signed images, permutation kind
  Sym multiplier = 0;      // multiplier kind
  std::vector<Act> act;    // multiplier kind, act for each generator

  Word apply_to(const Word& w) const;  // w over any rank-n alphabet
  WhiteheadAuto inverse() const;
};

std::string to_string(const WhiteheadAuto& a);

// All Whitehead automorphisms of rank n (identity included once, as the
// identity permutation).
std::vector<WhiteheadAuto> whitehead_generators(int n);

struct MinimizeResult {
  std::vector<Word> tuple;
  std::vector<WhiteheadAuto> autos;  // applied in order to reach the result
};

// Greedy two-stage descent: first strictly reduce the total cyclic length,
// then, at constant cyclic length, strictly reduce the total word length.
// Deterministic (first improving generator wins).
MinimizeResult minimize(const std::vector<Word>& tuple, int n);

// A word is primitive exactly when its minimized cyclic length is 1.
bool is_primitive(const Word& w, int n);

// A tuple is a basis exactly when it has size n and minimizes to n single
// generators with pairwise distinct underlying letters.
// Pre: tuple size <= n.
bool is_basis(const std::vector<Word>& tuple, int n);

}  // namespace hyptower
