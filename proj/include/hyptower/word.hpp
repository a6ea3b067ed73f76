#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyptower/errors.hpp"

namespace hyptower {

// A finite ordered set of generator names.  Words carry a shared pointer to
// the alphabet they are written over; two alphabets are interchangeable when
// their name lists agree.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }  // 0-based
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool same_names(const Alphabet& other) const { return names_ == other.names_; }
  bool contains_all(const Alphabet& other) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

// Signed generator symbol: +k / -k is the k-th generator (1-based) or its
// inverse.  0 is never a valid symbol.
using Sym = std::int32_t;

inline Sym sym_inverse(Sym s) { return -s; }

// A freely reduced word.  The constructor reduces eagerly, so every Word in
// the library is reduced by construction.  A default-constructed Word is the
// identity over the null alphabet and composes with anything.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
  Word(AlphabetRef alphabet, std::vector<Sym> raw_syms);

  int size() const { return static_cast<int>(syms_.size()); }
  bool empty() const { return syms_.empty(); }
  Sym at(int i) const { return syms_.at(i); }
  const std::vector<Sym>& syms() const { return syms_; }
  const AlphabetRef& alphabet() const { return alphabet_; }

  // Name-level equality: symbol names and signs agree position by position.
  bool operator==(const Word& other) const;
  bool operator!=(const Word& other) const { return !(*this == other); }

  const std::string& name_at(int i) const;  // generator name of |syms_[i]|

 private:
  AlphabetRef alphabet_;
  std::vector<Sym> syms_;
};

// Free reduction of a raw symbol string (identical to the Word constructor,
// provided as a named operation).
Word reduce(AlphabetRef alphabet, std::vector<Sym> raw_syms);

// Text syntax: whitespace separated symbols, `a` or `a^-1` (any nonzero
// integer exponent is accepted), `1` for the identity.
Word parse_word(const AlphabetRef& alphabet, std::string_view text);
std::string to_string(const Word& w);

Word compose(const Word& u, const Word& v);
inline Word operator*(const Word& u, const Word& v) { return compose(u, v); }
Word invert(const Word& w);
Word conjugate(const Word& w, const Word& g);  // g w g^-1
Word commutator(const Word& x, const Word& y);  // x y x^-1 y^-1
Word power(const Word& w, int n);

// Rewrites w over `target`, matching generators by name.  Throws
// AlphabetMismatch if a name is missing from the target alphabet.
Word translate(const Word& w, const AlphabetRef& target);

// Left rotation by k: drops the first k symbols to the end (no reduction is
// needed when the input is cyclically reduced).
Word rotate(const Word& w, int k);

// A word up to cyclic rotation.  The stored representative is the
// lexicographically least rotation of a cyclically reduced word, so
// operator== is plain representative comparison.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& w);  // cyclically reduces, then canonicalises

  const Word& representative() const { return rep_; }
  int size() const { return rep_.size(); }
  bool empty() const { return rep_.empty(); }

  bool operator==(const CyclicWord& other) const { return rep_ == other.rep_; }
  bool operator!=(const CyclicWord& other) const { return !(*this == other); }

 private:
  Word rep_;
};

std::string to_string(const CyclicWord& w);

struct CyclicReduction {
  CyclicWord cyclic;
  Word conjugator;  // original == conjugator * representative * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

// Witness that w is a commutator: w = conjugator * (a b c a^-1 b^-1 c^-1) *
// conjugator^-1 as free words.  Since a b c a^-1 b^-1 c^-1 = [a b, c a^-1],
// the witness also yields an explicit commutator pair.
struct CommutatorWitness {
  Word a, b, c;
  Word conjugator;
  Word x() const { return compose(a, b); }
  Word y() const { return compose(c, invert(a)); }
};

// Genus-one (Wicks) test: a cyclically reduced word is a commutator exactly
// when some rotation splits as a b c a^-1 b^-1 c^-1 with freely reduced
// segments.  Returns a checkable witness, or nullopt.
std::optional<CommutatorWitness> genus_one_commutator_witness(const Word& w);
inline bool is_genus_one_commutator(const Word& w) {
  return genus_one_commutator_witness(w).has_value();
}

}  // namespace hyptower
