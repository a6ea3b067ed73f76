#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hyptower/word.hpp"

namespace hyptower {

// A finite presentation: an ordered generator alphabet plus cyclically
// reduced, nonempty relators.
struct Presentation {
  AlphabetRef generators;
  std::vector<CyclicWord> relators;

  int rank() const { return generators ? generators->size() : 0; }
};

Presentation make_presentation(std::vector<std::string> generator_names,
                               const std::vector<std::string>& relator_texts);
Presentation make_presentation(AlphabetRef generators, std::vector<CyclicWord> relators);

// Name-level equality: generator lists agree in order, relator multisets
// agree up to rotation and inversion.
bool same_presentation(const Presentation& a, const Presentation& b);

// Disjoint union of presentations (generator name sets must be disjoint).
Presentation concatenated(const std::vector<Presentation>& parts);

std::string to_string(const Presentation& p);

// All cyclic rotations of the relator and of its inverse, freely reduced,
// deduplicated, sorted.  These are the words Dehn steps match against.
// Throws Unsupported unless the presentation has exactly one relator.
std::vector<Word> symmetrize(const Presentation& p);

// Longest piece: a maximal common prefix of two distinct elements of the
// symmetrized set, or (for a periodic element w) any proper prefix of w,
// since a period shift gives a second occurrence inside the same relator.
int max_piece_length(const std::vector<Word>& symmetrized);

// Metric small-cancellation condition: every piece satisfies 6|u| < |r| for
// each relator r containing it.
bool check_c_prime_sixth(const Presentation& p);

// A group in which the word problem is decidable by this library.
class GroupModel {
 public:
  virtual ~GroupModel() = default;
  virtual const AlphabetRef& alphabet() const = 0;
  virtual bool is_trivial(const Word& w) const = 0;
  virtual std::string describe() const = 0;

  bool are_equal(const Word& u, const Word& v) const;
  bool commute(const Word& u, const Word& v) const;
};

using ModelRef = std::shared_ptr<const GroupModel>;

class FreeModel : public GroupModel {
 public:
  explicit FreeModel(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
  const AlphabetRef& alphabet() const override { return alphabet_; }
  bool is_trivial(const Word& w) const override;
  std::string describe() const override;

 private:
  AlphabetRef alphabet_;
};

class InfiniteCyclicModel : public GroupModel {
 public:
  explicit InfiniteCyclicModel(AlphabetRef alphabet);
  const AlphabetRef& alphabet() const override { return alphabet_; }
  bool is_trivial(const Word& w) const override;
  std::string describe() const override;

 private:
  AlphabetRef alphabet_;
};

// Dehn's algorithm over a verified one-relator C'(1/6) presentation.
// Construction throws Unsupported when either condition fails.
class SmallCancellationModel : public GroupModel {
 public:
  explicit SmallCancellationModel(Presentation p);
  const AlphabetRef& alphabet() const override { return pres_.generators; }
  bool is_trivial(const Word& w) const override;
  std::string describe() const override;
  const Presentation& presentation() const { return pres_; }

 private:
  Presentation pres_;
  std::vector<Word> symmetrized_;
};

// Free product of models over disjoint generator name sets.  Words are
// decided through their alternating normal form.
class FreeProductModel : public GroupModel {
 public:
  explicit FreeProductModel(std::vector<ModelRef> factors);
  const AlphabetRef& alphabet() const override { return alphabet_; }
  bool is_trivial(const Word& w) const override;
  std::string describe() const override;

  const std::vector<ModelRef>& factors() const { return factors_; }
  // Alternating syllable form: (factor index, nontrivial factor word).
  std::vector<std::pair<int, Word>> normal_form(const Word& w) const;

 private:
  std::vector<ModelRef> factors_;
  AlphabetRef alphabet_;
  std::vector<int> factor_of_;  // per combined-alphabet generator
};

std::vector<std::pair<int, Word>> free_product_normal_form(const Word& w,
                                                           const FreeProductModel& m);

// Builds a word-problem model for a presentation by splitting the generators
// into relator-linked components: relator-free generators form one free
// factor, each component with a relator must be one-relator C'(1/6).  Throws
// Unsupported otherwise.  A single factor is returned unwrapped.
ModelRef model_for(const Presentation& p);

bool is_infinite_cyclic(const GroupModel& m);
bool is_trivial_group(const GroupModel& m);

ModelRef adjoin_free_letter(const ModelRef& m, const std::string& name);
Presentation adjoin_free_letter(const Presentation& p, const std::string& name);

}  // namespace hyptower
