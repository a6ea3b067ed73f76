#pragma once

#include <map>
#include <string>
#include <vector>

#include "hyptower/word_problem.hpp"

namespace hyptower {

// A homomorphism candidate from a presented group into a group with a
// decidable word problem, given by one image word per source generator.
struct GroupMap {
  Presentation source;
  ModelRef target;
  std::vector<Word> images;  // over target alphabet, one per source generator
};

GroupMap make_map(Presentation source, ModelRef target, std::vector<Word> images);
GroupMap make_map(Presentation source, ModelRef target,
                  const std::map<std::string, std::string>& image_texts);

// Substitutes images for generators and freely reduces.
Word apply(const GroupMap& m, const Word& w);

// True iff every source relator maps to the identity of the target model.
bool verify_homomorphism(const GroupMap& m, std::string* why = nullptr);

// Identity-on-names inclusion of `sub` into the group presented by
// `ambient`; image words live in a free carrier over the ambient alphabet.
GroupMap identity_inclusion(const Presentation& sub, const Presentation& ambient);

// Certifies that r restricted along `inclusion` is the identity:
//  - r is a homomorphism (relator images trivial in its target model),
//  - every inclusion image of a source relator is freely trivial or matches
//    a relator of r's source up to rotation and inversion,
//  - r(inclusion(g)) equals inclusion(g) in r's target for every generator g
//    of the included group.
// A true result also certifies that the inclusion is injective.
bool verify_retraction(const GroupMap& r, const GroupMap& inclusion, std::string* why = nullptr);

// True iff some pair of subgroup generator images fails to commute in the
// target model.  Words are over m's source.
bool nonabelian_image(const GroupMap& m, const std::vector<Word>& subgroup_generators);

std::string to_string(const GroupMap& m);

}  // namespace hyptower
