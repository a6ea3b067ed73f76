#include "hyptower/homs.hpp"

#include <sstream>

namespace hyptower {

GroupMap make_map(Presentation source, ModelRef target, std::vector<Word> images) {
  if (!target) throw Error("map needs a target model");
  if (static_cast<int>(images.size()) != source.rank())
    throw Error("map needs exactly one image per source generator");
  for (auto& w : images) w = translate(w, target->alphabet());
  return GroupMap{std::move(source), std::move(target), std::move(images)};
}

GroupMap make_map(Presentation source, ModelRef target,
                  const std::map<std::string, std::string>& image_texts) {
  if (!target) throw Error("map needs a target model");
  std::vector<Word> images;
  for (int i = 0; i < source.rank(); ++i) {
    const std::string& g = source.generators->name(i);
    auto it = image_texts.find(g);
    if (it == image_texts.end()) throw Error("no image given for generator '" + g + "'");
    images.push_back(parse_word(target->alphabet(), it->second));
  }
  if (image_texts.size() != static_cast<size_t>(source.rank()))
    throw Error("map lists an image for an unknown generator");
  return GroupMap{std::move(source), std::move(target), std::move(images)};
}

Word apply(const GroupMap& m, const Word& w) {
  Word t = translate(w, m.source.generators);
  std::vector<Sym> out;
  for (Sym s : t.syms()) {
    const Word& img = m.images[std::abs(s) - 1];
    if (s > 0)
      out.insert(out.end(), img.syms().begin(), img.syms().end());
    else
      for (auto it = img.syms().rbegin(); it != img.syms().rend(); ++it) out.push_back(-*it);
  }
  return Word(m.target->alphabet(), std::move(out));
}

bool verify_homomorphism(const GroupMap& m, std::string* why) {
  for (const auto& r : m.source.relators) {
    Word image = apply(m, r.representative());
    if (!m.target->is_trivial(image)) {
      if (why)
        *why = "relator " + to_string(r) + " maps to " + to_string(image) +
               ", nontrivial in the target";
      return false;
    }
  }
  return true;
}

GroupMap identity_inclusion(const Presentation& sub, const Presentation& ambient) {
  ModelRef carrier = std::make_shared<FreeModel>(ambient.generators);
  std::vector<Word> images;
  for (int i = 0; i < sub.rank(); ++i) {
    const std::string& g = sub.generators->name(i);
    auto idx = ambient.generators->index_of(g);
    if (!idx) throw Error("generator '" + g + "' is not an ambient generator");
    images.push_back(Word(ambient.generators, {static_cast<Sym>(*idx + 1)}));
  }
  GroupMap m;
  m.source = sub;
  m.target = std::move(carrier);
  m.images = std::move(images);
  return m;
}

namespace {

// Is u, as a cyclic word, one of the relators of p (up to inversion)?
bool matches_some_relator(const Word& u, const Presentation& p) {
  CyclicWord cu(u);
  for (const auto& r : p.relators) {
    if (cu == r) return true;
    if (cu == CyclicWord(invert(r.representative()))) return true;
  }
  return false;
}

}  // namespace

bool verify_retraction(const GroupMap& r, const GroupMap& inclusion, std::string* why) {
  std::string sub_why;
  if (!verify_homomorphism(r, &sub_why)) {
    if (why) *why = "retraction is not a homomorphism: " + sub_why;
    return false;
  }
  // The inclusion is a homomorphism when the images of its source relators
  // die in the ambient group; we certify this syntactically against the
  // ambient relators.
  for (const auto& rel : inclusion.source.relators) {
    Word u = apply(inclusion, rel.representative());
    if (u.empty()) continue;
    Word in_ambient;
    try {
      in_ambient = translate(u, r.source.generators);
    } catch (const AlphabetMismatch&) {
      if (why) *why = "inclusion image " + to_string(u) + " is not an ambient word";
      return false;
    }
    if (!matches_some_relator(in_ambient, r.source)) {
      if (why)
        *why = "cannot certify that the inclusion kills relator " + to_string(rel);
      return false;
    }
  }
  for (int i = 0; i < inclusion.source.rank(); ++i) {
    Word g(inclusion.source.generators,
           {static_cast<Sym>(i + 1)});
    Word u = apply(inclusion, g);
    Word over_ambient;
    try {
      over_ambient = translate(u, r.source.generators);
    } catch (const AlphabetMismatch&) {
      if (why) *why = "inclusion image " + to_string(u) + " is not an ambient word";
      return false;
    }
    Word v = apply(r, over_ambient);
    Word expected;
    try {
      expected = translate(u, r.target->alphabet());
    } catch (const AlphabetMismatch&) {
      if (why)
        *why = "image of generator '" + inclusion.source.generators->name(i) +
               "' leaves the retraction target";
      return false;
    }
    if (!r.target->are_equal(v, expected)) {
      if (why)
        *why = "generator '" + inclusion.source.generators->name(i) + "' maps to " +
               to_string(v) + " instead of " + to_string(expected);
      return false;
    }
  }
  return true;
}

bool nonabelian_image(const GroupMap& m, const std::vector<Word>& subgroup_generators) {
  std::vector<Word> images;
  for (const auto& w : subgroup_generators) images.push_back(apply(m, w));
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (!m.target->commute(images[i], images[j])) return true;
  return false;
}

std::string to_string(const GroupMap& m) {
  std::ostringstream out;
  out << "{ ";
  for (int i = 0; i < m.source.rank(); ++i) {
    if (i) out << ", ";
    out << m.source.generators->name(i) << " -> " << to_string(m.images[i]);
  }
  out << " }";
  return out.str();
}

}  // namespace hyptower
