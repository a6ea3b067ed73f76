#include <random>
#include <set>

#include "doctest.h"
#include "hyptower/word.hpp"
#include "oracles.hpp"

using namespace hyptower;

namespace {

AlphabetRef ab() { return Alphabet::make({"a", "b"}); }
AlphabetRef abc() { return Alphabet::make({"a", "b", "c"}); }

Word W(const AlphabetRef& a, const std::string& text) { return parse_word(a, text); }

std::vector<Sym> random_raw(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Sym> v;
  for (int i = 0; i < len; ++i) {
    Sym s = static_cast<Sym>(gen(rng));
    v.push_back(sign(rng) ? s : -s);
  }
  return v;
}

}  // namespace

TEST_CASE("parsing and printing") {
  auto a = abc();
  CHECK(to_string(W(a, "a b^-1 c")) == "a b^-1 c");
  CHECK(to_string(W(a, "1")) == "1");
  CHECK(W(a, "").empty());
  CHECK(to_string(W(a, "a^3")) == "a a a");
  CHECK(to_string(W(a, "b^-2")) == "b^-1 b^-1");
  CHECK(W(a, "a^0").empty());
  CHECK_THROWS_AS(W(a, "d"), Error);
  CHECK_THROWS_AS(W(a, "a^x"), Error);
  // round trip
  Word w = W(a, "a b c^-1 a^-1");
  CHECK(parse_word(a, to_string(w)) == w);
}

TEST_CASE("free reduction") {
  auto a = abc();
  CHECK(to_string(W(a, "b a^-1 a b^-1 c")) == "c");
  CHECK(W(a, "a a^-1").empty());
  CHECK(to_string(W(a, "a b b^-1 a")) == "a a");

  // nested cancellation
  CHECK(W(a, "a b c c^-1 b^-1 a^-1").empty());

  // agreement with the repeated-scan oracle on random raw strings
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    auto raw = random_raw(rng, 3, 12);
    Word w(a, std::vector<Sym>(raw));
    CHECK(w.syms() == oracles::naive_reduce(raw));
  }
}

TEST_CASE("word equality is name-level") {
  auto a1 = Alphabet::make({"a", "b"});
  auto a2 = Alphabet::make({"b", "a"});  // same names, different order
  CHECK(W(a1, "a b") == W(a2, "a b"));
  CHECK(W(a1, "a b") != W(a2, "b a"));
  CHECK(W(a1, "a") != W(a1, "a^-1"));
}

TEST_CASE("compose invert conjugate power") {
  auto a = ab();
  Word x = W(a, "a b");
  Word y = W(a, "b^-1 a");
  CHECK(to_string(x * y) == "a a");
  CHECK((x * invert(x)).empty());
  CHECK(to_string(invert(x)) == "b^-1 a^-1");
  CHECK(conjugate(x, y) == y * x * invert(y));
  CHECK(to_string(commutator(W(a, "a"), W(a, "b"))) == "a b a^-1 b^-1");
  CHECK(power(W(a, "a"), 3) == W(a, "a a a"));
  CHECK(power(x, -2) == invert(x) * invert(x));
  CHECK(power(x, 0).empty());
}

TEST_CASE("translate matches by name") {
  auto small = ab();
  auto big = Alphabet::make({"z", "a", "b"});
  Word w = W(small, "a b^-1");
  Word t = translate(w, big);
  CHECK(t.alphabet() == big);
  CHECK(to_string(t) == "a b^-1");
  CHECK_THROWS_AS(translate(W(big, "z"), small), AlphabetMismatch);
}

TEST_CASE("rotation and cyclic words") {
  auto a = abc();
  Word w = W(a, "a b c");
  CHECK(to_string(rotate(w, 1)) == "b c a");
  CHECK(rotate(w, 3) == w);
  CHECK(rotate(w, 0) == w);

  CHECK(CyclicWord(W(a, "a b c")) == CyclicWord(W(a, "c a b")));
  CHECK(CyclicWord(W(a, "a b")) != CyclicWord(W(a, "b^-1 a^-1")));
  // canonicalisation happens after cyclic reduction
  CHECK(CyclicWord(W(a, "c a b c^-1")) == CyclicWord(W(a, "b a")));
  CHECK(CyclicWord(Word{}).empty());
}

TEST_CASE("cyclic reduction with conjugator") {
  auto a = abc();
  auto red = cyclic_reduce(W(a, "c a a c^-1"));
  CHECK(to_string(red.cyclic.representative()) == "a a");
  CHECK(to_string(red.conjugator) == "c");

  // already cyclically reduced input: trivial conjugator
  auto red2 = cyclic_reduce(W(a, "a b a^-1 b^-1"));
  CHECK(red2.conjugator.empty());
  CHECK(red2.cyclic == CyclicWord(W(a, "a b a^-1 b^-1")));

  // defining identity on random words
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Word w(a, random_raw(rng, 3, 10));
    auto r = cyclic_reduce(w);
    CHECK(conjugate(r.cyclic.representative(), r.conjugator) == w);
  }
}

TEST_CASE("genus-one commutator witnesses") {
  auto a = ab();
  Word comm = W(a, "a b a^-1 b^-1");
  auto wit = genus_one_commutator_witness(comm);
  REQUIRE(wit.has_value());
  // the witness reassembles the word exactly
  Word rebuilt = conjugate(wit->a * wit->b * wit->c * invert(wit->a) * invert(wit->b) * invert(wit->c),
                           wit->conjugator);
  CHECK(rebuilt == comm);
  // and yields a genuine commutator pair
  CHECK(CyclicWord(commutator(wit->x(), wit->y())) == CyclicWord(comm));

  CHECK(is_genus_one_commutator(Word(a)));  // identity = [1,1]
  CHECK_FALSE(is_genus_one_commutator(W(a, "a")));
  CHECK_FALSE(is_genus_one_commutator(W(a, "a a b b")));

  auto d = Alphabet::make({"d1", "d2", "d3", "d4"});
  CHECK_FALSE(is_genus_one_commutator(W(d, "d1 d1 d2 d2")));
  CHECK(is_genus_one_commutator(W(d, "d1 d2 d1^-1 d2^-1")));
}

TEST_CASE("commutator test is a conjugacy invariant") {
  auto a = ab();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    Word w(a, random_raw(rng, 2, 6));
    Word g(a, random_raw(rng, 2, 4));
    CHECK(is_genus_one_commutator(w) == is_genus_one_commutator(conjugate(w, g)));
  }
}

TEST_CASE("commutator test agrees with brute force in small range") {
  auto a = ab();
  auto classes = oracles::commutator_classes(a, 3);
  for (const Word& w : oracles::all_cyclically_reduced_words(a, 4)) {
    bool brute = classes.count(oracles::conjugacy_key(w)) != 0;
    CHECK_MESSAGE(is_genus_one_commutator(w) == brute, "word: ", to_string(w));
  }
}

TEST_CASE("witness validity on every found commutator up to length 8") {
  auto a = ab();
  for (const Word& w : oracles::all_cyclically_reduced_words(a, 8)) {
    auto wit = genus_one_commutator_witness(w);
    if (!wit) continue;
    Word rebuilt = conjugate(
        wit->a * wit->b * wit->c * invert(wit->a) * invert(wit->b) * invert(wit->c),
        wit->conjugator);
    REQUIRE(rebuilt == w);
    REQUIRE(CyclicWord(commutator(wit->x(), wit->y())) == CyclicWord(w));
  }
}
