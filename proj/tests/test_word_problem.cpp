#include <random>

#include "doctest.h"
#include "hyptower/word_problem.hpp"
#include "oracles.hpp"

using namespace hyptower;

namespace {

Presentation genus2() {
  return make_presentation({"a1", "a2", "a3", "a4"},
                           {"a1 a2 a1^-1 a2^-1 a3 a4 a3^-1 a4^-1"});
}

Presentation four_crosscaps() {
  return make_presentation({"d1", "d2", "d3", "d4"}, {"d1 d1 d2 d2 d3 d3 d4 d4"});
}

Word random_cyclically_reduced(std::mt19937_64& rng, const AlphabetRef& a, int len) {
  std::uniform_int_distribution<int> gen(1, a->size());
  std::uniform_int_distribution<int> sign(0, 1);
  while (true) {
    std::vector<Sym> v;
    for (int i = 0; i < len; ++i) {
      Sym s = static_cast<Sym>(gen(rng));
      v.push_back(sign(rng) ? s : -s);
    }
    Word w(a, std::move(v));
    if (w.size() == len && oracles::cyclically_reduced(w)) return w;
  }
}

}  // namespace

TEST_CASE("presentations") {
  Presentation p = genus2();
  CHECK(p.rank() == 4);
  CHECK(p.relators.size() == 1);
  CHECK(same_presentation(p, genus2()));
  // relators compare up to rotation and inversion
  Presentation q = make_presentation({"a1", "a2", "a3", "a4"},
                                     {"a2 a1^-1 a2^-1 a3 a4 a3^-1 a4^-1 a1"});
  CHECK(same_presentation(p, q));
  Presentation r = make_presentation({"a1", "a2", "a3", "a4"},
                                     {"a2 a1 a2^-1 a1^-1 a4 a3 a4^-1 a3^-1"});
  CHECK(same_presentation(p, r));  // rotated inverse relator
  CHECK_FALSE(same_presentation(p, four_crosscaps()));
  CHECK_FALSE(same_presentation(p, make_presentation({"a1", "a2", "a3", "a4"}, {})));

  Presentation cat = concatenated({make_presentation({"x"}, {}), four_crosscaps()});
  CHECK(cat.rank() == 5);
  CHECK(cat.generators->name(0) == "x");
  CHECK(cat.relators.size() == 1);
  CHECK_THROWS_AS(concatenated({genus2(), genus2()}), Error);
}

TEST_CASE("symmetrization") {
  CHECK(symmetrize(make_presentation({"a", "b"}, {"a b a^-1 b^-1"})).size() == 8);
  CHECK(symmetrize(four_crosscaps()).size() == 16);
  CHECK(symmetrize(genus2()).size() == 16);
  CHECK(symmetrize(make_presentation({"a"}, {"a a"})).size() == 2);

  CHECK_THROWS_AS(symmetrize(make_presentation({"a", "b"}, {"a a", "b b"})), Unsupported);
  CHECK_THROWS_AS(symmetrize(make_presentation({"a"}, {})), Unsupported);
}

TEST_CASE("piece lengths") {
  CHECK(max_piece_length(symmetrize(genus2())) == 1);
  CHECK(max_piece_length(symmetrize(four_crosscaps())) == 1);
  // periodic relator: a period shift is a second occurrence inside the word
  CHECK(max_piece_length(symmetrize(make_presentation({"a"}, {"a a"}))) == 1);
  CHECK(max_piece_length(symmetrize(make_presentation({"a"}, {"a a a a"}))) == 3);

  SUBCASE("agreement with the occurrence-indexed oracle") {
    auto check = [](const Presentation& p) {
      CAPTURE(to_string(p));
      CHECK(max_piece_length(symmetrize(p)) == oracles::piece_oracle(p));
    };
    check(genus2());
    check(four_crosscaps());
    check(make_presentation({"h", "a", "b", "c"}, {"h^-1 h^-1 a a b b c c"}));
    check(make_presentation({"h", "a", "b"}, {"h^-1 a a b b"}));
    check(make_presentation({"a"}, {"a a a"}));
    check(make_presentation({"a", "b"}, {"a b a^-1 b^-1"}));
    check(make_presentation({"a", "b"}, {"a b a b b a"}));

    std::mt19937_64 rng(17);
    auto a2 = Alphabet::make({"a", "b"});
    auto a3 = Alphabet::make({"a", "b", "c"});
    for (int t = 0; t < 150; ++t) {
      const AlphabetRef& a = (t % 2) ? a2 : a3;
      Word w = random_cyclically_reduced(rng, a, 3 + t % 8);
      check(make_presentation(a, {CyclicWord(w)}));
    }
  }
}

TEST_CASE("metric small-cancellation check") {
  CHECK(check_c_prime_sixth(genus2()));
  CHECK(check_c_prime_sixth(four_crosscaps()));
  CHECK_FALSE(check_c_prime_sixth(make_presentation({"a"}, {"a a"})));
  CHECK_FALSE(check_c_prime_sixth(make_presentation({"a", "b"}, {"a b a^-1 b^-1"})));
  // Klein bottle relator: piece length 1 but the relator has length 4
  CHECK_FALSE(check_c_prime_sixth(make_presentation({"a", "b"}, {"a a b b"})));
}

TEST_CASE("free and infinite cyclic models") {
  FreeModel fm(Alphabet::make({"a", "b"}));
  CHECK(fm.is_trivial(parse_word(fm.alphabet(), "a a^-1")));
  CHECK_FALSE(fm.is_trivial(parse_word(fm.alphabet(), "a b a^-1 b^-1")));
  CHECK(fm.are_equal(parse_word(fm.alphabet(), "a b"), parse_word(fm.alphabet(), "a b")));
  CHECK_FALSE(fm.commute(parse_word(fm.alphabet(), "a"), parse_word(fm.alphabet(), "b")));
  CHECK(fm.commute(parse_word(fm.alphabet(), "a"), parse_word(fm.alphabet(), "a a")));

  InfiniteCyclicModel ic(Alphabet::make({"h"}));
  CHECK(ic.is_trivial(Word(ic.alphabet())));
  CHECK_FALSE(ic.is_trivial(parse_word(ic.alphabet(), "h h")));
  CHECK_THROWS_AS(InfiniteCyclicModel(Alphabet::make({"h", "k"})), Error);
}

TEST_CASE("small-cancellation model construction") {
  CHECK_NOTHROW(SmallCancellationModel(genus2()));
  CHECK_NOTHROW(SmallCancellationModel(four_crosscaps()));
  CHECK_THROWS_AS(SmallCancellationModel(make_presentation({"a", "b"}, {"a b a^-1 b^-1"})),
                  Unsupported);
  CHECK_THROWS_AS(SmallCancellationModel(make_presentation({"a", "b"}, {"a a", "b b"})),
                  Unsupported);
}

TEST_CASE("word problem over the four-crosscap group") {
  SmallCancellationModel m(four_crosscaps());
  const AlphabetRef& a = m.alphabet();
  Word rel = parse_word(a, "d1 d1 d2 d2 d3 d3 d4 d4");

  CHECK(m.is_trivial(rel));
  CHECK(m.is_trivial(invert(rel)));
  CHECK(m.is_trivial(conjugate(rel, parse_word(a, "d3 d1^-1"))));
  CHECK_FALSE(m.is_trivial(parse_word(a, "d1")));
  CHECK_FALSE(m.is_trivial(parse_word(a, "d1 d2")));
  CHECK(m.are_equal(parse_word(a, "d1^-1"), parse_word(a, "d1 d2 d2 d3 d3 d4 d4")));

  SUBCASE("products of conjugated relators are trivial") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
      Word prod(a);
      int parts = 1 + t % 5;
      for (int i = 0; i < parts; ++i) {
        Word g = random_cyclically_reduced(rng, a, 1 + t % 4);
        Word r = (rng() & 1) ? rel : invert(rel);
        prod = prod * conjugate(r, g);
      }
      CAPTURE(to_string(prod));
      CHECK(m.is_trivial(prod));
    }
  }

  SUBCASE("exponent sums obstruct triviality") {
    // trivial words must have exponent-sum vector in the lattice spanned by
    // (2,2,2,2)
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> gen(1, 4), sign(0, 1), len(1, 12);
    for (int t = 0; t < 300; ++t) {
      std::vector<Sym> v;
      int l = len(rng);
      for (int i = 0; i < l; ++i) {
        Sym s = static_cast<Sym>(gen(rng));
        v.push_back(sign(rng) ? s : -s);
      }
      Word w(a, std::move(v));
      long e[4] = {0, 0, 0, 0};
      for (Sym s : w.syms()) e[std::abs(s) - 1] += (s > 0) ? 1 : -1;
      bool lattice = e[0] == e[1] && e[1] == e[2] && e[2] == e[3] && e[0] % 2 == 0;
      if (!lattice) {
        CAPTURE(to_string(w));
        CHECK_FALSE(m.is_trivial(w));
      }
    }
  }

  SUBCASE("agreement with the relator-insertion ball") {
    auto ball = oracles::bfs_trivial_ball(four_crosscaps(), 10);
    for (const Word& w : oracles::all_reduced_words(a, 4)) {
      CAPTURE(to_string(w));
      CHECK(m.is_trivial(w) == ball.is_trivial(w));
    }
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> gen(1, 4), sign(0, 1), len(5, 10);
    for (int t = 0; t < 2000; ++t) {
      std::vector<Sym> v;
      int l = len(rng);
      for (int i = 0; i < l; ++i) {
        Sym s = static_cast<Sym>(gen(rng));
        v.push_back(sign(rng) ? s : -s);
      }
      Word w(a, std::move(v));
      if (w.size() > 10) continue;
      CAPTURE(to_string(w));
      CHECK(m.is_trivial(w) == ball.is_trivial(w));
    }
  }
}

TEST_CASE("free product normal form") {
  auto z = Alphabet::make({"z"});
  auto models = std::vector<ModelRef>{
      std::make_shared<InfiniteCyclicModel>(z),
      std::make_shared<SmallCancellationModel>(genus2())};
  FreeProductModel fp(models);
  const AlphabetRef& a = fp.alphabet();
  CHECK(a->size() == 5);

  Word rel = parse_word(a, "a1 a2 a1^-1 a2^-1 a3 a4 a3^-1 a4^-1");
  CHECK(fp.is_trivial(conjugate(rel, parse_word(a, "z"))));
  CHECK_FALSE(fp.is_trivial(parse_word(a, "z a1 z^-1")));
  CHECK(fp.normal_form(parse_word(a, "z a1 z^-1")).size() == 3);
  CHECK(fp.normal_form(parse_word(a, "z z^-1 a1")).size() == 1);
  CHECK(fp.normal_form(conjugate(rel, parse_word(a, "z"))).empty());
  CHECK(free_product_normal_form(parse_word(a, "z a1 z^-1"), fp).size() == 3);

  // syllables collapse across a trivial middle: z r z^-1 with r a relator
  Word w = parse_word(a, "z") * rel * parse_word(a, "z^-1 a1");
  auto nf = fp.normal_form(w);
  REQUIRE(nf.size() == 1);
  CHECK(nf[0].first == 1);
  CHECK(to_string(nf[0].second) == "a1");

  // two infinite cyclic factors never commute across factors
  FreeProductModel hx({std::make_shared<InfiniteCyclicModel>(Alphabet::make({"h"})),
                       std::make_shared<InfiniteCyclicModel>(Alphabet::make({"x"}))});
  CHECK_FALSE(hx.commute(parse_word(hx.alphabet(), "h"), parse_word(hx.alphabet(), "x")));
  CHECK(hx.commute(parse_word(hx.alphabet(), "h"), parse_word(hx.alphabet(), "h h")));

  CHECK_THROWS_AS(FreeProductModel({std::make_shared<InfiniteCyclicModel>(z),
                                    std::make_shared<InfiniteCyclicModel>(z)}),
                  Error);
}

TEST_CASE("model selection") {
  CHECK(is_trivial_group(*model_for(make_presentation(std::vector<std::string>{}, {}))));
  CHECK(is_infinite_cyclic(*model_for(make_presentation({"h"}, {}))));
  CHECK_FALSE(is_infinite_cyclic(*model_for(make_presentation({"a", "b"}, {}))));
  CHECK(dynamic_cast<const FreeModel*>(model_for(make_presentation({"a", "b"}, {})).get()));
  CHECK(dynamic_cast<const SmallCancellationModel*>(model_for(four_crosscaps()).get()));

  // relator-free generators pool into one free factor next to the relator
  // component
  Presentation mixed = concatenated({make_presentation({"h"}, {}), four_crosscaps()});
  auto m = model_for(mixed);
  auto* fp = dynamic_cast<const FreeProductModel*>(m.get());
  REQUIRE(fp);
  CHECK(fp->factors().size() == 2);
  CHECK_FALSE(m->is_trivial(parse_word(m->alphabet(), "h d1 h^-1 d1^-1")));
  CHECK(m->is_trivial(parse_word(m->alphabet(), "h d1 d1 d2 d2 d3 d3 d4 d4 h^-1")));

  // one component with several relators is out of scope
  CHECK_THROWS_AS(model_for(make_presentation({"a", "b", "c"}, {"a b a^-1 b^-1", "b c b^-1 c^-1"})),
                  Unsupported);
  // single relator failing the metric condition is out of scope
  CHECK_THROWS_AS(model_for(make_presentation({"a", "b"}, {"a b a^-1 b^-1"})), Unsupported);
}

TEST_CASE("adjoining a free letter") {
  auto ic = model_for(make_presentation({"h"}, {}));
  auto m = adjoin_free_letter(ic, "x");
  CHECK(m->alphabet()->size() == 2);
  CHECK_FALSE(m->commute(parse_word(m->alphabet(), "h"), parse_word(m->alphabet(), "x")));
  CHECK_THROWS_AS(adjoin_free_letter(ic, "h"), Error);

  auto sc = model_for(four_crosscaps());
  auto m2 = adjoin_free_letter(sc, "x");
  auto* fp = dynamic_cast<const FreeProductModel*>(m2.get());
  REQUIRE(fp);
  CHECK(fp->factors().size() == 2);
  CHECK(m2->is_trivial(parse_word(m2->alphabet(), "x d1 d1 d2 d2 d3 d3 d4 d4 x^-1")));
  CHECK_FALSE(m2->is_trivial(parse_word(m2->alphabet(), "x d1 x^-1 d1^-1")));

  Presentation p = adjoin_free_letter(four_crosscaps(), "x");
  CHECK(p.rank() == 5);
  CHECK(p.generators->name(4) == "x");
  CHECK(p.relators.size() == 1);
  CHECK_THROWS_AS(adjoin_free_letter(four_crosscaps(), "d1"), Error);
}
