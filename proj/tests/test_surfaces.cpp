#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hyptower/surfaces.hpp"

using namespace hyptower;

namespace {

const SurfaceDatum kSphere{true, 2, 0};
const SurfaceDatum kTorus{true, 0, 0};
const SurfaceDatum kProjectivePlane{false, 1, 0};
const SurfaceDatum kKlein{false, 0, 0};
const SurfaceDatum kPuncturedTorus{true, -1, 1};
const SurfaceDatum kCylinder{true, 0, 2};
const SurfaceDatum kMoebius{false, 0, 1};

std::multiset<std::string> datum_strings(const std::vector<SurfaceDatum>& v) {
  std::multiset<std::string> out;
  for (const auto& s : v) out.insert(to_string(s));
  return out;
}

}  // namespace

TEST_CASE("datum validity") {
  CHECK(valid_surface_datum(kSphere));
  CHECK(valid_surface_datum(kTorus));
  CHECK(valid_surface_datum(kProjectivePlane));
  CHECK(valid_surface_datum(kKlein));
  CHECK(valid_surface_datum(kPuncturedTorus));
  CHECK(valid_surface_datum(kCylinder));
  CHECK(valid_surface_datum(kMoebius));
  CHECK(valid_surface_datum({true, 1, 1}));    // disk
  CHECK(valid_surface_datum({false, -1, 2}));  // twice-punctured projective plane

  CHECK_FALSE(valid_surface_datum({true, 3, 0}));   // chi too large
  CHECK_FALSE(valid_surface_datum({true, 0, 1}));   // odd chi + boundary, orientable
  CHECK_FALSE(valid_surface_datum({true, -1, 2}));
  CHECK_FALSE(valid_surface_datum({false, 2, 0}));  // non-orientable sphere
  CHECK_FALSE(valid_surface_datum({false, 1, 1}));
  CHECK_FALSE(valid_surface_datum({true, 2, 1}));
  CHECK_FALSE(valid_surface_datum({true, -1, -1}));

  CHECK_NOTHROW(surface_datum(true, -2, 0));
  CHECK_THROWS_AS(surface_datum(true, -1, 0), Error);
}

TEST_CASE("euler characteristic arithmetic") {
  CHECK(euler_from_presentation_data(true, 2, 0) == -2);
  CHECK(euler_from_presentation_data(false, 4, 0) == -2);
  CHECK(euler_from_presentation_data(true, 1, 1) == -1);
  CHECK(euler_from_presentation_data(false, 3, 1) == -2);

  CHECK(orientable_genus({true, -2, 0}) == 2);
  CHECK(orientable_genus(kTorus) == 1);
  CHECK(orientable_genus(kPuncturedTorus) == 1);
  CHECK(crosscap_count({false, -2, 0}) == 4);
  CHECK(crosscap_count(kKlein) == 2);
  CHECK(crosscap_count(kMoebius) == 1);

  CHECK(mixed_form_to_crosscaps(0, 2) == 2);
  CHECK(mixed_form_to_crosscaps(1, 1) == 3);
  CHECK(mixed_form_to_crosscaps(2, 1) == 5);
}

TEST_CASE("connected sums and punctures") {
  CHECK(connected_sum(kTorus, kTorus) == SurfaceDatum{true, -2, 0});
  CHECK(connected_sum(kProjectivePlane, kProjectivePlane) == kKlein);
  CHECK(connected_sum(kTorus, kProjectivePlane) == SurfaceDatum{false, -1, 0});
  CHECK(connected_sum(kSphere, kTorus) == kTorus);
  CHECK(connected_sum(kSphere, kKlein) == kKlein);

  CHECK(puncture(kTorus) == kPuncturedTorus);
  CHECK(puncture(kSphere) == SurfaceDatum{true, 1, 1});
  CHECK(puncture(kKlein) == SurfaceDatum{false, -1, 1});

  // chi of the n-fold sum of projective planes is 2 - n
  SurfaceDatum s = kProjectivePlane;
  for (int n = 1; n <= 8; ++n) {
    CHECK(s.euler == 2 - n);
    CHECK_FALSE(s.orientable);
    s = connected_sum(s, kProjectivePlane);
  }

  CHECK(homeomorphic(connected_sum(kTorus, kKlein), connected_sum(kKlein, kTorus)));
  CHECK_FALSE(homeomorphic(kTorus, kKlein));

  // randomized composition: the classification formula tracks sums and
  // punctures
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> handles(0, 4), crosscaps(0, 4), bd(0, 3);
  for (int t = 0; t < 120; ++t) {
    int h = handles(rng), q = crosscaps(rng), r = bd(rng);
    if (h + q == 0) continue;
    SurfaceDatum d = kSphere;
    for (int i = 0; i < h; ++i) d = connected_sum(d, kTorus);
    for (int i = 0; i < q; ++i) d = connected_sum(d, kProjectivePlane);
    for (int i = 0; i < r; ++i) d = puncture(d);
    CHECK(valid_surface_datum(d));
    CHECK(d.orientable == (q == 0));
    if (q == 0)
      CHECK(d.euler == euler_from_presentation_data(true, h, r));
    else
      CHECK(d.euler == euler_from_presentation_data(false, mixed_form_to_crosscaps(h, q), r));
  }
}

TEST_CASE("standard presentations of closed surfaces") {
  auto g2 = standard_presentation({true, -2, 0});
  CHECK(g2.boundary_words.empty());
  CHECK(same_presentation(g2.presentation,
                          make_presentation({"a1", "b1", "a2", "b2"},
                                            {"a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1"})));

  auto n4 = standard_presentation({false, -2, 0});
  CHECK(same_presentation(n4.presentation,
                          make_presentation({"d1", "d2", "d3", "d4"},
                                            {"d1 d1 d2 d2 d3 d3 d4 d4"})));

  auto torus = standard_presentation(kTorus);
  CHECK(same_presentation(torus.presentation,
                          make_presentation({"a1", "b1"}, {"a1 b1 a1^-1 b1^-1"})));

  CHECK_THROWS_AS(standard_presentation(kSphere), Unsupported);
}

TEST_CASE("standard presentations of bounded surfaces") {
  auto pt = standard_presentation(kPuncturedTorus);
  CHECK(pt.presentation.relators.empty());
  CHECK(pt.presentation.rank() == 2);
  REQUIRE(pt.boundary_words.size() == 1);
  CHECK(to_string(pt.boundary_words[0]) == "a1 b1 a1^-1 b1^-1");

  auto s4 = standard_presentation({true, -2, 4});  // 4-holed sphere
  CHECK(s4.presentation.relators.empty());
  CHECK(s4.presentation.rank() == 3);
  REQUIRE(s4.boundary_words.size() == 4);
  Word prod(s4.presentation.generators);
  for (const Word& b : s4.boundary_words) prod = prod * b;
  CHECK(prod.empty());  // boundary words multiply to the empty core relator

  auto m1 = standard_presentation({false, -2, 1});
  CHECK(m1.presentation.rank() == 3);
  REQUIRE(m1.boundary_words.size() == 1);
  CHECK(to_string(m1.boundary_words[0]) == "d1 d1 d2 d2 d3 d3");

  auto k2 = standard_presentation({false, -2, 2});
  CHECK(k2.presentation.rank() == 3);
  REQUIRE(k2.boundary_words.size() == 2);
  // the boundary words multiply to the core crosscap relator
  CHECK(to_string(k2.boundary_words[0] * k2.boundary_words[1]) == "d1 d1 d2 d2");

  auto t2 = standard_presentation({true, -2, 2});  // genus 1, two boundaries
  REQUIRE(t2.boundary_words.size() == 2);
  CHECK(to_string(t2.boundary_words[0] * t2.boundary_words[1]) == "a1 b1 a1^-1 b1^-1");

  // free rank is 1 - chi for every bounded surface
  for (const SurfaceDatum& d : std::vector<SurfaceDatum>{
           kPuncturedTorus, {true, -2, 4}, {false, -2, 1}, {false, -2, 2},
           {true, -3, 1}, {false, -4, 3}, kCylinder, kMoebius}) {
    auto sp = standard_presentation(d);
    CHECK(sp.presentation.rank() == 1 - d.euler);
    CHECK(sp.presentation.relators.empty());
    CHECK(static_cast<int>(sp.boundary_words.size()) == d.boundary);
  }
}

TEST_CASE("renaming presentations") {
  auto pt = renamed(standard_presentation(kPuncturedTorus), {"p", "q"});
  CHECK(pt.presentation.generators->names() == std::vector<std::string>{"p", "q"});
  CHECK(to_string(pt.boundary_words[0]) == "p q p^-1 q^-1");
  CHECK_THROWS_AS(renamed(standard_presentation(kPuncturedTorus), {"p"}), Error);
}

TEST_CASE("floor admissibility") {
  CHECK(is_floor_admissible(kPuncturedTorus));
  CHECK(is_floor_admissible({true, -3, 1}));
  CHECK(is_floor_admissible({true, -2, 4}));
  CHECK(is_floor_admissible({false, -2, 1}));
  CHECK(is_floor_admissible({false, -3, 2}));

  CHECK_FALSE(is_floor_admissible({true, -1, 3}));   // three-holed sphere
  CHECK_FALSE(is_floor_admissible(kCylinder));
  CHECK_FALSE(is_floor_admissible(kMoebius));
  CHECK_FALSE(is_floor_admissible({false, -1, 1}));  // punctured Klein bottle
  CHECK_FALSE(is_floor_admissible({true, 1, 1}));    // disk

  CHECK_THROWS_AS(is_floor_admissible(kTorus), Error);
}

TEST_CASE("floor profiles of the four-crosscap surface") {
  auto profiles = enumerate_floor_profiles({false, -2, 0}, 4);
  CHECK(profiles.size() == 11);

  int two_tori = 0, one_torus = 0, single_chi_minus_two = 0, other = 0;
  for (const auto& p : profiles) {
    // shared shape invariants
    int chi = 0, surface_bd = 0, complement_bd = 0;
    for (const auto& s : p.surface_pieces) {
      CHECK(valid_surface_datum(s));
      CHECK(is_floor_admissible(s));
      chi += s.euler;
      surface_bd += s.boundary;
    }
    for (const auto& s : p.complement_pieces) {
      CHECK(valid_surface_datum(s));
      CHECK(s.euler <= 0);
      CHECK(s.boundary >= 1);
      chi += s.euler;
      complement_bd += s.boundary;
      if (s.euler == 0) CHECK((s == kCylinder || s == kMoebius));
    }
    CHECK(chi == -2);
    CHECK(surface_bd == p.gluing_circles);
    CHECK(complement_bd == p.gluing_circles);
    int pieces = static_cast<int>(p.surface_pieces.size() + p.complement_pieces.size());
    CHECK(pieces <= 4);
    CHECK(p.gluing_circles >= pieces - 1);

    int tori = 0;
    for (const auto& s : p.surface_pieces)
      if (s == kPuncturedTorus) ++tori;
    if (tori == 2 && p.surface_pieces.size() == 2) {
      ++two_tori;
      CHECK(p.rejected_for_orientability);
      CHECK(datum_strings(p.complement_pieces) ==
            std::multiset<std::string>{to_string(kCylinder)});
    } else if (tori == 1 && p.surface_pieces.size() == 1) {
      ++one_torus;
      CHECK_FALSE(p.rejected_for_orientability);
      CHECK(datum_strings(p.complement_pieces) ==
            std::multiset<std::string>{to_string(SurfaceDatum{false, -1, 1})});
    } else if (p.surface_pieces.size() == 1 && p.surface_pieces[0].euler == -2) {
      ++single_chi_minus_two;
      CHECK_FALSE(p.rejected_for_orientability);
    } else {
      ++other;
    }
  }
  CHECK(two_tori == 1);
  CHECK(one_torus == 1);
  CHECK(single_chi_minus_two == 9);
  CHECK(other == 0);
}

TEST_CASE("floor profiles of orientable ambients") {
  auto profiles = enumerate_floor_profiles({true, -2, 0}, 4);
  CHECK_FALSE(profiles.empty());
  bool saw_two_tori = false, saw_single_torus = false;
  for (const auto& p : profiles) {
    for (const auto& s : p.surface_pieces) CHECK(s.orientable);
    for (const auto& s : p.complement_pieces) CHECK(s.orientable);
    CHECK_FALSE(p.rejected_for_orientability);
    int tori = 0;
    for (const auto& s : p.surface_pieces)
      if (s == kPuncturedTorus) ++tori;
    if (tori == 2) {
      saw_two_tori = true;
      CHECK(datum_strings(p.complement_pieces) ==
            std::multiset<std::string>{to_string(kCylinder)});
    }
    if (tori == 1 && p.surface_pieces.size() == 1 &&
        datum_strings(p.complement_pieces) ==
            std::multiset<std::string>{to_string(kPuncturedTorus)})
      saw_single_torus = true;
  }
  CHECK(saw_two_tori);
  CHECK(saw_single_torus);

  CHECK(enumerate_floor_profiles(kSphere, 4).empty());
  CHECK(enumerate_floor_profiles(kTorus, 4).empty());
  CHECK_THROWS_AS(enumerate_floor_profiles(kPuncturedTorus, 4), Error);

  // a tighter piece bound only removes profiles
  auto few = enumerate_floor_profiles({false, -2, 0}, 2);
  auto many = enumerate_floor_profiles({false, -2, 0}, 4);
  CHECK(few.size() < many.size());
  for (const auto& p : few) {
    CHECK(p.surface_pieces.size() + p.complement_pieces.size() <= 2);
    CHECK(std::find(many.begin(), many.end(), p) != many.end());
  }
}

TEST_CASE("proper subsurface data") {
  auto expected = std::multiset<std::string>{to_string(SurfaceDatum{true, -1, 3}),
                                             to_string(kCylinder)};

  auto pt = proper_subsurface_data(kPuncturedTorus);
  CHECK(datum_strings(pt) == expected);
  auto s4 = proper_subsurface_data({true, -2, 4});
  CHECK(datum_strings(s4) == expected);

  for (const auto& d : pt) CHECK_FALSE(is_floor_admissible(d));
  for (const auto& d : s4) CHECK_FALSE(is_floor_admissible(d));
}
