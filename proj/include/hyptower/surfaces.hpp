#pragma once

#include <string>
#include <vector>

#include "hyptower/word_problem.hpp"

namespace hyptower {

// Classification datum of a compact surface: orientability, Euler
// characteristic, number of boundary circles.  Two compact surfaces are
// homeomorphic exactly when their data agree.
struct SurfaceDatum {
  bool orientable = true;
  int euler = 2;
  int boundary = 0;

  bool operator==(const SurfaceDatum& o) const {
    return orientable == o.orientable && euler == o.euler && boundary == o.boundary;
  }
  bool operator!=(const SurfaceDatum& o) const { return !(*this == o); }
  bool closed() const { return boundary == 0; }
};

bool valid_surface_datum(const SurfaceDatum& s);
SurfaceDatum surface_datum(bool orientable, int euler, int boundary);  // validates

// chi = 2 - 2m - r (orientable, m handles) or 2 - q - r (q >= 1 crosscaps).
int euler_from_presentation_data(bool orientable, int handle_or_crosscap_count,
                                 int boundary_count);
int orientable_genus(const SurfaceDatum& s);   // pre: orientable
int crosscap_count(const SurfaceDatum& s);     // pre: non-orientable
int mixed_form_to_crosscaps(int handles, int crosscaps);  // pre: crosscaps >= 1

SurfaceDatum connected_sum(const SurfaceDatum& a, const SurfaceDatum& b);
SurfaceDatum puncture(const SurfaceDatum& s);
bool homeomorphic(const SurfaceDatum& a, const SurfaceDatum& b);

std::string to_string(const SurfaceDatum& s);

// pi1 data of a surface: for closed surfaces a one-relator presentation, for
// bounded surfaces a free presentation together with one designated word per
// boundary circle.
struct SurfacePresentation {
  Presentation presentation;
  std::vector<Word> boundary_words;
};

// Standard generators and relator/boundary words.  Closed orientable genus m:
// a1 b1 .. am bm with relator [a1,b1]..[am,bm].  Closed non-orientable with q
// crosscaps: d1 .. dq with relator d1^2 .. dq^2.  Bounded surfaces are free on
// the core generators plus g1 .. g_{r-1}; the last boundary word is chosen so
// the boundary words multiply to the core relator word.  Throws Unsupported
// for the sphere.
SurfacePresentation standard_presentation(const SurfaceDatum& s);

// Same presentation with generators renamed positionally.
SurfacePresentation renamed(const SurfacePresentation& sp,
                            const std::vector<std::string>& names);

// A bounded surface can carry the bottom level of a hyperbolic structure
// exactly when it is a once-punctured torus or has chi <= -2.
// Pre: s has boundary; throws on closed input.
bool is_floor_admissible(const SurfaceDatum& s);

// One way to split a closed ambient surface into candidate bottom-level
// pieces and complementary pieces, glued along a number of circles.
struct FloorProfile {
  std::vector<SurfaceDatum> surface_pieces;     // admissible pieces
  std::vector<SurfaceDatum> complement_pieces;  // chi <= 0 pieces
  int gluing_circles = 0;
  // Emitted for shapes that fail only because gluing orientable pieces along
  // a tree cannot produce a non-orientable ambient and no orientability
  // variant of the same shape survives.
  bool rejected_for_orientability = false;

  bool operator==(const FloorProfile& o) const;
};

std::string to_string(const FloorProfile& p);

// All piece profiles compatible with a closed ambient surface:
//  - every surface piece is floor-admissible with boundary,
//  - every complement piece has chi <= 0 and boundary,
//  - Euler characteristics add up to the ambient one,
//  - surface and complement boundary counts both equal the circle count,
//  - at most piece_bound pieces, connected (circles >= pieces - 1),
//  - orientable ambient admits only orientable pieces.
// Throws on an ambient with boundary.
std::vector<FloorProfile> enumerate_floor_profiles(const SurfaceDatum& ambient,
                                                   int piece_bound = 4);

// Data of proper essential subsurfaces of a bounded (or closed) surface:
// closure of the ambient datum under cutting along essential two-sided or
// one-sided curves, keeping pieces with chi <= 0, minus the ambient datum
// itself.
std::vector<SurfaceDatum> proper_subsurface_data(const SurfaceDatum& ambient);

}  // namespace hyptower
