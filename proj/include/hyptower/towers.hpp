#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyptower/gog.hpp"
#include "hyptower/homs.hpp"
#include "hyptower/report.hpp"

namespace hyptower {

// A claimed hyperbolic floor: a bipartite splitting of the ambient group
// plus a retraction onto the free product of the plain vertex groups, given
// by image words over the plain generators.  If the retraction images of
// some surface group degenerate to an abelian subgroup, the extended data
// (a fresh letter and a retraction to the plain product with that letter
// adjoined) can still certify an extended floor.
struct FloorCandidate {
  GraphOfGroups decomposition;
  std::map<std::string, std::string> retraction_images;
  std::optional<std::string> extended_letter;
  std::map<std::string, std::string> extended_retraction_images;
};

struct VerifyOptions {
  int sample_count = 100;      // random words checked against the retraction
  int sample_max_length = 10;  // length bound for sampled words
  unsigned long long seed = 61453;
};

// Checks, in order: structure, admissibility of the surface pieces, proper
// splitting shape, decidability of the plain product, the retraction
// certificate, seeded random soundness samples, and nonabelian surface
// images (directly, or through the extended certificate).  Verdicts:
// "hyperbolic floor", "extended hyperbolic floor", "rejected".
VerificationReport verify_floor(const FloorCandidate& c, const VerifyOptions& opts = {});

// Shape of the lowest level: an optional base group H, a free rank, and
// closed surfaces of Euler characteristic at most -2.
struct GroundSpec {
  std::optional<Presentation> base;
  int free_rank = 0;
  std::vector<SurfaceDatum> surfaces;
};

// Assigns a role to a plain vertex of the last floor: "base", "free", or
// "surface:<index into GroundSpec::surfaces>".
struct VertexRole {
  std::string vertex;
  std::string role;
};

// Zero-floor towers name the parts directly by generator lists.
struct GroundPart {
  std::string role;  // same syntax as VertexRole::role
  std::vector<std::string> generators;
};

// Optional explicit containment witness for the base group on one floor:
// a plain vertex and, for each base generator, a word over that vertex
// equal to the generator in the floor's ambient group.
struct BaseWitness {
  std::string vertex;
  std::map<std::string, std::string> words;
};

struct TowerCandidate {
  std::vector<FloorCandidate> floors;
  std::optional<Presentation> ambient;  // required when floors is empty
  GroundSpec ground;
  std::vector<VertexRole> roles;        // last-floor plain vertices (floors >= 1)
  std::vector<GroundPart> parts;        // zero-floor shape assignment
  std::vector<BaseWitness> base_witnesses;  // one per floor, optional
};

// Verifies every floor, that consecutive floors compose (the plain product
// of one is the ambient presentation of the next), that only the last floor
// may be extended, that the last plain product has the declared ground
// shape, and that the base group sits inside every level.  Verdicts:
// "hyperbolic tower", "extended hyperbolic tower", "hyperbolic tower over
// the trivial group", "rejected".
VerificationReport verify_tower(const TowerCandidate& c, const VerifyOptions& opts = {});

}  // namespace hyptower
