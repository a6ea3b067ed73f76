#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyptower/surfaces.hpp"
#include "hyptower/word_problem.hpp"

namespace hyptower {

// One vertex of a bipartite splitting: either a surface piece (free
// presentation plus designated boundary words) or a plain group.
struct VertexSpec {
  std::string id;
  bool is_surface = false;
  Presentation presentation;
  // surface vertices only:
  std::optional<SurfaceDatum> datum;
  std::vector<Word> boundary_words;  // over the vertex presentation
};

VertexSpec plain_vertex(std::string id, Presentation p);
VertexSpec surface_vertex(std::string id, const SurfaceDatum& datum,
                          const SurfacePresentation& sp);

// An edge with infinite cyclic edge group; the two embeddings name the
// generator's images in the endpoint groups.  At a surface endpoint the
// embedding must be one of the designated boundary words, verbatim.
struct EdgeSpec {
  std::string id;
  std::string from, to;
  Word embed_from, embed_to;
  bool tree = false;
  std::string stable_letter;  // required exactly when tree is false
};

struct GraphOfGroups {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;

  const VertexSpec* vertex(const std::string& id) const;
};

struct StructureReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// Shape checks: unique ids, bipartite edges, designated tree edges forming a
// spanning tree, stable letters on non-tree edges only, surface embeddings
// hitting designated boundary words, no boundary word used twice, no clash
// between generator names and stable letters.
StructureReport validate_structure(const GraphOfGroups& g);

// The fundamental group of the graph of groups, with single-generator
// boundary identifications Tietze-eliminated.
struct InducedPresentation {
  Presentation presentation;
  std::vector<std::string> stable_letters;
  // every vertex generator -> its word in the final generators
  std::map<std::string, Word> vertex_gen_images;
};

InducedPresentation induced_presentation(const GraphOfGroups& g);

// Disjoint union of the plain vertex presentations, in vertex order.
Presentation plain_concatenation(const GraphOfGroups& g);

// Word-problem model of the free product of the plain vertex groups.
ModelRef plain_vertex_free_product(const GraphOfGroups& g);

}  // namespace hyptower
