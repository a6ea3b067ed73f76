#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyptower/towers.hpp"

namespace hyptower {

// Floor and tower declarations in a document refer to earlier declarations by
// name; resolution into verifier candidates happens on demand.
struct DocFloor {
  std::string decomposition;
  std::string retraction;
  std::string extended_letter;       // empty when absent
  std::string extended_retraction;   // empty when absent
};

struct DocWitness {
  int floor = 0;
  std::string vertex;
  std::string generator;
  std::string text;
};

struct DocTower {
  std::vector<std::string> floors;
  std::string ambient;  // presentation name, empty when absent
  std::string base;     // presentation name, empty for a trivial base
  int free_rank = 0;
  std::vector<SurfaceDatum> ground_surfaces;
  std::vector<VertexRole> roles;
  std::vector<GroundPart> parts;
  std::vector<DocWitness> witnesses;
};

struct InputDocument {
  std::vector<std::pair<std::string, Presentation>> presentations;
  std::vector<std::pair<std::string, SurfaceDatum>> surfaces;
  std::vector<std::pair<std::string, std::map<std::string, std::string>>> maps;
  std::vector<std::pair<std::string, GraphOfGroups>> decompositions;
  std::vector<std::pair<std::string, DocFloor>> floors;
  std::vector<std::pair<std::string, DocTower>> towers;

  const Presentation* find_presentation(const std::string& name) const;
  const SurfaceDatum* find_surface(const std::string& name) const;
  const std::map<std::string, std::string>* find_map(const std::string& name) const;
  const GraphOfGroups* find_decomposition(const std::string& name) const;
  const DocFloor* find_floor(const std::string& name) const;
  const DocTower* find_tower(const std::string& name) const;
};

// Throws ParseError with line/column on malformed input. References must be
// declared before use.
InputDocument parse_document(const std::string& text);

// Reads and parses a file; throws Error if it cannot be read.
InputDocument load_document(const std::string& path);

// Canonical form; parsing it back yields a document that prints identically.
std::string print_document(const InputDocument& doc);

FloorCandidate resolve_floor(const InputDocument& doc, const std::string& name);
TowerCandidate resolve_tower(const InputDocument& doc, const std::string& name);

}  // namespace hyptower
