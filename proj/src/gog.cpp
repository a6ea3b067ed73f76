#include "hyptower/gog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace hyptower {

VertexSpec plain_vertex(std::string id, Presentation p) {
  VertexSpec v;
  v.id = std::move(id);
  v.is_surface = false;
  v.presentation = std::move(p);
  return v;
}

VertexSpec surface_vertex(std::string id, const SurfaceDatum& datum,
                          const SurfacePresentation& sp) {
  VertexSpec v;
  v.id = std::move(id);
  v.is_surface = true;
  v.datum = datum;
  v.presentation = sp.presentation;
  v.boundary_words = sp.boundary_words;
  return v;
}

const VertexSpec* GraphOfGroups::vertex(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

namespace {

int expected_surface_rank(const SurfaceDatum& d) {
  int core = d.orientable ? 2 * orientable_genus(d) : crosscap_count(d);
  return core + (d.boundary - 1);
}

}  // namespace

StructureReport validate_structure(const GraphOfGroups& g) {
  StructureReport rep;
  auto problem = [&](const std::string& p) {
    rep.ok = false;
    rep.problems.push_back(p);
  };

  if (g.vertices.empty()) problem("no vertices");
  std::set<std::string> vertex_ids;
  std::set<std::string> gen_names;
  for (const auto& v : g.vertices) {
    if (v.id.empty()) problem("vertex with empty id");
    if (!vertex_ids.insert(v.id).second) problem("duplicate vertex id '" + v.id + "'");
    if (!v.presentation.generators) {
      problem("vertex '" + v.id + "' has no generator alphabet");
      continue;
    }
    for (const auto& n : v.presentation.generators->names())
      if (!gen_names.insert(n).second)
        problem("generator name '" + n + "' appears in two vertices");
    if (v.is_surface) {
      if (!v.datum) {
        problem("surface vertex '" + v.id + "' has no surface datum");
        continue;
      }
      if (!valid_surface_datum(*v.datum))
        problem("surface vertex '" + v.id + "' has an invalid datum");
      else if (v.datum->closed())
        problem("surface vertex '" + v.id + "' must have boundary");
      else {
        if (!v.presentation.relators.empty())
          problem("surface vertex '" + v.id + "' must carry a free presentation");
        if (v.presentation.rank() != expected_surface_rank(*v.datum))
          problem("surface vertex '" + v.id + "' has rank " +
                  std::to_string(v.presentation.rank()) + ", expected " +
                  std::to_string(expected_surface_rank(*v.datum)));
        if (static_cast<int>(v.boundary_words.size()) != v.datum->boundary)
          problem("surface vertex '" + v.id + "' needs one designated word per boundary circle");
        for (const auto& w : v.boundary_words)
          if (w.empty()) problem("surface vertex '" + v.id + "' has an empty boundary word");
      }
    }
  }

  std::set<std::string> edge_ids, stable;
  int tree_count = 0;
  // usage[vertex id] = indices of boundary words already matched
  std::map<std::string, std::set<int>> used_boundaries;
  for (const auto& e : g.edges) {
    if (e.id.empty()) problem("edge with empty id");
    if (!edge_ids.insert(e.id).second) problem("duplicate edge id '" + e.id + "'");
    const VertexSpec* vf = g.vertex(e.from);
    const VertexSpec* vt = g.vertex(e.to);
    if (!vf || !vt) {
      problem("edge '" + e.id + "' references a missing vertex");
      continue;
    }
    if (vf->is_surface == vt->is_surface)
      problem("edge '" + e.id + "' must join a surface vertex to a plain vertex");
    if (e.tree) {
      ++tree_count;
      if (!e.stable_letter.empty())
        problem("tree edge '" + e.id + "' must not carry a stable letter");
    } else {
      if (e.stable_letter.empty())
        problem("non-tree edge '" + e.id + "' needs a stable letter");
      else {
        if (!stable.insert(e.stable_letter).second)
          problem("duplicate stable letter '" + e.stable_letter + "'");
        if (gen_names.count(e.stable_letter))
          problem("stable letter '" + e.stable_letter + "' clashes with a vertex generator");
      }
    }
    auto check_end = [&](const VertexSpec* v, const Word& w, const char* which) {
      if (w.empty()) {
        problem("edge '" + e.id + "' has an empty " + which + " embedding");
        return;
      }
      try {
        (void)translate(w, v->presentation.generators);
      } catch (const AlphabetMismatch&) {
        problem("edge '" + e.id + "' " + which + " embedding is not over vertex '" + v->id + "'");
        return;
      }
      if (v->is_surface) {
        int found = -1;
        for (size_t i = 0; i < v->boundary_words.size(); ++i) {
          if (used_boundaries[v->id].count(static_cast<int>(i))) continue;
          if (v->boundary_words[i] == w) {
            found = static_cast<int>(i);
            break;
          }
        }
        if (found < 0)
          problem("edge '" + e.id + "' does not embed onto an unused designated boundary word of '" +
                  v->id + "'");
        else
          used_boundaries[v->id].insert(found);
      }
    };
    check_end(vf, e.embed_from, "from");
    check_end(vt, e.embed_to, "to");
  }

  // Designated tree edges must form a spanning tree.
  if (!g.vertices.empty()) {
    if (tree_count != static_cast<int>(g.vertices.size()) - 1)
      problem("tree edges must number one less than the vertices");
    std::map<std::string, int> index;
    for (const auto& v : g.vertices) index[v.id] = static_cast<int>(index.size());
    std::vector<int> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& e : g.edges) {
      if (!e.tree || !index.count(e.from) || !index.count(e.to)) continue;
      int a = find(index.at(e.from)), b = find(index.at(e.to));
      if (a == b)
        problem("tree edges contain a cycle through '" + e.id + "'");
      else
        parent[a] = b;
    }
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    if (roots.size() > 1) problem("tree edges do not connect the graph");
  }

  return rep;
}

namespace {

Word substitute(const Word& w, Sym gen, const Word& replacement) {
  std::vector<Sym> out;
  for (Sym s : w.syms()) {
    if (s == gen)
      out.insert(out.end(), replacement.syms().begin(), replacement.syms().end());
    else if (s == -gen)
      for (auto it = replacement.syms().rbegin(); it != replacement.syms().rend(); ++it)
        out.push_back(-*it);
    else
      out.push_back(s);
  }
  return Word(w.alphabet(), std::move(out));
}

}  // namespace

InducedPresentation induced_presentation(const GraphOfGroups& g) {
  StructureReport sr = validate_structure(g);
  if (!sr.ok) throw Error("invalid graph of groups: " + sr.problems.front());

  std::vector<std::string> names;
  for (const auto& v : g.vertices)
    for (const auto& n : v.presentation.generators->names()) names.push_back(n);
  std::vector<std::string> stable_letters;
  for (const auto& e : g.edges)
    if (!e.tree) {
      names.push_back(e.stable_letter);
      stable_letters.push_back(e.stable_letter);
    }
  AlphabetRef full = Alphabet::make(names);

  struct Rel {
    Word w;
    bool consumed = false;
  };
  std::vector<Rel> relators;
  for (const auto& v : g.vertices)
    for (const auto& r : v.presentation.relators)
      relators.push_back({translate(r.representative(), full)});

  struct EdgeRel {
    Word w;
    bool consumed = false;
    bool tree;
    const EdgeSpec* e;
  };
  std::vector<EdgeRel> edge_relators;
  for (const auto& e : g.edges) {
    Word wf = translate(e.embed_from, full);
    Word wt = translate(e.embed_to, full);
    if (e.tree) {
      edge_relators.push_back({compose(invert(wf), wt), false, true, &e});
    } else {
      Word t = parse_word(full, e.stable_letter);
      edge_relators.push_back(
          {compose(compose(t, wf), compose(invert(t), invert(wt))), false, false, &e});
    }
  }

  // Tietze pass: a tree edge whose surface-side embedding is a single
  // generator pins that generator to the plain-side word; eliminate it.
  std::set<std::string> surface_gens;
  for (const auto& v : g.vertices)
    if (v.is_surface)
      for (const auto& n : v.presentation.generators->names()) surface_gens.insert(n);

  std::map<std::string, Word> substitutions;  // eliminated gen -> word over `full`
  std::set<int> eliminated;                   // indices in `full`
  for (auto& er : edge_relators) {
    if (!er.tree) continue;
    const EdgeSpec& e = *er.e;
    const VertexSpec* vf = g.vertex(e.from);
    bool from_is_surface = vf->is_surface;
    Word sw = translate(from_is_surface ? e.embed_from : e.embed_to, full);
    Word pw = translate(from_is_surface ? e.embed_to : e.embed_from, full);
    if (sw.size() != 1) continue;
    Sym s = sw.at(0);
    int gen_index = std::abs(s) - 1;
    const std::string& gname = full->name(gen_index);
    if (!surface_gens.count(gname) || eliminated.count(gen_index)) continue;
    // relation: surface word = plain word, so gen = plain word ^ (sign)
    Word def = s > 0 ? pw : invert(pw);
    // plain-side words never mention surface generators, so no cascading
    substitutions[gname] = def;
    eliminated.insert(gen_index);
    er.consumed = true;
    Sym gen = static_cast<Sym>(gen_index + 1);
    for (auto& r : relators) r.w = substitute(r.w, gen, def);
    for (auto& other : edge_relators)
      if (!other.consumed) other.w = substitute(other.w, gen, def);
  }

  std::vector<std::string> final_names;
  for (int i = 0; i < full->size(); ++i)
    if (!eliminated.count(i)) final_names.push_back(full->name(i));
  AlphabetRef final_alpha = Alphabet::make(final_names);

  InducedPresentation out;
  out.presentation.generators = final_alpha;
  out.stable_letters = std::move(stable_letters);
  auto push_relator = [&](const Word& w) {
    if (w.empty()) return;
    out.presentation.relators.emplace_back(translate(w, final_alpha));
  };
  for (const auto& r : relators) push_relator(r.w);
  for (const auto& er : edge_relators)
    if (!er.consumed) push_relator(er.w);

  for (const auto& v : g.vertices) {
    for (const auto& n : v.presentation.generators->names()) {
      auto it = substitutions.find(n);
      if (it != substitutions.end())
        out.vertex_gen_images[n] = translate(it->second, final_alpha);
      else
        out.vertex_gen_images[n] = parse_word(final_alpha, n);
    }
  }
  return out;
}

Presentation plain_concatenation(const GraphOfGroups& g) {
  std::vector<Presentation> parts;
  for (const auto& v : g.vertices)
    if (!v.is_surface) parts.push_back(v.presentation);
  if (parts.empty()) throw Error("graph of groups has no plain vertex");
  return concatenated(parts);
}

ModelRef plain_vertex_free_product(const GraphOfGroups& g) {
  return model_for(plain_concatenation(g));
}

}  // namespace hyptower
