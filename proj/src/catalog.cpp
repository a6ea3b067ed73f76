#include "hyptower/catalog.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "hyptower/whitehead.hpp"

namespace hyptower {

namespace {

VertexSpec make_surface_vertex(const std::string& id, const SurfaceDatum& d,
                               const std::vector<std::string>& names) {
  return surface_vertex(id, d, renamed(standard_presentation(d), names));
}

// Edge from a plain vertex onto a designated boundary circle of a surface
// vertex.
EdgeSpec boundary_edge(const GraphOfGroups& g, const std::string& id, const std::string& plain,
                       const std::string& surface, const std::string& plain_text,
                       int boundary_index, bool tree, const std::string& stable = "") {
  const VertexSpec* vp = g.vertex(plain);
  const VertexSpec* vs = g.vertex(surface);
  if (!vp || !vs) throw Error("edge endpoints missing");
  EdgeSpec e;
  e.id = id;
  e.from = plain;
  e.to = surface;
  e.embed_from = parse_word(vp->presentation.generators, plain_text);
  e.embed_to = vs->boundary_words.at(boundary_index);
  e.tree = tree;
  e.stable_letter = stable;
  return e;
}

bool check_failed(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return !c.passed;
  return false;
}

}  // namespace

FloorCandidate moebius_floor_candidate() {
  GraphOfGroups g;
  g.vertices.push_back(plain_vertex("H", make_presentation({"h"}, {})));
  g.vertices.push_back(make_surface_vertex("S", surface_datum(false, -2, 1), {"a", "b", "c"}));
  g.edges.push_back(boundary_edge(g, "e", "H", "S", "h h", 0, true));
  FloorCandidate c;
  c.decomposition = std::move(g);
  c.retraction_images = {{"h", "h"}, {"a", "h"}, {"b", "1"}, {"c", "1"}};
  c.extended_letter = "x";
  c.extended_retraction_images = {
      {"h", "h"}, {"a", "h"}, {"b", "x"}, {"c", "x^-1"}, {"x", "x"}};
  return c;
}

FloorCandidate klein_floor_candidate() {
  GraphOfGroups g;
  g.vertices.push_back(plain_vertex("H", make_presentation({"h"}, {})));
  g.vertices.push_back(make_surface_vertex("S", surface_datum(false, -2, 2), {"a", "b", "g"}));
  g.edges.push_back(boundary_edge(g, "e1", "H", "S", "h", 0, true));
  g.edges.push_back(boundary_edge(g, "e2", "H", "S", "h", 1, false, "t"));
  FloorCandidate c;
  c.decomposition = std::move(g);
  c.retraction_images = {{"h", "h"}, {"a", "h"}, {"b", "1"}, {"t", "1"}};
  c.extended_letter = "x";
  c.extended_retraction_images = {
      {"h", "h"}, {"a", "h x"}, {"b", "x^-1"}, {"t", "x"}, {"x", "x"}};
  return c;
}

FloorCandidate orientable_template_candidate(int genus) {
  if (genus < 2) throw Error("template needs genus at least 2");
  GraphOfGroups g;
  g.vertices.push_back(plain_vertex("P", make_presentation({"a1", "b1"}, {})));
  std::vector<std::string> names;
  for (int i = 2; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  g.vertices.push_back(
      make_surface_vertex("S", surface_datum(true, 3 - 2 * genus, 1), names));
  g.edges.push_back(boundary_edge(g, "e", "P", "S", "b1 a1 b1^-1 a1^-1", 0, true));
  FloorCandidate c;
  c.decomposition = std::move(g);
  c.retraction_images = {{"a1", "a1"}, {"b1", "b1"}, {"a2", "b1"}, {"b2", "a1"}};
  for (int i = 3; i <= genus; ++i) {
    c.retraction_images["a" + std::to_string(i)] = "1";
    c.retraction_images["b" + std::to_string(i)] = "1";
  }
  return c;
}

FloorCandidate nonorientable_template_candidate(int crosscaps) {
  if (crosscaps < 3) throw Error("template needs at least three crosscaps");
  GraphOfGroups g;
  g.vertices.push_back(plain_vertex("P", make_presentation({"d1", "d2"}, {})));
  std::vector<std::string> names;
  for (int i = 3; i <= crosscaps; ++i) names.push_back("d" + std::to_string(i));
  g.vertices.push_back(
      make_surface_vertex("S", surface_datum(false, 3 - crosscaps, 1), names));
  g.edges.push_back(boundary_edge(g, "e", "P", "S", "d2^-1 d2^-1 d1^-1 d1^-1", 0, true));
  FloorCandidate c;
  c.decomposition = std::move(g);
  c.retraction_images = {{"d1", "d1"}, {"d2", "d2"}, {"d3", "d2^-1"}, {"d4", "d1^-1"}};
  for (int i = 5; i <= crosscaps; ++i) c.retraction_images["d" + std::to_string(i)] = "1";
  if (crosscaps == 3) c.retraction_images.erase("d4");
  return c;
}

FloorCandidate nonorientable_companion_candidate() {
  // Four crosscaps: one plain vertex carrying Z * (genus-2 surface group), so
  // the single Moebius-boundary piece can land on a nonabelian image.
  GraphOfGroups g;
  g.vertices.push_back(plain_vertex(
      "P", make_presentation({"h", "e1", "e2", "e3", "e4"},
                             {"e1 e2 e1^-1 e2^-1 e3 e4 e3^-1 e4^-1"})));
  g.vertices.push_back(make_surface_vertex("S", surface_datum(false, -2, 1), {"a", "b", "c"}));
  g.edges.push_back(boundary_edge(g, "e", "P", "S", "h h", 0, true));
  FloorCandidate c;
  c.decomposition = std::move(g);
  c.retraction_images = {{"h", "h"},  {"e1", "e1"}, {"e2", "e2"}, {"e3", "e3"},
                         {"e4", "e4"}, {"a", "h"},   {"b", "e1"},  {"c", "e1^-1"}};
  return c;
}

FloorCandidate genus2_over_torus_candidate() {
  GraphOfGroups g;
  g.vertices.push_back(plain_vertex("P", make_presentation({"a0", "b0"}, {})));
  g.vertices.push_back(make_surface_vertex("S", surface_datum(true, -1, 1), {"a1", "b1"}));
  g.edges.push_back(boundary_edge(g, "e", "P", "S", "b0 a0 b0^-1 a0^-1", 0, true));
  FloorCandidate c;
  c.decomposition = std::move(g);
  c.retraction_images = {{"a0", "a0"}, {"b0", "b0"}, {"a1", "b0"}, {"b1", "a0"}};
  return c;
}

FloorCandidate h1_floor_candidate() {
  GraphOfGroups g;
  g.vertices.push_back(plain_vertex("P", make_presentation({"a", "b", "z"}, {})));
  g.vertices.push_back(make_surface_vertex("S", surface_datum(true, -1, 1), {"ap", "bp"}));
  g.edges.push_back(boundary_edge(g, "e", "P", "S", "b a b^-1 a^-1", 0, true));
  FloorCandidate c;
  c.decomposition = std::move(g);
  c.retraction_images = {{"a", "a"}, {"b", "b"}, {"z", "z"}, {"ap", "b"}, {"bp", "a"}};
  return c;
}

FloorCandidate h2_floor_candidate() {
  GraphOfGroups g;
  g.vertices.push_back(plain_vertex("P2", make_presentation({"a", "w"}, {})));
  g.vertices.push_back(
      make_surface_vertex("S4", surface_datum(true, -2, 4), {"c1", "c2", "c3"}));
  g.edges.push_back(boundary_edge(g, "e1", "P2", "S4", "a", 0, true));
  g.edges.push_back(boundary_edge(g, "e2", "P2", "S4", "a^-1", 1, false, "s2"));
  g.edges.push_back(boundary_edge(g, "e3", "P2", "S4", "w", 2, false, "s3"));
  g.edges.push_back(boundary_edge(g, "e4", "P2", "S4", "w^-1", 3, false, "s4"));
  FloorCandidate c;
  c.decomposition = std::move(g);
  c.retraction_images = {{"a", "a"},   {"w", "w"},   {"c2", "a^-1"}, {"c3", "w"},
                         {"s2", "1"},  {"s3", "1"},  {"s4", "1"}};
  return c;
}

namespace {

VerificationReport run_floor_entry(const FloorCandidate& c, const VerifyOptions& opts) {
  return verify_floor(c, opts);
}

VerificationReport run_s4_tower(const VerifyOptions& opts) {
  TowerCandidate t;
  t.floors.push_back(moebius_floor_candidate());
  t.ground.base = make_presentation({"h"}, {});
  t.roles.push_back({"H", "base"});
  return verify_tower(t, opts);
}

VerificationReport run_zs_trivial_tower(const VerifyOptions& opts) {
  TowerCandidate t;
  t.ambient = make_presentation({"z", "e1", "e2", "e3", "e4"},
                                {"e1 e2 e1^-1 e2^-1 e3 e4 e3^-1 e4^-1"});
  t.ground.free_rank = 1;
  t.ground.surfaces.push_back(surface_datum(true, -2, 0));
  t.parts.push_back({"free", {"z"}});
  t.parts.push_back({"surface:0", {"e1", "e2", "e3", "e4"}});
  return verify_tower(t, opts);
}

VerificationReport run_zs_h1_tower(const VerifyOptions& opts) {
  TowerCandidate t;
  t.floors.push_back(h1_floor_candidate());
  t.ground.base = make_presentation({"a", "b", "z"}, {});
  t.roles.push_back({"P", "base"});
  return verify_tower(t, opts);
}

VerificationReport run_zs_h2_tower(const VerifyOptions& opts) {
  TowerCandidate t;
  t.floors.push_back(h2_floor_candidate());
  t.ground.base = make_presentation({"a", "w"}, {});
  t.roles.push_back({"P2", "base"});
  return verify_tower(t, opts);
}

VerificationReport run_s4_profiles(const VerifyOptions&) {
  VerificationReport rep;
  rep.verdict = "rejected";
  auto profiles = enumerate_floor_profiles(surface_datum(false, -2, 0), 4);
  rep.add("profile-count", profiles.size() == 11,
          std::to_string(profiles.size()) + " profiles for the four-crosscap surface");

  const SurfaceDatum pt = surface_datum(true, -1, 1);
  const SurfaceDatum cyl = surface_datum(true, 0, 2);
  const SurfaceDatum pk = surface_datum(false, -1, 1);
  int two_tori = 0, one_torus = 0, chi_minus_two = 0, other = 0;
  bool two_tori_tagged = false, one_torus_shape = false;
  for (const auto& p : profiles) {
    const auto& s = p.surface_pieces;
    if (s.size() == 2 && s[0] == pt && s[1] == pt) {
      ++two_tori;
      two_tori_tagged = p.rejected_for_orientability &&
                        p.complement_pieces == std::vector<SurfaceDatum>{cyl};
    } else if (s.size() == 1 && s[0] == pt) {
      ++one_torus;
      one_torus_shape = !p.rejected_for_orientability &&
                        p.complement_pieces == std::vector<SurfaceDatum>{pk};
    } else if (s.size() == 1 && s[0].euler == -2 && !p.rejected_for_orientability) {
      ++chi_minus_two;
    } else {
      ++other;
    }
  }
  rep.add("family-two-tori", two_tori == 1 && two_tori_tagged,
          "one shape, ruled out by orientability of the gluing");
  rep.add("family-one-torus", one_torus == 1 && one_torus_shape,
          "complement is the once-punctured Klein bottle");
  rep.add("family-chi-minus-two", chi_minus_two == 9 && other == 0,
          std::to_string(chi_minus_two) + " single-piece profiles at chi = -2");
  if (rep.ok()) rep.verdict = "case analysis reproduced";
  return rep;
}

VerificationReport run_zs_profiles(const VerifyOptions&) {
  VerificationReport rep;
  rep.verdict = "rejected";
  std::vector<SurfaceDatum> expected{surface_datum(true, 0, 2), surface_datum(true, -1, 3)};
  auto check_one = [&](const std::string& label, const SurfaceDatum& ambient) {
    auto subs = proper_subsurface_data(ambient);
    bool same = subs == expected;
    std::ostringstream got;
    for (const auto& d : subs) got << to_string(d) << " ";
    rep.add(label + "-subsurfaces", same, got.str());
    bool none = true;
    for (const auto& d : subs)
      if (!d.closed() && is_floor_admissible(d)) none = false;
    rep.add(label + "-none-admissible", none);
  };
  check_one("punctured-torus", surface_datum(true, -1, 1));
  check_one("four-punctured-sphere", surface_datum(true, -2, 4));
  if (rep.ok()) rep.verdict = "no admissible proper subsurface";
  return rep;
}

VerificationReport run_pk_obstruction(const VerifyOptions&) {
  VerificationReport rep;
  rep.verdict = "rejected";
  AlphabetRef f2 = Alphabet::make({"d1", "d2"});
  Word torus_bd = commutator(parse_word(f2, "d1"), parse_word(f2, "d2"));
  rep.add("torus-boundary-splits", genus_one_commutator_witness(torus_bd).has_value(),
          to_string(torus_bd) + " is a commutator");
  Word klein_bd = parse_word(f2, "d1 d1 d2 d2");
  rep.add("klein-boundary-not-a-commutator",
          !genus_one_commutator_witness(klein_bd).has_value(),
          to_string(klein_bd) + " admits no genus-one splitting");
  Presentation p = make_presentation({"a", "b", "d1", "d2"},
                                     {"a b a^-1 b^-1 d2^-1 d2^-1 d1^-1 d1^-1"});
  ModelRef free2 = std::make_shared<FreeModel>(f2);
  GroupMap cand = make_map(p, free2,
                           std::map<std::string, std::string>{
                               {"a", "d1"}, {"b", "d2"}, {"d1", "d1"}, {"d2", "d2"}});
  std::string why;
  bool hom = verify_homomorphism(cand, &why);
  rep.add("sample-retraction-fails", !hom, why);
  if (rep.ok()) rep.verdict = "obstruction certified";
  return rep;
}

VerificationReport run_nonorientable_4(const VerifyOptions& opts) {
  VerificationReport rep;
  rep.verdict = "rejected";
  VerificationReport naive = verify_floor(nonorientable_template_candidate(4), opts);
  rep.add("naive-splitting-rejected",
          naive.verdict == "rejected" && check_failed(naive, "surface-pieces-admissible"),
          "the once-punctured Klein bottle piece is not admissible");
  VerificationReport ext = verify_floor(moebius_floor_candidate(), opts);
  rep.add("moebius-extended-accepted",
          ext.ok() && ext.verdict == "extended hyperbolic floor", ext.verdict);
  VerificationReport comp = verify_floor(nonorientable_companion_candidate(), opts);
  rep.add("companion-splitting-accepted", comp.ok() && comp.verdict == "hyperbolic floor",
          comp.verdict);
  if (rep.ok()) rep.verdict = "companion certificates accepted";
  return rep;
}

VerificationReport run_s2_basis_commutators(const VerifyOptions&) {
  VerificationReport rep;
  rep.verdict = "rejected";
  AlphabetRef f2 = Alphabet::make({"a", "b"});
  Word a = parse_word(f2, "a"), b = parse_word(f2, "b");
  CyclicWord target(commutator(a, b));
  CyclicWord target_inv(invert(commutator(a, b)));

  std::vector<std::pair<Word, Word>> bases{
      {a, compose(a, b)},
      {conjugate(a, b), b},
      {compose(invert(b), a), b},
      {invert(a), invert(b)},
  };
  bool recognized = true, conjugacy = true;
  for (const auto& [x, y] : bases) {
    if (!is_basis({x, y}, 2)) recognized = false;
    CyclicWord c(commutator(x, y));
    if (c != target && c != target_inv) conjugacy = false;
  }
  rep.add("sample-bases-recognized", recognized);
  rep.add("basis-commutators-conjugate", conjugacy,
          "each [x, y] is conjugate to [a, b] or its inverse");

  std::vector<std::pair<Word, Word>> non_bases{
      {compose(a, a), b},
      {conjugate(a, b), conjugate(b, a)},
  };
  bool rejected = true;
  for (const auto& [x, y] : non_bases)
    if (is_basis({x, y}, 2)) rejected = false;
  rep.add("non-bases-rejected", rejected);
  CyclicWord sq(commutator(compose(a, a), b));
  rep.add("non-basis-commutator-outside-class", sq != target && sq != target_inv,
          to_string(sq));
  if (rep.ok()) rep.verdict = "single conjugacy class";
  return rep;
}

VerificationReport run_s2_floor(const VerifyOptions& opts) {
  FloorCandidate c = genus2_over_torus_candidate();
  VerificationReport rep = verify_floor(c, opts);
  SurfacePresentation g2 = renamed(standard_presentation(surface_datum(true, -2, 0)),
                                   {"a0", "b0", "a1", "b1"});
  Presentation ind = induced_presentation(c.decomposition).presentation;
  bool shape = same_presentation(ind, g2.presentation);
  rep.add("ambient-is-genus-2-standard", shape, to_string(ind));
  if (!shape) rep.verdict = "rejected";
  return rep;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  auto floor_entry = [](std::string name, std::string desc, std::string expected,
                        std::function<FloorCandidate()> make) {
    return CatalogEntry{std::move(name), std::move(desc), std::move(expected),
                        [make](const VerifyOptions& o) { return run_floor_entry(make(), o); }};
  };

  out.push_back(floor_entry(
      "s4-moebius-floor",
      "four-crosscap surface group split along a Moebius-type circle over Z",
      "extended hyperbolic floor", [] { return moebius_floor_candidate(); }));
  out.push_back(floor_entry(
      "s4-klein-floor",
      "four-crosscap surface group split along a Klein-type circle over Z",
      "extended hyperbolic floor", [] { return klein_floor_candidate(); }));
  out.push_back(CatalogEntry{
      "s4-punctured-klein-obstruction",
      "the once-punctured Klein bottle cannot sit over Z: its boundary is no commutator",
      "obstruction certified", run_pk_obstruction});
  out.push_back(CatalogEntry{
      "s4-profiles",
      "all splitting profiles of the four-crosscap surface fall into three families",
      "case analysis reproduced", run_s4_profiles});
  out.push_back(CatalogEntry{"s4-tower",
                             "one extended Moebius-type floor over the cyclic base",
                             "extended hyperbolic tower", run_s4_tower});
  out.push_back(CatalogEntry{
      "zs-trivial-tower",
      "Z * (genus-2 surface group) is itself a ground level over the trivial group",
      "hyperbolic tower over the trivial group", run_zs_trivial_tower});
  out.push_back(CatalogEntry{
      "zs-h1-tower",
      "Z * (genus-2 surface group) as a torus floor over a rank-3 free base",
      "hyperbolic tower", run_zs_h1_tower});
  out.push_back(CatalogEntry{
      "zs-h2-tower",
      "Z * (genus-2 surface group) as a four-punctured-sphere floor over a rank-2 free base",
      "hyperbolic tower", run_zs_h2_tower});
  out.push_back(CatalogEntry{
      "zs-profiles",
      "no proper subsurface of the floor pieces could serve as a smaller floor",
      "no admissible proper subsurface", run_zs_profiles});
  for (int g = 2; g <= 4; ++g) {
    out.push_back(floor_entry(
        "p0-template-orientable-" + std::to_string(g),
        "genus-" + std::to_string(g) + " surface group as a floor over a free group",
        "hyperbolic floor", [g] { return orientable_template_candidate(g); }));
  }
  for (int p = 5; p <= 8; ++p) {
    out.push_back(floor_entry(
        "p0-template-nonorientable-" + std::to_string(p),
        std::to_string(p) + "-crosscap surface group as a floor over a free group",
        "hyperbolic floor", [p] { return nonorientable_template_candidate(p); }));
  }
  out.push_back(CatalogEntry{
      "p0-template-nonorientable-4",
      "the naive four-crosscap template fails; extended and companion splittings succeed",
      "companion certificates accepted", run_nonorientable_4});
  out.push_back(CatalogEntry{
      "s2-basis-commutators",
      "commutators of bases of the rank-2 free group form one conjugacy class up to inversion",
      "single conjugacy class", run_s2_basis_commutators});
  out.push_back(CatalogEntry{
      "s2-floor-structure",
      "the closed genus-2 group is a floor over the free group of its first handle",
      "hyperbolic floor", run_s2_floor});

  std::sort(out.begin(), out.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

std::vector<std::string> list_entries() {
  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);
  return names;
}

EntryOutcome run_entry(const std::string& name, const VerifyOptions& opts) {
  for (const auto& e : catalog_entries()) {
    if (e.name != name) continue;
    EntryOutcome out;
    out.name = e.name;
    out.expected_verdict = e.expected_verdict;
    out.report = e.run(opts);
    out.as_expected = out.report.ok() && out.report.verdict == e.expected_verdict;
    return out;
  }
  throw Error("no catalog entry named '" + name + "'");
}

std::vector<EntryOutcome> run_all(int jobs, const VerifyOptions& opts) {
  const auto& entries = catalog_entries();
  std::vector<EntryOutcome> out(entries.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < entries.size(); ++i) out[i] = run_entry(entries[i].name, opts);
    return out;
  }
  std::vector<std::future<EntryOutcome>> futures;
  for (const auto& e : entries)
    futures.push_back(std::async(std::launch::async,
                                 [&e, opts] { return run_entry(e.name, opts); }));
  for (size_t i = 0; i < futures.size(); ++i) out[i] = futures[i].get();
  return out;
}

}  // namespace hyptower
