#include "hyptower/towers.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace hyptower {

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << sep;
    out << v[i];
  }
  return out.str();
}

Word random_reduced_word(const AlphabetRef& alpha, int max_len, std::mt19937_64& rng) {
  int n = alpha->size();
  if (n == 0 || max_len <= 0) return Word(alpha);
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_len));
  std::vector<Sym> syms;
  for (int i = 0; i < len; ++i) {
    while (true) {
      int g = 1 + static_cast<int>(rng() % static_cast<unsigned long long>(n));
      Sym s = (rng() & 1) ? static_cast<Sym>(g) : -static_cast<Sym>(g);
      if (!syms.empty() && syms.back() == -s) continue;
      syms.push_back(s);
      break;
    }
  }
  return Word(alpha, std::move(syms));
}

// r(inclusion(u)) must equal u for randomly sampled reduced words u over the
// included free-product generators.
bool sample_retraction(const GroupMap& r, const GroupMap& inclusion, const VerifyOptions& opts,
                       std::string* detail) {
  std::mt19937_64 rng(opts.seed);
  const AlphabetRef& alpha = inclusion.source.generators;
  for (int i = 0; i < opts.sample_count; ++i) {
    Word u = random_reduced_word(alpha, opts.sample_max_length, rng);
    Word ambient = translate(apply(inclusion, u), r.source.generators);
    Word v = apply(r, ambient);
    Word expected = translate(u, r.target->alphabet());
    if (!r.target->are_equal(v, expected)) {
      if (detail)
        *detail = "sample word " + to_string(u) + " returns as " + to_string(v);
      return false;
    }
  }
  if (detail)
    *detail = std::to_string(opts.sample_count) + " random words of length <= " +
              std::to_string(opts.sample_max_length) + " return unchanged";
  return true;
}

std::map<std::string, std::vector<Word>> surface_generator_images(
    const GraphOfGroups& g, const InducedPresentation& ind) {
  std::map<std::string, std::vector<Word>> out;
  for (const auto& v : g.vertices) {
    if (!v.is_surface) continue;
    std::vector<Word> words;
    for (const auto& name : v.presentation.generators->names())
      words.push_back(ind.vertex_gen_images.at(name));
    out[v.id] = std::move(words);
  }
  return out;
}

}  // namespace

VerificationReport verify_floor(const FloorCandidate& c, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.verdict = "rejected";

  StructureReport sr = validate_structure(c.decomposition);
  rep.add("structure", sr.ok, sr.ok ? "" : join(sr.problems, "; "));
  if (!sr.ok) return rep;

  {
    std::vector<std::string> bad;
    for (const auto& v : c.decomposition.vertices)
      if (v.is_surface && !is_floor_admissible(*v.datum))
        bad.push_back(v.id + " is " + to_string(*v.datum));
    rep.add("surface-pieces-admissible", bad.empty(), join(bad, "; "));
  }

  {
    bool has_surface = false, has_plain = false;
    for (const auto& v : c.decomposition.vertices)
      (v.is_surface ? has_surface : has_plain) = true;
    bool ok = has_surface && has_plain && !c.decomposition.edges.empty();
    rep.add("splitting-nontrivial", ok,
            ok ? "" : "need at least one edge, one surface vertex and one plain vertex");
  }
  if (!rep.ok()) return rep;

  InducedPresentation ind = induced_presentation(c.decomposition);
  Presentation plain = plain_concatenation(c.decomposition);

  ModelRef model;
  try {
    model = plain_vertex_free_product(c.decomposition);
    rep.add("plain-product-decidable", true, model->describe());
  } catch (const Error& e) {
    rep.add("plain-product-decidable", false, e.what());
    return rep;
  }

  GroupMap r;
  try {
    r = make_map(ind.presentation, model, c.retraction_images);
  } catch (const Error& e) {
    rep.add("retraction-map", false, e.what());
    return rep;
  }
  GroupMap inc = identity_inclusion(plain, ind.presentation);
  {
    std::string why;
    bool ok = verify_retraction(r, inc, &why);
    rep.add("retraction", ok, ok ? "fixes the plain product" : why);
    if (!ok) return rep;
  }
  {
    std::string detail;
    bool ok = sample_retraction(r, inc, opts, &detail);
    rep.add("retraction-samples", ok, detail);
    if (!ok) return rep;
  }

  auto surf_images = surface_generator_images(c.decomposition, ind);
  std::vector<std::string> abelian;
  for (const auto& [id, words] : surf_images)
    if (!nonabelian_image(r, words)) abelian.push_back(id);

  if (abelian.empty()) {
    rep.add("surface-images-nonabelian", true, "every surface vertex");
    rep.verdict = "hyperbolic floor";
    return rep;
  }

  if (!c.extended_letter) {
    rep.add("surface-images-nonabelian", false,
            "abelian retraction image at: " + join(abelian, ", "));
    return rep;
  }

  // Extended certificate: adjoin a fresh letter to both sides.
  rep.add("extended-certificate-engaged", true,
          "abelian retraction image at: " + join(abelian, ", "));
  {
    bool ic = is_infinite_cyclic(*model);
    rep.add("extended-plain-product-infinite-cyclic", ic, model->describe());
    if (!ic) return rep;
  }
  const std::string& letter = *c.extended_letter;
  Presentation ext_src;
  ModelRef ext_model;
  GroupMap r2;
  try {
    ext_src = adjoin_free_letter(ind.presentation, letter);
    ext_model = adjoin_free_letter(model, letter);
    r2 = make_map(ext_src, ext_model, c.extended_retraction_images);
  } catch (const Error& e) {
    rep.add("extended-retraction-map", false, e.what());
    return rep;
  }
  {
    Word img = r2.images[ext_src.rank() - 1];
    bool fixed = img.size() == 1 && img.at(0) > 0 && img.name_at(0) == letter;
    rep.add("extended-letter-fixed", fixed,
            "adjoined letter maps to " + to_string(img));
    if (!fixed) return rep;
  }
  GroupMap inc2 = identity_inclusion(adjoin_free_letter(plain, letter), ext_src);
  {
    std::string why;
    bool ok = verify_retraction(r2, inc2, &why);
    rep.add("extended-retraction", ok, ok ? "fixes the extended plain product" : why);
    if (!ok) return rep;
  }
  {
    std::string detail;
    bool ok = sample_retraction(r2, inc2, opts, &detail);
    rep.add("extended-retraction-samples", ok, detail);
    if (!ok) return rep;
  }
  {
    std::vector<std::string> still_abelian;
    for (const auto& [id, words] : surf_images) {
      std::vector<Word> lifted;
      for (const auto& w : words) lifted.push_back(translate(w, ext_src.generators));
      if (!nonabelian_image(r2, lifted)) still_abelian.push_back(id);
    }
    rep.add("extended-surface-images-nonabelian", still_abelian.empty(),
            still_abelian.empty() ? "every surface vertex"
                                  : "abelian image at: " + join(still_abelian, ", "));
    if (!still_abelian.empty()) return rep;
  }
  rep.verdict = "extended hyperbolic floor";
  return rep;
}

namespace {

bool base_is_trivial(const GroundSpec& g) {
  return !g.base.has_value() || g.base->rank() == 0;
}

// Checks one named part of the ground level against its role.
bool check_part(const std::string& role, const Presentation& part, const GroundSpec& ground,
                std::set<int>& surfaces_used, int& free_rank_seen, int& base_seen,
                std::string* why) {
  if (role == "base") {
    ++base_seen;
    if (base_is_trivial(ground)) {
      *why = "a base part was assigned but the base group is trivial";
      return false;
    }
    if (!same_presentation(part, *ground.base)) {
      *why = "base part " + to_string(part) + " differs from " + to_string(*ground.base);
      return false;
    }
    return true;
  }
  if (role == "free") {
    if (!part.relators.empty()) {
      *why = "free part " + to_string(part) + " has relators";
      return false;
    }
    free_rank_seen += part.rank();
    return true;
  }
  if (role.rfind("surface:", 0) == 0) {
    int idx = -1;
    try {
      idx = std::stoi(role.substr(8));
    } catch (const std::exception&) {
    }
    if (idx < 0 || idx >= static_cast<int>(ground.surfaces.size())) {
      *why = "role '" + role + "' names no declared surface";
      return false;
    }
    if (!surfaces_used.insert(idx).second) {
      *why = "surface " + std::to_string(idx) + " assigned twice";
      return false;
    }
    const SurfaceDatum& d = ground.surfaces[idx];
    if (!valid_surface_datum(d) || !d.closed() || d.euler > -2) {
      *why = "ground surface " + to_string(d) + " is not closed with chi <= -2";
      return false;
    }
    SurfacePresentation std_sp = standard_presentation(d);
    if (std_sp.presentation.rank() != part.rank()) {
      *why = "part rank " + std::to_string(part.rank()) + " does not fit " + to_string(d);
      return false;
    }
    SurfacePresentation rn = renamed(std_sp, part.generators->names());
    if (!same_presentation(rn.presentation, part)) {
      *why = "part " + to_string(part) + " is not the standard presentation of " + to_string(d);
      return false;
    }
    return true;
  }
  *why = "unknown role '" + role + "'";
  return false;
}

bool finish_ground_counts(const GroundSpec& ground, const std::set<int>& surfaces_used,
                          int free_rank_seen, int base_seen, std::string* why) {
  if (!base_is_trivial(ground) && base_seen != 1) {
    *why = "the base group must be assigned to exactly one part";
    return false;
  }
  if (base_is_trivial(ground) && base_seen != 0) {
    *why = "trivial base cannot be assigned a part";
    return false;
  }
  if (free_rank_seen != ground.free_rank) {
    *why = "free parts have total rank " + std::to_string(free_rank_seen) + ", declared " +
           std::to_string(ground.free_rank);
    return false;
  }
  if (static_cast<int>(surfaces_used.size()) != static_cast<int>(ground.surfaces.size())) {
    *why = "not every declared ground surface is assigned";
    return false;
  }
  return true;
}

// Extracts the sub-presentation supported on the given generators.
bool sub_presentation(const Presentation& p, const std::vector<std::string>& gens,
                      Presentation* out, std::string* why) {
  AlphabetRef alpha;
  try {
    alpha = Alphabet::make(gens);
  } catch (const Error& e) {
    *why = e.what();
    return false;
  }
  Presentation sub;
  sub.generators = alpha;
  for (const auto& r : p.relators) {
    const Word& rep = r.representative();
    bool inside = true, outside = true;
    for (int i = 0; i < rep.size(); ++i) {
      if (alpha->index_of(rep.name_at(i)))
        outside = false;
      else
        inside = false;
    }
    if (inside)
      sub.relators.emplace_back(translate(rep, alpha));
    else if (!outside) {
      *why = "relator " + to_string(r) + " crosses the part boundary";
      return false;
    }
  }
  *out = std::move(sub);
  return true;
}

}  // namespace

VerificationReport verify_tower(const TowerCandidate& c, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.verdict = "rejected";
  const size_t m = c.floors.size();

  if (m == 0) {
    if (!c.ambient) {
      rep.add("ambient-presentation", false, "a zero-floor tower needs an explicit presentation");
      return rep;
    }
    // The whole group must literally be base * free * surface groups.
    std::set<std::string> assigned;
    bool partition_ok = true;
    std::string why;
    for (const auto& part : c.parts)
      for (const auto& g : part.generators)
        if (!c.ambient->generators->index_of(g) || !assigned.insert(g).second) {
          partition_ok = false;
          why = "generator '" + g + "' is missing or assigned twice";
        }
    if (assigned.size() != static_cast<size_t>(c.ambient->rank())) {
      partition_ok = false;
      if (why.empty()) why = "parts do not cover every generator";
    }
    rep.add("ground-partition", partition_ok, why);
    if (!partition_ok) return rep;

    std::set<int> surfaces_used;
    int free_rank_seen = 0, base_seen = 0;
    bool parts_ok = true;
    for (const auto& part : c.parts) {
      Presentation sub;
      std::string part_why;
      if (!sub_presentation(*c.ambient, part.generators, &sub, &part_why) ||
          !check_part(part.role, sub, c.ground, surfaces_used, free_rank_seen, base_seen,
                      &part_why)) {
        parts_ok = false;
        rep.add("ground-part(" + part.role + ")", false, part_why);
        break;
      }
      rep.add("ground-part(" + part.role + ")", true, to_string(sub));
    }
    if (!parts_ok) return rep;
    std::string count_why;
    bool counts = finish_ground_counts(c.ground, surfaces_used, free_rank_seen, base_seen,
                                       &count_why);
    rep.add("ground-shape", counts, count_why);
    if (!counts) return rep;
    rep.verdict = base_is_trivial(c.ground) ? "hyperbolic tower over the trivial group"
                                            : "hyperbolic tower";
    return rep;
  }

  // Verify each floor and embed its checks.
  std::vector<std::string> floor_verdicts;
  for (size_t k = 0; k < m; ++k) {
    VerificationReport fr = verify_floor(c.floors[k], opts);
    std::string prefix = "floor" + std::to_string(k) + "/";
    for (const auto& chk : fr.checks) rep.add(prefix + chk.name, chk.passed, chk.detail);
    if (!fr.ok()) return rep;
    floor_verdicts.push_back(fr.verdict);
  }
  {
    bool only_last = true;
    for (size_t k = 0; k + 1 < m; ++k)
      if (floor_verdicts[k] == "extended hyperbolic floor") only_last = false;
    rep.add("only-last-floor-extended", only_last,
            only_last ? "" : "an inner floor needed the extended certificate");
    if (!only_last) return rep;
  }
  {
    bool compose = true;
    std::string why;
    for (size_t k = 0; k + 1 < m && compose; ++k) {
      Presentation target = plain_concatenation(c.floors[k].decomposition);
      Presentation next = induced_presentation(c.floors[k + 1].decomposition).presentation;
      if (!same_presentation(target, next)) {
        compose = false;
        why = "level " + std::to_string(k + 1) + ": " + to_string(target) + " vs " +
              to_string(next);
      }
    }
    rep.add("floors-compose", compose, why);
    if (!compose) return rep;
  }
  if (c.ambient) {
    Presentation first = induced_presentation(c.floors[0].decomposition).presentation;
    bool match = same_presentation(*c.ambient, first);
    rep.add("ambient-matches-first-floor", match,
            match ? "" : to_string(*c.ambient) + " vs " + to_string(first));
    if (!match) return rep;
  }

  // Ground shape: roles for the plain vertices of the last floor.
  {
    const GraphOfGroups& last = c.floors.back().decomposition;
    std::map<std::string, std::string> role_of;
    bool roles_ok = true;
    std::string why;
    for (const auto& vr : c.roles)
      if (!role_of.emplace(vr.vertex, vr.role).second) {
        roles_ok = false;
        why = "vertex '" + vr.vertex + "' has two roles";
      }
    std::set<int> surfaces_used;
    int free_rank_seen = 0, base_seen = 0;
    for (const auto& v : last.vertices) {
      if (v.is_surface) continue;
      if (!roles_ok) break;
      auto it = role_of.find(v.id);
      if (it == role_of.end()) {
        roles_ok = false;
        why = "plain vertex '" + v.id + "' has no ground role";
        break;
      }
      std::string part_why;
      if (!check_part(it->second, v.presentation, c.ground, surfaces_used, free_rank_seen,
                      base_seen, &part_why)) {
        roles_ok = false;
        why = "vertex '" + v.id + "': " + part_why;
      }
      role_of.erase(it);
    }
    if (roles_ok && !role_of.empty()) {
      roles_ok = false;
      why = "role assigned to unknown plain vertex '" + role_of.begin()->first + "'";
    }
    if (roles_ok) {
      std::string count_why;
      roles_ok = finish_ground_counts(c.ground, surfaces_used, free_rank_seen, base_seen,
                                      &count_why);
      why = count_why;
    }
    rep.add("ground-shape", roles_ok, why);
    if (!roles_ok) return rep;
  }

  // The base group must sit inside every level.
  if (!base_is_trivial(c.ground)) {
    bool contained = true;
    std::string why;
    for (size_t k = 0; k < m && contained; ++k) {
      InducedPresentation ind = induced_presentation(c.floors[k].decomposition);
      const BaseWitness* w =
          k < c.base_witnesses.size() && !c.base_witnesses[k].vertex.empty()
              ? &c.base_witnesses[k]
              : nullptr;
      for (int i = 0; i < c.ground.base->rank() && contained; ++i) {
        const std::string& h = c.ground.base->generators->name(i);
        if (!w) {
          if (!ind.presentation.generators->index_of(h)) {
            contained = false;
            why = "level " + std::to_string(k) + " has no generator '" + h + "'";
          }
          continue;
        }
        const VertexSpec* v = c.floors[k].decomposition.vertex(w->vertex);
        if (!v || v->is_surface) {
          contained = false;
          why = "witness vertex '" + w->vertex + "' is not a plain vertex";
          break;
        }
        auto itw = w->words.find(h);
        if (itw == w->words.end()) {
          contained = false;
          why = "no witness word for base generator '" + h + "'";
          break;
        }
        Word wit;
        Word gen;
        try {
          wit = translate(parse_word(v->presentation.generators, itw->second),
                          ind.presentation.generators);
          gen = parse_word(ind.presentation.generators, h);
        } catch (const Error& e) {
          contained = false;
          why = e.what();
          break;
        }
        if (wit == gen) continue;  // free equality certifies it
        try {
          ModelRef gm = model_for(ind.presentation);
          if (!gm->are_equal(wit, gen)) {
            contained = false;
            why = "witness for '" + h + "' differs from it on level " + std::to_string(k);
          }
        } catch (const Unsupported&) {
          contained = false;
          why = "cannot certify the witness for '" + h + "' on level " + std::to_string(k);
        }
      }
    }
    rep.add("base-contained-in-levels", contained, why);
    if (!contained) return rep;
  }

  if (base_is_trivial(c.ground))
    rep.verdict = "hyperbolic tower over the trivial group";
  else if (floor_verdicts.back() == "extended hyperbolic floor")
    rep.verdict = "extended hyperbolic tower";
  else
    rep.verdict = "hyperbolic tower";
  return rep;
}

}  // namespace hyptower
