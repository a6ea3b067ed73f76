#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyptower/catalog.hpp"
#include "hyptower/document.hpp"
#include "hyptower/whitehead.hpp"
#include "json.hpp"

using namespace hyptower;
using nlohmann::json;

namespace {

std::vector<std::string> split_names(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

json datum_json(const SurfaceDatum& d) {
  return json{{"orientable", d.orientable}, {"euler", d.euler}, {"boundary", d.boundary}};
}

// Shared option bundle; each subcommand registers only what it uses.
struct Args {
  std::string in;
  std::string format = "text";
  std::string group;
  std::string gens;
  std::string name;
  bool orientable = true;
  int euler = 2;
  int boundary = 0;
  int count = 0;
  int pieces = 4;
  int rank = 2;
  int jobs = 1;
  bool all = false;
  unsigned long long seed = VerifyOptions{}.seed;
  std::vector<std::string> words;
};

void add_format(CLI::App* cmd, Args& a) {
  cmd->add_option("--format", a.format, "text or records")
      ->check(CLI::IsMember({"text", "records"}));
}

void add_datum_options(CLI::App* cmd, Args& a, bool required) {
  auto* o = cmd->add_option("--orientable", a.orientable, "true or false");
  auto* e = cmd->add_option("--euler", a.euler, "Euler characteristic");
  auto* b = cmd->add_option("--boundary", a.boundary, "boundary components");
  if (required) {
    o->required();
    e->required();
    b->required();
  }
}

// Alphabet plus word-problem model from --group/--in or from --gens.
std::pair<AlphabetRef, ModelRef> resolve_group(const Args& a, bool need_model) {
  if (!a.group.empty()) {
    if (a.in.empty()) throw Error("--group needs an input document (--in)");
    InputDocument doc = load_document(a.in);
    const Presentation* p = doc.find_presentation(a.group);
    if (!p) throw Error("no presentation named '" + a.group + "'");
    return {p->generators, need_model ? model_for(*p) : nullptr};
  }
  if (a.gens.empty()) throw Error("give either --group with --in, or --gens");
  AlphabetRef alpha = Alphabet::make(split_names(a.gens));
  ModelRef model = need_model ? std::make_shared<FreeModel>(alpha) : nullptr;
  return {alpha, model};
}

int emit_report(const VerificationReport& rep, const Args& a) {
  if (a.format == "records")
    std::cout << to_records(rep);
  else
    std::cout << to_text(rep);
  return rep.ok() ? 0 : 1;
}

int run_classify(const Args& a) {
  SurfaceDatum d;
  if (!a.name.empty()) {
    if (a.in.empty()) throw Error("--surface needs an input document (--in)");
    InputDocument doc = load_document(a.in);
    const SurfaceDatum* s = doc.find_surface(a.name);
    if (!s) throw Error("no surface named '" + a.name + "'");
    d = *s;
  } else {
    d.orientable = a.orientable;
    d.euler = a.euler;
    d.boundary = a.boundary;
  }
  bool valid = valid_surface_datum(d);
  bool admissible = valid && !d.closed() && is_floor_admissible(d);
  if (a.format == "records") {
    json rec = datum_json(d);
    rec["record"] = "surface";
    rec["valid"] = valid;
    if (valid) {
      rec["closed"] = d.closed();
      if (d.orientable)
        rec["genus"] = orientable_genus(d);
      else
        rec["crosscaps"] = crosscap_count(d);
      if (!d.closed()) rec["floor_admissible"] = admissible;
    }
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << to_string(d) << "\n";
    std::cout << "valid: " << (valid ? "yes" : "no") << "\n";
    if (valid) {
      std::cout << "closed: " << (d.closed() ? "yes" : "no") << "\n";
      if (d.orientable)
        std::cout << "genus: " << orientable_genus(d) << "\n";
      else
        std::cout << "crosscaps: " << crosscap_count(d) << "\n";
      if (!d.closed())
        std::cout << "floor-admissible: " << (admissible ? "yes" : "no") << "\n";
    }
  }
  return valid ? 0 : 1;
}

int run_word_reduce(const Args& a) {
  auto [alpha, model] = resolve_group(a, false);
  std::cout << to_string(parse_word(alpha, a.words.at(0))) << "\n";
  return 0;
}

int run_word_is_trivial(const Args& a) {
  auto [alpha, model] = resolve_group(a, true);
  Word w = parse_word(alpha, a.words.at(0));
  bool t = model->is_trivial(translate(w, model->alphabet()));
  std::cout << (t ? "true" : "false") << "\n";
  return t ? 0 : 1;
}

int run_word_equal(const Args& a) {
  auto [alpha, model] = resolve_group(a, true);
  Word u = parse_word(alpha, a.words.at(0));
  Word v = parse_word(alpha, a.words.at(1));
  bool eq = model->are_equal(translate(u, model->alphabet()), translate(v, model->alphabet()));
  std::cout << (eq ? "true" : "false") << "\n";
  return eq ? 0 : 1;
}

int run_word_commutator(const Args& a) {
  auto [alpha, model] = resolve_group(a, false);
  Word w = parse_word(alpha, a.words.at(0));
  auto wit = genus_one_commutator_witness(w);
  if (!wit) {
    std::cout << "no witness\n";
    return 1;
  }
  std::cout << "x = " << to_string(wit->x()) << "\n";
  std::cout << "y = " << to_string(wit->y()) << "\n";
  std::cout << "conjugator = " << to_string(wit->conjugator) << "\n";
  return 0;
}

int run_presentation_standard(const Args& a) {
  SurfacePresentation sp = standard_presentation(surface_datum(a.orientable, a.euler, a.boundary));
  std::cout << to_string(sp.presentation) << "\n";
  for (size_t i = 0; i < sp.boundary_words.size(); ++i)
    std::cout << "boundary " << i << ": " << to_string(sp.boundary_words[i]) << "\n";
  return 0;
}

int run_presentation_chi(const Args& a) {
  std::cout << euler_from_presentation_data(a.orientable, a.count, a.boundary) << "\n";
  return 0;
}

int run_profiles(const Args& a) {
  SurfaceDatum d = surface_datum(a.orientable, a.euler, a.boundary);
  if (d.closed()) {
    auto profiles = enumerate_floor_profiles(d, a.pieces);
    if (a.format == "records") {
      for (const auto& p : profiles) {
        json rec{{"record", "profile"}, {"rejected", p.rejected_for_orientability}};
        for (const auto& s : p.surface_pieces) rec["surfaces"].push_back(datum_json(s));
        for (const auto& s : p.complement_pieces) rec["complements"].push_back(datum_json(s));
        std::cout << rec.dump() << "\n";
      }
    } else {
      std::cout << profiles.size() << " profiles of " << to_string(d) << "\n";
      for (const auto& p : profiles) std::cout << to_string(p) << "\n";
    }
    return 0;
  }
  auto subs = proper_subsurface_data(d);
  if (a.format == "records") {
    for (const auto& s : subs) {
      json rec = datum_json(s);
      rec["record"] = "subsurface";
      rec["floor_admissible"] = !s.closed() && is_floor_admissible(s);
      std::cout << rec.dump() << "\n";
    }
  } else {
    std::cout << subs.size() << " proper subsurface data of " << to_string(d) << "\n";
    for (const auto& s : subs)
      std::cout << to_string(s)
                << (!s.closed() && is_floor_admissible(s) ? "  [floor-admissible]" : "") << "\n";
  }
  return 0;
}

std::string single_name(const std::vector<std::string>& names, const char* what) {
  if (names.size() == 1) return names[0];
  throw Error(names.empty() ? std::string("the document declares no ") + what
                            : std::string("several ") + what +
                                  "s declared; pick one with --name");
}

int run_verify_floor(const Args& a) {
  InputDocument doc = load_document(a.in);
  std::string name = a.name;
  if (name.empty()) {
    std::vector<std::string> names;
    for (const auto& [n, f] : doc.floors) names.push_back(n);
    name = single_name(names, "floor");
  }
  VerifyOptions opts;
  opts.seed = a.seed;
  return emit_report(verify_floor(resolve_floor(doc, name), opts), a);
}

int run_verify_tower(const Args& a) {
  InputDocument doc = load_document(a.in);
  std::string name = a.name;
  if (name.empty()) {
    std::vector<std::string> names;
    for (const auto& [n, t] : doc.towers) names.push_back(n);
    name = single_name(names, "tower");
  }
  VerifyOptions opts;
  opts.seed = a.seed;
  return emit_report(verify_tower(resolve_tower(doc, name), opts), a);
}

AlphabetRef whitehead_alphabet(const Args& a) {
  if (!a.gens.empty()) return Alphabet::make(split_names(a.gens));
  if (a.rank < 1 || a.rank > 26) throw Error("--rank must be between 1 and 26, or give --gens");
  std::vector<std::string> names;
  for (int i = 0; i < a.rank; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet::make(names);
}

int run_whitehead_minimize(const Args& a) {
  AlphabetRef alpha = whitehead_alphabet(a);
  std::vector<Word> tuple;
  for (const auto& t : a.words) tuple.push_back(parse_word(alpha, t));
  MinimizeResult res = minimize(tuple, alpha->size());
  int total = 0;
  for (const auto& w : res.tuple) {
    std::cout << to_string(w) << "\n";
    total += cyclic_reduce(w).cyclic.representative().size();
  }
  std::cout << "total cyclic length " << total << " after " << res.autos.size() << " moves\n";
  return 0;
}

int run_whitehead_is_primitive(const Args& a) {
  AlphabetRef alpha = whitehead_alphabet(a);
  bool p = is_primitive(parse_word(alpha, a.words.at(0)), alpha->size());
  std::cout << (p ? "true" : "false") << "\n";
  return p ? 0 : 1;
}

int run_whitehead_is_basis(const Args& a) {
  AlphabetRef alpha = whitehead_alphabet(a);
  std::vector<Word> tuple;
  for (const auto& t : a.words) tuple.push_back(parse_word(alpha, t));
  bool b = is_basis(tuple, alpha->size());
  std::cout << (b ? "true" : "false") << "\n";
  return b ? 0 : 1;
}

int run_catalog_list(const Args& a) {
  if (a.format == "records") {
    for (const auto& e : catalog_entries()) {
      json rec{{"record", "entry"},
               {"name", e.name},
               {"description", e.description},
               {"expected", e.expected_verdict}};
      std::cout << rec.dump() << "\n";
    }
    return 0;
  }
  for (const auto& e : catalog_entries())
    std::cout << e.name << ": " << e.description << "\n";
  return 0;
}

int run_catalog_run(const Args& a) {
  VerifyOptions opts;
  opts.seed = a.seed;
  std::vector<EntryOutcome> outcomes;
  if (a.all) {
    outcomes = run_all(a.jobs, opts);
  } else {
    if (a.words.empty()) throw Error("name entries to run, or pass --all");
    for (const auto& n : a.words) outcomes.push_back(run_entry(n, opts));
  }
  int good = 0;
  for (const auto& o : outcomes) {
    if (o.as_expected) ++good;
    if (a.format == "records") {
      for (const auto& c : o.report.checks) {
        json rec{{"record", "check"},
                 {"entry", o.name},
                 {"name", c.name},
                 {"passed", c.passed},
                 {"detail", c.detail}};
        std::cout << rec.dump() << "\n";
      }
      json rec{{"record", "entry"},
               {"name", o.name},
               {"verdict", o.report.verdict},
               {"expected", o.expected_verdict},
               {"as_expected", o.as_expected}};
      std::cout << rec.dump() << "\n";
      continue;
    }
    std::cout << (o.as_expected ? "[ OK ] " : "[FAIL] ") << o.name << ": " << o.report.verdict;
    if (!o.as_expected) std::cout << " (expected " << o.expected_verdict << ")";
    std::cout << "\n";
    if (!o.as_expected) {
      std::istringstream lines(to_text(o.report));
      std::string line;
      while (std::getline(lines, line)) std::cout << "    " << line << "\n";
    }
  }
  if (a.format == "records") {
    json rec{{"record", "summary"},
             {"total", outcomes.size()},
             {"as_expected", good},
             {"passed", good == static_cast<int>(outcomes.size())}};
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << good << "/" << outcomes.size() << " entries as expected\n";
  }
  return good == static_cast<int>(outcomes.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier for hyperbolic floor and tower structures"};
  app.require_subcommand(1);
  Args a;

  auto* classify = app.add_subcommand("classify", "describe a compact surface");
  classify->add_option("--in", a.in, "input document");
  classify->add_option("--surface", a.name, "named surface from the document");
  add_datum_options(classify, a, false);
  add_format(classify, a);

  auto* word = app.add_subcommand("word", "free and presented-group word operations");
  word->require_subcommand(1);
  auto add_group_options = [&](CLI::App* cmd) {
    cmd->add_option("--in", a.in, "input document");
    cmd->add_option("--group", a.group, "presentation name from the document");
    cmd->add_option("--gens", a.gens, "free generators, space separated");
  };
  auto* w_reduce = word->add_subcommand("reduce", "freely reduce");
  w_reduce->add_option("word", a.words, "word")->required()->expected(1);
  add_group_options(w_reduce);
  auto* w_triv = word->add_subcommand("is-trivial", "decide triviality");
  w_triv->add_option("word", a.words, "word")->required()->expected(1);
  add_group_options(w_triv);
  auto* w_eq = word->add_subcommand("equal", "decide equality");
  w_eq->add_option("words", a.words, "two words")->required()->expected(2);
  add_group_options(w_eq);
  auto* w_comm = word->add_subcommand("commutator-test", "genus-one commutator witness");
  w_comm->add_option("word", a.words, "word")->required()->expected(1);
  add_group_options(w_comm);

  auto* pres = app.add_subcommand("presentation", "standard surface presentations");
  pres->require_subcommand(1);
  auto* p_std = pres->add_subcommand("standard", "standard presentation of a surface");
  add_datum_options(p_std, a, true);
  auto* p_chi = pres->add_subcommand("chi", "Euler characteristic from handle/crosscap data");
  p_chi->add_option("--orientable", a.orientable, "true or false")->required();
  p_chi->add_option("--count", a.count, "handles (orientable) or crosscaps")->required();
  p_chi->add_option("--boundary", a.boundary, "boundary components")->required();

  auto* prof = app.add_subcommand("profiles",
                                  "floor profiles (closed) or proper subsurface data (bounded)");
  add_datum_options(prof, a, true);
  prof->add_option("--pieces", a.pieces, "piece bound for closed ambients");
  add_format(prof, a);

  auto* vf = app.add_subcommand("verify-floor", "verify one floor candidate");
  vf->add_option("--in", a.in, "input document")->required();
  vf->add_option("--name", a.name, "floor name (default: the only one)");
  vf->add_option("--seed", a.seed, "seed for the sampling checks");
  add_format(vf, a);

  auto* vt = app.add_subcommand("verify-tower", "verify one tower candidate");
  vt->add_option("--in", a.in, "input document")->required();
  vt->add_option("--name", a.name, "tower name (default: the only one)");
  vt->add_option("--seed", a.seed, "seed for the sampling checks");
  add_format(vt, a);

  auto* wh = app.add_subcommand("whitehead", "free-group automorphism tools");
  wh->require_subcommand(1);
  auto add_rank_options = [&](CLI::App* cmd) {
    cmd->add_option("--rank", a.rank, "free rank (alphabet a, b, c, ...)");
    cmd->add_option("--gens", a.gens, "explicit generators, space separated");
  };
  auto* wh_min = wh->add_subcommand("minimize", "greedy length descent of a tuple");
  wh_min->add_option("words", a.words, "tuple")->required();
  add_rank_options(wh_min);
  auto* wh_prim = wh->add_subcommand("is-primitive", "part of some basis?");
  wh_prim->add_option("word", a.words, "word")->required()->expected(1);
  add_rank_options(wh_prim);
  auto* wh_basis = wh->add_subcommand("is-basis", "is the tuple a basis?");
  wh_basis->add_option("words", a.words, "tuple")->required();
  add_rank_options(wh_basis);

  auto* cat = app.add_subcommand("catalog", "built-in verified constructions");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list entries");
  add_format(cat_list, a);
  auto* cat_run = cat->add_subcommand("run", "run entries and compare verdicts");
  cat_run->add_option("entries", a.words, "entry names");
  cat_run->add_flag("--all", a.all, "run every entry");
  cat_run->add_option("--jobs", a.jobs, "parallel verification jobs");
  cat_run->add_option("--seed", a.seed, "seed for the sampling checks");
  add_format(cat_run, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0 through app.exit; any usage problem is exit 2
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(a);
    if (app.got_subcommand(word)) {
      if (word->got_subcommand(w_reduce)) return run_word_reduce(a);
      if (word->got_subcommand(w_triv)) return run_word_is_trivial(a);
      if (word->got_subcommand(w_eq)) return run_word_equal(a);
      if (word->got_subcommand(w_comm)) return run_word_commutator(a);
    }
    if (app.got_subcommand(pres)) {
      if (pres->got_subcommand(p_std)) return run_presentation_standard(a);
      if (pres->got_subcommand(p_chi)) return run_presentation_chi(a);
    }
    if (app.got_subcommand(prof)) return run_profiles(a);
    if (app.got_subcommand(vf)) return run_verify_floor(a);
    if (app.got_subcommand(vt)) return run_verify_tower(a);
    if (app.got_subcommand(wh)) {
      if (wh->got_subcommand(wh_min)) return run_whitehead_minimize(a);
      if (wh->got_subcommand(wh_prim)) return run_whitehead_is_primitive(a);
      if (wh->got_subcommand(wh_basis)) return run_whitehead_is_basis(a);
    }
    if (app.got_subcommand(cat)) {
      if (cat->got_subcommand(cat_list)) return run_catalog_list(a);
      if (cat->got_subcommand(cat_run)) return run_catalog_run(a);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
