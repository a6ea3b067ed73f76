#include "hyptower/word_problem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hyptower {

Presentation make_presentation(std::vector<std::string> generator_names,
                               const std::vector<std::string>& relator_texts) {
  Presentation p;
  p.generators = Alphabet::make(std::move(generator_names));
  for (const auto& text : relator_texts) {
    CyclicWord r(parse_word(p.generators, text));
    if (r.empty()) throw Error("relator '" + text + "' reduces to the identity");
    p.relators.push_back(std::move(r));
  }
  return p;
}

Presentation make_presentation(AlphabetRef generators, std::vector<CyclicWord> relators) {
  if (!generators) throw Error("presentation needs a generator alphabet");
  Presentation p;
  p.generators = std::move(generators);
  for (auto& r : relators) {
    if (r.empty()) throw Error("empty relator");
    p.relators.emplace_back(translate(r.representative(), p.generators));
  }
  return p;
}

namespace {

std::string relator_key(const CyclicWord& r) {
  std::string fwd = to_string(r);
  std::string bwd = to_string(CyclicWord(invert(r.representative())));
  return std::min(fwd, bwd);
}

}  // namespace

bool same_presentation(const Presentation& a, const Presentation& b) {
  if (!a.generators || !b.generators) return a.generators == b.generators;
  if (!a.generators->same_names(*b.generators)) return false;
  std::vector<std::string> ka, kb;
  for (const auto& r : a.relators) ka.push_back(relator_key(r));
  for (const auto& r : b.relators) kb.push_back(relator_key(r));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

Presentation concatenated(const std::vector<Presentation>& parts) {
  std::vector<std::string> names;
  for (const auto& part : parts)
    for (const auto& n : part.generators->names()) names.push_back(n);
  AlphabetRef big = Alphabet::make(std::move(names));  // throws on duplicates
  Presentation out;
  out.generators = big;
  for (const auto& part : parts)
    for (const auto& r : part.relators)
      out.relators.emplace_back(translate(r.representative(), big));
  return out;
}

std::string to_string(const Presentation& p) {
  std::ostringstream out;
  out << "< ";
  for (int i = 0; i < p.rank(); ++i) {
    if (i) out << ", ";
    out << p.generators->name(i);
  }
  if (!p.relators.empty()) {
    out << " | ";
    for (size_t i = 0; i < p.relators.size(); ++i) {
      if (i) out << ", ";
      out << to_string(p.relators[i]);
    }
  }
  out << " >";
  return out.str();
}

std::vector<Word> symmetrize(const Presentation& p) {
  if (p.relators.size() != 1)
    throw Unsupported("symmetrization handles single-relator presentations only");
  std::vector<Word> out;
  std::set<std::string> seen;
  auto add_rotations = [&](const Word& w) {
    for (int k = 0; k < w.size(); ++k) {
      Word r = rotate(w, k);
      if (seen.insert(to_string(r)).second) out.push_back(std::move(r));
    }
  };
  for (const auto& r : p.relators) {
    add_rotations(r.representative());
    add_rotations(invert(r.representative()));
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return to_string(a) < to_string(b);
  });
  return out;
}

namespace {

int common_prefix(const Word& u, const Word& v) {
  int n = std::min(u.size(), v.size());
  for (int i = 0; i < n; ++i)
    if (u.at(i) != v.at(i)) return i;
  return n;
}

bool is_periodic(const Word& w) {
  for (int p = 1; p < w.size(); ++p)
    if (rotate(w, p) == w) return true;
  return false;
}

}  // namespace

int max_piece_length(const std::vector<Word>& symmetrized) {
  int best = 0;
  for (size_t i = 0; i < symmetrized.size(); ++i) {
    if (is_periodic(symmetrized[i])) best = std::max(best, symmetrized[i].size() - 1);
    for (size_t j = i + 1; j < symmetrized.size(); ++j)
      best = std::max(best, common_prefix(symmetrized[i], symmetrized[j]));
  }
  return best;
}

bool check_c_prime_sixth(const Presentation& p) {
  std::vector<Word> sym = symmetrize(p);
  for (size_t i = 0; i < sym.size(); ++i) {
    if (is_periodic(sym[i]) && 6 * (sym[i].size() - 1) >= sym[i].size()) return false;
    for (size_t j = i + 1; j < sym.size(); ++j) {
      int piece = common_prefix(sym[i], sym[j]);
      if (piece == 0) continue;
      if (6 * piece >= sym[i].size() || 6 * piece >= sym[j].size()) return false;
    }
  }
  return true;
}

bool GroupModel::are_equal(const Word& u, const Word& v) const {
  Word tu = translate(u, alphabet());
  Word tv = translate(v, alphabet());
  return is_trivial(compose(tu, invert(tv)));
}

bool GroupModel::commute(const Word& u, const Word& v) const {
  Word tu = translate(u, alphabet());
  Word tv = translate(v, alphabet());
  return is_trivial(commutator(tu, tv));
}

bool FreeModel::is_trivial(const Word& w) const { return translate(w, alphabet_).empty(); }

std::string FreeModel::describe() const {
  std::ostringstream out;
  out << "free group of rank " << alphabet_->size();
  return out.str();
}

InfiniteCyclicModel::InfiniteCyclicModel(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_ || alphabet_->size() != 1)
    throw Error("infinite cyclic model needs exactly one generator");
}

bool InfiniteCyclicModel::is_trivial(const Word& w) const {
  long sum = 0;
  Word t = translate(w, alphabet_);
  for (Sym s : t.syms()) sum += (s > 0 ? 1 : -1);
  return sum == 0;
}

std::string InfiniteCyclicModel::describe() const {
  return "infinite cyclic group on " + alphabet_->name(0);
}

SmallCancellationModel::SmallCancellationModel(Presentation p) : pres_(std::move(p)) {
  if (pres_.relators.size() != 1)
    throw Unsupported("small-cancellation model handles one relator, got " +
                      std::to_string(pres_.relators.size()));
  if (!check_c_prime_sixth(pres_))
    throw Unsupported("presentation " + to_string(pres_) + " is not C'(1/6)");
  symmetrized_ = symmetrize(pres_);
}

// Dehn's algorithm: while the word contains more than half of a symmetrized
// relator, replace that piece with the shorter complement.  Under C'(1/6)
// this reaches the empty word exactly on trivial elements.
bool SmallCancellationModel::is_trivial(const Word& w) const {
  Word cur = translate(w, pres_.generators);
  bool progress = true;
  while (progress && !cur.empty()) {
    progress = false;
    int n = cur.size();
    for (int i = 0; i < n && !progress; ++i) {
      for (const Word& s : symmetrized_) {
        int len = s.size();
        int max_l = std::min(len, n - i);
        for (int l = max_l; 2 * l > len; --l) {
          bool match = true;
          for (int t = 0; t < l && match; ++t)
            if (cur.at(i + t) != s.at(t)) match = false;
          if (!match) continue;
          // cur[i..i+l) equals the prefix of s; swap in the inverse suffix.
          std::vector<Sym> next(cur.syms().begin(), cur.syms().begin() + i);
          for (int t = len - 1; t >= l; --t) next.push_back(-s.at(t));
          next.insert(next.end(), cur.syms().begin() + i + l, cur.syms().end());
          cur = Word(cur.alphabet(), std::move(next));
          progress = true;
          break;
        }
        if (progress) break;
      }
    }
  }
  return cur.empty();
}

std::string SmallCancellationModel::describe() const {
  return "C'(1/6) small-cancellation group " + to_string(pres_);
}

FreeProductModel::FreeProductModel(std::vector<ModelRef> factors) : factors_(std::move(factors)) {
  if (factors_.size() < 2) throw Error("free product needs at least two factors");
  std::vector<std::string> names;
  for (size_t f = 0; f < factors_.size(); ++f) {
    for (const auto& n : factors_[f]->alphabet()->names()) {
      names.push_back(n);
      factor_of_.push_back(static_cast<int>(f));
    }
  }
  alphabet_ = Alphabet::make(std::move(names));  // throws on clash between factors
}

std::vector<std::pair<int, Word>> FreeProductModel::normal_form(const Word& w) const {
  Word t = translate(w, alphabet_);
  std::vector<std::pair<int, Word>> stack;
  auto push = [&](int f, Word piece) {
    const GroupModel& fm = *factors_[f];
    while (true) {
      if (!stack.empty() && stack.back().first == f) {
        piece = compose(stack.back().second, piece);
        stack.pop_back();
        continue;
      }
      if (!fm.is_trivial(piece)) stack.emplace_back(f, std::move(piece));
      return;
    }
  };
  int i = 0;
  while (i < t.size()) {
    int f = factor_of_[std::abs(t.at(i)) - 1];
    std::vector<Sym> run;
    int j = i;
    while (j < t.size() && factor_of_[std::abs(t.at(j)) - 1] == f) {
      run.push_back(t.at(j));
      ++j;
    }
    Word local = translate(Word(alphabet_, std::move(run)), factors_[f]->alphabet());
    push(f, std::move(local));
    i = j;
  }
  return stack;
}

bool FreeProductModel::is_trivial(const Word& w) const { return normal_form(w).empty(); }

std::string FreeProductModel::describe() const {
  std::ostringstream out;
  out << "free product of " << factors_.size() << " factors:";
  for (const auto& f : factors_) out << " [" << f->describe() << "]";
  return out.str();
}

std::vector<std::pair<int, Word>> free_product_normal_form(const Word& w,
                                                           const FreeProductModel& m) {
  return m.normal_form(w);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ModelRef model_for(const Presentation& p) {
  int n = p.rank();
  if (n == 0) return std::make_shared<FreeModel>(Alphabet::make({}));
  UnionFind uf(n);
  for (const auto& r : p.relators) {
    const Word& rep = r.representative();
    int first = std::abs(rep.at(0)) - 1;
    for (int i = 1; i < rep.size(); ++i) uf.unite(first, std::abs(rep.at(i)) - 1);
  }
  std::map<int, std::vector<CyclicWord>> comp_relators;
  for (const auto& r : p.relators)
    comp_relators[uf.find(std::abs(r.representative().at(0)) - 1)].push_back(r);

  // Group generators: each relator component becomes one factor, all
  // relator-free generators pool into a single free factor.
  std::map<int, std::vector<int>> comp_gens;
  std::vector<int> free_gens;
  for (int g = 0; g < n; ++g) {
    int root = uf.find(g);
    if (comp_relators.count(root))
      comp_gens[root].push_back(g);
    else
      free_gens.push_back(g);
  }

  struct Factor {
    int first_gen;
    ModelRef model;
  };
  std::vector<Factor> factors;
  if (!free_gens.empty()) {
    std::vector<std::string> names;
    for (int g : free_gens) names.push_back(p.generators->name(g));
    AlphabetRef a = Alphabet::make(std::move(names));
    ModelRef m = a->size() == 1 ? ModelRef(std::make_shared<InfiniteCyclicModel>(a))
                                : ModelRef(std::make_shared<FreeModel>(a));
    factors.push_back({free_gens.front(), std::move(m)});
  }
  for (const auto& [root, gens] : comp_gens) {
    std::vector<std::string> names;
    for (int g : gens) names.push_back(p.generators->name(g));
    AlphabetRef a = Alphabet::make(std::move(names));
    std::vector<CyclicWord> rels;
    for (const auto& r : comp_relators.at(root))
      rels.emplace_back(translate(r.representative(), a));
    Presentation sub;
    sub.generators = a;
    sub.relators = std::move(rels);
    factors.push_back({gens.front(), std::make_shared<SmallCancellationModel>(std::move(sub))});
  }
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first_gen < b.first_gen; });
  if (factors.size() == 1) return factors.front().model;
  std::vector<ModelRef> models;
  for (auto& f : factors) models.push_back(std::move(f.model));
  return std::make_shared<FreeProductModel>(std::move(models));
}

bool is_infinite_cyclic(const GroupModel& m) {
  if (dynamic_cast<const InfiniteCyclicModel*>(&m)) return true;
  if (auto* f = dynamic_cast<const FreeModel*>(&m)) return f->alphabet()->size() == 1;
  return false;
}

bool is_trivial_group(const GroupModel& m) {
  if (auto* f = dynamic_cast<const FreeModel*>(&m)) return f->alphabet()->size() == 0;
  return false;
}

ModelRef adjoin_free_letter(const ModelRef& m, const std::string& name) {
  if (!m) throw Error("null model");
  if (m->alphabet()->index_of(name))
    throw Error("letter '" + name + "' already present in the model");
  AlphabetRef single = Alphabet::make({name});
  if (auto* f = dynamic_cast<const FreeModel*>(m.get())) {
    std::vector<std::string> names = f->alphabet()->names();
    names.push_back(name);
    return std::make_shared<FreeModel>(Alphabet::make(std::move(names)));
  }
  if (dynamic_cast<const InfiniteCyclicModel*>(m.get())) {
    std::vector<std::string> names = m->alphabet()->names();
    names.push_back(name);
    return std::make_shared<FreeModel>(Alphabet::make(std::move(names)));
  }
  if (auto* fp = dynamic_cast<const FreeProductModel*>(m.get())) {
    std::vector<ModelRef> factors = fp->factors();
    factors.push_back(std::make_shared<InfiniteCyclicModel>(single));
    return std::make_shared<FreeProductModel>(std::move(factors));
  }
  std::vector<ModelRef> factors{m, std::make_shared<InfiniteCyclicModel>(single)};
  return std::make_shared<FreeProductModel>(std::move(factors));
}

Presentation adjoin_free_letter(const Presentation& p, const std::string& name) {
  if (p.generators->index_of(name))
    throw Error("letter '" + name + "' already present in the presentation");
  std::vector<std::string> names = p.generators->names();
  names.push_back(name);
  return make_presentation(Alphabet::make(std::move(names)), p.relators);
}

}  // namespace hyptower
