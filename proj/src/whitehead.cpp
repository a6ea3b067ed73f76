#include "hyptower/whitehead.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyptower {

Word WhiteheadAuto::apply_to(const Word& w) const {
  const AlphabetRef& alpha = w.alphabet();
  if (!alpha) return w;
  if (alpha->size() != rank) throw Error("word rank does not match the automorphism");
  std::vector<Word> images(rank);
  for (int g = 1; g <= rank; ++g) {
    if (is_permutation) {
      images[g - 1] = Word(alpha, {perm[g - 1]});
      continue;
    }
    int m = std::abs(multiplier);
    Sym a = multiplier;
    if (g == m) {
      images[g - 1] = Word(alpha, {static_cast<Sym>(g)});
      continue;
    }
    std::vector<Sym> syms;
    Act what = act[g - 1];
    if (what == Act::Left || what == Act::Both) syms.push_back(-a);
    syms.push_back(static_cast<Sym>(g));
    if (what == Act::Right || what == Act::Both) syms.push_back(a);
    images[g - 1] = Word(alpha, std::move(syms));
  }
  std::vector<Sym> out;
  for (Sym s : w.syms()) {
    const Word& img = images[std::abs(s) - 1];
    if (s > 0)
      out.insert(out.end(), img.syms().begin(), img.syms().end());
    else
      for (auto it = img.syms().rbegin(); it != img.syms().rend(); ++it) out.push_back(-*it);
  }
  return Word(alpha, std::move(out));
}

WhiteheadAuto WhiteheadAuto::inverse() const {
  WhiteheadAuto inv = *this;
  if (is_permutation) {
    for (int g = 1; g <= rank; ++g) {
      Sym img = perm[g - 1];
      inv.perm[std::abs(img) - 1] = img > 0 ? static_cast<Sym>(g) : -static_cast<Sym>(g);
    }
  } else {
    inv.multiplier = -multiplier;
  }
  return inv;
}

std::string to_string(const WhiteheadAuto& a) {
  std::ostringstream out;
  out << "[";
  bool first = true;
  auto sep = [&]() {
    if (!first) out << ", ";
    first = false;
  };
  auto letter = [](Sym s) {
    std::string t = "x" + std::to_string(std::abs(s));
    if (s < 0) t += "^-1";
    return t;
  };
  for (int g = 1; g <= a.rank; ++g) {
    if (a.is_permutation) {
      if (a.perm[g - 1] == g) continue;
      sep();
      out << "x" << g << " -> " << letter(a.perm[g - 1]);
    } else {
      if (g == std::abs(a.multiplier)) continue;
      WhiteheadAuto::Act what = a.act[g - 1];
      if (what == WhiteheadAuto::Act::Fix) continue;
      sep();
      out << "x" << g << " -> ";
      if (what == WhiteheadAuto::Act::Left || what == WhiteheadAuto::Act::Both)
        out << letter(-a.multiplier) << " ";
      out << "x" << g;
      if (what == WhiteheadAuto::Act::Right || what == WhiteheadAuto::Act::Both)
        out << " " << letter(a.multiplier);
    }
  }
  if (first) out << "id";
  out << "]";
  return out.str();
}

std::vector<WhiteheadAuto> whitehead_generators(int n) {
  if (n < 1) throw Error("rank must be positive");
  std::vector<WhiteheadAuto> out;

  // signed permutations
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      WhiteheadAuto a;
      a.rank = n;
      a.is_permutation = true;
      a.perm.resize(n);
      for (int g = 0; g < n; ++g)
        a.perm[g] = (signs >> g) & 1 ? -static_cast<Sym>(p[g]) : static_cast<Sym>(p[g]);
      out.push_back(std::move(a));
    }
  } while (std::next_permutation(p.begin(), p.end()));

  // multiplier moves
  for (int m = 1; m <= n; ++m) {
    for (Sym a_sym : {static_cast<Sym>(m), static_cast<Sym>(-m)}) {
      int others = n - 1;
      long combos = 1;
      for (int i = 0; i < others; ++i) combos *= 4;
      for (long code = 1; code < combos; ++code) {  // 0 would be the identity
        WhiteheadAuto a;
        a.rank = n;
        a.is_permutation = false;
        a.multiplier = a_sym;
        a.act.assign(n, WhiteheadAuto::Act::Fix);
        long c = code;
        for (int g = 1; g <= n; ++g) {
          if (g == m) continue;
          a.act[g - 1] = static_cast<WhiteheadAuto::Act>(c % 4);
          c /= 4;
        }
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

namespace {

long cyclic_total(const std::vector<Word>& t) {
  long s = 0;
  for (const auto& w : t) s += CyclicWord(w).size();
  return s;
}

long linear_total(const std::vector<Word>& t) {
  long s = 0;
  for (const auto& w : t) s += w.size();
  return s;
}

std::vector<Word> apply_all(const WhiteheadAuto& a, const std::vector<Word>& t) {
  std::vector<Word> out;
  out.reserve(t.size());
  for (const auto& w : t) out.push_back(a.apply_to(w));
  return out;
}

}  // namespace

MinimizeResult minimize(const std::vector<Word>& tuple, int n) {
  MinimizeResult res;
  res.tuple = tuple;
  if (tuple.empty()) return res;
  for (const auto& w : tuple)
    if (!w.alphabet() || w.alphabet()->size() != n)
      throw Error("tuple words must live in the rank-" + std::to_string(n) + " free group");
  std::vector<WhiteheadAuto> gens = whitehead_generators(n);

  bool improved = true;
  while (improved) {
    improved = false;
    long cur = cyclic_total(res.tuple);
    for (const auto& a : gens) {
      std::vector<Word> next = apply_all(a, res.tuple);
      if (cyclic_total(next) < cur) {
        res.tuple = std::move(next);
        res.autos.push_back(a);
        improved = true;
        break;
      }
    }
  }
  improved = true;
  while (improved) {
    improved = false;
    long cur_c = cyclic_total(res.tuple);
    long cur_l = linear_total(res.tuple);
    for (const auto& a : gens) {
      std::vector<Word> next = apply_all(a, res.tuple);
      if (cyclic_total(next) == cur_c && linear_total(next) < cur_l) {
        res.tuple = std::move(next);
        res.autos.push_back(a);
        improved = true;
        break;
      }
    }
  }
  return res;
}

bool is_primitive(const Word& w, int n) {
  MinimizeResult r = minimize({w}, n);
  return CyclicWord(r.tuple[0]).size() == 1;
}

bool is_basis(const std::vector<Word>& tuple, int n) {
  if (static_cast<int>(tuple.size()) > n)
    throw Error("tuple larger than the ambient rank");
  if (static_cast<int>(tuple.size()) != n) return false;
  MinimizeResult r = minimize(tuple, n);
  std::vector<bool> hit(n, false);
  for (const auto& w : r.tuple) {
    if (w.size() != 1) return false;
    int g = std::abs(w.at(0)) - 1;
    if (hit[g]) return false;
    hit[g] = true;
  }
  return true;
}

}  // namespace hyptower
