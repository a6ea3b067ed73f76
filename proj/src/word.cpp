#include "hyptower/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hyptower {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || s == "1") return false;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!valid_name(names_[i])) throw Error("invalid generator name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw Error("duplicate generator name '" + names_[i] + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::contains_all(const Alphabet& other) const {
  for (const auto& n : other.names_)
    if (!index_.count(n)) return false;
  return true;
}

Word::Word(AlphabetRef alphabet, std::vector<Sym> raw_syms) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw Error("word over null alphabet");
  syms_.reserve(raw_syms.size());
  for (Sym s : raw_syms) {
    if (s == 0 || std::abs(s) > alphabet_->size())
      throw Error("symbol out of range for alphabet");
    if (!syms_.empty() && syms_.back() == -s)
      syms_.pop_back();
    else
      syms_.push_back(s);
  }
}

const std::string& Word::name_at(int i) const {
  return alphabet_->name(std::abs(syms_.at(i)) - 1);
}

bool Word::operator==(const Word& other) const {
  if (size() != other.size()) return false;
  if (alphabet_ == other.alphabet_ || (alphabet_ && other.alphabet_ && alphabet_->same_names(*other.alphabet_)))
    return syms_ == other.syms_;
  for (int i = 0; i < size(); ++i) {
    if ((syms_[i] > 0) != (other.syms_[i] > 0)) return false;
    if (name_at(i) != other.name_at(i)) return false;
  }
  return true;
}

Word reduce(AlphabetRef alphabet, std::vector<Sym> raw_syms) {
  return Word(std::move(alphabet), std::move(raw_syms));
}

Word parse_word(const AlphabetRef& alphabet, std::string_view text) {
  if (!alphabet) throw Error("word over null alphabet");
  std::vector<Sym> syms;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::string name = tok;
    long exp = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      std::string e = tok.substr(pos + 1);
      size_t used = 0;
      try {
        exp = std::stol(e, &used);
      } catch (const std::exception&) {
        throw Error("bad exponent in '" + tok + "'");
      }
      if (used != e.size()) throw Error("bad exponent in '" + tok + "'");
    }
    auto idx = alphabet->index_of(name);
    if (!idx) throw Error("unknown generator '" + name + "'");
    Sym s = static_cast<Sym>(*idx + 1);
    for (long i = 0; i < std::labs(exp); ++i) syms.push_back(exp > 0 ? s : -s);
  }
  return Word(alphabet, std::move(syms));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (int i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w.name_at(i);
    if (w.at(i) < 0) out << "^-1";
  }
  return out.str();
}

namespace {

AlphabetRef merge_alphabet(const Word& u, const Word& v) {
  if (!u.alphabet()) return v.alphabet();
  if (!v.alphabet()) return u.alphabet();
  if (u.alphabet() == v.alphabet() || u.alphabet()->same_names(*v.alphabet())) return u.alphabet();
  throw AlphabetMismatch("words over different alphabets");
}

}  // namespace

Word compose(const Word& u, const Word& v) {
  AlphabetRef a = merge_alphabet(u, v);
  if (!a) return Word();
  std::vector<Sym> syms = u.syms();
  syms.insert(syms.end(), v.syms().begin(), v.syms().end());
  return Word(a, std::move(syms));
}

Word invert(const Word& w) {
  if (!w.alphabet()) return Word();
  std::vector<Sym> syms(w.syms().rbegin(), w.syms().rend());
  for (Sym& s : syms) s = -s;
  return Word(w.alphabet(), std::move(syms));
}

Word conjugate(const Word& w, const Word& g) { return compose(compose(g, w), invert(g)); }

Word commutator(const Word& x, const Word& y) {
  return compose(compose(x, y), compose(invert(x), invert(y)));
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? invert(w) : w;
  Word out = w.alphabet() ? Word(w.alphabet()) : Word();
  for (int i = 0; i < std::abs(n); ++i) out = compose(out, base);
  return out;
}

Word translate(const Word& w, const AlphabetRef& target) {
  if (!target) throw Error("translate to null alphabet");
  if (!w.alphabet()) return Word(target);
  std::vector<Sym> syms;
  syms.reserve(w.size());
  for (int i = 0; i < w.size(); ++i) {
    auto idx = target->index_of(w.name_at(i));
    if (!idx)
      throw AlphabetMismatch("generator '" + w.name_at(i) + "' missing from target alphabet");
    syms.push_back(w.at(i) > 0 ? static_cast<Sym>(*idx + 1) : -static_cast<Sym>(*idx + 1));
  }
  return Word(target, std::move(syms));
}

Word rotate(const Word& w, int k) {
  if (w.empty()) return w;
  int n = w.size();
  k = ((k % n) + n) % n;
  std::vector<Sym> syms;
  syms.reserve(n);
  for (int i = 0; i < n; ++i) syms.push_back(w.at((i + k) % n));
  return Word(w.alphabet(), std::move(syms));
}

namespace {

// Lexicographic comparison of rotations by (name, sign) so the canonical form
// does not depend on generator order within the alphabet object.
bool rotation_less(const Word& w, int i, int j) {
  int n = w.size();
  for (int t = 0; t < n; ++t) {
    const std::string& ni = w.name_at((i + t) % n);
    const std::string& nj = w.name_at((j + t) % n);
    if (ni != nj) return ni < nj;
    bool pi = w.at((i + t) % n) > 0, pj = w.at((j + t) % n) > 0;
    if (pi != pj) return pi;  // positive sorts before inverse
  }
  return false;
}

int least_rotation(const Word& w) {
  int best = 0;
  for (int i = 1; i < w.size(); ++i)
    if (rotation_less(w, i, best)) best = i;
  return best;
}

// Strips w to its cyclically reduced core; returns (core, stripped prefix).
std::pair<Word, Word> strip_cyclic(const Word& w) {
  int front = 0, back = w.size();
  while (back - front >= 2 && w.at(front) == -w.at(back - 1)) {
    ++front;
    --back;
  }
  std::vector<Sym> core(w.syms().begin() + front, w.syms().begin() + back);
  std::vector<Sym> pre(w.syms().begin(), w.syms().begin() + front);
  return {Word(w.alphabet(), std::move(core)), Word(w.alphabet(), std::move(pre))};
}

}  // namespace

CyclicWord::CyclicWord(const Word& w) {
  if (!w.alphabet()) return;
  auto [core, pre] = strip_cyclic(w);
  (void)pre;
  rep_ = rotate(core, least_rotation(core));
}

std::string to_string(const CyclicWord& w) { return to_string(w.representative()); }

CyclicReduction cyclic_reduce(const Word& w) {
  if (!w.alphabet()) return {CyclicWord(), Word()};
  auto [core, pre] = strip_cyclic(w);
  int k = least_rotation(core);
  std::vector<Sym> head(core.syms().begin(), core.syms().begin() + k);
  Word conj = compose(pre, Word(w.alphabet(), std::move(head)));
  CyclicReduction out;
  out.cyclic = CyclicWord(core);
  out.conjugator = conj;
  return out;
}

std::optional<CommutatorWitness> genus_one_commutator_witness(const Word& w) {
  if (!w.alphabet()) return CommutatorWitness{};
  CyclicReduction cr = cyclic_reduce(w);
  const Word& rep = cr.cyclic.representative();
  int n = rep.size();
  if (n % 2 != 0) return std::nullopt;
  int h = n / 2;
  auto seg = [&](const Word& rot, int from, int len) {
    std::vector<Sym> s;
    for (int t = 0; t < len; ++t) s.push_back(rot.at(from + t));
    return Word(w.alphabet(), std::move(s));
  };
  for (int r = 0; r < std::max(1, n); ++r) {
    Word rot = rotate(rep, r);
    // rot should read a b c a^-1 b^-1 c^-1 with |a|+|b|+|c| = h.
    for (int i = 0; i <= h; ++i) {
      // second half must be invert(a) at offset h
      bool ok = true;
      for (int t = 0; t < i && ok; ++t)
        if (rot.at(h + t) != -rot.at(i - 1 - t)) ok = false;
      if (!ok) continue;
      for (int j = 0; i + j <= h; ++j) {
        bool okb = true;
        for (int t = 0; t < j && okb; ++t)
          if (rot.at(h + i + t) != -rot.at(i + j - 1 - t)) okb = false;
        if (!okb) continue;
        int k = h - i - j;
        bool okc = true;
        for (int t = 0; t < k && okc; ++t)
          if (rot.at(h + i + j + t) != -rot.at(i + j + k - 1 - t)) okc = false;
        if (!okc) continue;
        CommutatorWitness wit;
        wit.a = seg(rot, 0, i);
        wit.b = seg(rot, i, j);
        wit.c = seg(rot, i + j, k);
        std::vector<Sym> head;
        for (int t = 0; t < r; ++t) head.push_back(rep.at(t));
        wit.conjugator = compose(cr.conjugator, Word(w.alphabet(), std::move(head)));
        return wit;
      }
    }
    if (n == 0) break;
  }
  return std::nullopt;
}

}  // namespace hyptower
