#include "hyptower/document.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hyptower {

namespace {

enum class Tok { Word, Str, LBrace, RBrace, Equals, Arrow, Comma, Colon, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto emit = [&](Tok k, std::string t, int l, int c) { out.push_back({k, std::move(t), l, c}); };
  while (i < text.size()) {
    char c = text[i];
    int l = line, cl = col;
    if (c == '\n') {
      emit(Tok::Newline, "\n", l, cl);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i, ++col;
      continue;
    }
    if (c == '"') {
      std::string s;
      ++i;
      ++col;
      while (i < text.size() && text[i] != '"' && text[i] != '\n') {
        s.push_back(text[i]);
        ++i;
        ++col;
      }
      if (i >= text.size() || text[i] != '"')
        throw ParseError("unterminated string", l, cl);
      ++i;
      ++col;
      emit(Tok::Str, std::move(s), l, cl);
      continue;
    }
    if (c == '{') { emit(Tok::LBrace, "{", l, cl); ++i; ++col; continue; }
    if (c == '}') { emit(Tok::RBrace, "}", l, cl); ++i; ++col; continue; }
    if (c == '=') { emit(Tok::Equals, "=", l, cl); ++i; ++col; continue; }
    if (c == ',') { emit(Tok::Comma, ",", l, cl); ++i; ++col; continue; }
    if (c == ':') { emit(Tok::Colon, ":", l, cl); ++i; ++col; continue; }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      emit(Tok::Arrow, "->", l, cl);
      i += 2;
      col += 2;
      continue;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string s(1, c);
      ++i;
      ++col;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        s.push_back(text[i]);
        ++i;
        ++col;
      }
      if (s == "-") throw ParseError("stray '-'", l, cl);
      emit(Tok::Word, std::move(s), l, cl);
      continue;
    }
    if (word_start(c)) {
      std::string s;
      while (i < text.size() && word_char(text[i])) {
        s.push_back(text[i]);
        ++i;
        ++col;
      }
      emit(Tok::Word, std::move(s), l, cl);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const char* describe(Tok k) {
  switch (k) {
    case Tok::Word: return "a name";
    case Tok::Str: return "a quoted word";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  InputDocument doc;

  const Token& peek() const { return toks[pos]; }
  const Token& get() { return toks[pos == toks.size() - 1 ? pos : pos++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(msg, t.line, t.col);
  }

  const Token& expect(Tok k) {
    const Token& t = get();
    if (t.kind != k)
      fail(t, std::string("expected ") + describe(k) + ", found " +
                  (t.kind == Tok::Word || t.kind == Tok::Str ? "'" + t.text + "'"
                                                             : describe(t.kind)));
    return t;
  }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) ++pos;
  }

  void end_line() {
    const Token& t = get();
    if (t.kind != Tok::Newline && t.kind != Tok::End)
      fail(t, "expected end of line, found '" + t.text + "'");
  }

  int expect_int() {
    const Token& t = expect(Tok::Word);
    try {
      size_t used = 0;
      int v = std::stoi(t.text, &used);
      if (used == t.text.size()) return v;
    } catch (const std::exception&) {
    }
    fail(t, "expected an integer, found '" + t.text + "'");
  }

  bool expect_bool() {
    const Token& t = expect(Tok::Word);
    if (t.text == "true") return true;
    if (t.text == "false") return false;
    fail(t, "expected true or false, found '" + t.text + "'");
  }

  std::vector<std::string> word_list() {
    std::vector<std::string> names;
    while (peek().kind == Tok::Word) names.push_back(get().text);
    return names;
  }

  // Converts domain errors raised while assembling a declaration into
  // positioned parse errors.
  template <typename F>
  auto at(const Token& t, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(t, e.what());
    }
  }

  template <typename T>
  void declare(std::vector<std::pair<std::string, T>>& into, const Token& name_tok, T value) {
    for (const auto& [n, v] : into)
      if (n == name_tok.text) fail(name_tok, "duplicate name '" + name_tok.text + "'");
    into.emplace_back(name_tok.text, std::move(value));
  }

  void parse() {
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::End) return;
      const Token& kw = expect(Tok::Word);
      const Token& name = expect(Tok::Word);
      expect(Tok::LBrace);
      if (kw.text == "presentation")
        declare(doc.presentations, name, presentation_block(name));
      else if (kw.text == "surface")
        declare(doc.surfaces, name, surface_block(name));
      else if (kw.text == "map")
        declare(doc.maps, name, map_block());
      else if (kw.text == "decomposition")
        declare(doc.decompositions, name, decomposition_block());
      else if (kw.text == "floor")
        declare(doc.floors, name, floor_block());
      else if (kw.text == "tower")
        declare(doc.towers, name, tower_block());
      else
        fail(kw, "unknown declaration '" + kw.text + "'");
    }
  }

  Presentation presentation_block(const Token& name) {
    std::vector<std::string> gens;
    std::vector<std::string> relators;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) { get(); break; }
      const Token& key = expect(Tok::Word);
      expect(Tok::Equals);
      if (key.text == "generators")
        gens = word_list();
      else if (key.text == "relator")
        relators.push_back(expect(Tok::Str).text);
      else
        fail(key, "unknown key '" + key.text + "' in a presentation block");
      end_line();
    }
    return at(name, [&] { return make_presentation(gens, relators); });
  }

  SurfaceDatum inline_datum() {
    const Token& o = expect(Tok::Word);
    bool orientable;
    if (o.text == "orientable")
      orientable = true;
    else if (o.text == "nonorientable")
      orientable = false;
    else
      fail(o, "expected orientable or nonorientable, found '" + o.text + "'");
    int euler = expect_int();
    int boundary = expect_int();
    return at(o, [&] { return surface_datum(orientable, euler, boundary); });
  }

  SurfaceDatum surface_block(const Token& name) {
    bool orientable = true, have_or = false, have_chi = false, have_bd = false;
    int euler = 0, boundary = 0;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) { get(); break; }
      const Token& key = expect(Tok::Word);
      expect(Tok::Equals);
      if (key.text == "orientable") {
        orientable = expect_bool();
        have_or = true;
      } else if (key.text == "euler") {
        euler = expect_int();
        have_chi = true;
      } else if (key.text == "boundary") {
        boundary = expect_int();
        have_bd = true;
      } else {
        fail(key, "unknown key '" + key.text + "' in a surface block");
      }
      end_line();
    }
    if (!have_or || !have_chi || !have_bd)
      fail(name, "a surface block needs orientable, euler and boundary");
    return at(name, [&] { return surface_datum(orientable, euler, boundary); });
  }

  std::map<std::string, std::string> map_block() {
    std::map<std::string, std::string> images;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) { get(); break; }
      const Token& g = expect(Tok::Word);
      expect(Tok::Arrow);
      const Token& w = expect(Tok::Str);
      if (!images.emplace(g.text, w.text).second)
        fail(g, "two images for '" + g.text + "'");
      if (peek().kind == Tok::Comma) get();
    }
    return images;
  }

  GraphOfGroups decomposition_block() {
    GraphOfGroups g;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) { get(); break; }
      const Token& kw = expect(Tok::Word);
      const Token& id = expect(Tok::Word);
      expect(Tok::LBrace);
      if (kw.text == "vertex")
        g.vertices.push_back(vertex_block(id));
      else if (kw.text == "edge")
        g.edges.push_back(edge_block(id, g));
      else
        fail(kw, "expected vertex or edge, found '" + kw.text + "'");
    }
    return g;
  }

  VertexSpec vertex_block(const Token& id) {
    bool have_kind = false, is_surface = false;
    SurfaceDatum datum;
    std::vector<std::string> gens;
    std::vector<std::string> relators;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) { get(); break; }
      const Token& key = expect(Tok::Word);
      expect(Tok::Equals);
      if (key.text == "kind") {
        const Token& k = expect(Tok::Word);
        if (k.text == "plain") {
          is_surface = false;
        } else if (k.text == "surface") {
          is_surface = true;
          datum = inline_datum();
        } else {
          fail(k, "expected plain or surface, found '" + k.text + "'");
        }
        have_kind = true;
      } else if (key.text == "generators") {
        gens = word_list();
      } else if (key.text == "relator") {
        relators.push_back(expect(Tok::Str).text);
      } else {
        fail(key, "unknown key '" + key.text + "' in a vertex block");
      }
      end_line();
    }
    if (!have_kind) fail(id, "vertex '" + id.text + "' has no kind");
    if (is_surface) {
      if (!relators.empty())
        fail(id, "surface vertices take no relators; the presentation is derived");
      return at(id, [&] {
        return surface_vertex(id.text, datum, renamed(standard_presentation(datum), gens));
      });
    }
    return at(id, [&] { return plain_vertex(id.text, make_presentation(gens, relators)); });
  }

  EdgeSpec edge_block(const Token& id, const GraphOfGroups& g) {
    EdgeSpec e;
    e.id = id.text;
    bool have_tree = false;
    std::vector<std::pair<std::string, Word>> embeddings;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) { get(); break; }
      const Token& key = expect(Tok::Word);
      expect(Tok::Equals);
      if (key.text == "embedding_at") {
        const Token& vid = expect(Tok::Word);
        expect(Tok::Colon);
        const Token& wt = expect(Tok::Str);
        const VertexSpec* v = g.vertex(vid.text);
        if (!v) fail(vid, "unknown vertex '" + vid.text + "'");
        Word w = at(wt, [&] { return parse_word(v->presentation.generators, wt.text); });
        embeddings.emplace_back(vid.text, std::move(w));
      } else if (key.text == "tree") {
        e.tree = expect_bool();
        have_tree = true;
      } else if (key.text == "stable_letter") {
        e.stable_letter = expect(Tok::Word).text;
      } else {
        fail(key, "unknown key '" + key.text + "' in an edge block");
      }
      end_line();
    }
    if (embeddings.size() != 2)
      fail(id, "edge '" + id.text + "' needs exactly two embedding_at lines");
    if (!have_tree) fail(id, "edge '" + id.text + "' does not say tree = true|false");
    e.from = embeddings[0].first;
    e.embed_from = embeddings[0].second;
    e.to = embeddings[1].first;
    e.embed_to = embeddings[1].second;
    return e;
  }

  DocFloor floor_block() {
    DocFloor f;
    Token first = peek();
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) { get(); break; }
      const Token& key = expect(Tok::Word);
      expect(Tok::Equals);
      if (key.text == "decomposition") {
        const Token& n = expect(Tok::Word);
        if (!doc.find_decomposition(n.text)) fail(n, "unknown decomposition '" + n.text + "'");
        f.decomposition = n.text;
      } else if (key.text == "retraction") {
        const Token& n = expect(Tok::Word);
        if (!doc.find_map(n.text)) fail(n, "unknown map '" + n.text + "'");
        f.retraction = n.text;
      } else if (key.text == "extended_letter") {
        f.extended_letter = expect(Tok::Word).text;
      } else if (key.text == "extended_retraction") {
        const Token& n = expect(Tok::Word);
        if (!doc.find_map(n.text)) fail(n, "unknown map '" + n.text + "'");
        f.extended_retraction = n.text;
      } else {
        fail(key, "unknown key '" + key.text + "' in a floor block");
      }
      end_line();
    }
    if (f.decomposition.empty()) fail(first, "a floor block needs a decomposition");
    if (f.retraction.empty()) fail(first, "a floor block needs a retraction");
    if (f.extended_letter.empty() != f.extended_retraction.empty())
      fail(first, "extended_letter and extended_retraction come together");
    return f;
  }

  std::string role_spec() {
    const Token& r = expect(Tok::Word);
    if (r.text == "base" || r.text == "free") return r.text;
    if (r.text == "surface") return "surface:" + std::to_string(expect_int());
    fail(r, "expected base, free or surface <index>, found '" + r.text + "'");
  }

  DocTower tower_block() {
    DocTower t;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) { get(); break; }
      const Token& key = expect(Tok::Word);
      expect(Tok::Equals);
      if (key.text == "floor") {
        const Token& n = expect(Tok::Word);
        if (!doc.find_floor(n.text)) fail(n, "unknown floor '" + n.text + "'");
        t.floors.push_back(n.text);
      } else if (key.text == "ambient") {
        const Token& n = expect(Tok::Word);
        if (!doc.find_presentation(n.text)) fail(n, "unknown presentation '" + n.text + "'");
        t.ambient = n.text;
      } else if (key.text == "base") {
        const Token& n = expect(Tok::Word);
        if (n.text != "trivial") {
          if (!doc.find_presentation(n.text)) fail(n, "unknown presentation '" + n.text + "'");
          t.base = n.text;
        }
      } else if (key.text == "free_rank") {
        t.free_rank = expect_int();
      } else if (key.text == "ground_surface") {
        t.ground_surfaces.push_back(inline_datum());
      } else if (key.text == "role") {
        VertexRole vr;
        vr.vertex = expect(Tok::Word).text;
        expect(Tok::Colon);
        vr.role = role_spec();
        t.roles.push_back(std::move(vr));
      } else if (key.text == "part") {
        GroundPart part;
        part.role = role_spec();
        expect(Tok::Colon);
        part.generators = word_list();
        t.parts.push_back(std::move(part));
      } else if (key.text == "witness") {
        DocWitness w;
        w.floor = expect_int();
        w.vertex = expect(Tok::Word).text;
        w.generator = expect(Tok::Word).text;
        w.text = expect(Tok::Str).text;
        if (w.floor < 0 || w.floor >= static_cast<int>(t.floors.size()))
          fail(key, "witness floor index " + std::to_string(w.floor) + " out of range");
        t.witnesses.push_back(std::move(w));
      } else {
        fail(key, "unknown key '" + key.text + "' in a tower block");
      }
      end_line();
    }
    return t;
  }
};

template <typename T>
const T* find_named(const std::vector<std::pair<std::string, T>>& v, const std::string& name) {
  for (const auto& [n, value] : v)
    if (n == name) return &value;
  return nullptr;
}

void print_datum_inline(std::ostream& out, const SurfaceDatum& d) {
  out << (d.orientable ? "orientable " : "nonorientable ") << d.euler << " " << d.boundary;
}

void print_role(std::ostream& out, const std::string& role) {
  if (role.rfind("surface:", 0) == 0)
    out << "surface " << role.substr(8);
  else
    out << role;
}

}  // namespace

const Presentation* InputDocument::find_presentation(const std::string& name) const {
  return find_named(presentations, name);
}
const SurfaceDatum* InputDocument::find_surface(const std::string& name) const {
  return find_named(surfaces, name);
}
const std::map<std::string, std::string>* InputDocument::find_map(const std::string& name) const {
  return find_named(maps, name);
}
const GraphOfGroups* InputDocument::find_decomposition(const std::string& name) const {
  return find_named(decompositions, name);
}
const DocFloor* InputDocument::find_floor(const std::string& name) const {
  return find_named(floors, name);
}
const DocTower* InputDocument::find_tower(const std::string& name) const {
  return find_named(towers, name);
}

InputDocument parse_document(const std::string& text) {
  Parser p;
  p.toks = lex(text);
  p.parse();
  return std::move(p.doc);
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string print_document(const InputDocument& doc) {
  std::ostringstream out;
  bool first = true;
  auto gap = [&] {
    if (!first) out << "\n";
    first = false;
  };
  for (const auto& [name, p] : doc.presentations) {
    gap();
    out << "presentation " << name << " {\n  generators =";
    for (const auto& g : p.generators->names()) out << " " << g;
    out << "\n";
    for (const auto& r : p.relators) out << "  relator = \"" << to_string(r) << "\"\n";
    out << "}\n";
  }
  for (const auto& [name, s] : doc.surfaces) {
    gap();
    out << "surface " << name << " {\n";
    out << "  orientable = " << (s.orientable ? "true" : "false") << "\n";
    out << "  euler = " << s.euler << "\n";
    out << "  boundary = " << s.boundary << "\n";
    out << "}\n";
  }
  for (const auto& [name, m] : doc.maps) {
    gap();
    out << "map " << name << " {\n";
    for (const auto& [g, w] : m) out << "  " << g << " -> \"" << w << "\"\n";
    out << "}\n";
  }
  for (const auto& [name, g] : doc.decompositions) {
    gap();
    out << "decomposition " << name << " {\n";
    for (const auto& v : g.vertices) {
      out << "  vertex " << v.id << " {\n    kind = ";
      if (v.is_surface) {
        out << "surface ";
        print_datum_inline(out, *v.datum);
      } else {
        out << "plain";
      }
      out << "\n    generators =";
      for (const auto& n : v.presentation.generators->names()) out << " " << n;
      out << "\n";
      if (!v.is_surface)
        for (const auto& r : v.presentation.relators)
          out << "    relator = \"" << to_string(r) << "\"\n";
      out << "  }\n";
    }
    for (const auto& e : g.edges) {
      out << "  edge " << e.id << " {\n";
      out << "    embedding_at = " << e.from << ": \"" << to_string(e.embed_from) << "\"\n";
      out << "    embedding_at = " << e.to << ": \"" << to_string(e.embed_to) << "\"\n";
      out << "    tree = " << (e.tree ? "true" : "false") << "\n";
      if (!e.stable_letter.empty()) out << "    stable_letter = " << e.stable_letter << "\n";
      out << "  }\n";
    }
    out << "}\n";
  }
  for (const auto& [name, f] : doc.floors) {
    gap();
    out << "floor " << name << " {\n";
    out << "  decomposition = " << f.decomposition << "\n";
    out << "  retraction = " << f.retraction << "\n";
    if (!f.extended_letter.empty()) {
      out << "  extended_letter = " << f.extended_letter << "\n";
      out << "  extended_retraction = " << f.extended_retraction << "\n";
    }
    out << "}\n";
  }
  for (const auto& [name, t] : doc.towers) {
    gap();
    out << "tower " << name << " {\n";
    for (const auto& f : t.floors) out << "  floor = " << f << "\n";
    if (!t.ambient.empty()) out << "  ambient = " << t.ambient << "\n";
    if (!t.base.empty()) out << "  base = " << t.base << "\n";
    if (t.free_rank != 0) out << "  free_rank = " << t.free_rank << "\n";
    for (const auto& s : t.ground_surfaces) {
      out << "  ground_surface = ";
      print_datum_inline(out, s);
      out << "\n";
    }
    for (const auto& r : t.roles) {
      out << "  role = " << r.vertex << ": ";
      print_role(out, r.role);
      out << "\n";
    }
    for (const auto& p : t.parts) {
      out << "  part = ";
      print_role(out, p.role);
      out << ":";
      for (const auto& g : p.generators) out << " " << g;
      out << "\n";
    }
    for (const auto& w : t.witnesses)
      out << "  witness = " << w.floor << " " << w.vertex << " " << w.generator << " \""
          << w.text << "\"\n";
    out << "}\n";
  }
  return out.str();
}

FloorCandidate resolve_floor(const InputDocument& doc, const std::string& name) {
  const DocFloor* f = doc.find_floor(name);
  if (!f) throw Error("no floor named '" + name + "'");
  const GraphOfGroups* g = doc.find_decomposition(f->decomposition);
  const auto* r = doc.find_map(f->retraction);
  if (!g || !r) throw Error("floor '" + name + "' has dangling references");
  FloorCandidate c;
  c.decomposition = *g;
  c.retraction_images = *r;
  if (!f->extended_letter.empty()) {
    const auto* r2 = doc.find_map(f->extended_retraction);
    if (!r2) throw Error("floor '" + name + "' has dangling references");
    c.extended_letter = f->extended_letter;
    c.extended_retraction_images = *r2;
  }
  return c;
}

TowerCandidate resolve_tower(const InputDocument& doc, const std::string& name) {
  const DocTower* t = doc.find_tower(name);
  if (!t) throw Error("no tower named '" + name + "'");
  TowerCandidate c;
  for (const auto& f : t->floors) c.floors.push_back(resolve_floor(doc, f));
  if (!t->ambient.empty()) {
    const Presentation* p = doc.find_presentation(t->ambient);
    if (!p) throw Error("tower '" + name + "' has dangling references");
    c.ambient = *p;
  }
  if (!t->base.empty()) {
    const Presentation* p = doc.find_presentation(t->base);
    if (!p) throw Error("tower '" + name + "' has dangling references");
    c.ground.base = *p;
  }
  c.ground.free_rank = t->free_rank;
  c.ground.surfaces = t->ground_surfaces;
  c.roles = t->roles;
  c.parts = t->parts;
  c.base_witnesses.resize(t->floors.size());
  for (const auto& w : t->witnesses) {
    BaseWitness& bw = c.base_witnesses.at(w.floor);
    if (!bw.vertex.empty() && bw.vertex != w.vertex)
      throw Error("witnesses for floor " + std::to_string(w.floor) +
                  " name two different vertices");
    bw.vertex = w.vertex;
    bw.words[w.generator] = w.text;
  }
  return c;
}

}  // namespace hyptower
