#include <cctype>
#include <map>
#include <set>

#include "markov/dsl.hpp"

namespace markov {

bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(id[0])) && id[0] != '_') return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-') {
      return false;
    }
  }
  return true;
}

namespace {

struct Pos {
  int line = 1;
  int col = 1;
  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

struct Value {
  enum class Kind { Object, Array, String, Integer };
  Kind kind = Kind::Object;
  Pos pos;
  std::vector<std::pair<std::string, Value>> members;  // object, in source order
  std::vector<Value> items;                            // array
  std::string text;                                    // string
  long long integer = 0;
};

// Thrown for unrecoverable syntax problems; converted into one Issue.
struct SyntaxError {
  Pos pos;
  std::string message;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  struct Token {
    enum class Kind { Punct, String, Integer, Identifier, End };
    Kind kind = Kind::End;
    char punct = 0;
    std::string text;
    long long integer = 0;
    Pos pos;
  };

  const Token& peek() {
    if (!current_) current_ = lex();
    return *current_;
  }
  Token take() {
    Token t = peek();
    current_.reset();
    return t;
  }

 private:
  std::string_view text_;
  std::size_t at_ = 0;
  Pos pos_;
  std::optional<Token> current_;

  char look() const { return at_ < text_.size() ? text_[at_] : '\0'; }
  void advance() {
    if (at_ >= text_.size()) return;
    if (text_[at_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++at_;
  }

  void skip_trivia() {
    while (at_ < text_.size()) {
      const char c = look();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (at_ < text_.size() && look() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token lex() {
    skip_trivia();
    Token t;
    t.pos = pos_;
    if (at_ >= text_.size()) return t;
    const char c = look();
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ':' || c == ',') {
      t.kind = Token::Kind::Punct;
      t.punct = c;
      advance();
      return t;
    }
    if (c == '"') {
      advance();
      std::string out;
      while (true) {
        if (at_ >= text_.size()) throw SyntaxError{t.pos, "unterminated string"};
        const char d = look();
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\n') throw SyntaxError{t.pos, "newline inside string"};
        if (d == '\\') {
          advance();
          const char e = look();
          if (e == '"' || e == '\\') {
            out.push_back(e);
          } else if (e == 'n') {
            out.push_back('\n');
          } else if (e == 't') {
            out.push_back('\t');
          } else {
            throw SyntaxError{pos_, std::string("unknown escape '\\") + e + "'"};
          }
          advance();
          continue;
        }
        out.push_back(d);
        advance();
      }
      t.kind = Token::Kind::String;
      t.text = std::move(out);
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && at_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[at_ + 1])))) {
      std::string digits;
      if (c == '-') {
        digits.push_back(c);
        advance();
      }
      while (std::isdigit(static_cast<unsigned char>(look()))) {
        digits.push_back(look());
        advance();
      }
      t.kind = Token::Kind::Integer;
      try {
        t.integer = std::stoll(digits);
      } catch (...) {
        throw SyntaxError{t.pos, "integer out of range"};
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (std::isalnum(static_cast<unsigned char>(look())) || look() == '_' || look() == '.' ||
             look() == '-') {
        word.push_back(look());
        advance();
      }
      t.kind = Token::Kind::Identifier;
      t.text = std::move(word);
      return t;
    }
    throw SyntaxError{t.pos, std::string("unexpected character '") + c + "'"};
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  Value parse_document() {
    Value v = parse_value();
    const auto& end = lexer_.peek();
    if (end.kind != Lexer::Token::Kind::End) {
      throw SyntaxError{end.pos, "trailing content after document"};
    }
    if (v.kind != Value::Kind::Object) throw SyntaxError{v.pos, "document must be an object"};
    return v;
  }

 private:
  Lexer lexer_;

  Value parse_value() {
    const auto& t = lexer_.peek();
    switch (t.kind) {
      case Lexer::Token::Kind::Punct:
        if (t.punct == '{') return parse_object();
        if (t.punct == '[') return parse_array();
        throw SyntaxError{t.pos, std::string("unexpected '") + t.punct + "'"};
      case Lexer::Token::Kind::String: {
        Value v;
        v.kind = Value::Kind::String;
        v.pos = t.pos;
        v.text = lexer_.take().text;
        return v;
      }
      case Lexer::Token::Kind::Integer: {
        Value v;
        v.kind = Value::Kind::Integer;
        v.pos = t.pos;
        v.integer = lexer_.take().integer;
        return v;
      }
      case Lexer::Token::Kind::Identifier:
        throw SyntaxError{t.pos, "bare word '" + t.text + "' is not a value (quote strings)"};
      case Lexer::Token::Kind::End:
        throw SyntaxError{t.pos, "unexpected end of input"};
    }
    throw SyntaxError{t.pos, "unreachable"};
  }

  void expect_punct(char c) {
    const auto t = lexer_.take();
    if (t.kind != Lexer::Token::Kind::Punct || t.punct != c) {
      throw SyntaxError{t.pos, std::string("expected '") + c + "'"};
    }
  }

  Value parse_object() {
    Value v;
    v.kind = Value::Kind::Object;
    v.pos = lexer_.peek().pos;
    expect_punct('{');
    if (lexer_.peek().kind == Lexer::Token::Kind::Punct && lexer_.peek().punct == '}') {
      lexer_.take();
      return v;
    }
    while (true) {
      const auto key_token = lexer_.take();
      std::string key;
      if (key_token.kind == Lexer::Token::Kind::Identifier ||
          key_token.kind == Lexer::Token::Kind::String) {
        key = key_token.text;
      } else if (key_token.kind == Lexer::Token::Kind::Integer && key_token.integer >= 0) {
        key = std::to_string(key_token.integer);
      } else {
        throw SyntaxError{key_token.pos, "expected a member key"};
      }
      expect_punct(':');
      Value member = parse_value();
      for (const auto& [existing, _] : v.members) {
        if (existing == key) throw SyntaxError{key_token.pos, "duplicate key '" + key + "'"};
      }
      v.members.emplace_back(std::move(key), std::move(member));

      const auto sep = lexer_.take();
      if (sep.kind == Lexer::Token::Kind::Punct && sep.punct == ',') continue;
      if (sep.kind == Lexer::Token::Kind::Punct && sep.punct == '}') break;
      throw SyntaxError{sep.pos, "expected ',' or '}'"};
    }
    return v;
  }

  Value parse_array() {
    Value v;
    v.kind = Value::Kind::Array;
    v.pos = lexer_.peek().pos;
    expect_punct('[');
    if (lexer_.peek().kind == Lexer::Token::Kind::Punct && lexer_.peek().punct == ']') {
      lexer_.take();
      return v;
    }
    while (true) {
      v.items.push_back(parse_value());
      const auto sep = lexer_.take();
      if (sep.kind == Lexer::Token::Kind::Punct && sep.punct == ',') continue;
      if (sep.kind == Lexer::Token::Kind::Punct && sep.punct == ']') break;
      throw SyntaxError{sep.pos, "expected ',' or ']'"};
    }
    return v;
  }
};

// ---------------------------------------------------------------------------
// Schema resolution
// ---------------------------------------------------------------------------

class Resolver {
 public:
  explicit Resolver(std::vector<Issue>& issues) : issues_(issues) {}

  std::optional<MarkovDiagram> resolve(const Value& doc) {
    MarkovDiagram d;
    check_fields(doc, {"name", "palette", "start", "productions", "gluings", "notes"});

    d.name = identifier(required(doc, "name"), "diagram name");
    const Value& palette = required(doc, "palette");
    if (expect_kind(palette, Value::Kind::Object, "palette")) {
      for (const auto& [key, value] : palette.members) {
        const auto color = parse_color_key(key, palette.pos);
        if (!color) continue;
        if (expect_kind(value, Value::Kind::String, "palette entry")) {
          d.palette[*color] = value.text;
        }
      }
    }
    d.start = graph(required(doc, "start"), "start");

    const Value& productions = required(doc, "productions");
    if (expect_kind(productions, Value::Kind::Array, "productions")) {
      for (const auto& item : productions.items) d.productions.push_back(production(item));
    }
    const Value& gluings = required(doc, "gluings");
    if (expect_kind(gluings, Value::Kind::Array, "gluings")) {
      for (const auto& item : gluings.items) d.gluings.push_back(gluing(item, d));
    }
    if (const Value* notes = find(doc, "notes")) {
      if (expect_kind(*notes, Value::Kind::String, "notes")) d.notes = notes->text;
    }

    std::set<std::string> names;
    for (const auto& p : d.productions) {
      if (!names.insert(p.name).second) {
        issues_.push_back({"DuplicateName", p.name, "duplicate production name"});
      }
    }
    std::set<std::string> gluing_names;
    for (const auto& g : d.gluings) {
      if (!gluing_names.insert(g.name).second) {
        issues_.push_back({"DuplicateName", g.name, "duplicate gluing name"});
      }
    }

    if (!issues_.empty()) return std::nullopt;
    d.normalize();
    return d;
  }

 private:
  std::vector<Issue>& issues_;

  void error(const Pos& pos, const std::string& message) {
    issues_.push_back({"SyntaxError", pos.str(), message});
  }

  const Value* find(const Value& object, const std::string& key) {
    for (const auto& [k, v] : object.members) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  const Value& required(const Value& object, const std::string& key) {
    const Value* v = find(object, key);
    if (v == nullptr) {
      error(object.pos, "missing required field '" + key + "'");
      return required_placeholder();
    }
    return *v;
  }

  void check_fields(const Value& object, const std::set<std::string>& allowed) {
    if (object.kind != Value::Kind::Object) return;
    for (const auto& [key, value] : object.members) {
      if (allowed.count(key) == 0) {
        issues_.push_back({"UnknownField", value.pos.str(), "unknown field '" + key + "'"});
      }
    }
  }

  bool expect_kind(const Value& v, Value::Kind kind, const std::string& what) {
    // The zero-initialized placeholder from required() is skipped silently;
    // its absence is already reported.
    if (&v == &required_placeholder()) return false;
    if (v.kind != kind) {
      const char* names[] = {"object", "array", "string", "integer"};
      error(v.pos, what + " must be a " + names[static_cast<int>(kind)]);
      return false;
    }
    return true;
  }

  static const Value& required_placeholder() {
    static const Value missing{};
    return missing;
  }

  std::string identifier(const Value& v, const std::string& what) {
    if (!expect_kind(v, Value::Kind::String, what)) return "_missing_";
    if (!valid_identifier(v.text)) {
      error(v.pos, what + " '" + v.text + "' is not a valid identifier");
      return "_missing_";
    }
    return v.text;
  }

  std::optional<Color> parse_color_key(const std::string& key, const Pos& pos) {
    for (char c : key) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        error(pos, "palette key '" + key + "' is not a non-negative integer");
        return std::nullopt;
      }
    }
    if (key.empty()) return std::nullopt;
    return static_cast<Color>(std::stoll(key));
  }

  Color color_of(const Value& object, const std::string& what) {
    const Value& v = required(object, "color");
    if (&v == &required_placeholder()) return 0;
    if (v.kind != Value::Kind::Integer || v.integer < 0) {
      error(v.pos, what + " color must be a non-negative integer");
      return 0;
    }
    return static_cast<Color>(v.integer);
  }

  ColoredGraph graph(const Value& v, const std::string& what) {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    if (!expect_kind(v, Value::Kind::Object, what)) return {};
    check_fields(v, {"vertices", "edges"});

    std::set<std::string> ids;
    const Value& vs = required(v, "vertices");
    if (expect_kind(vs, Value::Kind::Array, what + ".vertices")) {
      for (const auto& item : vs.items) {
        if (!expect_kind(item, Value::Kind::Object, "vertex")) continue;
        check_fields(item, {"id", "color"});
        Vertex vertex;
        vertex.id = identifier(required(item, "id"), "vertex id");
        vertex.color = color_of(item, "vertex");
        if (!ids.insert(vertex.id).second) {
          issues_.push_back({"DuplicateName", vertex.id, "duplicate vertex id in " + what});
        }
        vertices.push_back(std::move(vertex));
      }
    }
    const Value* es = find(v, "edges");
    if (es != nullptr && expect_kind(*es, Value::Kind::Array, what + ".edges")) {
      for (const auto& item : es->items) {
        if (!expect_kind(item, Value::Kind::Object, "edge")) continue;
        check_fields(item, {"id", "ends", "color"});
        Edge edge;
        edge.id = identifier(required(item, "id"), "edge id");
        edge.color = color_of(item, "edge");
        if (!ids.insert(edge.id).second) {
          issues_.push_back({"DuplicateName", edge.id, "duplicate cell id in " + what});
        }
        const Value& ends = required(item, "ends");
        if (expect_kind(ends, Value::Kind::Array, "edge ends")) {
          if (ends.items.size() != 2) {
            error(ends.pos, "edge ends must list exactly two vertices");
          } else {
            for (int i = 0; i < 2; ++i) {
              edge.ends[i] = identifier(ends.items[i], "edge end");
              bool known = false;
              for (const auto& vertex : vertices) {
                if (vertex.id == edge.ends[i]) known = true;
              }
              if (!known) {
                issues_.push_back({"UnknownReference", edge.ends[i],
                                   "edge '" + edge.id + "' endpoint not declared in " + what});
              }
            }
          }
        }
        edges.push_back(std::move(edge));
      }
    }
    return ColoredGraph(std::move(vertices), std::move(edges));
  }

  Production production(const Value& v) {
    Production p;
    if (!expect_kind(v, Value::Kind::Object, "production")) return p;
    check_fields(v, {"name", "top", "bottom", "map"});
    p.name = identifier(required(v, "name"), "production name");
    p.top = graph(required(v, "top"), p.name + ".top");
    p.bottom = graph(required(v, "bottom"), p.name + ".bottom");

    const Value& map = required(v, "map");
    if (expect_kind(map, Value::Kind::Object, p.name + ".map")) {
      for (const auto& [key, value] : map.members) {
        if (!valid_identifier(key)) {
          error(value.pos, "map key '" + key + "' is not a valid identifier");
          continue;
        }
        if (!p.top.has_vertex(key)) {
          issues_.push_back({"UnknownReference", key, p.name + ".map key is not a top vertex"});
          continue;
        }
        if (!expect_kind(value, Value::Kind::String, "map target")) continue;
        const auto target = subdivision_point_from_string(value.text);
        if (!target) {
          error(value.pos, "map target '" + value.text + "' must be \"v:<id>\" or \"bary:<id>\"");
          continue;
        }
        const bool exists = target->kind == SubdivisionPoint::Kind::Vertex
                                ? p.bottom.has_vertex(target->id)
                                : p.bottom.has_edge(target->id);
        if (!exists) {
          issues_.push_back({"UnknownReference", target->id,
                             p.name + ".map target not in the bottom graph"});
          continue;
        }
        p.map[key] = *target;
      }
      for (const auto& vertex : p.top.vertices()) {
        if (p.map.count(vertex.id) == 0) {
          error(map.pos, p.name + ".map has no image for top vertex '" + vertex.id + "'");
        }
      }
    }
    return p;
  }

  std::map<std::string, std::string> vertex_map(const Value& v, const ColoredGraph& dom,
                                                const ColoredGraph& cod, const std::string& what) {
    std::map<std::string, std::string> out;
    if (!expect_kind(v, Value::Kind::Object, what)) return out;
    for (const auto& [key, value] : v.members) {
      if (!dom.has_vertex(key)) {
        issues_.push_back({"UnknownReference", key, what + " key is not a source vertex"});
        continue;
      }
      if (!expect_kind(value, Value::Kind::String, what + " target")) continue;
      if (!cod.has_vertex(value.text)) {
        issues_.push_back({"UnknownReference", value.text, what + " target is not a vertex"});
        continue;
      }
      out[key] = value.text;
    }
    for (const auto& vertex : dom.vertices()) {
      if (out.count(vertex.id) == 0) {
        error(v.pos, what + " has no image for vertex '" + vertex.id + "'");
      }
    }
    return out;
  }

  Gluing gluing(const Value& v, const MarkovDiagram& d) {
    Gluing g;
    if (!expect_kind(v, Value::Kind::Object, "gluing")) return g;
    check_fields(v, {"name", "src", "dst", "top_map", "bottom_map"});
    g.name = identifier(required(v, "name"), "gluing name");
    g.src = identifier(required(v, "src"), "gluing src");
    g.dst = identifier(required(v, "dst"), "gluing dst");

    const Production* src = d.find_production(g.src);
    const Production* dst = d.find_production(g.dst);
    if (src == nullptr) {
      issues_.push_back({"UnknownReference", g.src, "gluing '" + g.name + "' src production"});
    }
    if (dst == nullptr) {
      issues_.push_back({"UnknownReference", g.dst, "gluing '" + g.name + "' dst production"});
    }
    if (src == nullptr || dst == nullptr) return g;

    g.top_map = vertex_map(required(v, "top_map"), src->top, dst->top, g.name + ".top_map");
    g.bottom_map =
        vertex_map(required(v, "bottom_map"), src->bottom, dst->bottom, g.name + ".bottom_map");
    return g;
  }
};

}  // namespace

ParseResult parse_diagram(std::string_view text) {
  ParseResult result;
  try {
    Parser parser(text);
    const Value doc = parser.parse_document();
    Resolver resolver(result.issues);
    result.diagram = resolver.resolve(doc);
  } catch (const SyntaxError& e) {
    result.issues.push_back({"SyntaxError", e.pos.str(), e.message});
  }
  return result;
}

}  // namespace markov
