#include <cctype>
#include <map>
#include <set>

#include "coffin/sketch/program.hpp"

namespace coffin::sketch {

std::string to_string(Tools tools) {
  return tools == Tools::StraightedgeOnly ? "straightedge_only" : "compass_and_straightedge";
}

std::string to_string(ValueType type) {
  switch (type) {
    case ValueType::Point:
      return "point";
    case ValueType::Line:
      return "line";
    case ValueType::Circle:
      return "circle";
    case ValueType::Length:
      return "length";
    case ValueType::Ratio:
      return "ratio";
  }
  return "?";
}

SyntaxError::SyntaxError(int line, int col, const std::string& message)
    : SketchError("line " + std::to_string(line) + ":" + std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

StaticError::StaticError(int line, const std::string& message)
    : SketchError("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::Name:
      return name;
    case Kind::Number:
      return exactnum::to_string(number);
    case Kind::Call: {
      std::string out = name + "(";
      for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i].to_string();
      return out + ")";
    }
  }
  return name;
}

std::string Statement::to_string() const {
  std::string out = kind == Kind::Bind ? "bind " + name + " = " : "assert ";
  out += callee + "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i].to_string();
  return out + ")";
}

const Param* Program::find_param(const std::string& name) const {
  for (const Param& p : params)
    if (p.name == name) return &p;
  return nullptr;
}

bool requires_compass(const std::string& primitive) {
  return primitive == "circle" || primitive == "parallel_through" || primitive == "perpendicular_through" ||
         primitive == "rotate60";
}

namespace {

// ---- lexer ------------------------------------------------------------------

struct Token {
  enum class Kind { Ident, Number, Punct, Separator, End };
  Kind kind;
  std::string text;
  int line;
  int col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '\n' || c == ';') {
      out.push_back({Token::Kind::Separator, std::string(1, c), line, col});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Token::Kind::Ident, text.substr(i, j - i), line, col});
      advance(j - i);
    } else if (digit(c) || ((c == '-') && i + 1 < text.size() && digit(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && digit(text[j])) ++j;
      if (j + 1 < text.size() && (text[j] == '.' || text[j] == '/') && digit(text[j + 1])) {
        ++j;
        while (j < text.size() && digit(text[j])) ++j;
      }
      out.push_back({Token::Kind::Number, text.substr(i, j - i), line, col});
      advance(j - i);
    } else if (c == '(' || c == ')' || c == ',' || c == '=' || c == ':') {
      out.push_back({Token::Kind::Punct, std::string(1, c), line, col});
      advance(1);
    } else {
      throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

// ---- signatures ---------------------------------------------------------------

enum class ArgKind { Point, Line, Circle, Curve, Length, Ratio, Selector, Rotation };

struct Overload {
  std::vector<ArgKind> args;
  ValueType result;
};

const std::map<std::string, std::vector<Overload>>& primitives() {
  using A = ArgKind;
  static const std::map<std::string, std::vector<Overload>> table{
      {"line", {{{A::Point, A::Point}, ValueType::Line}}},
      {"circle",
       {{{A::Point, A::Point}, ValueType::Circle},
        {{A::Point, A::Length}, ValueType::Circle},
        {{A::Point, A::Point, A::Point}, ValueType::Circle}}},
      {"intersect", {{{A::Curve, A::Curve, A::Selector}, ValueType::Point}}},
      {"parallel_through", {{{A::Point, A::Line}, ValueType::Line}}},
      {"perpendicular_through", {{{A::Point, A::Line}, ValueType::Line}}},
      {"rotate60", {{{A::Point, A::Point, A::Rotation}, ValueType::Point}}},
      {"pick", {{{A::Point, A::Point, A::Ratio}, ValueType::Point}}},
  };
  return table;
}

const std::map<std::string, std::vector<std::vector<ArgKind>>>& predicates() {
  using A = ArgKind;
  static const std::map<std::string, std::vector<std::vector<ArgKind>>> table{
      {"equal_length", {{A::Point, A::Point, A::Point, A::Point}}},
      {"length_is", {{A::Point, A::Point, A::Length}}},
      {"perimeter_is", {{A::Point, A::Point, A::Point, A::Length}}},
      {"on_line", {{A::Point, A::Line}}},
      {"on_circle", {{A::Point, A::Circle}}},
      {"parallel", {{A::Line, A::Line}}},
      {"perpendicular", {{A::Line, A::Line}}},
      {"collinear", {{A::Point, A::Point, A::Point}}},
      {"between", {{A::Point, A::Point, A::Point}}},
      {"equal_point", {{A::Point, A::Point}}},
  };
  return table;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> words{"only", "first", "second", "other", "near", "ccw", "cw",
                                           "tools", "param", "bind", "assert"};
  return words;
}

// ---- parser -------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  Program run() {
    bool header_seen = false;
    for (;;) {
      skip_separators();
      const Token& t = peek();
      if (t.kind == Token::Kind::End) break;
      if (t.kind != Token::Kind::Ident) throw SyntaxError(t.line, t.col, "expected a statement");
      if (t.text == "tools") {
        if (header_seen || !program_.params.empty() || !program_.statements.empty())
          throw SyntaxError(t.line, t.col, "'tools' must be the first statement and appear once");
        header_seen = true;
        parse_tools();
      } else if (t.text == "param") {
        if (!program_.statements.empty()) throw SyntaxError(t.line, t.col, "params must precede statements");
        parse_param();
      } else if (t.text == "bind") {
        parse_bind();
      } else if (t.text == "assert") {
        parse_assert();
      } else {
        throw SyntaxError(t.line, t.col, "unknown statement '" + t.text + "'");
      }
      end_statement();
    }
    return std::move(program_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void skip_separators() {
    while (peek().kind == Token::Kind::Separator) ++pos_;
  }

  void end_statement() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Separator && t.kind != Token::Kind::End)
      throw SyntaxError(t.line, t.col, "expected end of statement, found '" + t.text + "'");
  }

  const Token& expect_punct(const std::string& p) {
    const Token& t = next();
    if (t.kind != Token::Kind::Punct || t.text != p)
      throw SyntaxError(t.line, t.col, "expected '" + p + "'" + (t.text.empty() ? "" : ", found '" + t.text + "'"));
    return t;
  }

  const Token& expect_ident() {
    const Token& t = next();
    if (t.kind != Token::Kind::Ident) throw SyntaxError(t.line, t.col, "expected an identifier");
    return t;
  }

  BigRational number_token(const Token& t) {
    try {
      return exactnum::parse_rational(t.text);
    } catch (const exactnum::DomainError& e) {
      throw SyntaxError(t.line, t.col, e.what());
    }
  }

  BigRational expect_number() {
    const Token& t = next();
    if (t.kind != Token::Kind::Number) throw SyntaxError(t.line, t.col, "expected a number");
    return number_token(t);
  }

  std::string declare(const Token& t, ValueType type) {
    if (keywords().count(t.text) || primitives().count(t.text) || predicates().count(t.text))
      throw SyntaxError(t.line, t.col, "'" + t.text + "' is reserved");
    if (scope_.count(t.text)) throw DuplicateBinding(t.line, "'" + t.text + "' is already bound");
    scope_[t.text] = type;
    return t.text;
  }

  void parse_tools() {
    next();
    const Token& t = expect_ident();
    if (t.text == "compass_and_straightedge")
      program_.tools = Tools::CompassAndStraightedge;
    else if (t.text == "straightedge_only")
      program_.tools = Tools::StraightedgeOnly;
    else
      throw SyntaxError(t.line, t.col, "unknown tool set '" + t.text + "'");
  }

  // (n1, n2, ...) with exactly `count` numbers.
  std::vector<BigRational> number_tuple(std::size_t count) {
    std::vector<BigRational> out;
    expect_punct("(");
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect_punct(",");
      out.push_back(expect_number());
    }
    expect_punct(")");
    return out;
  }

  void parse_param() {
    const Token& kw = next();
    const Token& name = expect_ident();
    expect_punct(":");
    const Token& type_tok = expect_ident();
    static const std::map<std::string, ValueType> types{{"point", ValueType::Point},   {"line", ValueType::Line},
                                                         {"circle", ValueType::Circle}, {"length", ValueType::Length},
                                                         {"ratio", ValueType::Ratio}};
    auto it = types.find(type_tok.text);
    if (it == types.end()) throw SyntaxError(type_tok.line, type_tok.col, "unknown type '" + type_tok.text + "'");
    Param p;
    p.type = it->second;
    p.line = kw.line;
    p.name = declare(name, p.type);
    if (peek().kind == Token::Kind::Punct && peek().text == "=") {
      next();
      switch (p.type) {
        case ValueType::Point:
          p.default_value = number_tuple(2);
          break;
        case ValueType::Line:
          p.default_value = number_tuple(3);
          break;
        case ValueType::Circle: {
          // ((cx, cy), r²)
          expect_punct("(");
          auto center = number_tuple(2);
          expect_punct(",");
          center.push_back(expect_number());
          expect_punct(")");
          p.default_value = center;
          break;
        }
        case ValueType::Length:
        case ValueType::Ratio:
          p.default_value = std::vector<BigRational>{expect_number()};
          break;
      }
    }
    program_.params.push_back(std::move(p));
  }

  Expr parse_expr() {
    const Token& t = next();
    Expr e;
    e.line = t.line;
    e.col = t.col;
    if (t.kind == Token::Kind::Number) {
      e.kind = Expr::Kind::Number;
      e.number = number_token(t);
      return e;
    }
    if (t.kind != Token::Kind::Ident) throw SyntaxError(t.line, t.col, "expected an argument");
    e.name = t.text;
    if (peek().kind == Token::Kind::Punct && peek().text == "(") {
      e.kind = Expr::Kind::Call;
      e.args = parse_args();
    }
    return e;
  }

  std::vector<Expr> parse_args() {
    std::vector<Expr> args;
    expect_punct("(");
    if (peek().kind == Token::Kind::Punct && peek().text == ")") {
      next();
      return args;
    }
    for (;;) {
      args.push_back(parse_expr());
      const Token& t = next();
      if (t.kind == Token::Kind::Punct && t.text == ")") break;
      if (t.kind != Token::Kind::Punct || t.text != ",") throw SyntaxError(t.line, t.col, "expected ',' or ')'");
    }
    return args;
  }

  std::optional<ValueType> lookup(const Expr& e) const {
    auto it = scope_.find(e.name);
    if (it == scope_.end()) return std::nullopt;
    return it->second;
  }

  bool matches(const Expr& e, ArgKind kind, int line) const {
    if (kind == ArgKind::Selector) {
      if (e.kind == Expr::Kind::Name) return e.name == "only" || e.name == "first" || e.name == "second";
      if (e.kind == Expr::Kind::Call && (e.name == "other" || e.name == "near")) {
        if (e.args.size() != 1) throw ArityMismatch(line, e.name + " takes exactly one point");
        const Expr& p = e.args[0];
        if (p.kind != Expr::Kind::Name) return false;
        auto t = lookup(p);
        if (!t) throw UnknownIdentifier(line, "unknown identifier '" + p.name + "'");
        return *t == ValueType::Point;
      }
      return false;
    }
    if (kind == ArgKind::Rotation) return e.kind == Expr::Kind::Name && (e.name == "ccw" || e.name == "cw");
    if (e.kind == Expr::Kind::Number) return kind == ArgKind::Length || kind == ArgKind::Ratio;
    if (e.kind == Expr::Kind::Call) return false;
    auto t = lookup(e);
    if (!t) throw UnknownIdentifier(line, "unknown identifier '" + e.name + "'");
    switch (kind) {
      case ArgKind::Point:
        return *t == ValueType::Point;
      case ArgKind::Line:
        return *t == ValueType::Line;
      case ArgKind::Circle:
        return *t == ValueType::Circle;
      case ArgKind::Curve:
        return *t == ValueType::Line || *t == ValueType::Circle;
      case ArgKind::Length:
        return *t == ValueType::Length;
      case ArgKind::Ratio:
        return *t == ValueType::Ratio;
      default:
        return false;
    }
  }

  void check_names(const std::vector<Expr>& args, int line) const {
    for (const Expr& e : args) {
      if (e.kind == Expr::Kind::Name && !keywords().count(e.name) && !lookup(e))
        throw UnknownIdentifier(line, "unknown identifier '" + e.name + "'");
    }
  }

  std::string signature_error(const std::string& callee, const std::vector<Expr>& args) const {
    std::string text = callee + "(";
    for (std::size_t i = 0; i < args.size(); ++i) text += (i ? ", " : "") + args[i].to_string();
    return "no overload of '" + callee + "' accepts " + text + ")";
  }

  void parse_bind() {
    const Token& kw = next();
    const Token& name = expect_ident();
    expect_punct("=");
    const Token& callee = expect_ident();
    Statement s;
    s.kind = Statement::Kind::Bind;
    s.callee = callee.text;
    s.line = kw.line;
    auto it = primitives().find(callee.text);
    if (it == primitives().end()) throw UnknownIdentifier(kw.line, "unknown primitive '" + callee.text + "'");
    s.args = parse_args();
    bool arity_ok = false;
    for (const Overload& o : it->second) arity_ok = arity_ok || o.args.size() == s.args.size();
    if (!arity_ok)
      throw ArityMismatch(s.line, "'" + s.callee + "' does not take " + std::to_string(s.args.size()) + " arguments");
    check_names(s.args, s.line);
    std::optional<ValueType> result;
    for (const Overload& o : it->second) {
      if (o.args.size() != s.args.size()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < o.args.size() && ok; ++i) ok = matches(s.args[i], o.args[i], s.line);
      if (ok) {
        result = o.result;
        break;
      }
    }
    if (!result) throw TypeMismatch(s.line, signature_error(s.callee, s.args));
    if (program_.tools == Tools::StraightedgeOnly && requires_compass(s.callee))
      throw ToolViolation(s.line, "'" + s.callee + "' needs a compass but the script is straightedge_only");
    s.result = *result;
    s.name = declare(name, s.result);
    program_.statements.push_back(std::move(s));
  }

  void parse_assert() {
    const Token& kw = next();
    const Token& callee = expect_ident();
    Statement s;
    s.kind = Statement::Kind::Assert;
    s.callee = callee.text;
    s.line = kw.line;
    auto it = predicates().find(callee.text);
    if (it == predicates().end()) throw UnknownIdentifier(kw.line, "unknown predicate '" + callee.text + "'");
    s.args = parse_args();
    bool arity_ok = false, ok = false;
    for (const auto& sig : it->second) arity_ok = arity_ok || sig.size() == s.args.size();
    if (!arity_ok)
      throw ArityMismatch(s.line, "'" + s.callee + "' does not take " + std::to_string(s.args.size()) + " arguments");
    check_names(s.args, s.line);
    for (const auto& sig : it->second) {
      if (sig.size() != s.args.size()) continue;
      ok = true;
      for (std::size_t i = 0; i < sig.size() && ok; ++i) ok = matches(s.args[i], sig[i], s.line);
      if (ok) break;
    }
    if (!ok) throw TypeMismatch(s.line, signature_error(s.callee, s.args));
    program_.statements.push_back(std::move(s));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Program program_;
  std::map<std::string, ValueType> scope_;
};

}  // namespace

Program parse(const std::string& text) { return Parser(text).run(); }

}  // namespace coffin::sketch
