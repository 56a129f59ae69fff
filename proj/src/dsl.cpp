#include "hilbcalc/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>

namespace hilbcalc::dsl {

std::string to_string(const SourcePos& pos) { return std::to_string(pos.line) + ":" + std::to_string(pos.column); }

DslError::DslError(SourcePos pos, const std::string& message)
    : std::runtime_error(to_string(pos) + ": " + message), pos_(pos), detail_(message) {}

namespace {

std::string expected_message(const std::string& found, const std::vector<std::string>& expected) {
  std::string msg = "unexpected " + found + ", expected ";
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (k > 0) msg += k + 1 == expected.size() ? " or " : ", ";
    msg += expected[k];
  }
  return msg;
}

}  // namespace

ParseError::ParseError(SourcePos pos, const std::string& found, std::vector<std::string> expected)
    : DslError(pos, expected_message(found, expected)), expected_(std::move(expected)) {}

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent:
      return "identifier";
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kInt:
      return "integer";
    case TokenKind::kRational:
      return "rational";
    case TokenKind::kPlus:
      return "'+'";
    case TokenKind::kMinus:
      return "'-'";
    case TokenKind::kStar:
      return "'*'";
    case TokenKind::kCaret:
      return "'^'";
    case TokenKind::kEquals:
      return "'='";
    case TokenKind::kComma:
      return "','";
    case TokenKind::kLParen:
      return "'('";
    case TokenKind::kRParen:
      return "')'";
    case TokenKind::kSemicolon:
      return "';'";
    case TokenKind::kSlash:
      return "'/'";
    case TokenKind::kEnd:
      return "end of input";
  }
  return "?";
}

const char* to_string(CommandKind kind) {
  switch (kind) {
    case CommandKind::kSeries:
      return "series";
    case CommandKind::kCoeffs:
      return "coeffs";
    case CommandKind::kDepth:
      return "depth";
    case CommandKind::kSuperficial:
      return "superficial";
    case CommandKind::kAdmissible:
      return "admissible";
    case CommandKind::kVerify:
      return "verify";
    case CommandKind::kOracle:
      return "oracle";
  }
  return "?";
}

namespace {

constexpr std::array<std::string_view, 13> kKeywords = {"ring",        "ideal",      "module", "forms",  "shift",
                                                        "series",      "coeffs",     "depth",  "superficial",
                                                        "admissible",  "verify",     "oracle", "i"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t k = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++k) {
      if (text[k] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (k < text.size()) {
    const char c = text[k];
    if (c == '#') {
      while (k < text.size() && text[k] != '\n') bump(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(1);
      continue;
    }
    const SourcePos start = pos;
    if (ident_start(c)) {
      std::size_t n = 1;
      while (k + n < text.size() && ident_char(text[k + n])) ++n;
      std::string word(text.substr(k, n));
      out.push_back({is_keyword(word) ? TokenKind::kKeyword : TokenKind::kIdent, std::move(word), start});
      bump(n);
      continue;
    }
    if (digit(c)) {
      std::size_t n = 1;
      while (k + n < text.size() && digit(text[k + n])) ++n;
      if (k + n + 1 < text.size() && text[k + n] == '/' && digit(text[k + n + 1])) {
        std::size_t m = n + 1;
        while (k + m < text.size() && digit(text[k + m])) ++m;
        std::string lit(text.substr(k, m));
        if (Integer(lit.substr(n + 1)) == 0) throw LexError(start, "zero denominator in " + lit);
        out.push_back({TokenKind::kRational, std::move(lit), start});
        bump(m);
      } else {
        out.push_back({TokenKind::kInt, std::string(text.substr(k, n)), start});
        bump(n);
      }
      if (k < text.size() && ident_start(text[k]))
        throw LexError(pos, "identifier directly after a number; write '*' between them");
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+':
        kind = TokenKind::kPlus;
        break;
      case '-':
        kind = TokenKind::kMinus;
        break;
      case '*':
        kind = TokenKind::kStar;
        break;
      case '^':
        kind = TokenKind::kCaret;
        break;
      case '=':
        kind = TokenKind::kEquals;
        break;
      case ',':
        kind = TokenKind::kComma;
        break;
      case '(':
        kind = TokenKind::kLParen;
        break;
      case ')':
        kind = TokenKind::kRParen;
        break;
      case ';':
        kind = TokenKind::kSemicolon;
        break;
      case '/':
        kind = TokenKind::kSlash;
        break;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string("'") + c + "'"
                                : "byte 0x" + [&] {
                                    std::ostringstream os;
                                    os << std::hex << static_cast<int>(static_cast<unsigned char>(c));
                                    return os.str();
                                  }();
        throw LexError(start, "illegal character " + shown);
      }
    }
    out.push_back({kind, std::string(1, c), start});
    bump(1);
  }
  out.push_back({TokenKind::kEnd, "", pos});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr std::size_t kMaxExponent = 256;
constexpr std::size_t kMaxTerms = 200000;

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != TokenKind::kEnd)
      throw std::invalid_argument("token stream must end with an end token");
  }

  void set_ring(std::vector<std::string> vars) {
    script_.variables = std::move(vars);
    ring_seen_ = true;
  }

  Script script() {
    if (at(TokenKind::kEnd)) fail({"'ring'"});
    while (!at(TokenKind::kEnd)) statement();
    return std::move(script_);
  }

  Polynomial polynomial_only() {
    Polynomial p = polynomial();
    expect(TokenKind::kEnd, {"end of input"});
    return p;
  }

  std::vector<Polynomial> polynomial_list_only() {
    std::vector<Polynomial> out{polynomial()};
    while (accept(TokenKind::kComma)) out.push_back(polynomial());
    expect(TokenKind::kEnd, {"',' or end of input"});
    return out;
  }

  LinearForm linear_form(const Polynomial& p, const Token& at) {
    if (p.is_zero()) throw SemanticError(at.pos, "the zero form is not a linear form");
    try {
      return LinearForm::from_polynomial(p);
    } catch (const NotHomogeneous&) {
      throw SemanticError(at.pos, "not degree 1: " + p.to_string(script_.variables) + " has " +
                                      degree_description(p));
    }
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view kw) const { return at(TokenKind::kKeyword) && peek().text == kw; }

  const Token& advance() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::kEnd) ++pos_;
    return t;
  }

  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }

  std::string describe(const Token& t) const {
    if (t.kind == TokenKind::kEnd) return "end of input";
    return std::string(to_string(t.kind)) + " '" + t.text + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, describe(peek()), std::move(expected));
  }

  const Token& expect(TokenKind kind, std::vector<std::string> expected) {
    if (!at(kind)) fail(std::move(expected));
    return advance();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail({"'" + std::string(kw) + "'"});
    advance();
  }

  std::size_t count(const Token& t, std::size_t max = std::numeric_limits<std::size_t>::max()) const {
    Integer v(t.text);
    if (v > Integer(static_cast<unsigned long>(max)))
      throw SemanticError(t.pos, "integer " + t.text + " exceeds the limit " + std::to_string(max));
    return static_cast<std::size_t>(v.get_ui());
  }

  static std::string degree_description(const Polynomial& p) {
    std::uint32_t lo = std::numeric_limits<std::uint32_t>::max(), hi = 0;
    for (const auto& t : p.terms()) {
      lo = std::min(lo, t.monomial.degree());
      hi = std::max(hi, t.monomial.degree());
    }
    if (lo == hi) return "degree " + std::to_string(lo);
    return "terms of degrees " + std::to_string(lo) + " to " + std::to_string(hi);
  }

  void require_ring(const Token& at) const {
    if (!ring_seen_) throw SemanticError(at.pos, "no ring declared before this statement");
  }

  std::string declare(const Token& name, SymbolKind kind) {
    if (script_.symbols.count(name.text)) throw SemanticError(name.pos, "'" + name.text + "' is already declared");
    if (std::find(script_.variables.begin(), script_.variables.end(), name.text) != script_.variables.end())
      throw SemanticError(name.pos, "'" + name.text + "' is a ring variable");
    script_.symbols.emplace(name.text, Symbol{kind, script_.statements.size()});
    return name.text;
  }

  std::string reference(const Token& name, SymbolKind kind) const {
    static constexpr std::array<const char*, 3> kKindNames = {"ideal", "module", "forms"};
    auto it = script_.symbols.find(name.text);
    if (it == script_.symbols.end()) throw SemanticError(name.pos, "undeclared identifier '" + name.text + "'");
    if (it->second.kind != kind)
      throw SemanticError(name.pos, "'" + name.text + "' is not a " + kKindNames[static_cast<int>(kind)] +
                                        " but a " + kKindNames[static_cast<int>(it->second.kind)]);
    return name.text;
  }

  void push(Statement st, SourcePos pos) {
    script_.statements.push_back(std::move(st));
    script_.positions.push_back(pos);
  }

  void statement() {
    static const std::vector<std::string> kStart = {"'ring'",   "'ideal'",       "'module'",     "'forms'",
                                                    "'series'", "'coeffs'",      "'depth'",      "'superficial'",
                                                    "'admissible'", "'verify'",  "'oracle'"};
    if (!at(TokenKind::kKeyword)) fail(kStart);
    const Token& kw = advance();
    const std::string& w = kw.text;
    if (w == "ring") {
      ring(kw);
    } else if (w == "ideal") {
      ideal(kw);
    } else if (w == "module") {
      module(kw);
    } else if (w == "forms") {
      forms(kw);
    } else if (w == "series" || w == "coeffs" || w == "depth") {
      require_ring(kw);
      Command c;
      c.kind = w == "series" ? CommandKind::kSeries : w == "coeffs" ? CommandKind::kCoeffs : CommandKind::kDepth;
      c.module = reference(expect(TokenKind::kIdent, {"module name"}), SymbolKind::kModule);
      push(std::move(c), kw.pos);
    } else if (w == "superficial" || w == "admissible" || w == "verify") {
      require_ring(kw);
      Command c;
      c.kind = w == "superficial" ? CommandKind::kSuperficial
               : w == "admissible" ? CommandKind::kAdmissible
                                   : CommandKind::kVerify;
      c.module = reference(expect(TokenKind::kIdent, {"module name"}), SymbolKind::kModule);
      c.forms = reference(expect(TokenKind::kIdent, {"forms name"}), SymbolKind::kForms);
      if (c.kind == CommandKind::kVerify) {
        expect_keyword("i");
        expect(TokenKind::kEquals, {"'='"});
        c.value = count(expect(TokenKind::kInt, {"integer"}));
      }
      push(std::move(c), kw.pos);
    } else if (w == "oracle") {
      require_ring(kw);
      Command c;
      c.kind = CommandKind::kOracle;
      c.module = reference(expect(TokenKind::kIdent, {"module name"}), SymbolKind::kModule);
      c.value = count(expect(TokenKind::kInt, {"degree bound"}), 4096);
      push(std::move(c), kw.pos);
    } else {
      --pos_;
      fail(kStart);
    }
    expect(TokenKind::kSemicolon, {"';'"});
  }

  void ring(const Token& kw) {
    if (ring_seen_) throw SemanticError(kw.pos, "a second ring declaration; a script has exactly one ring");
    RingDecl decl;
    do {
      const Token& v = expect(TokenKind::kIdent, {"variable name"});
      if (std::find(decl.variables.begin(), decl.variables.end(), v.text) != decl.variables.end())
        throw SemanticError(v.pos, "variable '" + v.text + "' declared twice");
      decl.variables.push_back(v.text);
      accept(TokenKind::kComma);
    } while (at(TokenKind::kIdent));
    set_ring(decl.variables);
    push(std::move(decl), kw.pos);
  }

  void ideal(const Token& kw) {
    require_ring(kw);
    IdealDecl decl;
    const Token& name = expect(TokenKind::kIdent, {"ideal name"});
    expect(TokenKind::kEquals, {"'='"});
    do {
      const Token& start = peek();
      Polynomial p = polynomial();
      if (!p.is_homogeneous())
        throw SemanticError(start.pos, "inhomogeneous polynomial " + p.to_string(script_.variables) + " with " +
                                           degree_description(p));
      decl.generators.push_back(std::move(p));
    } while (accept(TokenKind::kComma));
    decl.name = declare(name, SymbolKind::kIdeal);
    push(std::move(decl), kw.pos);
  }

  void module(const Token& kw) {
    require_ring(kw);
    ModuleDecl decl;
    const Token& name = expect(TokenKind::kIdent, {"module name"});
    expect(TokenKind::kEquals, {"'='"});
    if (!(at(TokenKind::kIdent) && peek().text == "R")) fail({"'R'"});
    advance();
    expect(TokenKind::kSlash, {"'/'"});
    decl.ideal = reference(expect(TokenKind::kIdent, {"ideal name"}), SymbolKind::kIdeal);
    if (at_keyword("shift")) {
      advance();
      decl.shift = count(expect(TokenKind::kInt, {"integer"}), 1u << 20);
    }
    decl.name = declare(name, SymbolKind::kModule);
    push(std::move(decl), kw.pos);
  }

  void forms(const Token& kw) {
    require_ring(kw);
    FormsDecl decl;
    const Token& name = expect(TokenKind::kIdent, {"forms name"});
    expect(TokenKind::kEquals, {"'='"});
    do {
      const Token& start = peek();
      decl.forms.push_back(linear_form(polynomial(), start));
    } while (accept(TokenKind::kComma));
    decl.name = declare(name, SymbolKind::kForms);
    push(std::move(decl), kw.pos);
  }

  // poly := ['+'|'-'] term (('+'|'-') term)*
  Polynomial polynomial() {
    bool negate = false;
    if (accept(TokenKind::kMinus))
      negate = true;
    else
      accept(TokenKind::kPlus);
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (at(TokenKind::kPlus) || at(TokenKind::kMinus)) {
      const bool minus = advance().kind == TokenKind::kMinus;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool at_factor() const {
    return at(TokenKind::kInt) || at(TokenKind::kRational) || at(TokenKind::kIdent) || at(TokenKind::kLParen);
  }

  // term := factor (['*'] factor)*
  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept(TokenKind::kStar)) {
        acc = acc * factor();
      } else if (at_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  // factor := INT | RAT | ident ['^' INT] | '(' poly ')' ['^' INT]
  Polynomial factor() {
    const std::size_t d = script_.variables.size();
    if (at(TokenKind::kInt) || at(TokenKind::kRational)) {
      Rational c(advance().text);
      c.canonicalize();
      return Polynomial::constant(d, c);
    }
    Polynomial base;
    if (at(TokenKind::kIdent)) {
      const Token& v = advance();
      auto it = std::find(script_.variables.begin(), script_.variables.end(), v.text);
      if (it == script_.variables.end())
        throw SemanticError(v.pos, "undeclared identifier '" + v.text + "'; not a ring variable");
      base = Polynomial::variable(d, static_cast<std::size_t>(it - script_.variables.begin()));
    } else if (accept(TokenKind::kLParen)) {
      base = polynomial();
      expect(TokenKind::kRParen, {"')'"});
    } else {
      fail({"integer", "rational", "variable", "'('"});
    }
    if (accept(TokenKind::kCaret)) {
      const std::size_t e = count(expect(TokenKind::kInt, {"exponent"}), kMaxExponent);
      Polynomial p = Polynomial::constant(d, 1);
      for (std::size_t k = 0; k < e; ++k) {
        p = p * base;
        if (p.terms().size() > kMaxTerms) throw SemanticError(toks_[pos_ - 1].pos, "expansion too large");
      }
      return p;
    }
    return base;
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  Script script_;
  bool ring_seen_ = false;
};

}  // namespace

const IdealDecl& Script::ideal(const std::string& name) const {
  auto it = symbols.find(name);
  if (it == symbols.end() || it->second.kind != SymbolKind::kIdeal)
    throw std::out_of_range("no ideal named " + name);
  return std::get<IdealDecl>(statements[it->second.statement]);
}

const ModuleDecl& Script::module(const std::string& name) const {
  auto it = symbols.find(name);
  if (it == symbols.end() || it->second.kind != SymbolKind::kModule)
    throw std::out_of_range("no module named " + name);
  return std::get<ModuleDecl>(statements[it->second.statement]);
}

const FormsDecl& Script::forms(const std::string& name) const {
  auto it = symbols.find(name);
  if (it == symbols.end() || it->second.kind != SymbolKind::kForms) throw std::out_of_range("no forms named " + name);
  return std::get<FormsDecl>(statements[it->second.statement]);
}

Script parse(const std::vector<Token>& tokens) { return Parser(tokens).script(); }

Script parse(std::string_view text) { return parse(tokenize(text)); }

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  const auto tokens = tokenize(text);
  Parser p(tokens);
  p.set_ring(variables);
  return p.polynomial_only();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const std::vector<std::string>& variables) {
  const auto tokens = tokenize(text);
  Parser p(tokens);
  p.set_ring(variables);
  return p.polynomial_list_only();
}

std::vector<LinearForm> parse_linear_form_list(std::string_view text, const std::vector<std::string>& variables) {
  const auto tokens = tokenize(text);
  Parser p(tokens);
  p.set_ring(variables);
  std::vector<LinearForm> out;
  for (const auto& poly : p.polynomial_list_only()) out.push_back(p.linear_form(poly, tokens.front()));
  return out;
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(text)) {
    if (t.kind == TokenKind::kEnd) break;
    if (t.kind == TokenKind::kComma) continue;
    if (t.kind != TokenKind::kIdent) throw ParseError(t.pos, "'" + t.text + "'", {"variable name"});
    if (std::find(out.begin(), out.end(), t.text) != out.end())
      throw SemanticError(t.pos, "variable '" + t.text + "' declared twice");
    out.push_back(t.text);
  }
  if (out.empty()) throw ParseError(SourcePos{}, "end of input", {"variable name"});
  return out;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_source(const Script& script) {
  std::ostringstream os;
  const auto& names = script.variables;
  for (const auto& st : script.statements) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, RingDecl>) {
            os << "ring";
            for (const auto& v : s.variables) os << ' ' << v;
          } else if constexpr (std::is_same_v<T, IdealDecl>) {
            os << "ideal " << s.name << " =";
            for (std::size_t k = 0; k < s.generators.size(); ++k)
              os << (k ? ", " : " ") << s.generators[k].to_string(names);
          } else if constexpr (std::is_same_v<T, ModuleDecl>) {
            os << "module " << s.name << " = R/" << s.ideal;
            if (s.shift) os << " shift " << s.shift;
          } else if constexpr (std::is_same_v<T, FormsDecl>) {
            os << "forms " << s.name << " =";
            for (std::size_t k = 0; k < s.forms.size(); ++k) os << (k ? ", " : " ") << s.forms[k].to_string(names);
          } else {
            os << to_string(s.kind) << ' ' << s.module;
            if (!s.forms.empty()) os << ' ' << s.forms;
            if (s.kind == CommandKind::kVerify) os << " i=" << s.value;
            if (s.kind == CommandKind::kOracle) os << ' ' << s.value;
          }
        },
        st);
    os << ";\n";
  }
  return os.str();
}

}  // namespace hilbcalc::dsl
