#pragma once

// Script language: one ring, named ideals, modules and lists of linear
// forms, and commands over them. See docs/dsl.md for the grammar.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hilbcalc/polyring.hpp"
#include "hilbcalc/series.hpp"

namespace hilbcalc::dsl {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

std::string to_string(const SourcePos& pos);

class DslError : public std::runtime_error {
 public:
  DslError(SourcePos pos, const std::string& message);
  const SourcePos& position() const { return pos_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

class LexError : public DslError {
 public:
  using DslError::DslError;
};

class ParseError : public DslError {
 public:
  ParseError(SourcePos pos, const std::string& found, std::vector<std::string> expected);
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

class SemanticError : public DslError {
 public:
  using DslError::DslError;
};

enum class TokenKind {
  kIdent,
  kKeyword,
  kInt,
  kRational,
  kPlus,
  kMinus,
  kStar,
  kCaret,
  kEquals,
  kComma,
  kLParen,
  kRParen,
  kSemicolon,
  kSlash,
  kEnd
};

const char* to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourcePos pos;
};

bool is_keyword(std::string_view word);

/// Throws LexError on an illegal character or a malformed rational.
std::vector<Token> tokenize(std::string_view text);

struct RingDecl {
  std::vector<std::string> variables;
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct IdealDecl {
  std::string name;
  std::vector<Polynomial> generators;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct ModuleDecl {
  std::string name;
  std::string ideal;
  std::size_t shift = 0;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

struct FormsDecl {
  std::string name;
  std::vector<LinearForm> forms;
  friend bool operator==(const FormsDecl&, const FormsDecl&) = default;
};

enum class CommandKind { kSeries, kCoeffs, kDepth, kSuperficial, kAdmissible, kVerify, kOracle };

const char* to_string(CommandKind kind);

struct Command {
  CommandKind kind = CommandKind::kSeries;
  std::string module;
  std::string forms;     // superficial, admissible, verify
  std::size_t value = 0;  // i for verify, the degree bound for oracle
  friend bool operator==(const Command&, const Command&) = default;
};

using Statement = std::variant<RingDecl, IdealDecl, ModuleDecl, FormsDecl, Command>;

enum class SymbolKind { kIdeal, kModule, kForms };

struct Symbol {
  SymbolKind kind;
  std::size_t statement;  // index of the declaring statement
};

struct Script {
  std::vector<Statement> statements;
  std::vector<SourcePos> positions;  // start of each statement
  std::vector<std::string> variables;
  std::map<std::string, Symbol> symbols;

  std::size_t ring_dim() const { return variables.size(); }
  const IdealDecl& ideal(const std::string& name) const;
  const ModuleDecl& module(const std::string& name) const;
  const FormsDecl& forms(const std::string& name) const;

  /// Statements compare equal; positions are ignored.
  friend bool operator==(const Script& a, const Script& b) { return a.statements == b.statements; }
};

/// Throws ParseError for grammar violations and SemanticError for undeclared
/// or duplicate names, a second ring, inhomogeneous ideal generators and
/// forms that are not linear.
Script parse(const std::vector<Token>& tokens);
Script parse(std::string_view text);

/// Canonical source text; parse(to_source(s)) == s.
std::string to_source(const Script& script);

/// Literal parsing against a fixed ring, shared with the one-shot CLI forms.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const std::vector<std::string>& variables);
std::vector<LinearForm> parse_linear_form_list(std::string_view text, const std::vector<std::string>& variables);
/// Whitespace- or comma-separated variable names.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace hilbcalc::dsl
