#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dl/theory.hpp"

namespace dl {

enum class ParseErrorKind : std::uint8_t {
  Syntax,
  DuplicateLabel,
  UnknownLabelInSuperiority,
  CyclicSuperiority,
  ReservedAtomName,
};

std::string_view to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
  std::string message_;
};

struct ParseOptions {
  // Accept atoms and labels containing "__".  Only for re-reading generated
  // theories (output of `dl transform`).
  bool allow_reserved = false;
};

// Theory file grammar, one statement per '.':
//
//   fact := literal "."
//   rule := [label ":"] [literal ("," literal)*] ("->" | "=>" | "~>") literal "."
//   sup  := label ">" label "."
//   literal := ["~"] name ["(" name ("," name)* ")"]
//
// '#' comments run to end of line.  Unlabeled rules are named r__<k>, k the
// 1-based rule ordinal.
Theory parse_theory(std::string_view text, const ParseOptions& options = {});

// Canonical text: sorted facts, rules in stored order, sorted superiority.
std::string print_theory(const Theory& theory);
std::string print_rule(const Rule& rule);

// One `<tag> <literal>` line per conclusion, sorted by literal then tag.
// `all` adds `?D`/`?d` lines for literals of the language left undetermined;
// `extended` includes the internal sigma/tau tags.
std::string print_conclusions(const ConclusionSet& c, bool all = false, bool extended = false);

}  // namespace dl
