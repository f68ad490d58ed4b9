#include "dl/text_io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <unordered_map>
#include <vector>

namespace dl {

std::string_view to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::Syntax: return "Syntax";
    case ParseErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ParseErrorKind::UnknownLabelInSuperiority: return "UnknownLabelInSuperiority";
    case ParseErrorKind::CyclicSuperiority: return "CyclicSuperiority";
    case ParseErrorKind::ReservedAtomName: return "ReservedAtomName";
  }
  return "?";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok : std::uint8_t { Ident, Tilde, Colon, Dot, Comma, Greater, LParen, RParen, Arrow, End };

struct Token {
  Tok kind;
  std::string_view text;
  int line;
  int column;
  RuleKind arrow = RuleKind::Strict;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t{Tok::End, {}, line_, col_};
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    auto two = src_.substr(pos_, 2);
    if (two == "->" || two == "=>" || two == "~>") {
      t.kind = Tok::Arrow;
      t.arrow = two[0] == '-' ? RuleKind::Strict : two[0] == '=' ? RuleKind::Defeasible : RuleKind::Defeater;
      t.text = two;
      advance(2);
      return t;
    }
    if (is_ident(c)) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && is_ident(src_[pos_])) advance(1);
      t.kind = Tok::Ident;
      t.text = src_.substr(start, pos_ - start);
      return t;
    }
    switch (c) {
      case '~': t.kind = Tok::Tilde; break;
      case ':': t.kind = Tok::Colon; break;
      case '.': t.kind = Tok::Dot; break;
      case ',': t.kind = Tok::Comma; break;
      case '>': t.kind = Tok::Greater; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default:
        throw ParseError(ParseErrorKind::Syntax, line_, col_, std::string("unexpected character '") + c + "'");
    }
    t.text = src_.substr(pos_, 1);
    advance(1);
    return t;
  }

 private:
  static bool is_ident(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

struct SupEntry {
  SuperiorityPair pair;
  int line, column;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : lex_(text), options_(options) { shift(); }

  Theory parse() {
    while (cur_.kind != Tok::End) statement();
    check_superiority();
    return Theory(std::move(facts_), std::move(rules_), sup_pairs());
  }

 private:
  void shift() {
    if (peeked_) {
      cur_ = *peeked_;
      peeked_.reset();
    } else {
      cur_ = lex_.next();
    }
  }

  const Token& peek() {
    if (!peeked_) peeked_ = lex_.next();
    return *peeked_;
  }

  [[noreturn]] void fail(const Token& at, const std::string& what) {
    throw ParseError(ParseErrorKind::Syntax, at.line, at.column, what);
  }

  Token expect(Tok k, const char* what) {
    if (cur_.kind != k) fail(cur_, std::string("expected ") + what);
    Token t = cur_;
    shift();
    return t;
  }

  void statement() {
    if (cur_.kind == Tok::Ident && peek().kind == Tok::Colon) {
      Token label = cur_;
      shift();
      shift();
      rule(label);
    } else if (cur_.kind == Tok::Ident && peek().kind == Tok::Greater) {
      superiority();
    } else if (cur_.kind == Tok::Arrow) {
      rule(std::nullopt);
    } else {
      Token start = cur_;
      std::vector<Literal> lits{literal()};
      if (cur_.kind == Tok::Dot) {
        shift();
        facts_.push_back(std::move(lits.front()));
        return;
      }
      while (cur_.kind == Tok::Comma) {
        shift();
        lits.push_back(literal());
      }
      if (cur_.kind != Tok::Arrow) fail(cur_, "expected '.', ',' or an arrow");
      rule_tail(std::nullopt, start, std::move(lits));
    }
  }

  void rule(std::optional<Token> label) {
    Token start = cur_;
    std::vector<Literal> body;
    if (cur_.kind != Tok::Arrow) {
      body.push_back(literal());
      while (cur_.kind == Tok::Comma) {
        shift();
        body.push_back(literal());
      }
    }
    rule_tail(label, start, std::move(body));
  }

  void rule_tail(std::optional<Token> label, const Token& start, std::vector<Literal> body) {
    Token arrow = expect(Tok::Arrow, "an arrow ('->', '=>' or '~>')");
    Literal head = literal();
    expect(Tok::Dot, "'.' after rule head");

    std::size_t ordinal = rules_.size() + 1;
    std::string name;
    const Token& where = label ? *label : start;
    if (label) {
      name = std::string(label->text);
      if (!options_.allow_reserved && is_reserved(name) && name != generated_label(ordinal))
        throw ParseError(ParseErrorKind::ReservedAtomName, label->line, label->column,
                         "label '" + name + "' uses the reserved '__' sequence");
    } else {
      name = generated_label(ordinal);
    }
    if (!labels_.emplace(name, ordinal).second)
      throw ParseError(ParseErrorKind::DuplicateLabel, where.line, where.column, "duplicate rule label '" + name + "'");
    rules_.emplace_back(std::move(name), std::move(body), arrow.arrow, std::move(head));
  }

  static std::string generated_label(std::size_t ordinal) { return "r__" + std::to_string(ordinal); }

  void superiority() {
    Token a = expect(Tok::Ident, "rule label");
    expect(Tok::Greater, "'>'");
    Token b = expect(Tok::Ident, "rule label");
    expect(Tok::Dot, "'.' after superiority statement");
    sup_.push_back({{std::string(a.text), std::string(b.text)}, a.line, a.column});
  }

  std::string name(const char* what) {
    Token t = expect(Tok::Ident, what);
    if (!is_atom_identifier(t.text)) fail(t, "'" + std::string(t.text) + "' is not a valid name (expected [a-z][A-Za-z0-9_]*)");
    if (!options_.allow_reserved && is_reserved(t.text))
      throw ParseError(ParseErrorKind::ReservedAtomName, t.line, t.column,
                       "name '" + std::string(t.text) + "' uses the reserved '__' sequence");
    return std::string(t.text);
  }

  Literal literal() {
    bool positive = true;
    if (cur_.kind == Tok::Tilde) {
      shift();
      positive = false;
    }
    std::string n = name("an atom");
    std::vector<std::string> args;
    if (cur_.kind == Tok::LParen) {
      shift();
      args.push_back(name("a constant"));
      while (cur_.kind == Tok::Comma) {
        shift();
        args.push_back(name("a constant"));
      }
      expect(Tok::RParen, "')'");
    }
    return Literal(Atom(std::move(n), std::move(args)), positive);
  }

  void check_superiority() {
    for (const auto& s : sup_)
      for (const auto* l : {&s.pair.superior, &s.pair.inferior})
        if (!labels_.count(*l))
          throw ParseError(ParseErrorKind::UnknownLabelInSuperiority, s.line, s.column,
                           "superiority mentions unknown rule '" + *l + "'");
    std::vector<SuperiorityPair> pairs = sup_pairs();
    if (const auto* p = find_superiority_cycle(pairs)) {
      auto it = std::find_if(sup_.begin(), sup_.end(), [&](const SupEntry& s) { return s.pair == *p; });
      throw ParseError(ParseErrorKind::CyclicSuperiority, it->line, it->column,
                       "superiority relation is cyclic through " + p->superior + " > " + p->inferior);
    }
  }

  std::vector<SuperiorityPair> sup_pairs() const {
    std::vector<SuperiorityPair> out;
    out.reserve(sup_.size());
    for (const auto& s : sup_) out.push_back(s.pair);
    return out;
  }

  Lexer lex_;
  ParseOptions options_;
  Token cur_{};
  std::optional<Token> peeked_;
  std::vector<Literal> facts_;
  std::vector<Rule> rules_;
  std::vector<SupEntry> sup_;
  std::unordered_map<std::string, std::size_t> labels_;
};

}  // namespace

Theory parse_theory(std::string_view text, const ParseOptions& options) { return Parser(text, options).parse(); }

std::string print_rule(const Rule& r) {
  std::string out = r.label + ":";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    out += i ? ", " : " ";
    out += r.body[i].str();
  }
  out += ' ';
  out += arrow(r.kind);
  out += ' ';
  out += r.head.str();
  out += '.';
  return out;
}

std::string print_theory(const Theory& theory) {
  std::string out;
  for (const auto& f : theory.facts()) out += f.str() + ".\n";
  for (const auto& r : theory.rules()) out += print_rule(r) + "\n";
  for (const auto& p : theory.superiority()) out += p.superior + " > " + p.inferior + ".\n";
  return out;
}

std::string print_conclusions(const ConclusionSet& c, bool all, bool extended) {
  // Group by literal; Literal order equals rendered-string order.
  std::map<Literal, std::uint8_t> flags;
  for (const auto& tc : c) {
    if (!extended && !is_external(tc.tag)) continue;
    flags[tc.literal] |= static_cast<std::uint8_t>(1u << static_cast<int>(tc.tag));
  }
  if (all)
    for (const auto& a : c.language()) {
      flags.try_emplace(Literal(a, true), 0);
      flags.try_emplace(Literal(a, false), 0);
    }

  std::string out;
  auto has = [](std::uint8_t f, Tag t) { return (f >> static_cast<int>(t)) & 1u; };
  for (const auto& [q, f] : flags) {
    const std::string text = q.str();
    for (int cls = 0; cls < (extended ? 4 : 2); ++cls) {
      Tag plus = static_cast<Tag>(2 * cls);
      Tag minus = opposite(plus);
      bool any = false;
      for (Tag t : {plus, minus})
        if (has(f, t)) {
          out += tag_symbol(t);
          out += ' ';
          out += text;
          out += '\n';
          any = true;
        }
      if (!any && all && cls < 2 && c.language().count(q.atom)) {
        out += cls == 0 ? "?D " : "?d ";
        out += text;
        out += '\n';
      }
    }
  }
  return out;
}

}  // namespace dl
