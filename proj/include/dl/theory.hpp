#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dl {

// Identifier checks shared by the parser and the constructors below.
bool is_atom_identifier(std::string_view s);   // [a-z][A-Za-z0-9_]*
bool is_label_identifier(std::string_view s);  // [A-Za-z0-9_]+
bool is_reserved(std::string_view s);          // contains "__"

// A ground atom.  Arguments are kept for printing; identity is the rendered
// text `name(c1,c2)`.
class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string name, std::vector<std::string> args = {});

  const std::string& name() const { return name_; }
  const std::vector<std::string>& args() const { return args_; }
  const std::string& str() const { return text_; }

  friend bool operator==(const Atom& a, const Atom& b) { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  std::string name_;
  std::vector<std::string> args_;
  std::string text_;
};

struct Literal {
  Atom atom;
  bool positive = true;

  Literal() = default;
  Literal(Atom a, bool pos = true) : atom(std::move(a)), positive(pos) {}

  std::string str() const { return positive ? atom.str() : "~" + atom.str(); }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.positive == b.positive && a.atom == b.atom;
  }
  // Same order as comparing the rendered strings: atom names start with a
  // lowercase letter, which sorts before '~'.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (a.positive != b.positive) return a.positive ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.atom <=> b.atom;
  }
};

inline Literal complement(const Literal& q) { return Literal(q.atom, !q.positive); }

// Shorthand used heavily in tests and generators: "a" or "~a".
Literal lit(std::string_view text);

enum class RuleKind : std::uint8_t { Strict, Defeasible, Defeater };

std::string_view arrow(RuleKind k);

struct Rule {
  std::string label;
  std::vector<Literal> body;  // set semantics, first-occurrence order
  RuleKind kind = RuleKind::Defeasible;
  Literal head;

  Rule() = default;
  Rule(std::string label, std::vector<Literal> body, RuleKind kind, Literal head);

  bool operator==(const Rule&) const = default;
};

struct SuperiorityPair {
  std::string superior;
  std::string inferior;

  auto operator<=>(const SuperiorityPair&) const = default;
};

enum class TheoryErrorKind : std::uint8_t {
  DuplicateLabel,
  UnknownLabelInSuperiority,
  CyclicSuperiority,
  InvalidSuperiorityOnStrict,
  NotEngineForm,
};

std::string_view to_string(TheoryErrorKind k);

class TheoryError : public std::runtime_error {
 public:
  TheoryError(TheoryErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  TheoryErrorKind kind() const { return kind_; }

 private:
  TheoryErrorKind kind_;
};

// (F, R, >).  Always well-formed: the constructor rejects duplicate labels,
// superiority pairs naming unknown rules, and cyclic superiority.  Facts and
// superiority pairs are stored sorted and deduplicated.
class Theory {
 public:
  Theory() = default;
  Theory(std::vector<Literal> facts, std::vector<Rule> rules, std::vector<SuperiorityPair> superiority = {});

  const std::vector<Literal>& facts() const { return facts_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<SuperiorityPair>& superiority() const { return superiority_; }

  bool is_fact(const Literal& q) const;
  const Rule* find_rule(std::string_view label) const;
  std::size_t rule_index(std::string_view label) const;  // npos when absent

  // facts + sum(|body| + 1) + 2 * |>|
  std::size_t symbol_count() const;

  // The atoms occurring anywhere in facts and rules (the language Sigma).
  std::set<Atom> language() const;

  bool operator==(const Theory& o) const {
    return facts_ == o.facts_ && rules_ == o.rules_ && superiority_ == o.superiority_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Literal> facts_;
  std::vector<Rule> rules_;
  std::vector<SuperiorityPair> superiority_;
  std::unordered_map<std::string, std::size_t> by_label_;
};

// Returns a label pair that lies on a cycle of `sup`, or nothing.
const SuperiorityPair* find_superiority_cycle(const std::vector<SuperiorityPair>& sup);

// Rule classes R_s, R_d, R_dft, R_sd, R_dd and their per-head restrictions.
// Entries are indices into theory.rules().
struct RuleIndex {
  struct HeadRules {
    std::vector<std::size_t> all, strict, defeasible, defeaters, strict_or_defeasible, defeasible_or_defeater;
  };

  std::vector<std::size_t> strict, defeasible, defeaters, strict_or_defeasible, defeasible_or_defeater;
  std::map<Literal, HeadRules> by_head;

  const HeadRules& head(const Literal& q) const;
};

RuleIndex classify_rules(const Theory& theory);

// Every literal mentioned anywhere in the theory, closed under complement.
std::set<Literal> literal_universe(const Theory& theory);

// ---------------------------------------------------------------------------
// Conclusions

enum class Tag : std::uint8_t {
  PlusDelta,
  MinusDelta,
  PlusPartial,
  MinusPartial,
  PlusSigma,
  MinusSigma,
  PlusTau,
  MinusTau,
};

inline constexpr Tag kAllTags[] = {Tag::PlusDelta, Tag::MinusDelta, Tag::PlusPartial, Tag::MinusPartial,
                                   Tag::PlusSigma, Tag::MinusSigma, Tag::PlusTau,     Tag::MinusTau};
inline constexpr Tag kExternalTags[] = {Tag::PlusDelta, Tag::MinusDelta, Tag::PlusPartial, Tag::MinusPartial};

inline bool is_external(Tag t) { return static_cast<int>(t) < 4; }
inline bool is_positive(Tag t) { return static_cast<int>(t) % 2 == 0; }
inline Tag opposite(Tag t) { return static_cast<Tag>(static_cast<int>(t) ^ 1); }
std::string_view tag_symbol(Tag t);  // "+D", "-D", "+d", "-d", "+s", "-s", "+t", "-t"

struct TaggedConclusion {
  Tag tag;
  Literal literal;

  friend bool operator==(const TaggedConclusion&, const TaggedConclusion&) = default;
  friend std::strong_ordering operator<=>(const TaggedConclusion& a, const TaggedConclusion& b) {
    if (auto c = a.literal <=> b.literal; c != 0) return c;
    return a.tag <=> b.tag;
  }
};

std::string to_string(const TaggedConclusion& c);

class ConclusionSet {
 public:
  ConclusionSet() = default;
  explicit ConclusionSet(std::set<Atom> language) : language_(std::move(language)) {}

  bool insert(Tag tag, const Literal& q) { return items_.insert({tag, q}).second; }
  bool contains(Tag tag, const Literal& q) const { return items_.count({tag, q}) != 0; }

  const std::set<TaggedConclusion>& items() const { return items_; }
  const std::set<Atom>& language() const { return language_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  // Keeps conclusions whose atom is in `language`; drops the internal tags
  // unless `keep_internal`.
  ConclusionSet restricted_to(const std::set<Atom>& language, bool keep_internal = false) const;
  ConclusionSet external() const;

  std::size_t count(Tag tag) const;

  // Pairs (tag, literal) with both q and its opposite tag present; empty when coherent.
  std::vector<TaggedConclusion> incoherences() const;

  friend bool operator==(const ConclusionSet& a, const ConclusionSet& b) { return a.items_ == b.items_; }

 private:
  std::set<TaggedConclusion> items_;
  std::set<Atom> language_;
};

}  // namespace dl
