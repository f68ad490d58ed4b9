#include "dl/theory.hpp"

#include <algorithm>
#include <unordered_set>

namespace dl {

namespace {

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

bool is_atom_identifier(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

bool is_label_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_ident_char);
}

bool is_reserved(std::string_view s) { return s.find("__") != std::string_view::npos; }

Atom::Atom(std::string name, std::vector<std::string> args) : name_(std::move(name)), args_(std::move(args)) {
  if (!is_atom_identifier(name_)) throw std::invalid_argument("invalid atom name '" + name_ + "'");
  text_ = name_;
  if (!args_.empty()) {
    text_ += '(';
    for (std::size_t i = 0; i < args_.size(); ++i) {
      if (!is_atom_identifier(args_[i])) throw std::invalid_argument("invalid atom argument '" + args_[i] + "'");
      if (i) text_ += ',';
      text_ += args_[i];
    }
    text_ += ')';
  }
}

Literal lit(std::string_view text) {
  bool positive = true;
  if (!text.empty() && text[0] == '~') {
    positive = false;
    text.remove_prefix(1);
  }
  auto open = text.find('(');
  if (open == std::string_view::npos) return Literal(Atom(std::string(text)), positive);
  if (text.back() != ')') throw std::invalid_argument("malformed literal '" + std::string(text) + "'");
  std::vector<std::string> args;
  std::string_view rest = text.substr(open + 1, text.size() - open - 2);
  while (true) {
    auto comma = rest.find(',');
    args.emplace_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return Literal(Atom(std::string(text.substr(0, open)), std::move(args)), positive);
}

std::string_view arrow(RuleKind k) {
  switch (k) {
    case RuleKind::Strict: return "->";
    case RuleKind::Defeasible: return "=>";
    case RuleKind::Defeater: return "~>";
  }
  return "?";
}

Rule::Rule(std::string l, std::vector<Literal> b, RuleKind k, Literal h)
    : label(std::move(l)), kind(k), head(std::move(h)) {
  body.reserve(b.size());
  for (auto& q : b)
    if (std::find(body.begin(), body.end(), q) == body.end()) body.push_back(std::move(q));
}

std::string_view to_string(TheoryErrorKind k) {
  switch (k) {
    case TheoryErrorKind::DuplicateLabel: return "DuplicateLabel";
    case TheoryErrorKind::UnknownLabelInSuperiority: return "UnknownLabelInSuperiority";
    case TheoryErrorKind::CyclicSuperiority: return "CyclicSuperiority";
    case TheoryErrorKind::InvalidSuperiorityOnStrict: return "InvalidSuperiorityOnStrict";
    case TheoryErrorKind::NotEngineForm: return "NotEngineForm";
  }
  return "?";
}

Theory::Theory(std::vector<Literal> facts, std::vector<Rule> rules, std::vector<SuperiorityPair> superiority)
    : facts_(std::move(facts)), rules_(std::move(rules)), superiority_(std::move(superiority)) {
  std::sort(facts_.begin(), facts_.end());
  facts_.erase(std::unique(facts_.begin(), facts_.end()), facts_.end());
  std::sort(superiority_.begin(), superiority_.end());
  superiority_.erase(std::unique(superiority_.begin(), superiority_.end()), superiority_.end());

  by_label_.reserve(rules_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (!by_label_.emplace(rules_[i].label, i).second)
      throw TheoryError(TheoryErrorKind::DuplicateLabel, "duplicate rule label '" + rules_[i].label + "'");
  }
  for (const auto& p : superiority_) {
    for (const auto* l : {&p.superior, &p.inferior})
      if (!by_label_.count(*l))
        throw TheoryError(TheoryErrorKind::UnknownLabelInSuperiority,
                          "superiority mentions unknown rule '" + *l + "'");
  }
  if (const auto* p = find_superiority_cycle(superiority_))
    throw TheoryError(TheoryErrorKind::CyclicSuperiority,
                      "superiority relation is cyclic through " + p->superior + " > " + p->inferior);
}

bool Theory::is_fact(const Literal& q) const { return std::binary_search(facts_.begin(), facts_.end(), q); }

const Rule* Theory::find_rule(std::string_view label) const {
  auto i = rule_index(label);
  return i == npos ? nullptr : &rules_[i];
}

std::size_t Theory::rule_index(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  return it == by_label_.end() ? npos : it->second;
}

std::size_t Theory::symbol_count() const {
  std::size_t n = facts_.size() + 2 * superiority_.size();
  for (const auto& r : rules_) n += r.body.size() + 1;
  return n;
}

std::set<Atom> Theory::language() const {
  std::set<Atom> out;
  for (const auto& f : facts_) out.insert(f.atom);
  for (const auto& r : rules_) {
    out.insert(r.head.atom);
    for (const auto& b : r.body) out.insert(b.atom);
  }
  return out;
}

const SuperiorityPair* find_superiority_cycle(const std::vector<SuperiorityPair>& sup) {
  // Kahn's algorithm.  Every vertex left after peeling has a surviving
  // incoming edge, so walking those edges backwards must revisit a vertex;
  // the edge that closes the walk lies on a cycle.
  std::unordered_map<std::string_view, std::vector<std::size_t>> out_edges, in_edges;
  std::unordered_map<std::string_view, std::size_t> indegree;
  for (std::size_t i = 0; i < sup.size(); ++i) {
    out_edges[sup[i].superior].push_back(i);
    in_edges[sup[i].inferior].push_back(i);
    indegree[sup[i].superior];
    ++indegree[sup[i].inferior];
  }
  std::vector<std::string_view> ready;
  for (auto& [v, d] : indegree)
    if (d == 0) ready.push_back(v);
  std::vector<bool> removed(sup.size(), false);
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    for (auto e : out_edges[v]) {
      removed[e] = true;
      if (--indegree[sup[e].inferior] == 0) ready.push_back(sup[e].inferior);
    }
  }
  std::size_t e = sup.size();
  for (std::size_t i = 0; i < sup.size(); ++i)
    if (!removed[i]) {
      e = i;
      break;
    }
  if (e == sup.size()) return nullptr;

  std::unordered_set<std::string_view> seen{sup[e].inferior};
  while (seen.insert(sup[e].superior).second) {
    for (auto prev : in_edges[sup[e].superior])
      if (!removed[prev]) {
        e = prev;
        break;
      }
  }
  return &sup[e];
}

const RuleIndex::HeadRules& RuleIndex::head(const Literal& q) const {
  static const HeadRules empty;
  auto it = by_head.find(q);
  return it == by_head.end() ? empty : it->second;
}

RuleIndex classify_rules(const Theory& theory) {
  RuleIndex idx;
  const auto& rules = theory.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    auto& h = idx.by_head[rules[i].head];
    h.all.push_back(i);
    switch (rules[i].kind) {
      case RuleKind::Strict:
        idx.strict.push_back(i);
        idx.strict_or_defeasible.push_back(i);
        h.strict.push_back(i);
        h.strict_or_defeasible.push_back(i);
        break;
      case RuleKind::Defeasible:
        idx.defeasible.push_back(i);
        idx.strict_or_defeasible.push_back(i);
        idx.defeasible_or_defeater.push_back(i);
        h.defeasible.push_back(i);
        h.strict_or_defeasible.push_back(i);
        h.defeasible_or_defeater.push_back(i);
        break;
      case RuleKind::Defeater:
        idx.defeaters.push_back(i);
        idx.defeasible_or_defeater.push_back(i);
        h.defeaters.push_back(i);
        h.defeasible_or_defeater.push_back(i);
        break;
    }
  }
  return idx;
}

std::set<Literal> literal_universe(const Theory& theory) {
  std::set<Literal> out;
  for (const auto& a : theory.language()) {
    out.insert(Literal(a, true));
    out.insert(Literal(a, false));
  }
  return out;
}

std::string_view tag_symbol(Tag t) {
  static constexpr std::string_view symbols[] = {"+D", "-D", "+d", "-d", "+s", "-s", "+t", "-t"};
  return symbols[static_cast<int>(t)];
}

std::string to_string(const TaggedConclusion& c) {
  return std::string(tag_symbol(c.tag)) + " " + c.literal.str();
}

ConclusionSet ConclusionSet::restricted_to(const std::set<Atom>& language, bool keep_internal) const {
  ConclusionSet out(language);
  for (const auto& c : items_)
    if ((keep_internal || is_external(c.tag)) && language.count(c.literal.atom)) out.items_.insert(out.items_.end(), c);
  return out;
}

ConclusionSet ConclusionSet::external() const {
  ConclusionSet out(language_);
  for (const auto& c : items_)
    if (is_external(c.tag)) out.items_.insert(out.items_.end(), c);
  return out;
}

std::size_t ConclusionSet::count(Tag tag) const {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [tag](const auto& c) { return c.tag == tag; }));
}

std::vector<TaggedConclusion> ConclusionSet::incoherences() const {
  std::vector<TaggedConclusion> out;
  for (const auto& c : items_)
    if (is_positive(c.tag) && contains(opposite(c.tag), c.literal)) out.push_back(c);
  return out;
}

}  // namespace dl
