#include <unordered_set>

#include "dl/reference.hpp"

namespace dl {

namespace {

// Direct evaluation of the four inference rules over index-based rule sets.
class Oracle {
 public:
  Oracle(const Theory& theory, OracleMode mode) : theory_(theory) {
    for (const auto& q : literal_universe(theory)) {
      ids_.emplace(q, lits_.size());
      lits_.push_back(q);
    }
    comp_.resize(lits_.size());
    for (std::size_t q = 0; q < lits_.size(); ++q) comp_[q] = ids_.at(complement(lits_[q]));
    const auto& rules = theory.rules();
    bodies_.resize(rules.size());
    heads_.resize(rules.size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
      heads_[i] = ids_.at(rules[i].head);
      for (const auto& b : rules[i].body) bodies_[i].push_back(ids_.at(b));
    }
    strict_.resize(lits_.size());
    support_.resize(lits_.size());
    attack_on_.resize(lits_.size());
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const std::size_t h = heads_[i];
      const RuleKind k = rules[i].kind;
      if (k == RuleKind::Strict) strict_[h].push_back(i);
      const bool supports = k == RuleKind::Defeasible || (k == RuleKind::Strict && mode == OracleMode::Standard);
      const bool attacks = k != RuleKind::Strict || mode == OracleMode::Standard;
      if (supports) support_[h].push_back(i);
      // A rule for h attacks ~h.
      if (attacks) attack_on_[complement_id(h)].push_back(i);
    }
    for (const auto& p : theory.superiority())
      superior_.insert(key(theory.rule_index(p.superior), theory.rule_index(p.inferior)));
    fact_.resize(lits_.size(), false);
    for (const auto& f : theory.facts()) fact_[ids_.at(f)] = true;
    flags_.assign(lits_.size(), 0);
  }

  void seed(const ConclusionSet& seed) {
    for (const auto& c : seed) {
      auto it = ids_.find(c.literal);
      if (it != ids_.end() && is_external(c.tag)) set(it->second, c.tag);
    }
  }

  void fixpoint(std::vector<TaggedConclusion>* trace) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t q = 0; q < lits_.size(); ++q)
        for (Tag t : kExternalTags)
          if (!has(q, t) && holds(q, t)) {
            set(q, t);
            if (trace) trace->push_back({t, lits_[q]});
            changed = true;
          }
    }
  }

  ConclusionSet result() const {
    ConclusionSet out(theory_.language());
    for (std::size_t q = 0; q < lits_.size(); ++q)
      for (Tag t : kExternalTags)
        if (has(q, t)) out.insert(t, lits_[q]);
    return out;
  }

 private:
  static std::uint64_t key(std::size_t a, std::size_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

  std::size_t complement_id(std::size_t q) const { return comp_[q]; }

  bool has(std::size_t q, Tag t) const { return (flags_[q] >> static_cast<int>(t)) & 1u; }
  void set(std::size_t q, Tag t) { flags_[q] |= static_cast<std::uint8_t>(1u << static_cast<int>(t)); }

  bool all_body(std::size_t r, Tag t) const {
    for (auto a : bodies_[r])
      if (!has(a, t)) return false;
    return true;
  }
  bool some_body(std::size_t r, Tag t) const {
    for (auto a : bodies_[r])
      if (has(a, t)) return true;
    return false;
  }
  bool beats(std::size_t t, std::size_t s) const { return superior_.count(key(t, s)) != 0; }

  bool holds(std::size_t q, Tag tag) const {
    const std::size_t nq = complement_id(q);
    switch (tag) {
      case Tag::PlusDelta:
        if (fact_[q]) return true;
        for (auto r : strict_[q])
          if (all_body(r, Tag::PlusDelta)) return true;
        return false;

      case Tag::MinusDelta:
        if (fact_[q]) return false;
        for (auto r : strict_[q])
          if (!some_body(r, Tag::MinusDelta)) return false;
        return true;

      case Tag::PlusPartial: {
        if (has(q, Tag::PlusDelta)) return true;
        bool applicable = false;
        for (auto r : support_[q])
          if (all_body(r, Tag::PlusPartial)) applicable = true;
        if (!applicable || !has(nq, Tag::MinusDelta)) return false;
        for (auto s : attack_on_[q]) {
          if (some_body(s, Tag::MinusPartial)) continue;
          bool beaten = false;
          for (auto t : support_[q])
            if (beats(t, s) && all_body(t, Tag::PlusPartial)) beaten = true;
          if (!beaten) return false;
        }
        return true;
      }

      case Tag::MinusPartial: {
        if (!has(q, Tag::MinusDelta)) return false;
        bool discarded = true;
        for (auto r : support_[q])
          if (!some_body(r, Tag::MinusPartial)) discarded = false;
        if (discarded || has(nq, Tag::PlusDelta)) return true;
        for (auto s : attack_on_[q]) {
          if (!all_body(s, Tag::PlusPartial)) continue;
          bool unbeaten = true;
          for (auto t : support_[q])
            if (beats(t, s) && !some_body(t, Tag::MinusPartial)) unbeaten = false;
          if (unbeaten) return true;
        }
        return false;
      }

      default: return false;
    }
  }

  const Theory& theory_;
  std::map<Literal, std::size_t> ids_;
  std::vector<Literal> lits_;
  std::vector<std::size_t> comp_;
  std::vector<std::vector<std::size_t>> bodies_;
  std::vector<std::size_t> heads_;
  std::vector<std::vector<std::size_t>> strict_, support_, attack_on_;
  std::unordered_set<std::uint64_t> superior_;
  std::vector<bool> fact_;
  std::vector<std::uint8_t> flags_;
};

}  // namespace

OracleResult run_oracle(const Theory& theory, bool want_trace, OracleMode mode) {
  Oracle oracle(theory, mode);
  OracleResult out;
  if (want_trace) out.trace.emplace();
  oracle.fixpoint(want_trace ? &*out.trace : nullptr);
  out.conclusions = oracle.result();
  return out;
}

ConclusionSet oracle_fixpoint(const Theory& theory, const ConclusionSet& seed, OracleMode mode) {
  Oracle oracle(theory, mode);
  oracle.seed(seed);
  oracle.fixpoint(nullptr);
  return oracle.result();
}

std::string format_trace(const std::vector<TaggedConclusion>& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) out += std::to_string(i + 1) + ". " + to_string(trace[i]) + "\n";
  return out;
}

}  // namespace dl
