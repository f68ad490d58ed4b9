#include <algorithm>
#include <numeric>

#include "dl/linear_engine.hpp"
#include "dl/reference.hpp"
#include "dl/transform.hpp"

namespace dl {

TransitionSystem::TransitionSystem(const Theory& theory, std::optional<std::uint64_t> seed)
    : facts_(theory.facts()) {
  if (!theory.superiority().empty())
    throw TheoryError(TheoryErrorKind::NotEngineForm, "the transition system needs an empty superiority relation");
  if (seed) rng_.emplace(*seed);

  std::map<Literal, std::size_t> ids;
  for (const auto& a : theory.language()) {
    ids.emplace(Literal(a, true), literals_.size());
    literals_.emplace_back(a, true);
    ids.emplace(Literal(a, false), literals_.size());
    literals_.emplace_back(a, false);
  }
  flags_.assign(literals_.size(), 0);
  fact_.assign(literals_.size(), false);
  for (const auto& f : facts_) fact_[ids.at(f)] = true;
  for (const auto& r : theory.rules()) {
    LiveRule live{r.label, r.kind, ids.at(r.head), {}};
    for (const auto& b : r.body) live.body.push_back(ids.at(b));
    rules_.push_back(std::move(live));
  }
}

bool TransitionSystem::add(std::size_t q, Tag t) {
  const auto bit = static_cast<std::uint8_t>(1u << static_cast<int>(t));
  if (flags_[q] & bit) return false;
  flags_[q] |= bit;
  return true;
}

// Applies every currently applicable instance of one transition kind, one
// transition at a time.  Returns whether anything changed.
bool TransitionSystem::sweep(int kind, std::size_t& budget) {
  auto order = [this](std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (rng_) std::shuffle(idx.begin(), idx.end(), *rng_);
    return idx;
  };
  bool changed = false;
  auto apply = [&] {
    ++applied_;
    ++by_kind_[kind];
    --budget;
    changed = true;
  };

  const std::size_t n = literals_.size();
  std::vector<std::size_t> strict(n, 0), defeasible(n, 0), defeater(n, 0);
  std::vector<bool> strict_empty(n, false);
  for (const auto& r : rules_) {
    if (!r.alive) continue;
    switch (r.kind) {
      case RuleKind::Strict:
        ++strict[r.head];
        if (r.body.empty()) strict_empty[r.head] = true;
        break;
      case RuleKind::Defeasible: ++defeasible[r.head]; break;
      case RuleKind::Defeater: ++defeater[r.head]; break;
    }
  }

  switch (kind) {
    case 1:
      for (auto q : order(n)) {
        if (budget == 0) break;
        if (!(fact_[q] || strict_empty[q])) continue;
        bool c = add(q, Tag::PlusDelta);
        c = add(q, Tag::PlusPartial) || c;
        if (c) apply();
      }
      break;
    case 2:
      for (auto i : order(rules_.size())) {
        if (budget == 0) break;
        const auto& r = rules_[i];
        if (!r.alive || !r.body.empty() || r.kind == RuleKind::Strict) continue;
        bool c = false;
        if (r.kind == RuleKind::Defeasible) c = add(r.head, Tag::PlusSigma);
        c = add(r.head, Tag::PlusTau) || c;
        if (c) apply();
      }
      break;
    case 3:
      for (auto q : order(n)) {
        if (budget == 0) break;
        if (!fact_[q] && strict[q] == 0 && add(q, Tag::MinusDelta)) apply();
      }
      break;
    case 4:
      for (auto q : order(n)) {
        if (budget == 0) break;
        if (defeasible[q] != 0) continue;
        bool c = add(q, Tag::MinusSigma);
        if (defeater[q] == 0) c = add(q, Tag::MinusTau) || c;
        if (c) apply();
      }
      break;
    case 5:
      for (auto q : order(n)) {
        if (budget == 0) break;
        const std::size_t nq = q ^ 1;
        if (has(q, Tag::PlusPartial)) continue;
        if (has(q, Tag::PlusDelta) ||
            (has(q, Tag::PlusSigma) && has(nq, Tag::MinusDelta) && has(nq, Tag::MinusTau))) {
          add(q, Tag::PlusPartial);
          apply();
        }
      }
      break;
    case 6:
      for (auto q : order(n)) {
        if (budget == 0) break;
        const std::size_t nq = q ^ 1;
        if (has(q, Tag::MinusPartial) || !has(q, Tag::MinusDelta)) continue;
        if (has(q, Tag::MinusSigma) || has(nq, Tag::PlusDelta) || has(nq, Tag::PlusTau)) {
          add(q, Tag::MinusPartial);
          apply();
        }
      }
      break;
    case 7:
    case 8:
      for (auto i : order(rules_.size())) {
        auto& r = rules_[i];
        if (!r.alive || (r.kind == RuleKind::Strict) != (kind == 7)) continue;
        const Tag need = kind == 7 ? Tag::PlusDelta : Tag::PlusPartial;
        for (std::size_t j = 0; j < r.body.size() && budget > 0;) {
          if (has(r.body[j], need)) {
            r.body.erase(r.body.begin() + static_cast<std::ptrdiff_t>(j));
            apply();
          } else {
            ++j;
          }
        }
      }
      break;
    case 9:
    case 10:
      for (auto i : order(rules_.size())) {
        if (budget == 0) break;
        auto& r = rules_[i];
        if (!r.alive || (r.kind == RuleKind::Strict) != (kind == 9)) continue;
        const Tag need = kind == 9 ? Tag::MinusDelta : Tag::MinusPartial;
        if (std::any_of(r.body.begin(), r.body.end(), [&](std::size_t b) { return has(b, need); })) {
          r.alive = false;
          apply();
        }
      }
      break;
  }
  return changed;
}

std::size_t TransitionSystem::run(std::size_t limit) {
  std::size_t budget = limit;
  const std::size_t before = applied_;
  std::vector<int> kinds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  while (!done_ && budget > 0) {
    if (rng_) std::shuffle(kinds.begin(), kinds.end(), *rng_);
    bool progress = false;
    for (int k : kinds) {
      if (budget == 0) break;
      progress = sweep(k, budget) || progress;
    }
    if (!progress && budget > 0) done_ = true;
  }
  return applied_ - before;
}

Theory TransitionSystem::current_theory() const {
  std::vector<Rule> rules;
  for (const auto& r : rules_) {
    if (!r.alive) continue;
    std::vector<Literal> body;
    for (auto b : r.body) body.push_back(literals_[b]);
    rules.emplace_back(r.label, std::move(body), r.kind, literals_[r.head]);
  }
  return Theory(facts_, std::move(rules));
}

ConclusionSet TransitionSystem::extended_conclusions() const {
  std::set<Atom> language;
  for (std::size_t q = 0; q < literals_.size(); q += 2) language.insert(literals_[q].atom);
  ConclusionSet out(std::move(language));
  for (std::size_t q = 0; q < literals_.size(); ++q)
    for (Tag t : kAllTags)
      if (has(q, t)) out.insert(t, literals_[q]);
  return out;
}

ConclusionSet TransitionSystem::conclusions() const { return extended_conclusions().external(); }

ConclusionSet run_transitions(const Theory& theory) {
  TransitionSystem ts(theory);
  ts.run();
  return ts.conclusions();
}

EngineComparison compare_engines(const Theory& theory) {
  EngineComparison out;
  const auto sigma = theory.language();
  out.oracle_set = run_oracle(theory).conclusions.restricted_to(sigma);
  const Theory engine_form = to_engine_form(theory);
  out.transition_set = run_transitions(engine_form).restricted_to(sigma);
  LinearEngine engine(engine_form);
  engine.run();
  out.linear_set = engine.conclusions(sigma);

  std::set<TaggedConclusion> all;
  for (const auto* s : {&out.oracle_set, &out.transition_set, &out.linear_set}) all.insert(s->begin(), s->end());
  for (const auto& c : all) {
    const bool o = out.oracle_set.contains(c.tag, c.literal);
    const bool t = out.transition_set.contains(c.tag, c.literal);
    const bool l = out.linear_set.contains(c.tag, c.literal);
    if (o && t && l) continue;
    out.agree = false;
    out.divergence = c;
    out.oracle = o;
    out.transition = t;
    out.linear = l;
    break;
  }
  return out;
}

std::string describe(const EngineComparison& c) {
  if (c.agree) return "3 engines agree (restricted to \xCE\xA3)";
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  return "engines disagree on " + to_string(*c.divergence) + ": oracle=" + yn(c.oracle) +
         " transition=" + yn(c.transition) + " linear=" + yn(c.linear);
}

}  // namespace dl
