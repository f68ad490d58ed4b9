#include "dl/transform.hpp"

#include <unordered_map>
#include <unordered_set>

namespace dl {

Theory prune_superiority(const Theory& theory) {
  std::vector<SuperiorityPair> kept;
  for (const auto& p : theory.superiority()) {
    const Rule* a = theory.find_rule(p.superior);
    const Rule* b = theory.find_rule(p.inferior);
    // A defeater never counters an attack, so it cannot win a comparison.
    if (a->head == complement(b->head) && a->kind != RuleKind::Defeater) kept.push_back(p);
  }
  return Theory(theory.facts(), theory.rules(), std::move(kept));
}

Theory duplicate_strict(const Theory& theory) {
  std::vector<Rule> rules = theory.rules();
  std::unordered_set<std::string> strict;
  for (const auto& r : theory.rules()) {
    if (r.kind != RuleKind::Strict) continue;
    strict.insert(r.label);
    rules.emplace_back(twin_label(r.label), r.body, RuleKind::Defeasible, r.head);
  }
  if (strict.empty()) return theory;

  std::vector<SuperiorityPair> sup;
  sup.reserve(theory.superiority().size());
  auto retarget = [&](const std::string& l) { return strict.count(l) ? twin_label(l) : l; };
  for (const auto& p : theory.superiority()) sup.push_back({retarget(p.superior), retarget(p.inferior)});
  return Theory(theory.facts(), std::move(rules), std::move(sup));
}

Theory elim_sup(const Theory& theory) {
  for (const auto& p : theory.superiority())
    for (const auto* l : {&p.superior, &p.inferior})
      if (theory.find_rule(*l)->kind == RuleKind::Strict)
        throw TheoryError(TheoryErrorKind::InvalidSuperiorityOnStrict,
                          "elim_sup: strict rule '" + *l + "' occurs in the superiority relation");

  std::vector<Rule> out;
  for (const auto& r : theory.rules())
    if (r.kind == RuleKind::Strict) out.push_back(r);

  for (const auto& p : theory.superiority()) {
    auto base = pair_base(p);
    out.emplace_back(generated_label(base, 1), std::vector<Literal>{Literal(inf_plus_atom(p.superior), false)},
                     RuleKind::Defeasible, Literal(inf_plus_atom(p.inferior)));
    out.emplace_back(generated_label(base, 2), std::vector<Literal>{Literal(inf_minus_atom(p.superior), false)},
                     RuleKind::Defeasible, Literal(inf_minus_atom(p.inferior)));
  }

  for (const auto& r : theory.rules()) {
    Literal not_infp(inf_plus_atom(r.label), false);
    Literal not_infm(inf_minus_atom(r.label), false);
    if (r.kind == RuleKind::Defeasible) {
      out.emplace_back(generated_label(r.label, 1), r.body, RuleKind::Defeasible, not_infp);
      out.emplace_back(generated_label(r.label, 2), std::vector<Literal>{not_infp}, RuleKind::Defeasible, r.head);
      out.emplace_back(generated_label(r.label, 3), r.body, RuleKind::Defeasible, not_infm);
      out.emplace_back(generated_label(r.label, 4), std::vector<Literal>{not_infm}, RuleKind::Defeasible, r.head);
    } else if (r.kind == RuleKind::Defeater) {
      out.emplace_back(generated_label(r.label, 1), r.body, RuleKind::Defeasible, not_infm);
      out.emplace_back(generated_label(r.label, 2), std::vector<Literal>{not_infm}, RuleKind::Defeater, r.head);
    }
  }
  return Theory(theory.facts(), std::move(out));
}

Theory to_engine_form(const Theory& theory) {
  Theory t = duplicate_strict(prune_superiority(theory));
  // With nothing left to encode the theory is already superiority-free, and
  // defeaters are handled natively by the engines.
  if (t.superiority().empty()) return t;
  return elim_sup(t);
}

Theory transform(const Theory& theory, Stage stage) {
  switch (stage) {
    case Stage::Prune: return prune_superiority(theory);
    case Stage::Dup: return duplicate_strict(prune_superiority(theory));
    case Stage::NoSup: return elim_sup(duplicate_strict(prune_superiority(theory)));
    case Stage::Engine: return to_engine_form(theory);
  }
  return theory;
}

}  // namespace dl
