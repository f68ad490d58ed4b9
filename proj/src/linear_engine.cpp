#include "dl/linear_engine.hpp"

#include <cassert>

#include "dl/transform.hpp"

namespace dl {

LinearEngine::LinearEngine(const Theory& theory, Schedule schedule)
    : schedule_(schedule), rules_(theory.rules()), facts_(theory.facts()) {
  if (!theory.superiority().empty())
    throw TheoryError(TheoryErrorKind::NotEngineForm, "the linear engine needs an empty superiority relation");

  std::size_t occurrences = 0;
  for (const auto& r : rules_) occurrences += r.body.size();
  atom_ids_.reserve(occurrences + rules_.size() + facts_.size());
  rule_recs_.reserve(rules_.size());
  occs_.reserve(occurrences);

  for (const auto& f : facts_) lits_[intern(f)].fact = true;

  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    const Id rid = static_cast<Id>(rule_recs_.size());
    RuleRecord rec{intern(r.head), r.kind};
    rec.source = i;
    auto& head = lits_[rec.head];
    switch (r.kind) {
      case RuleKind::Strict: ++head.strict_rules; break;
      case RuleKind::Defeasible: ++head.defeasible_rules; break;
      case RuleKind::Defeater: ++head.defeater_rules; break;
    }
    const int list = r.kind == RuleKind::Strict ? 0 : 1;
    Id prev = kNone;
    for (const auto& b : r.body) {
      const Id q = intern(b);
      const Id node = static_cast<Id>(occs_.size());
      Occurrence occ{q, rid};
      occ.body_prev = prev;
      occ.occ_next = lits_[q].occ_first[list];
      if (occ.occ_next != kNone) occs_[occ.occ_next].occ_prev = node;
      lits_[q].occ_first[list] = node;
      occs_.push_back(occ);
      if (prev == kNone)
        rec.body_first = node;
      else
        occs_[prev].body_next = node;
      prev = node;
      ++rec.remaining;
    }
    rule_recs_.push_back(rec);
  }

  stats_.literals = lits_.size();
  stats_.rules = rule_recs_.size();
  stats_.initial_occurrences = occs_.size();
}

LinearEngine::Id LinearEngine::intern(const Literal& q) {
  auto [it, inserted] = atom_ids_.try_emplace(q.atom.str(), static_cast<Id>(atoms_.size()));
  if (inserted) {
    atoms_.push_back(q.atom);
    lits_.emplace_back();
    lits_.emplace_back();
  }
  return 2 * it->second + (q.positive ? 0 : 1);
}

LinearEngine::Id LinearEngine::find(const Literal& q) const {
  auto it = atom_ids_.find(q.atom.str());
  return it == atom_ids_.end() ? kNone : 2 * it->second + (q.positive ? 0 : 1);
}

Literal LinearEngine::literal_of(Id id) const { return Literal(atoms_[id / 2], id % 2 == 0); }

void LinearEngine::record(Tag t, Id q) {
  auto& rec = lits_[q];
  const auto bit = static_cast<std::uint8_t>(1u << static_cast<int>(t));
  if (rec.flags & bit) return;
  assert(!test(q, opposite(t)) && "incoherent record");
  rec.flags |= bit;
  ++stats_.records;
  if (is_external(t)) {
    queue_.push_back({t, q});
    ++stats_.enqueues;
  }
  check_inference(q);
  check_inference(q ^ 1);
}

// +d q  <-  +D q,  or  +s q and -D ~q and -t ~q
// -d q  <-  -D q  and  (-s q or +D ~q or +t ~q)
void LinearEngine::check_inference(Id q) {
  const Id nq = q ^ 1;
  if (!test(q, Tag::PlusPartial) &&
      (test(q, Tag::PlusDelta) ||
       (test(q, Tag::PlusSigma) && test(nq, Tag::MinusDelta) && test(nq, Tag::MinusTau))))
    record(Tag::PlusPartial, q);
  if (!test(q, Tag::MinusPartial) && test(q, Tag::MinusDelta) &&
      (test(q, Tag::MinusSigma) || test(nq, Tag::PlusDelta) || test(nq, Tag::PlusTau)))
    record(Tag::MinusPartial, q);
}

void LinearEngine::initialize() {
  if (initialized_) return;
  initialized_ = true;
  for (Id r = 0; r < rule_recs_.size(); ++r)
    if (rule_recs_[r].remaining == 0) body_emptied(r);
  for (Id q = 0; q < lits_.size(); ++q) {
    const auto& rec = lits_[q];
    if (rec.fact) record(Tag::PlusDelta, q);
    if (!rec.fact && rec.strict_rules == 0) record(Tag::MinusDelta, q);
    if (rec.defeasible_rules == 0) record(Tag::MinusSigma, q);
    if (rec.defeasible_rules == 0 && rec.defeater_rules == 0) record(Tag::MinusTau, q);
  }
}

void LinearEngine::run() {
  initialize();
  while (queue_head_ < queue_.size()) {
    Pending s;
    if (schedule_ == Schedule::Fifo) {
      s = queue_[queue_head_++];
    } else {
      s = queue_.back();
      queue_.pop_back();
    }
    ++stats_.dequeues;
    switch (s.tag) {
      case Tag::PlusDelta:
        delete_occurrences(s.literal, true);
        delete_occurrences(s.literal, false);
        break;
      case Tag::MinusDelta: delete_rules_containing(s.literal, true); break;
      case Tag::PlusPartial: delete_occurrences(s.literal, false); break;
      case Tag::MinusPartial: delete_rules_containing(s.literal, false); break;
      default: assert(false && "internal tag in S");
    }
  }
}

void LinearEngine::unlink_from_occurrences(Id node) {
  auto& o = occs_[node];
  const int list = rule_recs_[o.rule].kind == RuleKind::Strict ? 0 : 1;
  if (o.occ_prev != kNone)
    occs_[o.occ_prev].occ_next = o.occ_next;
  else
    lits_[o.literal].occ_first[list] = o.occ_next;
  if (o.occ_next != kNone) occs_[o.occ_next].occ_prev = o.occ_prev;
  o.occ_prev = o.occ_next = kNone;
}

void LinearEngine::delete_occurrences(Id q, bool strict_bodies) {
  Id node = lits_[q].occ_first[strict_bodies ? 0 : 1];
  lits_[q].occ_first[strict_bodies ? 0 : 1] = kNone;
  while (node != kNone) {
    auto& o = occs_[node];
    const Id next = o.occ_next;
    o.occ_prev = o.occ_next = kNone;
    o.live = false;
    ++stats_.occurrence_deletions;

    auto& r = rule_recs_[o.rule];
    if (o.body_prev != kNone)
      occs_[o.body_prev].body_next = o.body_next;
    else
      r.body_first = o.body_next;
    if (o.body_next != kNone) occs_[o.body_next].body_prev = o.body_prev;
    if (--r.remaining == 0) body_emptied(o.rule);
    node = next;
  }
}

void LinearEngine::delete_rules_containing(Id q, bool strict_bodies) {
  Id node = lits_[q].occ_first[strict_bodies ? 0 : 1];
  while (node != kNone) {
    const Id next = occs_[node].occ_next;
    delete_rule(occs_[node].rule);
    node = next;
  }
}

void LinearEngine::delete_rule(Id r) {
  auto& rec = rule_recs_[r];
  if (!rec.alive) return;
  rec.alive = false;
  ++stats_.rule_deletions;
  for (Id node = rec.body_first; node != kNone; node = occs_[node].body_next) {
    unlink_from_occurrences(node);
    occs_[node].live = false;
    ++stats_.occurrence_deletions;
  }
  rec.body_first = kNone;
  rec.remaining = 0;

  const Id h = rec.head;
  auto& head = lits_[h];
  switch (rec.kind) {
    case RuleKind::Strict:
      if (--head.strict_rules == 0 && !head.fact) record(Tag::MinusDelta, h);
      break;
    case RuleKind::Defeasible:
      if (--head.defeasible_rules == 0) {
        record(Tag::MinusSigma, h);
        if (head.defeater_rules == 0) record(Tag::MinusTau, h);
      }
      break;
    case RuleKind::Defeater:
      if (--head.defeater_rules == 0 && head.defeasible_rules == 0) record(Tag::MinusTau, h);
      break;
  }
}

// The rule stays counted for its head: an empty body can no longer be
// deleted, so "no more rules for h" can never fire for it.
void LinearEngine::body_emptied(Id r) {
  const auto& rec = rule_recs_[r];
  switch (rec.kind) {
    case RuleKind::Strict: record(Tag::PlusDelta, rec.head); break;
    case RuleKind::Defeasible:
      record(Tag::PlusSigma, rec.head);
      record(Tag::PlusTau, rec.head);
      break;
    case RuleKind::Defeater: record(Tag::PlusTau, rec.head); break;
  }
}

bool LinearEngine::has(Tag tag, const Literal& q) const {
  const Id id = find(q);
  return id != kNone && test(id, tag);
}

ConclusionSet LinearEngine::conclusions(bool extended) const {
  std::set<Atom> language(atoms_.begin(), atoms_.end());
  return conclusions(language, extended);
}

ConclusionSet LinearEngine::conclusions(const std::set<Atom>& language, bool extended) const {
  ConclusionSet out(language);
  for (const auto& a : language) {
    auto it = atom_ids_.find(a.str());
    if (it == atom_ids_.end()) continue;
    for (Id q : {2 * it->second, 2 * it->second + 1})
      for (Tag t : kAllTags)
        if ((extended || is_external(t)) && test(q, t)) out.insert(t, literal_of(q));
  }
  return out;
}

Theory LinearEngine::residue() const {
  std::vector<Rule> rules;
  for (const auto& rec : rule_recs_) {
    if (!rec.alive || rec.remaining == 0) continue;
    const Rule& src = rules_[rec.source];
    std::vector<Literal> body;
    for (Id node = rec.body_first; node != kNone; node = occs_[node].body_next)
      body.push_back(literal_of(occs_[node].literal));
    rules.emplace_back(src.label, std::move(body), src.kind, src.head);
  }
  return Theory(facts_, std::move(rules));
}

std::vector<TaggedConclusion> LinearEngine::pending() const {
  std::vector<TaggedConclusion> out;
  if (schedule_ == Schedule::Fifo) {
    for (std::size_t i = queue_head_; i < queue_.size(); ++i) out.push_back({queue_[i].tag, literal_of(queue_[i].literal)});
  } else {
    for (std::size_t i = queue_.size(); i-- > queue_head_;) out.push_back({queue_[i].tag, literal_of(queue_[i].literal)});
  }
  return out;
}

std::size_t LinearEngine::occurrence_count(const Literal& q, bool strict) const {
  const Id id = find(q);
  if (id == kNone) return 0;
  std::size_t n = 0;
  for (Id node = lits_[id].occ_first[strict ? 0 : 1]; node != kNone; node = occs_[node].occ_next) ++n;
  return n;
}

std::size_t LinearEngine::rule_count(const Literal& head, RuleKind kind) const {
  const Id id = find(head);
  if (id == kNone) return 0;
  switch (kind) {
    case RuleKind::Strict: return lits_[id].strict_rules;
    case RuleKind::Defeasible: return lits_[id].defeasible_rules;
    case RuleKind::Defeater: return lits_[id].defeater_rules;
  }
  return 0;
}

ConclusionSet infer_linear(const Theory& source, const InferOptions& options, EngineStats* stats) {
  LinearEngine engine(to_engine_form(source), options.schedule);
  engine.run();
  if (stats) *stats = engine.stats();
  return engine.conclusions(source.language(), options.extended);
}

}  // namespace dl
