#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "dl/theory.hpp"

namespace dl {

enum class Schedule : std::uint8_t { Fifo, Lifo };

// Work counters.  After run(): occurrence_deletions <= initial_occurrences,
// rule_deletions <= rules, enqueues <= 4 * literals.
struct EngineStats {
  std::size_t literals = 0;
  std::size_t rules = 0;
  std::size_t initial_occurrences = 0;
  std::size_t occurrence_deletions = 0;
  std::size_t rule_deletions = 0;
  std::size_t records = 0;
  std::size_t enqueues = 0;
  std::size_t dequeues = 0;
};

// Forward-chaining evaluator for superiority-free theories with duplicated
// strict rules (defeaters allowed).  Strict rules feed only the Delta tags;
// defeasible rules feed sigma (support) and tau (attack); defeaters feed tau.
//
// Every rule body is a
// doubly-linked list of occurrence nodes, and every literal keeps two
// doubly-linked lists of its occurrences (strict bodies, non-strict bodies),
// so each occurrence and each rule is deleted at most once and the whole run
// is linear in the number of occurrences.
class LinearEngine {
 public:
  // Throws TheoryError(NotEngineForm) if the superiority relation is not empty.
  explicit LinearEngine(const Theory& engine_form, Schedule schedule = Schedule::Fifo);

  // Seeds the pending set from facts, empty bodies and missing rules.
  void initialize();

  // Drains the pending set.
  void run();

  bool has(Tag tag, const Literal& q) const;

  // All recorded conclusions over the engine's literal universe.
  ConclusionSet conclusions(bool extended = false) const;
  // Restricted to `language` (normally the source theory's atoms).
  ConclusionSet conclusions(const std::set<Atom>& language, bool extended = false) const;

  // Surviving rules with their surviving body literals.  Rules whose body
  // has been emptied were consumed into conclusions and are not part of it.
  Theory residue() const;

  const EngineStats& stats() const { return stats_; }

  // Conclusions waiting in S, in dequeue order.
  std::vector<TaggedConclusion> pending() const;

  // Live occurrences of q in strict (resp. non-strict) bodies.
  std::size_t occurrence_count(const Literal& q, bool strict) const;
  // Live rules of the given kind with head q.
  std::size_t rule_count(const Literal& head, RuleKind kind) const;

 private:
  using Id = std::uint32_t;
  static constexpr Id kNone = static_cast<Id>(-1);

  struct Occurrence {
    Id literal;
    Id rule;
    Id body_prev = kNone, body_next = kNone;
    Id occ_prev = kNone, occ_next = kNone;
    bool live = true;
  };

  struct RuleRecord {
    Id head;
    RuleKind kind;
    bool alive = true;
    Id body_first = kNone;
    std::uint32_t remaining = 0;
    std::size_t source = 0;  // index into rules_
  };

  struct LiteralRecord {
    std::uint8_t flags = 0;  // bit per Tag
    bool fact = false;
    std::uint32_t strict_rules = 0, defeasible_rules = 0, defeater_rules = 0;
    Id occ_first[2] = {kNone, kNone};  // [0] strict bodies, [1] non-strict bodies
  };

  struct Pending {
    Tag tag;
    Id literal;
  };

  Id intern(const Literal& q);
  Id find(const Literal& q) const;
  Literal literal_of(Id id) const;

  bool test(Id q, Tag t) const { return (lits_[q].flags >> static_cast<int>(t)) & 1u; }
  void record(Tag t, Id q);
  void check_inference(Id q);

  void unlink_from_occurrences(Id node);
  void delete_occurrences(Id q, bool strict_bodies);
  void delete_rules_containing(Id q, bool strict_bodies);
  void delete_rule(Id r);
  void body_emptied(Id r);

  Schedule schedule_;
  std::vector<Rule> rules_;  // engine-form rules, for residue()
  std::vector<Literal> facts_;
  std::vector<Atom> atoms_;
  std::unordered_map<std::string, Id> atom_ids_;
  std::vector<LiteralRecord> lits_;  // id = 2 * atom + (negative ? 1 : 0)
  std::vector<RuleRecord> rule_recs_;
  std::vector<Occurrence> occs_;
  std::vector<Pending> queue_;
  std::size_t queue_head_ = 0;
  bool initialized_ = false;
  EngineStats stats_;
};

struct InferOptions {
  bool extended = false;
  Schedule schedule = Schedule::Fifo;
};

// to_engine_form, then run, with results restricted to the source language.
ConclusionSet infer_linear(const Theory& source, const InferOptions& options = {}, EngineStats* stats = nullptr);

}  // namespace dl
