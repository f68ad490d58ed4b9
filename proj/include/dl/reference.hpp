#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dl/theory.hpp"

namespace dl {

// ---------------------------------------------------------------------------
// Proof-theory oracle

enum class OracleMode : std::uint8_t {
  // The full inference rules: strict rules take part in defeasible reasoning.
  Standard,
  // Strict rules feed only +D/-D; defeasible reasoning uses defeasible rules
  // and defeaters.  Equivalent to Standard on theories with duplicated strict
  // rules whose strict rules carry no superiority.
  Separated,
};

struct OracleResult {
  ConclusionSet conclusions;
  std::optional<std::vector<TaggedConclusion>> trace;  // addition order
};

// Least fixpoint of the +D, -D, +d, -d inference rules, by round-robin
// re-evaluation.  Handles superiority and defeaters directly.  Quadratic or
// worse; meant for small theories.
OracleResult run_oracle(const Theory& theory, bool want_trace = false, OracleMode mode = OracleMode::Standard);

// Same fixpoint, starting from `seed` instead of the empty set.
ConclusionSet oracle_fixpoint(const Theory& theory, const ConclusionSet& seed, OracleMode mode = OracleMode::Standard);

// Numbered derivation lines, "1. +D emu_ethel".
std::string format_trace(const std::vector<TaggedConclusion>& trace);

// ---------------------------------------------------------------------------
// Transition-system interpreter

// Rewrites a superiority-free theory while accumulating extended conclusions:
//
//   1  fact q, or strict rule for q with empty body     -> +D q, +d q
//   2  defeasible rule for q with empty body            -> +s q, +t q
//      defeater for q with empty body                   -> +t q
//   3  no strict rule and no fact for q                 -> -D q
//   4  no defeasible rule for q                         -> -s q
//      no defeasible rule and no defeater for q         -> -t q
//   5  +D q, or {+s q, -D ~q, -t ~q}                    -> +d q
//   6  -D q and one of {-s q, +D ~q, +t ~q}             -> -d q
//   7  +D q: delete q from strict bodies
//   8  +d q: delete q from defeasible and defeater bodies
//   9  -D q: delete strict rules with q in the body
//  10  -d q: delete defeasible rules and defeaters with q in the body
//
// The tau tags extend 2, 4, 5, 6, 8 and 10 to defeaters.
class TransitionSystem {
 public:
  // Throws TheoryError(NotEngineForm) on a nonempty superiority relation.
  // With a seed, transition kinds and instances are visited in a random
  // order instead of round-robin.
  explicit TransitionSystem(const Theory& theory, std::optional<std::uint64_t> seed = std::nullopt);

  // Applies up to `limit` state-changing transitions; returns how many were
  // applied (fewer than `limit` means the state is final).
  std::size_t run(std::size_t limit = static_cast<std::size_t>(-1));

  bool done() const { return done_; }
  std::size_t transitions_applied() const { return applied_; }
  // Count of applications per transition kind, index 1..10.
  const std::vector<std::size_t>& applied_by_kind() const { return by_kind_; }

  // The current, simplified theory D_i.
  Theory current_theory() const;
  // C_i with all tags.
  ConclusionSet extended_conclusions() const;
  // C_i restricted to the four external tags.
  ConclusionSet conclusions() const;

 private:
  struct LiveRule {
    std::string label;
    RuleKind kind;
    std::size_t head;
    std::vector<std::size_t> body;
    bool alive = true;
  };

  bool has(std::size_t q, Tag t) const { return (flags_[q] >> static_cast<int>(t)) & 1u; }
  bool add(std::size_t q, Tag t);
  bool sweep(int kind, std::size_t& budget);

  std::vector<Literal> literals_;  // id -> literal; complement(id) = id ^ 1
  std::vector<std::uint8_t> flags_;
  std::vector<bool> fact_;
  std::vector<LiveRule> rules_;
  std::vector<Literal> facts_;
  std::optional<std::mt19937_64> rng_;
  std::size_t applied_ = 0;
  std::vector<std::size_t> by_kind_ = std::vector<std::size_t>(11, 0);
  bool done_ = false;
};

ConclusionSet run_transitions(const Theory& theory);

// ---------------------------------------------------------------------------
// Differential comparison

struct EngineComparison {
  bool agree = true;
  std::optional<TaggedConclusion> divergence;  // first differing conclusion
  bool oracle = false, transition = false, linear = false;  // values at the divergence
  ConclusionSet oracle_set, transition_set, linear_set;
};

// Runs the oracle on the source theory and the two other engines on its
// engine form. All three results are restricted to the source language.
EngineComparison compare_engines(const Theory& theory);

std::string describe(const EngineComparison& c);

}  // namespace dl
