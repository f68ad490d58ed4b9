#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "dl/generate.hpp"
#include "dl/linear_engine.hpp"
#include "dl/reference.hpp"
#include "dl/transform.hpp"

using namespace dl;

namespace {

// Direct reading of the four inference conditions against a proof prefix.
// Kept separate from run_oracle so the trace can be checked independently.
class Checker {
 public:
  explicit Checker(const Theory& t) : t_(t) {
    for (const auto& p : t.superiority()) sup_.insert({p.superior, p.inferior});
  }

  bool justified(const std::set<TaggedConclusion>& p, const TaggedConclusion& c) const {
    const Literal& q = c.literal;
    const Literal nq = complement(q);
    auto has = [&](Tag tag, const Literal& l) { return p.count({tag, l}) != 0; };
    auto all_body = [&](const Rule& r, Tag tag) {
      return std::all_of(r.body.begin(), r.body.end(), [&](const Literal& a) { return has(tag, a); });
    };
    auto some_body = [&](const Rule& r, Tag tag) {
      return std::any_of(r.body.begin(), r.body.end(), [&](const Literal& a) { return has(tag, a); });
    };
    auto rules_for = [&](const Literal& h, bool strict_only, bool sd_only) {
      std::vector<const Rule*> out;
      for (const auto& r : t_.rules()) {
        if (r.head != h) continue;
        if (strict_only && r.kind != RuleKind::Strict) continue;
        if (sd_only && r.kind == RuleKind::Defeater) continue;
        out.push_back(&r);
      }
      return out;
    };
    auto beats = [&](const Rule* a, const Rule* b) { return sup_.count({a->label, b->label}) != 0; };

    switch (c.tag) {
      case Tag::PlusDelta: {
        if (t_.is_fact(q)) return true;
        for (auto* r : rules_for(q, true, false))
          if (all_body(*r, Tag::PlusDelta)) return true;
        return false;
      }
      case Tag::MinusDelta: {
        if (t_.is_fact(q)) return false;
        for (auto* r : rules_for(q, true, false))
          if (!some_body(*r, Tag::MinusDelta)) return false;
        return true;
      }
      case Tag::PlusPartial: {
        if (has(Tag::PlusDelta, q)) return true;
        const auto sd = rules_for(q, false, true);
        bool support = std::any_of(sd.begin(), sd.end(), [&](auto* r) { return all_body(*r, Tag::PlusPartial); });
        if (!support || !has(Tag::MinusDelta, nq)) return false;
        for (auto* s : rules_for(nq, false, false)) {
          if (some_body(*s, Tag::MinusPartial)) continue;
          bool countered = std::any_of(sd.begin(), sd.end(),
                                       [&](auto* t) { return all_body(*t, Tag::PlusPartial) && beats(t, s); });
          if (!countered) return false;
        }
        return true;
      }
      case Tag::MinusPartial: {
        if (!has(Tag::MinusDelta, q)) return false;
        const auto sd = rules_for(q, false, true);
        if (std::all_of(sd.begin(), sd.end(), [&](auto* r) { return some_body(*r, Tag::MinusPartial); })) return true;
        if (has(Tag::PlusDelta, nq)) return true;
        for (auto* s : rules_for(nq, false, false)) {
          if (!all_body(*s, Tag::PlusPartial)) continue;
          if (std::all_of(sd.begin(), sd.end(),
                          [&](auto* t) { return some_body(*t, Tag::MinusPartial) || !beats(t, s); }))
            return true;
        }
        return false;
      }
      default:
        return false;
    }
  }

 private:
  const Theory& t_;
  std::set<std::pair<std::string, std::string>> sup_;
};

bool sup_avoids_strict(const Theory& t) {
  for (const auto& p : t.superiority())
    if (t.find_rule(p.superior)->kind == RuleKind::Strict || t.find_rule(p.inferior)->kind == RuleKind::Strict)
      return false;
  return true;
}

const char* kDbirdGolden =
    "+D bird_ethel\n+d bird_ethel\n+D bird_tweety\n+d bird_tweety\n"
    "-D brokenWing_ethel\n-d brokenWing_ethel\n-D brokenWing_tweety\n-d brokenWing_tweety\n"
    "+D emu_ethel\n+d emu_ethel\n-D emu_tweety\n-d emu_tweety\n"
    "-D flies_ethel\n-d flies_ethel\n-D flies_tweety\n+d flies_tweety\n"
    "-D heavy_ethel\n+d heavy_ethel\n-D heavy_tweety\n-d heavy_tweety\n"
    "-D ~bird_ethel\n-d ~bird_ethel\n-D ~bird_tweety\n-d ~bird_tweety\n"
    "-D ~brokenWing_ethel\n-d ~brokenWing_ethel\n-D ~brokenWing_tweety\n-d ~brokenWing_tweety\n"
    "-D ~emu_ethel\n-d ~emu_ethel\n-D ~emu_tweety\n-d ~emu_tweety\n"
    "-D ~flies_ethel\n-d ~flies_ethel\n-D ~flies_tweety\n-d ~flies_tweety\n"
    "-D ~heavy_ethel\n-d ~heavy_ethel\n-D ~heavy_tweety\n-d ~heavy_tweety\n";

}  // namespace

TEST(Oracle, DbirdGolden) {
  const auto r = run_oracle(test::load("dbird.dl"), true);
  EXPECT_EQ(test::lines(r.conclusions), kDbirdGolden);
  ASSERT_TRUE(r.trace);
  EXPECT_EQ(r.trace->size(), r.conclusions.size());
}

TEST(Oracle, TraceEntriesAreJustifiedByTheirPrefix) {
  std::vector<Theory> theories{test::load("dbird.dl"), test::load("platypus.dl"), test::load("brokenwing.dl")};
  for (std::uint64_t seed = 0; seed < 200; ++seed) theories.push_back(random_theory(seed));
  for (std::size_t i = 0; i < theories.size(); ++i) {
    const auto r = run_oracle(theories[i], true);
    Checker check(theories[i]);
    std::set<TaggedConclusion> prefix;
    for (const auto& c : *r.trace) {
      ASSERT_TRUE(check.justified(prefix, c)) << "theory " << i << ": " << to_string(c);
      prefix.insert(c);
    }
    // And the fixpoint is closed: nothing else over the universe is justified.
    for (const auto& q : literal_universe(theories[i]))
      for (Tag t : kExternalTags)
        if (!prefix.count({t, q})) {
          ASSERT_FALSE(check.justified(prefix, {t, q})) << i << " " << q.str();
        }
  }
}

TEST(Oracle, FormatTrace) {
  const auto r = run_oracle(test::parse("a."), true);
  EXPECT_EQ(format_trace(*r.trace).substr(0, 8), "1. +D a\n");
}

TEST(Oracle, PlatypusAndBrokenWing) {
  const auto p = run_oracle(test::load("platypus.dl")).conclusions;
  EXPECT_TRUE(p.contains(Tag::PlusPartial, lit("mammal")));
  const auto b = run_oracle(test::load("brokenwing.dl")).conclusions;
  EXPECT_TRUE(b.contains(Tag::PlusPartial, lit("~flies")));
  EXPECT_TRUE(b.contains(Tag::MinusPartial, lit("flies")));
  // Without the priority, nothing is decided.
  const auto u = run_oracle(test::parse("bird. brokenWing. r: bird => flies. rp: brokenWing => ~flies.")).conclusions;
  EXPECT_TRUE(u.contains(Tag::MinusPartial, lit("flies")));
  EXPECT_TRUE(u.contains(Tag::MinusPartial, lit("~flies")));
}

TEST(Oracle, Monotonicity) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Theory t = random_theory(seed);
    const ConclusionSet full = run_oracle(t).conclusions;
    ConclusionSet subset;
    for (const auto& c : full)
      if (rng() % 2) subset.insert(c.tag, c.literal);
    ASSERT_EQ(oracle_fixpoint(t, subset), full) << "seed " << seed;
  }
}

TEST(Oracle, Coherence) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ConclusionSet c = run_oracle(random_theory(seed)).conclusions;
    ASSERT_TRUE(c.incoherences().empty()) << "seed " << seed;
  }
}

TEST(Oracle, EngineFormPreservesConclusions) {
  std::size_t standard_checked = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Theory d = random_theory(seed);
    const Theory e = to_engine_form(d);
    const auto sigma = d.language();
    const auto expected = run_oracle(d).conclusions.restricted_to(sigma);
    ASSERT_EQ(run_oracle(e, false, OracleMode::Separated).conclusions.restricted_to(sigma), expected)
        << "seed " << seed;
    if (sup_avoids_strict(d)) {
      ++standard_checked;
      ASSERT_EQ(run_oracle(e).conclusions.restricted_to(sigma), expected) << "seed " << seed;
    }
  }
  EXPECT_GT(standard_checked, 100u);
}

TEST(Transitions, DbirdWalkthrough) {
  TransitionSystem ts(to_engine_form(test::load("dbird.dl")));
  ts.run();
  const auto& k = ts.applied_by_kind();
  EXPECT_GE(k[1], 2u);  // both facts
  EXPECT_GE(k[7], 1u);  // emu_ethel deleted from r1e
  EXPECT_GE(k[9], 1u);  // r1t deleted
  EXPECT_EQ(ts.current_theory().find_rule("r1t"), nullptr);
  ASSERT_NE(ts.current_theory().find_rule("r1e"), nullptr);
  EXPECT_TRUE(ts.current_theory().find_rule("r1e")->body.empty());
  EXPECT_EQ(test::lines(ts.conclusions().restricted_to(test::load("dbird.dl").language())), kDbirdGolden);
}

TEST(Transitions, IncompleteWithoutDuplication) {
  const Theory t = test::parse("s: a -> b. r: => a.");
  TransitionSystem raw(t);
  raw.run();
  EXPECT_FALSE(raw.extended_conclusions().contains(Tag::PlusSigma, lit("b")));
  EXPECT_FALSE(raw.conclusions().contains(Tag::PlusPartial, lit("b")));

  TransitionSystem dup(duplicate_strict(t));
  dup.run();
  EXPECT_TRUE(dup.conclusions().contains(Tag::PlusPartial, lit("a")));
  EXPECT_TRUE(dup.conclusions().contains(Tag::PlusPartial, lit("b")));
}

TEST(Transitions, RejectsSuperiority) {
  EXPECT_THROW(TransitionSystem(test::load("dbird.dl")), TheoryError);
}

TEST(Transitions, SoundAndCompleteAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Theory e = to_engine_form(random_theory(seed));
    ASSERT_EQ(run_transitions(e), run_oracle(e, false, OracleMode::Separated).conclusions) << "seed " << seed;
  }
}

TEST(Transitions, ConfluentUnderRandomOrder) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Theory e = to_engine_form(random_theory(seed));
    TransitionSystem fair(e);
    fair.run();
    for (std::uint64_t order : {1u, 2u, 3u}) {
      TransitionSystem shuffled(e, order * 7919 + seed);
      shuffled.run();
      ASSERT_EQ(shuffled.extended_conclusions(), fair.extended_conclusions()) << seed << "/" << order;
      ASSERT_EQ(print_theory(shuffled.current_theory()), print_theory(fair.current_theory()));
    }
  }
}

TEST(Transitions, PrefixTheoriesAreEquivalent) {
  std::mt19937_64 rng(5);
  std::size_t standard_checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Theory d = random_theory(seed);
    const Theory e = to_engine_form(d);
    // Standard reading only applies when no priority was moved onto a twin.
    const bool standard = sup_avoids_strict(d);
    standard_checked += standard;
    const ConclusionSet separated = run_oracle(e, false, OracleMode::Separated).conclusions;
    const ConclusionSet full = standard ? run_oracle(e).conclusions : ConclusionSet{};
    TransitionSystem ts(e);
    while (!ts.done()) {
      ts.run(1 + rng() % 5);
      const Theory di = ts.current_theory();
      const auto lang = di.language();
      ASSERT_EQ(run_oracle(di, false, OracleMode::Separated).conclusions.restricted_to(lang),
                separated.restricted_to(lang))
          << "seed " << seed << " after " << ts.transitions_applied();
      if (standard) {
        ASSERT_EQ(run_oracle(di).conclusions.restricted_to(lang), full.restricted_to(lang))
            << "seed " << seed << " after " << ts.transitions_applied();
      }
    }
  }
  EXPECT_GT(standard_checked, 20u);
}

TEST(Transitions, LinearEngineMatchesExtendedSets) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Theory e = to_engine_form(random_theory(seed));
    TransitionSystem ts(e);
    ts.run();
    LinearEngine le(e);
    le.run();
    ASSERT_EQ(le.conclusions(true), ts.extended_conclusions()) << "seed " << seed;
  }
}

TEST(CompareEngines, Examples) {
  const auto c = compare_engines(test::load("dbird.dl"));
  EXPECT_TRUE(c.agree);
  EXPECT_EQ(describe(c), "3 engines agree (restricted to \xCE\xA3)");

  const auto i = compare_engines(test::load("interference.dl"));
  EXPECT_TRUE(i.agree);
  EXPECT_EQ(test::lines(i.linear_set), "-D a\n-d a\n-D ~a\n-d ~a\n");
}

TEST(CompareEngines, ReportsDivergence) {
  EngineComparison c;
  c.agree = false;
  c.divergence = TaggedConclusion{Tag::MinusPartial, lit("p0")};
  c.oracle = true;
  EXPECT_EQ(describe(c), "engines disagree on -d p0: oracle=yes transition=no linear=no");
}
