#include <gtest/gtest.h>

#include "common.hpp"
#include "dl/generate.hpp"
#include "dl/linear_engine.hpp"
#include "dl/transform.hpp"

using namespace dl;

namespace {

bool contains(const std::vector<TaggedConclusion>& v, Tag t, const char* q) {
  return std::find(v.begin(), v.end(), TaggedConclusion{t, lit(q)}) != v.end();
}

void expect_counters_bounded(const EngineStats& s) {
  EXPECT_LE(s.occurrence_deletions, s.initial_occurrences);
  EXPECT_LE(s.rule_deletions, s.rules);
  EXPECT_LE(s.enqueues, 8 * s.literals);
  EXPECT_EQ(s.enqueues, s.dequeues);
}

}  // namespace

TEST(BuildState, OccurrenceStructure) {
  const Theory t = test::parse("r1: b, c, d => a. r2: ~b, d, ~e => a. r3: d, ~e => ~a.");
  LinearEngine e(t);
  EXPECT_EQ(e.occurrence_count(lit("d"), false), 3u);
  EXPECT_EQ(e.occurrence_count(lit("d"), true), 0u);
  EXPECT_EQ(e.occurrence_count(lit("~e"), false), 2u);
  EXPECT_EQ(e.rule_count(lit("a"), RuleKind::Defeasible), 2u);
  EXPECT_EQ(e.rule_count(lit("~a"), RuleKind::Defeasible), 1u);
  EXPECT_EQ(e.stats().initial_occurrences, 8u);
  EXPECT_EQ(e.stats().literals, 10u);
}

TEST(BuildState, EmptyTheory) {
  LinearEngine e(Theory{});
  e.run();
  EXPECT_TRUE(e.conclusions().empty());
  EXPECT_EQ(e.stats().literals, 0u);
}

TEST(BuildState, RejectsSuperiority) {
  try {
    LinearEngine e(test::parse("r: => a. s: => ~a. r > s."));
    FAIL();
  } catch (const TheoryError& err) {
    EXPECT_EQ(err.kind(), TheoryErrorKind::NotEngineForm);
  }
}

TEST(Initialize, DbirdSeeds) {
  LinearEngine e(to_engine_form(test::load("dbird.dl")));
  e.initialize();
  const auto s = e.pending();
  EXPECT_TRUE(contains(s, Tag::PlusDelta, "emu_ethel"));
  EXPECT_TRUE(contains(s, Tag::PlusDelta, "bird_tweety"));
  EXPECT_TRUE(e.has(Tag::MinusDelta, lit("heavy_tweety")));
  EXPECT_TRUE(e.has(Tag::MinusDelta, lit("~flies_tweety")));
  EXPECT_TRUE(e.has(Tag::MinusSigma, lit("brokenWing_ethel")));
  EXPECT_TRUE(e.has(Tag::MinusTau, lit("brokenWing_ethel")));
  // Nothing about bird_ethel is known before its strict rule fires.
  for (Tag t : kAllTags) EXPECT_FALSE(e.has(t, lit("bird_ethel")));
}

TEST(Run, Dbird) {
  const Theory src = test::load("dbird.dl");
  const ConclusionSet c = infer_linear(src);
  EXPECT_TRUE(c.contains(Tag::PlusDelta, lit("bird_ethel")));
  EXPECT_TRUE(c.contains(Tag::PlusPartial, lit("bird_ethel")));
  EXPECT_TRUE(c.contains(Tag::PlusPartial, lit("heavy_ethel")));
  EXPECT_TRUE(c.contains(Tag::MinusPartial, lit("flies_ethel")));
  EXPECT_TRUE(c.contains(Tag::MinusPartial, lit("~flies_ethel")));
  EXPECT_TRUE(c.contains(Tag::PlusPartial, lit("flies_tweety")));
  EXPECT_TRUE(c.contains(Tag::MinusPartial, lit("~flies_tweety")));
  EXPECT_TRUE(c.contains(Tag::MinusPartial, lit("brokenWing_ethel")));
  EXPECT_TRUE(c.contains(Tag::MinusPartial, lit("brokenWing_tweety")));
  EXPECT_TRUE(c.contains(Tag::MinusPartial, lit("heavy_tweety")));
  EXPECT_TRUE(c.contains(Tag::MinusDelta, lit("heavy_tweety")));
  EXPECT_TRUE(c.incoherences().empty());
}

TEST(Run, Interference) {
  const ConclusionSet c = infer_linear(test::load("interference.dl"));
  EXPECT_EQ(test::lines(c), "-D a\n-d a\n-D ~a\n-d ~a\n");
}

TEST(Run, LoopLeavesLiteralUndetermined) {
  const ConclusionSet c = infer_linear(test::load("loop.dl"));
  for (Tag t : kAllTags) EXPECT_FALSE(c.contains(t, lit("p"))) << tag_symbol(t);
}

TEST(Run, PlatypusTeamDefeat) {
  const ConclusionSet c = infer_linear(test::load("platypus.dl"));
  EXPECT_TRUE(c.contains(Tag::PlusPartial, lit("mammal")));
  EXPECT_TRUE(c.contains(Tag::MinusPartial, lit("~mammal")));
}

TEST(Run, BrokenWingOverrides) {
  const ConclusionSet c = infer_linear(test::load("brokenwing.dl"));
  EXPECT_TRUE(c.contains(Tag::PlusPartial, lit("~flies")));
  EXPECT_TRUE(c.contains(Tag::MinusPartial, lit("flies")));
}

TEST(CheckInference, Triggers) {
  LinearEngine e(to_engine_form(test::load("dbird.dl")));
  e.run();
  // heavy_ethel: support from r5, nothing against.
  EXPECT_TRUE(e.has(Tag::PlusSigma, lit("heavy_ethel")));
  EXPECT_TRUE(e.has(Tag::MinusDelta, lit("~heavy_ethel")));
  EXPECT_TRUE(e.has(Tag::MinusTau, lit("~heavy_ethel")));
  EXPECT_TRUE(e.has(Tag::PlusPartial, lit("heavy_ethel")));
  // flies_ethel: the defeater for ~flies_ethel is applicable.
  EXPECT_TRUE(e.has(Tag::PlusTau, lit("~flies_ethel")));
  EXPECT_TRUE(e.has(Tag::MinusPartial, lit("flies_ethel")));
  // ~flies_tweety: heavy_tweety fails, so nothing supports or attacks.
  EXPECT_TRUE(e.has(Tag::MinusTau, lit("~flies_tweety")));
  EXPECT_TRUE(e.has(Tag::MinusSigma, lit("~flies_tweety")));
  EXPECT_TRUE(e.has(Tag::MinusPartial, lit("~flies_tweety")));
}

TEST(Residue, LoopUnchanged) {
  const Theory loop = test::parse("r: p -> p.");
  LinearEngine e(loop);
  e.run();
  EXPECT_EQ(e.residue(), loop);
}

TEST(Residue, ConsumedRulesDisappear) {
  LinearEngine e(test::parse("a. r: a -> b."));
  e.run();
  EXPECT_TRUE(e.residue().rules().empty());
  EXPECT_EQ(e.residue().facts(), std::vector<Literal>{lit("a")});
  EXPECT_TRUE(e.has(Tag::PlusDelta, lit("b")));
}

TEST(Residue, DbirdForgetsBrokenWing) {
  LinearEngine e(to_engine_form(test::load("dbird.dl")));
  e.run();
  for (const auto& r : e.residue().rules()) {
    EXPECT_EQ(r.head.atom.name().find("brokenWing"), std::string::npos) << r.label;
    for (const auto& b : r.body) EXPECT_EQ(b.atom.name().find("brokenWing"), std::string::npos) << r.label;
  }
}

TEST(Residue, KeepsOnlyLiveBodyLiterals) {
  LinearEngine e(test::parse("a. r: a, p -> q. s: p -> p."));
  e.run();
  const Theory res = e.residue();
  ASSERT_EQ(res.rules().size(), 2u);
  EXPECT_EQ(res.rules()[0].body, std::vector<Literal>{lit("p")});
}

TEST(Counters, BoundedOnCorpus) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    LinearEngine e(to_engine_form(random_theory(seed)));
    e.run();
    SCOPED_TRACE(seed);
    expect_counters_bounded(e.stats());
  }
}

TEST(Schedule, FifoAndLifoAgree) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Theory t = to_engine_form(random_theory(seed));
    LinearEngine fifo(t, Schedule::Fifo), lifo(t, Schedule::Lifo);
    fifo.run();
    lifo.run();
    ASSERT_EQ(fifo.conclusions(true), lifo.conclusions(true)) << "seed " << seed;
  }
}

TEST(Coherence, RecordLevel) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    LinearEngine e(to_engine_form(random_theory(seed)));
    e.run();
    const ConclusionSet c = e.conclusions(true);
    for (const auto& tc : c) ASSERT_FALSE(c.contains(opposite(tc.tag), tc.literal)) << "seed " << seed;
  }
}
