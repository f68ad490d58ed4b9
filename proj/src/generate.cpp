#include "dl/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dl {

std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::Chain: return "chain";
    case GenKind::Circle: return "circle";
    case GenKind::Tree: return "tree";
    case GenKind::Teams: return "teams";
    case GenKind::Dag: return "dag";
    case GenKind::Random: return "random";
  }
  return "?";
}

std::optional<GenKind> parse_gen_kind(std::string_view s) {
  for (auto k : {GenKind::Chain, GenKind::Circle, GenKind::Tree, GenKind::Teams, GenKind::Dag, GenKind::Random})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

namespace {

constexpr std::size_t kMaxSize = std::size_t{1} << 26;
constexpr std::size_t kMaxTeamsDepth = 10;

// std::uniform_int_distribution is implementation-defined; a plain modulo
// keeps generated theories identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  bool chance(unsigned percent) { return below(100) < percent; }
  template <class It>
  void shuffle(It first, It last) {
    for (auto n = last - first; n > 1; --n) std::iter_swap(first + (n - 1), first + static_cast<std::ptrdiff_t>(below(static_cast<std::size_t>(n))));
  }

 private:
  std::mt19937_64 engine_;
};

Literal atom_lit(const std::string& name, bool positive = true) { return Literal(Atom(name), positive); }

std::string indexed(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

Theory chain(std::size_t n) {
  std::vector<Rule> rules;
  rules.reserve(n + 1);
  rules.emplace_back("c0", std::vector<Literal>{}, RuleKind::Defeasible, atom_lit("a0"));
  for (std::size_t i = 0; i < n; ++i)
    rules.emplace_back(indexed("c", i + 1), std::vector<Literal>{atom_lit(indexed("a", i))}, RuleKind::Defeasible,
                       atom_lit(indexed("a", i + 1)));
  return Theory({}, std::move(rules));
}

Theory circle(std::size_t n) {
  std::vector<Rule> rules;
  rules.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    rules.emplace_back(indexed("c", i), std::vector<Literal>{atom_lit(indexed("a", i))}, RuleKind::Defeasible,
                       atom_lit(indexed("a", (i + 1) % n)));
  return Theory({}, std::move(rules));
}

Theory tree(std::size_t leaves, std::size_t k) {
  if (k < 2) throw std::invalid_argument("tree branching must be at least 2");
  auto node = [](std::size_t level, std::size_t i) { return "t" + std::to_string(level) + "_" + std::to_string(i); };
  std::vector<Literal> facts;
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < leaves; ++i) facts.push_back(atom_lit(node(0, i)));
  std::size_t width = leaves;
  for (std::size_t level = 1; width > 1; ++level) {
    std::size_t parents = (width + k - 1) / k;
    for (std::size_t p = 0; p < parents; ++p) {
      std::vector<Literal> body;
      for (std::size_t c = p * k; c < std::min(width, (p + 1) * k); ++c) body.push_back(atom_lit(node(level - 1, c)));
      rules.emplace_back("s" + std::to_string(level) + "_" + std::to_string(p), std::move(body), RuleKind::Strict,
                         atom_lit(node(level, p)));
    }
    width = parents;
  }
  return Theory(std::move(facts), std::move(rules));
}

void teams_goal(const std::string& goal, std::size_t depth, std::vector<Rule>& rules,
                std::vector<SuperiorityPair>& sup) {
  if (depth == 0) {
    rules.emplace_back(goal + "_b", std::vector<Literal>{}, RuleKind::Defeasible, atom_lit(goal));
    return;
  }
  std::string label[4];
  for (int i = 0; i < 4; ++i) {
    const std::string sub = goal + "_" + std::to_string(i + 1);
    label[i] = goal + "_r" + std::to_string(i + 1);
    rules.emplace_back(label[i], std::vector<Literal>{atom_lit(sub)}, RuleKind::Defeasible, atom_lit(goal, i < 2));
  }
  sup.push_back({label[0], label[2]});
  sup.push_back({label[1], label[3]});
  for (int i = 0; i < 4; ++i) teams_goal(goal + "_" + std::to_string(i + 1), depth - 1, rules, sup);
}

Theory teams(std::size_t depth) {
  if (depth > kMaxTeamsDepth) throw std::invalid_argument("teams depth too large");
  std::vector<Rule> rules;
  std::vector<SuperiorityPair> sup;
  teams_goal("g", depth, rules, sup);
  return Theory({}, std::move(rules), std::move(sup));
}

RuleKind random_kind(Rng& rng) {
  auto roll = rng.below(100);
  return roll < 25 ? RuleKind::Strict : roll < 80 ? RuleKind::Defeasible : RuleKind::Defeater;
}

// Superiority pairs oriented by a random rank over the rules, so the relation
// is acyclic.  Most pairs relate complementary heads.
std::vector<SuperiorityPair> random_superiority(Rng& rng, const std::vector<Rule>& rules, std::size_t count) {
  std::vector<std::size_t> rank(rules.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  rng.shuffle(rank.begin(), rank.end());

  std::vector<std::pair<std::size_t, std::size_t>> conflicting;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = i + 1; j < rules.size(); ++j)
      if (rules[i].head == complement(rules[j].head)) conflicting.emplace_back(i, j);

  std::vector<SuperiorityPair> sup;
  for (std::size_t n = 0; n < count && rules.size() >= 2; ++n) {
    std::size_t i, j;
    if (!conflicting.empty() && !rng.chance(15)) {
      std::tie(i, j) = conflicting[rng.below(conflicting.size())];
    } else {
      i = rng.below(rules.size());
      j = rng.below(rules.size());
      if (i == j) continue;
    }
    if (rank[i] > rank[j]) std::swap(i, j);
    sup.push_back({rules[i].label, rules[j].label});
  }
  return sup;
}

Theory random_exact(Rng& rng, std::size_t atoms, std::size_t rule_count, std::size_t sup_count, std::size_t max_body,
                    std::size_t fact_count) {
  auto random_lit = [&] { return atom_lit(indexed("p", rng.below(atoms)), rng.chance(60)); };
  std::vector<Literal> facts;
  for (std::size_t i = 0; i < fact_count; ++i) facts.push_back(random_lit());
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < rule_count; ++i) {
    const RuleKind kind = random_kind(rng);
    std::size_t body_size = rng.chance(20) ? 0 : 1 + rng.below(max_body);
    std::vector<Literal> body;
    for (std::size_t b = 0; b < body_size; ++b) body.push_back(random_lit());
    rules.emplace_back(indexed("r", i), std::move(body), kind, random_lit());
  }
  auto sup = random_superiority(rng, rules, sup_count);
  return Theory(std::move(facts), std::move(rules), std::move(sup));
}

Theory dag(std::size_t n, std::size_t max_body, std::uint64_t seed) {
  Rng rng(seed);
  auto d = [](std::size_t i) { return indexed("d", i); };
  std::vector<Literal> facts{atom_lit(d(0))};
  std::vector<Rule> rules;
  std::vector<SuperiorityPair> sup;
  for (std::size_t i = 1; i < n; ++i) {
    if (rng.chance(10)) facts.push_back(atom_lit(d(i), rng.chance(70)));
    const std::size_t first = rules.size();
    const std::size_t count = 1 + rng.below(3);
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Literal> body;
      const std::size_t body_size = 1 + rng.below(std::min(max_body, i));
      for (std::size_t b = 0; b < body_size; ++b) body.push_back(atom_lit(d(rng.below(i)), rng.chance(75)));
      rules.emplace_back(d(i) + "_" + std::to_string(k), std::move(body), random_kind(rng),
                         atom_lit(d(i), rng.chance(65)));
    }
    for (std::size_t a = first; a < rules.size(); ++a)
      for (std::size_t b = a + 1; b < rules.size(); ++b)
        if (rules[a].head == complement(rules[b].head) && rng.chance(50)) sup.push_back({rules[a].label, rules[b].label});
  }
  return Theory(std::move(facts), std::move(rules), std::move(sup));
}

}  // namespace

Theory generate(const GenSpec& spec) {
  if (spec.size == 0) throw std::invalid_argument("size must be at least 1");
  if (spec.size > kMaxSize) throw std::invalid_argument("size too large");
  switch (spec.kind) {
    case GenKind::Chain: return chain(spec.size);
    case GenKind::Circle: return circle(spec.size);
    case GenKind::Tree: return tree(spec.size, spec.branching);
    case GenKind::Teams: return teams(spec.size);
    case GenKind::Dag: return dag(spec.size, std::max<std::size_t>(1, spec.branching), spec.seed);
    case GenKind::Random: {
      Rng rng(spec.seed);
      return random_exact(rng, std::max<std::size_t>(1, spec.size / 3), spec.size, spec.size / 5, 3,
                          std::max<std::size_t>(1, spec.size / 10));
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

Theory random_theory(std::uint64_t seed, const RandomLimits& limits) {
  Rng rng(seed);
  const std::size_t atoms = 1 + rng.below(limits.max_atoms);
  const std::size_t rules = rng.below(limits.max_rules + 1);
  const std::size_t sup = rng.below(limits.max_superiority + 1);
  const std::size_t facts = rng.below(limits.max_facts + 1);
  return random_exact(rng, atoms, rules, sup, limits.max_body, facts);
}

}  // namespace dl
