#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dl/theory.hpp"

namespace dl {

enum class GenKind : std::uint8_t { Chain, Circle, Tree, Teams, Dag, Random };

std::string_view to_string(GenKind k);
std::optional<GenKind> parse_gen_kind(std::string_view s);

struct GenSpec {
  GenKind kind = GenKind::Chain;
  std::size_t size = 1;
  std::uint64_t seed = 0;
  std::size_t branching = 2;  // tree and dag only
};

// Deterministic for a fixed spec:
//   chain(n)   => a0,  a_i => a_{i+1}  for 0 <= i < n
//   circle(n)  a_i => a_{(i+1) mod n}
//   tree(n,k)  n leaf facts, complete k-ary strict tree up to the root
//   teams(d)   two-against-two teams with r1 > r3, r2 > r4 at every level, depth d
//   dag(n)     n atoms, rules only from lower to higher atoms, mixed kinds
//   random(n)  n rules over about n/3 atoms, mixed kinds, defeaters, superiority
// Throws std::invalid_argument on size 0 or sizes that would overflow.
Theory generate(const GenSpec& spec);

struct RandomLimits {
  std::size_t max_atoms = 12;
  std::size_t max_rules = 40;
  std::size_t max_superiority = 8;
  std::size_t max_body = 3;
  std::size_t max_facts = 3;
};

// One theory of the differential corpus.  Superiority is acyclic by
// construction (pairs oriented by a random rank) and mostly relates rules
// with complementary heads.
Theory random_theory(std::uint64_t seed, const RandomLimits& limits = {});

}  // namespace dl
