#pragma once

#include <string>
#include <string_view>

#include "dl/theory.hpp"

namespace dl {

// Names minted by the transformations.  User atoms and labels cannot contain
// "__", so these never collide with source names.
inline Atom inf_plus_atom(std::string_view label) { return Atom("infp__" + std::string(label)); }
inline Atom inf_minus_atom(std::string_view label) { return Atom("infm__" + std::string(label)); }
inline std::string twin_label(std::string_view label) { return std::string(label) + "__dup"; }
inline std::string generated_label(std::string_view base, int k) {
  return std::string(base) + "__s" + std::to_string(k);
}
inline std::string pair_base(const SuperiorityPair& p) { return p.superior + "__over__" + p.inferior; }

// Drops superiority pairs that cannot matter: rules without complementary
// heads, and pairs whose superior rule is a defeater.
Theory prune_superiority(const Theory& theory);

// Appends `L__dup: B => q` for every strict rule `L: B -> q` and moves every
// superiority pair that names L onto L__dup.
Theory duplicate_strict(const Theory& theory);

// Replaces the superiority relation by the inf+/inf- encoding.  Throws
// TheoryError(InvalidSuperiorityOnStrict) if a strict rule is still named in
// the relation.
Theory elim_sup(const Theory& theory);

// prune -> duplicate -> elim_sup.  The result has an empty superiority
// relation and duplicated strict rules; defeaters are kept.
Theory to_engine_form(const Theory& theory);

enum class Stage { Prune, Dup, NoSup, Engine };

Theory transform(const Theory& theory, Stage stage);

// True when the superiority relation is empty.
inline bool is_engine_form(const Theory& theory) { return theory.superiority().empty(); }

}  // namespace dl
