#pragma once

#include <span>
#include <vector>

#include "avgord/group.hpp"

namespace avgord {

/// Sorted, duplicate-free set of element indices of an ambient group.
struct ElementSet {
  const EnumeratedGroup* group = nullptr;
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int a) const;
  bool operator==(const ElementSet& o) const { return members == o.members; }
};

/// Validates indices, sorts and deduplicates.
ElementSet make_element_set(const EnumeratedGroup& g, std::vector<int> members);

/// Closure of seed ∪ {e} under multiplication (and therefore inversion).
ElementSet generated_subgroup(const EnumeratedGroup& g, std::span<const int> seed);

/// Smallest normal subgroup containing seed; alternates generation with
/// conjugation by the group generators until stable.
ElementSet normal_closure(const EnumeratedGroup& g, std::span<const int> seed);

/// Orbits of the conjugation action; class 0 is {identity}.
struct ClassPartition {
  std::vector<ElementSet> classes;
  std::vector<int> class_of;  // element index -> class id
};
ClassPartition conjugacy_classes(const EnumeratedGroup& g);

/// G = G0 ⊇ G1 ⊇ ..., each term the normal closure of the commutators of
/// the previous term's generators. Ends with the trivial subgroup, or
/// repeats the first stable term once for perfect groups.
std::vector<ElementSet> derived_series(const EnumeratedGroup& g);

bool is_solvable(const EnumeratedGroup& g);

/// Derived-series solvability of the subgroup generated by `gens`.
bool is_solvable_subgroup(const EnumeratedGroup& g, std::span<const int> gens);

/// True iff H is a subgroup (contains e, closed under multiplication).
bool is_subgroup(const EnumeratedGroup& g, const ElementSet& h);

/// True iff H is invariant under conjugation by every group generator.
/// Throws DomainError("not a subgroup") when H is not closed.
bool is_normal(const EnumeratedGroup& g, const ElementSet& h);

/// Non-abelian with no proper non-trivial normal subgroup; errors on the
/// trivial group. Abelian groups are not "simple" under this convention.
bool is_simple(const EnumeratedGroup& g);

/// The largest normal solvable subgroup, generated by the solvable normal
/// closures of single conjugacy classes.
ElementSet solvable_radical(const EnumeratedGroup& g);

/// G/N with canonical coset representatives (minimum element index per
/// coset). `coset_of` maps each ambient element to its quotient index.
struct Quotient {
  GroupPtr group;
  std::vector<int> reps;      // quotient index -> ambient representative
  std::vector<int> coset_of;  // ambient index -> quotient index
};
Quotient quotient_with_map(const EnumeratedGroup& g, const ElementSet& n);
GroupPtr quotient(const EnumeratedGroup& g, const ElementSet& n);

/// All g commuting with a.
ElementSet centralizer(const EnumeratedGroup& g, int a);

/// Greedy small generating set of the subgroup generated by `members`.
std::vector<int> small_generating_set(const EnumeratedGroup& g, std::span<const int> members);

/// Normal closures of single conjugacy classes plus pairwise joins,
/// deduplicated, trivial subgroup excluded, ordered by (size, members).
/// This is the inventory used by the quotient-monotonicity checks; it is
/// not the full normal-subgroup lattice.
std::vector<ElementSet> normal_subgroup_inventory(const EnumeratedGroup& g);

}  // namespace avgord
