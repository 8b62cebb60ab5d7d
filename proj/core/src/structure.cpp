#include "avgord/structure.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace avgord {

namespace {

// Closure under right multiplication by `gens`, tracked in a membership
// bitmap over ambient indices. Returns sorted members.
std::vector<int> close_under(const EnumeratedGroup& g, std::span<const int> gens) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  std::vector<int> frontier;
  std::vector<int> members;
  in[0] = true;
  members.push_back(0);
  frontier.push_back(0);
  while (!frontier.empty()) {
    int h = frontier.back();
    frontier.pop_back();
    for (int s : gens) {
      int w = g.mul(h, s);
      if (!in[static_cast<std::size_t>(w)]) {
        in[static_cast<std::size_t>(w)] = true;
        members.push_back(w);
        frontier.push_back(w);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

int conj(const EnumeratedGroup& g, int x, int a) {  // x^-1 a x
  return g.mul(g.mul(g.inv(x), a), x);
}

// Extends `gens` until the generated subgroup is conjugation-invariant
// under the whole group; returns the closed member list.
std::vector<int> normal_closure_gens(const EnumeratedGroup& g, std::vector<int>& gens) {
  std::vector<int> members = close_under(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> fresh;
    for (int outer : g.generator_indices())
      for (int s : gens) {
        int c = conj(g, outer, s);
        if (!std::binary_search(members.begin(), members.end(), c)) fresh.push_back(c);
      }
    if (!fresh.empty()) {
      for (int c : fresh) gens.push_back(c);
      members = close_under(g, gens);
      grew = true;
    }
  }
  return members;
}

struct Term {
  std::vector<int> members;
  std::vector<int> gens;
};

// Commutator subgroup of the subgroup described by `term`: the closure of
// generator-pair commutators under conjugation by the term's generators.
Term derived_term(const EnumeratedGroup& g, const Term& term) {
  std::vector<int> comm_gens;
  for (int a : term.gens)
    for (int b : term.gens) {
      int c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (c != 0) comm_gens.push_back(c);
    }
  std::sort(comm_gens.begin(), comm_gens.end());
  comm_gens.erase(std::unique(comm_gens.begin(), comm_gens.end()), comm_gens.end());

  Term next;
  next.gens = comm_gens;
  next.members = close_under(g, next.gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> fresh;
    for (int outer : term.gens)
      for (int s : next.gens) {
        int c = conj(g, outer, s);
        if (!std::binary_search(next.members.begin(), next.members.end(), c)) fresh.push_back(c);
      }
    if (!fresh.empty()) {
      for (int c : fresh) next.gens.push_back(c);
      next.members = close_under(g, next.gens);
      grew = true;
    }
  }
  return next;
}

std::vector<Term> derived_terms(const EnumeratedGroup& g, Term start) {
  std::vector<Term> series;
  series.push_back(std::move(start));
  while (series.back().members.size() > 1) {
    Term next = derived_term(g, series.back());
    bool stable = next.members == series.back().members;
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

}  // namespace

bool ElementSet::contains(int a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

namespace {

void check_ambient(const EnumeratedGroup& g, const ElementSet& s) {
  if (s.group != nullptr && s.group != &g)
    throw DomainError("element set belongs to a different group");
  for (int a : s.members)
    if (a < 0 || a >= g.order()) throw DomainError("element index out of range");
}

}  // namespace

ElementSet make_element_set(const EnumeratedGroup& g, std::vector<int> members) {
  for (int a : members)
    if (a < 0 || a >= g.order()) throw DomainError("element index out of range");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return ElementSet{&g, std::move(members)};
}

ElementSet generated_subgroup(const EnumeratedGroup& g, std::span<const int> seed) {
  for (int a : seed)
    if (a < 0 || a >= g.order()) throw DomainError("element index out of range");
  return ElementSet{&g, close_under(g, seed)};
}

ElementSet normal_closure(const EnumeratedGroup& g, std::span<const int> seed) {
  for (int a : seed)
    if (a < 0 || a >= g.order()) throw DomainError("element index out of range");
  std::vector<int> gens(seed.begin(), seed.end());
  return ElementSet{&g, normal_closure_gens(g, gens)};
}

ClassPartition conjugacy_classes(const EnumeratedGroup& g) {
  const int n = g.order();
  ClassPartition part;
  part.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (part.class_of[static_cast<std::size_t>(start)] != -1) continue;
    int id = static_cast<int>(part.classes.size());
    std::vector<int> orbit{start};
    part.class_of[static_cast<std::size_t>(start)] = id;
    std::vector<int> frontier{start};
    while (!frontier.empty()) {
      int a = frontier.back();
      frontier.pop_back();
      for (int x : g.generator_indices()) {
        int c = conj(g, x, a);
        if (part.class_of[static_cast<std::size_t>(c)] == -1) {
          part.class_of[static_cast<std::size_t>(c)] = id;
          orbit.push_back(c);
          frontier.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.classes.push_back(ElementSet{&g, std::move(orbit)});
  }
  return part;
}

std::vector<ElementSet> derived_series(const EnumeratedGroup& g) {
  Term start;
  start.gens = g.generator_indices();
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  start.members = std::move(all);

  std::vector<ElementSet> out;
  for (Term& t : derived_terms(g, std::move(start)))
    out.push_back(ElementSet{&g, std::move(t.members)});
  return out;
}

bool is_solvable(const EnumeratedGroup& g) {
  auto series = derived_series(g);
  return series.back().members.size() == 1;
}

bool is_solvable_subgroup(const EnumeratedGroup& g, std::span<const int> gens) {
  Term start;
  start.gens.assign(gens.begin(), gens.end());
  start.members = close_under(g, gens);
  auto series = derived_terms(g, std::move(start));
  return series.back().members.size() == 1;
}

bool is_subgroup(const EnumeratedGroup& g, const ElementSet& h) {
  check_ambient(g, h);
  if (h.members.empty() || h.members.front() != 0) return false;
  // regenerating from a greedy generating set reproduces exactly the
  // members iff the set was closed
  std::vector<int> gens = small_generating_set(g, h.members);
  return generated_subgroup(g, gens).members == h.members;
}

bool is_normal(const EnumeratedGroup& g, const ElementSet& h) {
  if (!is_subgroup(g, h)) throw DomainError("not a subgroup");
  for (int x : g.generator_indices())
    for (int a : h.members)
      if (!h.contains(conj(g, x, a))) return false;
  return true;
}

bool is_simple(const EnumeratedGroup& g) {
  if (g.order() <= 1) throw DomainError("simplicity is undefined for the trivial group");
  if (g.is_abelian()) return false;
  ClassPartition classes = conjugacy_classes(g);
  for (std::size_t c = 1; c < classes.classes.size(); ++c) {
    int rep = classes.classes[c].members.front();
    if (normal_closure(g, std::span<const int>(&rep, 1)).size() != g.order()) return false;
  }
  return true;
}

ElementSet solvable_radical(const EnumeratedGroup& g) {
  ClassPartition classes = conjugacy_classes(g);
  std::vector<int> seed{0};
  for (const ElementSet& cls : classes.classes) {
    int rep = cls.members.front();
    if (rep == 0) continue;
    ElementSet closure = normal_closure(g, std::span<const int>(&rep, 1));
    std::vector<int> gens = small_generating_set(g, closure.members);
    if (is_solvable_subgroup(g, gens))
      seed.insert(seed.end(), closure.members.begin(), closure.members.end());
  }
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<int> gens = small_generating_set(g, seed);
  return generated_subgroup(g, gens);
}

namespace {

class CosetRealization final : public Realization {
 public:
  CosetRealization(GroupPtr parent, std::vector<int> reps, std::vector<int> coset_of)
      : parent_(std::move(parent)), reps_(std::move(reps)), coset_of_(std::move(coset_of)) {}

  int size() const override { return static_cast<int>(reps_.size()); }

  int mul(int a, int b) const override {
    return coset_of_[static_cast<std::size_t>(
        parent_->mul(reps_[static_cast<std::size_t>(a)], reps_[static_cast<std::size_t>(b)]))];
  }

  int inverse(int a) const override {
    return coset_of_[static_cast<std::size_t>(parent_->inv(reps_[static_cast<std::size_t>(a)]))];
  }

  std::string repr(int a) const override {
    return parent_->element_repr(reps_[static_cast<std::size_t>(a)]) + "N";
  }

 private:
  GroupPtr parent_;
  std::vector<int> reps_;
  std::vector<int> coset_of_;
};

}  // namespace

Quotient quotient_with_map(const EnumeratedGroup& g, const ElementSet& n) {
  if (!is_normal(g, n)) throw DomainError("subgroup is not normal");
  const int order = g.order();
  Quotient q;
  q.coset_of.assign(static_cast<std::size_t>(order), -1);
  // Ascending scan: the first unassigned element of a coset is its minimum,
  // hence the canonical representative.
  for (int a = 0; a < order; ++a) {
    if (q.coset_of[static_cast<std::size_t>(a)] != -1) continue;
    int id = static_cast<int>(q.reps.size());
    q.reps.push_back(a);
    for (int h : n.members) q.coset_of[static_cast<std::size_t>(g.mul(a, h))] = id;
  }

  std::vector<int> gens;
  for (int x : g.generator_indices()) {
    int image = q.coset_of[static_cast<std::size_t>(x)];
    if (image != 0 && std::find(gens.begin(), gens.end(), image) == gens.end())
      gens.push_back(image);
  }

  auto realization = std::make_unique<CosetRealization>(g.shared_from_this(), q.reps, q.coset_of);
  q.group = EnumeratedGroup::from_realization(std::move(realization), std::move(gens),
                                              g.spec_text() + "/N" + std::to_string(n.size()));
  return q;
}

GroupPtr quotient(const EnumeratedGroup& g, const ElementSet& n) {
  return quotient_with_map(g, n).group;
}

ElementSet centralizer(const EnumeratedGroup& g, int a) {
  if (a < 0 || a >= g.order()) throw DomainError("element index out of range");
  std::vector<int> members;
  for (int x = 0; x < g.order(); ++x)
    if (g.mul(x, a) == g.mul(a, x)) members.push_back(x);
  return ElementSet{&g, std::move(members)};
}

std::vector<int> small_generating_set(const EnumeratedGroup& g, std::span<const int> members) {
  std::vector<int> gens;
  std::vector<int> closed{0};
  for (int a : members) {
    if (std::binary_search(closed.begin(), closed.end(), a)) continue;
    gens.push_back(a);
    closed = close_under(g, gens);
  }
  return gens;
}

std::vector<ElementSet> normal_subgroup_inventory(const EnumeratedGroup& g) {
  ClassPartition classes = conjugacy_classes(g);
  std::vector<ElementSet> singles;
  std::map<std::vector<int>, bool> seen;
  for (const ElementSet& cls : classes.classes) {
    int rep = cls.members.front();
    if (rep == 0) continue;
    ElementSet closure = normal_closure(g, std::span<const int>(&rep, 1));
    if (!seen.emplace(closure.members, true).second) continue;
    singles.push_back(std::move(closure));
  }

  std::vector<ElementSet> inventory = singles;
  for (std::size_t i = 0; i < singles.size(); ++i)
    for (std::size_t j = i + 1; j < singles.size(); ++j) {
      std::vector<int> seed = singles[i].members;
      seed.insert(seed.end(), singles[j].members.begin(), singles[j].members.end());
      std::sort(seed.begin(), seed.end());
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      std::vector<int> gens = small_generating_set(g, seed);
      ElementSet join = generated_subgroup(g, gens);
      if (seen.emplace(join.members, true).second) inventory.push_back(std::move(join));
    }

  std::sort(inventory.begin(), inventory.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return inventory;
}

}  // namespace avgord
