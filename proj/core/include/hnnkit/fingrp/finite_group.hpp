#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hnnkit/abelian_invariants.hpp"
#include "hnnkit/presentations/presentation.hpp"

namespace hnnkit::fingrp {

/// Elements are numbered 0..n-1 with 0 the identity.
using Element = int;

/// A finite group stored as its full multiplication table.
class FiniteGroup {
 public:
  /// `table[a * n + b]` is the product a*b. Throws if the table is not a
  /// group table with identity 0 (associativity is the caller's contract).
  FiniteGroup(std::vector<Element> table, std::vector<Element> generators, std::vector<std::string> generator_names,
              std::optional<pres::Presentation> source = std::nullopt);

  int order() const { return n_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
  Element inv(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g * x * g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Element power(Element a, long k) const;
  int element_order(Element a) const { return orders_[static_cast<std::size_t>(a)]; }

  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::optional<pres::Presentation>& presentation() const { return source_; }

  /// Value of a word whose generator i stands for generators()[i].
  Element evaluate(const pres::Word& w) const;
  /// Convenience: evaluate text like "a^2*b" against the generator names.
  Element element(std::string_view text) const;
  /// A shortest word over the generators representing `e`.
  const pres::Word& word_of(Element e) const { return words_[static_cast<std::size_t>(e)]; }
  std::string name_of(Element e) const;

  const std::vector<Element>& table() const { return table_; }
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  int n_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<int> orders_;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
  std::optional<pres::Presentation> source_;
  std::vector<pres::Word> words_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup as the sorted list of its elements in the parent group.
struct Subgroup {
  std::vector<Element> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Element e) const;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// A homomorphism given element by element.
struct FiniteHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Element> map;

  Element operator()(Element e) const { return map[static_cast<std::size_t>(e)]; }
  bool is_injective() const;
  bool is_identity() const;
  Subgroup image() const;
  bool is_homomorphism() const;
};

FiniteHom compose(const FiniteHom& g, const FiniteHom& f);  ///< g after f
FiniteHom inverse(const FiniteHom& f);                       ///< f must be bijective
FiniteHom identity_hom(GroupPtr g);
/// Conjugation x -> g x g^-1 as an automorphism.
FiniteHom inner_automorphism(GroupPtr group, Element g);

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> generators);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();
Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> elements);
Subgroup commutator_subgroup(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
std::vector<Element> small_generating_set(const FiniteGroup& g, const Subgroup& h);

/// Every subgroup, ordered by (order, elements). Throws BudgetExceeded when
/// |G| exceeds `max_order`.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int max_order = 64);

/// The subgroup as a group in its own right; element i of the result is
/// h.elements[i]. Generators are a small generating set.
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);
/// Inclusion of subgroup_as_group(g, h) into g.
FiniteHom inclusion(GroupPtr parent, GroupPtr sub, const Subgroup& h);

/// Abelian invariants of G/G', computed by counting torsion in the quotient.
AbelianInvariants abelianization(const FiniteGroup& g);

/// Extends generator images to a homomorphism if the assignment respects
/// every relation; `generators` must generate the source.
std::optional<std::vector<Element>> extend_to_hom(const FiniteGroup& source, std::span<const Element> generators,
                                                  std::span<const Element> images, const FiniteGroup& target);

struct HomSearchOptions {
  bool injective_only = false;
  std::size_t max_candidates = 5000000;
};
/// All homomorphisms source -> target, enumerated over images of a small
/// generating set in lexicographic order.
std::vector<FiniteHom> homomorphisms(GroupPtr source, GroupPtr target, HomSearchOptions options = {});
/// Aut(G) with the identity first. Throws BudgetExceeded when |G| > max_order.
std::vector<FiniteHom> automorphisms(GroupPtr g, int max_order = 32);

struct MeridianalResult {
  bool found = false;
  std::optional<FiniteHom> witness;
};
/// Searches for an automorphism whose values g^-1 a(g) normally generate G.
MeridianalResult has_meridianal_automorphism(GroupPtr g);

/// Isomorphism-invariant fingerprint used to name small groups.
struct GroupProfile {
  int order = 0;
  AbelianInvariants abelianization;
  std::map<int, int> order_histogram;
  int center_order = 0;
  friend bool operator==(const GroupProfile&, const GroupProfile&) = default;
};
GroupProfile profile(const FiniteGroup& g);

}  // namespace hnnkit::fingrp
