#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fwb/element_set.hpp"

namespace fwb {

/// A finite group stored as its full multiplication table on 0..n-1.
///
/// Instances are immutable and normally shared through GroupPtr; every
/// derived object (subgroups, lattices, Burnside rings) keeps its group alive.
class Group {
 public:
  /// `table[a * n + b]` is the product a*b. Checks the Latin-square and
  /// identity/inverse laws (O(n^2)); associativity is left to
  /// `is_associative()` since it is O(n^3).
  Group(std::size_t order, std::vector<Element> table, std::string label);

  std::size_t order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element pow(Element a, long long k) const;
  /// ^a g = a g a^{-1}
  Element conjugate(Element a, Element g) const noexcept { return mul(mul(a, g), inv(a)); }
  std::size_t element_order(Element a) const;

  bool is_abelian() const;
  bool is_associative() const;

  std::span<const Element> table() const noexcept { return table_; }

  /// Equality of multiplication tables; labels are ignored.
  friend bool operator==(const Group& a, const Group& b) { return a.table_ == b.table_; }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Same pointer or identical table.
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// A subset of a parent group closed under the operation.
class Subgroup {
 public:
  /// Validates closure; throws PreconditionError if `members` is not a subgroup.
  Subgroup(GroupPtr parent, ElementSet members);

  /// Subgroup generated by `generators` (the trivial subgroup if empty).
  static Subgroup generated(GroupPtr parent, std::span<const Element> generators);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const Group& group() const noexcept { return *parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::vector<Element> elements() const { return members_.members(); }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element g) const noexcept { return members_.test(g); }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  struct Unchecked {};
  Subgroup(GroupPtr parent, ElementSet members, Unchecked);

  GroupPtr parent_;
  ElementSet members_;
  std::size_t order_ = 0;

  friend Subgroup intersect(const Subgroup&, const Subgroup&);
  friend Subgroup closure(GroupPtr, const ElementSet&);
};

/// Closure of an arbitrary subset under multiplication.
Subgroup closure(GroupPtr parent, const ElementSet& seed);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by a ∪ b.
Subgroup join(const Subgroup& a, const Subgroup& b);
/// The set product HK; throws PreconditionError if it is not a subgroup.
Subgroup product(const Subgroup& h, const Subgroup& k);

Subgroup center(const GroupPtr& g);
/// ^aH = aHa^{-1}
Subgroup conjugate_subgroup(const Subgroup& h, Element a);
bool is_cyclic(const Subgroup& h);
bool is_normal(const Subgroup& h);
bool is_normal_in(const Subgroup& k, const Subgroup& l);

/// An element map between two groups; a homomorphism whenever produced by
/// this library.
struct Homomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<Element> images;

  Element operator()(Element g) const { return images[g]; }
  Subgroup image(const Subgroup& h) const;
  Subgroup preimage(const Subgroup& k) const;
  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_surjective() const;
  /// Inverse of a bijective map.
  Homomorphism inverse() const;
};

/// Projection G -> G/N. Cosets are ordered by their minimal element index,
/// which is also the coset representative.
struct QuotientMap {
  Homomorphism projection;
  Subgroup kernel;
  std::vector<Element> representatives;

  const GroupPtr& source() const noexcept { return projection.source; }
  const GroupPtr& target() const noexcept { return projection.target; }
};

/// Throws PreconditionError if n is not normal.
QuotientMap quotient_group(const Subgroup& n);

/// H as a standalone group (elements in increasing parent-index order)
/// together with its inclusion into the parent.
Homomorphism subgroup_embedding(const Subgroup& h);

/// Embedding C_m -> C_n (m | n) of constructed cyclic groups, exponent k -> k*(n/m).
Homomorphism cyclic_embedding(const GroupPtr& small, const GroupPtr& big);

/// Identification of a cyclic quotient C/C_N with a constructed cyclic
/// group of the same order: the coset of `generator` goes to the
/// generator 1. Throws PreconditionError if `generator` does not generate
/// the source of `q`.
Homomorphism cyclic_quotient_identification(const QuotientMap& q, const GroupPtr& cyclic_target,
                                             Element generator);

}  // namespace fwb
