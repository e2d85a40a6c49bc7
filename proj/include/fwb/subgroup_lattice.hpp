#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fwb/group.hpp"
#include "fwb/group_spec.hpp"
#include "fwb/rational.hpp"

namespace fwb {

/// Position of a subgroup in the canonical order of its lattice.
struct SubgroupId {
  std::size_t value = 0;
  friend auto operator<=>(const SubgroupId&, const SubgroupId&) = default;
};

/// Position of a conjugacy class of subgroups; classes are ordered by their
/// representatives, hence by subgroup order first.
struct ClassId {
  std::size_t value = 0;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

/// All subgroups of a group, sorted by (order, sorted member list), with
/// inclusion, conjugacy classes, normalizers and the Möbius function.
///
/// Built once and then read-only; the Möbius table is filled during
/// construction so concurrent readers need no locking.
class SubgroupLattice {
 public:
  static std::shared_ptr<const SubgroupLattice> build(GroupPtr group, std::size_t cap = kDefaultOrderCap);

  const Group& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }

  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& subgroup(SubgroupId id) const { return subgroups_[id.value]; }
  std::size_t order(SubgroupId id) const { return subgroups_[id.value].order(); }

  std::optional<SubgroupId> find(const ElementSet& members) const;
  /// Throws PreconditionError if `h` is not a subgroup of this lattice's group.
  SubgroupId id_of(const Subgroup& h) const;

  SubgroupId trivial() const noexcept { return SubgroupId{0}; }
  SubgroupId whole() const noexcept { return SubgroupId{subgroups_.size() - 1}; }

  /// k ⊆ h
  bool contains(SubgroupId h, SubgroupId k) const { return inclusion_[k.value * size() + h.value] != 0; }
  /// Ids of subgroups of h (including h), ascending.
  std::vector<SubgroupId> subgroups_of(SubgroupId h) const;
  /// Ids of subgroups containing k (including k), ascending.
  std::vector<SubgroupId> overgroups_of(SubgroupId k) const;

  std::size_t class_count() const noexcept { return class_reps_.size(); }
  ClassId class_of(SubgroupId id) const { return ClassId{class_of_[id.value]}; }
  SubgroupId representative(ClassId c) const { return class_reps_[c.value]; }
  std::span<const SubgroupId> class_members(ClassId c) const { return class_members_[c.value]; }
  std::size_t class_order(ClassId c) const { return order(representative(c)); }
  /// "order=<k>:<i>": the i-th (0-based) class of subgroups of order k.
  std::string class_label(ClassId c) const;
  /// Inverse of class_label; throws ParseError.
  ClassId class_from_label(const std::string& label) const;

  SubgroupId normalizer(SubgroupId id) const { return normalizers_[id.value]; }
  bool is_normal(SubgroupId id) const { return normalizers_[id.value] == whole(); }
  bool is_cyclic(SubgroupId id) const { return cyclic_[id.value] != 0; }

  /// μ(K, H) on the subgroup poset; throws PreconditionError unless K ≤ H.
  long long moebius(SubgroupId k, SubgroupId h) const;

  /// Id of a ∩ b, of the join ⟨a, b⟩.
  SubgroupId meet(SubgroupId a, SubgroupId b) const;
  SubgroupId join(SubgroupId a, SubgroupId b) const;

 private:
  SubgroupLattice() = default;

  GroupPtr group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<char> inclusion_;  // [k * size + h] == 1 iff k ⊆ h
  std::vector<std::size_t> class_of_;
  std::vector<SubgroupId> class_reps_;
  std::vector<std::vector<SubgroupId>> class_members_;
  std::vector<std::size_t> class_rank_;  // index among classes of the same order
  std::vector<SubgroupId> normalizers_;
  std::vector<char> cyclic_;
  std::vector<long long> moebius_;  // [k * size + h]
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

LatticePtr enumerate_subgroups(GroupPtr group, std::size_t cap = kDefaultOrderCap);

long long moebius(const SubgroupLattice& lattice, SubgroupId k, SubgroupId h);

/// m_{L,K} = (1/|L|) Σ_{X ≤ L, XK = L} |X| μ(X, L). Needs K ⊴ L.
Rational m_constant(const SubgroupLattice& lattice, SubgroupId l, SubgroupId k);

/// φ(t) / (n φ(t/n)), the value of m_{C_t, C_n} for cyclic groups. Needs n | t.
Rational m_cyclic(std::size_t t, std::size_t n);

enum class GcdMethod {
  AllSubgroups,        // |H ∩ N| = gcd(|H|, |N|) for all H
  DivisorOrder,        // |H| divides |N|  =>  H ⊆ N
  CyclicDivisorOrder,  // as above, H cyclic
  CyclicSubgroups,     // |H ∩ N| = gcd(|H|, |N|) for cyclic H
  Sylow,               // prime-by-prime Sylow characterisation; N must be normal
};

inline constexpr GcdMethod kAllGcdMethods[] = {GcdMethod::AllSubgroups, GcdMethod::DivisorOrder,
                                               GcdMethod::CyclicDivisorOrder, GcdMethod::CyclicSubgroups,
                                               GcdMethod::Sylow};

bool check_gcd_property(const SubgroupLattice& lattice, SubgroupId n, GcdMethod method = GcdMethod::AllSubgroups);

/// Intersection of the maximal proper subgroups (the whole group if trivial).
SubgroupId frattini(const SubgroupLattice& lattice);
/// Intersection of the cyclic subgroups not properly contained in another cyclic subgroup.
SubgroupId max_cyclic_intersection(const SubgroupLattice& lattice);
SubgroupId normalizer(const SubgroupLattice& lattice, SubgroupId h);
/// Some Sylow p-subgroup (the first in canonical order).
SubgroupId sylow(const SubgroupLattice& lattice, std::size_t p);

struct DoubleCoset {
  Element representative;  // minimal element index of KgH
  std::size_t size;
};

/// K\G/H, ordered by representative.
std::vector<DoubleCoset> double_cosets(const Group& g, const Subgroup& k, const Subgroup& h);

/// Table isomorphism test against the constructed Dic(|P|), |P| = 2^k >= 8.
bool is_generalized_quaternion(const Subgroup& p);

}  // namespace fwb
