#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "fwb/group.hpp"
#include "fwb/rational.hpp"
#include "fwb/subgroup_lattice.hpp"

namespace fwb {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Entry [H][K] = |(G/H)^K| = #{gH : K^g ≤ H} over class representatives.
/// Lower triangular under the canonical class order.
RationalMatrix table_of_marks(const SubgroupLattice& lattice);

class BurnsideElement;

/// QB(G) for one group: its lattice, table of marks and primitive
/// idempotents, all computed at construction and read-only afterwards.
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
 public:
  static std::shared_ptr<const BurnsideRing> make(LatticePtr lattice);
  static std::shared_ptr<const BurnsideRing> make(GroupPtr group, std::size_t cap = kDefaultOrderCap);

  const SubgroupLattice& lattice() const noexcept { return *lattice_; }
  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const Group& group() const noexcept { return lattice_->group(); }
  const GroupPtr& group_ptr() const noexcept { return lattice_->group_ptr(); }

  /// Number of conjugacy classes of subgroups.
  std::size_t rank() const noexcept { return lattice_->class_count(); }
  /// |(G/H)^K| for class indices h, k.
  long long mark(ClassId h, ClassId k) const { return marks_[h.value * rank() + k.value]; }
  RationalMatrix marks() const;

  ClassId class_of(const Subgroup& h) const { return lattice_->class_of(lattice_->id_of(h)); }
  std::string label(ClassId c) const { return lattice_->class_label(c); }

  /// e_H^G for the class of H.
  BurnsideElement idempotent(ClassId c) const;

 private:
  explicit BurnsideRing(LatticePtr lattice);

  LatticePtr lattice_;
  std::vector<long long> marks_;
  std::vector<std::vector<Rational>> idempotents_;
};

using RingPtr = std::shared_ptr<const BurnsideRing>;

/// Element of QB(G) in the transitive basis [G/H], H ∈ [s_G].
class BurnsideElement {
 public:
  BurnsideElement(RingPtr ring, std::vector<Rational> coefficients);

  static BurnsideElement zero(RingPtr ring);
  /// [G/H] for the class c.
  static BurnsideElement basis(RingPtr ring, ClassId c);
  /// [G/G], the ring identity.
  static BurnsideElement one(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& coefficient(ClassId c) const { return coeffs_[c.value]; }
  bool is_zero() const;

  BurnsideElement& operator+=(const BurnsideElement& other);
  BurnsideElement& operator-=(const BurnsideElement& other);
  BurnsideElement& operator*=(const Rational& scalar);

  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(BurnsideElement a, const Rational& s) { return a *= s; }
  friend BurnsideElement operator*(const Rational& s, BurnsideElement a) { return a *= s; }
  /// Ring product, via marks.
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
  /// Exact coefficient equality; elements of different groups are unequal.
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

 private:
  void require_same_ring(const BurnsideElement& other) const;

  RingPtr ring_;
  std::vector<Rational> coeffs_;
};

/// Fixed-point counts |x^K| indexed by class.
struct MarkVector {
  RingPtr ring;
  std::vector<Rational> marks;

  friend bool operator==(const MarkVector& a, const MarkVector& b) { return a.marks == b.marks; }
};

MarkVector marks_of(const BurnsideElement& x);
/// Back-substitution through the triangular table of marks.
BurnsideElement element_from_marks(const MarkVector& m);
BurnsideElement element_from_marks(const RingPtr& ring, std::vector<Rational> marks);
BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b);
bool is_integral(const BurnsideElement& x);

/// e_H^G = (1/|N_G(H)|) Σ_{K ≤ H} |K| μ(K, H) [G/K]
BurnsideElement idempotent(const RingPtr& ring, SubgroupId h);

// ---------------------------------------------------------------------------

/// A finite left G-set given by its action table.
class GSet {
 public:
  /// `action[g * size + x]` is g·x. Throws PreconditionError unless this is
  /// a group action.
  GSet(GroupPtr group, std::size_t size, std::vector<std::size_t> action);

  /// Left cosets gH ordered by minimal element, with g·(xH) = (gx)H.
  static GSet cosets(const Subgroup& h);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t act(Element g, std::size_t x) const { return action_[g * size_ + x]; }
  Subgroup stabilizer(std::size_t x) const;
  /// Orbits, each listed in increasing point order, ordered by least point.
  std::vector<std::vector<std::size_t>> orbits() const;

 private:
  GroupPtr group_;
  std::size_t size_;
  std::vector<std::size_t> action_;
};

/// Σ over orbits of [G/Stab(x)].
BurnsideElement decompose_gset(const GSet& x, const RingPtr& ring);

// ---------------------------------------------------------------------------
// Biset operations. Each is built once for a pair of rings and then applied
// to any number of elements.

/// Res^G_H along an embedding H -> G; basis images from explicit G-sets.
class Restriction {
 public:
  Restriction(RingPtr from, const Homomorphism& embedding, RingPtr to);
  BurnsideElement operator()(const BurnsideElement& x) const;

 private:
  RingPtr from_, to_;
  std::vector<BurnsideElement> images_;
};

/// [S/L] -> [T/f(L)] for an injective f (induction, transport along an
/// isomorphism) or a surjective f (deflation).
class BasisPushforward {
 public:
  BasisPushforward(RingPtr from, const Homomorphism& map, RingPtr to);
  BurnsideElement operator()(const BurnsideElement& x) const;

 private:
  RingPtr from_, to_;
  std::vector<ClassId> images_;
};

/// Ind^G_H: [H/L] -> [G/L].
class Induction : public BasisPushforward {
 public:
  Induction(RingPtr from, const Homomorphism& embedding, RingPtr to);
};

/// Def^G_{G/N}: [G/H] -> [(G/N)/(HN/N)].
class Deflation : public BasisPushforward {
 public:
  Deflation(RingPtr from, const QuotientMap& q, RingPtr to);
};

/// Inf^G_{G/N}: [(G/N)/(K/N)] -> [G/K].
class Inflation {
 public:
  Inflation(RingPtr from, const QuotientMap& q, RingPtr to);
  BurnsideElement operator()(const BurnsideElement& x) const;

 private:
  RingPtr from_, to_;
  std::vector<ClassId> images_;
};

/// Fix^G_{G/N}: X -> X^N with the residual G/N action, computed on explicit G-sets.
class FixedPoints {
 public:
  FixedPoints(RingPtr from, const QuotientMap& q, RingPtr to);
  BurnsideElement operator()(const BurnsideElement& x) const;

 private:
  RingPtr from_, to_;
  std::vector<BurnsideElement> images_;
};

/// Ten^G_H via |Ten(a)^K| = Π_{g ∈ [K\G/H]} |a^{K^g ∩ H}|. Multiplicative, not additive.
class TensorInduction {
 public:
  TensorInduction(RingPtr from, const Homomorphism& embedding, RingPtr to);
  BurnsideElement operator()(const BurnsideElement& a) const;

 private:
  RingPtr from_, to_;
  // Per class K of G: classes of K^g ∩ H in H over double-coset representatives g.
  std::vector<std::vector<ClassId>> factors_;
};

/// One-shot helpers that build the operation and apply it.
/// Over a freshly built ring for H.
BurnsideElement restrict(const BurnsideElement& x, const Subgroup& h);
BurnsideElement restrict(const BurnsideElement& x, const Homomorphism& embedding, const RingPtr& to);
BurnsideElement induce(const BurnsideElement& x, const Homomorphism& embedding, const RingPtr& to);
BurnsideElement inflate(const BurnsideElement& x, const QuotientMap& q, const RingPtr& to);
BurnsideElement deflate(const BurnsideElement& x, const QuotientMap& q, const RingPtr& to);
BurnsideElement fixed_points(const BurnsideElement& x, const QuotientMap& q, const RingPtr& to);
BurnsideElement tensor_induce(const BurnsideElement& a, const Homomorphism& embedding, const RingPtr& to);

/// Def^G_{G/N} e_H^G = |N_G(HN)/HN| / |N_G(H)/H| · m_{H, H∩N} · e_{HN/N}^{G/N},
/// with N the kernel of q and H the representative of class h.
BurnsideElement deflate_idempotent(const RingPtr& ring, ClassId h, const QuotientMap& q, const RingPtr& to);

}  // namespace fwb
