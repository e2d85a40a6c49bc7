#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwb/burnside.hpp"
#include "fwb/group.hpp"
#include "fwb/subgroup_lattice.hpp"

namespace fwb {

/// A group G together with the cyclic group C of order |G| and the Burnside
/// rings of both. C_d denotes the unique subgroup of order d in C.
class FwContext : public std::enable_shared_from_this<FwContext> {
 public:
  static std::shared_ptr<const FwContext> make(RingPtr group_ring);
  static std::shared_ptr<const FwContext> make(GroupPtr group, std::size_t cap = kDefaultOrderCap);

  const Group& group() const noexcept { return group_ring_->group(); }
  const GroupPtr& group_ptr() const noexcept { return group_ring_->group_ptr(); }
  const SubgroupLattice& lattice() const noexcept { return group_ring_->lattice(); }
  const RingPtr& group_ring() const noexcept { return group_ring_; }

  const GroupPtr& cyclic_ptr() const noexcept { return cyclic_ring_->group_ptr(); }
  const SubgroupLattice& cyclic_lattice() const noexcept { return cyclic_ring_->lattice(); }
  const RingPtr& cyclic_ring() const noexcept { return cyclic_ring_; }

  /// C_d; throws PreconditionError unless d divides |G|.
  SubgroupId cyclic_subgroup(std::size_t d) const;
  /// Class of C_d in the Burnside ring of C (its own class, since C is abelian).
  ClassId cyclic_class(std::size_t d) const;

 private:
  FwContext(RingPtr group_ring, RingPtr cyclic_ring);

  RingPtr group_ring_;
  RingPtr cyclic_ring_;
  std::vector<std::size_t> class_by_order_;  // indexed by d, meaningful for d | |G|
};

using FwContextPtr = std::shared_ptr<const FwContext>;

/// The element of QB(G) whose mark at each K is the mark of x at C_{|K|}.
BurnsideElement fw_apply(const FwContext& ctx, const BurnsideElement& x);

struct TransitiveImage {
  BurnsideElement image;
  /// Set when the image is a single transitive G-set [G/N].
  std::optional<ClassId> transitive_class;

  bool transitive() const noexcept { return transitive_class.has_value(); }
};

/// α([C/D]). Throws InvariantViolation if transitivity disagrees with the
/// existence of a subgroup of order |D| having the gcd property.
TransitiveImage fw_transitive_image(const FwContext& ctx, SubgroupId d);

/// True iff α([C/D]) has integer coefficients for every D ≤ C.
bool check_integrality(const FwContext& ctx);

/// |N_G(HN)/HN| / |N_G(H)/H| · m_{H, H∩N}; N must be normal.
Rational t_constant(const FwContext& ctx, SubgroupId h, SubgroupId n);
/// |D| / |D C_N| · m_{D, D∩C_N} for subgroups d, cn of C.
Rational r_constant(const FwContext& ctx, SubgroupId d, SubgroupId cn);

enum class BisetOp { Restriction, FixedPoints, Inflation, Induction, TensorInduction, Deflation };

inline constexpr BisetOp kAllBisetOps[] = {BisetOp::Restriction, BisetOp::FixedPoints,     BisetOp::Inflation,
                                           BisetOp::Induction,   BisetOp::TensorInduction, BisetOp::Deflation};

/// "res", "fix", "inf", "ind", "ten", "def".
std::string to_string(BisetOp op);
/// Inverse of to_string; throws ParseError.
BisetOp parse_biset_op(std::string_view name);
/// inf, fix and def take a normal subgroup N; res, ind and ten any subgroup H.
bool needs_normal_subgroup(BisetOp op);

struct CommutativityCertificate {
  /// Basis element of the source cyclic ring on which the two routes differ,
  /// e.g. "e[order=4:0]".
  std::string basis_label;
  BurnsideElement lhs;  // α after the operation on the cyclic side
  BurnsideElement rhs;  // the operation on the group side after α
};

struct CommutativityReport {
  BisetOp op;
  bool commutes = true;
  std::size_t basis_size = 0;
  std::optional<CommutativityCertificate> certificate;
};

/// Compares the two composites of α with `op` on every idempotent e_D of the
/// source cyclic ring, in increasing order of |D|. Tensor induction is not
/// additive, so it is also compared on 2·[C/C].
CommutativityReport check_commutes(const FwContext& ctx, BisetOp op, SubgroupId sub);

/// The square formed by α and deflation for a fixed normal N, with the
/// cyclic quotient C/C_N identified with C_{|G/N|} by sending the coset of
/// `generator` to 1.
class DeflationSquare {
 public:
  DeflationSquare(FwContextPtr ctx, SubgroupId n, Element generator = 1);

  struct Routes {
    BurnsideElement cyclic_first;   // α^{G/N}(Def e_D), computed on the transitive basis
    BurnsideElement group_first;    // Def(α^G e_D), computed on the transitive basis
    BurnsideElement cyclic_closed;  // r_{D,C_N} α^{G/N}(e_{DC_N/C_N})
    BurnsideElement group_closed;   // Σ_{|H|=|D|} t_{H,N} e_{HN/N}
  };

  /// All four routes for e_D, D ≤ C. Throws InvariantViolation if a closed
  /// form disagrees with its direct route.
  Routes routes(SubgroupId d) const;
  const FwContext& quotient_context() const noexcept;

 private:
  struct Parts;

  FwContextPtr ctx_;
  SubgroupId n_;
  SubgroupId cn_;
  std::shared_ptr<const Parts> parts_;
};

struct MEqualityEntry {
  SubgroupId overgroup;
  Rational group_value;   // m_{T,N}
  Rational cyclic_value;  // m_{C_T,C_N}
};

struct MEqualityReport {
  bool holds = true;
  std::vector<MEqualityEntry> entries;  // every T ⊇ N, in canonical order
};

/// m_{T,N} = m_{C_T,C_N} for every subgroup T containing N; N must be normal.
MEqualityReport check_m_equality(const FwContext& ctx, SubgroupId n);

struct DefNecessaryReport {
  bool commutes = false;
  bool gcd = false;
  bool cyclic = false;
  bool central = false;
  bool m_equal = false;
  bool inside_max_cyclic = false;

  /// Deflation commuting forces all the listed conditions.
  bool holds() const noexcept {
    return !commutes || (gcd && cyclic && central && m_equal && inside_max_cyclic);
  }
};

DefNecessaryReport check_def_necessary(const FwContext& ctx, SubgroupId n);

enum class CheckOutcome { Holds, Fails, HypothesisNotMet };

/// For N the unique subgroup of order p, central in G: m-equality implies
/// that deflation commutes. HypothesisNotMet when N is not of that kind.
CheckOutcome check_unique_central_sufficiency(const FwContext& ctx, SubgroupId n, std::size_t p);

std::string to_string(CheckOutcome outcome);

}  // namespace fwb
