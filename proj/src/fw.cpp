#include "fwb/fw.hpp"

#include <functional>
#include <string>

#include "fwb/arith.hpp"
#include "fwb/errors.hpp"
#include "fwb/group_spec.hpp"

namespace fwb {

namespace {

Rational ratio(std::size_t num, std::size_t den) {
  Rational q(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
  q.canonicalize();
  return q;
}

GroupPtr cyclic_group(std::size_t n) { return construct_group("C" + std::to_string(n), n); }

Element cyclic_generator(const Group& c) { return c.order() > 1 ? 1 : 0; }

void require_normal(const SubgroupLattice& lat, SubgroupId n) {
  if (!lat.is_normal(n)) throw PreconditionError("subgroup is not normal");
}

}  // namespace

// ---------------------------------------------------------------------------

FwContext::FwContext(RingPtr group_ring, RingPtr cyclic_ring)
    : group_ring_(std::move(group_ring)), cyclic_ring_(std::move(cyclic_ring)) {
  const std::size_t n = group_ring_->group().order();
  class_by_order_.assign(n + 1, 0);
  const SubgroupLattice& clat = cyclic_ring_->lattice();
  for (std::size_t c = 0; c < clat.class_count(); ++c) class_by_order_[clat.class_order(ClassId{c})] = c;
}

FwContextPtr FwContext::make(RingPtr group_ring) {
  auto cyclic = BurnsideRing::make(cyclic_group(group_ring->group().order()));
  return FwContextPtr(new FwContext(std::move(group_ring), std::move(cyclic)));
}

FwContextPtr FwContext::make(GroupPtr group, std::size_t cap) { return make(BurnsideRing::make(std::move(group), cap)); }

ClassId FwContext::cyclic_class(std::size_t d) const {
  if (d == 0 || d >= class_by_order_.size() || (class_by_order_.size() - 1) % d != 0)
    throw PreconditionError("order " + std::to_string(d) + " does not divide the group order");
  return ClassId{class_by_order_[d]};
}

SubgroupId FwContext::cyclic_subgroup(std::size_t d) const {
  return cyclic_lattice().representative(cyclic_class(d));
}

// ---------------------------------------------------------------------------

BurnsideElement fw_apply(const FwContext& ctx, const BurnsideElement& x) {
  if (!same_group(x.ring()->group_ptr(), ctx.cyclic_ptr()))
    throw PreconditionError("element is not over the cyclic group of the context");
  const MarkVector mx = marks_of(x);
  const SubgroupLattice& lat = ctx.lattice();
  std::vector<Rational> marks(lat.class_count());
  for (std::size_t k = 0; k < marks.size(); ++k) marks[k] = mx.marks[ctx.cyclic_class(lat.class_order(ClassId{k})).value];
  return element_from_marks(ctx.group_ring(), std::move(marks));
}

TransitiveImage fw_transitive_image(const FwContext& ctx, SubgroupId d) {
  const ClassId dc = ctx.cyclic_lattice().class_of(d);
  TransitiveImage out{fw_apply(ctx, BurnsideElement::basis(ctx.cyclic_ring(), dc)), std::nullopt};

  std::optional<ClassId> single;
  std::size_t nonzero = 0;
  const auto& coeffs = out.image.coefficients();
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    if (coeffs[c] == 0) continue;
    ++nonzero;
    if (coeffs[c] == 1) single = ClassId{c};
  }
  if (nonzero == 1 && single) out.transitive_class = single;

  const SubgroupLattice& lat = ctx.lattice();
  const std::size_t order = ctx.cyclic_lattice().order(d);
  bool exists = false;
  for (std::size_t s = 0; s < lat.size() && !exists; ++s)
    exists = lat.order(SubgroupId{s}) == order && check_gcd_property(lat, SubgroupId{s});
  bool consistent = exists == out.transitive();
  if (consistent && out.transitive()) {
    const SubgroupId rep = lat.representative(*out.transitive_class);
    consistent = lat.order(rep) == order && check_gcd_property(lat, rep);
  }
  if (!consistent)
    throw InvariantViolation("transitive image of [C/D] for |D| = " + std::to_string(order) +
                             " disagrees with the gcd property");
  return out;
}

bool check_integrality(const FwContext& ctx) {
  for (std::size_t c = 0; c < ctx.cyclic_ring()->rank(); ++c)
    if (!is_integral(fw_apply(ctx, BurnsideElement::basis(ctx.cyclic_ring(), ClassId{c})))) return false;
  return true;
}

Rational t_constant(const FwContext& ctx, SubgroupId h, SubgroupId n) {
  const SubgroupLattice& lat = ctx.lattice();
  require_normal(lat, n);
  const SubgroupId hn = lat.join(h, n);
  return ratio(lat.order(lat.normalizer(hn)), lat.order(hn)) / ratio(lat.order(lat.normalizer(h)), lat.order(h)) *
         m_constant(lat, h, lat.meet(h, n));
}

Rational r_constant(const FwContext& ctx, SubgroupId d, SubgroupId cn) {
  const SubgroupLattice& clat = ctx.cyclic_lattice();
  return ratio(clat.order(d), clat.order(clat.join(d, cn))) * m_constant(clat, d, clat.meet(d, cn));
}

// ---------------------------------------------------------------------------

std::string to_string(BisetOp op) {
  switch (op) {
    case BisetOp::Restriction: return "res";
    case BisetOp::FixedPoints: return "fix";
    case BisetOp::Inflation: return "inf";
    case BisetOp::Induction: return "ind";
    case BisetOp::TensorInduction: return "ten";
    case BisetOp::Deflation: return "def";
  }
  return "?";
}

BisetOp parse_biset_op(std::string_view name) {
  for (BisetOp op : kAllBisetOps)
    if (to_string(op) == name) return op;
  throw ParseError("unknown operation '" + std::string(name) + "' (expected res, fix, inf, ind, ten or def)", 0);
}

bool needs_normal_subgroup(BisetOp op) {
  return op == BisetOp::Inflation || op == BisetOp::FixedPoints || op == BisetOp::Deflation;
}

namespace {

using Route = std::function<BurnsideElement(const BurnsideElement&)>;

CommutativityReport compare_routes(BisetOp op, const RingPtr& source, const Route& cyclic_side,
                                   const Route& group_side, bool extra_scalar_check) {
  CommutativityReport report{op, true, 0, std::nullopt};
  const SubgroupLattice& slat = source->lattice();
  auto compare = [&](const BurnsideElement& x, std::string label) {
    ++report.basis_size;
    if (report.certificate) return;
    BurnsideElement lhs = cyclic_side(x);
    BurnsideElement rhs = group_side(x);
    if (lhs == rhs) return;
    report.commutes = false;
    report.certificate = CommutativityCertificate{std::move(label), std::move(lhs), std::move(rhs)};
  };
  for (std::size_t c = 0; c < source->rank(); ++c) compare(source->idempotent(ClassId{c}), "e[" + slat.class_label(ClassId{c}) + "]");
  if (extra_scalar_check) compare(BurnsideElement::one(source) * Rational(2), "2[" + slat.class_label(ClassId{source->rank() - 1}) + "]");
  return report;
}

struct SubgroupSide {
  Homomorphism embedding;  // H -> G
  FwContextPtr ctx;        // for H
  Homomorphism cyclic_embedding;  // C_{|H|} -> C
};

SubgroupSide subgroup_side(const FwContext& ctx, SubgroupId h) {
  Homomorphism emb = subgroup_embedding(ctx.lattice().subgroup(h));
  FwContextPtr hctx = FwContext::make(emb.source);
  Homomorphism cemb = cyclic_embedding(hctx->cyclic_ptr(), ctx.cyclic_ptr());
  return SubgroupSide{std::move(emb), std::move(hctx), std::move(cemb)};
}

struct QuotientSide {
  QuotientMap group_quotient;
  QuotientMap cyclic_quotient;
  FwContextPtr ctx;               // for G/N
  Homomorphism identification;    // C/C_N -> C_{|G/N|}
  RingPtr cyclic_quotient_ring;   // over C/C_N
};

QuotientSide quotient_side(const FwContext& ctx, SubgroupId n, Element generator) {
  const SubgroupLattice& lat = ctx.lattice();
  require_normal(lat, n);
  QuotientMap gq = quotient_group(lat.subgroup(n));
  QuotientMap cq = quotient_group(ctx.cyclic_lattice().subgroup(ctx.cyclic_subgroup(lat.order(n))));
  FwContextPtr qctx = FwContext::make(gq.target());
  Homomorphism ident = cyclic_quotient_identification(cq, qctx->cyclic_ptr(), generator);
  RingPtr cq_ring = BurnsideRing::make(cq.target());
  return QuotientSide{std::move(gq), std::move(cq), std::move(qctx), std::move(ident), std::move(cq_ring)};
}

}  // namespace

CommutativityReport check_commutes(const FwContext& ctx, BisetOp op, SubgroupId sub) {
  const SubgroupLattice& lat = ctx.lattice();
  if (sub.value >= lat.size()) throw PreconditionError("subgroup id out of range");
  if (needs_normal_subgroup(op)) require_normal(lat, sub);

  switch (op) {
    case BisetOp::Restriction: {
      const SubgroupSide s = subgroup_side(ctx, sub);
      const Restriction res_c(ctx.cyclic_ring(), s.cyclic_embedding, s.ctx->cyclic_ring());
      const Restriction res_g(ctx.group_ring(), s.embedding, s.ctx->group_ring());
      return compare_routes(
          op, ctx.cyclic_ring(), [&](const BurnsideElement& e) { return fw_apply(*s.ctx, res_c(e)); },
          [&](const BurnsideElement& e) { return res_g(fw_apply(ctx, e)); }, false);
    }
    case BisetOp::Induction: {
      const SubgroupSide s = subgroup_side(ctx, sub);
      const Induction ind_c(s.ctx->cyclic_ring(), s.cyclic_embedding, ctx.cyclic_ring());
      const Induction ind_g(s.ctx->group_ring(), s.embedding, ctx.group_ring());
      return compare_routes(
          op, s.ctx->cyclic_ring(), [&](const BurnsideElement& e) { return fw_apply(ctx, ind_c(e)); },
          [&](const BurnsideElement& e) { return ind_g(fw_apply(*s.ctx, e)); }, false);
    }
    case BisetOp::TensorInduction: {
      const SubgroupSide s = subgroup_side(ctx, sub);
      const TensorInduction ten_c(s.ctx->cyclic_ring(), s.cyclic_embedding, ctx.cyclic_ring());
      const TensorInduction ten_g(s.ctx->group_ring(), s.embedding, ctx.group_ring());
      return compare_routes(
          op, s.ctx->cyclic_ring(), [&](const BurnsideElement& e) { return fw_apply(ctx, ten_c(e)); },
          [&](const BurnsideElement& e) { return ten_g(fw_apply(*s.ctx, e)); }, true);
    }
    case BisetOp::Inflation: {
      const QuotientSide q = quotient_side(ctx, sub, cyclic_generator(*ctx.cyclic_ptr()));
      const BasisPushforward transport(q.ctx->cyclic_ring(), q.identification.inverse(), q.cyclic_quotient_ring);
      const Inflation inf_c(q.cyclic_quotient_ring, q.cyclic_quotient, ctx.cyclic_ring());
      const Inflation inf_g(q.ctx->group_ring(), q.group_quotient, ctx.group_ring());
      return compare_routes(
          op, q.ctx->cyclic_ring(), [&](const BurnsideElement& e) { return fw_apply(ctx, inf_c(transport(e))); },
          [&](const BurnsideElement& e) { return inf_g(fw_apply(*q.ctx, e)); }, false);
    }
    case BisetOp::FixedPoints: {
      const QuotientSide q = quotient_side(ctx, sub, cyclic_generator(*ctx.cyclic_ptr()));
      const FixedPoints fix_c(ctx.cyclic_ring(), q.cyclic_quotient, q.cyclic_quotient_ring);
      const BasisPushforward transport(q.cyclic_quotient_ring, q.identification, q.ctx->cyclic_ring());
      const FixedPoints fix_g(ctx.group_ring(), q.group_quotient, q.ctx->group_ring());
      return compare_routes(
          op, ctx.cyclic_ring(), [&](const BurnsideElement& e) { return fw_apply(*q.ctx, transport(fix_c(e))); },
          [&](const BurnsideElement& e) { return fix_g(fw_apply(ctx, e)); }, false);
    }
    case BisetOp::Deflation: {
      const DeflationSquare square(ctx.shared_from_this(), sub, cyclic_generator(*ctx.cyclic_ptr()));
      const SubgroupLattice& clat = ctx.cyclic_lattice();
      CommutativityReport report{op, true, 0, std::nullopt};
      for (std::size_t c = 0; c < clat.class_count(); ++c) {
        ++report.basis_size;
        if (report.certificate) continue;
        auto r = square.routes(clat.representative(ClassId{c}));
        if (r.cyclic_first == r.group_first) continue;
        report.commutes = false;
        report.certificate = CommutativityCertificate{"e[" + clat.class_label(ClassId{c}) + "]",
                                                      std::move(r.cyclic_first), std::move(r.group_first)};
      }
      return report;
    }
  }
  throw PreconditionError("unknown operation");
}

// ---------------------------------------------------------------------------

struct DeflationSquare::Parts : QuotientSide {};

DeflationSquare::DeflationSquare(FwContextPtr ctx, SubgroupId n, Element generator)
    : ctx_(std::move(ctx)),
      n_(n),
      cn_(ctx_->cyclic_subgroup(ctx_->lattice().order(n))),
      parts_(std::make_shared<const Parts>(Parts{quotient_side(*ctx_, n, generator)})) {}

const FwContext& DeflationSquare::quotient_context() const noexcept { return *parts_->ctx; }

DeflationSquare::Routes DeflationSquare::routes(SubgroupId d) const {
  const FwContext& ctx = *ctx_;
  const FwContext& qctx = *parts_->ctx;
  const QuotientMap& group_quotient = parts_->group_quotient;
  const SubgroupLattice& lat = ctx.lattice();
  const SubgroupLattice& clat = ctx.cyclic_lattice();
  const BurnsideElement e = ctx.cyclic_ring()->idempotent(clat.class_of(d));

  const Deflation def_c(ctx.cyclic_ring(), parts_->cyclic_quotient, parts_->cyclic_quotient_ring);
  const BasisPushforward transport(parts_->cyclic_quotient_ring, parts_->identification, qctx.cyclic_ring());
  const Deflation def_g(ctx.group_ring(), group_quotient, qctx.group_ring());

  BurnsideElement cyclic_first = fw_apply(qctx, transport(def_c(e)));
  BurnsideElement group_first = def_g(fw_apply(ctx, e));

  // α^{G/N}(e_{C_k}) is the sum of the idempotents of G/N at subgroups of order k.
  const std::size_t k = clat.order(clat.join(d, cn_)) / clat.order(cn_);
  const SubgroupLattice& qlat = qctx.lattice();
  BurnsideElement cyclic_closed = BurnsideElement::zero(qctx.group_ring());
  for (std::size_t c = 0; c < qlat.class_count(); ++c)
    if (qlat.class_order(ClassId{c}) == k) cyclic_closed += qctx.group_ring()->idempotent(ClassId{c});
  cyclic_closed *= r_constant(ctx, d, cn_);

  BurnsideElement group_closed = BurnsideElement::zero(qctx.group_ring());
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    const SubgroupId h = lat.representative(ClassId{c});
    if (lat.order(h) != clat.order(d)) continue;
    const Subgroup image = group_quotient.projection.image(lat.subgroup(lat.join(h, n_)));
    group_closed += qctx.group_ring()->idempotent(qctx.group_ring()->class_of(image)) * t_constant(ctx, h, n_);
  }

  if (!(cyclic_closed == cyclic_first) || !(group_closed == group_first))
    throw InvariantViolation("closed-form deflation disagrees with the transitive-basis route for |D| = " +
                             std::to_string(clat.order(d)));
  return Routes{std::move(cyclic_first), std::move(group_first), std::move(cyclic_closed), std::move(group_closed)};
}

// ---------------------------------------------------------------------------

MEqualityReport check_m_equality(const FwContext& ctx, SubgroupId n) {
  const SubgroupLattice& lat = ctx.lattice();
  require_normal(lat, n);
  MEqualityReport report;
  for (SubgroupId t : lat.overgroups_of(n)) {
    MEqualityEntry entry{t, m_constant(lat, t, n), m_cyclic(lat.order(t), lat.order(n))};
    if (entry.group_value != entry.cyclic_value) report.holds = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

DefNecessaryReport check_def_necessary(const FwContext& ctx, SubgroupId n) {
  const SubgroupLattice& lat = ctx.lattice();
  DefNecessaryReport r;
  r.commutes = check_commutes(ctx, BisetOp::Deflation, n).commutes;
  r.gcd = check_gcd_property(lat, n);
  r.cyclic = lat.is_cyclic(n);
  r.central = lat.contains(lat.id_of(center(ctx.group_ptr())), n);
  r.m_equal = check_m_equality(ctx, n).holds;
  r.inside_max_cyclic = lat.contains(max_cyclic_intersection(lat), n);
  return r;
}

CheckOutcome check_unique_central_sufficiency(const FwContext& ctx, SubgroupId n, std::size_t p) {
  const SubgroupLattice& lat = ctx.lattice();
  if (!is_prime(p) || lat.order(n) != p) return CheckOutcome::HypothesisNotMet;
  std::size_t of_order_p = 0;
  for (std::size_t s = 0; s < lat.size(); ++s)
    if (lat.order(SubgroupId{s}) == p) ++of_order_p;
  if (of_order_p != 1 || !lat.contains(lat.id_of(center(ctx.group_ptr())), n)) return CheckOutcome::HypothesisNotMet;
  if (!check_m_equality(ctx, n).holds) return CheckOutcome::Holds;
  return check_commutes(ctx, BisetOp::Deflation, n).commutes ? CheckOutcome::Holds : CheckOutcome::Fails;
}

std::string to_string(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::Holds: return "holds";
    case CheckOutcome::Fails: return "fails";
    case CheckOutcome::HypothesisNotMet: return "hypothesis-not-met";
  }
  return "?";
}

}  // namespace fwb
