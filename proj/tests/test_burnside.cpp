#include <doctest.h>

#include <random>

#include "fwb/burnside.hpp"
#include "fwb/errors.hpp"
#include "fwb/group_spec.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fwb;

namespace {

RingPtr ring_of(const std::string& spec) { return BurnsideRing::make(construct_group(spec)); }

ClassId class_by_order(const RingPtr& ring, std::size_t order, std::size_t index = 0) {
  for (std::size_t c = 0; c < ring->rank(); ++c)
    if (ring->lattice().class_order(ClassId{c}) == order && index-- == 0) return ClassId{c};
  FAIL("no class of order " << order);
  return ClassId{};
}

BurnsideElement element(const RingPtr& ring, std::vector<long> coeffs) {
  std::vector<Rational> c(coeffs.begin(), coeffs.end());
  return BurnsideElement(ring, std::move(c));
}

std::vector<Rational> row(std::initializer_list<long> xs) { return std::vector<Rational>(xs.begin(), xs.end()); }

}  // namespace

TEST_CASE("tables of marks") {
  CHECK(table_of_marks(*enumerate_subgroups(construct_group("C1"))) == RationalMatrix{row({1})});
  CHECK(table_of_marks(*enumerate_subgroups(construct_group("C2"))) == RationalMatrix{row({2, 0}), row({1, 1})});
  const RationalMatrix s3 = table_of_marks(*enumerate_subgroups(construct_group("S3")));
  CHECK(s3 == RationalMatrix{row({6, 0, 0, 0}), row({3, 1, 0, 0}), row({2, 0, 2, 0}), row({1, 1, 1, 1})});
}

TEST_CASE("tables of marks match explicit coset counts") {
  for (const auto& spec : testing_support::small_catalog(60)) {
    CAPTURE(spec);
    const RingPtr ring = ring_of(spec);
    const auto& lat = ring->lattice();
    for (std::size_t h = 0; h < ring->rank(); ++h) {
      const auto hm = oracle::members_of(lat.subgroup(lat.representative(ClassId{h})));
      for (std::size_t k = 0; k < ring->rank(); ++k) {
        const auto km = oracle::members_of(lat.subgroup(lat.representative(ClassId{k})));
        CHECK(ring->mark(ClassId{h}, ClassId{k}) == oracle::fixed_cosets(ring->group(), hm, km));
      }
      // diagonal is the normalizer index
      const SubgroupId rep = lat.representative(ClassId{h});
      CHECK(ring->mark(ClassId{h}, ClassId{h}) == static_cast<long long>(lat.order(lat.normalizer(rep)) / lat.order(rep)));
    }
  }
}

TEST_CASE("marks and the transitive basis") {
  const RingPtr s3 = ring_of("S3");
  CHECK(marks_of(BurnsideElement::one(s3)).marks == row({1, 1, 1, 1}));
  const auto x = element_from_marks(s3, row({3, 3, 0, 0}));
  CHECK(x == element(s3, {-1, 3, 0, 0}));
  const auto free = BurnsideElement::basis(s3, ClassId{0});
  CHECK(free * free == free * Rational(6));
  CHECK(marks_of(free).marks[0] == 6);
}

TEST_CASE("marks conversion round trips and multiplication is pointwise") {
  std::mt19937_64 rng(7);
  for (const auto& spec : testing_support::catalog()) {
    CAPTURE(spec);
    const RingPtr ring = testing_support::context(spec)->group_ring();
    for (int i = 0; i < 5; ++i) {
      const auto a = testing_support::random_rational(ring, rng);
      const auto b = testing_support::random_rational(ring, rng);
      CHECK(element_from_marks(marks_of(a)) == a);
      const auto ma = marks_of(a).marks;
      const auto mb = marks_of(b).marks;
      const auto mab = marks_of(a * b).marks;
      for (std::size_t k = 0; k < ma.size(); ++k) CHECK(mab[k] == ma[k] * mb[k]);
    }
  }
}

TEST_CASE("marks agree with explicit counts on random integral elements") {
  std::mt19937_64 rng(11);
  for (const auto& spec : testing_support::small_catalog(24)) {
    CAPTURE(spec);
    const RingPtr ring = ring_of(spec);
    const auto x = testing_support::random_integral(ring, rng);
    CHECK(marks_of(x).marks == oracle::marks(x));
    CHECK(is_integral(x));
  }
}

TEST_CASE("idempotents") {
  const RingPtr c2 = ring_of("C2");
  const auto e = c2->idempotent(ClassId{1});
  CHECK(e == BurnsideElement(c2, {Rational(-1, 2), Rational(1)}));
  CHECK_FALSE(is_integral(e));
  const RingPtr s3 = ring_of("S3");
  CHECK(marks_of(s3->idempotent(ClassId{3})).marks == row({0, 0, 0, 1}));
  CHECK(idempotent(s3, s3->lattice().whole()) == s3->idempotent(ClassId{3}));
}

TEST_CASE("idempotent system on the catalog") {
  for (const auto& spec : testing_support::catalog()) {
    CAPTURE(spec);
    const RingPtr ring = testing_support::context(spec)->group_ring();
    auto sum = BurnsideElement::zero(ring);
    for (std::size_t h = 0; h < ring->rank(); ++h) {
      const auto eh = ring->idempotent(ClassId{h});
      const auto marks = marks_of(eh).marks;
      for (std::size_t k = 0; k < marks.size(); ++k) CHECK(marks[k] == (k == h ? 1 : 0));
      sum += eh;
    }
    CHECK(sum == BurnsideElement::one(ring));
  }
}

TEST_CASE("G-sets") {
  const GroupPtr g = construct_group("S3");
  const RingPtr ring = BurnsideRing::make(g);
  const auto& lat = ring->lattice();
  for (std::size_t c = 0; c < ring->rank(); ++c) {
    const GSet x = GSet::cosets(lat.subgroup(lat.representative(ClassId{c})));
    CHECK(decompose_gset(x, ring) == BurnsideElement::basis(ring, ClassId{c}));
  }
  // one point
  CHECK(decompose_gset(GSet(g, 1, std::vector<std::size_t>(6, 0)), ring) == BurnsideElement::one(ring));
  // regular action
  std::vector<std::size_t> regular(36);
  for (Element a = 0; a < 6; ++a)
    for (Element x = 0; x < 6; ++x) regular[a * 6 + x] = g->mul(a, x);
  CHECK(decompose_gset(GSet(g, 6, regular), ring) == BurnsideElement::basis(ring, ClassId{0}));
  // not an action: every element swaps two points
  std::vector<std::size_t> bad(12);
  for (Element a = 0; a < 6; ++a) {
    bad[a * 2] = a == g->identity() ? 0 : 1;
    bad[a * 2 + 1] = a == g->identity() ? 1 : 0;
  }
  CHECK_THROWS_AS(GSet(g, 2, bad), PreconditionError);
}

TEST_CASE("restriction, induction, inflation, deflation, fixed points on small cases") {
  SUBCASE("free restriction") {
    const RingPtr c4 = ring_of("C4");
    const Subgroup c2 = c4->lattice().subgroup(c4->lattice().representative(ClassId{1}));
    const auto r = restrict(BurnsideElement::basis(c4, ClassId{0}), c2);
    CHECK(r.coefficients() == row({2, 0}));
  }
  SUBCASE("deflation by the trivial subgroup is the identity up to relabelling") {
    const RingPtr s4 = testing_support::context("S4")->group_ring();
    const QuotientMap q = quotient_group(Subgroup::trivial(s4->group_ptr()));
    const RingPtr target = BurnsideRing::make(q.target());
    std::mt19937_64 rng(3);
    const auto x = testing_support::random_rational(s4, rng);
    CHECK(deflate(x, q, target).coefficients() == x.coefficients());
  }
  SUBCASE("fixed points of S3/C2 under C3 are empty") {
    const RingPtr s3 = ring_of("S3");
    const auto& lat = s3->lattice();
    const QuotientMap q = quotient_group(lat.subgroup(lat.representative(class_by_order(s3, 3))));
    const RingPtr c2 = BurnsideRing::make(q.target());
    CHECK(fixed_points(BurnsideElement::basis(s3, class_by_order(s3, 2)), q, c2).is_zero());
    CHECK(fixed_points(BurnsideElement::basis(s3, class_by_order(s3, 3)), q, c2) == BurnsideElement::basis(c2, ClassId{0}));
  }
  SUBCASE("mismatched rings are rejected") {
    const RingPtr s3 = ring_of("S3");
    const RingPtr c6 = ring_of("C6");
    CHECK_THROWS_AS(BurnsideElement::one(s3) + BurnsideElement::one(c6), PreconditionError);
    CHECK_FALSE(BurnsideElement::one(s3) == BurnsideElement::one(c6));
  }
}

TEST_CASE("operations match set-level oracles on every basis element") {
  for (const auto& spec : testing_support::small_catalog(24)) {
    CAPTURE(spec);
    const RingPtr ring = testing_support::context(spec)->group_ring();
    const auto& lat = ring->lattice();
    const Group& g = ring->group();
    for (std::size_t n = 0; n < lat.size(); ++n) {
      if (!lat.is_normal(SubgroupId{n})) continue;
      const Subgroup& ns = lat.subgroup(SubgroupId{n});
      const QuotientMap q = quotient_group(ns);
      const RingPtr qring = BurnsideRing::make(q.target());
      const Deflation def(ring, q, qring);
      const Inflation inf(qring, q, ring);
      for (std::size_t c = 0; c < ring->rank(); ++c) {
        const Subgroup& h = lat.subgroup(lat.representative(ClassId{c}));
        const auto stab = oracle::deflation_stabilizer(g, oracle::members_of(h), oracle::members_of(ns));
        ElementSet s(g.order());
        for (Element a : stab) s.set(a);
        const auto expected = BurnsideElement::basis(qring, qring->class_of(q.projection.image(Subgroup(ring->group_ptr(), s))));
        CHECK(def(BurnsideElement::basis(ring, ClassId{c})) == expected);
      }
      // Def ∘ Inf = Id
      for (std::size_t c = 0; c < qring->rank(); ++c) {
        const auto x = BurnsideElement::basis(qring, ClassId{c});
        CHECK(def(inf(x)) == x);
      }
    }
  }
}

TEST_CASE("closed-form deflation of idempotents") {
  SUBCASE("C4, H = N = C2") {
    const RingPtr c4 = ring_of("C4");
    const auto& lat = c4->lattice();
    const QuotientMap q = quotient_group(lat.subgroup(lat.representative(ClassId{1})));
    const RingPtr c2 = BurnsideRing::make(q.target());
    CHECK(deflate_idempotent(c4, ClassId{1}, q, c2) == c2->idempotent(ClassId{0}) * Rational(1, 2));
  }
  SUBCASE("trivial N leaves the idempotent unchanged") {
    const RingPtr s4 = testing_support::context("S4")->group_ring();
    const QuotientMap q = quotient_group(Subgroup::trivial(s4->group_ptr()));
    const RingPtr t = BurnsideRing::make(q.target());
    for (std::size_t c = 0; c < s4->rank(); ++c)
      CHECK(deflate_idempotent(s4, ClassId{c}, q, t).coefficients() == s4->idempotent(ClassId{c}).coefficients());
  }
  SUBCASE("agrees with the basis route on the catalog") {
    for (const auto& spec : testing_support::catalog()) {
      CAPTURE(spec);
      const RingPtr ring = testing_support::context(spec)->group_ring();
      const auto& lat = ring->lattice();
      for (std::size_t n = 0; n < lat.size(); ++n) {
        if (!lat.is_normal(SubgroupId{n})) continue;
        const QuotientMap q = quotient_group(lat.subgroup(SubgroupId{n}));
        const RingPtr qring = BurnsideRing::make(q.target());
        const Deflation def(ring, q, qring);
        for (std::size_t c = 0; c < ring->rank(); ++c)
          CHECK(deflate_idempotent(ring, ClassId{c}, q, qring) == def(ring->idempotent(ClassId{c})));
      }
    }
  }
}

TEST_CASE("restriction to a subgroup then deflation commutes with deflation then restriction") {
  for (const char* spec : {"S4", "D12", "Q8", "SL(2,3)", "C2xC4", "Dic12"}) {
    CAPTURE(spec);
    const RingPtr ring = testing_support::context(spec)->group_ring();
    const auto& lat = ring->lattice();
    std::mt19937_64 rng(5);
    for (std::size_t n = 0; n < lat.size(); ++n) {
      if (!lat.is_normal(SubgroupId{n})) continue;
      const Subgroup& ns = lat.subgroup(SubgroupId{n});
      const QuotientMap q = quotient_group(ns);
      const RingPtr qring = BurnsideRing::make(q.target());
      for (SubgroupId t : lat.overgroups_of(SubgroupId{n})) {
        const Subgroup& ts = lat.subgroup(t);
        const auto x = testing_support::random_rational(ring, rng);
        // Def_{T/N} Res_T
        const Homomorphism t_emb = subgroup_embedding(ts);
        const RingPtr t_ring = BurnsideRing::make(t_emb.source);
        const Subgroup n_in_t = t_emb.preimage(ns);
        const QuotientMap tq = quotient_group(n_in_t);
        const RingPtr tq_ring = BurnsideRing::make(tq.target());
        const auto lhs = deflate(restrict(x, t_emb, t_ring), tq, tq_ring);
        // Res_{T/N} Def, along T/N -> G/N
        Homomorphism tn_to_gn{tq.target(), q.target(), std::vector<Element>(tq.target()->order())};
        for (Element a = 0; a < tq.target()->order(); ++a)
          tn_to_gn.images[a] = q.projection(t_emb(tq.representatives[a]));
        REQUIRE(tn_to_gn.is_homomorphism());
        const auto rhs = restrict(deflate(x, q, qring), tn_to_gn, tq_ring);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("Mackey: restriction after induction in a cyclic group multiplies by the index") {
  for (std::size_t n : {6u, 12u, 24u}) {
    const RingPtr big = BurnsideRing::make(construct_group("C" + std::to_string(n)));
    for (std::size_t t = 1; t <= n; ++t) {
      if (n % t) continue;
      const GroupPtr small = construct_group("C" + std::to_string(t));
      const RingPtr sring = BurnsideRing::make(small);
      const Homomorphism emb = cyclic_embedding(small, big->group_ptr());
      std::mt19937_64 rng(t);
      const auto x = testing_support::random_rational(sring, rng);
      CHECK(restrict(induce(x, emb, big), emb, sring) == x * Rational(static_cast<long>(n / t)));
    }
  }
}

TEST_CASE("tensor induction") {
  SUBCASE("small values") {
    const RingPtr c2 = ring_of("C2");
    const RingPtr c4 = ring_of("C4");
    const Homomorphism emb = cyclic_embedding(c2->group_ptr(), c4->group_ptr());
    const auto t = tensor_induce(BurnsideElement::basis(c2, ClassId{0}), emb, c4);
    CHECK(t == BurnsideElement::basis(c4, ClassId{0}));
    CHECK(marks_of(t).marks == row({4, 0, 0}));
    CHECK(tensor_induce(BurnsideElement::one(c2), emb, c4) == BurnsideElement::one(c4));
  }
  SUBCASE("multiplicative and matching the map-space oracle") {
    std::mt19937_64 rng(13);
    for (const auto& spec : testing_support::small_catalog(12)) {
      CAPTURE(spec);
      const RingPtr ring = testing_support::context(spec)->group_ring();
      const auto& lat = ring->lattice();
      const Group& g = ring->group();
      for (std::size_t hc = 0; hc < ring->rank(); ++hc) {
        const Subgroup& h = lat.subgroup(lat.representative(ClassId{hc}));
        const Homomorphism emb = subgroup_embedding(h);
        const RingPtr hring = BurnsideRing::make(emb.source);
        const TensorInduction ten(hring, emb, ring);
        const auto a = testing_support::random_integral(hring, rng, 2);
        const auto b = testing_support::random_integral(hring, rng, 2);
        CHECK(ten(a * b) == ten(a) * ten(b));
        for (std::size_t lc = 0; lc < hring->rank(); ++lc) {
          const auto& hl = hring->lattice();
          const Subgroup l = emb.image(hl.subgroup(hl.representative(ClassId{lc})));
          const auto marks = marks_of(ten(BurnsideElement::basis(hring, ClassId{lc}))).marks;
          for (std::size_t kc = 0; kc < ring->rank(); ++kc) {
            const auto km = oracle::members_of(lat.subgroup(lat.representative(ClassId{kc})));
            CHECK(marks[kc] == oracle::tensor_fixed_points(g, oracle::members_of(h), oracle::members_of(l), km));
          }
        }
      }
    }
  }
}

TEST_CASE("tensor-induction marks do not depend on double-coset representatives") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"S4", "SL(2,3)", "D12", "A4"}) {
    CAPTURE(spec);
    const RingPtr ring = testing_support::context(spec)->group_ring();
    const auto& lat = ring->lattice();
    const Group& g = ring->group();
    for (std::size_t hc = 0; hc < ring->rank(); ++hc) {
      const Subgroup& h = lat.subgroup(lat.representative(ClassId{hc}));
      const Homomorphism emb = subgroup_embedding(h);
      const RingPtr hring = BurnsideRing::make(emb.source);
      const auto a = testing_support::random_integral(hring, rng, 2);
      const auto ma = marks_of(a).marks;
      const auto expected = marks_of(tensor_induce(a, emb, ring)).marks;
      std::vector<Element> local(g.order(), 0);
      for (Element x = 0; x < emb.source->order(); ++x) local[emb(x)] = x;
      for (std::size_t kc = 0; kc < ring->rank(); ++kc) {
        const Subgroup& k = lat.subgroup(lat.representative(ClassId{kc}));
        Rational product = 1;
        for (const auto& dc : double_cosets(g, k, h)) {
          // a different representative of the same double coset: k0 * rep * h0
          std::uniform_int_distribution<std::size_t> pick_k(0, k.order() - 1), pick_h(0, h.order() - 1);
          const Element t = g.mul(g.mul(k.elements()[pick_k(rng)], dc.representative), h.elements()[pick_h(rng)]);
          ElementSet meet(emb.source->order());
          for (Element x : k.elements()) {
            const Element y = g.conjugate(g.inv(t), x);
            if (h.contains(y)) meet.set(local[y]);
          }
          product *= ma[hring->class_of(Subgroup(emb.source, meet)).value];
        }
        CHECK(product == expected[kc]);
      }
    }
  }
}
