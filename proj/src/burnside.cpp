#include "fwb/burnside.hpp"

#include <algorithm>

#include "fwb/errors.hpp"

namespace fwb {

namespace {

Rational ratio(std::size_t num, std::size_t den) {
  Rational q(Integer(static_cast<unsigned long>(num)), Integer(static_cast<unsigned long>(den)));
  q.canonicalize();
  return q;
}

std::vector<long long> integer_marks(const SubgroupLattice& lat) {
  const std::size_t r = lat.class_count();
  std::vector<long long> m(r * r, 0);
  // |(G/H)^K| = |N_G(K)| * #{conjugates of K inside H} / |H|
  for (std::size_t h = 0; h < r; ++h) {
    const SubgroupId hid = lat.representative(ClassId{h});
    for (std::size_t k = 0; k <= h; ++k) {
      const ClassId kc{k};
      std::size_t inside = 0;
      for (SubgroupId kid : lat.class_members(kc))
        if (lat.contains(hid, kid)) ++inside;
      const std::size_t nk = lat.order(lat.normalizer(lat.representative(kc)));
      m[h * r + k] = static_cast<long long>(nk * inside / lat.order(hid));
    }
  }
  return m;
}

}  // namespace

RationalMatrix table_of_marks(const SubgroupLattice& lattice) {
  const std::size_t r = lattice.class_count();
  const auto m = integer_marks(lattice);
  RationalMatrix out(r, std::vector<Rational>(r));
  for (std::size_t h = 0; h < r; ++h)
    for (std::size_t k = 0; k < r; ++k) out[h][k] = static_cast<long>(m[h * r + k]);
  return out;
}

// ---------------------------------------------------------------------------

BurnsideRing::BurnsideRing(LatticePtr lattice) : lattice_(std::move(lattice)) {
  const SubgroupLattice& lat = *lattice_;
  marks_ = integer_marks(lat);
  const std::size_t r = rank();
  idempotents_.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    const SubgroupId h = lat.representative(ClassId{c});
    std::vector<Rational> coeffs(r);
    for (SubgroupId k : lat.subgroups_of(h)) {
      const long long mu = lat.moebius(k, h);
      if (mu != 0)
        coeffs[lat.class_of(k).value] += Rational(static_cast<long>(lat.order(k)) * static_cast<long>(mu));
    }
    const Rational scale = ratio(1, lat.order(lat.normalizer(h)));
    for (auto& q : coeffs) q *= scale;
    idempotents_[c] = std::move(coeffs);
  }
}

std::shared_ptr<const BurnsideRing> BurnsideRing::make(LatticePtr lattice) {
  return std::shared_ptr<const BurnsideRing>(new BurnsideRing(std::move(lattice)));
}

std::shared_ptr<const BurnsideRing> BurnsideRing::make(GroupPtr group, std::size_t cap) {
  return make(enumerate_subgroups(std::move(group), cap));
}

RationalMatrix BurnsideRing::marks() const { return table_of_marks(*lattice_); }

BurnsideElement BurnsideRing::idempotent(ClassId c) const {
  return BurnsideElement(shared_from_this(), idempotents_[c.value]);
}

// ---------------------------------------------------------------------------

BurnsideElement::BurnsideElement(RingPtr ring, std::vector<Rational> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != ring_->rank()) throw PreconditionError("coefficient vector has the wrong length");
}

BurnsideElement BurnsideElement::zero(RingPtr ring) {
  const std::size_t r = ring->rank();
  return BurnsideElement(std::move(ring), std::vector<Rational>(r));
}

BurnsideElement BurnsideElement::basis(RingPtr ring, ClassId c) {
  BurnsideElement x = zero(std::move(ring));
  x.coeffs_.at(c.value) = 1;
  return x;
}

BurnsideElement BurnsideElement::one(RingPtr ring) {
  const ClassId top{ring->rank() - 1};
  return basis(std::move(ring), top);
}

bool BurnsideElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

void BurnsideElement::require_same_ring(const BurnsideElement& other) const {
  if (ring_ != other.ring_ && !same_group(ring_->group_ptr(), other.ring_->group_ptr()))
    throw PreconditionError("Burnside elements of different groups");
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& other) {
  require_same_ring(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& other) {
  require_same_ring(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator*=(const Rational& scalar) {
  for (auto& q : coeffs_) q *= scalar;
  return *this;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) { return multiply(a, b); }

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.ring_ != b.ring_ && !same_group(a.ring_->group_ptr(), b.ring_->group_ptr())) return false;
  return a.coeffs_ == b.coeffs_;
}

MarkVector marks_of(const BurnsideElement& x) {
  const BurnsideRing& ring = *x.ring();
  const std::size_t r = ring.rank();
  std::vector<Rational> m(r);
  for (std::size_t h = 0; h < r; ++h) {
    const Rational& c = x.coefficient(ClassId{h});
    if (c == 0) continue;
    for (std::size_t k = 0; k <= h; ++k) {
      const long long v = ring.mark(ClassId{h}, ClassId{k});
      if (v) m[k] += c * static_cast<long>(v);
    }
  }
  return MarkVector{x.ring(), std::move(m)};
}

BurnsideElement element_from_marks(const RingPtr& ring, std::vector<Rational> marks) {
  const std::size_t r = ring->rank();
  if (marks.size() != r) throw PreconditionError("mark vector has the wrong length");
  std::vector<Rational> c(r);
  for (std::size_t k = r; k-- > 0;) {
    Rational rest = marks[k];
    for (std::size_t h = k + 1; h < r; ++h) {
      const long long v = ring->mark(ClassId{h}, ClassId{k});
      if (v && c[h] != 0) rest -= c[h] * static_cast<long>(v);
    }
    c[k] = rest / static_cast<long>(ring->mark(ClassId{k}, ClassId{k}));
  }
  return BurnsideElement(ring, std::move(c));
}

BurnsideElement element_from_marks(const MarkVector& m) { return element_from_marks(m.ring, m.marks); }

BurnsideElement multiply(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.ring() != b.ring() && !same_group(a.ring()->group_ptr(), b.ring()->group_ptr()))
    throw PreconditionError("Burnside elements of different groups");
  auto ma = marks_of(a);
  const auto mb = marks_of(b);
  for (std::size_t i = 0; i < ma.marks.size(); ++i) ma.marks[i] *= mb.marks[i];
  return element_from_marks(a.ring(), std::move(ma.marks));
}

bool is_integral(const BurnsideElement& x) {
  return std::all_of(x.coefficients().begin(), x.coefficients().end(), [](const Rational& q) { return is_integer(q); });
}

BurnsideElement idempotent(const RingPtr& ring, SubgroupId h) { return ring->idempotent(ring->lattice().class_of(h)); }

// ---------------------------------------------------------------------------

GSet::GSet(GroupPtr group, std::size_t size, std::vector<std::size_t> action)
    : group_(std::move(group)), size_(size), action_(std::move(action)) {
  const Group& g = *group_;
  if (action_.size() != g.order() * size_) throw PreconditionError("action table has the wrong size");
  for (std::size_t x = 0; x < size_; ++x)
    if (act(g.identity(), x) != x) throw PreconditionError("identity does not act trivially");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (std::size_t x = 0; x < size_; ++x) {
        if (act(b, x) >= size_) throw PreconditionError("action leaves the set");
        if (act(g.mul(a, b), x) != act(a, act(b, x))) throw PreconditionError("action is not compatible");
      }
}

GSet GSet::cosets(const Subgroup& h) {
  const Group& g = h.group();
  const auto hs = h.elements();
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> coset_of(g.order(), kNone);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kNone) continue;
    for (Element y : hs) coset_of[g.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t n = reps.size();
  std::vector<std::size_t> action(g.order() * n);
  for (Element a = 0; a < g.order(); ++a)
    for (std::size_t i = 0; i < n; ++i) action[a * n + i] = coset_of[g.mul(a, reps[i])];
  GSet out(h.parent(), 0, {});
  out.size_ = n;
  out.action_ = std::move(action);
  return out;
}

Subgroup GSet::stabilizer(std::size_t x) const {
  ElementSet s(group_->order());
  for (Element a = 0; a < group_->order(); ++a)
    if (act(a, x) == x) s.set(a);
  return Subgroup(group_, std::move(s));
}

std::vector<std::vector<std::size_t>> GSet::orbits() const {
  std::vector<char> seen(size_, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < size_; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> orbit;
    for (Element a = 0; a < group_->order(); ++a) {
      const std::size_t y = act(a, x);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

BurnsideElement decompose_gset(const GSet& x, const RingPtr& ring) {
  if (!same_group(x.group(), ring->group_ptr())) throw PreconditionError("G-set and ring over different groups");
  std::vector<Rational> coeffs(ring->rank());
  for (const auto& orbit : x.orbits()) coeffs[ring->class_of(x.stabilizer(orbit.front())).value] += 1;
  return BurnsideElement(ring, std::move(coeffs));
}

// ---------------------------------------------------------------------------

namespace {

void require_ring(const BurnsideElement& x, const RingPtr& ring) {
  if (x.ring() != ring && !same_group(x.ring()->group_ptr(), ring->group_ptr()))
    throw PreconditionError("element does not belong to the operation's source group");
}

BurnsideElement combine(const BurnsideElement& x, const std::vector<BurnsideElement>& images, const RingPtr& to) {
  auto out = BurnsideElement::zero(to);
  for (std::size_t c = 0; c < images.size(); ++c) {
    const Rational& q = x.coefficient(ClassId{c});
    if (q != 0) out += images[c] * q;
  }
  return out;
}

BurnsideElement combine(const BurnsideElement& x, const std::vector<ClassId>& images, const RingPtr& to) {
  std::vector<Rational> coeffs(to->rank());
  for (std::size_t c = 0; c < images.size(); ++c) coeffs[images[c].value] += x.coefficient(ClassId{c});
  return BurnsideElement(to, std::move(coeffs));
}

}  // namespace

Restriction::Restriction(RingPtr from, const Homomorphism& embedding, RingPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (!same_group(embedding.target, from_->group_ptr()) || !same_group(embedding.source, to_->group_ptr()))
    throw PreconditionError("restriction rings do not match the embedding");
  if (!embedding.is_injective()) throw PreconditionError("restriction needs an injective map");
  const Group& h = *to_->group_ptr();
  const SubgroupLattice& lat = from_->lattice();
  for (std::size_t c = 0; c < from_->rank(); ++c) {
    const GSet x = GSet::cosets(lat.subgroup(lat.representative(ClassId{c})));
    std::vector<std::size_t> action(h.order() * x.size());
    for (Element a = 0; a < h.order(); ++a)
      for (std::size_t p = 0; p < x.size(); ++p) action[a * x.size() + p] = x.act(embedding(a), p);
    images_.push_back(decompose_gset(GSet(to_->group_ptr(), x.size(), std::move(action)), to_));
  }
}

BurnsideElement Restriction::operator()(const BurnsideElement& x) const {
  require_ring(x, from_);
  return combine(x, images_, to_);
}

BasisPushforward::BasisPushforward(RingPtr from, const Homomorphism& map, RingPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (!same_group(map.source, from_->group_ptr()) || !same_group(map.target, to_->group_ptr()))
    throw PreconditionError("rings do not match the group map");
  const SubgroupLattice& lat = from_->lattice();
  for (std::size_t c = 0; c < from_->rank(); ++c)
    images_.push_back(to_->class_of(map.image(lat.subgroup(lat.representative(ClassId{c})))));
}

BurnsideElement BasisPushforward::operator()(const BurnsideElement& x) const {
  require_ring(x, from_);
  return combine(x, images_, to_);
}

Induction::Induction(RingPtr from, const Homomorphism& embedding, RingPtr to)
    : BasisPushforward((embedding.is_injective() ? from : throw PreconditionError("induction needs an injective map")),
                       embedding, std::move(to)) {}

Deflation::Deflation(RingPtr from, const QuotientMap& q, RingPtr to)
    : BasisPushforward(std::move(from), q.projection, std::move(to)) {}

Inflation::Inflation(RingPtr from, const QuotientMap& q, RingPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (!same_group(q.target(), from_->group_ptr()) || !same_group(q.source(), to_->group_ptr()))
    throw PreconditionError("inflation rings do not match the quotient");
  const SubgroupLattice& lat = from_->lattice();
  for (std::size_t c = 0; c < from_->rank(); ++c)
    images_.push_back(to_->class_of(q.projection.preimage(lat.subgroup(lat.representative(ClassId{c})))));
}

BurnsideElement Inflation::operator()(const BurnsideElement& x) const {
  require_ring(x, from_);
  return combine(x, images_, to_);
}

FixedPoints::FixedPoints(RingPtr from, const QuotientMap& q, RingPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (!same_group(q.source(), from_->group_ptr()) || !same_group(q.target(), to_->group_ptr()))
    throw PreconditionError("fixed-point rings do not match the quotient");
  const SubgroupLattice& lat = from_->lattice();
  const Group& quotient = *to_->group_ptr();
  const auto kernel = q.kernel.elements();
  for (std::size_t c = 0; c < from_->rank(); ++c) {
    const GSet x = GSet::cosets(lat.subgroup(lat.representative(ClassId{c})));
    std::vector<std::size_t> fixed;
    std::vector<std::size_t> local(x.size(), 0);
    for (std::size_t p = 0; p < x.size(); ++p) {
      const bool is_fixed = std::all_of(kernel.begin(), kernel.end(), [&](Element n) { return x.act(n, p) == p; });
      if (is_fixed) {
        local[p] = fixed.size();
        fixed.push_back(p);
      }
    }
    if (fixed.empty()) {
      images_.push_back(BurnsideElement::zero(to_));
      continue;
    }
    std::vector<std::size_t> action(quotient.order() * fixed.size());
    for (Element a = 0; a < quotient.order(); ++a)
      for (std::size_t i = 0; i < fixed.size(); ++i)
        action[a * fixed.size() + i] = local[x.act(q.representatives[a], fixed[i])];
    images_.push_back(decompose_gset(GSet(to_->group_ptr(), fixed.size(), std::move(action)), to_));
  }
}

BurnsideElement FixedPoints::operator()(const BurnsideElement& x) const {
  require_ring(x, from_);
  return combine(x, images_, to_);
}

TensorInduction::TensorInduction(RingPtr from, const Homomorphism& embedding, RingPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (!same_group(embedding.source, from_->group_ptr()) || !same_group(embedding.target, to_->group_ptr()))
    throw PreconditionError("tensor induction rings do not match the embedding");
  if (!embedding.is_injective()) throw PreconditionError("tensor induction needs an injective map");
  const Group& g = to_->group();
  const Subgroup h_image = embedding.image(Subgroup::whole(embedding.source));
  std::vector<Element> local(g.order(), 0);
  for (Element a = 0; a < embedding.source->order(); ++a) local[embedding(a)] = a;

  const SubgroupLattice& lat = to_->lattice();
  factors_.resize(to_->rank());
  for (std::size_t c = 0; c < to_->rank(); ++c) {
    const Subgroup& k = lat.subgroup(lat.representative(ClassId{c}));
    const auto ks = k.elements();
    for (const DoubleCoset& dc : double_cosets(g, k, h_image)) {
      const Element t = dc.representative;
      // K^t ∩ H = t^{-1} K t ∩ H, pulled back into H.
      ElementSet meet(embedding.source->order());
      for (Element x : ks) {
        const Element y = g.conjugate(g.inv(t), x);
        if (h_image.contains(y)) meet.set(local[y]);
      }
      factors_[c].push_back(from_->class_of(Subgroup(embedding.source, std::move(meet))));
    }
  }
}

BurnsideElement TensorInduction::operator()(const BurnsideElement& a) const {
  require_ring(a, from_);
  const MarkVector ma = marks_of(a);
  std::vector<Rational> marks(to_->rank());
  for (std::size_t c = 0; c < factors_.size(); ++c) {
    Rational m = 1;
    for (ClassId f : factors_[c]) m *= ma.marks[f.value];
    marks[c] = m;
  }
  return element_from_marks(to_, std::move(marks));
}

// ---------------------------------------------------------------------------

BurnsideElement restrict(const BurnsideElement& x, const Subgroup& h) {
  const Homomorphism emb = subgroup_embedding(h);
  return Restriction(x.ring(), emb, BurnsideRing::make(emb.source))(x);
}

BurnsideElement restrict(const BurnsideElement& x, const Homomorphism& embedding, const RingPtr& to) {
  return Restriction(x.ring(), embedding, to)(x);
}

BurnsideElement induce(const BurnsideElement& x, const Homomorphism& embedding, const RingPtr& to) {
  return Induction(x.ring(), embedding, to)(x);
}

BurnsideElement inflate(const BurnsideElement& x, const QuotientMap& q, const RingPtr& to) {
  return Inflation(x.ring(), q, to)(x);
}

BurnsideElement deflate(const BurnsideElement& x, const QuotientMap& q, const RingPtr& to) {
  return Deflation(x.ring(), q, to)(x);
}

BurnsideElement fixed_points(const BurnsideElement& x, const QuotientMap& q, const RingPtr& to) {
  return FixedPoints(x.ring(), q, to)(x);
}

BurnsideElement tensor_induce(const BurnsideElement& a, const Homomorphism& embedding, const RingPtr& to) {
  return TensorInduction(a.ring(), embedding, to)(a);
}

BurnsideElement deflate_idempotent(const RingPtr& ring, ClassId h, const QuotientMap& q, const RingPtr& to) {
  if (!same_group(q.source(), ring->group_ptr()) || !same_group(q.target(), to->group_ptr()))
    throw PreconditionError("deflate_idempotent rings do not match the quotient");
  const SubgroupLattice& lat = ring->lattice();
  const SubgroupId hid = lat.representative(h);
  const SubgroupId nid = lat.id_of(q.kernel);
  const SubgroupId hn = lat.id_of(product(lat.subgroup(hid), q.kernel));
  const Rational factor = ratio(lat.order(lat.normalizer(hn)), lat.order(hn)) /
                          ratio(lat.order(lat.normalizer(hid)), lat.order(hid)) *
                          m_constant(lat, hid, lat.meet(hid, nid));
  return to->idempotent(to->class_of(q.projection.image(lat.subgroup(hn)))) * factor;
}

}  // namespace fwb
