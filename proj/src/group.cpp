#include "fwb/group.hpp"

#include <algorithm>
#include <numeric>

#include "fwb/errors.hpp"

namespace fwb {

Group::Group(std::size_t order, std::vector<Element> table, std::string label)
    : order_(order), table_(std::move(table)), inverse_(order), label_(std::move(label)) {
  if (order_ == 0) throw InvalidParameter("group order must be positive");
  if (table_.size() != order_ * order_) throw InvalidParameter("multiplication table has wrong size");

  std::vector<char> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      const Element x = table_[a * order_ + b];
      if (x >= order_ || seen[x]) throw InvalidParameter("multiplication table row is not a permutation");
      seen[x] = 1;
    }
  }
  for (std::size_t b = 0; b < order_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < order_; ++a) {
      const Element x = table_[a * order_ + b];
      if (seen[x]) throw InvalidParameter("multiplication table column is not a permutation");
      seen[x] = 1;
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    bool neutral = true;
    for (std::size_t a = 0; a < order_ && neutral; ++a)
      neutral = table_[e * order_ + a] == a && table_[a * order_ + e] == a;
    if (neutral) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw InvalidParameter("multiplication table has no identity");

  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == identity_) {
        if (table_[b * order_ + a] != identity_) throw InvalidParameter("inverses are not two-sided");
        inverse_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
}

Element Group::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t Group::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

bool Group::is_associative() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) {
      const Element ab = table_[a * order_ + b];
      for (std::size_t c = 0; c < order_; ++c)
        if (table_[ab * order_ + c] != table_[a * order_ + table_[b * order_ + c]]) return false;
    }
  return true;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || (a && b && *a == *b); }

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, ElementSet members, Unchecked)
    : parent_(std::move(parent)), members_(std::move(members)), order_(members_.count()) {}

Subgroup::Subgroup(GroupPtr parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)), order_(members_.count()) {
  const Group& g = *parent_;
  if (members_.universe() != g.order()) throw PreconditionError("element set does not match parent group");
  if (!members_.test(g.identity())) throw PreconditionError("subset does not contain the identity");
  const auto elems = members_.members();
  for (Element a : elems) {
    if (!members_.test(g.inv(a))) throw PreconditionError("subset not closed under inverses");
    for (Element b : elems)
      if (!members_.test(g.mul(a, b))) throw PreconditionError("subset not closed under multiplication");
  }
  if (g.order() % order_ != 0) throw InvariantViolation("subgroup order does not divide group order");
}

Subgroup closure(GroupPtr parent, const ElementSet& seed) {
  const Group& g = *parent;
  std::vector<Element> gens = seed.members();
  ElementSet set(g.order());
  std::vector<Element> queue{g.identity()};
  set.set(g.identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (!set.test(y)) {
        set.set(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup(std::move(parent), std::move(set), Subgroup::Unchecked{});
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const Element> generators) {
  ElementSet seed(parent->order());
  for (Element g : generators) seed.set(g);
  return closure(std::move(parent), seed);
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  ElementSet s(parent->order());
  s.set(parent->identity());
  return Subgroup(std::move(parent), std::move(s), Unchecked{});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  ElementSet s(parent->order());
  for (Element g = 0; g < parent->order(); ++g) s.set(g);
  return Subgroup(std::move(parent), std::move(s), Unchecked{});
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  return Subgroup(a.parent(), a.members() & b.members(), Subgroup::Unchecked{});
}

Subgroup join(const Subgroup& a, const Subgroup& b) { return closure(a.parent(), a.members() | b.members()); }

Subgroup product(const Subgroup& h, const Subgroup& k) {
  const Group& g = h.group();
  ElementSet s(g.order());
  for (Element x : h.elements())
    for (Element y : k.elements()) s.set(g.mul(x, y));
  return Subgroup(h.parent(), std::move(s));
}

Subgroup center(const GroupPtr& g) {
  ElementSet s(g->order());
  for (Element z = 0; z < g->order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g->order() && central; ++x) central = g->mul(z, x) == g->mul(x, z);
    if (central) s.set(z);
  }
  return Subgroup(g, std::move(s));
}

Subgroup conjugate_subgroup(const Subgroup& h, Element a) {
  const Group& g = h.group();
  ElementSet s(g.order());
  for (Element x : h.elements()) s.set(g.conjugate(a, x));
  return Subgroup(h.parent(), std::move(s));
}

bool is_cyclic(const Subgroup& h) {
  const Group& g = h.group();
  for (Element x : h.elements())
    if (g.element_order(x) == h.order()) return true;
  return false;
}

bool is_normal_in(const Subgroup& k, const Subgroup& l) {
  const Group& g = k.group();
  const auto ks = k.elements();
  for (Element a : l.elements())
    for (Element x : ks)
      if (!k.contains(g.conjugate(a, x))) return false;
  return true;
}

bool is_normal(const Subgroup& h) { return is_normal_in(h, Subgroup::whole(h.parent())); }

// ---------------------------------------------------------------------------

Subgroup Homomorphism::image(const Subgroup& h) const {
  ElementSet s(target->order());
  for (Element x : h.elements()) s.set(images[x]);
  return Subgroup(target, std::move(s));
}

Subgroup Homomorphism::preimage(const Subgroup& k) const {
  ElementSet s(source->order());
  for (Element x = 0; x < source->order(); ++x)
    if (k.contains(images[x])) s.set(x);
  return Subgroup(source, std::move(s));
}

bool Homomorphism::is_homomorphism() const {
  const Group& s = *source;
  const Group& t = *target;
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      if (images[s.mul(a, b)] != t.mul(images[a], images[b])) return false;
  return true;
}

bool Homomorphism::is_injective() const {
  std::vector<char> seen(target->order());
  for (Element x : images) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<char> seen(target->order());
  for (Element x : images) seen[x] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Homomorphism Homomorphism::inverse() const {
  if (source->order() != target->order() || !is_injective())
    throw PreconditionError("inverse of a non-bijective map");
  Homomorphism inv{target, source, std::vector<Element>(target->order())};
  for (Element x = 0; x < source->order(); ++x) inv.images[images[x]] = x;
  return inv;
}

QuotientMap quotient_group(const Subgroup& n) {
  if (!is_normal(n)) throw PreconditionError("quotient by a non-normal subgroup");
  const Group& g = n.group();
  const auto kernel = n.elements();
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> coset_of(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto idx = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : kernel) coset_of[g.mul(x, k)] = idx;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset_of[g.mul(reps[i], reps[j])];
  auto target = std::make_shared<const Group>(m, std::move(table), g.label() + "/N");
  return QuotientMap{Homomorphism{n.parent(), std::move(target), std::move(coset_of)}, n, std::move(reps)};
}

Homomorphism subgroup_embedding(const Subgroup& h) {
  const Group& g = h.group();
  const auto elems = h.elements();
  const std::size_t m = elems.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[elems[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = local[g.mul(elems[i], elems[j])];
  auto source = std::make_shared<const Group>(m, std::move(table), g.label() + "|H");
  return Homomorphism{std::move(source), h.parent(), elems};
}

Homomorphism cyclic_embedding(const GroupPtr& small, const GroupPtr& big) {
  const std::size_t m = small->order();
  const std::size_t n = big->order();
  if (n % m != 0) throw PreconditionError("cyclic embedding needs m | n");
  Homomorphism h{small, big, std::vector<Element>(m)};
  for (std::size_t k = 0; k < m; ++k) h.images[k] = static_cast<Element>(k * (n / m));
  if (!h.is_homomorphism()) throw PreconditionError("cyclic embedding between non-standard cyclic groups");
  return h;
}

Homomorphism cyclic_quotient_identification(const QuotientMap& q, const GroupPtr& cyclic_target,
                                             Element generator) {
  const Group& c = *q.source();
  const std::size_t m = q.target()->order();
  if (cyclic_target->order() != m) throw PreconditionError("cyclic target has the wrong order");
  if (generator >= c.order() || c.element_order(generator) != c.order())
    throw PreconditionError("element does not generate the cyclic group");
  // Cyclic target element k is the k-th power of element 1 (standard construction).
  Homomorphism iso{q.target(), cyclic_target, std::vector<Element>(m)};
  Element x = c.identity();
  Element t = cyclic_target->identity();
  const Element t_gen = cyclic_target->order() > 1 ? 1 : 0;
  for (std::size_t k = 0; k < m; ++k) {
    iso.images[q.projection(x)] = t;
    x = c.mul(x, generator);
    t = cyclic_target->mul(t, t_gen);
  }
  if (!iso.is_injective() || !iso.is_homomorphism())
    throw InvariantViolation("cyclic quotient identification is not an isomorphism");
  return iso;
}

}  // namespace fwb
