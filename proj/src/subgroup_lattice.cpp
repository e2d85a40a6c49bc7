#include "fwb/subgroup_lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fwb/arith.hpp"
#include "fwb/errors.hpp"

namespace fwb {

namespace {

struct Candidate {
  ElementSet members;
  std::vector<Element> generators;
};

ElementSet generate(const Group& g, const std::vector<Element>& gens) {
  ElementSet set(g.order());
  std::vector<Element> queue{g.identity()};
  set.set(g.identity());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(queue[i], s);
      if (!set.test(y)) {
        set.set(y);
        queue.push_back(y);
      }
    }
  return set;
}

}  // namespace

LatticePtr SubgroupLattice::build(GroupPtr group, std::size_t cap) {
  const Group& g = *group;
  if (g.order() > cap)
    throw CapExceeded("group of order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));

  // Cyclic subgroups, then closure under pairwise joins.
  std::vector<Candidate> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> gens;
    if (x != g.identity()) gens.push_back(x);
    ElementSet s = generate(g, gens);
    if (seen.emplace(s, found.size()).second) found.push_back({std::move(s), std::move(gens)});
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[j].members.is_subset_of(found[i].members) || found[i].members.is_subset_of(found[j].members))
        continue;
      std::vector<Element> gens = found[i].generators;
      for (Element y : found[j].generators)
        if (!found[i].members.test(y)) gens.push_back(y);
      ElementSet s = generate(g, gens);
      if (seen.emplace(s, found.size()).second) found.push_back({std::move(s), std::move(gens)});
    }
  }

  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return canonical_less(a.members, b.members); });

  auto lat = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
  lat->group_ = group;
  const std::size_t s = found.size();
  lat->subgroups_.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    lat->index_.emplace(found[i].members, i);
    lat->subgroups_.push_back(Subgroup::generated(group, found[i].generators));
  }

  lat->inclusion_.assign(s * s, 0);
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t h = k; h < s; ++h)
      if (found[k].members.is_subset_of(found[h].members)) lat->inclusion_[k * s + h] = 1;

  // Conjugacy classes and normalizers.
  constexpr std::size_t kNone = ~std::size_t{0};
  lat->class_of_.assign(s, kNone);
  lat->normalizers_.resize(s);
  lat->cyclic_.resize(s);
  for (std::size_t i = 0; i < s; ++i) {
    const auto elems = found[i].members.members();
    ElementSet normalizer(g.order());
    std::vector<std::size_t> conjugates;
    for (Element a = 0; a < g.order(); ++a) {
      ElementSet c(g.order());
      for (Element x : elems) c.set(g.conjugate(a, x));
      const std::size_t id = lat->index_.at(c);
      if (id == i) normalizer.set(a);
      conjugates.push_back(id);
    }
    lat->normalizers_[i] = SubgroupId{lat->index_.at(normalizer)};
    lat->cyclic_[i] = fwb::is_cyclic(lat->subgroups_[i]) ? 1 : 0;
    if (lat->class_of_[i] != kNone) continue;
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    const std::size_t c = lat->class_reps_.size();
    lat->class_reps_.push_back(SubgroupId{i});  // i is minimal: all earlier ids are classified
    auto& members = lat->class_members_.emplace_back();
    for (std::size_t id : conjugates) {
      lat->class_of_[id] = c;
      members.push_back(SubgroupId{id});
    }
  }
  lat->class_rank_.resize(lat->class_reps_.size());
  for (std::size_t c = 0; c < lat->class_reps_.size(); ++c) {
    std::size_t rank = 0;
    for (std::size_t d = 0; d < c; ++d)
      if (lat->order(lat->class_reps_[d]) == lat->order(lat->class_reps_[c])) ++rank;
    lat->class_rank_[c] = rank;
  }

  // μ(K, ·) by increasing H: μ(K,K) = 1, μ(K,H) = -Σ_{K ≤ X < H} μ(K,X).
  lat->moebius_.assign(s * s, 0);
  for (std::size_t k = 0; k < s; ++k) {
    lat->moebius_[k * s + k] = 1;
    for (std::size_t h = k + 1; h < s; ++h) {
      if (!lat->inclusion_[k * s + h]) continue;
      long long sum = 0;
      for (std::size_t x = k; x < h; ++x)
        if (lat->inclusion_[k * s + x] && lat->inclusion_[x * s + h]) sum += lat->moebius_[k * s + x];
      lat->moebius_[k * s + h] = -sum;
    }
  }
  return lat;
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return SubgroupId{it->second};
}

SubgroupId SubgroupLattice::id_of(const Subgroup& h) const {
  if (!same_group(h.parent(), group_)) throw PreconditionError("subgroup belongs to a different group");
  auto id = find(h.members());
  if (!id) throw InvariantViolation("subgroup missing from lattice");
  return *id;
}

std::vector<SubgroupId> SubgroupLattice::subgroups_of(SubgroupId h) const {
  std::vector<SubgroupId> out;
  for (std::size_t k = 0; k <= h.value; ++k)
    if (inclusion_[k * size() + h.value]) out.push_back(SubgroupId{k});
  return out;
}

std::vector<SubgroupId> SubgroupLattice::overgroups_of(SubgroupId k) const {
  std::vector<SubgroupId> out;
  for (std::size_t h = k.value; h < size(); ++h)
    if (inclusion_[k.value * size() + h]) out.push_back(SubgroupId{h});
  return out;
}

std::string SubgroupLattice::class_label(ClassId c) const {
  return "order=" + std::to_string(class_order(c)) + ":" + std::to_string(class_rank_[c.value]);
}

ClassId SubgroupLattice::class_from_label(const std::string& label) const {
  for (std::size_t c = 0; c < class_count(); ++c)
    if (class_label(ClassId{c}) == label) return ClassId{c};
  throw ParseError("no subgroup class '" + label + "' in " + group_->label());
}

long long SubgroupLattice::moebius(SubgroupId k, SubgroupId h) const {
  if (!contains(h, k)) throw PreconditionError("moebius(K, H) needs K <= H");
  return moebius_[k.value * size() + h.value];
}

SubgroupId SubgroupLattice::meet(SubgroupId a, SubgroupId b) const {
  return *find(subgroup(a).members() & subgroup(b).members());
}

SubgroupId SubgroupLattice::join(SubgroupId a, SubgroupId b) const {
  return id_of(fwb::join(subgroup(a), subgroup(b)));
}

// ---------------------------------------------------------------------------

LatticePtr enumerate_subgroups(GroupPtr group, std::size_t cap) { return SubgroupLattice::build(std::move(group), cap); }

long long moebius(const SubgroupLattice& lattice, SubgroupId k, SubgroupId h) { return lattice.moebius(k, h); }

Rational m_constant(const SubgroupLattice& lattice, SubgroupId l, SubgroupId k) {
  if (!lattice.contains(l, k) || !is_normal_in(lattice.subgroup(k), lattice.subgroup(l)))
    throw PreconditionError("m_constant(L, K) needs K normal in L");
  const std::size_t ol = lattice.order(l);
  const std::size_t ok = lattice.order(k);
  Integer sum = 0;
  for (SubgroupId x : lattice.subgroups_of(l)) {
    const std::size_t ox = lattice.order(x);
    const std::size_t oxk = ox * ok / lattice.order(lattice.meet(x, k));
    if (oxk == ol) sum += Integer(static_cast<long>(ox)) * static_cast<long>(lattice.moebius(x, l));
  }
  Rational m(sum, Integer(static_cast<unsigned long>(ol)));
  m.canonicalize();
  return m;
}

Rational m_cyclic(std::size_t t, std::size_t n) {
  if (n == 0 || t % n != 0) throw PreconditionError("m_cyclic(t, n) needs n | t");
  Rational m(Integer(static_cast<unsigned long>(euler_phi(t))),
             Integer(static_cast<unsigned long>(n * euler_phi(t / n))));
  m.canonicalize();
  return m;
}

bool check_gcd_property(const SubgroupLattice& lattice, SubgroupId n, GcdMethod method) {
  const std::size_t on = lattice.order(n);
  auto intersection_is_gcd = [&](SubgroupId h) {
    return lattice.order(lattice.meet(h, n)) == std::gcd(lattice.order(h), on);
  };
  auto divisor_inside = [&](SubgroupId h) { return on % lattice.order(h) != 0 || lattice.contains(n, h); };

  switch (method) {
    case GcdMethod::AllSubgroups:
    case GcdMethod::DivisorOrder:
    case GcdMethod::CyclicDivisorOrder:
    case GcdMethod::CyclicSubgroups:
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        const SubgroupId h{i};
        const bool cyclic_only = method == GcdMethod::CyclicDivisorOrder || method == GcdMethod::CyclicSubgroups;
        if (cyclic_only && !lattice.is_cyclic(h)) continue;
        const bool ok = (method == GcdMethod::AllSubgroups || method == GcdMethod::CyclicSubgroups)
                            ? intersection_is_gcd(h)
                            : divisor_inside(h);
        if (!ok) return false;
      }
      return true;
    case GcdMethod::Sylow: {
      if (!lattice.is_normal(n)) throw PreconditionError("Sylow gcd test needs a normal subgroup");
      const std::size_t og = lattice.group().order();
      for (std::size_t p : prime_divisors(og)) {
        const std::size_t np = p_part(on, p);
        const std::size_t gp = p_part(og, p);
        if (np == 1 || np == gp) continue;
        const SubgroupId s = sylow(lattice, p);
        if (lattice.is_cyclic(s)) continue;
        if (p == 2 && is_generalized_quaternion(lattice.subgroup(s)) && np == 2) continue;
        return false;
      }
      return true;
    }
  }
  throw InvariantViolation("unknown gcd method");
}

SubgroupId frattini(const SubgroupLattice& lattice) {
  const SubgroupId whole = lattice.whole();
  ElementSet meet = lattice.subgroup(whole).members();
  for (std::size_t i = 0; i < whole.value; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < whole.value && maximal; ++j)
      if (lattice.contains(SubgroupId{j}, SubgroupId{i})) maximal = false;
    if (maximal) meet = meet & lattice.subgroup(SubgroupId{i}).members();
  }
  return *lattice.find(meet);
}

SubgroupId max_cyclic_intersection(const SubgroupLattice& lattice) {
  ElementSet meet = lattice.subgroup(lattice.whole()).members();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (!lattice.is_cyclic(SubgroupId{i})) continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < lattice.size() && maximal; ++j)
      if (lattice.is_cyclic(SubgroupId{j}) && lattice.contains(SubgroupId{j}, SubgroupId{i})) maximal = false;
    if (maximal) meet = meet & lattice.subgroup(SubgroupId{i}).members();
  }
  return *lattice.find(meet);
}

SubgroupId normalizer(const SubgroupLattice& lattice, SubgroupId h) { return lattice.normalizer(h); }

SubgroupId sylow(const SubgroupLattice& lattice, std::size_t p) {
  const std::size_t target = p_part(lattice.group().order(), p);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice.order(SubgroupId{i}) == target) return SubgroupId{i};
  throw InvariantViolation("no Sylow subgroup found");
}

std::vector<DoubleCoset> double_cosets(const Group& g, const Subgroup& k, const Subgroup& h) {
  const auto ks = k.elements();
  const auto hs = h.elements();
  std::vector<char> seen(g.order(), 0);
  std::vector<DoubleCoset> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::size_t size = 0;
    for (Element a : ks) {
      const Element ax = g.mul(a, x);
      for (Element b : hs) {
        const Element y = g.mul(ax, b);
        if (!seen[y]) {
          seen[y] = 1;
          ++size;
        }
      }
    }
    out.push_back({x, size});
  }
  return out;
}

bool is_generalized_quaternion(const Subgroup& p) {
  const std::size_t n = p.order();
  if (n < 8 || !is_power_of_two(n)) return false;
  const Group& g = p.group();
  const std::size_t m = n / 4;
  const GroupPtr model = construct_group("Dic" + std::to_string(n), n);
  // Model element a^i b^j sits at i + 2m*j.
  const auto elems = p.elements();
  for (Element a : elems) {
    if (g.element_order(a) != 2 * m) continue;
    const Element am = g.pow(a, static_cast<long long>(m));
    const Element a_inv = g.inv(a);
    for (Element b : elems) {
      if (g.mul(b, b) != am || g.conjugate(b, a) != a_inv) continue;
      std::vector<Element> image(n);
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 2 * m; ++i)
          image[i + 2 * m * j] = g.mul(g.pow(a, static_cast<long long>(i)), j ? b : g.identity());
      ElementSet hit(g.order());
      bool ok = true;
      for (Element x : image) {
        if (!p.contains(x) || hit.test(x)) ok = false;
        hit.set(x);
      }
      for (Element x = 0; x < n && ok; ++x)
        for (Element y = 0; y < n && ok; ++y) ok = image[model->mul(x, y)] == g.mul(image[x], image[y]);
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace fwb
