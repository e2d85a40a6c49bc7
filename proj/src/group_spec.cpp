#include "fwb/group_spec.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>

#include "fwb/arith.hpp"
#include "fwb/errors.hpp"

namespace fwb {

std::optional<std::size_t> GroupRecipe::order() const {
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Dihedral:
    case Kind::Dicyclic:
      return parameter;
    case Kind::Symmetric: {
      std::size_t f = 1;
      for (std::size_t i = 2; i <= parameter; ++i) f *= i;
      return f;
    }
    case Kind::Alternating: {
      std::size_t f = 1;
      for (std::size_t i = 3; i <= parameter; ++i) f *= i;
      return f;
    }
    case Kind::SpecialLinear:
      return parameter * (parameter * parameter - 1);
    case Kind::Product: {
      auto a = factors[0].order();
      auto b = factors[1].order();
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case Kind::Permutation:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      positions_.push_back(i);
    }
    end_position_ = text.size();
  }

  GroupRecipe parse() {
    if (chars_.empty()) fail("empty group spec");
    GroupRecipe left = parse_factor();
    while (pos_ < chars_.size() && chars_[pos_] == 'x') {
      ++pos_;
      GroupRecipe right = parse_factor();
      GroupRecipe prod;
      prod.kind = GroupRecipe::Kind::Product;
      prod.text = left.text + "x" + right.text;
      prod.factors.push_back(std::move(left));
      prod.factors.push_back(std::move(right));
      left = std::move(prod);
    }
    if (pos_ != chars_.size()) fail("unexpected character '" + std::string(1, chars_[pos_]) + "'");
    return left;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_ < positions_.size() ? positions_[pos_] : end_position_);
  }

  bool consume(std::string_view literal) {
    if (chars_.compare(pos_, literal.size(), literal) == 0) {
      pos_ += literal.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= chars_.size() || chars_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(chars_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  static GroupRecipe named(GroupRecipe::Kind kind, std::size_t n, std::string text) {
    GroupRecipe r;
    r.kind = kind;
    r.parameter = n;
    r.text = std::move(text);
    return r;
  }

  GroupRecipe parse_factor() {
    using K = GroupRecipe::Kind;
    if (consume("perm:[")) return parse_permutations();
    if (consume("SL(2,")) {
      const std::size_t p = number();
      expect(')');
      if (!is_prime(p) || p > 7) throw InvalidParameter("SL(2,p) needs a prime p <= 7, got " + std::to_string(p));
      return named(K::SpecialLinear, p, "SL(2," + std::to_string(p) + ")");
    }
    if (consume("Dic")) {
      const std::size_t n = number();
      if (n < 4 || n % 4 != 0) throw InvalidParameter("Dic<n> needs 4 | n, got " + std::to_string(n));
      return named(K::Dicyclic, n, "Dic" + std::to_string(n));
    }
    if (pos_ >= chars_.size()) fail("expected a group");
    const char c = chars_[pos_];
    if (std::string_view("CDQSA").find(c) == std::string_view::npos)
      fail("unknown group family '" + std::string(1, c) + "'");
    ++pos_;
    const std::size_t n = number();
    const std::string text = std::string(1, c) + std::to_string(n);
    switch (c) {
      case 'C':
        if (n < 1) throw InvalidParameter("C<n> needs n >= 1");
        return named(K::Cyclic, n, text);
      case 'D':
        if (n < 4 || n % 2 != 0) throw InvalidParameter("D<n> needs even n >= 4, got " + std::to_string(n));
        return named(K::Dihedral, n, text);
      case 'Q':
        if (n < 8 || !is_power_of_two(n))
          throw InvalidParameter("Q<n> needs n = 2^k >= 8, got " + std::to_string(n));
        return named(K::Dicyclic, n, text);
      case 'S':
        if (n < 1 || n > 6) throw InvalidParameter("S<n> needs 1 <= n <= 6");
        return named(K::Symmetric, n, text);
      case 'A':
        if (n < 1 || n > 6) throw InvalidParameter("A<n> needs 1 <= n <= 6");
        return named(K::Alternating, n, text);
      default:
        fail("unknown group family '" + std::string(1, c) + "'");
    }
  }

  GroupRecipe parse_permutations() {
    std::vector<std::vector<std::vector<std::size_t>>> gens;  // generator -> cycles
    std::size_t degree = 1;
    for (;;) {
      std::vector<std::vector<std::size_t>> cycles;
      while (pos_ < chars_.size() && chars_[pos_] == '(') {
        ++pos_;
        std::vector<std::size_t> cycle;
        if (pos_ < chars_.size() && chars_[pos_] != ')') {
          for (;;) {
            const std::size_t point = number();
            if (point == 0) fail("permutation points are 1-based");
            if (std::find(cycle.begin(), cycle.end(), point) != cycle.end()) fail("repeated point in cycle");
            degree = std::max(degree, point);
            cycle.push_back(point);
            if (pos_ < chars_.size() && chars_[pos_] == ',') {
              ++pos_;
              continue;
            }
            break;
          }
        }
        expect(')');
        cycles.push_back(std::move(cycle));
      }
      if (cycles.empty()) fail("expected a cycle");
      gens.push_back(std::move(cycles));
      if (pos_ < chars_.size() && chars_[pos_] == ';') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(']');
    if (degree > 16) throw InvalidParameter("permutation degree above 16");

    GroupRecipe r;
    r.kind = GroupRecipe::Kind::Permutation;
    r.text = "perm:[";
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<std::size_t> images(degree);
      std::iota(images.begin(), images.end(), 0);
      // Composing the cycles right to left.
      for (auto it = gens[g].rbegin(); it != gens[g].rend(); ++it) {
        const auto& cyc = *it;
        std::vector<std::size_t> step(degree);
        std::iota(step.begin(), step.end(), 0);
        for (std::size_t i = 0; i < cyc.size(); ++i) step[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
        for (auto& x : images) x = step[x];
      }
      r.generators.push_back(std::move(images));
      if (g) r.text += ";";
      for (const auto& cyc : gens[g]) {
        r.text += "(";
        for (std::size_t i = 0; i < cyc.size(); ++i) r.text += (i ? "," : "") + std::to_string(cyc[i]);
        r.text += ")";
      }
    }
    r.text += "]";
    return r;
  }

  std::string chars_;
  std::vector<std::size_t> positions_;
  std::size_t end_position_ = 0;
  std::size_t pos_ = 0;
};

GroupPtr make_group(std::size_t n, std::vector<Element> table, std::string label) {
  return std::make_shared<const Group>(n, std::move(table), std::move(label));
}

GroupPtr cyclic(std::size_t n, std::string label) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return make_group(n, std::move(t), std::move(label));
}

// r^i s^j stored at i + m*j.
GroupPtr dihedral(std::size_t n, std::string label) {
  const std::size_t m = n / 2;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
      const std::size_t e = (j ? i + m - k : i + k) % m;
      t[x * n + y] = static_cast<Element>(e + m * ((j + l) % 2));
    }
  return make_group(n, std::move(t), std::move(label));
}

// a^i b^j stored at i + 2m*j, with a^{2m} = 1, b^2 = a^m, b a b^{-1} = a^{-1}.
GroupPtr dicyclic(std::size_t n, std::string label) {
  const std::size_t m = n / 4;
  const std::size_t r = 2 * m;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t i = x % r, j = x / r, k = y % r, l = y / r;
      std::size_t e = (j ? i + r - k : i + k) % r;
      std::size_t f = j + l;
      if (f == 2) {
        e = (e + m) % r;
        f = 0;
      }
      t[x * n + y] = static_cast<Element>(e + r * f);
    }
  return make_group(n, std::move(t), std::move(label));
}

using Perm = std::vector<std::size_t>;

GroupPtr from_permutations(std::vector<Perm> elems, std::string label) {
  std::sort(elems.begin(), elems.end());
  const std::size_t n = elems.size();
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i], static_cast<Element>(i));
  std::vector<Element> t(n * n);
  const std::size_t deg = elems.front().size();
  Perm c(deg);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < deg; ++x) c[x] = elems[a][elems[b][x]];
      t[a * n + b] = index.at(c);
    }
  return make_group(n, std::move(t), std::move(label));
}

GroupPtr symmetric(std::size_t n, bool even_only, std::string label) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> elems;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2) continue;
    }
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(std::move(elems), std::move(label));
}

// 2x2 matrices (a b; c d) over F_p with ad - bc = 1, ordered lexicographically.
GroupPtr special_linear(std::size_t p, std::string label) {
  using Mat = std::array<std::size_t, 4>;
  std::vector<Mat> elems;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d)
          if ((a * d + p * p - b * c) % p == 1 % p) elems.push_back({a, b, c, d});
  const std::size_t n = elems.size();
  std::map<Mat, Element> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i], static_cast<Element>(i));
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Mat& u = elems[x];
      const Mat& v = elems[y];
      const Mat w{(u[0] * v[0] + u[1] * v[2]) % p, (u[0] * v[1] + u[1] * v[3]) % p,
                  (u[2] * v[0] + u[3] * v[2]) % p, (u[2] * v[1] + u[3] * v[3]) % p};
      t[x * n + y] = index.at(w);
    }
  return make_group(n, std::move(t), std::move(label));
}

// (a, b) stored at a*|B| + b.
GroupPtr direct_product(const Group& a, const Group& b, std::string label) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      t[x * n + y] = static_cast<Element>(a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
                                          b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  return make_group(n, std::move(t), std::move(label));
}

}  // namespace

GroupRecipe parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

GroupPtr permutation_group(const std::vector<std::vector<std::size_t>>& generators, std::string label,
                           std::size_t cap) {
  if (generators.empty()) throw InvalidParameter("permutation group needs a generator");
  const std::size_t deg = generators.front().size();
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, bool> seen{{id, true}};
  Perm c(deg);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      if (g.size() != deg) throw InvalidParameter("generators of different degrees");
      for (std::size_t x = 0; x < deg; ++x) c[x] = elems[i][g[x]];
      if (seen.emplace(c, true).second) {
        elems.push_back(c);
        if (elems.size() > cap)
          throw CapExceeded("group '" + label + "' has more than " + std::to_string(cap) + " elements");
      }
    }
  }
  return from_permutations(std::move(elems), std::move(label));
}

GroupPtr build_group(const GroupRecipe& recipe, std::size_t cap) {
  using K = GroupRecipe::Kind;
  if (auto n = recipe.order(); n && *n > cap)
    throw CapExceeded("group '" + recipe.text + "' has order " + std::to_string(*n) + " > cap " + std::to_string(cap));
  switch (recipe.kind) {
    case K::Cyclic:
      return cyclic(recipe.parameter, recipe.text);
    case K::Dihedral:
      return dihedral(recipe.parameter, recipe.text);
    case K::Dicyclic:
      return dicyclic(recipe.parameter, recipe.text);
    case K::Symmetric:
      return symmetric(recipe.parameter, false, recipe.text);
    case K::Alternating:
      return symmetric(recipe.parameter, true, recipe.text);
    case K::SpecialLinear:
      return special_linear(recipe.parameter, recipe.text);
    case K::Product: {
      auto a = build_group(recipe.factors[0], cap);
      auto b = build_group(recipe.factors[1], cap);
      if (a->order() * b->order() > cap)
        throw CapExceeded("group '" + recipe.text + "' exceeds cap " + std::to_string(cap));
      return direct_product(*a, *b, recipe.text);
    }
    case K::Permutation:
      return permutation_group(recipe.generators, recipe.text, cap);
  }
  throw InvariantViolation("unhandled group recipe");
}

GroupPtr construct_group(std::string_view spec, std::size_t cap) { return build_group(parse_group_spec(spec), cap); }

}  // namespace fwb
