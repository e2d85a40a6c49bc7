#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "fwb/burnside.hpp"
#include "fwb/fw.hpp"
#include "fwb/group_spec.hpp"

namespace testing_support {

inline std::vector<std::string> catalog() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 24; ++n) specs.push_back("C" + std::to_string(n));
  for (const char* s : {"C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "S3", "S4", "A4", "A5", "D8", "D10", "D12", "Q8", "Q16",
                        "Dic12", "Dic20", "SL(2,3)", "SL(2,5)"})
    specs.push_back(s);
  return specs;
}

inline std::vector<std::string> small_catalog(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& s : catalog())
    if (fwb::construct_group(s)->order() <= max_order) out.push_back(s);
  return out;
}

/// Contexts are expensive enough to share between test cases.
inline fwb::FwContextPtr context(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, fwb::FwContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(spec);
  if (it != cache.end()) return it->second;
  auto ctx = fwb::FwContext::make(fwb::construct_group(spec));
  cache.emplace(spec, ctx);
  return ctx;
}

/// Integral element with coefficients in [-bound, bound].
inline fwb::BurnsideElement random_integral(const fwb::RingPtr& ring, std::mt19937_64& rng, long bound = 3) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<fwb::Rational> c(ring->rank());
  for (auto& q : c) q = dist(rng);
  return fwb::BurnsideElement(ring, std::move(c));
}

/// Rational element with small numerators and denominators.
inline fwb::BurnsideElement random_rational(const fwb::RingPtr& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<fwb::Rational> c(ring->rank());
  for (auto& q : c) {
    q = fwb::Rational(num(rng), den(rng));
    q.canonicalize();
  }
  return fwb::BurnsideElement(ring, std::move(c));
}

}  // namespace testing_support
