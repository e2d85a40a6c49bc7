#pragma once

#include <cstddef>
#include <vector>

// Integer helpers: gcd is std::gcd; n_p denotes the p-part of n.
namespace fwb {

/// Largest power of p dividing n (n > 0).
std::size_t p_part(std::size_t n, std::size_t p);

/// Euler's totient.
std::size_t euler_phi(std::size_t n);

/// Distinct primes dividing n, ascending.
std::vector<std::size_t> prime_divisors(std::size_t n);

/// All positive divisors of n, ascending.
std::vector<std::size_t> divisors(std::size_t n);

bool is_prime(std::size_t n);

bool is_power_of_two(std::size_t n);

}  // namespace fwb
