#pragma once

#include <optional>

#include "hypeuler/rational.hpp"

namespace hypeuler {

/// |numerator(x)| with every factor 2 removed. DomainError on zero.
Integer odd_part_of_numerator(const Rational& x);

/// Trial division up to 10^6, then deterministic Miller-Rabin (valid below
/// 3.3 * 10^24). Larger unresolved cofactors raise DomainError.
bool is_prime(const Integer& n);

/// Smallest odd prime dividing n > 0, or nullopt when n is a power of 2.
std::optional<Integer> smallest_odd_prime_factor(const Integer& n);

/// If q = p^k for a prime p and k >= 1, returns p.
std::optional<Integer> prime_power_base(const Integer& q);

}  // namespace hypeuler
