#pragma once

#include "hypeuler/rational.hpp"

namespace hypeuler {

/// B_n with B_1 = -1/2, from the recurrence sum_{k<=n} C(n+1,k) B_k = 0.
/// Results are memoized in a process-wide, mutex-guarded table.
Rational bernoulli_number(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_polynomial_eval(unsigned n, const Rational& x);

Integer binomial(unsigned n, unsigned k);

}  // namespace hypeuler
