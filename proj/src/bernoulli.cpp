#include "hypeuler/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace hypeuler {

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational bernoulli_number(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};

    std::lock_guard lock(mutex);
    while (table.size() <= n) {
        const auto m = static_cast<unsigned>(table.size());
        if (m >= 3 && m % 2 == 1) {
            table.emplace_back(0);
            continue;
        }
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k) {
            if (!table[k].is_zero()) {
                acc += Rational(binomial(m + 1, k)) * table[k];
            }
        }
        table.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return table[n];
}

Rational bernoulli_polynomial_eval(unsigned n, const Rational& x)
{
    // Horner in x over the coefficients C(n,k) B_k of x^(n-k).
    Rational acc(0);
    for (unsigned k = 0; k <= n; ++k) {
        acc = acc * x + Rational(binomial(n, k)) * bernoulli_number(k);
    }
    return acc;
}

}  // namespace hypeuler
