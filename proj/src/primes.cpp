#include "hypeuler/primes.hpp"

#include <array>

#include "hypeuler/errors.hpp"

namespace hypeuler {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Miller-Rabin with the first 13 prime bases is exact below this bound.
const Integer& miller_rabin_limit()
{
    static const Integer limit("3317044064679887385961981", 10);
    return limit;
}

bool miller_rabin(const Integer& n)
{
    static constexpr std::array<unsigned long, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    Integer d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    const Integer n_minus_one = n - 1;
    for (unsigned long a : bases) {
        if (Integer(a) % n == 0) {
            continue;
        }
        Integer x;
        const Integer base(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_one) {
            continue;
        }
        bool witness = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n_minus_one) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

}  // namespace

Integer odd_part_of_numerator(const Rational& x)
{
    if (x.is_zero()) {
        throw DomainError("odd part of the numerator of zero");
    }
    Integer n = abs(x.num());
    const auto twos = mpz_scan1(n.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), twos);
    return n;
}

bool is_prime(const Integer& n)
{
    if (n < 2) {
        return false;
    }
    for (unsigned long p = 2; p <= kTrialLimit; ++p) {
        if (Integer(p) * p > n) {
            return true;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            return n == p;
        }
    }
    if (n >= miller_rabin_limit()) {
        throw DomainError("primality of " + to_string(n) + " is beyond the deterministic range");
    }
    return miller_rabin(n);
}

std::optional<Integer> smallest_odd_prime_factor(const Integer& n)
{
    if (n <= 0) {
        throw DomainError("smallest odd prime factor of a nonpositive number");
    }
    Integer m = n;
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), mpz_scan1(m.get_mpz_t(), 0));
    if (m == 1) {
        return std::nullopt;
    }
    for (unsigned long p = 3; p <= kTrialLimit; p += 2) {
        if (Integer(p) * p > m) {
            return m;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            return Integer(p);
        }
    }
    // No factor below 10^6: the cofactor is the answer only if it is prime.
    if (is_prime(m)) {
        return m;
    }
    throw DomainError("cannot determine the smallest prime factor of " + to_string(n));
}

std::optional<Integer> prime_power_base(const Integer& q)
{
    if (q < 2) {
        return std::nullopt;
    }
    for (unsigned long p = 2; p <= kTrialLimit; ++p) {
        if (Integer(p) * p > q) {
            return is_prime(q) ? std::optional<Integer>(q) : std::nullopt;
        }
        if (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
            Integer m = q;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                m /= p;
            }
            return m == 1 ? std::optional<Integer>(Integer(p)) : std::nullopt;
        }
    }
    throw DomainError("prime-power test for " + to_string(q) + " is out of range");
}

}  // namespace hypeuler
