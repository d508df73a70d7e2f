#include <doctest.h>

#include <random>

#include "hypeuler/bernoulli.hpp"
#include "hypeuler/cyclotomic.hpp"
#include "hypeuler/errors.hpp"
#include "hypeuler/interval.hpp"
#include "hypeuler/polynomial.hpp"
#include "hypeuler/primes.hpp"
#include "support.hpp"

using namespace hypeuler;
using testing_support::q;

namespace {

// Akiyama-Tanigawa: yields B_n with B_1 = +1/2.
Rational akiyama_tanigawa(unsigned n)
{
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rational(Integer(1), Integer(m + 1));
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        }
    }
    return a[0];
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

RationalInterval random_interval(std::mt19937_64& rng)
{
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    return a < b ? RationalInterval(a, b) : RationalInterval(b, a);
}

Rational sample(const RationalInterval& x, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> t(0, 64);
    return x.lo() + x.width() * Rational(Integer(t(rng)), Integer(64));
}

}  // namespace

TEST_CASE("rational canonical form and parsing")
{
    CHECK(Rational(Integer(6), Integer(-4)) == q("-3/2"));
    CHECK(q("-3/2").str() == "-3/2");
    CHECK(Rational(5).str() == "5/1");
    CHECK(Rational(5).pretty() == "5");
    CHECK(q("12/8").num() == 3);
    CHECK_THROWS_AS(q("1/0"), DomainError);
    CHECK_THROWS_AS(q("abc"), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(q("7/2").floor() == 3);
    CHECK(q("-7/2").floor() == -4);
    CHECK(q("-7/2").ceil() == -3);
    CHECK(q("3/40").two_adic_valuation() == -3);
    CHECK(power_of_two(-3) == q("1/8"));
}

TEST_CASE("bernoulli numbers")
{
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == q("-1/2"));
    CHECK(bernoulli_number(2) == q("1/6"));
    CHECK(bernoulli_number(10) == q("5/66"));
    for (unsigned n = 2; n <= 30; ++n) {
        CHECK(bernoulli_number(n) == akiyama_tanigawa(n));
        Rational s(0);
        for (unsigned k = 0; k <= n; ++k) {
            s += Rational(binomial(n + 1, k)) * bernoulli_number(k);
        }
        CHECK(s.is_zero());
    }
    for (unsigned n = 3; n <= 29; n += 2) {
        CHECK(bernoulli_number(n).is_zero());
    }
}

TEST_CASE("bernoulli polynomials")
{
    CHECK(bernoulli_polynomial_eval(2, Rational(0)) == q("1/6"));
    CHECK(bernoulli_polynomial_eval(2, q("1/5")) == q("1/150"));
    CHECK(bernoulli_polynomial_eval(2, q("3/8")) == q("-13/192"));
    // x^2 - x + 1/6 at random points
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Rational x = random_rational(rng);
        CHECK(bernoulli_polynomial_eval(2, x) == x * x - x + q("1/6"));
        // B_n(x + 1) - B_n(x) = n x^(n-1)
        CHECK(bernoulli_polynomial_eval(5, x + Rational(1)) - bernoulli_polynomial_eval(5, x)
              == Rational(5) * x.pow(4));
    }
}

TEST_CASE("cyclotomic arithmetic")
{
    const auto z = CyclotomicNumber::zeta_power(3, 1);
    const auto zz = cyclotomic_mul(z, z);
    CHECK(zz == CyclotomicNumber::from_exponent_weights(3, {Rational(-1), Rational(-1)}));
    CHECK(zz == CyclotomicNumber::zeta_power(3, 2));
    const CyclotomicNumber one(3, Rational(1));
    CHECK(cyclotomic_mul(z, one) == z);
    const auto a = one + z;
    const auto b = one + CyclotomicNumber::zeta_power(3, 2);
    CHECK(cyclotomic_mul(a, b).to_rational() == Rational(1));
    CHECK(cyclotomic_mul(a, b) == cyclotomic_mul(b, a));
    CHECK(a.galois_conjugate(2) == b);
    CHECK_FALSE(z.is_rational());
    CHECK_THROWS_AS(z.to_rational(), ConsistencyError);
    CHECK_THROWS_AS(cyclotomic_mul(z, CyclotomicNumber(4, Rational(1))), IncompatibleOrderError);
    CHECK(z.lift(6) == CyclotomicNumber::zeta_power(6, 2));
    // sum of all 5th roots of unity vanishes
    CyclotomicNumber s(5, Rational(0));
    for (long e = 0; e < 5; ++e) {
        s += CyclotomicNumber::zeta_power(5, e);
    }
    CHECK(s == CyclotomicNumber(5, Rational(0)));
}

TEST_CASE("polynomial exact division")
{
    const auto num = RatPolynomial::power_minus_one(6);
    const auto den = RatPolynomial::power_minus_one(2);
    const RatPolynomial expect({Rational(1), Rational(0), Rational(1), Rational(0), Rational(1)});
    CHECK(poly_exact_divide(num, den) == expect);
    CHECK(poly_exact_divide(expect, RatPolynomial::constant(Rational(1))) == expect);
    CHECK_THROWS_AS(poly_exact_divide(RatPolynomial::power_plus_one(2), RatPolynomial::power_minus_one(1)),
                    NonExactDivisionError);
    CHECK(poly_divmod(RatPolynomial::power_plus_one(2), RatPolynomial::power_minus_one(1)).remainder
          == RatPolynomial::constant(Rational(2)));
    CHECK_THROWS_AS(poly_divmod(expect, RatPolynomial()), DomainError);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rational> pc(static_cast<std::size_t>(deg(rng)) + 1);
        std::vector<Rational> dc(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& c : pc) {
            c = random_rational(rng);
        }
        for (auto& c : dc) {
            c = random_rational(rng);
        }
        dc.back() = Rational(1);
        const RatPolynomial p(pc);
        const RatPolynomial d(dc);
        CHECK(poly_exact_divide(p * d, d) == p);
        const auto qr = poly_divmod(p, d);
        CHECK(qr.quotient * d + qr.remainder == p);
        CHECK(qr.remainder.degree() < d.degree());
    }
}

TEST_CASE("taylor shift")
{
    const RatPolynomial p({Rational(1), Rational(-3), Rational(1)});  // x^2 - 3x + 1
    const auto s = p.taylor_shift(Rational(2));                        // u^2 + u - 1
    CHECK(s == RatPolynomial({Rational(-1), Rational(1), Rational(1)}));
    for (long x = -5; x <= 5; ++x) {
        CHECK(s.eval(Rational(x)) == p.eval(Rational(x + 2)));
    }
}

TEST_CASE("odd part of numerator")
{
    CHECK(odd_part_of_numerator(q("361/120")) == 361);
    CHECK(odd_part_of_numerator(q("1/30")) == 1);
    CHECK(odd_part_of_numerator(q("-48/7")) == 3);
    CHECK_THROWS_AS(odd_part_of_numerator(Rational(0)), DomainError);
}

TEST_CASE("primality and smallest odd prime factor")
{
    std::vector<bool> sieve(20000, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i < sieve.size(); ++i) {
        if (sieve[i]) {
            for (std::size_t j = i * i; j < sieve.size(); j += i) {
                sieve[j] = false;
            }
        }
    }
    for (long n = 0; n < 20000; ++n) {
        CHECK(is_prime(Integer(n)) == sieve[static_cast<std::size_t>(n)]);
    }
    CHECK(is_prime(Integer("2305843009213693951")));          // 2^61 - 1
    CHECK_FALSE(is_prime(Integer("3825123056546413051")));    // strong pseudoprime to bases 2..23
    CHECK_FALSE(is_prime(Integer(561)));
    CHECK(*smallest_odd_prime_factor(Integer(24187)) == 19);
    CHECK(*smallest_odd_prime_factor(Integer(67)) == 67);
    CHECK(*smallest_odd_prime_factor(Integer(10020247)) == 43);
    CHECK_FALSE(smallest_odd_prime_factor(Integer(64)).has_value());
    CHECK(*prime_power_base(Integer(9)) == 3);
    CHECK(*prime_power_base(Integer(8)) == 2);
    CHECK_FALSE(prime_power_base(Integer(6)).has_value());
    CHECK_FALSE(prime_power_base(Integer(1)).has_value());
}

TEST_CASE("integer roots")
{
    CHECK(integer_root_floor(Integer(1000), 3) == 10);
    CHECK(integer_root_floor(Integer(999), 3) == 9);
    CHECK(integer_root_floor(Integer(0), 5) == 0);
    const RationalInterval r = RationalInterval::point(Rational(2)).sqrt(100);
    CHECK(r.lo() * r.lo() <= Rational(2));
    CHECK(r.hi() * r.hi() >= Rational(2));
    CHECK(r.width() < power_of_two(-90));
}

TEST_CASE("pi enclosure")
{
    const auto pi = pi_enclosure(kDefaultPiBits);
    // 50 decimal digits of pi
    const Rational digits = q("314159265358979323846264338327950288419716939937510/"
                              "100000000000000000000000000000000000000000000000000");
    const Rational ulp = q("1/100000000000000000000000000000000000000000000000000");
    CHECK(pi.lo() <= digits + ulp);
    CHECK(pi.hi() >= digits);
    CHECK(pi.width() < q("1/10000000000000000000000000000000000000000"));
    CHECK(pi_enclosure(400).width() < power_of_two(-400));
}

TEST_CASE("interval outward rounding under random sampling")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_interval(rng);
        const auto b = random_interval(rng);
        const Rational x = sample(a, rng);
        const Rational y = sample(b, rng);
        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        CHECK(a.pow(3).contains(x.pow(3)));
        CHECK(a.pow(2).contains(x * x));
        if (!b.contains_zero()) {
            CHECK((a / b).contains(x / y));
            CHECK(b.reciprocal().contains(Rational(1) / y));
        }
        const auto t = (a * b).tightened(20);
        CHECK(t.contains(x * y));
        if (a.lo().sign() >= 0) {
            const auto s = a.sqrt(40);
            const Rational lo = s.lo();
            const Rational hi = s.hi();
            CHECK(lo * lo <= x);
            CHECK(hi * hi >= x);
        }
    }
    CHECK_THROWS_AS(RationalInterval(Rational(2), Rational(1)), DomainError);
    CHECK_THROWS_AS(RationalInterval(Rational(-1), Rational(1)).reciprocal(), DomainError);
}
