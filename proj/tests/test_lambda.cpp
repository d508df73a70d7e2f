#include <doctest.h>

#include <set>

#include "hypeuler/errors.hpp"
#include "hypeuler/lambda.hpp"
#include "support.hpp"

using namespace hypeuler;
using testing_support::q;

namespace {

// |Sp or SO_{2m+1}(F_q)|, |SO^+_{2m}(F_q)|, |SO^-_{2m}(F_q)| from the
// standard product formulas, written out directly.
Integer big_pow(long q, long e)
{
    return pow(Integer(q), static_cast<unsigned long>(e));
}

Integer ord_b(int m, long q)
{
    Integer o = big_pow(q, m * m);
    for (int k = 1; k <= m; ++k) {
        o *= big_pow(q, 2 * k) - 1;
    }
    return o;
}

Integer ord_d(int m, long q, int eps)
{
    Integer o = big_pow(q, m * (m - 1)) * (big_pow(q, m) - eps);
    for (int k = 1; k < m; ++k) {
        o *= big_pow(q, 2 * k) - 1;
    }
    return o;
}

// Drops every factor q from numerator and denominator.
Rational prime_to_q(Rational x, long q)
{
    Integer n = x.num();
    Integer d = x.den();
    while (n % q == 0) {
        n /= q;
    }
    while (d % q == 0) {
        d /= q;
    }
    return Rational(n, d);
}

}  // namespace

TEST_CASE("maximal types")
{
    for (int r = 3; r <= 8; ++r) {
        const auto types = enumerate_maximal_types(r);
        CHECK(types.size() == static_cast<std::size_t>(2 * r));
        std::set<std::string> keys;
        for (const auto& t : types) {
            keys.insert(t.key());
        }
        CHECK(keys.size() == types.size());
    }
    CHECK_THROWS_AS(enumerate_maximal_types(2), DomainError);
    const auto t3 = enumerate_maximal_types(3);
    CHECK(t3[0].name(3) == "B_2 x GL1");
    CHECK(t3[2].name(3) == "1D_3");
    CHECK(t3[5].name(3) == "2D_3");
    CHECK(t3[4].name(3) == "2D_2 x B_1");
}

TEST_CASE("closed forms at q = 2 for r = 3")
{
    const auto t = enumerate_maximal_types(3);
    std::vector<Rational> values;
    for (const auto& ty : t) {
        values.push_back(lambda_value(ty, 3, Integer(2)));
    }
    CHECK(values == std::vector<Rational>{Rational(63), Rational(105), Rational(9), Rational(21), Rational(63),
                                          Rational(7)});
    CHECK_THROWS_AS(lambda_value(t[0], 3, Integer(6)), DomainError);
    CHECK_THROWS_AS(lambda_value(t[0], 3, Integer(1)), DomainError);
    LambdaType bad{Splitness::split, LambdaFamily::d_b, 1};
    CHECK_THROWS_AS(lambda_value(bad, 3, Integer(2)), DomainError);
    LambdaType missing{Splitness::split, LambdaFamily::d_b, std::nullopt};
    CHECK_THROWS_AS(lambda_value(missing, 3, Integer(2)), DomainError);
}

TEST_CASE("polynomial forms")
{
    for (int r = 3; r <= 7; ++r) {
        for (const auto& t : enumerate_maximal_types(r)) {
            const auto p = lambda_polynomial(t, r);
            CHECK(p.has_integer_coeffs());
            const auto frac = lambda_fraction(t, r);
            CHECK(p * frac.denominator == frac.numerator);
            for (long qq : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 16L, 25L}) {
                CHECK(p.eval(Rational(qq)) == lambda_value(t, r, Integer(qq)));
            }
        }
    }
    // split B_{r-1} x GL1 at r = 3: (q^6 - 1)/(q - 1) = 1 + q + ... + q^5
    const auto p = lambda_polynomial(enumerate_maximal_types(3)[0], 3);
    CHECK(p == RatPolynomial(std::vector<Rational>(6, Rational(1))));
}

TEST_CASE("minimum over types")
{
    const auto p3 = lambda_min_proof(3);
    CHECK(p3.types.size() == 6);
    CHECK(p3.minimum == Rational(7));
    CHECK(p3.minimizing_type == "2D_3");
    for (int r = 4; r <= 6; ++r) {
        const auto p = lambda_min_proof(r);
        CHECK(p.minimum > Rational(4));
        CHECK(p.minimum == Rational(Integer((1L << r) - 1)));
        for (const auto& t : p.types) {
            for (const auto& c : t.shifted.coeffs()) {
                CHECK(c.sign() >= 0);
            }
            CHECK(t.shifted.eval(Rational(0)) == t.value_at_two);
        }
    }
}

TEST_CASE("order oracle")
{
    for (int r = 3; r <= 5; ++r) {
        for (const auto& t : enumerate_maximal_types(r)) {
            for (long qq : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
                CAPTURE(r);
                CAPTURE(t.key());
                CAPTURE(qq);
                const auto o = lambda_order_oracle(t, r, Integer(qq));
                CHECK(o.calibrated == lambda_value(t, r, Integer(qq)));
                CHECK(o.calibration == Rational(1));
            }
        }
    }
}

TEST_CASE("order formulas against a direct expansion")
{
    for (long qq : {2L, 3L, 5L}) {
        for (int m = 1; m <= 5; ++m) {
            CHECK(order_type_b(m, Integer(qq)) == ord_b(m, qq));
            if (m >= 2) {
                CHECK(order_type_d(m, Integer(qq)) == ord_d(m, qq, 1));
                CHECK(order_type_2d(m, Integer(qq)) == ord_d(m, qq, -1));
            }
        }
        // |SO_5(F_q)| = |Sp_4(F_q)| = q^4 (q^2 - 1)(q^4 - 1)
        CHECK(order_type_b(2, Integer(qq)) == big_pow(qq, 4) * (big_pow(qq, 2) - 1) * (big_pow(qq, 4) - 1));
        // prime-to-q part of [B_3 : 2D_3] is the nonsplit 2D_r value
        const Rational idx(ord_b(3, qq), ord_d(3, qq, -1));
        CHECK(prime_to_q(idx, qq) == lambda_value(enumerate_maximal_types(3)[5], 3, Integer(qq)));
    }
    CHECK(dim_type_b(3) == 21);
    CHECK(dim_type_d(3) == 15);
}

TEST_CASE("formula texts")
{
    const auto texts = lambda_formula_texts();
    CHECK(texts.size() == 6);
    CHECK(texts[2] == "split|1D_r|q^r+1");
}
