#include <doctest.h>

#include <cmath>

#include "hypeuler/bernoulli.hpp"
#include "hypeuler/characters.hpp"
#include "hypeuler/errors.hpp"
#include "hypeuler/volume.hpp"
#include "hypeuler/zeta.hpp"
#include "support.hpp"

using namespace hypeuler;
using testing_support::field;
using testing_support::q;

namespace {

// Legendre symbol by brute force: is a a nonzero square mod p?
int legendre_oracle(long a, long p)
{
    a %= p;
    if (a == 0) {
        return 0;
    }
    for (long x = 1; x < p; ++x) {
        if ((x * x) % p == a) {
            return 1;
        }
    }
    return -1;
}

// sum_a chi(a) B_n(a/f) f^(n-1) for a real character given as values.
Rational real_bernoulli_oracle(unsigned n, const std::vector<int>& values)
{
    const long f = static_cast<long>(values.size());
    Rational s(0);
    for (long a = 1; a <= f; ++a) {
        const int v = values[static_cast<std::size_t>(a % f)];
        if (v != 0) {
            s += Rational(v) * bernoulli_polynomial_eval(n, Rational(Integer(a), Integer(f)));
        }
    }
    return s * Rational(f).pow(static_cast<long>(n) - 1);
}

struct Row {
    int degree;
    long disc;
    std::vector<const char*> values;
};

// Published special values zeta_k(-1), zeta_k(-3), ...
const std::vector<Row>& published_rows()
{
    static const std::vector<Row> rows = {
        {2, 5, {"1/30", "1/60", "67/630", "361/120", "412751/1650"}},
        {2, 8, {"1/12", "11/120", "361/252", "24611/240"}},
        {2, 12, {"1/6", "23/60", "1681/126"}},
        {2, 13, {"1/6", "29/60", "33463/1638"}},
        {2, 17, {"1/3", "41/30", "5791/63"}},
        {3, 49, {"-1/21", "79/210", "-7393/63"}},
        {3, 81, {"-1/9", "199/90", "-50353/27"}},
    };
    return rows;
}

}  // namespace

TEST_CASE("kronecker characters")
{
    const auto c5 = kronecker_character(Integer(5));
    CHECK(c5.real_value(1) == 1);
    CHECK(c5.real_value(2) == -1);
    CHECK(c5.real_value(3) == -1);
    CHECK(c5.real_value(4) == 1);
    CHECK(c5.real_value(5) == 0);
    CHECK(c5.primitive());
    CHECK(c5.conductor() == 5);
    for (long a = 0; a < 5; ++a) {
        CHECK(c5.real_value(a) == legendre_oracle(a, 5));
    }
    const auto c8 = kronecker_character(Integer(8));
    CHECK(c8.real_value(1) == 1);
    CHECK(c8.real_value(3) == -1);
    CHECK(c8.real_value(5) == -1);
    CHECK(c8.real_value(7) == 1);
    CHECK(c8.real_value(2) == 0);
    const auto c12 = kronecker_character(Integer(12));
    CHECK(c12.real_value(1) == 1);
    CHECK(c12.real_value(5) == -1);
    CHECK(c12.real_value(7) == -1);
    CHECK(c12.real_value(11) == 1);
    CHECK(c12.is_even());
    // odd prime conductors agree with Euler's criterion
    for (long p : {13L, 17L, 29L, 37L, 41L}) {
        const auto c = kronecker_character(Integer(p));
        for (long a = 0; a < p; ++a) {
            CHECK(c.real_value(a) == legendre_oracle(a, p));
        }
    }
    CHECK_THROWS_AS(kronecker_character(Integer(20)), DomainError);
    CHECK_THROWS_AS(kronecker_character(Integer(3)), DomainError);
    CHECK_THROWS_AS(kronecker_character(Integer(1)), DomainError);
}

TEST_CASE("character groups of fields")
{
    const auto q5 = characters_for_field(field(2, 5));
    REQUIRE(q5.size() == 2);
    CHECK(q5[0] == DirichletCharacter::trivial());
    CHECK(q5[1] == kronecker_character(Integer(5)));

    const auto c49 = characters_for_field(field(3, 49));
    REQUIRE(c49.size() == 3);
    CHECK(c49[0] == DirichletCharacter::trivial());
    CHECK(c49[1].modulus() == 7);
    CHECK(c49[1].order() == 3);
    CHECK(*c49[1].exponent(3) == 1);
    CHECK(c49[1].is_even());
    CHECK(c49[2].is_conjugate_of(c49[1]));

    const auto c81 = characters_for_field(field(3, 81));
    REQUIRE(c81.size() == 3);
    CHECK(c81[1].modulus() == 9);
    CHECK(*c81[1].exponent(2) == 1);
    CHECK_FALSE(c81[1].exponent(3).has_value());
    CHECK(c81[2].is_conjugate_of(c81[1]));

    // conductor-discriminant formula
    for (const auto& f : testing_support::bundled().records) {
        if (!f.abelian) {
            CHECK_THROWS_AS(characters_for_field(f), UnsupportedFieldError);
            continue;
        }
        Integer prod = 1;
        for (const auto& chi : characters_for_field(f)) {
            prod *= chi.conductor();
            CHECK(chi.is_even());
        }
        CHECK(prod == f.disc);
    }
}

TEST_CASE("generalized bernoulli numbers")
{
    const auto c5 = kronecker_character(Integer(5));
    const auto c8 = kronecker_character(Integer(8));
    CHECK(generalized_bernoulli(2, c5).to_rational() == q("4/5"));
    CHECK(generalized_bernoulli(2, c8).to_rational() == Rational(2));
    CHECK(generalized_bernoulli(2, c5).to_rational() == real_bernoulli_oracle(2, {0, 1, -1, -1, 1}));
    CHECK(generalized_bernoulli(4, c8).to_rational() == real_bernoulli_oracle(4, {0, 1, 0, -1, 0, -1, 0, 1}));
    for (unsigned n = 1; n <= 15; n += 2) {
        CHECK(generalized_bernoulli(n, c5).to_rational().is_zero());
        CHECK(generalized_bernoulli(n, c8).to_rational().is_zero());
        for (const auto& chi : characters_for_field(field(3, 49))) {
            if (n >= 3) {
                CHECK(generalized_bernoulli(n, chi) == CyclotomicNumber(chi.order(), Rational(0)));
            }
        }
    }
    // trivial character: B_{n,1} = B_n for n >= 2
    for (unsigned n = 2; n <= 12; ++n) {
        CHECK(generalized_bernoulli(n, DirichletCharacter::trivial()).to_rational() == bernoulli_number(n));
    }
}

TEST_CASE("published special values, signs and conjugate collapse")
{
    int cells = 0;
    for (const auto& row : published_rows()) {
        const auto& f = field(row.degree, row.disc);
        const auto values = zeta_k_special_values(f, static_cast<unsigned>(row.values.size()));
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            CAPTURE(row.disc);
            CAPTURE(i + 1);
            CHECK(values[i].value == q(row.values[i]));
            CHECK(values[i].j == i + 1);
            // sign law (-1)^(j d)
            const int expected_sign = ((i + 1) * row.degree) % 2 == 0 ? 1 : -1;
            CHECK(values[i].value.sign() == expected_sign);
            ++cells;
        }
    }
    CHECK(cells == 24);

    // The cubic L-values are genuinely non-rational; only their product is.
    const auto c49 = characters_for_field(field(3, 49));
    auto l = generalized_bernoulli(2, c49[1]);
    CHECK_FALSE(l.is_rational());
    const auto norm = cyclotomic_mul(l, generalized_bernoulli(2, c49[2]));
    CHECK(norm.to_rational() * q("1/4") == q("4/7"));
    CHECK(zeta_k_special(field(3, 49), 1) == q("-1/12") * q("4/7"));
    CHECK_THROWS_AS(zeta_k_special(field(2, 5), 0), DomainError);
}

TEST_CASE("numeric zeta enclosures")
{
    const auto& f5 = field(2, 5);
    const auto z2 = zeta_k_numeric(f5, 2, 128);
    CHECK(z2.lo() > Rational(1));
    CHECK(z2.relative_width() < power_of_two(-64));

    // contains the functional-equation image of the exact value
    for (const auto& [d, disc] : std::vector<std::pair<int, long>>{{2, 5}, {2, 8}, {2, 13}, {3, 49}, {3, 81}}) {
        const auto& f = field(d, disc);
        for (unsigned j = 1; j <= 3; ++j) {
            CAPTURE(disc);
            CAPTURE(j);
            const auto numeric = zeta_k_numeric(f, 2 * j, 96);
            const auto image = zeta_even_from_special(f, j, zeta_k_special(f, j), 160);
            CHECK_FALSE(numeric.hi() < image.lo());
            CHECK_FALSE(image.hi() < numeric.lo());
        }
    }

    // zeta_k(4) < zeta(4)^2 for Q(sqrt 2): L(4, chi_8) < zeta(4) termwise
    const auto pi = pi_enclosure(200);
    const auto zeta4 = pi.pow(4) / RationalInterval::point(Rational(90));
    const auto z8 = zeta_k_numeric(field(2, 8), 4, 128);
    CHECK(z8.hi() < zeta4.pow(2).lo());
    CHECK(z8.lo() > Rational(1));

    // zeta(2) = pi^2/6 through a single residue class
    const auto basel = residue_class_sum(1, 1, 2, 32, 16, 128);
    CHECK(basel.contains((pi.pow(2) / RationalInterval::point(Rational(6))).midpoint()) == true);
    CHECK(basel.width() < power_of_two(-100));

    CHECK_THROWS_AS(zeta_k_numeric(f5, 3, 64), DomainError);
    try {
        zeta_k_numeric(f5, 2, 600, 32);
        FAIL("expected a precision error");
    } catch (const ZetaPrecisionError& e) {
        CHECK(e.best().lo() > Rational(1));
        CHECK_FALSE(e.best().hi() < z2.lo());
        CHECK_FALSE(z2.hi() < e.best().lo());
    }
}

TEST_CASE("numeric zeta at double precision")
{
    // Brute-force double partial sums agree to 1e-6.
    for (long disc : {5L, 8L, 12L}) {
        const auto chi = kronecker_character(Integer(disc));
        double zeta = 0;
        double l = 0;
        for (long n = 1; n < 2000000; ++n) {
            zeta += 1.0 / (double(n) * double(n));
            l += chi.real_value(n % disc) / (double(n) * double(n));
        }
        const auto enc = zeta_k_numeric(field(2, disc), 2, 96);
        CHECK(std::abs(enc.midpoint().to_double() - zeta * l) < 1e-6);
    }
}
