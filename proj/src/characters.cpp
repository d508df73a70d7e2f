#include "hypeuler/characters.hpp"

#include <numeric>

#include "hypeuler/bernoulli.hpp"
#include "hypeuler/errors.hpp"

namespace hypeuler {

namespace {

long mod_floor(long a, long m)
{
    const long r = a % m;
    return r < 0 ? r + m : r;
}

// Jacobi symbol (a / n) for odd n > 0.
int jacobi(Integer a, long n)
{
    a %= n;
    if (a < 0) {
        a += n;
    }
    long x = a.get_si();
    int result = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const long r = n % 8;
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(x, n);
        if (x % 4 == 3 && n % 4 == 3) {
            result = -result;
        }
        x %= n;
    }
    return n == 1 ? result : 0;
}

}  // namespace

DirichletCharacter::DirichletCharacter(long modulus, unsigned order, std::vector<int> exponents)
    : modulus_(modulus), order_(order), exponents_(std::move(exponents))
{
    if (modulus_ < 1 || order_ < 1 || exponents_.size() != static_cast<std::size_t>(modulus_)) {
        throw DomainError("malformed Dirichlet character data");
    }
    for (long a = 0; a < modulus_; ++a) {
        const bool unit = std::gcd(a, modulus_) == 1;
        const int e = exponents_[static_cast<std::size_t>(a)];
        if (unit != (e >= 0) || e >= static_cast<int>(order_)) {
            throw DomainError("character exponent table inconsistent at residue " + std::to_string(a));
        }
    }
    if (exponents_[static_cast<std::size_t>(1 % modulus_)] != 0) {
        throw DomainError("character must satisfy chi(1) = 1");
    }
    for (long a = 0; a < modulus_; ++a) {
        for (long b = 0; b < modulus_; ++b) {
            const auto ea = exponent(a);
            const auto eb = exponent(b);
            if (ea && eb && *exponent(a * b) != (*ea + *eb) % static_cast<int>(order_)) {
                throw DomainError("character table is not multiplicative");
            }
        }
    }
    primitive_ = conductor() == modulus_;
}

DirichletCharacter DirichletCharacter::trivial()
{
    return DirichletCharacter(1, 1, {0});
}

std::optional<int> DirichletCharacter::exponent(long n) const
{
    const int e = exponents_[static_cast<std::size_t>(mod_floor(n, modulus_))];
    if (e < 0) {
        return std::nullopt;
    }
    return e;
}

int DirichletCharacter::real_value(long n) const
{
    if (order_ > 2) {
        throw DomainError("real_value on a character of order " + std::to_string(order_));
    }
    const auto e = exponent(n);
    if (!e) {
        return 0;
    }
    return *e == 0 ? 1 : -1;
}

bool DirichletCharacter::is_even() const
{
    return *exponent(-1) == 0;
}

long DirichletCharacter::conductor() const
{
    for (long d = 1; d <= modulus_; ++d) {
        if (modulus_ % d != 0) {
            continue;
        }
        bool trivial_on_kernel = true;
        for (long a = 1; a < modulus_ && trivial_on_kernel; ++a) {
            if (std::gcd(a, modulus_) == 1 && a % d == 1 % d) {
                trivial_on_kernel = *exponent(a) == 0;
            }
        }
        if (trivial_on_kernel) {
            return d;
        }
    }
    return modulus_;
}

DirichletCharacter DirichletCharacter::primitive_reduction() const
{
    const long f = conductor();
    std::vector<int> ex(static_cast<std::size_t>(f), -1);
    for (long a = 1; a < modulus_ || (modulus_ == 1 && a == 1); ++a) {
        if (std::gcd(a, modulus_) == 1) {
            ex[static_cast<std::size_t>(a % f)] = *exponent(a);
        }
    }
    // Exact order: order / gcd(order, all exponents).
    int g = static_cast<int>(order_);
    for (int e : ex) {
        if (e > 0) {
            g = std::gcd(g, e);
        }
    }
    for (int& e : ex) {
        if (e >= 0) {
            e /= g;
        }
    }
    return DirichletCharacter(f, order_ / static_cast<unsigned>(g), std::move(ex));
}

DirichletCharacter DirichletCharacter::power(long k) const
{
    std::vector<int> ex = exponents_;
    for (int& e : ex) {
        if (e >= 0) {
            e = static_cast<int>(mod_floor(e * k, order_));
        }
    }
    return DirichletCharacter(modulus_, order_, std::move(ex));
}

bool DirichletCharacter::is_conjugate_of(const DirichletCharacter& other) const
{
    return power(-1) == other;
}

int kronecker_symbol(const Integer& d, long n)
{
    if (n < 0) {
        throw DomainError("kronecker_symbol needs n >= 0");
    }
    if (n == 0) {
        return abs(d) == 1 ? 1 : 0;
    }
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (mpz_even_p(d.get_mpz_t())) {
            return 0;
        }
        const unsigned long r = mpz_fdiv_ui(d.get_mpz_t(), 8);
        if (r == 3 || r == 5) {
            result = -result;
        }
    }
    return n == 1 ? result : result * jacobi(d, n);
}

DirichletCharacter kronecker_character(const Integer& disc)
{
    if (disc <= 1 || !is_fundamental_discriminant(disc)) {
        throw DomainError(to_string(disc) + " is not the discriminant of a real quadratic field");
    }
    const long f = disc.get_si();
    std::vector<int> ex(static_cast<std::size_t>(f), -1);
    for (long a = 0; a < f; ++a) {
        const int v = kronecker_symbol(disc, a);
        if (v != 0) {
            ex[static_cast<std::size_t>(a)] = v == 1 ? 0 : 1;
        }
    }
    return DirichletCharacter(f, 2, std::move(ex));
}

std::vector<DirichletCharacter> characters_for_field(const NumberFieldRecord& field)
{
    if (!field.abelian) {
        throw UnsupportedFieldError(field.label + " is not abelian; its zeta values need Siegel's method");
    }
    std::vector<DirichletCharacter> chars{DirichletCharacter::trivial()};
    if (field.degree == 2) {
        chars.push_back(kronecker_character(field.disc));
    } else {
        if (!field.conductor || !field.char_gen) {
            throw UnsupportedFieldError(field.label + " lacks character generator data");
        }
        const long f = *field.conductor;
        const auto& gen = *field.char_gen;
        std::vector<int> ex(static_cast<std::size_t>(f), -1);
        long x = 1 % f;
        long k = 0;
        do {
            if (ex[static_cast<std::size_t>(x)] >= 0) {
                break;
            }
            ex[static_cast<std::size_t>(x)] = static_cast<int>(mod_floor(gen.exponent * k, gen.order));
            x = (x * gen.generator) % f;
            ++k;
        } while (x != 1 % f);
        for (long a = 0; a < f; ++a) {
            if (std::gcd(a, f) == 1 && ex[static_cast<std::size_t>(a)] < 0) {
                throw UnsupportedFieldError(field.label + ": " + std::to_string(gen.generator)
                                            + " does not generate the units modulo " + std::to_string(f));
            }
        }
        if (k % static_cast<long>(gen.order) != 0) {
            throw UnsupportedFieldError(field.label + ": character order does not divide the unit group order");
        }
        const DirichletCharacter chi(f, gen.order, std::move(ex));
        for (unsigned i = 1; i < gen.order; ++i) {
            chars.push_back(chi.power(i).primitive_reduction());
        }
    }
    Integer conductor_product = 1;
    for (const auto& chi : chars) {
        if (!chi.is_even()) {
            throw ConsistencyError(field.label + ": odd character in the group of a totally real field");
        }
        conductor_product *= chi.modulus();
    }
    if (conductor_product != field.disc) {
        throw ConsistencyError(field.label + ": conductor-discriminant formula fails (" + to_string(conductor_product)
                               + " != " + to_string(field.disc) + ")");
    }
    return chars;
}

CyclotomicNumber generalized_bernoulli(unsigned n, const DirichletCharacter& chi)
{
    if (n < 1) {
        throw DomainError("generalized Bernoulli numbers need n >= 1");
    }
    const long f = chi.modulus();
    std::vector<Rational> weights(chi.order(), Rational(0));
    for (long a = 1; a <= f; ++a) {
        if (const auto e = chi.exponent(a)) {
            weights[static_cast<std::size_t>(*e)] += bernoulli_polynomial_eval(n, Rational(Integer(a), Integer(f)));
        }
    }
    return CyclotomicNumber::from_exponent_weights(chi.order(), weights) * Rational(Integer(f)).pow(n - 1);
}

}  // namespace hypeuler
