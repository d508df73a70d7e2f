#include "hypeuler/zeta.hpp"

#include <numeric>

#include "hypeuler/bernoulli.hpp"

namespace hypeuler {

namespace {

Rational rising(unsigned s, unsigned k)
{
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= s + i;
    }
    return Rational(r);
}

Rational factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

// Re(zeta_m^k) for the orders whose real parts are rational.
Rational real_part_of_root(unsigned m, long k)
{
    const long e = ((k % static_cast<long>(m)) + m) % m;
    if (e == 0) {
        return Rational(1);
    }
    switch (m) {
    case 2:
        return Rational(-1);
    case 3:
        return Rational(Integer(-1), Integer(2));
    case 4:
        return e == 2 ? Rational(-1) : Rational(0);
    case 6:
        if (e == 3) {
            return Rational(-1);
        }
        return (e == 1 || e == 5) ? Rational(Integer(1), Integer(2)) : Rational(Integer(-1), Integer(2));
    default:
        throw UnsupportedFieldError("numeric L-values for characters of order " + std::to_string(m));
    }
}

}  // namespace

Rational zeta_k_special(const NumberFieldRecord& field, unsigned j)
{
    if (j < 1) {
        throw DomainError("zeta_k_special needs j >= 1");
    }
    const auto chars = characters_for_field(field);
    unsigned order = 1;
    for (const auto& chi : chars) {
        order = std::lcm(order, chi.order());
    }
    const unsigned n = 2 * j;
    const Rational scale = Rational(-1) / Rational(static_cast<long>(n));
    CyclotomicNumber product(order, Rational(1));
    for (const auto& chi : chars) {
        product = cyclotomic_mul(product, generalized_bernoulli(n, chi).lift(order) * scale);
    }
    if (!product.is_rational()) {
        throw ConsistencyError(field.label + ": zeta_k(" + std::to_string(1 - static_cast<long>(n))
                               + ") came out irrational: " + product.str());
    }
    return product.to_rational();
}

std::vector<ZetaSpecialValue> zeta_k_special_values(const NumberFieldRecord& field, unsigned r)
{
    std::vector<ZetaSpecialValue> out;
    for (unsigned j = 1; j <= r; ++j) {
        out.push_back({field.label, j, zeta_k_special(field, j)});
    }
    return out;
}

RationalInterval residue_class_sum(long a, long f, unsigned s, long terms, unsigned corrections, long bits)
{
    if (s < 2 || a < 1 || f < 1 || terms < 1) {
        throw DomainError("residue_class_sum needs s >= 2, a >= 1, f >= 1, terms >= 1");
    }
    const long guard = bits + 16;
    RationalInterval head = RationalInterval::point(Rational(0));
    for (long m = 0; m < terms; ++m) {
        const Rational term = Rational(Integer(a + m * f)).pow(-static_cast<long>(s));
        head = (head + RationalInterval::point(term)).tightened(guard);
    }
    // g(x) = (a + x f)^(-s); sum_{m >= M} g(m) by Euler-Maclaurin at x0 = a + M f.
    const Rational x0(Integer(a + terms * f));
    const Rational fr{Integer(f)};
    const long ss = static_cast<long>(s);
    Rational tail = x0.pow(1 - ss) / (fr * Rational(ss - 1)) + x0.pow(-ss) / Rational(2);
    for (unsigned k = 1; k <= corrections; ++k) {
        tail += bernoulli_number(2 * k) / factorial(2 * k) * fr.pow(2 * k - 1) * rising(s, 2 * k - 1)
                * x0.pow(-ss - 2 * static_cast<long>(k) + 1);
    }
    // |R| <= 4 |g^(2p)(M)| / (2 pi)^(2p+1) <= 4 |g^(2p)(M)| / 6^(2p+1).
    const unsigned p = corrections;
    const Rational remainder = Rational(4) * fr.pow(2 * p) * rising(s, 2 * p) * x0.pow(-ss - 2 * static_cast<long>(p))
                               / Rational(6).pow(2 * p + 1);
    const RationalInterval tail_box(tail - remainder, tail + remainder);
    return (head + tail_box.tightened(guard)).tightened(guard);
}

RationalInterval zeta_k_numeric(const NumberFieldRecord& field, unsigned s, long bits, long max_terms)
{
    if (s < 2 || s % 2 != 0) {
        throw DomainError("zeta_k_numeric needs an even s >= 2");
    }
    const auto chars = characters_for_field(field);
    const Rational target = power_of_two(-bits / 2);
    RationalInterval best;
    for (long terms = 16;; terms *= 2) {
        const unsigned corrections = static_cast<unsigned>(terms / 2);
        std::vector<bool> done(chars.size(), false);
        RationalInterval product = RationalInterval::point(Rational(1));
        for (std::size_t i = 0; i < chars.size(); ++i) {
            if (done[i]) {
                continue;
            }
            const auto& chi = chars[i];
            const long f = chi.modulus();
            std::vector<std::optional<RationalInterval>> sums(static_cast<std::size_t>(f) + 1);
            for (long a = 1; a <= f; ++a) {
                if (chi.exponent(a)) {
                    sums[static_cast<std::size_t>(a)] = residue_class_sum(a, f, s, terms, corrections, bits);
                }
            }
            RationalInterval factor = RationalInterval::point(Rational(0));
            if (chi.order() <= 2) {
                for (long a = 1; a <= f; ++a) {
                    if (sums[static_cast<std::size_t>(a)]) {
                        factor += RationalInterval::point(Rational(chi.real_value(a))) * *sums[static_cast<std::size_t>(a)];
                    }
                }
                done[i] = true;
            } else {
                std::size_t partner = i + 1;
                while (partner < chars.size() && !(done[partner] == false && chars[partner].is_conjugate_of(chi))) {
                    ++partner;
                }
                if (partner == chars.size()) {
                    throw ConsistencyError(field.label + ": complex character without its conjugate");
                }
                // L(s,chi) L(s,conj chi) = sum_{a,b} Re(chi(a) conj chi(b)) S_a S_b.
                for (long a = 1; a <= f; ++a) {
                    for (long b = 1; b <= f; ++b) {
                        const auto ea = chi.exponent(a);
                        const auto eb = chi.exponent(b);
                        if (!ea || !eb) {
                            continue;
                        }
                        const Rational re = real_part_of_root(chi.order(), *ea - *eb);
                        if (!re.is_zero()) {
                            factor += RationalInterval::point(re) * *sums[static_cast<std::size_t>(a)]
                                      * *sums[static_cast<std::size_t>(b)];
                        }
                    }
                }
                done[i] = true;
                done[partner] = true;
            }
            product = (product * factor.tightened(bits + 16)).tightened(bits + 16);
        }
        best = product;
        if (!product.contains_zero() && product.relative_width() < target) {
            return product.tightened(bits);
        }
        if (terms * 2 > max_terms) {
            throw ZetaPrecisionError(field.label + ": zeta_k(" + std::to_string(s) + ") enclosure did not reach 2^-"
                                         + std::to_string(bits / 2) + " relative width within "
                                         + std::to_string(max_terms) + " terms",
                                     best);
        }
    }
}

}  // namespace hypeuler
