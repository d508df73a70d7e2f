#include "hypeuler/lambda.hpp"

#include "hypeuler/errors.hpp"
#include "hypeuler/primes.hpp"

namespace hypeuler {

namespace {

void check_type(const LambdaType& t, int r)
{
    if (r < 3) {
        throw DomainError("maximal types are tabulated for r >= 3, got r = " + std::to_string(r));
    }
    const bool needs_i = t.family == LambdaFamily::d_b;
    if (needs_i != t.i.has_value()) {
        throw DomainError("parameter i is required exactly for the D x B families");
    }
    if (needs_i) {
        const int lo = t.splitness == Splitness::split ? 2 : 1;
        const int hi = t.splitness == Splitness::split ? r - 1 : r - 2;
        if (*t.i < lo || *t.i > hi) {
            throw DomainError("parameter i = " + std::to_string(*t.i) + " outside [" + std::to_string(lo) + ", "
                              + std::to_string(hi) + "] for r = " + std::to_string(r));
        }
    }
}

void check_prime_power(const Integer& q)
{
    if (!prime_power_base(q)) {
        throw DomainError("residue field size " + to_string(q) + " is not a prime power");
    }
}

RatPolynomial product_q2k_minus_one(int from, int to)
{
    RatPolynomial p = RatPolynomial::constant(Rational(1));
    for (int k = from; k <= to; ++k) {
        p *= RatPolynomial::power_minus_one(static_cast<unsigned>(2 * k));
    }
    return p;
}

Integer prod_q2k_minus_one(int from, int to, const Integer& q)
{
    Integer p = 1;
    for (int k = from; k <= to; ++k) {
        p *= pow(q, static_cast<unsigned long>(2 * k)) - 1;
    }
    return p;
}

Rational raw_oracle(const LambdaType& t, int r, const Integer& q)
{
    Integer levi_order;
    int levi_dim = 0;
    const bool split = t.splitness == Splitness::split;
    switch (t.family) {
    case LambdaFamily::b_gl1:
        levi_order = order_type_b(r - 1, q) * (split ? Integer(q - 1) : Integer(q + 1));
        levi_dim = dim_type_b(r - 1) + 1;
        break;
    case LambdaFamily::d_b: {
        const int m = split ? *t.i : *t.i + 1;
        levi_order = (split ? order_type_d(m, q) : order_type_2d(m, q)) * order_type_b(r - m, q);
        levi_dim = dim_type_d(m) + dim_type_b(r - m);
        break;
    }
    case LambdaFamily::d_r:
        levi_order = split ? order_type_d(r, q) : order_type_2d(r, q);
        levi_dim = dim_type_d(r);
        break;
    }
    const int gap = dim_type_b(r) - levi_dim;
    if (gap % 2 != 0) {
        throw ConsistencyError("odd dimension gap for " + t.name(r));
    }
    return Rational(order_type_b(r, q), levi_order) / Rational(pow(q, static_cast<unsigned long>(gap / 2)));
}

}  // namespace

std::string LambdaType::name(int r) const
{
    const bool split = splitness == Splitness::split;
    switch (family) {
    case LambdaFamily::b_gl1:
        return "B_" + std::to_string(r - 1) + " x GL1" + (split ? "" : "(nonsplit)");
    case LambdaFamily::d_b:
        if (split) {
            return "D_" + std::to_string(*i) + " x B_" + std::to_string(r - *i);
        }
        return "2D_" + std::to_string(*i + 1) + " x B_" + std::to_string(r - *i - 1);
    case LambdaFamily::d_r:
        return (split ? "1D_" : "2D_") + std::to_string(r);
    }
    return "?";
}

std::string LambdaType::key() const
{
    std::string k = splitness == Splitness::split ? "split/" : "nonsplit/";
    switch (family) {
    case LambdaFamily::b_gl1:
        k += "b_gl1";
        break;
    case LambdaFamily::d_b:
        k += "d_b/" + std::to_string(*i);
        break;
    case LambdaFamily::d_r:
        k += "d_r";
        break;
    }
    return k;
}

std::vector<LambdaType> enumerate_maximal_types(int r)
{
    if (r < 3) {
        throw DomainError("maximal types are tabulated for r >= 3, got r = " + std::to_string(r));
    }
    std::vector<LambdaType> out;
    out.push_back({Splitness::split, LambdaFamily::b_gl1, std::nullopt});
    for (int i = 2; i <= r - 1; ++i) {
        out.push_back({Splitness::split, LambdaFamily::d_b, i});
    }
    out.push_back({Splitness::split, LambdaFamily::d_r, std::nullopt});
    out.push_back({Splitness::nonsplit, LambdaFamily::b_gl1, std::nullopt});
    for (int i = 1; i <= r - 2; ++i) {
        out.push_back({Splitness::nonsplit, LambdaFamily::d_b, i});
    }
    out.push_back({Splitness::nonsplit, LambdaFamily::d_r, std::nullopt});
    return out;
}

LambdaFraction lambda_fraction(const LambdaType& t, int r)
{
    check_type(t, r);
    const bool split = t.splitness == Splitness::split;
    const auto ur = static_cast<unsigned>(r);
    const RatPolynomial one = RatPolynomial::constant(Rational(1));
    switch (t.family) {
    case LambdaFamily::b_gl1:
        return {RatPolynomial::power_minus_one(2 * ur),
                split ? RatPolynomial::power_minus_one(1) : RatPolynomial::power_plus_one(1)};
    case LambdaFamily::d_b: {
        const int i = *t.i;
        if (split) {
            return {RatPolynomial::power_plus_one(static_cast<unsigned>(i)) * product_q2k_minus_one(i + 1, r),
                    product_q2k_minus_one(1, r - i)};
        }
        return {RatPolynomial::power_minus_one(static_cast<unsigned>(i + 1)) * product_q2k_minus_one(i + 2, r),
                product_q2k_minus_one(1, r - i - 1)};
    }
    case LambdaFamily::d_r:
        return {split ? RatPolynomial::power_plus_one(ur) : RatPolynomial::power_minus_one(ur), one};
    }
    throw DomainError("unknown lambda family");
}

Rational lambda_value(const LambdaType& t, int r, const Integer& q)
{
    check_type(t, r);
    check_prime_power(q);
    const bool split = t.splitness == Splitness::split;
    const auto ur = static_cast<unsigned long>(r);
    switch (t.family) {
    case LambdaFamily::b_gl1:
        return Rational(pow(q, 2 * ur) - 1, split ? Integer(q - 1) : Integer(q + 1));
    case LambdaFamily::d_b: {
        const int i = *t.i;
        if (split) {
            return Rational((pow(q, static_cast<unsigned long>(i)) + 1) * prod_q2k_minus_one(i + 1, r, q),
                            prod_q2k_minus_one(1, r - i, q));
        }
        return Rational((pow(q, static_cast<unsigned long>(i + 1)) - 1) * prod_q2k_minus_one(i + 2, r, q),
                        prod_q2k_minus_one(1, r - i - 1, q));
    }
    case LambdaFamily::d_r:
        return Rational(split ? Integer(pow(q, ur) + 1) : Integer(pow(q, ur) - 1));
    }
    throw DomainError("unknown lambda family");
}

RatPolynomial lambda_polynomial(const LambdaType& t, int r)
{
    const LambdaFraction frac = lambda_fraction(t, r);
    RatPolynomial p = poly_exact_divide(frac.numerator, frac.denominator);
    if (!p.has_integer_coeffs()) {
        throw NonExactDivisionError(t.name(r) + ": quotient " + p.str() + " has non-integral coefficients");
    }
    return p;
}

LambdaMinProof lambda_min_proof(int r)
{
    LambdaMinProof proof;
    proof.r = r;
    for (const auto& t : enumerate_maximal_types(r)) {
        LambdaTypeProof tp;
        tp.type = t;
        tp.name = t.name(r);
        try {
            tp.polynomial = lambda_polynomial(t, r);
        } catch (const NonExactDivisionError& e) {
            throw ProofStepError("lambda for " + tp.name + " is not an integral polynomial: " + e.what());
        }
        tp.shifted = tp.polynomial.taylor_shift(Rational(2));
        for (const auto& c : tp.shifted.coeffs()) {
            if (c.sign() < 0) {
                throw ProofStepError("lambda for " + tp.name + " is not visibly nondecreasing on q >= 2: "
                                     + tp.shifted.str("u"));
            }
        }
        tp.value_at_two = tp.polynomial.eval(Rational(2));
        if (tp.value_at_two != lambda_value(t, r, Integer(2))) {
            throw ConsistencyError("polynomial and closed form disagree at q = 2 for " + tp.name);
        }
        if (!(tp.value_at_two > Rational(4))) {
            throw ProofStepError("lambda for " + tp.name + " at q = 2 is " + tp.value_at_two.pretty()
                                 + ", not above 4");
        }
        if (proof.types.empty() || tp.value_at_two < proof.minimum) {
            proof.minimum = tp.value_at_two;
            proof.minimizing_type = tp.name;
        }
        proof.types.push_back(std::move(tp));
    }
    return proof;
}

Integer order_type_b(int m, const Integer& q)
{
    return pow(q, static_cast<unsigned long>(m * m)) * prod_q2k_minus_one(1, m, q);
}

Integer order_type_d(int m, const Integer& q)
{
    return pow(q, static_cast<unsigned long>(m * (m - 1))) * (pow(q, static_cast<unsigned long>(m)) - 1)
           * prod_q2k_minus_one(1, m - 1, q);
}

Integer order_type_2d(int m, const Integer& q)
{
    return pow(q, static_cast<unsigned long>(m * (m - 1))) * (pow(q, static_cast<unsigned long>(m)) + 1)
           * prod_q2k_minus_one(1, m - 1, q);
}

int dim_type_b(int m)
{
    return m * (2 * m + 1);
}

int dim_type_d(int m)
{
    return m * (2 * m - 1);
}

OracleValue lambda_order_oracle(const LambdaType& t, int r, const Integer& q)
{
    check_type(t, r);
    check_prime_power(q);
    const Rational calibration = lambda_value(t, r, Integer(2)) / raw_oracle(t, r, Integer(2));
    const Rational cal_abs = calibration.abs();
    const bool power_of_two = calibration.sign() > 0
                              && (cal_abs.num() & (cal_abs.num() - 1)) == 0
                              && (cal_abs.den() & (cal_abs.den() - 1)) == 0;
    if (!power_of_two) {
        throw ProofStepError("order oracle for " + t.name(r) + " differs from the closed form by "
                             + calibration.pretty() + ", not a power of 2");
    }
    const Rational raw = raw_oracle(t, r, q);
    return {raw, calibration, raw * calibration};
}

std::vector<std::string> lambda_formula_texts()
{
    return {
        "split|B_{r-1} x GL1|(q^(2r)-1)/(q-1)",
        "split|D_i x B_{r-i}, 2<=i<=r-1|(q^i+1)*prod_{k=i+1..r}(q^(2k)-1)/prod_{k=1..r-i}(q^(2k)-1)",
        "split|1D_r|q^r+1",
        "nonsplit|B_{r-1} x GL1(nonsplit)|(q^(2r)-1)/(q+1)",
        "nonsplit|2D_{i+1} x B_{r-i-1}, 1<=i<=r-2|(q^(i+1)-1)*prod_{k=i+2..r}(q^(2k)-1)/prod_{k=1..r-i-1}(q^(2k)-1)",
        "nonsplit|2D_r|q^r-1",
    };
}

}  // namespace hypeuler
