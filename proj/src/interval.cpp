#include "hypeuler/interval.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hypeuler/errors.hpp"

namespace hypeuler {

namespace {

long approx_log2(const Rational& x)
{
    const long n = static_cast<long>(mpz_sizeinbase(x.raw().get_num_mpz_t(), 2));
    const long d = static_cast<long>(mpz_sizeinbase(x.raw().get_den_mpz_t(), 2));
    return n - d;
}

Integer div_round(const Integer& a, const Integer& b, int direction)
{
    Integer q;
    if (direction < 0) {
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    } else {
        mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    return q;
}

Integer shift_left(const Integer& a, unsigned long k)
{
    Integer r;
    mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), k);
    return r;
}

// Enclosure of atan(1/x) for integer x >= 2 from consecutive partial sums.
RationalInterval atan_reciprocal(long x, long bits)
{
    Rational sum(0);
    Rational prev(0);
    const Rational x2 = Rational(x) * Rational(x);
    Rational power = Rational(1) / Rational(x);
    const Rational target = power_of_two(-bits);
    for (long k = 0;; ++k) {
        const Rational term = power / Rational(2 * k + 1);
        prev = sum;
        sum += (k % 2 == 0) ? term : -term;
        if (term < target && k > 0) {
            break;
        }
        power /= x2;
    }
    return sum < prev ? RationalInterval(sum, prev) : RationalInterval(prev, sum);
}

}  // namespace

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_) {
        throw DomainError("interval with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
    }
}

Rational RationalInterval::relative_width() const
{
    if (contains_zero()) {
        throw DomainError("relative width of an interval containing zero");
    }
    const Rational smallest = std::min(lo_.abs(), hi_.abs());
    return width() / smallest;
}

Rational round_dyadic(const Rational& x, long bits, int direction)
{
    if (x.is_zero()) {
        return x;
    }
    const long k = bits - approx_log2(x.abs());
    if (k >= 0) {
        const Integer m = div_round(shift_left(x.num(), static_cast<unsigned long>(k)), x.den(), direction);
        return Rational(m, shift_left(Integer(1), static_cast<unsigned long>(k)));
    }
    const Integer m = div_round(x.num(), shift_left(x.den(), static_cast<unsigned long>(-k)), direction);
    return Rational(shift_left(m, static_cast<unsigned long>(-k)));
}

RationalInterval RationalInterval::tightened(long bits) const
{
    return RationalInterval(round_dyadic(lo_, bits, -1), round_dyadic(hi_, bits, +1));
}

RationalInterval RationalInterval::pow(unsigned long exponent) const
{
    if (exponent == 0) {
        return point(Rational(1));
    }
    const auto e = static_cast<long>(exponent);
    const Rational a = lo_.pow(e);
    const Rational b = hi_.pow(e);
    if (exponent % 2 == 1 || lo_.sign() >= 0) {
        return RationalInterval(a, b);
    }
    if (hi_.sign() <= 0) {
        return RationalInterval(b, a);
    }
    return RationalInterval(Rational(0), std::max(a, b));
}

RationalInterval RationalInterval::reciprocal() const
{
    if (contains_zero()) {
        throw DomainError("reciprocal of an interval containing zero: " + str());
    }
    return RationalInterval(Rational(1) / hi_, Rational(1) / lo_);
}

RationalInterval RationalInterval::root(unsigned long k, long bits) const
{
    if (k == 0) {
        throw DomainError("zeroth root");
    }
    if (lo_.sign() < 0) {
        throw DomainError("root of an interval with negative points: " + str());
    }
    const auto scale = static_cast<unsigned long>(std::max(bits, 0L));
    auto bound = [&](const Rational& x, bool upper) {
        // x^(1/k) = (num * den^(k-1) * 2^(k*scale))^(1/k) / (den * 2^scale)
        const Integer radicand = shift_left(x.num() * hypeuler::pow(x.den(), k - 1), k * scale);
        Integer r = integer_root_floor(radicand, k);
        if (upper && hypeuler::pow(r, k) != radicand) {
            r += 1;
        }
        return Rational(r, shift_left(x.den(), scale));
    };
    return RationalInterval(bound(lo_, false), bound(hi_, true));
}

RationalInterval& RationalInterval::operator+=(const RationalInterval& o)
{
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
}

RationalInterval& RationalInterval::operator-=(const RationalInterval& o)
{
    Rational lo = lo_ - o.hi_;
    hi_ -= o.lo_;
    lo_ = std::move(lo);
    return *this;
}

RationalInterval& RationalInterval::operator*=(const RationalInterval& o)
{
    const Rational p[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
    lo_ = *std::min_element(std::begin(p), std::end(p));
    hi_ = *std::max_element(std::begin(p), std::end(p));
    return *this;
}

RationalInterval& RationalInterval::operator/=(const RationalInterval& o)
{
    return *this *= o.reciprocal();
}

RationalInterval pi_enclosure(long bits)
{
    static std::mutex mutex;
    static std::map<long, RationalInterval> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(bits); it != cache.end()) {
            return it->second;
        }
    }
    // pi = 16 atan(1/5) - 4 atan(1/239)
    const long guard = bits + 8;
    const RationalInterval pi = RationalInterval::point(Rational(16)) * atan_reciprocal(5, guard)
                                - RationalInterval::point(Rational(4)) * atan_reciprocal(239, guard);
    const RationalInterval result = pi.tightened(bits + 4);
    if (!(result.width() < power_of_two(-bits))) {
        throw ConsistencyError("pi enclosure wider than requested");
    }
    std::lock_guard lock(mutex);
    cache.emplace(bits, result);
    return result;
}

Integer integer_root_floor(const Integer& n, unsigned long k)
{
    if (n < 0) {
        throw DomainError("integer root of a negative number");
    }
    Integer r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

}  // namespace hypeuler
