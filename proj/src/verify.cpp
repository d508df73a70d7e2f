#include "hypeuler/verify.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <map>

#include "hypeuler/bernoulli.hpp"
#include "hypeuler/cyclotomic.hpp"
#include "hypeuler/digest.hpp"
#include "hypeuler/errors.hpp"
#include "hypeuler/interval.hpp"
#include "hypeuler/polynomial.hpp"
#include "hypeuler/primes.hpp"

namespace hypeuler {

namespace {

class Divergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Checker {
    const FieldTable& table;
    long checks = 0;

    void require(bool cond, const std::string& claim)
    {
        ++checks;
        if (!cond) {
            throw Divergence(claim);
        }
    }
};

Rational rat(const Json& j)
{
    return Rational::parse(j.get<std::string>());
}

Integer integer(const Json& j)
{
    return parse_integer(j.get<std::string>());
}

RationalInterval interval(const Json& j)
{
    return RationalInterval(rat(j.at("lo")), rat(j.at("hi")));
}

bool overlaps(const RationalInterval& a, const RationalInterval& b)
{
    return !(a.hi() < b.lo() || b.hi() < a.lo());
}

RatPolynomial poly(const Json& j)
{
    std::vector<Rational> c;
    for (const auto& x : j) {
        c.push_back(rat(x));
    }
    return RatPolynomial(std::move(c));
}

// ---- characters and L-values, rebuilt from the dataset record ----

// Exponent of chi(a) in Z/order, or -1 when gcd(a, f) > 1.
struct CharacterTable {
    unsigned order = 1;
    long modulus = 1;
    std::vector<long> exponent;  // index a = 0..modulus-1
};

// Kronecker symbol (D/p) for a prime p, via Euler's criterion for odd p.
int kronecker_at_prime(const Integer& disc, long p)
{
    if (disc % p == 0) {
        return 0;
    }
    if (p == 2) {
        const long m = mpz_class(disc % 8).get_si();
        return (m == 1 || m == 7) ? 1 : -1;
    }
    Integer e;
    const Integer pp(p);
    mpz_powm_ui(e.get_mpz_t(), disc.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), pp.get_mpz_t());
    return e == 1 ? 1 : -1;
}

CharacterTable quadratic_table(const Integer& disc)
{
    CharacterTable t;
    t.order = 2;
    t.modulus = disc.get_si();
    t.exponent.assign(static_cast<std::size_t>(t.modulus), -1);
    for (long a = 1; a < t.modulus; ++a) {
        long rest = a;
        int value = 1;
        for (long p = 2; p * p <= rest; ++p) {
            while (rest % p == 0) {
                value *= kronecker_at_prime(disc, p);
                rest /= p;
            }
        }
        if (rest > 1) {
            value *= kronecker_at_prime(disc, rest);
        }
        if (value != 0) {
            t.exponent[static_cast<std::size_t>(a)] = value == 1 ? 0 : 1;
        }
    }
    return t;
}

CharacterTable cyclic_table(const NumberFieldRecord& f, Checker& ck)
{
    ck.require(f.conductor && f.char_gen, f.label + ": character data present");
    CharacterTable t;
    t.order = f.char_gen->order;
    t.modulus = *f.conductor;
    t.exponent.assign(static_cast<std::size_t>(t.modulus), -1);
    long x = 1;
    long k = 0;
    do {
        t.exponent[static_cast<std::size_t>(x)] = (f.char_gen->exponent * k) % static_cast<long>(t.order);
        x = (x * f.char_gen->generator) % t.modulus;
        ++k;
    } while (x != 1);
    for (long a = 1; a < t.modulus; ++a) {
        if (std::gcd(a, t.modulus) == 1) {
            ck.require(t.exponent[static_cast<std::size_t>(a)] >= 0,
                       f.label + ": " + std::to_string(f.char_gen->generator) + " generates the units mod "
                           + std::to_string(t.modulus));
        }
    }
    ck.require(t.exponent[static_cast<std::size_t>(t.modulus - 1)] == 0, f.label + ": character is even");
    return t;
}

// B_{n,chi} = sum_k C(n,k) B_k f^(k-1) sum_a chi(a) a^(n-k)
CyclotomicNumber bernoulli_by_power_sums(unsigned n, const CharacterTable& t)
{
    std::vector<Rational> weights(t.order, Rational(0));
    const Rational f(t.modulus);
    for (unsigned k = 0; k <= n; ++k) {
        const Rational bk = bernoulli_number(k);
        if (bk.is_zero()) {
            continue;
        }
        const Rational scale = Rational(binomial(n, k)) * bk * f.pow(static_cast<long>(k) - 1);
        for (long a = 1; a < t.modulus; ++a) {
            const long e = t.exponent[static_cast<std::size_t>(a)];
            if (e >= 0) {
                weights[static_cast<std::size_t>(e)] += scale * Rational(a).pow(n - k);
            }
        }
    }
    return CyclotomicNumber::from_exponent_weights(t.order, weights);
}

Rational recomputed_zeta(const NumberFieldRecord& f, unsigned j, Checker& ck)
{
    const unsigned n = 2 * j;
    const Rational minus_inv_n = Rational(-1) / Rational(static_cast<long>(n));
    Rational value = bernoulli_number(n) * minus_inv_n;
    if (f.degree == 2) {
        value *= bernoulli_by_power_sums(n, quadratic_table(f.disc)).to_rational() * minus_inv_n;
        return value;
    }
    ck.require(f.degree == 3 && f.abelian, f.label + ": field is quadratic or cyclic cubic");
    const CyclotomicNumber l = bernoulli_by_power_sums(n, cyclic_table(f, ck)) * minus_inv_n;
    return value * cyclotomic_mul(l, l.galois_conjugate(2)).to_rational();
}

// ---- maximal types ----

const std::vector<std::string>& own_formula_texts()
{
    static const std::vector<std::string> texts = {
        "split|B_{r-1} x GL1|(q^(2r)-1)/(q-1)",
        "split|D_i x B_{r-i}, 2<=i<=r-1|(q^i+1)*prod_{k=i+1..r}(q^(2k)-1)/prod_{k=1..r-i}(q^(2k)-1)",
        "split|1D_r|q^r+1",
        "nonsplit|B_{r-1} x GL1(nonsplit)|(q^(2r)-1)/(q+1)",
        "nonsplit|2D_{i+1} x B_{r-i-1}, 1<=i<=r-2|(q^(i+1)-1)*prod_{k=i+2..r}(q^(2k)-1)/prod_{k=1..r-i-1}(q^(2k)-1)",
        "nonsplit|2D_r|q^r-1",
    };
    return texts;
}

Integer q_products(const Integer& q, int from, int to)
{
    Integer p = 1;
    for (int k = from; k <= to; ++k) {
        p *= pow(q, static_cast<unsigned long>(2 * k)) - 1;
    }
    return p;
}

struct Fraction {
    Integer num;
    Integer den;
};

// Numerator and denominator of lambda at integer q, from the type key.
Fraction closed_form(const std::string& key, int r, const Integer& q)
{
    const auto ur = static_cast<unsigned long>(r);
    if (key == "split/b_gl1") {
        return {pow(q, 2 * ur) - 1, q - 1};
    }
    if (key == "nonsplit/b_gl1") {
        return {pow(q, 2 * ur) - 1, q + 1};
    }
    if (key == "split/d_r") {
        return {pow(q, ur) + 1, Integer(1)};
    }
    if (key == "nonsplit/d_r") {
        return {pow(q, ur) - 1, Integer(1)};
    }
    if (key.starts_with("split/d_b/")) {
        const int i = std::stoi(key.substr(10));
        return {(pow(q, static_cast<unsigned long>(i)) + 1) * q_products(q, i + 1, r), q_products(q, 1, r - i)};
    }
    if (key.starts_with("nonsplit/d_b/")) {
        const int i = std::stoi(key.substr(13));
        return {(pow(q, static_cast<unsigned long>(i + 1)) - 1) * q_products(q, i + 2, r),
                q_products(q, 1, r - i - 1)};
    }
    throw Divergence("unknown maximal type key " + key);
}

std::vector<std::string> expected_keys(int r)
{
    std::vector<std::string> keys{"split/b_gl1"};
    for (int i = 2; i <= r - 1; ++i) {
        keys.push_back("split/d_b/" + std::to_string(i));
    }
    keys.push_back("split/d_r");
    keys.push_back("nonsplit/b_gl1");
    for (int i = 1; i <= r - 2; ++i) {
        keys.push_back("nonsplit/d_b/" + std::to_string(i));
    }
    keys.push_back("nonsplit/d_r");
    return keys;
}

bool is_power_of_two(const Rational& x)
{
    if (x.sign() <= 0) {
        return false;
    }
    const Integer n = x.num();
    const Integer d = x.den();
    return (n & (n - 1)) == 0 && (d & (d - 1)) == 0;
}

void check_lambda(const Json& j, int r, Checker& ck)
{
    const std::string where = "r=" + std::to_string(r) + " lambda: ";
    const auto keys = expected_keys(r);
    const Json& types = j.at("types");
    ck.require(types.size() == keys.size() && j.at("type_count").get<std::size_t>() == keys.size(),
               where + "type count " + std::to_string(keys.size()));
    Rational minimum;
    std::string argmin;
    // A polynomial identity of degree <= N holds once it holds at N + 1 points.
    const long points = static_cast<long>(r) * (r + 1) + r + 2;
    for (std::size_t idx = 0; idx < keys.size(); ++idx) {
        const Json& t = types[idx];
        const std::string key = t.at("key").get<std::string>();
        const std::string tw = where + key + ": ";
        ck.require(key == keys[idx], where + "type " + std::to_string(idx) + " is " + keys[idx]);
        const RatPolynomial p = poly(t.at("polynomial"));
        ck.require(p.has_integer_coeffs(), tw + "integer coefficients");
        for (long q = 2; q < 2 + points; ++q) {
            const Fraction fr = closed_form(key, r, Integer(q));
            ck.require(p.eval(Rational(q)) * Rational(fr.den) == Rational(fr.num),
                       tw + "polynomial times denominator equals numerator at q=" + std::to_string(q));
        }
        const RatPolynomial shifted = poly(t.at("shifted"));
        ck.require(shifted == p.taylor_shift(Rational(2)), tw + "shifted coefficients are p(2+u)");
        for (const auto& c : shifted.coeffs()) {
            ck.require(c.sign() >= 0, tw + "shifted coefficients nonnegative");
        }
        const Rational at_two = rat(t.at("value_at_two"));
        const Fraction f2 = closed_form(key, r, Integer(2));
        ck.require(at_two == Rational(f2.num, f2.den), tw + "value at q=2");
        ck.require(at_two > Rational(4), tw + "value at q=2 exceeds 4");
        ck.require(is_power_of_two(rat(t.at("oracle_calibration"))), tw + "oracle calibration is a power of 2");
        if (idx == 0 || at_two < minimum) {
            minimum = at_two;
            argmin = t.at("name").get<std::string>();
        }
    }
    ck.require(rat(j.at("minimum")) == minimum, where + "minimum over types");
    ck.require(j.at("minimizing_type").get<std::string>() == argmin, where + "minimizing type");
}

// ---- bounds ----

RationalInterval own_c(int r, long bits)
{
    Integer fp = 1;
    for (int j = 1; j <= r; ++j) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * j - 1));
        fp *= f;
    }
    const RationalInterval two_pi = RationalInterval::point(Rational(2)) * pi_enclosure(bits);
    return RationalInterval::point(Rational(fp)) / two_pi.pow(static_cast<unsigned long>(r * (r + 1)));
}

RationalInterval own_k_squared(int r, int d, const std::string& mode, long bits)
{
    const long guard = bits + 64 + 8L * r * (r + 1);
    const RationalInterval c = own_c(r, guard);
    RationalInterval k;
    if (mode == "bound_by_eq6") {
        k = RationalInterval::point(Rational(Integer(1), Integer(8)))
            * (RationalInterval::point(Rational(6)) * c / pi_enclosure(guard)).pow(static_cast<unsigned long>(d));
    } else if (mode == "exactly_one") {
        k = RationalInterval::point(Rational(2))
            * (c / RationalInterval::point(Rational(2))).pow(static_cast<unsigned long>(d));
    } else {
        throw Divergence("unknown bound mode " + mode);
    }
    return k.pow(2).tightened(guard);
}

Integer check_bound(const Json& b, int r, const std::string& mode, Checker& ck)
{
    const int d = b.at("d").get<int>();
    const std::string where = "r=" + std::to_string(r) + " d=" + std::to_string(d) + " " + mode + ": ";
    ck.require(b.at("mode").get<std::string>() == mode, where + "mode");
    const unsigned long e = static_cast<unsigned long>(2L * r * r + r - (mode == "bound_by_eq6" ? 2 : 0));
    ck.require(b.at("doubled_exponent").get<unsigned long>() == e, where + "doubled exponent");
    const long bits = b.at("bits").get<long>();
    const RationalInterval k2 = own_k_squared(r, d, mode, bits);
    ck.require(overlaps(k2, interval(b.at("coefficient_squared"))), where + "coefficient enclosure");
    const Integer x = integer(b.at("disc_upper"));
    const Integer mine = integer_root_floor((Rational(1) / k2.lo()).floor(), e);
    ck.require(x == mine, where + "disc_upper " + to_string(x) + " (recomputed " + to_string(mine) + ")");
    ck.require(k2.lo() * Rational(pow(x + 1, e)) > Rational(1), where + "bound at disc_upper + 1 exceeds 1");
    ck.require(!(k2.lo() * Rational(pow(x, e)) > Rational(1)), where + "bound at disc_upper does not exceed 1");
    return x;
}

std::vector<std::string> labels(const Json& a)
{
    std::vector<std::string> out;
    for (const auto& x : a) {
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::vector<NumberFieldRecord> covered_fields(const FieldTable& table, int d, const Integer& x, const std::string& where,
                                              Checker& ck)
{
    const auto cover = table.completeness_bound(d);
    ck.require(cover && *cover >= x, where + "dataset complete up to " + to_string(x));
    std::vector<NumberFieldRecord> out;
    for (const auto& f : table.records) {
        if (f.degree == d && f.totally_real && f.disc <= x) {
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.disc != b.disc ? a.disc < b.disc : a.label < b.label;
    });
    return out;
}

std::vector<std::string> labels_of(const std::vector<NumberFieldRecord>& fs)
{
    std::vector<std::string> out;
    for (const auto& f : fs) {
        out.push_back(f.label);
    }
    return out;
}

const NumberFieldRecord& find_field(const FieldTable& table, const std::string& label, Checker& ck)
{
    for (const auto& f : table.records) {
        if (f.label == label) {
            return f;
        }
    }
    ck.require(false, "field " + label + " is in the dataset");
    throw Divergence("unreachable");
}

// ---- sections ----

bool check_field(const Json& v, int r, Checker& ck)
{
    const std::string label = v.at("label").get<std::string>();
    const NumberFieldRecord& f = find_field(ck.table, label, ck);
    const std::string where = "r=" + std::to_string(r) + " " + label + ": ";
    ck.require(v.at("degree").get<int>() == f.degree && integer(v.at("disc")) == f.disc
                   && v.at("class_number").get<long>() == f.class_number,
               where + "field data matches the dataset");
    ck.require(f.class_number == 1, where + "class number 1");
    const Json& zs = v.at("zeta");
    ck.require(zs.size() == static_cast<std::size_t>(r), where + "r special values");
    Rational product(1);
    for (unsigned j = 1; j <= static_cast<unsigned>(r); ++j) {
        const Json& z = zs[j - 1];
        const Rational claimed = rat(z.at("value"));
        const Rational mine = recomputed_zeta(f, j, ck);
        ck.require(z.at("j").get<unsigned>() == j && claimed == mine,
                   "zeta value (" + label + ", j=" + std::to_string(j) + "): certificate " + claimed.str()
                       + ", recomputed " + mine.str());
        product *= mine.abs();
    }
    ck.require(rat(v.at("product")) == product, where + "zeta product");
    const Rational chi = power_of_two(1 - static_cast<long>(r) * f.degree) * product;
    ck.require(rat(v.at("chi_lambda")) == chi, where + "chi_lambda");
    const Integer index = Integer(f.class_number) * pow(Integer(2), static_cast<unsigned long>(f.degree));
    ck.require(integer(v.at("index_divisor")) == index, where + "index divisor");
    const Rational lower = chi / Rational(index);
    ck.require(rat(v.at("chi_gamma_lower")) == lower, where + "chi_gamma_lower");
    ck.require(v.at("two_exponent").get<long>() == (product / lower).two_adic_valuation(), where + "two exponent");

    Integer odd = product.num();
    while (odd % 2 == 0) {
        odd /= 2;
    }
    const bool obstructed = odd > 1;
    if (v.at("witness").is_null()) {
        ck.require(!obstructed, where + "no odd prime divides " + to_string(odd));
    } else {
        const Integer w = integer(v.at("witness"));
        ck.require(w > 2 && is_prime(w), where + "witness " + to_string(w) + " is an odd prime");
        ck.require(odd % w == 0, where + "witness " + to_string(w) + " divides the product numerator");
        ck.require(w < 10'000'000, where + "witness small enough for a minimality check");
        for (long m = 3; m < w.get_si(); m += 2) {
            if (odd % m == 0) {
                ck.require(false, where + "witness " + to_string(w) + " is the smallest odd prime (" + std::to_string(m)
                                      + " divides)");
            }
        }
    }
    ck.require(v.at("conclusion").get<std::string>() == (obstructed ? "obstructed" : "unobstructed"),
               where + "conclusion");
    return obstructed;
}

Verdict check_section(const Json& s, Checker& ck)
{
    const int r = s.at("r").get<int>();
    const std::string where = "section n=" + std::to_string(2 * r) + ": ";
    ck.require(s.at("n").get<int>() == 2 * r, where + "n = 2r");
    const Verdict claimed = parse_verdict(s.at("verdict").get<std::string>());
    ck.require(claimed != Verdict::failed,
               where + "not failed" + (s.contains("error") ? " (" + s.at("error").get<std::string>() + ")" : ""));

    std::vector<std::string> candidates;
    if (r == 2) {
        for (const auto& p : s.at("pass2")) {
            const Integer x = check_bound(p, r, "exactly_one", ck);
            const int d = p.at("d").get<int>();
            const auto cover = ck.table.completeness_bound(d);
            if (cover && *cover >= x) {
                std::vector<std::string> expect;
                for (const auto& f : covered_fields(ck.table, d, x, where, ck)) {
                    if (f.class_number == 1 && f.abelian) {
                        expect.push_back(f.label);
                    }
                }
                ck.require(labels(p.at("fields")) == expect, where + "h = 1 fields for d=" + std::to_string(d));
                candidates.insert(candidates.end(), expect.begin(), expect.end());
            }
        }
        ck.require(labels(s.at("candidates")) == candidates, where + "candidate list");
        ck.require(claimed == Verdict::inconclusive, where + "n = 4 cannot be certified");
        for (const auto& v : s.at("fields")) {
            check_field(v, r, ck);
        }
        return claimed;
    }

    // high degrees
    const Json& h = s.at("high_degree");
    {
        const long guard = 256;
        const RationalInterval g = RationalInterval::point(Rational(6)) * own_c(r, guard + 16L * r * r)
                                   / pi_enclosure(guard);
        const Rational floor_base = Rational::parse("13/2");
        const RationalInterval g2 = (RationalInterval::point(floor_base.pow(2L * r * r + r - 2)) * g.pow(2));
        const RationalInterval at5 = g2.pow(5) / RationalInterval::point(Rational(64));
        ck.require(h.at("from_degree").get<int>() == 5, where + "high-degree record starts at d=5");
        ck.require(g2.lo() > Rational(1), where + "degree growth ratio exceeds 1");
        ck.require(at5.lo() > Rational(1), where + "bound at d=5 with D=(13/2)^5 exceeds 1");
        ck.require(h.at("passed").get<bool>(), where + "high-degree record marked passed");
        ck.require(overlaps(g2, interval(h.at("growth_squared"))), where + "growth enclosure");
    }

    const Json& p1 = s.at("pass1");
    const Json& p2 = s.at("pass2");
    ck.require(p1.size() == 3 && p2.size() == 3, where + "degrees 2, 3, 4 searched");
    std::map<std::string, Integer> pass1_disc;
    std::vector<std::vector<NumberFieldRecord>> survivors;
    bool any_pass1 = false;
    for (std::size_t i = 0; i < 3; ++i) {
        const int d = static_cast<int>(i) + 2;
        ck.require(p1[i].at("d").get<int>() == d && p2[i].at("d").get<int>() == d, where + "degree order");
        const Integer x = check_bound(p1[i], r, "bound_by_eq6", ck);
        auto fs = covered_fields(ck.table, d, x, where, ck);
        ck.require(labels(p1[i].at("fields")) == labels_of(fs), where + "pass-1 fields for d=" + std::to_string(d));
        for (const auto& f : fs) {
            ck.require(f.class_number == 1, where + "pass-1 survivor " + f.label + " has h = 1");
        }
        any_pass1 = any_pass1 || !fs.empty();
        survivors.push_back(std::move(fs));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const Integer x = check_bound(p2[i], r, "exactly_one", ck);
        std::vector<std::string> expect;
        for (const auto& f : survivors[i]) {
            if (f.disc <= x) {
                expect.push_back(f.label);
            }
        }
        ck.require(labels(p2[i].at("fields")) == expect, where + "pass-2 fields for d=" + std::to_string(i + 2));
        candidates.insert(candidates.end(), expect.begin(), expect.end());
    }
    ck.require(labels(s.at("candidates")) == candidates, where + "candidate list");

    if (!any_pass1) {
        ck.require(s.at("method").get<std::string>() == "bound-only", where + "bound-only method");
        ck.require(claimed == Verdict::certified, where + "verdict");
        return claimed;
    }
    check_lambda(s.at("lambda"), r, ck);
    const Json& fields = s.at("fields");
    ck.require(fields.size() == candidates.size(), where + "one verdict per candidate");
    bool all = true;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        ck.require(fields[i].at("label").get<std::string>() == candidates[i], where + "verdict order");
        all = check_field(fields[i], r, ck) && all;
    }
    const Verdict expect = all ? Verdict::certified : Verdict::inconclusive;
    ck.require(claimed == expect, where + "verdict is " + to_string(expect));
    return claimed;
}

void check_certificate(const Json& cert, Checker& ck)
{
    ck.require(cert.at("format").get<std::string>() == kCertificateFormat, "certificate format");
    ck.require(!cert.contains("error"), "run did not fail"
                                            + (cert.contains("error") ? ": " + cert.at("error").get<std::string>()
                                                                      : std::string()));
    ck.require(cert.at("dataset").at("checksum").get<std::string>() == ck.table.checksum,
               "dataset checksum matches the loaded table");

    bool odlyzko = false;
    bool types = false;
    for (const auto& a : cert.at("axioms")) {
        const std::string name = a.at("name").get<std::string>();
        if (name == "odlyzko_floor") {
            ck.require(a.at("floor").get<std::string>() == "13/2", "Odlyzko floor is 13/2");
            odlyzko = true;
        } else if (name == "maximal_types") {
            std::string text;
            for (const auto& l : own_formula_texts()) {
                text += l + "\n";
            }
            ck.require(a.at("formulas").get<std::vector<std::string>>() == own_formula_texts(),
                       "maximal-type formulas");
            ck.require(a.at("fingerprint").get<std::string>() == sha256_hex(text), "maximal-type fingerprint");
            types = true;
        }
    }
    ck.require(odlyzko && types, "axioms listed");

    const Json& sections = cert.at("sections");
    const Json& verdicts = cert.at("verdicts");
    ck.require(!sections.empty(), "at least one section");
    ck.require(verdicts.size() == sections.size(), "one verdict per section");
    Verdict overall = Verdict::certified;
    for (const auto& s : sections) {
        const Verdict v = check_section(s, ck);
        const std::string key = "n=" + std::to_string(s.at("n").get<int>());
        ck.require(verdicts.contains(key) && verdicts.at(key).get<std::string>() == to_string(v), "verdict " + key);
        if (v == Verdict::inconclusive) {
            overall = Verdict::inconclusive;
        }
    }
    ck.require(cert.at("overall").get<std::string>() == to_string(overall), "overall verdict");
}

}  // namespace

VerifyResult verify_certificate(const Json& cert, const FieldTable& table)
{
    Checker ck{table};
    VerifyResult res;
    try {
        check_certificate(cert, ck);
        res.ok = true;
    } catch (const Divergence& d) {
        res.divergence = d.what();
    } catch (const Json::exception& e) {
        res.divergence = std::string("malformed certificate: ") + e.what();
    } catch (const std::exception& e) {
        res.divergence = std::string("verification error: ") + e.what();
    }
    res.checks = ck.checks;
    return res;
}

VerifyResult verify_certificate_file(const std::filesystem::path& path, const FieldTable& table)
{
    std::ifstream in(path);
    if (!in) {
        return {false, "cannot read " + path.string(), 0};
    }
    Json cert;
    try {
        cert = Json::parse(in);
    } catch (const Json::exception& e) {
        return {false, std::string("certificate does not parse: ") + e.what(), 0};
    }
    return verify_certificate(cert, table);
}

}  // namespace hypeuler
