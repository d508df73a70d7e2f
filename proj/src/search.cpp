#include "hypeuler/search.hpp"

#include <future>

#include "hypeuler/errors.hpp"

namespace hypeuler {

namespace {

constexpr int kMaxPrecisionRetries = 4;

RationalInterval pt(const Rational& x)
{
    return RationalInterval::point(x);
}

unsigned long doubled_exponent(int r, HAssumption mode)
{
    const long e = 2L * r * r + r - (mode == HAssumption::bound_by_eq6 ? 2 : 0);
    if (e <= 0) {
        throw DomainError("nonpositive discriminant exponent for r = " + std::to_string(r));
    }
    return static_cast<unsigned long>(e);
}

}  // namespace

RationalInterval class_number_bound(int d, const Integer& disc, long bits)
{
    if (d < 2 || disc < 1) {
        throw DomainError("class_number_bound needs d >= 2 and D >= 1");
    }
    const RationalInterval base = pi_enclosure(bits + 16) / pt(Rational(12));
    return (pt(Rational(16) * Rational(disc)) * base.pow(static_cast<unsigned long>(d))).tightened(bits);
}

std::string to_string(HAssumption h)
{
    return h == HAssumption::bound_by_eq6 ? "bound_by_eq6" : "exactly_one";
}

RationalInterval bound_coefficient_squared(int r, int d, HAssumption mode, long bits)
{
    if (d < 1) {
        throw DomainError("degree must be positive");
    }
    const long guard = bits + 32 + 8L * d;
    const RationalInterval c = c_of_r(r, guard).enclosure;
    RationalInterval k;
    if (mode == HAssumption::bound_by_eq6) {
        const RationalInterval base = pt(Rational(6)) * c / pi_enclosure(guard);
        k = pt(Rational(Integer(1), Integer(8))) * base.pow(static_cast<unsigned long>(d));
    } else {
        k = pt(Rational(2)) * (c / pt(Rational(2))).pow(static_cast<unsigned long>(d));
    }
    return k.tightened(guard).pow(2).tightened(bits);
}

BoundsPass disc_upper_bound(int r, int d, HAssumption mode, long bits)
{
    if (d < 2) {
        throw DomainError("disc_upper_bound needs d >= 2");
    }
    BoundsPass bp;
    bp.r = r;
    bp.d = d;
    bp.mode = mode;
    bp.doubled_exponent = doubled_exponent(r, mode);
    long b = bits;
    for (int attempt = 0;; ++attempt, b *= 2) {
        bp.bits = b;
        bp.coefficient_squared = bound_coefficient_squared(r, d, mode, b);
        // K_lo^2 X^e <= 1  <=>  X^e <= floor(1 / K_lo^2)
        const Integer cap = (Rational(1) / bp.coefficient_squared.lo()).floor();
        bp.disc_upper = integer_root_floor(cap, bp.doubled_exponent);
        const Integer x1 = bp.disc_upper + 1;
        bp.bound_at_upper = bp.coefficient_squared * pt(Rational(pow(bp.disc_upper, bp.doubled_exponent)));
        bp.bound_above_upper = bp.coefficient_squared * pt(Rational(pow(x1, bp.doubled_exponent)));
        if (!(bp.bound_above_upper.lo() > Rational(1))) {
            throw ConsistencyError("bound at X + 1 is not rigorously above 1");
        }
        if (bp.bound_at_upper.hi() <= Rational(1) || attempt + 1 >= kMaxPrecisionRetries) {
            return bp;
        }
    }
}

HighDegreeRecord high_degree_exclusion(int r, long bits)
{
    if (r < 3) {
        throw DomainError("high-degree exclusion needs r >= 3");
    }
    HighDegreeRecord rec;
    rec.r = r;
    const long guard = bits + 32;
    const unsigned long e = doubled_exponent(r, HAssumption::bound_by_eq6);
    const RationalInterval c = c_of_r(r, guard).enclosure;
    const RationalInterval g = pt(Rational(6)) * c / pi_enclosure(guard);
    const Rational floor_base{Integer(kOdlyzkoFloorNum), Integer(kOdlyzkoFloorDen)};
    rec.growth_squared = (pt(floor_base.pow(static_cast<long>(e))) * g.pow(2)).tightened(bits);
    rec.bound_at_five = (rec.growth_squared.pow(kOdlyzkoFromDegree) / pt(Rational(64))).tightened(bits);
    rec.passed = rec.growth_squared.lo() > Rational(1) && rec.bound_at_five.lo() > Rational(1);
    if (!rec.passed) {
        throw ProofStepError("degree >= 5 is not excluded for r = " + std::to_string(r) + ": growth^2 in "
                             + rec.growth_squared.str() + ", bound^2 at d = 5 in " + rec.bound_at_five.str());
    }
    return rec;
}

CandidateSearch enumerate_candidates(int r, const FieldTable& table, long bits)
{
    CandidateSearch cs;
    cs.r = r;
    for (int d = kMinSearchDegree; d <= kMaxSearchDegree; ++d) {
        DegreeSearch ds;
        ds.bounds = disc_upper_bound(r, d, HAssumption::bound_by_eq6, bits);
        ds.fields = query(table, d, ds.bounds.disc_upper);
        ds.smallest_disc = smallest_discriminant(table, d);
        for (const auto& f : ds.fields) {
            if (f.class_number != 1) {
                throw ProofStepError("pass-1 survivor " + f.label + " has h = " + std::to_string(f.class_number)
                                     + "; the h-aware bound is needed");
            }
        }
        cs.pass1.push_back(std::move(ds));
    }
    for (const auto& p1 : cs.pass1) {
        DegreeSearch ds;
        ds.bounds = disc_upper_bound(r, p1.bounds.d, HAssumption::exactly_one, bits);
        ds.smallest_disc = p1.smallest_disc;
        for (const auto& f : p1.fields) {
            if (f.disc <= ds.bounds.disc_upper) {
                ds.fields.push_back(f);
                cs.candidates.push_back(f);
            }
        }
        cs.pass2.push_back(std::move(ds));
    }
    return cs;
}

FieldVerdict field_verdict(const NumberFieldRecord& field, int r)
{
    const ArithmeticDatum datum{field, r, {}};
    Obstruction ob = reciprocal_integer_obstruction(datum);
    FieldVerdict v;
    v.field = field;
    v.zeta_values = std::move(ob.zeta_values);
    v.product = ob.product;
    v.witness = ob.witness;
    v.principal = euler_characteristic(datum);
    return v;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::certified:
        return "nonexistence certified";
    case Verdict::inconclusive:
        return "inconclusive";
    case Verdict::failed:
        return "failed";
    }
    return "failed";
}

namespace {

// n = 4: no lambda bound and no degree exclusion, so the search can only
// report what the h = 1 fields of small degree look like.
void certify_rank_two(CertificateSection& s, const FieldTable& table, long bits)
{
    s.method = "field verdicts over h = 1 fields (partial)";
    s.notes.push_back("maximal types and lambda_v > 4 are not available for r = 2");
    s.notes.push_back("degrees >= 5 are not excluded for r = 2");
    CandidateSearch cs;
    cs.r = s.r;
    for (int d = kMinSearchDegree; d <= kMaxSearchDegree; ++d) {
        DegreeSearch ds;
        ds.bounds = disc_upper_bound(s.r, d, HAssumption::exactly_one, bits);
        ds.smallest_disc = smallest_discriminant(table, d);
        const auto cover = table.completeness_bound(d);
        if (!cover || *cover < ds.bounds.disc_upper) {
            s.notes.push_back("degree " + std::to_string(d) + " bound " + to_string(ds.bounds.disc_upper)
                              + " exceeds the table's completeness");
        } else {
            for (const auto& f : query(table, d, ds.bounds.disc_upper)) {
                if (f.class_number != 1) {
                    continue;
                }
                if (!f.abelian) {
                    s.notes.push_back(f.label + " skipped: not abelian, no exact special values");
                    continue;
                }
                ds.fields.push_back(f);
                cs.candidates.push_back(f);
            }
        }
        cs.pass2.push_back(std::move(ds));
    }
    for (const auto& f : cs.candidates) {
        s.verdicts.push_back(field_verdict(f, s.r));
    }
    for (const auto& v : s.verdicts) {
        if (!v.obstructed()) {
            s.notes.push_back(v.field.label + " (D = " + to_string(v.field.disc)
                              + ") is unobstructed: the zeta product has trivial odd numerator");
        }
    }
    s.search = std::move(cs);
    s.verdict = Verdict::inconclusive;
}

}  // namespace

CertificateSection certify_nonexistence(int r, const FieldTable& table, long bits)
{
    CertificateSection s;
    s.r = r;
    try {
        if (r < 2) {
            throw DomainError("r must be at least 2");
        }
        if (r == 2) {
            certify_rank_two(s, table, bits);
            return s;
        }
        s.high_degree = high_degree_exclusion(r, bits);
        s.search = enumerate_candidates(r, table, bits);
        bool any_pass1 = false;
        for (const auto& p : s.search->pass1) {
            any_pass1 = any_pass1 || !p.fields.empty();
        }
        if (!any_pass1) {
            s.method = "bound-only";
            s.verdict = Verdict::certified;
            return s;
        }
        s.method = "field verdicts";
        s.lambda = lambda_min_proof(r);
        bool all = true;
        for (const auto& f : s.search->candidates) {
            s.verdicts.push_back(field_verdict(f, r));
            all = all && s.verdicts.back().obstructed();
        }
        s.verdict = all ? Verdict::certified : Verdict::inconclusive;
    } catch (const std::exception& e) {
        s.verdict = Verdict::failed;
        s.error = e.what();
    }
    return s;
}

std::vector<CertificateSection> certify_all(const std::vector<int>& ranks, const FieldTable& table, long bits)
{
    std::vector<std::future<CertificateSection>> jobs;
    jobs.reserve(ranks.size());
    for (int r : ranks) {
        jobs.push_back(std::async(std::launch::async, [r, &table, bits] { return certify_nonexistence(r, table, bits); }));
    }
    std::vector<CertificateSection> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

}  // namespace hypeuler
