#include "hypeuler/certificate.hpp"

#include "hypeuler/digest.hpp"
#include "hypeuler/errors.hpp"

namespace hypeuler {

namespace {

Json interval_json(const RationalInterval& x)
{
    return Json{{"lo", x.lo().str()}, {"hi", x.hi().str()}};
}

Json poly_json(const RatPolynomial& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs()) {
        a.push_back(c.str());
    }
    return a;
}

Json bounds_json(const DegreeSearch& ds, const FieldTable& table)
{
    const BoundsPass& b = ds.bounds;
    Json j;
    j["d"] = b.d;
    j["mode"] = to_string(b.mode);
    j["bits"] = b.bits;
    j["doubled_exponent"] = b.doubled_exponent;
    j["coefficient_squared"] = interval_json(b.coefficient_squared);
    j["disc_upper"] = to_string(b.disc_upper);
    j["bound_at_upper"] = interval_json(b.bound_at_upper);
    j["bound_above_upper"] = interval_json(b.bound_above_upper);
    const auto cover = table.completeness_bound(b.d);
    j["completeness"] = cover ? Json(to_string(*cover)) : Json(nullptr);
    j["smallest_disc"] = ds.smallest_disc ? Json(to_string(*ds.smallest_disc)) : Json(nullptr);
    Json fields = Json::array();
    for (const auto& f : ds.fields) {
        fields.push_back(f.label);
    }
    j["fields"] = fields;
    return j;
}

Json lambda_json(const LambdaMinProof& proof)
{
    Json j;
    j["type_count"] = proof.types.size();
    j["minimum"] = proof.minimum.str();
    j["minimizing_type"] = proof.minimizing_type;
    Json types = Json::array();
    for (const auto& t : proof.types) {
        Json tj;
        tj["key"] = t.type.key();
        tj["name"] = t.name;
        tj["polynomial"] = poly_json(t.polynomial);
        tj["shifted"] = poly_json(t.shifted);
        tj["value_at_two"] = t.value_at_two.str();
        tj["oracle_calibration"] = lambda_order_oracle(t.type, proof.r, Integer(2)).calibration.str();
        types.push_back(tj);
    }
    j["types"] = types;
    return j;
}

Json verdict_json(const FieldVerdict& v)
{
    Json j;
    j["label"] = v.field.label;
    j["degree"] = v.field.degree;
    j["disc"] = to_string(v.field.disc);
    j["class_number"] = v.field.class_number;
    Json zs = Json::array();
    for (const auto& z : v.zeta_values) {
        zs.push_back(Json{{"j", z.j}, {"value", z.value.str()}});
    }
    j["zeta"] = zs;
    j["product"] = v.product.str();
    j["chi_lambda"] = v.principal.chi_lambda.str();
    j["index_divisor"] = to_string(v.principal.index_divisor);
    j["chi_gamma_lower"] = v.principal.chi_gamma_lower.str();
    j["two_exponent"] = v.principal.two_exponent;
    j["witness"] = v.witness ? Json(to_string(*v.witness)) : Json(nullptr);
    j["conclusion"] = v.obstructed() ? "obstructed" : "unobstructed";
    return j;
}

Json section_json(const CertificateSection& s, const FieldTable& table)
{
    Json j;
    j["n"] = s.n();
    j["r"] = s.r;
    j["verdict"] = to_string(s.verdict);
    j["method"] = s.method;
    if (!s.error.empty()) {
        j["error"] = s.error;
    }
    j["notes"] = s.notes;
    if (s.high_degree) {
        const auto& h = *s.high_degree;
        j["high_degree"] = Json{{"from_degree", kOdlyzkoFromDegree},
                                {"growth_squared", interval_json(h.growth_squared)},
                                {"bound_at_five", interval_json(h.bound_at_five)},
                                {"passed", h.passed}};
    }
    if (s.search) {
        Json p1 = Json::array();
        Json p2 = Json::array();
        for (const auto& ds : s.search->pass1) {
            p1.push_back(bounds_json(ds, table));
        }
        for (const auto& ds : s.search->pass2) {
            p2.push_back(bounds_json(ds, table));
        }
        j["pass1"] = p1;
        j["pass2"] = p2;
        Json c = Json::array();
        for (const auto& f : s.search->candidates) {
            c.push_back(f.label);
        }
        j["candidates"] = c;
    }
    if (s.lambda) {
        j["lambda"] = lambda_json(*s.lambda);
    }
    Json vs = Json::array();
    for (const auto& v : s.verdicts) {
        vs.push_back(verdict_json(v));
    }
    j["fields"] = vs;
    return j;
}

Json axioms_json()
{
    Json a = Json::array();
    a.push_back(Json{{"name", "odlyzko_floor"},
                     {"statement", "|D_k| > (13/2)^d for every totally real field k of degree d >= 5"},
                     {"floor", Rational(Integer(kOdlyzkoFloorNum), Integer(kOdlyzkoFloorDen)).str()},
                     {"citation", kOdlyzkoCitation}});
    a.push_back(Json{{"name", "maximal_types"},
                     {"statement", "closed forms of lambda_v for the maximal parahoric types of B_r"},
                     {"formulas", lambda_formula_texts()},
                     {"fingerprint", maximal_type_fingerprint()}});
    return a;
}

Json header(long bits)
{
    Json j;
    j["format"] = kCertificateFormat;
    j["tool_version"] = HYPEULER_VERSION;
    j["precision_bits"] = bits;
    return j;
}

}  // namespace

std::string maximal_type_fingerprint()
{
    std::string text;
    for (const auto& line : lambda_formula_texts()) {
        text += line;
        text += '\n';
    }
    return sha256_hex(text);
}

Verdict overall_verdict(const std::vector<CertificateSection>& sections)
{
    if (sections.empty()) {
        return Verdict::failed;
    }
    Verdict v = Verdict::certified;
    for (const auto& s : sections) {
        if (s.verdict == Verdict::failed) {
            return Verdict::failed;
        }
        if (s.verdict == Verdict::inconclusive) {
            v = Verdict::inconclusive;
        }
    }
    return v;
}

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::certified:
        return 0;
    case Verdict::inconclusive:
        return 2;
    case Verdict::failed:
        return 1;
    }
    return 1;
}

Verdict parse_verdict(const std::string& text)
{
    for (Verdict v : {Verdict::certified, Verdict::inconclusive, Verdict::failed}) {
        if (to_string(v) == text) {
            return v;
        }
    }
    throw DomainError("unknown verdict '" + text + "'");
}

Json build_certificate(const std::vector<CertificateSection>& sections, const FieldTable& table, long bits)
{
    Json j = header(bits);
    Json completeness = Json::array();
    for (const auto& c : table.completeness) {
        completeness.push_back(Json{{"degree", c.degree}, {"max_disc", to_string(c.max_disc)}});
    }
    j["dataset"] = Json{{"checksum", table.checksum}, {"source", table.source}, {"completeness", completeness}};
    j["axioms"] = axioms_json();
    Json ss = Json::array();
    Json verdicts = Json::object();
    for (const auto& s : sections) {
        ss.push_back(section_json(s, table));
        verdicts["n=" + std::to_string(s.n())] = to_string(s.verdict);
    }
    j["sections"] = ss;
    j["verdicts"] = verdicts;
    j["overall"] = to_string(overall_verdict(sections));
    return j;
}

Json failed_certificate(const std::string& error, long bits)
{
    Json j = header(bits);
    j["sections"] = Json::array();
    j["verdicts"] = Json::object();
    j["overall"] = to_string(Verdict::failed);
    j["error"] = error;
    return j;
}

std::string serialize_certificate(const Json& cert)
{
    return cert.dump(2) + "\n";
}

}  // namespace hypeuler
