#include "hypeuler/field_table.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hypeuler/digest.hpp"
#include "hypeuler/errors.hpp"
#include "hypeuler/interval.hpp"

namespace hypeuler {

namespace {

std::string rstrip(std::string_view s)
{
    std::size_t end = s.size();
    while (end > 0 && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) {
        --end;
    }
    return std::string(s.substr(0, end));
}

std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) {
                lines.push_back(rstrip(text.substr(start)));
            }
            break;
        }
        lines.push_back(rstrip(text.substr(start, nl - start)));
        start = nl + 1;
    }
    return lines;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

long parse_long(const std::string& field, const std::string& what, int line_no)
{
    try {
        const Integer v = parse_integer(field);
        if (!v.fits_slong_p()) {
            throw DomainError("out of range");
        }
        return v.get_si();
    } catch (const DomainError&) {
        throw table::SchemaError("line " + std::to_string(line_no) + ": bad " + what + " '" + field + "'");
    }
}

bool parse_bool(const std::string& field, const std::string& what, int line_no)
{
    if (field == "true") {
        return true;
    }
    if (field == "false") {
        return false;
    }
    throw table::SchemaError("line " + std::to_string(line_no) + ": " + what + " must be true/false, got '"
                             + field + "'");
}

bool is_perfect_square(const Integer& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_squarefree(const Integer& n)
{
    Integer m = abs(n);
    for (unsigned long p = 2; Integer(p) * p <= m; ++p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p * p)) {
            return false;
        }
    }
    return true;
}

// Record-level invariants; returns a description of the first violation.
std::optional<std::string> record_problem(const NumberFieldRecord& r)
{
    if (r.label.empty()) {
        return "empty label";
    }
    if (r.degree < 2) {
        return "degree must be at least 2";
    }
    if (r.disc < 1) {
        return "discriminant must be positive";
    }
    if (r.class_number < 1) {
        return "class number must be positive";
    }
    if (!r.totally_real) {
        return "only totally real fields are allowed";
    }
    if (r.char_gen) {
        const auto& g = *r.char_gen;
        if (!r.conductor) {
            return "character data without a conductor";
        }
        if (g.generator <= 0 || g.generator >= *r.conductor || std::gcd(g.generator, *r.conductor) != 1) {
            return "character generator is not a unit modulo the conductor";
        }
        if (g.order != static_cast<unsigned>(r.degree) || g.exponent < 0
            || g.exponent >= static_cast<long>(g.order)
            || std::gcd(g.exponent, static_cast<long>(g.order)) != 1) {
            return "character exponent/order inconsistent with the degree";
        }
    }
    if (r.degree == 2) {
        if (!is_fundamental_discriminant(r.disc)) {
            return "quadratic discriminant " + to_string(r.disc) + " is not fundamental";
        }
        if (!r.abelian) {
            return "quadratic fields are abelian";
        }
        if (!r.conductor || Integer(*r.conductor) != r.disc) {
            return "quadratic conductor must equal the discriminant";
        }
        if (r.char_gen) {
            return "quadratic records carry no generator data";
        }
        return std::nullopt;
    }
    if (r.abelian) {
        if (!r.conductor || !r.char_gen) {
            return "abelian record needs conductor and cyclic character generator";
        }
        // Cyclic of prime degree l: D = f^(l-1).
        if (r.degree == 3 && Integer(*r.conductor) * *r.conductor != r.disc) {
            return "cyclic cubic conductor squared must equal the discriminant";
        }
    } else if (r.conductor || r.char_gen) {
        return "non-abelian record must not carry conductor or character data";
    }
    return std::nullopt;
}

NumberFieldRecord parse_record(const std::string& line, int line_no)
{
    const auto fields = split(line, '|');
    if (fields.size() != 8) {
        throw table::SchemaError("line " + std::to_string(line_no) + ": expected 8 '|'-separated fields, got "
                                 + std::to_string(fields.size()));
    }
    NumberFieldRecord r;
    r.label = fields[0];
    r.degree = static_cast<int>(parse_long(fields[1], "degree", line_no));
    try {
        r.disc = parse_integer(fields[2]);
    } catch (const DomainError&) {
        throw table::SchemaError("line " + std::to_string(line_no) + ": bad discriminant '" + fields[2] + "'");
    }
    r.class_number = parse_long(fields[3], "class number", line_no);
    r.totally_real = parse_bool(fields[4], "totally_real", line_no);
    r.abelian = parse_bool(fields[5], "abelian", line_no);
    if (fields[6] != "-") {
        r.conductor = parse_long(fields[6], "conductor", line_no);
    }
    if (fields[7] != "-") {
        const auto parts = split(fields[7], ':');
        if (parts.size() != 3) {
            throw table::SchemaError("line " + std::to_string(line_no) + ": char_gen must be g:e:ord");
        }
        const long ord = parse_long(parts[2], "character order", line_no);
        if (ord < 1) {
            throw table::SchemaError("line " + std::to_string(line_no) + ": character order must be positive");
        }
        r.char_gen = CharacterGenerator{parse_long(parts[0], "generator", line_no),
                                        parse_long(parts[1], "exponent", line_no), static_cast<unsigned>(ord)};
    }
    return r;
}

}  // namespace

std::optional<Integer> FieldTable::completeness_bound(int degree) const
{
    std::optional<Integer> best;
    for (const auto& c : completeness) {
        if (c.degree == degree && (!best || c.max_disc > *best)) {
            best = c.max_disc;
        }
    }
    return best;
}

std::string canonical_table_content(std::string_view text)
{
    std::string out;
    for (const auto& line : split_lines(text)) {
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#' && line.rfind("#@", 0) != 0) {
            continue;
        }
        out += line;
        out += '\n';
    }
    return out;
}

FieldTable parse_table(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0] != kFieldTableHeader) {
        throw table::SchemaError("missing header line '" + std::string(kFieldTableHeader) + "'");
    }
    FieldTable table;
    std::set<std::string> labels;
    std::set<Integer> quadratic_discs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (line.empty()) {
            continue;
        }
        if (line.rfind("#@", 0) == 0) {
            std::istringstream in(line.substr(2));
            std::string key;
            in >> key;
            if (key == "source") {
                std::string rest;
                std::getline(in, rest);
                table.source = rest.empty() ? rest : rest.substr(rest.find_first_not_of(' '));
            } else if (key == "completeness") {
                std::string deg;
                std::string bound;
                in >> deg >> bound;
                try {
                    table.completeness.push_back({static_cast<int>(parse_integer(deg).get_si()), parse_integer(bound)});
                } catch (const DomainError&) {
                    throw table::SchemaError("line " + std::to_string(line_no) + ": bad completeness directive");
                }
            } else {
                throw table::SchemaError("line " + std::to_string(line_no) + ": unknown directive '" + key + "'");
            }
            continue;
        }
        if (line[0] == '#') {
            continue;
        }
        NumberFieldRecord r = parse_record(line, line_no);
        if (auto problem = record_problem(r)) {
            throw table::InvariantError("line " + std::to_string(line_no) + " (" + r.label + "): " + *problem);
        }
        if (!labels.insert(r.label).second) {
            throw table::InvariantError("line " + std::to_string(line_no) + ": duplicate label " + r.label);
        }
        if (r.degree == 2 && !quadratic_discs.insert(r.disc).second) {
            throw table::InvariantError("line " + std::to_string(line_no) + ": duplicate quadratic field (2, "
                                        + to_string(r.disc) + ")");
        }
        table.records.push_back(std::move(r));
    }
    table.checksum = sha256_hex(canonical_table_content(text));
    return table;
}

FieldTable load_table(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw table::SchemaError("cannot read field table " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    const std::filesystem::path digest_path = path.string() + ".sha256";
    std::ifstream din(digest_path);
    std::string expected;
    if (!din || !(din >> expected)) {
        throw table::ChecksumError("missing checksum file " + digest_path.string());
    }
    FieldTable table = parse_table(text);
    if (table.checksum != expected) {
        throw table::ChecksumError("checksum mismatch for " + path.string() + ": expected " + expected + ", got "
                                   + table.checksum);
    }
    return table;
}

std::filesystem::path default_table_path()
{
    return std::filesystem::path(HYPEULER_DATA_DIR) / "fields.txt";
}

std::vector<NumberFieldRecord> query(const FieldTable& table, int degree, const Integer& max_disc)
{
    const auto bound = table.completeness_bound(degree);
    if (!bound || max_disc > *bound) {
        throw table::IncompleteDataError("degree " + std::to_string(degree) + " data is complete only up to "
                                         + (bound ? to_string(*bound) : std::string("nothing"))
                                         + ", query asks for " + to_string(max_disc));
    }
    std::vector<NumberFieldRecord> out;
    for (const auto& r : table.records) {
        if (r.totally_real && r.degree == degree && r.disc <= max_disc) {
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.disc != b.disc ? a.disc < b.disc : a.label < b.label;
    });
    return out;
}

std::optional<Integer> smallest_discriminant(const FieldTable& table, int degree)
{
    std::optional<Integer> best;
    for (const auto& r : table.records) {
        if (r.degree == degree && (!best || r.disc < *best)) {
            best = r.disc;
        }
    }
    return best;
}

bool is_fundamental_discriminant(const Integer& d)
{
    if (d == 1 || d == 0) {
        return false;
    }
    const long r4 = mpz_fdiv_ui(d.get_mpz_t(), 4);
    if (r4 == 1) {
        return is_squarefree(d);
    }
    if (r4 == 0) {
        const Integer m = d / 4;
        const long m4 = mpz_fdiv_ui(m.get_mpz_t(), 4);
        return (m4 == 2 || m4 == 3) && is_squarefree(m);
    }
    return false;
}

long quadratic_class_number(long disc)
{
    if (disc <= 1 || !is_fundamental_discriminant(Integer(disc))) {
        throw DomainError("not a real quadratic fundamental discriminant: " + std::to_string(disc));
    }
    const long s = static_cast<long>(integer_root_floor(Integer(disc), 2).get_si());
    struct Form {
        long a, b, c;
        auto operator<=>(const Form&) const = default;
    };
    // Reduced: 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b.
    auto is_reduced = [&](long a, long b) {
        const long two_a = 2 * std::abs(a);
        if (b <= 0 || b > s) {
            return false;
        }
        const bool lower = (two_a + b) * (two_a + b) > disc;
        const bool upper = two_a - b < 0 || (two_a - b) * (two_a - b) < disc;
        return lower && upper;
    };
    std::set<Form> reduced;
    for (long b = 1; b <= s; ++b) {
        if ((b - disc) % 2 != 0) {
            continue;
        }
        const long ac = (b * b - disc) / 4;  // negative
        for (long a = 1; a <= -ac; ++a) {
            if ((-ac) % a != 0) {
                continue;
            }
            for (long sign : {1L, -1L}) {
                const long aa = sign * a;
                if (is_reduced(aa, b)) {
                    reduced.insert({aa, b, ac / aa});
                }
            }
        }
    }
    // rho(a,b,c) = (c, b', (b'^2 - D)/(4c)) with b' = -b mod 2|c|, b' maximal <= floor(sqrt D).
    auto rho = [&](const Form& f) {
        const long m = 2 * std::abs(f.c);
        long bp = s - (((s + f.b) % m) + m) % m;
        const long cp = (bp * bp - disc) / (4 * f.c);
        return Form{f.c, bp, cp};
    };
    std::set<Form> seen;
    long cycles = 0;
    bool principal_has_minus_one = false;
    const long b0 = (s % 2 == disc % 2) ? s : s - 1;
    const Form principal{1, b0, (b0 * b0 - disc) / 4};
    for (const Form& start : reduced) {
        if (seen.count(start)) {
            continue;
        }
        ++cycles;
        bool contains_principal = false;
        bool contains_minus_one = false;
        Form f = start;
        do {
            seen.insert(f);
            contains_principal = contains_principal || f == principal;
            contains_minus_one = contains_minus_one || f.a == -1;
            f = rho(f);
        } while (!(f == start));
        if (contains_principal) {
            principal_has_minus_one = contains_minus_one;
        }
    }
    // Narrow class number equals the wide one exactly when the fundamental
    // unit has norm -1, detected by (-1, ., .) in the principal cycle.
    return principal_has_minus_one ? cycles : cycles / 2;
}

ValidationReport validate_table(const FieldTable& table)
{
    ValidationReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.problems.push_back(msg);
    };
    std::set<std::string> labels;
    std::set<Integer> quadratic_discs;
    for (const auto& r : table.records) {
        const std::string who = r.label + " (d=" + std::to_string(r.degree) + ", D=" + to_string(r.disc) + ")";
        if (auto problem = record_problem(r)) {
            fail(who + ": " + *problem);
        }
        if (!labels.insert(r.label).second) {
            fail(who + ": duplicate label");
        }
        if (r.degree == 2 && !quadratic_discs.insert(r.disc).second) {
            fail(who + ": duplicate quadratic field");
        }
        const long r4 = mpz_fdiv_ui(r.disc.get_mpz_t(), 4);
        // Totally real of degree d has sign (-1)^0 = +1, so D itself must be 0 or 1 mod 4.
        if (r4 != 0 && r4 != 1) {
            fail(who + ": violates Stickelberger's congruence, not a field discriminant");
        }
        if (r.degree == 3 && is_perfect_square(r.disc) != r.abelian) {
            fail(who + ": cubic discriminant is a square exactly for cyclic fields");
        }
        if (r.degree == 2 && r.disc <= 100 && is_fundamental_discriminant(r.disc)) {
            const long h = quadratic_class_number(r.disc.get_si());
            ++report.class_numbers_checked;
            if (h != r.class_number) {
                fail(who + ": class number " + std::to_string(r.class_number) + " but forms oracle gives "
                     + std::to_string(h));
            }
        }
    }
    for (int d : {2, 3, 4}) {
        const auto bound = table.completeness_bound(d);
        if (!bound || *bound < 1000) {
            fail("completeness for degree " + std::to_string(d) + " does not reach 1000");
        }
    }
    // Every real quadratic field inside the completeness range must be present.
    if (const auto bound = table.completeness_bound(2)) {
        for (long D = 5; Integer(D) <= *bound; ++D) {
            if (is_fundamental_discriminant(Integer(D)) && !quadratic_discs.count(Integer(D))) {
                fail("quadratic field with D=" + std::to_string(D) + " missing inside the completeness range");
            }
        }
    }
    return report;
}

}  // namespace hypeuler
