#include "hypeuler/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hypeuler {

namespace {

std::string pretty(const Json& j)
{
    return Rational::parse(j.get<std::string>()).pretty();
}

std::string str_or(const Json& j, const char* key, const std::string& fallback)
{
    return j.contains(key) && j.at(key).is_string() ? j.at(key).get<std::string>() : fallback;
}

std::string join_values(const Json& zeta)
{
    std::string out;
    for (const auto& z : zeta) {
        if (!out.empty()) {
            out += ", ";
        }
        out += pretty(z.at("value"));
    }
    return out;
}

void render_pass(std::ostringstream& os, const Json& passes, const char* title)
{
    os << "  " << title << ":\n";
    for (const auto& p : passes) {
        os << "    d=" << p.at("d").get<int>() << "  |D| <= " << p.at("disc_upper").get<std::string>() << "  fields:";
        if (p.at("fields").empty()) {
            os << " none";
        }
        for (const auto& f : p.at("fields")) {
            os << ' ' << f.get<std::string>();
        }
        os << '\n';
    }
}

struct Row {
    int degree = 0;
    Integer disc;
    Json zeta;
};

}  // namespace

std::string render_report(const Json& cert)
{
    std::ostringstream os;
    os << "hypeuler certificate report\n";
    os << "format: " << str_or(cert, "format", "?") << "\n";
    os << "tool version: " << str_or(cert, "tool_version", "?") << "\n";
    if (cert.contains("precision_bits")) {
        os << "precision: " << cert.at("precision_bits").get<long>() << " bits\n";
    }
    if (cert.contains("dataset")) {
        os << "dataset: " << cert.at("dataset").at("checksum").get<std::string>() << "\n";
    }
    if (cert.contains("overall")) {
        os << "overall: " << cert.at("overall").get<std::string>() << "\n";
    }
    if (cert.contains("error")) {
        os << "error: " << cert.at("error").get<std::string>() << "\n";
    }
    if (!cert.contains("sections") || cert.at("sections").empty()) {
        return os.str();
    }

    std::map<std::string, Row> rows;
    for (const auto& s : cert.at("sections")) {
        os << "\nn = " << s.at("n").get<int>() << " (r = " << s.at("r").get<int>()
           << "): " << s.at("verdict").get<std::string>();
        if (!s.at("method").get<std::string>().empty()) {
            os << " [" << s.at("method").get<std::string>() << "]";
        }
        os << "\n";
        if (s.contains("error")) {
            os << "  error: " << s.at("error").get<std::string>() << "\n";
        }
        if (s.contains("high_degree")) {
            os << "  degrees >= " << s.at("high_degree").at("from_degree").get<int>()
               << ": excluded by the discriminant floor\n";
        }
        if (s.contains("pass1")) {
            render_pass(os, s.at("pass1"), "pass 1 (h bounded by the class number bound)");
        }
        if (s.contains("pass2")) {
            render_pass(os, s.at("pass2"), "pass 2 (h = 1)");
        }
        if (s.contains("lambda")) {
            const auto& l = s.at("lambda");
            os << "  lambda: " << l.at("type_count").get<int>() << " maximal types, minimum at q=2 is "
               << pretty(l.at("minimum")) << " (" << l.at("minimizing_type").get<std::string>() << ")\n";
        }
        for (const auto& f : s.at("fields")) {
            const std::string disc = f.at("disc").get<std::string>();
            os << "  D=" << disc << ": " << join_values(f.at("zeta")) << "\n";
            os << "    product " << pretty(f.at("product")) << ", ";
            if (f.at("witness").is_null()) {
                os << "trivial numerator: no odd prime, the argument fails for this field\n";
            } else {
                os << "witness " << f.at("witness").get<std::string>() << "\n";
            }
            const std::string key = f.at("label").get<std::string>();
            auto& row = rows[key];
            if (row.zeta.size() < f.at("zeta").size()) {
                row = {f.at("degree").get<int>(), parse_integer(disc), f.at("zeta")};
            }
        }
        for (const auto& note : s.at("notes")) {
            os << "  note: " << note.get<std::string>() << "\n";
        }
    }

    if (!rows.empty()) {
        std::vector<Row> sorted;
        for (auto& [label, row] : rows) {
            sorted.push_back(row);
        }
        std::sort(sorted.begin(), sorted.end(), [](const Row& a, const Row& b) {
            return a.degree != b.degree ? a.degree < b.degree : a.disc < b.disc;
        });
        os << "\nspecial values zeta_k(-1), zeta_k(-3), ...\n";
        int degree = 0;
        for (const auto& row : sorted) {
            if (row.degree != degree) {
                degree = row.degree;
                os << "  d=" << degree << "\n";
            }
            os << "    D=" << to_string(row.disc) << ": " << join_values(row.zeta) << "\n";
        }
    }
    return os.str();
}

}  // namespace hypeuler
