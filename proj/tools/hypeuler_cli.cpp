// hypeuler: certify that no even-dimensional compact arithmetic hyperbolic
// orbifold of the given dimensions has Euler characteristic 1/q, or verify
// a previously written certificate.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypeuler/certificate.hpp"
#include "hypeuler/errors.hpp"
#include "hypeuler/report.hpp"
#include "hypeuler/search.hpp"
#include "hypeuler/verify.hpp"

namespace {

constexpr int kUsageError = 1;

bool write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

int emit(const hypeuler::Json& cert, const std::string& out_path, const std::string& report_path)
{
    const std::string text = hypeuler::serialize_certificate(cert);
    if (out_path.empty()) {
        std::cout << text;
    } else if (!write_file(out_path, text)) {
        std::cerr << "hypeuler: cannot write " << out_path << "\n";
        return 1;
    }
    if (!report_path.empty() && !write_file(report_path, hypeuler::render_report(cert))) {
        std::cerr << "hypeuler: cannot write " << report_path << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certify nonexistence of compact arithmetic hyperbolic n-orbifolds with reciprocal-integer "
                 "Euler characteristic"};
    app.set_version_flag("--version", std::string(HYPEULER_VERSION));

    std::vector<int> dims;
    std::vector<int> ranks;
    std::string fields = hypeuler::default_table_path().string();
    std::string out_path;
    std::string report_path;
    long precision = hypeuler::kDefaultPrecisionBits;
    int max_r = 12;
    std::string verify_path;

    auto* n_opt = app.add_option("--n", dims, "even dimension n >= 4 (repeatable)");
    auto* r_opt = app.add_option("--r", ranks, "rank r = n/2 >= 2 (repeatable)");
    n_opt->excludes(r_opt);
    app.add_option("--fields", fields, "field table (a .sha256 file must sit next to it)");
    app.add_option("--out", out_path, "certificate path (default: stdout)");
    app.add_option("--report", report_path, "write a text report here");
    app.add_option("--precision", precision, "interval precision in bits")->check(CLI::Range(64L, 4096L));
    app.add_option("--max-r", max_r, "largest rank when neither --n nor --r is given")->check(CLI::Range(3, 64));
    app.add_option("--verify", verify_path, "verify this certificate instead of certifying");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    for (int n : dims) {
        if (n < 4 || n % 2 != 0) {
            std::cerr << "hypeuler: --n " << n << ": n must be even and at least 4 (odd n has chi = 0)\n";
            return kUsageError;
        }
        ranks.push_back(n / 2);
    }
    for (int r : ranks) {
        if (r < 2) {
            std::cerr << "hypeuler: --r " << r << ": r must be at least 2\n";
            return kUsageError;
        }
    }
    if (!verify_path.empty() && (!dims.empty() || !ranks.empty())) {
        std::cerr << "hypeuler: --verify cannot be combined with --n or --r\n";
        return kUsageError;
    }

    std::optional<hypeuler::FieldTable> table;
    std::string table_error;
    try {
        table = hypeuler::load_table(fields);
        const auto report = hypeuler::validate_table(*table);
        if (!report.ok) {
            table_error = fields + ": " + report.problems.front();
            table.reset();
        }
    } catch (const hypeuler::Error& e) {
        table_error = fields + ": " + e.what();
    }

    if (!verify_path.empty()) {
        if (!table) {
            std::cerr << "hypeuler: " << table_error << "\n";
            return 1;
        }
        const auto res = hypeuler::verify_certificate_file(verify_path, *table);
        if (!res.ok) {
            std::cerr << "verification failed after " << res.checks << " checks: " << res.divergence << "\n";
            return 1;
        }
        std::cerr << "verified: " << res.checks << " claims re-derived\n";
        return 0;
    }

    if (!table) {
        std::cerr << "hypeuler: " << table_error << "\n";
        emit(hypeuler::failed_certificate(table_error, precision), out_path, report_path);
        return 1;
    }

    if (ranks.empty()) {
        for (int r = 3; r <= max_r; ++r) {
            ranks.push_back(r);
        }
    }
    const auto sections = hypeuler::certify_all(ranks, *table, precision);
    const hypeuler::Json cert = hypeuler::build_certificate(sections, *table, precision);
    for (const auto& s : sections) {
        std::cerr << "n=" << s.n() << ": " << hypeuler::to_string(s.verdict);
        if (!s.error.empty()) {
            std::cerr << " (" << s.error << ")";
        }
        std::cerr << "\n";
    }
    if (emit(cert, out_path, report_path) != 0) {
        return 1;
    }
    return hypeuler::exit_code(hypeuler::overall_verdict(sections));
}
