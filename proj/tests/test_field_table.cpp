#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "hypeuler/characters.hpp"
#include "hypeuler/digest.hpp"
#include "hypeuler/errors.hpp"
#include "hypeuler/field_table.hpp"
#include "support.hpp"

using namespace hypeuler;
using testing_support::bundled;

namespace {

const char* kHead = "hypeuler-fields v1\n#@ completeness 2 20\n";

std::string bundled_text()
{
    std::ifstream in(default_table_path());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Analytic class number formula: h log(eps) = -1/2 sum chi(a) log sin(pi a / D).
long analytic_class_number(long disc)
{
    const auto chi = kronecker_character(Integer(disc));
    long t = 0;
    long u = 1;
    for (;; ++u) {
        bool found = false;
        for (long s : {-4L, 4L}) {
            const long v = disc * u * u + s;
            const long root = std::lround(std::sqrt(static_cast<double>(v)));
            if (v > 0 && root * root == v) {
                t = root;
                found = true;
                break;
            }
        }
        if (found) {
            break;
        }
    }
    const double eps = (t + u * std::sqrt(static_cast<double>(disc))) / 2;
    double s = 0;
    for (long a = 1; a < disc; ++a) {
        s += chi.real_value(a) * std::log(std::sin(M_PI * static_cast<double>(a) / static_cast<double>(disc)));
    }
    return std::lround(-0.5 * s / std::log(eps));
}

std::filesystem::path scratch_dir()
{
    auto p = std::filesystem::temp_directory_path() / "hypeuler_field_table_test";
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("bundled table loads")
{
    const auto& t = bundled();
    CHECK(t.checksum.size() == 64);
    CHECK_FALSE(t.source.empty());
    CHECK(*t.completeness_bound(2) >= 1000);
    CHECK(*t.completeness_bound(3) >= 1000);
    CHECK(*t.completeness_bound(4) >= 1000);
    const auto& q5 = testing_support::field(2, 5);
    CHECK(q5.class_number == 1);
    CHECK(q5.totally_real);
    const auto& c49 = testing_support::field(3, 49);
    CHECK(c49.class_number == 1);
    CHECK(*c49.conductor == 7);
    CHECK(*c49.char_gen == CharacterGenerator{3, 1, 3});
    CHECK(*testing_support::field(3, 81).char_gen == CharacterGenerator{2, 1, 3});
    CHECK(*smallest_discriminant(t, 4) == 725);
    CHECK(*smallest_discriminant(t, 3) == 49);
    CHECK(*smallest_discriminant(t, 2) == 5);
}

TEST_CASE("queries")
{
    const auto& t = bundled();
    std::vector<long> d2;
    for (const auto& f : query(t, 2, Integer(20))) {
        d2.push_back(f.disc.get_si());
    }
    CHECK(d2 == std::vector<long>{5, 8, 12, 13, 17});
    std::vector<long> d3;
    for (const auto& f : query(t, 3, Integer(134))) {
        d3.push_back(f.disc.get_si());
    }
    CHECK(d3 == std::vector<long>{49, 81});
    CHECK(query(t, 4, Integer(640)).empty());
    CHECK_THROWS_AS(query(t, 2, Integer(1001)), table::IncompleteDataError);
    CHECK_THROWS_AS(query(t, 5, Integer(10)), table::IncompleteDataError);
}

TEST_CASE("schema and invariant errors")
{
    CHECK_THROWS_AS(parse_table("wrong header\n"), table::SchemaError);
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "2.2.5.1|2|5|1|true|true\n"), table::SchemaError);
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "2.2.5.1|2|five|1|true|true|5|-\n"), table::SchemaError);
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "2.2.5.1|2|5|1|yes|true|5|-\n"), table::SchemaError);
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "#@ frobnicate 1\n"), table::SchemaError);
    // duplicate (2, 5)
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "2.2.5.1|2|5|1|true|true|5|-\n2.2.5.2|2|5|1|true|true|5|-\n"),
                    table::InvariantError);
    // non-fundamental quadratic discriminant
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "2.2.20.1|2|20|1|true|true|20|-\n"), table::InvariantError);
    // quadratic conductor must equal D
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "2.2.5.1|2|5|1|true|true|7|-\n"), table::InvariantError);
    // cyclic cubic: conductor^2 = D
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "3.3.49.1|3|49|1|true|true|9|3:1:3\n"), table::InvariantError);
    // bundled records are totally real
    CHECK_THROWS_AS(parse_table(std::string(kHead) + "2.0.3.1|2|3|1|false|true|3|-\n"), table::InvariantError);
    const auto ok = parse_table(std::string(kHead) + "# a comment\n\n2.2.5.1|2|5|1|true|true|5|-\n");
    CHECK(ok.records.size() == 1);
}

TEST_CASE("checksums")
{
    const std::string text = bundled_text();
    CHECK(sha256_hex(canonical_table_content(text)) == bundled().checksum);
    // comments and trailing blanks do not change the digest
    CHECK(canonical_table_content(text + "\n# extra comment\n") == canonical_table_content(text));

    const auto dir = scratch_dir();
    const auto good = dir / "good.txt";
    std::filesystem::copy_file(default_table_path(), good, std::filesystem::copy_options::overwrite_existing);
    std::filesystem::copy_file(default_table_path().string() + ".sha256", good.string() + ".sha256",
                               std::filesystem::copy_options::overwrite_existing);
    CHECK_NOTHROW(load_table(good));

    const auto bad = dir / "bad.txt";
    std::string tampered = text;
    const auto pos = tampered.find("2.2.5.1|2|5|1|");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 14, "2.2.5.1|2|5|2|");
    std::ofstream(bad) << tampered;
    std::filesystem::copy_file(good.string() + ".sha256", bad.string() + ".sha256",
                               std::filesystem::copy_options::overwrite_existing);
    CHECK_THROWS_AS(load_table(bad), table::ChecksumError);

    const auto missing = dir / "missing.txt";
    std::ofstream(missing) << text;
    std::filesystem::remove(missing.string() + ".sha256");
    CHECK_THROWS_AS(load_table(missing), table::ChecksumError);
}

TEST_CASE("validation")
{
    const auto report = validate_table(bundled());
    CHECK(report.ok);
    CHECK(report.problems.empty());
    CHECK(report.class_numbers_checked > 20);

    FieldTable t = bundled();
    for (auto& f : t.records) {
        if (f.degree == 2 && f.disc == 5) {
            f.class_number = 2;
        }
    }
    const auto r1 = validate_table(t);
    CHECK_FALSE(r1.ok);
    REQUIRE_FALSE(r1.problems.empty());
    CHECK(r1.problems[0].find("2.2.5.1") != std::string::npos);

    FieldTable t2 = bundled();
    t2.records.push_back({"3.3.50.1", 3, Integer(50), 1, true, false, std::nullopt, std::nullopt});
    CHECK_FALSE(validate_table(t2).ok);

    FieldTable t3 = bundled();
    std::erase_if(t3.records, [](const auto& f) { return f.degree == 2 && f.disc == 13; });
    CHECK_FALSE(validate_table(t3).ok);
}

TEST_CASE("quadratic class numbers")
{
    for (long d = 2; d <= 100; ++d) {
        if (is_fundamental_discriminant(Integer(d))) {
            CAPTURE(d);
            CHECK(quadratic_class_number(d) == analytic_class_number(d));
        }
    }
    CHECK(quadratic_class_number(40) == 2);
    CHECK(quadratic_class_number(229) == 3);
    int compared = 0;
    for (const auto& f : bundled().records) {
        if (f.degree == 2) {
            CHECK(quadratic_class_number(f.disc.get_si()) == f.class_number);
            ++compared;
        }
    }
    CHECK(compared == 302);
    CHECK_THROWS_AS(quadratic_class_number(20), DomainError);
}

TEST_CASE("fundamental discriminants")
{
    std::vector<long> found;
    for (long d = 1; d <= 30; ++d) {
        if (is_fundamental_discriminant(Integer(d))) {
            found.push_back(d);
        }
    }
    CHECK(found == std::vector<long>{5, 8, 12, 13, 17, 21, 24, 28, 29});
}
