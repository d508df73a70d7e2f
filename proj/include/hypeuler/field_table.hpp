#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypeuler/rational.hpp"

namespace hypeuler {

/// Generator data of a cyclic character group: chi(generator) = zeta_order^exponent.
struct CharacterGenerator {
    long generator = 0;
    long exponent = 0;
    unsigned order = 0;

    friend bool operator==(const CharacterGenerator&, const CharacterGenerator&) = default;
};

struct NumberFieldRecord {
    std::string label;
    int degree = 0;
    Integer disc;  // |D_k|
    long class_number = 0;
    bool totally_real = false;
    bool abelian = false;
    std::optional<long> conductor;
    std::optional<CharacterGenerator> char_gen;

    friend bool operator==(const NumberFieldRecord&, const NumberFieldRecord&) = default;
};

struct CompletenessBound {
    int degree = 0;
    Integer max_disc;
};

/// Immutable after load; concurrent reads are safe.
struct FieldTable {
    std::vector<NumberFieldRecord> records;
    std::vector<CompletenessBound> completeness;
    std::string source;
    std::string checksum;

    std::optional<Integer> completeness_bound(int degree) const;
};

inline constexpr std::string_view kFieldTableHeader = "hypeuler-fields v1";

/// Text the detached checksum is computed over: non-empty lines without
/// trailing whitespace, plain comments dropped, "#@" metadata kept, each
/// line terminated by '\n'.
std::string canonical_table_content(std::string_view text);

/// Parses and checks every record invariant. Does not look at checksums.
/// Throws table::SchemaError or table::InvariantError.
FieldTable parse_table(std::string_view text);

/// Reads `path` and its detached digest `path` + ".sha256".
/// Throws table::SchemaError, table::InvariantError or table::ChecksumError.
FieldTable load_table(const std::filesystem::path& path);

std::filesystem::path default_table_path();

/// Totally real records of `degree` with disc <= max_disc, sorted by disc.
/// table::IncompleteDataError when max_disc exceeds the completeness bound.
std::vector<NumberFieldRecord> query(const FieldTable& table, int degree, const Integer& max_disc);

/// Smallest discriminant present for a degree (nullopt when none).
std::optional<Integer> smallest_discriminant(const FieldTable& table, int degree);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
    int class_numbers_checked = 0;
};

/// Re-checks record invariants plus dataset-level consistency (Stickelberger
/// congruence, cubic square discriminant iff cyclic, uniqueness) and
/// recomputes quadratic class numbers with D <= 100 independently.
ValidationReport validate_table(const FieldTable& table);

bool is_fundamental_discriminant(const Integer& d);

/// Class number of the real quadratic field of fundamental discriminant
/// D > 1, from the cycles of reduced indefinite binary quadratic forms.
long quadratic_class_number(long disc);

}  // namespace hypeuler
