#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypeuler/field_table.hpp"
#include "hypeuler/interval.hpp"
#include "hypeuler/lambda.hpp"
#include "hypeuler/volume.hpp"

namespace hypeuler {

inline constexpr long kDefaultPrecisionBits = 192;

/// Odlyzko's lower bound |D_k| > 6.5^d for totally real k of degree d >= 5,
/// taken as an axiom.
inline constexpr long kOdlyzkoFloorNum = 13;
inline constexpr long kOdlyzkoFloorDen = 2;
inline constexpr int kOdlyzkoFromDegree = 5;
inline constexpr const char* kOdlyzkoCitation =
    "A. M. Odlyzko, Bounds for discriminants and related estimates for class numbers, regulators and zeros "
    "of zeta functions: a survey of recent results, Sem. Theor. Nombres Bordeaux 2 (1990), Table 4";

/// 16 (pi/12)^d D, an upper bound for h_k.
RationalInterval class_number_bound(int d, const Integer& disc, long bits = kDefaultPrecisionBits);

enum class HAssumption { bound_by_eq6, exactly_one };

std::string to_string(HAssumption h);

/// |chi(Gamma)| >= K * D^(e/2), written with doubled exponent so e is an
/// integer.
///   bound_by_eq6: K = (1/8) (6 C(r)/pi)^d,  e = 2 r^2 + r - 2
///   exactly_one:  K = 2 (C(r)/2)^d,         e = 2 r^2 + r
struct BoundsPass {
    int r = 0;
    int d = 0;
    HAssumption mode = HAssumption::bound_by_eq6;
    Integer disc_upper;
    long bits = 0;
    unsigned long doubled_exponent = 0;
    RationalInterval coefficient_squared;  // K^2
    RationalInterval bound_at_upper;       // K^2 * X^e
    RationalInterval bound_above_upper;    // K^2 * (X+1)^e, rigorously > 1
};

/// Evaluates K^2 for a mode at the given precision.
RationalInterval bound_coefficient_squared(int r, int d, HAssumption mode, long bits);

/// Largest X with K^2 X^e not rigorously above 1. Precision is raised until
/// X is also confirmed admissible by the upper endpoint.
BoundsPass disc_upper_bound(int r, int d, HAssumption mode, long bits = kDefaultPrecisionBits);

struct HighDegreeRecord {
    int r = 0;
    RationalInterval growth_squared;   // g^2, g = 6.5^(e/2) 6 C(r) / pi
    RationalInterval bound_at_five;    // (1/64) g^10 >= chi^2 lower bound at d = 5
    bool passed = false;
};

/// Checks that for every d >= 5 the bound_by_eq6 lower bound at D = 6.5^d
/// exceeds 1. ProofStepError when it does not.
HighDegreeRecord high_degree_exclusion(int r, long bits = kDefaultPrecisionBits);

struct DegreeSearch {
    BoundsPass bounds;
    std::vector<NumberFieldRecord> fields;
    std::optional<Integer> smallest_disc;  // smallest disc of that degree in the table
};

struct CandidateSearch {
    int r = 0;
    std::vector<DegreeSearch> pass1;
    std::vector<DegreeSearch> pass2;
    std::vector<NumberFieldRecord> candidates;
};

inline constexpr int kMinSearchDegree = 2;
inline constexpr int kMaxSearchDegree = 4;

/// Pass 1 with bound_by_eq6 limits, h_k = 1 check on every survivor, pass 2
/// with exactly_one limits. ProofStepError when a survivor has h_k > 1.
CandidateSearch enumerate_candidates(int r, const FieldTable& table, long bits = kDefaultPrecisionBits);

struct FieldVerdict {
    NumberFieldRecord field;
    std::vector<ZetaSpecialValue> zeta_values;
    Rational product;
    std::optional<Integer> witness;
    EulerChar principal;  // T empty
    bool obstructed() const { return witness.has_value(); }
};

FieldVerdict field_verdict(const NumberFieldRecord& field, int r);

enum class Verdict { certified, inconclusive, failed };

std::string to_string(Verdict v);

struct CertificateSection {
    int r = 0;
    Verdict verdict = Verdict::failed;
    std::string method;
    std::optional<HighDegreeRecord> high_degree;
    std::optional<CandidateSearch> search;
    std::optional<LambdaMinProof> lambda;
    std::vector<FieldVerdict> verdicts;
    std::vector<std::string> notes;
    std::string error;

    int n() const { return 2 * r; }
};

/// Never throws: module errors end up in a section with verdict failed.
CertificateSection certify_nonexistence(int r, const FieldTable& table, long bits = kDefaultPrecisionBits);

/// One section per r, computed concurrently, returned in input order.
std::vector<CertificateSection> certify_all(const std::vector<int>& ranks, const FieldTable& table,
                                            long bits = kDefaultPrecisionBits);

}  // namespace hypeuler
