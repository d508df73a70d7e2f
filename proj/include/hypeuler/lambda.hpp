#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypeuler/polynomial.hpp"
#include "hypeuler/rational.hpp"

namespace hypeuler {

enum class Splitness { split, nonsplit };

/// The three families on each side of the table of maximal parahoric types
/// for a group of type B_r.
///   split:    B_{r-1} x GL1,   D_i x B_{r-i} (2 <= i <= r-1),      1D_r
///   nonsplit: B_{r-1} x GL1ns, 2D_{i+1} x B_{r-i-1} (1 <= i <= r-2), 2D_r
enum class LambdaFamily { b_gl1, d_b, d_r };

struct LambdaType {
    Splitness splitness = Splitness::split;
    LambdaFamily family = LambdaFamily::b_gl1;
    std::optional<int> i;

    /// Human-readable isogeny type of the reductive quotient, e.g. "2D_{2} x B_{1}".
    std::string name(int r) const;
    /// Stable identifier, e.g. "nonsplit/d_b/1".
    std::string key() const;

    friend bool operator==(const LambdaType&, const LambdaType&) = default;
};

/// All maximal types for rank r >= 3: r split and r nonsplit entries.
std::vector<LambdaType> enumerate_maximal_types(int r);

/// Closed form for lambda_v at residue field size q (a prime power).
Rational lambda_value(const LambdaType& t, int r, const Integer& q);

/// Numerator and denominator polynomials of the closed form in q.
struct LambdaFraction {
    RatPolynomial numerator;
    RatPolynomial denominator;
};
LambdaFraction lambda_fraction(const LambdaType& t, int r);

/// Exact quotient of lambda_fraction; NonExactDivisionError if a remainder
/// appears or a coefficient is not an integer.
RatPolynomial lambda_polynomial(const LambdaType& t, int r);

struct LambdaTypeProof {
    LambdaType type;
    std::string name;
    RatPolynomial polynomial;
    RatPolynomial shifted;  // polynomial(2 + u), coefficients in u
    Rational value_at_two;
};

struct LambdaMinProof {
    int r = 0;
    std::vector<LambdaTypeProof> types;
    Rational minimum;
    std::string minimizing_type;
};

/// For each maximal type: integral polynomial form, nonnegative coefficients
/// after q = 2 + u, value at q = 2 above 4. ProofStepError on any failure.
LambdaMinProof lambda_min_proof(int r);

/// Orders and dimensions of finite reductive groups over F_q.
Integer order_type_b(int m, const Integer& q);
Integer order_type_d(int m, const Integer& q);
Integer order_type_2d(int m, const Integer& q);
int dim_type_b(int m);
int dim_type_d(int m);

struct OracleValue {
    Rational raw;          // q^{-(dim M - dim M')/2} |M(F_q)| / |M'(F_q)|
    Rational calibration;  // power of 2 relating raw to the closed form
    Rational calibrated;
};

/// Recomputes lambda_v from the orders of the finite groups of type B_r and
/// of the reductive quotient. The calibration is fixed per family from q = 2
/// and must be a power of 2; ProofStepError otherwise.
OracleValue lambda_order_oracle(const LambdaType& t, int r, const Integer& q);

/// Canonical text of the six closed forms, hashed into certificates.
std::vector<std::string> lambda_formula_texts();

}  // namespace hypeuler
