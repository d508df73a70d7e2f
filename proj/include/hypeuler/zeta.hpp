#pragma once

#include <string>
#include <vector>

#include "hypeuler/characters.hpp"
#include "hypeuler/errors.hpp"
#include "hypeuler/field_table.hpp"
#include "hypeuler/interval.hpp"

namespace hypeuler {

struct ZetaSpecialValue {
    std::string field_label;
    unsigned j = 0;
    Rational value;  // zeta_k(1 - 2j), signed
};

/// zeta_k(1-2j) = prod_chi L(1-2j, chi), L(1-n, chi) = -B_{n,chi}/n, computed
/// in the cyclotomic field of the character orders. The product must come
/// out rational; ConsistencyError otherwise.
Rational zeta_k_special(const NumberFieldRecord& field, unsigned j);

/// Values for j = 1..r.
std::vector<ZetaSpecialValue> zeta_k_special_values(const NumberFieldRecord& field, unsigned r);

inline constexpr long kDefaultZetaMaxTerms = 10'000;

/// Raised when the numeric evaluator cannot reach the requested width.
class ZetaPrecisionError : public Error {
public:
    ZetaPrecisionError(const std::string& what, RationalInterval best)
        : Error(what), best_(std::move(best))
    {
    }
    const RationalInterval& best() const { return best_; }

private:
    RationalInterval best_;
};

/// Rigorous enclosure of zeta_k(s) for even s >= 2 as a product of
/// L(s, chi). Each L-series is split by residue class mod the conductor;
/// every class sum is truncated after M terms and its tail enclosed by the
/// Euler-Maclaurin formula with an explicit remainder bound. M doubles until
/// the relative width drops below 2^(-bits/2) or exceeds `max_terms`.
/// Characters of order 1, 2, 3, 4, 6 are supported (rational real parts).
RationalInterval zeta_k_numeric(const NumberFieldRecord& field, unsigned s, long bits,
                                long max_terms = kDefaultZetaMaxTerms);

/// Enclosure of sum_{m >= 0} (a + m f)^(-s) using `terms` explicit terms and
/// `corrections` Euler-Maclaurin corrections. Exposed for testing.
RationalInterval residue_class_sum(long a, long f, unsigned s, long terms, unsigned corrections, long bits);

}  // namespace hypeuler
