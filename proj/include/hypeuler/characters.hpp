#pragma once

#include <optional>
#include <vector>

#include "hypeuler/cyclotomic.hpp"
#include "hypeuler/field_table.hpp"
#include "hypeuler/rational.hpp"

namespace hypeuler {

/// Dirichlet character modulo `modulus` with values in the `order`-th roots
/// of unity: chi(a) = zeta_order^exponent(a) for gcd(a, modulus) = 1 and
/// chi(a) = 0 otherwise.
class DirichletCharacter {
public:
    /// `exponents[a]` for 0 <= a < modulus, -1 marking non-units.
    DirichletCharacter(long modulus, unsigned order, std::vector<int> exponents);

    static DirichletCharacter trivial();

    long modulus() const { return modulus_; }
    unsigned order() const { return order_; }
    bool primitive() const { return primitive_; }

    /// Exponent of chi(n), or nullopt when chi(n) = 0.
    std::optional<int> exponent(long n) const;
    /// chi(n) for real characters; DomainError when order > 2.
    int real_value(long n) const;
    bool is_even() const;

    /// Conductor and the primitive character inducing this one, with the
    /// order reduced to the exact multiplicative order.
    long conductor() const;
    DirichletCharacter primitive_reduction() const;

    /// chi^k with the same modulus.
    DirichletCharacter power(long k) const;
    bool is_conjugate_of(const DirichletCharacter& other) const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b)
    {
        return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exponents_ == b.exponents_;
    }

private:
    long modulus_;
    unsigned order_;
    std::vector<int> exponents_;
    bool primitive_ = false;
};

/// Kronecker symbol (d / n) for any integer d and n >= 0.
int kronecker_symbol(const Integer& d, long n);

/// Primitive real character of conductor D attached to Q(sqrt D).
/// DomainError when D is not a positive fundamental discriminant.
DirichletCharacter kronecker_character(const Integer& disc);

/// Full character group of an abelian field: the trivial character (modulus
/// 1) followed by the nontrivial primitive characters, so that
/// zeta_k(s) = prod L(s, chi). UnsupportedFieldError for non-abelian
/// records or missing generator data.
std::vector<DirichletCharacter> characters_for_field(const NumberFieldRecord& field);

/// B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f) in Q(zeta_order).
CyclotomicNumber generalized_bernoulli(unsigned n, const DirichletCharacter& chi);

}  // namespace hypeuler
