#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qd/errors.hpp"

namespace qd {

/// Element of a finite abelian group: one coordinate per invariant factor,
/// coordinate i reduced into [0, m_i).
using FinAbVec = std::vector<long long>;

/// Finite abelian group in invariant-factor form m_1 | m_2 | ... | m_t,
/// all factors > 1 (the trivial group has none).
class FinAbGroup {
public:
    FinAbGroup() = default;

    /// Canonicalize an arbitrary product Z/m_1 x ... x Z/m_k into a divisor
    /// chain (via SNF of the diagonal relation matrix). Original coordinates
    /// are not preserved.
    static FinAbGroup from_moduli(const std::vector<long long>& moduli);

    /// Factors must already form a divisor chain; entries equal to 1 are dropped.
    static FinAbGroup from_invariant_factors(std::vector<long long> factors);

    const std::vector<long long>& factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    unsigned long long order() const;
    long long exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    FinAbVec zero() const { return FinAbVec(factors_.size(), 0); }
    FinAbVec reduce(FinAbVec v) const;
    FinAbVec add(const FinAbVec& a, const FinAbVec& b) const;
    FinAbVec neg(const FinAbVec& a) const;
    FinAbVec sub(const FinAbVec& a, const FinAbVec& b) const;
    FinAbVec scalar_mul(long long k, const FinAbVec& a) const;
    bool is_zero(const FinAbVec& a) const;
    long long element_order(const FinAbVec& a) const;

    // mixed-radix enumeration, index 0 = zero element
    FinAbVec element_at(unsigned long long idx) const;
    unsigned long long index_of(const FinAbVec& v) const;

    std::string to_string() const;
    bool operator==(const FinAbGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<long long> factors_;
};

/// B[k] = {v in B : k*v = 0} with its inclusion matrix into B
/// (embed is rank(B) x rank(sub)).
struct TorsionSubgroup {
    FinAbGroup sub;
    std::vector<std::vector<long long>> embed;
    FinAbVec include(const FinAbGroup& ambient, const FinAbVec& v) const;
};

TorsionSubgroup torsion_subgroup(const FinAbGroup& b, long long k);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

} // namespace qd
