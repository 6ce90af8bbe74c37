#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qd/errors.hpp"

namespace qd {

/// Exact element of Z[zeta_e], stored as the canonical representative of
/// degree < phi(e) modulo the e-th cyclotomic polynomial. Equality is exact
/// coefficient equality; 1, zeta, ..., zeta^{phi(e)-1} is a Z-basis of the
/// ring of integers, so rational integers are exactly the constant vectors.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, 0) {}

    static Cyclotomic zero(long long e);
    static Cyclotomic integer(long long e, long long n);
    static Cyclotomic zeta_power(long long e, long long k);
    /// sum_t v[t] * zeta^t from an arbitrary-length power vector
    static Cyclotomic from_powers(long long e, const std::vector<long long>& v);

    long long order() const { return order_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic scaled(long long k) const;
    /// exact division by a rational integer; throws VerificationError if any
    /// coefficient is not divisible
    Cyclotomic divided_exact(long long k) const;

    /// zeta -> zeta^s, requires gcd(s, e) = 1
    Cyclotomic galois(long long s) const;
    Cyclotomic conj() const;
    /// re-express in Z[zeta_E] for e | E
    Cyclotomic promote(long long bigger) const;

    bool is_zero() const;
    bool is_rational_integer() const;
    long long rational_value() const; // requires is_rational_integer()

    bool operator==(const Cyclotomic& o) const = default;
    std::strong_ordering operator<=>(const Cyclotomic& o) const;

    std::string to_string() const;

private:
    Cyclotomic(long long e, std::vector<long long> reduced)
        : order_(e), coeffs_(std::move(reduced)) {}

    long long order_;
    std::vector<long long> coeffs_; // size phi(e)
};

/// Monic e-th cyclotomic polynomial, low-degree-first coefficients.
const std::vector<long long>& cyclotomic_polynomial(long long e);

long long euler_phi(long long e);

} // namespace qd
