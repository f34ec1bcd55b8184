#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wilddiag/rational.hpp"

namespace wilddiag {

std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree.
/// Monic of degree euler_phi(n).
std::vector<Int> cyclotomic_poly(std::int64_t n);

/**
 * An element of the cyclotomic field Q(zeta_N), stored as coordinates in the
 * power basis 1, zeta, ..., zeta^(phi(N)-1) after reduction mod the N-th
 * cyclotomic polynomial. Coordinates are exact rationals; there is no
 * floating point anywhere. Binary operations on mixed levels embed both
 * operands into Q(zeta_lcm) first. The stored level is whatever the
 * construction produced; reduced() rewrites the value at its minimal level.
 */
class CycloNumber {
public:
    CycloNumber() : level_(1), coords_(1, Rational(0)) {}
    explicit CycloNumber(const Rational& value) : level_(1), coords_(1, value) {}
    CycloNumber(std::int64_t level, std::vector<Rational> coords);

    /// zeta_n^a in canonical form at level n; a is taken mod n.
    static CycloNumber root_of_unity(std::int64_t n, std::int64_t a);

    std::int64_t level() const { return level_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    /// Same value viewed in Q(zeta_m); level() must divide m.
    CycloNumber embedded(std::int64_t m) const;

    /// Same value at the smallest level containing it.
    CycloNumber reduced() const;

    bool equals(const CycloNumber& other) const;
    bool operator==(const CycloNumber& o) const { return equals(o); }
    bool operator!=(const CycloNumber& o) const { return !equals(o); }

    CycloNumber operator+(const CycloNumber& rhs) const;
    CycloNumber operator-(const CycloNumber& rhs) const;
    CycloNumber operator*(const CycloNumber& rhs) const;
    CycloNumber operator-() const;

    std::string to_string() const;

private:
    // Reduces an arbitrary polynomial in zeta_level mod Phi_level.
    static CycloNumber from_poly(std::int64_t level, std::vector<Rational> poly);

    std::int64_t level_;
    std::vector<Rational> coords_;  // size euler_phi(level_)
};

}  // namespace wilddiag
