#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wilddiag/cyclotomic.hpp"

namespace wilddiag {

/**
 * An exponential factor: a finite sum of terms c * x^e with strictly positive
 * rational exponents and nonzero cyclotomic coefficients. The empty sum is the
 * zero factor. Coefficients are kept level-reduced, so structural equality of
 * the term maps coincides with equality of values.
 */
class ExpFactor {
public:
    ExpFactor() = default;

    /// Accumulates c * x^exponent. Rejects nonpositive exponents; zero
    /// coefficients (including cancellations) are dropped.
    void add_term(const Rational& exponent, const CycloNumber& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Rational, CycloNumber>& terms() const { return terms_; }

    /// lcm of the exponent denominators; 1 for the zero factor.
    std::int64_t ram() const;

    /// Largest exponent; 0 for the zero factor.
    Rational slope() const;

    /// Galois twist: each term c * x^(k/r) picks up zeta_r^(a*k), r = ram().
    ExpFactor conjugated(std::int64_t a) const;

    ExpFactor scaled(const CycloNumber& gamma) const;
    ExpFactor operator-(const ExpFactor& rhs) const;
    ExpFactor operator-() const;

    bool operator==(const ExpFactor& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const ExpFactor& rhs) const { return !(*this == rhs); }

    /// Total order used to pick canonical orbit representatives: descending
    /// exponent lists first, then coefficient keys (level, then coordinates,
    /// larger first so +x^e sorts before -x^e) per exponent.
    static int compare(const ExpFactor& a, const ExpFactor& b);

    /// Canonical display form, re-parseable by the input DSL ("0", "x^(3/2)",
    /// "2x^3 + x", "z3^1 x^(1/3)", ...).
    std::string to_string() const;

private:
    std::map<Rational, CycloNumber> terms_;
};

/**
 * A circle: the Galois orbit of an exponential factor, stored by its minimal
 * representative. The orbit of a factor with ramification r has exactly r
 * distinct elements.
 */
class Circle {
public:
    explicit Circle(const ExpFactor& q);

    const ExpFactor& rep() const { return rep_; }
    std::int64_t ram() const { return ram_; }
    Rational slope() const { return rep_.slope(); }

    /// ram * slope; the number of directions of maximal decay.
    std::int64_t irr() const;

    std::vector<ExpFactor> orbit() const;

    bool operator==(const Circle& o) const { return rep_ == o.rep_; }
    bool operator!=(const Circle& o) const { return !(*this == o); }
    static int compare(const Circle& a, const Circle& b) {
        return ExpFactor::compare(a.rep_, b.rep_);
    }

    std::string to_string() const { return "<" + rep_.to_string() + ">"; }

private:
    ExpFactor rep_;
    std::int64_t ram_;
};

inline Circle circle_of(const ExpFactor& q) { return Circle(q); }

/// A formal sum of distinct circles with positive integer multiplicities.
class IrregularClass {
public:
    IrregularClass() = default;

    /// Merges with an existing equal circle, summing multiplicities.
    void add(const Circle& c, std::int64_t mult);

    const std::vector<std::pair<Circle, std::int64_t>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Sum of mult * ram over all circles.
    std::int64_t rank() const;

    void sort_canonical();

    std::string to_string() const;

private:
    std::vector<std::pair<Circle, std::int64_t>> entries_;
};

std::int64_t irr_circle(const Circle& c);

/// Irregular class of differences between the two orbits: the multiset of the
/// ram1*ram2 pairwise differences of conjugates, grouped into circles. Each
/// group count is divisible by the circle's ramification.
IrregularClass hom_class(const Circle& c1, const Circle& c2);

/// Sum of mult * irr over the class.
std::int64_t irr_class(const IrregularClass& theta);

/// Irregularity of End: sum over pairs of n_i * n_j * Irr(hom(c_i, c_j)).
std::int64_t end_irr(const IrregularClass& theta);

}  // namespace wilddiag
