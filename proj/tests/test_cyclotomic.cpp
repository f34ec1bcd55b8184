#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "wilddiag/cyclotomic.hpp"

using namespace wilddiag;

namespace {

// Naive polynomial product, used to verify cyclotomic_poly independently.
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

CycloNumber pow(CycloNumber base, std::int64_t e) {
    CycloNumber out{Rational(1)};
    for (std::int64_t i = 0; i < e; ++i) out = out * base;
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials at small levels") {
    CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_poly(3) == std::vector<Int>{1, 1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic polynomials multiply back to x^n - 1") {
    for (std::int64_t n = 1; n <= 24; ++n) {
        CHECK(static_cast<std::int64_t>(cyclotomic_poly(n).size()) == euler_phi(n) + 1);
        std::vector<Int> prod{1};
        for (std::int64_t d : divisors(n)) prod = poly_mul(prod, cyclotomic_poly(d));
        std::vector<Int> expected(static_cast<std::size_t>(n) + 1, 0);
        expected.front() = -1;
        expected.back() = 1;
        CHECK(prod == expected);
    }
}

TEST_CASE("roots of unity") {
    CHECK(CycloNumber::root_of_unity(4, 2) == CycloNumber(Rational(-1)));
    CHECK(CycloNumber::root_of_unity(3, 0) == CycloNumber(Rational(1)));

    // zeta_6 = 1 + zeta_3, compared across levels.
    CycloNumber lhs = CycloNumber::root_of_unity(6, 1);
    CycloNumber rhs = CycloNumber(Rational(1)) + CycloNumber::root_of_unity(3, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("ring identities") {
    CycloNumber z3 = CycloNumber::root_of_unity(3, 1);
    CHECK((CycloNumber(Rational(1)) + z3 + z3 * z3).is_zero());

    CycloNumber z8 = CycloNumber::root_of_unity(8, 1);
    CHECK((z8 * CycloNumber::root_of_unity(8, 7)).is_one());

    CycloNumber embedded = CycloNumber::root_of_unity(3, 1).embedded(6);
    CHECK((CycloNumber::root_of_unity(6, 2) - embedded).is_zero());
}

TEST_CASE("root_of_unity powers return to one") {
    for (std::int64_t n = 1; n <= 24; ++n)
        for (std::int64_t a = 0; a < n; ++a) CHECK(pow(CycloNumber::root_of_unity(n, a), n).is_one());
}

TEST_CASE("field axioms on random elements") {
    testutil::Rng rng(20240801);
    for (int trial = 0; trial < 200; ++trial) {
        CycloNumber a = testutil::random_cyclo(rng);
        CycloNumber b = testutil::random_cyclo(rng);
        CycloNumber c = testutil::random_cyclo(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("embedding preserves values") {
    testutil::Rng rng(20240802);
    for (int trial = 0; trial < 100; ++trial) {
        CycloNumber a = testutil::random_cyclo(rng);
        const std::int64_t m = a.level() * testutil::pick(rng, 1, 4);
        CycloNumber up = a.embedded(m);
        CHECK(up.level() == m);
        CHECK(up == a);
        CHECK(up + (-a) == CycloNumber());
    }
}

TEST_CASE("level reduction finds minimal levels") {
    // zeta_6 lives in Q(zeta_3).
    CycloNumber z6 = CycloNumber::root_of_unity(6, 1);
    CHECK(z6.reduced().level() == 3);
    CHECK(z6.reduced() == z6);

    // zeta_8^2 = i lives at level 4.
    CycloNumber z8sq = CycloNumber::root_of_unity(8, 2);
    CHECK(z8sq.reduced().level() == 4);
    CHECK(z8sq.reduced() == CycloNumber::root_of_unity(4, 1));

    // A rational hiding at level 12.
    CycloNumber one = CycloNumber::root_of_unity(12, 6) * CycloNumber::root_of_unity(12, 6);
    CHECK(one.reduced().level() == 1);
    CHECK(one.reduced().rational_value() == 1);

    // zeta_5 is already minimal.
    CHECK(CycloNumber::root_of_unity(5, 1).reduced().level() == 5);
}

TEST_CASE("level reduction is idempotent on random values") {
    testutil::Rng rng(20240803);
    for (int trial = 0; trial < 100; ++trial) {
        CycloNumber a = testutil::random_cyclo(rng).embedded(24);
        CycloNumber r = a.reduced();
        CHECK(r == a);
        CHECK(r.reduced().level() == r.level());
        CHECK(r.reduced() == r);
    }
}
