#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "wilddiag/puiseux.hpp"

using namespace wilddiag;

namespace {

ExpFactor make_factor(std::initializer_list<std::pair<Rational, Rational>> terms) {
    ExpFactor q;
    for (const auto& [e, c] : terms) q.add_term(e, CycloNumber(c));
    return q;
}

const Rational half(1, 2);
const Rational third(1, 3);

}  // namespace

TEST_CASE("ramification") {
    CHECK(make_factor({{Rational(3, 2), 1}}).ram() == 2);
    CHECK(ExpFactor().ram() == 1);
    CHECK(make_factor({{Rational(3, 2), 1}, {third, 1}}).ram() == 6);
}

TEST_CASE("slope") {
    CHECK(make_factor({{Rational(5, 2), 1}}).slope() == Rational(5, 2));
    CHECK(ExpFactor().slope() == 0);
    CHECK(make_factor({{Rational(3), 2}, {Rational(1), 1}}).slope() == 3);
}

TEST_CASE("conjugation") {
    ExpFactor airy = make_factor({{Rational(3, 2), 1}});
    CHECK(airy.conjugated(1) == make_factor({{Rational(3, 2), -1}}));
    CHECK(airy.conjugated(0) == airy);

    ExpFactor unramified = make_factor({{Rational(2), 1}});
    CHECK(unramified.conjugated(1) == unramified);

    ExpFactor cubic = make_factor({{third, 1}});
    ExpFactor twisted;
    twisted.add_term(third, CycloNumber::root_of_unity(3, 1));
    CHECK(cubic.conjugated(1) == twisted);
}

TEST_CASE("conjugation composes additively") {
    testutil::Rng rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        ExpFactor q = testutil::random_factor(rng);
        const std::int64_t r = q.ram();
        const std::int64_t a = testutil::pick(rng, 0, r - 1);
        const std::int64_t b = testutil::pick(rng, 0, r - 1);
        CHECK(q.conjugated(a).conjugated(b) == q.conjugated(a + b));
    }
}

TEST_CASE("circles identify Galois orbits") {
    CHECK(circle_of(make_factor({{Rational(3, 2), -1}})) == circle_of(make_factor({{Rational(3, 2), 1}})));
    CHECK(circle_of(make_factor({{Rational(2), 1}})) != circle_of(make_factor({{Rational(2), -1}})));

    ExpFactor twisted;
    twisted.add_term(third, CycloNumber::root_of_unity(3, 1));
    CHECK(circle_of(twisted) == circle_of(make_factor({{third, 1}})));
}

TEST_CASE("orbit size equals ramification") {
    testutil::Rng rng(20240812);
    for (int trial = 0; trial < 60; ++trial) {
        Circle c = circle_of(testutil::random_factor(rng));
        auto orbit = c.orbit();
        CHECK(static_cast<std::int64_t>(orbit.size()) == c.ram());
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (std::size_t j = i + 1; j < orbit.size(); ++j) CHECK(orbit[i] != orbit[j]);
    }
}

TEST_CASE("irregularity of circles") {
    CHECK(circle_of(make_factor({{Rational(3, 2), 2}})).irr() == 3);
    CHECK(circle_of(ExpFactor()).irr() == 0);
    CHECK(circle_of(make_factor({{Rational(3, 2), 1}, {third, 1}})).irr() == 9);
}

TEST_CASE("hom class of the ramified cubic factor with itself") {
    Circle airy = circle_of(make_factor({{Rational(3, 2), 1}}));
    IrregularClass end = hom_class(airy, airy);
    REQUIRE(end.entries().size() == 2);

    Circle doubled = circle_of(make_factor({{Rational(3, 2), 2}}));
    Circle tame = circle_of(ExpFactor());
    bool found_doubled = false, found_tame = false;
    for (const auto& [c, m] : end.entries()) {
        if (c == doubled) {
            CHECK(m == 1);
            found_doubled = true;
        }
        if (c == tame) {
            CHECK(m == 2);
            found_tame = true;
        }
    }
    CHECK(found_doubled);
    CHECK(found_tame);
    CHECK(irr_class(end) == 3);
}

TEST_CASE("hom class between opposite unramified factors") {
    Circle plus = circle_of(make_factor({{Rational(2), 1}}));
    Circle minus = circle_of(make_factor({{Rational(2), -1}}));
    IrregularClass hom = hom_class(plus, minus);
    REQUIRE(hom.entries().size() == 1);
    CHECK(hom.entries()[0].first == circle_of(make_factor({{Rational(2), -2}})));
    CHECK(hom.entries()[0].second == 1);
    CHECK(irr_class(hom) == 2);
}

TEST_CASE("hom class between ram 2 and ram 3 factors") {
    Circle a = circle_of(make_factor({{half, 1}}));
    Circle b = circle_of(make_factor({{third, 1}}));
    IrregularClass hom = hom_class(a, b);
    REQUIRE(hom.entries().size() == 1);
    CHECK(hom.entries()[0].second == 1);
    CHECK(hom.entries()[0].first.ram() == 6);
    CHECK(hom.entries()[0].first.slope() == half);
    CHECK(irr_class(hom) == 3);
    CHECK(hom.rank() == 6);
}

TEST_CASE("irregularity of classes") {
    IrregularClass theta;
    CHECK(irr_class(theta) == 0);
    theta.add(circle_of(make_factor({{Rational(5, 2), 1}})), 2);
    CHECK(irr_class(theta) == 10);
}

TEST_CASE("irregularity of End") {
    IrregularClass airy;
    airy.add(circle_of(make_factor({{Rational(3, 2), 1}})), 1);
    CHECK(end_irr(airy) == 3);

    IrregularClass weber;
    weber.add(circle_of(make_factor({{Rational(2), 1}})), 1);
    weber.add(circle_of(make_factor({{Rational(2), -1}})), 1);
    CHECK(end_irr(weber) == 4);

    IrregularClass tame;
    tame.add(circle_of(ExpFactor()), 2);
    CHECK(end_irr(tame) == 0);
}

TEST_CASE("rank conservation and symmetry of hom") {
    testutil::Rng rng(20240813);
    for (int trial = 0; trial < 120; ++trial) {
        Circle c1 = circle_of(testutil::random_factor(rng));
        Circle c2 = circle_of(testutil::random_factor(rng));
        IrregularClass hom12 = hom_class(c1, c2);
        CHECK(hom12.rank() == c1.ram() * c2.ram());
        CHECK(irr_class(hom12) == irr_class(hom_class(c2, c1)));
    }
}

TEST_CASE("hom from the tame circle reproduces the target") {
    testutil::Rng rng(20240814);
    Circle tame = circle_of(ExpFactor());
    for (int trial = 0; trial < 40; ++trial) {
        Circle c = circle_of(testutil::random_factor(rng));
        IrregularClass hom = hom_class(tame, c);
        REQUIRE(hom.entries().size() == 1);
        CHECK(hom.entries()[0].first == c);
        CHECK(hom.entries()[0].second == 1);
        CHECK(irr_class(hom) == c.irr());
        CHECK(hom.rank() == c.ram());
    }
}

TEST_CASE("scaling leaves the numerical invariants alone") {
    testutil::Rng rng(20240815);
    const CycloNumber gammas[] = {
        CycloNumber(Rational(2)),
        CycloNumber(Rational(1, 3)),
        CycloNumber::root_of_unity(3, 1),
        CycloNumber(Rational(3)) * CycloNumber::root_of_unity(8, 5),
    };
    for (int trial = 0; trial < 40; ++trial) {
        ExpFactor q1 = testutil::random_factor(rng);
        ExpFactor q2 = testutil::random_factor(rng);
        const CycloNumber& gamma = gammas[trial % 4];
        Circle c1 = circle_of(q1), c2 = circle_of(q2);
        Circle s1 = circle_of(q1.scaled(gamma)), s2 = circle_of(q2.scaled(gamma));
        CHECK(s1.ram() == c1.ram());
        CHECK(s1.slope() == c1.slope());
        CHECK(s1.irr() == c1.irr());
        CHECK(irr_class(hom_class(s1, s2)) == irr_class(hom_class(c1, c2)));
    }
}

TEST_CASE("classes merge duplicate circles") {
    IrregularClass theta;
    theta.add(circle_of(make_factor({{Rational(3, 2), 1}})), 1);
    theta.add(circle_of(make_factor({{Rational(3, 2), -1}})), 2);
    REQUIRE(theta.entries().size() == 1);
    CHECK(theta.entries()[0].second == 3);
    CHECK(theta.rank() == 6);
}

TEST_CASE("factor display is canonical") {
    CHECK(ExpFactor().to_string() == "0");
    CHECK(make_factor({{Rational(3, 2), 1}}).to_string() == "x^(3/2)");
    CHECK(make_factor({{Rational(2), -1}}).to_string() == "-x^2");
    CHECK(make_factor({{Rational(3), 2}, {Rational(1), 1}}).to_string() == "2x^3 + x");
    ExpFactor twisted;
    twisted.add_term(third, CycloNumber::root_of_unity(3, 2));
    CHECK(twisted.to_string() == "z3^2 x^(1/3)");
}
