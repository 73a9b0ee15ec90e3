#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/ratfunc.hpp"

using namespace capelli;

namespace {

// Small deterministic generator for property checks.
struct Lcg {
    unsigned long state = 0x2545F4914F6CDD1DULL;
    int next(int bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % bound);
    }
    Rational rational() { return Rational(next(19) - 9, 1 + next(7)); }
    UniPoly poly(Var v) {
        std::vector<Rational> c;
        int deg = next(4);
        for (int k = 0; k <= deg; ++k) c.push_back(rational());
        return UniPoly(v, std::move(c));
    }
    RationalFunction ratfunc(Var v) {
        UniPoly den = poly(v);
        while (den.is_zero()) den = poly(v);
        return RationalFunction(poly(v), den);
    }
};

RationalFunction over_z(long num_c, std::vector<Rational> den) {
    return RationalFunction(UniPoly(Rational(num_c)), UniPoly(Var::z, std::move(den)));
}

}  // namespace

TEST_CASE("rational numbers normalize and print as p/q") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational("12/8") == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK(Rational::factorial(5) == Rational(120));
}

TEST_CASE("rational function arithmetic on the reference examples") {
    RationalFunction inv_z = over_z(1, {Rational(0), Rational(1)});
    CHECK(inv_z + inv_z == over_z(2, {Rational(0), Rational(1)}));

    // (z^2 - 1)/(z - 1) reduces to z + 1.
    RationalFunction f(UniPoly(Var::z, {Rational(-1), Rational(0), Rational(1)}),
                       UniPoly(Var::z, {Rational(-1), Rational(1)}));
    CHECK(f == RationalFunction(UniPoly(Var::z, {Rational(1), Rational(1)})));

    CHECK(inv_z * RationalFunction(UniPoly::variable(Var::z)) ==
          RationalFunction(Rational(1)));
    CHECK_THROWS_AS(f / RationalFunction(), std::invalid_argument);
}

TEST_CASE("valuations at a point") {
    RationalFunction inv_z = over_z(1, {Rational(0), Rational(1)});
    CHECK(inv_z.valuation_at(Rational(0)) == -1);

    RationalFunction g(UniPoly(Var::z, {Rational(1), Rational(1)}),
                       UniPoly(Var::z, {Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(g.valuation_at(Rational(0)) == -3);

    RationalFunction h(UniPoly(Var::z, {Rational(0), Rational(1), Rational(1)}));
    CHECK(h.valuation_at(Rational(0)) == 1);
    CHECK_FALSE(RationalFunction().valuation_at(Rational(0)).has_value());
}

TEST_CASE("limits and pole errors") {
    // (z^2 + z)/z -> 1 at z = 0.
    RationalFunction f(UniPoly(Var::z, {Rational(0), Rational(1), Rational(1)}),
                       UniPoly::variable(Var::z));
    CHECK(f.limit_at(Rational(0)) == Rational(1));

    CHECK(RationalFunction(Rational(5)).limit_at(Rational(7)) == Rational(5));

    RationalFunction inv_z = over_z(1, {Rational(0), Rational(1)});
    CHECK_THROWS_AS(inv_z.limit_at(Rational(0)), PoleError);
    try {
        inv_z.limit_at(Rational(0));
    } catch (const PoleError& e) {
        CHECK(e.order == 1);
    }
}

TEST_CASE("variable tags are enforced, constants are agnostic") {
    UniPoly z = UniPoly::variable(Var::z);
    UniPoly t = UniPoly::variable(Var::t);
    CHECK_THROWS_AS(z + t, VariableMismatch);
    CHECK_THROWS_AS(z * t, VariableMismatch);
    CHECK((z + UniPoly(Rational(3))).var() == Var::z);
    CHECK((z - z).is_zero());
}

TEST_CASE("ring properties on random small-degree functions") {
    Lcg rng;
    for (int trial = 0; trial < 40; ++trial) {
        RationalFunction f = rng.ratfunc(Var::t);
        RationalFunction g = rng.ratfunc(Var::t);
        CHECK(f * g == g * f);
        CHECK((f + (-f)).is_zero());
        CHECK((f + g) - g == f);
    }
}

TEST_CASE("valuation is additive over products") {
    Lcg rng;
    for (int trial = 0; trial < 40; ++trial) {
        RationalFunction f = rng.ratfunc(Var::t);
        RationalFunction g = rng.ratfunc(Var::t);
        if (f.is_zero() || g.is_zero()) continue;
        Rational p(rng.next(5) - 2);
        auto vf = f.valuation_at(p), vg = g.valuation_at(p), vfg = (f * g).valuation_at(p);
        REQUIRE(vf.has_value());
        REQUIRE(vg.has_value());
        REQUIRE(vfg.has_value());
        CHECK(*vfg == *vf + *vg);
    }
}

TEST_CASE("limit agrees with direct substitution away from denominator roots") {
    Lcg rng;
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly num = rng.poly(Var::u);
        UniPoly den = rng.poly(Var::u);
        if (den.is_zero()) continue;
        Rational p(rng.next(9) - 4);
        if (den.evaluate(p).is_zero()) continue;
        RationalFunction f(num, den);
        CHECK(f.limit_at(p) == num.evaluate(p) / den.evaluate(p));
    }
}

TEST_CASE("polynomial gcd keeps quotients exact") {
    Lcg rng;
    for (int trial = 0; trial < 30; ++trial) {
        UniPoly a = rng.poly(Var::w), b = rng.poly(Var::w);
        if (a.is_zero() || b.is_zero()) continue;
        UniPoly g = UniPoly::gcd(a, b);
        CHECK_FALSE(g.is_zero());
        CHECK(a.divmod(g).second.is_zero());
        CHECK(b.divmod(g).second.is_zero());
    }
}
