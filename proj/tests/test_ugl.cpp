#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/ugl.hpp"
#include "capelli/weyl.hpp"

using namespace capelli;

namespace {

UglElement gen(int N, int i, int j) { return UglElement::generator(N, i, j); }

struct Lcg {
    unsigned long state = 0xDEADBEEF12345ULL;
    int next(int bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % bound);
    }
    UglElement element(int N, int max_deg) {
        UglElement x = UglElement::zero(N);
        for (int t = 0; t < 3; ++t) {
            UglElement mono(static_cast<long>(next(7)) - 3);
            int deg = 1 + next(max_deg);
            for (int d = 0; d < deg; ++d) mono = mono * gen(N, next(N) + 1, next(N) + 1);
            x = x + mono;
        }
        return x;
    }
};

}  // namespace

TEST_CASE("normal ordering of a single commutator") {
    // E12 E21 is already sorted; E21 E12 rewrites.
    UglElement sorted = gen(2, 1, 2) * gen(2, 2, 1);
    CHECK(sorted.coefficient(PbwMonomial::from_factors({{1, 2, 1}, {2, 1, 1}})).is_one());
    CHECK(sorted.terms().size() == 1);

    UglElement rewritten = gen(2, 2, 1) * gen(2, 1, 2);
    UglElement expect = gen(2, 1, 2) * gen(2, 2, 1) - gen(2, 1, 1) + gen(2, 2, 2);
    CHECK(rewritten == expect);
}

TEST_CASE("unit and weight relations") {
    UglElement x = gen(3, 1, 3) * gen(3, 2, 2);
    CHECK(UglElement(1) * x == x);
    CHECK(gen(2, 1, 1).commutator(gen(2, 1, 2)) == gen(2, 1, 2));
    CHECK(gen(2, 1, 1).commutator(gen(2, 2, 1)) == -gen(2, 2, 1));
}

TEST_CASE("centrality") {
    UglElement weight = gen(2, 1, 1) + gen(2, 2, 2);
    CHECK(weight.is_central());
    CHECK_FALSE(gen(2, 1, 2).is_central());
    for (int N = 1; N <= 3; ++N) {
        UglElement casimir = UglElement::zero(N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) casimir = casimir + gen(N, i, j) * gen(N, j, i);
        CAPTURE(N);
        CHECK(casimir.is_central());
    }
}

TEST_CASE("associativity on random low-degree elements") {
    Lcg rng;
    for (int trial = 0; trial < 12; ++trial) {
        int N = 2 + trial % 2;
        UglElement a = rng.element(N, 2), b = rng.element(N, 2), c = rng.element(N, 2);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("the degree cap rejects runaway products") {
    int old_cap = UglElement::degree_cap();
    UglElement::set_degree_cap(4);
    UglElement x = gen(2, 1, 2) * gen(2, 1, 2) * gen(2, 1, 2);
    CHECK_THROWS_AS(x * x, std::length_error);
    UglElement::set_degree_cap(old_cap);
}

TEST_CASE("the coordinate realization is faithful on products") {
    // Algebra actions take products to operator products; with M = N the
    // low-degree part is reproduced exactly.
    Lcg rng;
    for (int N = 1; N <= 3; ++N)
        for (int trial = 0; trial < 5; ++trial) {
            UglElement a = rng.element(N, 2), b = rng.element(N, 2);
            CHECK(ugl_to_weyl(a * b, N) == ugl_to_weyl(a, N) * ugl_to_weyl(b, N));
        }
}

TEST_CASE("scalars combine with any gl size") {
    UglElement five(5L);
    UglElement x = gen(3, 2, 1);
    CHECK((five * x) == x * Rational(5));
    CHECK((x + UglElement(0)) == x);
    CHECK_THROWS_AS(gen(2, 1, 1) + gen(3, 1, 1), std::invalid_argument);
}
