#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/weyl.hpp"
#include "capelli/yangian.hpp"

using namespace capelli;

namespace {

WeylElement x(int N, int M, int i, int a) { return WeylElement::coordinate(N, M, i, a); }
WeylElement d(int N, int M, int i, int a) { return WeylElement::derivation(N, M, i, a); }

PolyFunction x_power(int N, int M, int i, int a, int e) {
    ExponentGrid g(N * M, 0);
    g[(i - 1) * M + (a - 1)] = static_cast<unsigned char>(e);
    return PolyFunction::monomial(N, M, g);
}

}  // namespace

TEST_CASE("normal ordering basics") {
    // d x = x d + 1 on the same coordinate.
    CHECK(d(1, 1, 1, 1) * x(1, 1, 1, 1) ==
          x(1, 1, 1, 1) * d(1, 1, 1, 1) + WeylElement(1));
    // Distinct coordinates commute.
    CHECK(x(2, 2, 1, 1) * d(2, 2, 2, 2) == d(2, 2, 2, 2) * x(2, 2, 1, 1));
    // d^2 x^2 = x^2 d^2 + 4 x d + 2.
    WeylElement dd = d(1, 1, 1, 1) * d(1, 1, 1, 1);
    WeylElement xx = x(1, 1, 1, 1) * x(1, 1, 1, 1);
    WeylElement lhs = dd * xx;
    WeylElement rhs = xx * dd + x(1, 1, 1, 1) * d(1, 1, 1, 1) * Rational(4) + WeylElement(2);
    CHECK(lhs == rhs);
}

TEST_CASE("products agree with the action on polynomials") {
    // Independent route: apply(a*b, f) must equal apply(a, apply(b, f)).
    std::vector<WeylElement> ops = {
        d(1, 2, 1, 1) * d(1, 2, 1, 1),
        x(1, 2, 1, 2) * d(1, 2, 1, 1) + WeylElement(3),
        d(1, 2, 1, 2) * x(1, 2, 1, 2) * d(1, 2, 1, 1),
    };
    std::vector<PolyFunction> polys = {
        x_power(1, 2, 1, 1, 3),
        x_power(1, 2, 1, 2, 2) + x_power(1, 2, 1, 1, 1),
    };
    for (const auto& a : ops)
        for (const auto& b : ops)
            for (const auto& f : polys)
                CHECK(apply(a * b, f) == apply(a, apply(b, f)));
}

TEST_CASE("coordinate actions of the Lie algebra generators") {
    CHECK(gl_action(Side::glN, 1, 1, 2, 2) ==
          x(2, 2, 1, 1) * d(2, 2, 1, 1) + x(2, 2, 1, 2) * d(2, 2, 1, 2));
    CHECK(gl_action(Side::glM, 1, 2, 1, 2) == x(1, 2, 1, 1) * d(1, 2, 1, 2));
    // [E12, E21] = E11 - E22 on the row side.
    WeylElement lhs =
        gl_action(Side::glN, 1, 2, 2, 2).commutator(gl_action(Side::glN, 2, 1, 2, 2));
    CHECK(lhs == gl_action(Side::glN, 1, 1, 2, 2) - gl_action(Side::glN, 2, 2, 2, 2));
    // The two sides commute with each other.
    CHECK(gl_action(Side::glN, 1, 2, 2, 2)
              .commutator(gl_action(Side::glM, 2, 1, 2, 2))
              .is_zero());
}

TEST_CASE("lifting monomials to operators") {
    UglElement e11 = UglElement::generator(1, 1, 1);
    CHECK(ugl_to_weyl(e11, 2) == x(1, 2, 1, 1) * d(1, 2, 1, 1) + x(1, 2, 1, 2) * d(1, 2, 1, 2));
    CHECK(ugl_to_weyl(UglElement(1), 2) == WeylElement(1));

    UglElement prod = UglElement::generator(2, 1, 2) * UglElement::generator(2, 2, 1);
    WeylElement expect = (x(2, 1, 1, 1) * d(2, 1, 2, 1)) * (x(2, 1, 2, 1) * d(2, 1, 1, 1));
    CHECK(ugl_to_weyl(prod, 1) == expect);
}

TEST_CASE("character-averaged operator on reference shapes") {
    // Shape (1): sum of x d over the grid.
    WeylElement expect(2, 2);
    for (int i = 1; i <= 2; ++i)
        for (int a = 1; a <= 2; ++a) expect = expect + x(2, 2, i, a) * d(2, 2, i, a);
    CHECK(c_lambda(YoungDiagram{1}, 2, 2) == expect);

    // Shape (2) in one variable: x^2 d^2.
    WeylElement xsq_dsq = x(1, 1, 1, 1) * x(1, 1, 1, 1) * d(1, 1, 1, 1) * d(1, 1, 1, 1);
    CHECK(c_lambda(YoungDiagram{2}, 1, 1) == xsq_dsq);

    // The column shape needs two rows and two columns; in one variable it
    // collapses to zero.
    CHECK(c_lambda(YoungDiagram{1, 1}, 1, 1).is_zero());
    CHECK(c_lambda(YoungDiagram(), 2, 2) == WeylElement(1));
}

TEST_CASE("ordered-product formula on reference shapes") {
    CHECK(capelli_product(YoungDiagram{1}, 2, 2) == c_lambda(YoungDiagram{1}, 2, 2));
    CHECK(capelli_product(YoungDiagram{2}, 1, 1) ==
          x(1, 1, 1, 1) * x(1, 1, 1, 1) * d(1, 1, 1, 1) * d(1, 1, 1, 1));
    CHECK(capelli_product(YoungDiagram{1, 1}, 1, 1).is_zero());
}

TEST_CASE("the higher Capelli identities on small shapes") {
    CHECK(verify_capelli_identity(YoungDiagram{1}, 2, 3));
    CHECK(verify_capelli_identity(YoungDiagram{1, 1}, 2, 2));  // the classical identity
    CHECK(verify_capelli_identity(YoungDiagram{2}, 2, 2));
    CHECK(verify_capelli_identity(YoungDiagram{2, 1}, 2, 2));
}

TEST_CASE("operators vanish beyond the admissible row count") {
    // Observed behavior (not asserted by the source material for the
    // column bound): all three constructions produce zero whenever the
    // shape has more rows than either side.
    CHECK(c_lambda(YoungDiagram{1, 1}, 2, 1).is_zero());
    CHECK(capelli_product(YoungDiagram{1, 1}, 2, 1).is_zero());
    CHECK(ugl_to_weyl(e_lambda(YoungDiagram{1, 1}, 2, Rational(0)), 1).is_zero());
    CHECK(c_lambda(YoungDiagram{1, 1, 1}, 2, 3).is_zero());
}

TEST_CASE("homogeneity") {
    for (const auto& shape : {YoungDiagram{2}, YoungDiagram{1, 1}, YoungDiagram{2, 1}}) {
        WeylElement op = c_lambda(shape, 2, 2);
        CAPTURE(shape.str());
        CHECK(op.is_homogeneous(shape.size(), shape.size()));
    }
}

TEST_CASE("invariance under both actions") {
    CHECK(verify_invariance(YoungDiagram{2}, 2, 2));
    CHECK(verify_invariance(YoungDiagram{1, 1}, 2, 2));
    CHECK(verify_invariance(YoungDiagram{2, 1}, 2, 2));
}

TEST_CASE("applying operators to polynomials") {
    // (x d) x^3 = 3 x^3.
    WeylElement euler = x(1, 1, 1, 1) * d(1, 1, 1, 1);
    PolyFunction cube = x_power(1, 1, 1, 1, 3);
    PolyFunction three_cubes = cube + cube + cube;
    CHECK(apply(euler, cube) == three_cubes);

    // Degree-(2) operators kill degree-1 polynomials.
    WeylElement op = c_lambda(YoungDiagram{2}, 2, 2);
    CHECK(apply(op, x_power(2, 2, 1, 1, 1)).is_zero());
    CHECK(apply(op, x_power(2, 2, 2, 2, 1)).is_zero());
}
