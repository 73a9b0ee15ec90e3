#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/fusion.hpp"

using namespace capelli;

namespace {
using GA = GroupAlgebraElement<Rational>;
using GAF = GroupAlgebraElement<RationalFunction>;
}

TEST_CASE("the empty diagram degenerates to the unit") {
    CHECK(symmetrizers(YoungDiagram()).Phi == GA::identity(0));
    CHECK(fusion_limit(YoungDiagram()) == GA::identity(0));
    CHECK(upsilon_limit(YoungDiagram()) == GA::identity(0));
    CHECK(pole_order_phi(YoungDiagram(), YoungDiagram{2, 1}) == 0);
}

TEST_CASE("fusion product for a single row is constant") {
    GAF f = fusion_product(YoungDiagram{2});
    CHECK(f.size() == 2);
    CHECK(f.coefficient(Permutation(2)) == RationalFunction(Rational(1)));
    CHECK(f.coefficient(Permutation::transposition(2, 1, 2)) == RationalFunction(Rational(1)));
}

TEST_CASE("fusion product for a column depends on the line parameter") {
    // phi_12(t, -1 + 2t) = 1 - (12)/(1 - t).
    GAF f = fusion_product(YoungDiagram{1, 1});
    RationalFunction expected(UniPoly(Rational(-1)),
                              UniPoly(Var::t, {Rational(1), Rational(-1)}));
    CHECK(f.coefficient(Permutation::transposition(2, 1, 2)) == expected);
}

TEST_CASE("fusion limits reproduce the matrix elements") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
            CAPTURE(shape.str());
            CHECK(fusion_limit(shape) == symmetrizers(shape).Phi);
        }
    // The first case with a singular pair on the diagonal.
    CHECK(fusion_limit(YoungDiagram{2, 2}) == symmetrizers(YoungDiagram{2, 2}).Phi);
}

TEST_CASE("triangular half gives Q*P") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
            Symmetrizers sym = symmetrizers(shape);
            CAPTURE(shape.str());
            CHECK(upsilon_limit(shape) == sym.Q * sym.P);
        }
    // Explicit hook case: (1-(12))(1+(13)).
    GA q = GA::identity(3);
    q.add_term(Permutation::transposition(3, 1, 2), Rational(-1));
    GA p = GA::identity(3);
    p.add_term(Permutation::transposition(3, 1, 3), Rational(1));
    CHECK(upsilon_limit(YoungDiagram{2, 1}) == q * p);
}

TEST_CASE("the reordering does not change the product") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
            FusionOrdering ord = fusion_ordering(shape);
            CHECK(ord.a_pairs.size() + ord.b_pairs.size() ==
                  lexicographic_pairs(n).size());
            CAPTURE(shape.str());
            CHECK(fusion_product_over(shape, ord.all()) == fusion_product(shape));
        }
}

TEST_CASE("ordering data for the two-by-two square") {
    FusionOrdering ord = fusion_ordering(YoungDiagram{2, 2});
    CHECK(ord.a_pairs == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {3, 4}, {2, 4}});
    CHECK(ord.b_pairs == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("two-diagram product for single boxes") {
    GAF f = phi_lambda_mu(YoungDiagram{1}, YoungDiagram{1});
    CHECK(f.coefficient(Permutation(2)) == RationalFunction(Rational(1)));
    // 1 + (12)/z
    RationalFunction inv_z(UniPoly(Rational(1)), UniPoly::variable(Var::z));
    CHECK(f.coefficient(Permutation::transposition(2, 1, 2)) == inv_z);
    CHECK(pole_order_phi(YoungDiagram{1}, YoungDiagram{1}) == 1);
}

TEST_CASE("pole orders on the reference pairs") {
    CHECK(pole_order_phi(YoungDiagram{2}, YoungDiagram{1, 1}) == 0);
    CHECK(pole_order_phi(YoungDiagram{1, 1}, YoungDiagram{1, 1}) == 1);
    CHECK(pole_order_phi(YoungDiagram{2, 1}, YoungDiagram{2, 1}) <= 1);
    // A regular case: every coefficient has a finite value at z = 0.
    GAF f = phi_lambda_mu(YoungDiagram{2}, YoungDiagram{1, 1});
    for (const auto& [p, c] : f.terms()) {
        (void)p;
        auto v = c.valuation_at(Rational(0));
        CHECK((!v.has_value() || *v >= 0));
    }
}

TEST_CASE("the two pole-order routes agree") {
    for (const auto& la : {YoungDiagram{1}, YoungDiagram{2}, YoungDiagram{1, 1},
                           YoungDiagram{2, 1}, YoungDiagram{3}})
        for (const auto& mu : {YoungDiagram{1}, YoungDiagram{2}, YoungDiagram{1, 1}}) {
            CAPTURE(la.str());
            CAPTURE(mu.str());
            CHECK(pole_order_phi(la, mu) == max_pole_order_at_zero(phi_lambda_mu(la, mu)));
        }
}

TEST_CASE("pole bounds on a small sweep") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& la : YoungDiagram::all_with_boxes(n))
            for (int m = 1; m <= 3; ++m)
                for (const auto& mu : YoungDiagram::all_with_boxes(m)) {
                    int pole = pole_order_phi(la, mu);
                    CAPTURE(la.str());
                    CAPTURE(mu.str());
                    CHECK(pole <= la.rank());
                    if (!la.contained_in(mu)) CHECK(pole <= la.rank() - 1);
                }
}

TEST_CASE("one-row extension identity") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
            CAPTURE(shape.str());
            CHECK(verify_one_row_extension(shape));
        }
}

TEST_CASE("local identities") {
    LocalIdentityReport rep = verify_local_identities();
    INFO(rep.failure);
    CHECK(rep.ok);
}

TEST_CASE("coefficients stay integral after clearing") {
    // Numerators and the common denominator have integer coefficients
    // whenever the inputs do; spot-check via denominators of the reduced
    // coefficients on a mixed pair.
    GAF f = phi_lambda_mu(YoungDiagram{2, 1}, YoungDiagram{2});
    for (const auto& [p, c] : f.terms()) {
        (void)p;
        // Reduced denominators are monic with rational coefficients; the
        // numerator times the denominator's common integer scale must be
        // integral. Lightweight sanity: reduction really happened.
        CHECK(UniPoly::gcd(c.num(), c.den()).degree() <= 0);
    }
}
