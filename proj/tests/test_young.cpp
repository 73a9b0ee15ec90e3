#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "capelli/young.hpp"

using namespace capelli;

namespace {
using GA = GroupAlgebraElement<Rational>;
}

TEST_CASE("diagram basics") {
    CHECK(YoungDiagram::parse("3,2,1").parts() == std::vector<int>{3, 2, 1});
    CHECK(YoungDiagram::parse("").size() == 0);
    CHECK_THROWS_AS(YoungDiagram::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(YoungDiagram({2, 0}), std::invalid_argument);
    CHECK(YoungDiagram({3, 1}).conjugate() == std::vector<int>{2, 1, 1});
    CHECK(YoungDiagram::all_with_boxes(4).size() == 5);
    CHECK(YoungDiagram::all_with_boxes(6).size() == 11);
}

TEST_CASE("contents along the column tableau") {
    CHECK(contents(YoungDiagram{2}) == std::vector<int>{0, 1});
    CHECK(contents(YoungDiagram{1, 1}) == std::vector<int>{0, -1});
    CHECK(contents(YoungDiagram{2, 2}) == std::vector<int>{0, -1, 1, 0});
    CHECK(contents(YoungDiagram{2, 1}) == std::vector<int>{0, -1, 1});
    CHECK(column_tableau_rows(YoungDiagram{2, 2}) == std::vector<int>{1, 2, 1, 2});
    CHECK(reading_word(YoungDiagram{2, 1}) == std::vector<int>{1, 3, 2});
}

TEST_CASE("rank and containment") {
    CHECK(YoungDiagram{2, 2}.rank() == 2);
    CHECK(YoungDiagram{5}.rank() == 1);
    CHECK(YoungDiagram().rank() == 0);
    CHECK(YoungDiagram{3, 3, 3}.rank() == 3);
    CHECK(YoungDiagram{2, 1}.contained_in(YoungDiagram{2, 2}));
    CHECK_FALSE(YoungDiagram{2}.contained_in(YoungDiagram{1, 1}));
    CHECK(YoungDiagram().contained_in(YoungDiagram{1}));
}

TEST_CASE("symmetrizers for one-row and one-column shapes") {
    Symmetrizers s2 = symmetrizers(YoungDiagram{2});
    GA p2 = GA::identity(2);
    p2.add_term(Permutation::transposition(2, 1, 2), Rational(1));
    CHECK(s2.P == p2);
    CHECK(s2.Q == GA::identity(2));
    CHECK(s2.Phi == p2);

    Symmetrizers s11 = symmetrizers(YoungDiagram{1, 1});
    GA q11 = GA::identity(2);
    q11.add_term(Permutation::transposition(2, 1, 2), Rational(-1));
    CHECK(s11.P == GA::identity(2));
    CHECK(s11.Q == q11);
    CHECK(s11.Phi == q11);
}

TEST_CASE("the hook shape matrix element") {
    // Phi for the three-box hook = (1-(12))(1+(13))(1-(12))/2.
    Symmetrizers s = symmetrizers(YoungDiagram{2, 1});
    GA q = GA::identity(3);
    q.add_term(Permutation::transposition(3, 1, 2), Rational(-1));
    GA p = GA::identity(3);
    p.add_term(Permutation::transposition(3, 1, 3), Rational(1));
    CHECK(s.Phi == (q * p * q) * Rational(1, 2));
    CHECK(s.Phi.coefficient(Permutation(3)).is_one());
}

TEST_CASE("identity coefficient is one and the scaled element is idempotent") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
            Symmetrizers sym = symmetrizers(shape);
            CHECK(sym.Phi.coefficient(Permutation(n)).is_one());
            GA e = y_coefficients(shape);
            CHECK(e * e == e);
            // Phi^2 = (n!/dim) Phi.
            Rational scale = Rational::factorial(n) / Rational(dimension(shape));
            CHECK(sym.Phi * sym.Phi == sym.Phi * scale);
        }
}

TEST_CASE("y coefficients on the reference shapes") {
    GA y1 = y_coefficients(YoungDiagram{1});
    CHECK(y1.coefficient(Permutation(1)).is_one());

    GA y2 = y_coefficients(YoungDiagram{2});
    CHECK(y2.coefficient(Permutation(2)) == Rational(1, 2));
    CHECK(y2.coefficient(Permutation::transposition(2, 1, 2)) == Rational(1, 2));

    GA y21 = y_coefficients(YoungDiagram{2, 1});
    CHECK(y21 == symmetrizers(YoungDiagram{2, 1}).Phi * Rational(2, 6));
}

TEST_CASE("dimension: enumeration agrees with hooks") {
    CHECK(dimension(YoungDiagram{4}) == 1);
    CHECK(dimension(YoungDiagram{2, 1}) == 2);
    CHECK(dimension(YoungDiagram{2, 2}) == 2);
    CHECK(dimension(YoungDiagram{3, 2}) == 5);
    CHECK(dimension(YoungDiagram()) == 1);
    for (int n = 1; n <= 6; ++n) {
        long sum = 0;
        for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
            CHECK(dimension(shape) == hook_length_dimension(shape));
            sum += dimension(shape) * dimension(shape);
        }
        long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(sum == fact);
    }
}

TEST_CASE("standard tableau validation") {
    CHECK_NOTHROW(StandardTableau(YoungDiagram{2, 1}, {{1, 2}, {3}}));
    CHECK_NOTHROW(StandardTableau(YoungDiagram{2, 1}, {{1, 3}, {2}}));
    CHECK_THROWS_AS(StandardTableau(YoungDiagram{2, 1}, {{2, 1}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau(YoungDiagram{2, 1}, {{1, 2}, {2}}), std::invalid_argument);
    CHECK(standard_tableaux(YoungDiagram{3, 2}).size() == 5);
}

TEST_CASE("characters: known values and degenerate rows") {
    // Trivial and sign representations.
    for (const auto& sigma :
         {Permutation(3), Permutation::transposition(3, 1, 2),
          Permutation::from_images({2, 3, 1})}) {
        CHECK(character(YoungDiagram{3}, sigma).is_one());
        CHECK(character(YoungDiagram{1, 1, 1}, sigma) == Rational(sigma.sign()));
    }
    // The two-dimensional component of S_3.
    CHECK(character(YoungDiagram{2, 1}, Permutation(3)) == Rational(2));
    CHECK(character(YoungDiagram{2, 1}, Permutation::transposition(3, 1, 2)) == Rational(0));
    CHECK(character(YoungDiagram{2, 1}, Permutation::from_images({2, 3, 1})) == Rational(-1));
    // Classical S_4 values for shape (2,2): 2, 0, 2, -1, 0.
    YoungDiagram s22{2, 2};
    CHECK(character_on_cycle_type(s22, {1, 1, 1, 1}) == Rational(2));
    CHECK(character_on_cycle_type(s22, {2, 1, 1}) == Rational(0));
    CHECK(character_on_cycle_type(s22, {2, 2}) == Rational(2));
    CHECK(character_on_cycle_type(s22, {3, 1}) == Rational(-1));
    CHECK(character_on_cycle_type(s22, {4}) == Rational(0));
}

TEST_CASE("character recursion agrees with coefficient extraction") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
            std::vector<int> img(n);
            for (int k = 0; k < n; ++k) img[k] = k + 1;
            do {
                Permutation sigma = Permutation::from_images(img);
                CHECK(character(shape, sigma) == character_via_matrix_element(shape, sigma));
            } while (std::next_permutation(img.begin(), img.end()));
        }
    // One representative per conjugacy class of S_5.
    std::vector<Permutation> reps = {
        Permutation(5),
        Permutation::from_images({2, 1, 3, 4, 5}),
        Permutation::from_images({2, 1, 4, 3, 5}),
        Permutation::from_images({2, 3, 1, 4, 5}),
        Permutation::from_images({2, 3, 1, 5, 4}),
        Permutation::from_images({2, 3, 4, 1, 5}),
        Permutation::from_images({2, 3, 4, 5, 1}),
    };
    for (const auto& shape : YoungDiagram::all_with_boxes(5))
        for (const auto& sigma : reps)
            CHECK(character(shape, sigma) == character_via_matrix_element(shape, sigma));
}

TEST_CASE("semistandard counts") {
    CHECK(semistandard_count(YoungDiagram{2}, 2) == 3);
    CHECK(semistandard_count(YoungDiagram{1, 1}, 2) == 1);
    CHECK(semistandard_count(YoungDiagram{2, 1}, 2) == 2);
    CHECK(semistandard_count(YoungDiagram{2, 1}, 3) == 8);
    CHECK(semistandard_count(YoungDiagram{1, 1, 1}, 2) == 0);
    CHECK(semistandard_count(YoungDiagram(), 3) == 1);
}
