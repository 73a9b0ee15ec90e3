#include "capelli/fusion.hpp"

#include <algorithm>

namespace capelli {

namespace {

// Group algebra element with polynomial numerators over one shared
// denominator.  Right multiplication by phi = 1 - (i j)/L costs one
// multiply-by-linear and one subtraction per term and defers all gcd work
// to the final extraction; numerator degrees stay bounded by the number
// of factors.
struct CommonDenomElement {
    explicit CommonDenomElement(int degree) : n(degree), denom(Rational(1)) {}

    static CommonDenomElement from_constant(const GroupAlgebraElement<Rational>& x) {
        CommonDenomElement e(x.degree());
        for (const auto& [p, c] : x.terms()) e.numer.emplace(p, UniPoly(c));
        return e;
    }

    void right_mul_phi(int i, int j, const UniPoly& diff) {
        // X * (1 - (i j)/diff) = (X*diff - X*(i j)) / diff.
        Permutation tau = Permutation::transposition(n, i, j);
        std::map<Permutation, UniPoly> next;
        for (const auto& [p, np] : numer) {
            accumulate(next, p, np * diff);
            accumulate(next, p * tau, -np);
        }
        numer = std::move(next);
        denom = denom * diff;
    }

    void right_mul_constant(const GroupAlgebraElement<Rational>& x) {
        std::map<Permutation, UniPoly> next;
        for (const auto& [p, np] : numer)
            for (const auto& [q, c] : x.terms()) accumulate(next, p * q, np * c);
        numer = std::move(next);
    }

    void left_mul_constant(const GroupAlgebraElement<Rational>& x) {
        std::map<Permutation, UniPoly> next;
        for (const auto& [q, c] : x.terms())
            for (const auto& [p, np] : numer) accumulate(next, q * p, np * c);
        numer = std::move(next);
    }

    GroupAlgebraElement<RationalFunction> reduced() const {
        GroupAlgebraElement<RationalFunction> r(n);
        for (const auto& [p, np] : numer) r.add_term(p, RationalFunction(np, denom));
        return r;
    }

    // Coefficient-wise value at x = 0 without any gcd: compares root
    // orders of numerator and denominator at zero.
    GroupAlgebraElement<Rational> limit_at_zero() const {
        int dord = denom.root_order(Rational(0));
        UniPoly dshift = denom.shift_out_root(Rational(0), dord);
        Rational dval = dshift.evaluate(Rational(0));
        GroupAlgebraElement<Rational> r(n);
        for (const auto& [p, np] : numer) {
            int nord = np.root_order(Rational(0));
            if (nord < dord) throw PoleError(dord - nord, Rational(0));
            // nord > dord: the coefficient vanishes in the limit.
            if (nord == dord) {
                UniPoly ns = np.shift_out_root(Rational(0), dord);
                r.add_term(p, ns.evaluate(Rational(0)) / dval);
            }
        }
        return r;
    }

    int max_pole_order_at_zero() const {
        int dord = denom.root_order(Rational(0));
        int worst = 0;
        for (const auto& [p, np] : numer) {
            (void)p;
            if (np.is_zero()) continue;
            int nord = np.root_order(Rational(0));
            worst = std::max(worst, dord - nord);
        }
        return worst;
    }

    static void accumulate(std::map<Permutation, UniPoly>& m, const Permutation& p,
                           UniPoly v) {
        auto it = m.find(p);
        if (it == m.end()) {
            if (!v.is_zero()) m.emplace(p, std::move(v));
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    int n;
    UniPoly denom;
    std::map<Permutation, UniPoly> numer;
};

}  // namespace

FusionLine FusionLine::for_shape(const YoungDiagram& shape) {
    FusionLine line{shape, {}};
    for (int r : column_tableau_rows(shape)) line.multipliers.emplace_back(r);
    return line;
}

PhiFactor FusionLine::factor(int i, int j) const {
    std::vector<int> c = contents(shape);
    return {i, j,
            UniPoly::linear(Var::t, Rational(c[i - 1] - c[j - 1]),
                            multipliers[i - 1] - multipliers[j - 1])};
}

std::vector<std::pair<int, int>> lexicographic_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

FusionOrdering fusion_ordering(const YoungDiagram& shape) {
    int n = shape.size();
    std::vector<int> word = reading_word(shape);
    std::vector<int> pos(n + 1);
    for (int k = 0; k < n; ++k) pos[word[k]] = k;
    FusionOrdering ord;
    // A_j: numbers i < j before j in the reading word, in word order.
    for (int j = 1; j <= n; ++j)
        for (int i : word)
            if (i < j && pos[i] < pos[j]) ord.a_pairs.emplace_back(i, j);
    for (int j = n; j >= 1; --j)
        for (int i : word)
            if (i < j && pos[i] > pos[j]) ord.b_pairs.emplace_back(i, j);
    return ord;
}

std::vector<std::pair<int, int>> FusionOrdering::all() const {
    std::vector<std::pair<int, int>> r = a_pairs;
    r.insert(r.end(), b_pairs.begin(), b_pairs.end());
    return r;
}

namespace {

CommonDenomElement fusion_accumulate(const YoungDiagram& shape,
                                     const std::vector<std::pair<int, int>>& pairs) {
    int n = shape.size();
    FusionLine line = FusionLine::for_shape(shape);
    CommonDenomElement acc(n);
    acc.numer.emplace(Permutation(n), UniPoly(Rational(1)));
    for (auto [i, j] : pairs) {
        PhiFactor factor = line.factor(i, j);
        acc.right_mul_phi(factor.i, factor.j, factor.difference);
    }
    return acc;
}

}  // namespace

GroupAlgebraElement<RationalFunction> fusion_product_over(
    const YoungDiagram& shape, const std::vector<std::pair<int, int>>& pairs) {
    return fusion_accumulate(shape, pairs).reduced();
}

GroupAlgebraElement<RationalFunction> fusion_product(const YoungDiagram& shape) {
    return fusion_product_over(shape, lexicographic_pairs(shape.size()));
}

GroupAlgebraElement<Rational> fusion_limit(const YoungDiagram& shape) {
    return fusion_accumulate(shape, lexicographic_pairs(shape.size())).limit_at_zero();
}

GroupAlgebraElement<Rational> upsilon_limit(const YoungDiagram& shape) {
    return fusion_accumulate(shape, fusion_ordering(shape).a_pairs).limit_at_zero();
}

namespace {

CommonDenomElement phi_lambda_mu_accumulate(const YoungDiagram& lambda,
                                            const YoungDiagram& mu) {
    int n = lambda.size(), m = mu.size();
    std::vector<int> c = contents(lambda);
    std::vector<int> d = contents(mu);
    GroupAlgebraElement<Rational> phi_l =
        symmetrizers(lambda).Phi.embed_shift(0, n + m);
    GroupAlgebraElement<Rational> phi_m =
        symmetrizers(mu).Phi.embed_shift(n, n + m);
    CommonDenomElement acc = CommonDenomElement::from_constant(phi_l);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            // c_i - (d_j + z)
            UniPoly diff = UniPoly::linear(Var::z, Rational(c[i - 1] - d[j - 1]), Rational(-1));
            acc.right_mul_phi(i, j + n, diff);
        }
    acc.right_mul_constant(phi_m);
    return acc;
}

}  // namespace

GroupAlgebraElement<RationalFunction> phi_lambda_mu(const YoungDiagram& lambda,
                                                    const YoungDiagram& mu) {
    return phi_lambda_mu_accumulate(lambda, mu).reduced();
}

int pole_order_phi(const YoungDiagram& lambda, const YoungDiagram& mu) {
    return phi_lambda_mu_accumulate(lambda, mu).max_pole_order_at_zero();
}

int max_pole_order_at_zero(const GroupAlgebraElement<RationalFunction>& x) {
    int worst = 0;
    for (const auto& [p, f] : x.terms()) {
        (void)p;
        auto v = f.valuation_at(Rational(0));
        if (v && *v < 0) worst = std::max(worst, -*v);
    }
    return worst;
}

bool verify_one_row_extension(const YoungDiagram& shape) {
    int n = shape.size();
    std::vector<int> c = contents(shape);
    GroupAlgebraElement<Rational> phi_shift = symmetrizers(shape).Phi.embed_shift(1, n + 1);

    CommonDenomElement lhs(n + 1);
    lhs.numer.emplace(Permutation(n + 1), UniPoly(Rational(1)));
    for (int i = 1; i <= n; ++i)
        lhs.right_mul_phi(1, i + 1, UniPoly::linear(Var::u, Rational(-c[i - 1]), Rational(1)));
    lhs.right_mul_constant(phi_shift);

    // 1 - sum (1,i+1)/u, times the shifted matrix element.
    GroupAlgebraElement<RationalFunction> bracket(n + 1);
    bracket.add_term(Permutation(n + 1), RationalFunction(Rational(1)));
    RationalFunction inv_u =
        RationalFunction(UniPoly(Rational(-1)), UniPoly::variable(Var::u));
    for (int i = 1; i <= n; ++i)
        bracket.add_term(Permutation::transposition(n + 1, 1, i + 1), inv_u);
    GroupAlgebraElement<RationalFunction> rhs =
        bracket * phi_shift.map_coefficients<RationalFunction>(
                      [](const Rational& r) { return RationalFunction(r); });

    return lhs.reduced() == rhs;
}

namespace {

using GA = GroupAlgebraElement<RationalFunction>;

GA phi_factor(int n, int i, int j, const RationalFunction& u, const RationalFunction& v) {
    GA r = GA::identity(n, RationalFunction(Rational(1)));
    r.add_term(Permutation::transposition(n, i, j), -(u - v).inverse());
    return r;
}

GA phi_three(int n, int i, int j, int k, const RationalFunction& u,
             const RationalFunction& v, const RationalFunction& w) {
    return phi_factor(n, i, j, u, v) * phi_factor(n, i, k, u, w) * phi_factor(n, j, k, v, w);
}

bool check(bool cond, const char* what, LocalIdentityReport& rep) {
    if (!cond && rep.ok) {
        rep.ok = false;
        rep.failure = what;
    }
    return cond;
}

}  // namespace

LocalIdentityReport verify_local_identities() {
    LocalIdentityReport rep;
    // Generic rational samples; chosen so that no two differ by 0 or +-1.
    const Rational samples[3][2] = {
        {Rational(17, 5), Rational(-23, 7)},
        {Rational(-31, 4), Rational(52, 9)},
        {Rational(29, 11), Rational(101, 13)},
    };
    RationalFunction x = RationalFunction::variable(Var::u);

    for (const auto& s : samples) {
        RationalFunction a(s[0]), b(s[1]);

        // Yang-Baxter relation in S_3, u symbolic, v, w sampled.
        {
            GA lhs = phi_factor(3, 1, 2, x, a) * phi_factor(3, 1, 3, x, b) *
                     phi_factor(3, 2, 3, a, b);
            GA rhs = phi_factor(3, 2, 3, a, b) * phi_factor(3, 1, 3, x, b) *
                     phi_factor(3, 1, 2, x, a);
            check(lhs == rhs, "Yang-Baxter relation", rep);
        }
        // Commutation of factors with disjoint index pairs in S_4.
        {
            GA lhs = phi_factor(4, 1, 2, x, a) * phi_factor(4, 3, 4, b, a + b);
            GA rhs = phi_factor(4, 3, 4, b, a + b) * phi_factor(4, 1, 2, x, a);
            check(lhs == rhs, "disjoint commutation", rep);
        }
        // Restriction in the first regularity lemma: u = v +- 1, w symbolic.
        for (int sign : {+1, -1}) {
            RationalFunction v(s[0]);
            RationalFunction u_res = v + RationalFunction(Rational(sign));
            GA lhs = phi_three(3, 1, 2, 3, u_res, v, x);
            GA expect = GA::identity(3, RationalFunction(Rational(1)));
            expect.add_term(Permutation::transposition(3, 1, 2), RationalFunction(Rational(-sign)));
            GA bracket = GA::identity(3, RationalFunction(Rational(1)));
            RationalFunction g = -(v - x).inverse();
            bracket.add_term(Permutation::transposition(3, 1, 3), g);
            bracket.add_term(Permutation::transposition(3, 2, 3), g);
            check(lhs == expect * bracket, "restriction at u = v +- 1", rep);
        }
        // Restriction in the second regularity lemma: w = v +- 1, u symbolic.
        for (int sign : {+1, -1}) {
            RationalFunction v(s[1]);
            RationalFunction w_res = v + RationalFunction(Rational(sign));
            GA lhs = phi_three(3, 1, 2, 3, x, v, w_res);
            GA bracket = GA::identity(3, RationalFunction(Rational(1)));
            RationalFunction g = -(x - v).inverse();
            bracket.add_term(Permutation::transposition(3, 1, 2), g);
            bracket.add_term(Permutation::transposition(3, 1, 3), g);
            GA expect = GA::identity(3, RationalFunction(Rational(1)));
            expect.add_term(Permutation::transposition(3, 2, 3), RationalFunction(Rational(sign)));
            check(lhs == bracket * expect, "restriction at w = v +- 1", rep);
        }
        // Value identity at w = v - 1: the three-factor product times
        // phi_kj(w,v) agrees with -2 (i k) phi_kj(w,v) there.
        {
            RationalFunction v(s[0]);
            // Keep w symbolic, multiply, then take the limit at w = v - 1.
            RationalFunction vm1 = v - RationalFunction(Rational(1));
            GA prod = phi_three(3, 1, 2, 3, vm1, v, x) * phi_factor(3, 3, 2, x, v);
            GA expect(3);
            expect.add_term(Permutation::transposition(3, 1, 3), RationalFunction(Rational(-2)));
            expect = expect * phi_factor(3, 3, 2, x, v);
            Rational at = s[0] - Rational(1);
            bool ok = true;
            GroupAlgebraElement<Rational> lv(3), rv(3);
            for (const auto& [p, f] : prod.terms()) lv.add_term(p, f.limit_at(at));
            for (const auto& [p, f] : expect.terms()) rv.add_term(p, f.limit_at(at));
            ok = (lv == rv);
            check(ok, "value identity at w = v - 1", rep);
        }
    }

    // One fully symbolic single-variable check of Yang-Baxter: u symbolic,
    // v = u - 5/2 shares the variable, w sampled.
    {
        RationalFunction v = x - RationalFunction(Rational(5, 2));
        RationalFunction w(Rational(9, 4));
        GA lhs = phi_factor(3, 1, 2, x, v) * phi_factor(3, 1, 3, x, w) *
                 phi_factor(3, 2, 3, v, w);
        GA rhs = phi_factor(3, 2, 3, v, w) * phi_factor(3, 1, 3, x, w) *
                 phi_factor(3, 1, 2, x, v);
        check(lhs == rhs, "symbolic Yang-Baxter line", rep);
    }
    return rep;
}

}  // namespace capelli
