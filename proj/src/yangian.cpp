#include "capelli/yangian.hpp"

#include <algorithm>

namespace capelli {

namespace {

using Index = TensorMatrix<Rational>::Index;

// F (x) id^{extra} (F acting on the first `factors` slots).
template <typename A>
TensorMatrix<A> embed_left(const TensorMatrix<A>& f, int extra) {
    int N = f.local_dim();
    TensorMatrix<A> r(N, f.factors() + extra);
    Index block = 1;
    for (int k = 0; k < extra; ++k) block *= static_cast<Index>(N);
    for (const auto& [k, v] : f.entries())
        for (Index a = 0; a < block; ++a)
            r.add_to_entry(k.first * block + a, k.second * block + a, v);
    return r;
}

// id^{extra} (x) F (F acting on the last `factors` slots).
template <typename A>
TensorMatrix<A> embed_right(const TensorMatrix<A>& f, int extra) {
    int N = f.local_dim();
    TensorMatrix<A> r(N, f.factors() + extra);
    Index block = f.dim();
    Index outer = 1;
    for (int k = 0; k < extra; ++k) outer *= static_cast<Index>(N);
    for (Index a = 0; a < outer; ++a)
        for (const auto& [k, v] : f.entries())
            r.add_to_entry(a * block + k.first, a * block + k.second, v);
    return r;
}

}  // namespace

TensorMatrix<Rational> perm_to_matrix(const GroupAlgebraElement<Rational>& x, int N) {
    int n = x.degree();
    TensorMatrix<Rational> m(N, n);
    std::vector<int> col(n, 1), row(n);
    for (const auto& [p, c] : x.terms()) {
        std::fill(col.begin(), col.end(), 1);
        while (true) {
            for (int k = 0; k < n; ++k) row[p(k + 1) - 1] = col[k];
            m.add_to_entry(m.encode(row), m.encode(col), c);
            int k = n - 1;
            while (k >= 0 && col[k] == N) col[k--] = 1;
            if (k < 0) break;
            ++col[k];
        }
    }
    return m;
}

TensorMatrix<Rational> f_projector(const YoungDiagram& shape, int N) {
    return perm_to_matrix(y_coefficients(shape), N);
}

TensorMatrix<UglElement> e_matrix_at(int N, int n, int k) {
    TensorMatrix<UglElement> m(N, n);
    Index left_block = 1, right_block = 1;
    for (int s = 0; s < k - 1; ++s) left_block *= static_cast<Index>(N);
    for (int s = k; s < n; ++s) right_block *= static_cast<Index>(N);
    for (Index l = 0; l < left_block; ++l)
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                UglElement g = UglElement::generator(N, b, a);
                for (Index rr = 0; rr < right_block; ++rr)
                    m.add_to_entry((l * N + (a - 1)) * right_block + rr,
                                   (l * N + (b - 1)) * right_block + rr, g);
            }
    return m;
}

TensorMatrix<UglPoly> capelli_matrix_polynomial(const YoungDiagram& shape, int N) {
    int n = shape.size();
    std::vector<int> c = contents(shape);
    TensorMatrix<UglPoly> acc = f_projector(shape, N).map_entries<UglPoly>(
        [&](const Rational& r) { return UglPoly(UglElement(r)); });
    for (int k = 1; k <= n; ++k) {
        TensorMatrix<UglPoly> factor = e_matrix_at(N, n, k).map_entries<UglPoly>(
            [](const UglElement& g) { return UglPoly(g); });
        UglPoly shift = UglPoly::linear(UglElement(Rational(-c[k - 1])), UglElement(1));
        TensorMatrix<UglPoly> diag(N, n);
        for (Index r = 0; r < factor.dim(); ++r) diag.add_to_entry(r, r, shift);
        acc = acc * (factor + diag);
    }
    return acc;
}

UglPoly e_lambda_poly(const YoungDiagram& shape, int N) {
    return capelli_matrix_polynomial(shape, N).trace();
}

UglElement e_lambda(const YoungDiagram& shape, int N, const Rational& at) {
    return e_lambda_poly(shape, N).evaluate(UglElement(at));
}

QuantumDeterminant quantum_determinant(int N) {
    YoungDiagram column(std::vector<int>(N, 1));
    TensorMatrix<UglPoly> acc = f_projector(column, N).map_entries<UglPoly>(
        [&](const Rational& r) { return UglPoly(UglElement(r)); });
    for (int k = 1; k <= N; ++k) {
        // (u - k + 1) - E_k
        TensorMatrix<UglPoly> factor = e_matrix_at(N, N, k).map_entries<UglPoly>(
            [](const UglElement& g) { return UglPoly(-g); });
        UglPoly shift = UglPoly::linear(UglElement(Rational(1 - k)), UglElement(1));
        for (Index r = 0; r < factor.dim(); ++r) factor.add_to_entry(r, r, shift);
        acc = acc * factor;
    }
    QuantumDeterminant result;
    result.cleared = acc.trace();
    // D(u) = cleared(u) / (u (u-1) ... (u-N+1)); expand in powers of 1/u
    // via complete homogeneous sums h_k of {0, 1, ..., N-1}.
    std::vector<Rational> h(N + 1, Rational(0));
    h[0] = Rational(1);
    for (int j = 0; j <= N - 1; ++j)
        for (int k = 1; k <= N; ++k) h[k] += h[k - 1] * Rational(j);
    result.coefficients.resize(N, UglElement::zero(N));
    for (int r = 1; r <= N; ++r) {
        UglElement acc_r = UglElement::zero(N);
        for (int s = 0; s <= r; ++s) {
            // q_s = coefficient of u^{N-s} in the cleared polynomial.
            UglElement qs = result.cleared.coeff(N - s);
            acc_r = acc_r + qs * h[r - s];
        }
        result.coefficients[r - 1] = acc_r;
    }
    return result;
}

bool verify_qdet_divisibility(int N) {
    YoungDiagram column(std::vector<int>(N, 1));
    TensorMatrix<UglPoly> acc = f_projector(column, N).map_entries<UglPoly>(
        [&](const Rational& r) { return UglPoly(UglElement(r)); });
    for (int k = 1; k <= N; ++k) {
        TensorMatrix<UglPoly> factor = e_matrix_at(N, N, k).map_entries<UglPoly>(
            [](const UglElement& g) { return UglPoly(-g); });
        UglPoly shift = UglPoly::linear(UglElement(Rational(1 - k)), UglElement(1));
        for (Index r = 0; r < factor.dim(); ++r) factor.add_to_entry(r, r, shift);
        acc = acc * factor;
    }
    UglPoly cleared = acc.trace();
    TensorMatrix<UglPoly> reconstructed = f_projector(column, N).map_entries<UglPoly>(
        [&](const Rational& r) {
            std::vector<UglElement> cs;
            for (int k = 0; k <= cleared.degree(); ++k) cs.push_back(cleared.coeff(k) * r);
            return UglPoly(std::move(cs));
        });
    return acc == reconstructed;
}

namespace {

const Rational kGenericSamples[3] = {Rational(17, 5), Rational(-23, 7), Rational(52, 9)};

}  // namespace

bool verify_rtt_evaluation(int N) {
    // Cleared form: ((u-v) - P12)(u - E_1)(v - E_2) on both sides; for
    // each sampled v this is an exact polynomial identity in u, and three
    // samples pin the (degree <= 2) dependence on v.
    GroupAlgebraElement<Rational> swap(2);
    swap.add_term(Permutation::transposition(2, 1, 2), Rational(1));
    TensorMatrix<UglPoly> p12 = perm_to_matrix(swap, N).map_entries<UglPoly>(
        [](const Rational& r) { return UglPoly(UglElement(r)); });
    for (const Rational& v : kGenericSamples) {
        TensorMatrix<UglPoly> a(N, 2);
        for (Index r = 0; r < a.dim(); ++r)
            a.add_to_entry(r, r, UglPoly::linear(UglElement(-v), UglElement(1)));
        a = a - p12;
        TensorMatrix<UglPoly> b = e_matrix_at(N, 2, 1).map_entries<UglPoly>(
            [](const UglElement& g) { return UglPoly(-g); });
        for (Index r = 0; r < b.dim(); ++r)
            b.add_to_entry(r, r, UglPoly::linear(UglElement(0), UglElement(1)));
        TensorMatrix<UglPoly> c = e_matrix_at(N, 2, 2).map_entries<UglPoly>(
            [](const UglElement& g) { return UglPoly(-g); });
        for (Index r = 0; r < c.dim(); ++r) c.add_to_entry(r, r, UglPoly(UglElement(v)));
        if (a * b * c != c * b * a) return false;
    }
    return true;
}

bool verify_projected_action(const YoungDiagram& shape, int N) {
    int n = shape.size();
    std::vector<int> c = contents(shape);
    TensorMatrix<RationalFunction> f_emb =
        embed_right(f_projector(shape, N), 1).map_entries<RationalFunction>([](const Rational& r) {
            return RationalFunction(r);
        });
    RationalFunction u = RationalFunction::variable(Var::u);

    TensorMatrix<RationalFunction> lhs =
        TensorMatrix<RationalFunction>::identity(N, n + 1, RationalFunction(Rational(1)));
    for (int k = 1; k <= n; ++k) {
        GroupAlgebraElement<Rational> tr(n + 1);
        tr.add_term(Permutation::transposition(n + 1, 1, k + 1), Rational(1));
        lhs = lhs - perm_to_matrix(tr, N).map_entries<RationalFunction>([&](const Rational& r) {
                  return RationalFunction(r) / u;
              });
    }
    lhs = lhs * f_emb;

    TensorMatrix<RationalFunction> rhs =
        TensorMatrix<RationalFunction>::identity(N, n + 1, RationalFunction(Rational(1)));
    for (int k = 1; k <= n; ++k) {
        GroupAlgebraElement<Rational> tr(n + 1);
        tr.add_term(Permutation::transposition(n + 1, 1, k + 1), Rational(1));
        RationalFunction g = (u - RationalFunction(Rational(c[k - 1]))).inverse();
        TensorMatrix<RationalFunction> factor =
            TensorMatrix<RationalFunction>::identity(N, n + 1, RationalFunction(Rational(1))) -
            perm_to_matrix(tr, N).map_entries<RationalFunction>([&](const Rational& r) {
                return RationalFunction(r) * g;
            });
        rhs = rhs * factor;
    }
    rhs = rhs * f_emb;
    return lhs == rhs;
}

TensorMatrix<Rational> tensor_representation(const UglElement& x, int m) {
    int N = x.gl_size();
    if (N == 0) N = 1;  // scalars act on any space; pick the smallest
    TensorMatrix<Rational> out(N, m);
    std::map<PbwMonomial, TensorMatrix<Rational>> memo;
    for (const auto& [mono, coeff] : x.terms()) {
        auto it = memo.find(mono);
        if (it == memo.end()) {
            TensorMatrix<Rational> acc = TensorMatrix<Rational>::identity(N, m, Rational(1));
            for (const auto& f : mono.factors()) {
                // sum_k iota_k(e_ij) on m factors
                TensorMatrix<Rational> gen(N, m);
                for (int k = 1; k <= m; ++k) {
                    Index lb = 1, rb = 1;
                    for (int s = 0; s < k - 1; ++s) lb *= static_cast<Index>(N);
                    for (int s = k; s < m; ++s) rb *= static_cast<Index>(N);
                    for (Index l = 0; l < lb; ++l)
                        for (Index rr = 0; rr < rb; ++rr)
                            gen.add_to_entry((l * N + (f[0] - 1)) * rb + rr,
                                             (l * N + (f[1] - 1)) * rb + rr, Rational(1));
                }
                for (int e = 0; e < f[2]; ++e) acc = acc * gen;
            }
            it = memo.emplace(mono, std::move(acc)).first;
        }
        out = out + it->second * coeff;
    }
    return out;
}

bool verify_vanishing(const YoungDiagram& lambda, const YoungDiagram& mu, int N) {
    if (mu.size() >= lambda.size())
        throw std::invalid_argument("verify_vanishing: need |mu| < |lambda|");
    int m = mu.size();
    TensorMatrix<UglElement> at_zero =
        capelli_matrix_polynomial(lambda, N).map_entries<UglElement>([](const UglPoly& p) {
            return p.coeff(0);
        });
    TensorMatrix<Rational> f_mu = f_projector(mu, N);
    for (const auto& [k, entry] : at_zero.entries()) {
        (void)k;
        TensorMatrix<Rational> image = tensor_representation(entry, m);
        if (!(f_mu * image * f_mu).is_zero()) return false;
    }
    return true;
}

TensorMatrix<RationalFunction> r_lambda_mu(const YoungDiagram& lambda,
                                           const YoungDiagram& mu, int N) {
    int n = lambda.size(), m = mu.size();
    std::vector<int> c = contents(lambda);
    std::vector<int> d = contents(mu);
    RationalFunction z = RationalFunction::variable(Var::z);

    TensorMatrix<RationalFunction> acc =
        embed_left(f_projector(lambda, N), m).map_entries<RationalFunction>([](const Rational& r) {
            return RationalFunction(r);
        });
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= m; ++l) {
            GroupAlgebraElement<Rational> tr(n + m);
            tr.add_term(Permutation::transposition(n + m, k, l + n), Rational(1));
            RationalFunction g =
                (RationalFunction(Rational(c[k - 1] - d[l - 1])) - z).inverse();
            TensorMatrix<RationalFunction> factor =
                TensorMatrix<RationalFunction>::identity(N, n + m, RationalFunction(Rational(1))) -
                perm_to_matrix(tr, N).map_entries<RationalFunction>([&](const Rational& r) {
                    return RationalFunction(r) * g;
                });
            acc = acc * factor;
        }
    acc = acc * embed_right(f_projector(mu, N), n).map_entries<RationalFunction>(
                    [](const Rational& r) { return RationalFunction(r); });
    return acc;
}

int max_pole_order_at_zero(const TensorMatrix<RationalFunction>& m) {
    int worst = 0;
    for (const auto& [k, f] : m.entries()) {
        (void)k;
        auto v = f.valuation_at(Rational(0));
        if (v && *v < 0) worst = std::max(worst, -*v);
    }
    return worst;
}

}  // namespace capelli
