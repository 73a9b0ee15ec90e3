#include "capelli/weyl.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "capelli/yangian.hpp"

namespace capelli {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace

WeylElement WeylElement::coordinate(int N, int M, int i, int a) {
    if (i < 1 || i > N || a < 1 || a > M)
        throw std::invalid_argument("WeylElement: coordinate index out of range");
    WeylElement e(N, M);
    Key k{ExponentGrid(N * M, 0), ExponentGrid(N * M, 0)};
    k.x[(i - 1) * M + (a - 1)] = 1;
    e.terms_.emplace(std::move(k), Rational(1));
    return e;
}

WeylElement WeylElement::derivation(int N, int M, int i, int a) {
    if (i < 1 || i > N || a < 1 || a > M)
        throw std::invalid_argument("WeylElement: derivation index out of range");
    WeylElement e(N, M);
    Key k{ExponentGrid(N * M, 0), ExponentGrid(N * M, 0)};
    k.d[(i - 1) * M + (a - 1)] = 1;
    e.terms_.emplace(std::move(k), Rational(1));
    return e;
}

void WeylElement::set_scalar(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Key{ExponentGrid(), ExponentGrid()}, c);
}

Rational WeylElement::coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void WeylElement::unify_shape(const WeylElement& o, int& N, int& M) const {
    N = N_;
    M = M_;
    if (N_ == 0 && M_ == 0) {
        N = o.N_;
        M = o.M_;
    } else if (!(o.N_ == 0 && o.M_ == 0)) {
        if (N_ != o.N_ || M_ != o.M_)
            throw std::invalid_argument("WeylElement: shape mismatch");
    }
}

WeylElement WeylElement::operator-() const {
    WeylElement r(N_, M_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

namespace {

// Scalar grids (empty vectors) act as all-zero grids of the target shape.
const ExponentGrid& resize_grid(const ExponentGrid& g, size_t len, ExponentGrid& scratch) {
    if (g.size() == len) return g;
    scratch.assign(len, 0);
    return scratch;
}

}  // namespace

WeylElement WeylElement::operator+(const WeylElement& o) const {
    int N, M;
    unify_shape(o, N, M);
    WeylElement r(N, M);
    size_t len = static_cast<size_t>(N) * M;
    ExponentGrid s1, s2;
    for (const auto& [k, c] : terms_)
        r.add_term(Key{resize_grid(k.x, len, s1), resize_grid(k.d, len, s2)}, c);
    for (const auto& [k, c] : o.terms_)
        r.add_term(Key{resize_grid(k.x, len, s1), resize_grid(k.d, len, s2)}, c);
    return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + (-o); }

WeylElement WeylElement::operator*(const Rational& s) const {
    WeylElement r(N_, M_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    int N, M;
    unify_shape(o, N, M);
    WeylElement r(N, M);
    size_t len = static_cast<size_t>(N) * M;
    ExponentGrid s1, s2, s3, s4;
    for (const auto& [ka, ca] : terms_) {
        const ExponentGrid& xa = resize_grid(ka.x, len, s1);
        const ExponentGrid& da = resize_grid(ka.d, len, s2);
        for (const auto& [kb, cb] : o.terms_) {
            const ExponentGrid& xb = resize_grid(kb.x, len, s3);
            const ExponentGrid& db = resize_grid(kb.d, len, s4);
            // Per coordinate: d^b x^g = sum_k C(b,k) C(g,k) k! x^{g-k} d^{b-k}.
            // Enumerate contraction vectors k across coordinates.
            std::vector<unsigned char> contraction(len, 0);
            Key key{ExponentGrid(len, 0), ExponentGrid(len, 0)};
            std::function<void(size_t, Rational)> rec = [&](size_t idx, Rational coef) {
                if (idx == len) {
                    for (size_t p = 0; p < len; ++p) {
                        key.x[p] = static_cast<unsigned char>(xa[p] + xb[p] - contraction[p]);
                        key.d[p] = static_cast<unsigned char>(da[p] + db[p] - contraction[p]);
                    }
                    r.add_term(key, coef);
                    return;
                }
                int top = std::min<int>(da[idx], xb[idx]);
                for (int k = 0; k <= top; ++k) {
                    Rational w(1);
                    if (k > 0)
                        w = Rational(mpz_class(binom(da[idx], k) * binom(xb[idx], k) *
                                               factorial(k)));
                    contraction[idx] = static_cast<unsigned char>(k);
                    rec(idx + 1, coef * w);
                }
                contraction[idx] = 0;
            };
            rec(0, ca * cb);
        }
    }
    return r;
}

bool WeylElement::is_homogeneous(int dx, int dd) const {
    for (const auto& [k, c] : terms_) {
        (void)c;
        int sx = 0, sd = 0;
        for (auto e : k.x) sx += e;
        for (auto e : k.d) sd += e;
        if (sx != dx || sd != dd) return false;
    }
    return true;
}

std::string WeylElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (size_t p = 0; p < k.x.size(); ++p)
            if (k.x[p]) {
                os << "*x" << (p / M_ + 1) << (p % M_ + 1);
                if (k.x[p] > 1) os << "^" << int(k.x[p]);
            }
        for (size_t p = 0; p < k.d.size(); ++p)
            if (k.d[p]) {
                os << "*d" << (p / M_ + 1) << (p % M_ + 1);
                if (k.d[p] > 1) os << "^" << int(k.d[p]);
            }
    }
    return os.str();
}

PolyFunction PolyFunction::monomial(int N, int M, const ExponentGrid& exps, const Rational& c) {
    PolyFunction f(N, M);
    if (static_cast<int>(exps.size()) != N * M)
        throw std::invalid_argument("PolyFunction: grid size mismatch");
    f.add_term(exps, c);
    return f;
}

void PolyFunction::add_term(const ExponentGrid& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyFunction PolyFunction::operator+(const PolyFunction& o) const {
    if (N_ != o.N_ || M_ != o.M_) throw std::invalid_argument("PolyFunction: shape mismatch");
    PolyFunction r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

PolyFunction PolyFunction::operator-(const PolyFunction& o) const {
    if (N_ != o.N_ || M_ != o.M_) throw std::invalid_argument("PolyFunction: shape mismatch");
    PolyFunction r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

WeylElement gl_action(Side side, int i, int j, int N, int M) {
    WeylElement r(N, M);
    if (side == Side::glN) {
        if (i < 1 || i > N || j < 1 || j > N)
            throw std::invalid_argument("gl_action: index out of range");
        for (int b = 1; b <= M; ++b)
            r = r + WeylElement::coordinate(N, M, i, b) * WeylElement::derivation(N, M, j, b);
    } else {
        if (i < 1 || i > M || j < 1 || j > M)
            throw std::invalid_argument("gl_action: index out of range");
        for (int k = 1; k <= N; ++k)
            r = r + WeylElement::coordinate(N, M, k, i) * WeylElement::derivation(N, M, k, j);
    }
    return r;
}

WeylElement ugl_to_weyl(const UglElement& x, int M) {
    int N = x.gl_size();
    WeylElement out(N == 0 ? 0 : N, N == 0 ? 0 : M);
    for (const auto& [mono, coeff] : x.terms()) {
        WeylElement acc(Rational(1));
        for (const auto& f : mono.factors()) {
            WeylElement g = gl_action(Side::glN, f[0], f[1], N, M);
            for (int e = 0; e < f[2]; ++e) acc = acc * g;
        }
        out = out + acc * coeff;
    }
    return out;
}

WeylElement c_lambda(const YoungDiagram& shape, int N, int M) {
    int n = shape.size();
    if (n == 0) return WeylElement(Rational(1));
    WeylElement out(N, M);
    Rational inv_fact = Rational::factorial(n).inverse();
    size_t len = static_cast<size_t>(N) * M;
    // sigma runs over S_n with chi(sigma) != 0; the (i, a) sums collect
    // straight into normal-ordered monomials since all x factors stand
    // left of all derivations in the defining sum.
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    std::vector<int> ivec(n, 1), avec(n, 1);
    do {
        Permutation sigma = Permutation::from_images(img);
        Rational chi = character(shape, sigma) * inv_fact;
        if (chi.is_zero()) continue;
        std::fill(ivec.begin(), ivec.end(), 1);
        while (true) {
            std::fill(avec.begin(), avec.end(), 1);
            while (true) {
                WeylElement::Key key{ExponentGrid(len, 0), ExponentGrid(len, 0)};
                for (int k = 0; k < n; ++k) {
                    key.x[(ivec[k] - 1) * M + (avec[k] - 1)]++;
                    key.d[(ivec[sigma(k + 1) - 1] - 1) * M + (avec[k] - 1)]++;
                }
                out.add_term(key, chi);
                int k = n - 1;
                while (k >= 0 && avec[k] == M) avec[k--] = 1;
                if (k < 0) break;
                ++avec[k];
            }
            int k = n - 1;
            while (k >= 0 && ivec[k] == N) ivec[k--] = 1;
            if (k < 0) break;
            ++ivec[k];
        }
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

WeylElement capelli_product(const YoungDiagram& shape, int N, int M) {
    int n = shape.size();
    if (n == 0) return WeylElement(Rational(1));
    std::vector<int> c = contents(shape);
    GroupAlgebraElement<Rational> y = y_coefficients(shape);
    WeylElement out(N, M);
    std::vector<int> ivec(n, 1);
    for (const auto& [sigma, ys] : y.terms()) {
        std::fill(ivec.begin(), ivec.end(), 1);
        while (true) {
            WeylElement acc(Rational(1));
            for (int k = 1; k <= n; ++k) {
                int xi = ivec[k - 1];
                int di = ivec[sigma(k) - 1];
                WeylElement factor(N, M);
                for (int a = 1; a <= M; ++a)
                    factor = factor + WeylElement::coordinate(N, M, xi, a) *
                                          WeylElement::derivation(N, M, di, a);
                if (xi == di) factor = factor - WeylElement(Rational(c[k - 1]));
                acc = acc * factor;
            }
            out = out + acc * ys;
            int k = n - 1;
            while (k >= 0 && ivec[k] == N) ivec[k--] = 1;
            if (k < 0) break;
            ++ivec[k];
        }
    }
    return out;
}

bool verify_capelli_identity(const YoungDiagram& shape, int N, int M) {
    WeylElement via_centre = ugl_to_weyl(e_lambda(shape, N, Rational(0)), M);
    WeylElement direct = c_lambda(shape, N, M);
    WeylElement ordered = capelli_product(shape, N, M);
    return via_centre == direct && direct == ordered;
}

bool verify_invariance(const YoungDiagram& shape, int N, int M) {
    WeylElement op = c_lambda(shape, N, M);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (!op.commutator(gl_action(Side::glN, i, j, N, M)).is_zero()) return false;
    for (int a = 1; a <= M; ++a)
        for (int b = 1; b <= M; ++b)
            if (!op.commutator(gl_action(Side::glM, a, b, N, M)).is_zero()) return false;
    return true;
}

PolyFunction apply(const WeylElement& op, const PolyFunction& f) {
    int N = f.rows(), M = f.cols();
    size_t len = static_cast<size_t>(N) * M;
    PolyFunction out(N, M);
    ExponentGrid s1, s2;
    for (const auto& [k, c] : op.terms()) {
        const ExponentGrid& kx = resize_grid(k.x, len, s1);
        const ExponentGrid& kd = resize_grid(k.d, len, s2);
        for (const auto& [e, fc] : f.terms()) {
            // d^beta x^e = falling factorial product, then multiply x^alpha.
            Rational coef = c * fc;
            ExponentGrid out_e(len, 0);
            bool kill = false;
            for (size_t p = 0; p < len && !kill; ++p) {
                if (kd[p] > e[p]) {
                    kill = true;
                    break;
                }
                for (int s = 0; s < kd[p]; ++s) coef *= Rational(e[p] - s);
                out_e[p] = static_cast<unsigned char>(e[p] - kd[p] + kx[p]);
            }
            if (!kill) out.add_term(out_e, coef);
        }
    }
    return out;
}

}  // namespace capelli
