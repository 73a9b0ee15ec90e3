#pragma once

#include <map>
#include <vector>

#include "capelli/rational.hpp"
#include "capelli/ugl.hpp"
#include "capelli/young.hpp"

namespace capelli {

// Exponent grid over the N x M coordinates x_ia, row-major.
using ExponentGrid = std::vector<unsigned char>;

// Normal-ordered polynomial differential operator on C^N (x) C^M: every
// monomial is x^alpha d^beta with all multiplication operators left of
// all derivations.  (N, M) = (0, 0) marks scalars, which combine with
// any shape.
class WeylElement {
public:
    struct Key {
        ExponentGrid x, d;
        auto operator<=>(const Key&) const = default;
    };

    WeylElement() : N_(0), M_(0) {}  // zero
    WeylElement(long c) : N_(0), M_(0) { set_scalar(Rational(c)); }
    explicit WeylElement(const Rational& c) : N_(0), M_(0) { set_scalar(c); }
    WeylElement(int N, int M) : N_(N), M_(M) {}  // zero of given shape

    static WeylElement coordinate(int N, int M, int i, int a);   // x_ia
    static WeylElement derivation(int N, int M, int i, int a);   // d_ia

    int rows() const { return N_; }
    int cols() const { return M_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coefficient(const Key& k) const;

    WeylElement operator-() const;
    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-(const WeylElement& o) const;
    // Normal-ordered product: derivations commute past coordinates by the
    // per-coordinate Leibniz expansion; distinct coordinates commute.
    WeylElement operator*(const WeylElement& o) const;
    WeylElement operator*(const Rational& s) const;
    bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    WeylElement commutator(const WeylElement& o) const { return *this * o - o * *this; }

    void add_term(const Key& k, const Rational& c);

    // Every monomial has x-degree dx and d-degree dd.
    bool is_homogeneous(int dx, int dd) const;

    std::string str() const;

private:
    void set_scalar(const Rational& c);
    void unify_shape(const WeylElement& o, int& N, int& M) const;

    int N_, M_;
    std::map<Key, Rational> terms_;
};

inline WeylElement operator*(const Rational& s, const WeylElement& x) { return x * s; }

// Polynomial function on C^N (x) C^M (no derivations).
class PolyFunction {
public:
    PolyFunction(int N, int M) : N_(N), M_(M) {}
    static PolyFunction monomial(int N, int M, const ExponentGrid& exps,
                                 const Rational& c = Rational(1));

    int rows() const { return N_; }
    int cols() const { return M_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExponentGrid, Rational>& terms() const { return terms_; }

    PolyFunction operator+(const PolyFunction& o) const;
    PolyFunction operator-(const PolyFunction& o) const;
    bool operator==(const PolyFunction& o) const { return terms_ == o.terms_; }

    void add_term(const ExponentGrid& e, const Rational& c);

private:
    int N_, M_;
    std::map<ExponentGrid, Rational> terms_;
};

enum class Side { glN, glM };

// The coordinate realization of the Lie algebra actions: on the gl_N side
// E_ij -> sum_b x_ib d_jb, on the gl_M side E_ab -> sum_j x_ja d_jb.
WeylElement gl_action(Side side, int i, int j, int N, int M);

// Multiplicative extension of the gl_N action to PBW monomials.
WeylElement ugl_to_weyl(const UglElement& x, int M);

// Character-averaged invariant operator attached to lambda.
WeylElement c_lambda(const YoungDiagram& shape, int N, int M);

// Ordered-product formula: sum over sigma and row indices i of y_sigma
// times the product over k of (sum_a x_{i_k a} d_{i_sigma(k) a} - c_k
// delta_{i_k i_sigma(k)}); each factor carries its own column sum.
WeylElement capelli_product(const YoungDiagram& shape, int N, int M);

// ugl_to_weyl(e_lambda) = c_lambda = capelli_product, checked exactly.
bool verify_capelli_identity(const YoungDiagram& shape, int N, int M);

// [c_lambda, g] = 0 for every generator g of gl_N x gl_M.
bool verify_invariance(const YoungDiagram& shape, int N, int M);

// Apply a differential operator to a polynomial, exactly.
PolyFunction apply(const WeylElement& op, const PolyFunction& f);

}  // namespace capelli
