#pragma once

#include <string>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

// Formal variable tag.  Arithmetic between polynomials in different
// variables is rejected; constants carry Var::none and combine with
// anything.
enum class Var : unsigned char { none, t, z, u, v, w };

const char* var_name(Var v);

struct VariableMismatch : std::invalid_argument {
    VariableMismatch(Var a, Var b);
};

// Univariate polynomial over Rational, coefficients stored lowest degree
// first with a nonzero leading coefficient.  The zero polynomial has an
// empty coefficient vector and Var::none.
class UniPoly {
public:
    UniPoly() : var_(Var::none) {}
    UniPoly(const Rational& c);
    UniPoly(long c) : UniPoly(Rational(c)) {}
    UniPoly(Var v, std::vector<Rational> coeffs);

    static UniPoly variable(Var v);
    // a + b*x
    static UniPoly linear(Var v, const Rational& a, const Rational& b);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }
    Var var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& leading() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Rational evaluate(const Rational& p) const;
    // Multiplicity of p as a root; 0 when poly(p) != 0.  Undefined on zero.
    int root_order(const Rational& p) const;
    // Divides by (x - p)^k; requires exact divisibility.
    UniPoly shift_out_root(const Rational& p, int k) const;

    // Exact division; throws when the remainder is nonzero.
    UniPoly divide_exact(const UniPoly& d) const;
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    UniPoly monic() const;

    // Monic gcd via the primitive PRS over the integers (content pulled
    // out at each step to keep coefficients small).
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    std::string str() const;

private:
    void normalize();
    static Var unify(Var a, Var b);

    Var var_;
    std::vector<Rational> c_;
};

}  // namespace capelli
