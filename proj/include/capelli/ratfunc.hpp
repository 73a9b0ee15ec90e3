#pragma once

#include <optional>

#include "capelli/unipoly.hpp"

namespace capelli {

// Thrown when taking the value of a rational function at a pole.
struct PoleError : std::runtime_error {
    PoleError(int order_, const Rational& at_)
        : std::runtime_error("pole of order " + std::to_string(order_) + " at " + at_.str()),
          order(order_),
          at(at_) {}
    int order;
    Rational at;
};

// Reduced quotient of univariate polynomials: gcd(num, den) = 1, den monic.
// The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RationalFunction(UniPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RationalFunction(UniPoly n, UniPoly d);

    static RationalFunction variable(Var v) { return RationalFunction(UniPoly::variable(v)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Var var() const { return num_.var() != Var::none ? num_.var() : den_.var(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inverse() const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // ord_p(num) - ord_p(den); +infinity (nullopt) for the zero function.
    std::optional<int> valuation_at(const Rational& p) const;
    // Value at p; throws PoleError when valuation < 0.
    Rational limit_at(const Rational& p) const;

    std::string str() const;

private:
    void reduce();

    UniPoly num_, den_;
};

}  // namespace capelli
