#pragma once

#include <array>
#include <map>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

// Monomial in the generators E_ij of U(gl_N), stored in the fixed total
// order (i, then j) with positive exponents.  The sorted form is the PBW
// normal form's canonical key.
class PbwMonomial {
public:
    PbwMonomial() = default;  // the unit monomial

    // factors: list of (i, j, exponent) with exponent > 0, sorted.
    static PbwMonomial from_factors(std::vector<std::array<int, 3>> factors);
    static PbwMonomial generator(int i, int j) { return from_factors({{i, j, 1}}); }

    const std::vector<std::array<int, 3>>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    int total_degree() const;
    int max_index() const;  // largest i or j occurring
    // Flattened word of (i,j) generator labels, exponents expanded.
    std::vector<std::pair<int, int>> word() const;

    auto operator<=>(const PbwMonomial& o) const { return f_ <=> o.f_; }
    bool operator==(const PbwMonomial& o) const { return f_ == o.f_; }

    std::string str() const;

private:
    std::vector<std::array<int, 3>> f_;
};

// Element of U(gl_N) in PBW normal form: sparse rational combination of
// sorted monomials.  N = 0 marks scalars, which combine with any N.
class UglElement {
public:
    UglElement() : N_(0) {}                       // zero
    UglElement(long c) : N_(0) { set_scalar(Rational(c)); }
    explicit UglElement(const Rational& c) : N_(0) { set_scalar(c); }

    static UglElement zero(int N);                // zero of U(gl_N)
    static UglElement generator(int N, int i, int j);

    int gl_size() const { return N_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    const std::map<PbwMonomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const PbwMonomial& m) const;
    int degree() const;

    UglElement operator-() const;
    UglElement operator+(const UglElement& o) const;
    UglElement operator-(const UglElement& o) const;
    // PBW normal-form product; rejects results beyond the degree cap.
    UglElement operator*(const UglElement& o) const;
    UglElement operator*(const Rational& s) const;
    bool operator==(const UglElement& o) const;
    bool operator!=(const UglElement& o) const { return !(*this == o); }

    UglElement commutator(const UglElement& o) const { return *this * o - o * *this; }

    // [x, E_ij] = 0 for all generators of gl_N.
    bool is_central() const;

    void add_term(const PbwMonomial& m, const Rational& c);

    // Guard against runaway rewriting; products whose factor words exceed
    // this length throw.
    static int degree_cap();
    static void set_degree_cap(int cap);

    std::string str() const;

private:
    void set_scalar(const Rational& c);
    static int unify(int a, int b);

    int N_;
    std::map<PbwMonomial, Rational> terms_;
};

inline UglElement operator*(const Rational& s, const UglElement& x) { return x * s; }

}  // namespace capelli
