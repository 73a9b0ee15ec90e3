#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace capelli {

// Arbitrary-precision rational number, always in lowest terms with a
// positive denominator.  Thin wrapper over GMP's mpq_class so that the
// coefficient-ring interface (is_zero/is_one, "p/q" strings) is uniform
// across the library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Parses "p/q" or "p".
    explicit Rational(const std::string& s) : v_(parse(s)) {}

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    // "p/q", with "/q" omitted for integers.
    std::string str() const { return v_.get_str(); }

    static Rational factorial(int n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
        return Rational(f);
    }

private:
    static mpq_class parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return q;
    }

    mpq_class v_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

}  // namespace capelli
