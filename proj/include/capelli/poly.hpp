#pragma once

#include <stdexcept>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

// Dense polynomial in one formal variable over an arbitrary ring R
// (possibly noncommutative); coefficients lowest degree first, trailing
// zeros trimmed.  R must provide +, -, *, unary -, is_zero(), ==, and be
// constructible from long.
template <typename R>
class Poly {
public:
    Poly() = default;  // zero
    Poly(R constant) {
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<R>{R(0), R(1)}); }
    // a + b*x
    static Poly linear(R a, R b) { return Poly(std::vector<R>{std::move(a), std::move(b)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == R(1); }
    R coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return R(0);
        return c_[k];
    }
    const std::vector<R>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r;
        r.c_.reserve(c_.size());
        for (const auto& x : c_) r.c_.push_back(-x);
        return r;
    }
    Poly operator+(const Poly& o) const {
        Poly r;
        size_t n = std::max(c_.size(), o.c_.size());
        r.c_.reserve(n);
        for (size_t k = 0; k < n; ++k) {
            if (k < c_.size() && k < o.c_.size())
                r.c_.push_back(c_[k] + o.c_[k]);
            else if (k < c_.size())
                r.c_.push_back(c_[k]);
            else
                r.c_.push_back(o.c_[k]);
        }
        r.trim();
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        Poly r;
        if (is_zero() || o.is_zero()) return r;
        r.c_.assign(c_.size() + o.c_.size() - 1, R(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        r.trim();
        return r;
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    template <typename S>
    R evaluate(const S& at) const {
        if (is_zero()) return R(0);
        R acc = c_.back();
        for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k) acc = acc * at + c_[k];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<R> c_;
};

}  // namespace capelli
