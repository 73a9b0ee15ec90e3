#pragma once

#include <map>

#include "capelli/permutation.hpp"

namespace capelli {

// Element of C·S_n over a commutative coefficient ring C.  Terms are kept
// sparse, keyed by image sequence, with no stored zeros.  C must provide
// +, -, *, unary -, is_zero(), == and be constructible from long.
template <typename C>
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int degree) : degree_(degree) {}

    static GroupAlgebraElement identity(int degree, C coeff = C(1)) {
        GroupAlgebraElement e(degree);
        e.add_term(Permutation(degree), std::move(coeff));
        return e;
    }
    static GroupAlgebraElement single(Permutation p, C coeff = C(1)) {
        GroupAlgebraElement e(p.degree());
        e.add_term(std::move(p), std::move(coeff));
        return e;
    }

    int degree() const { return degree_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Permutation, C>& terms() const { return terms_; }

    C coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Permutation& p, const C& coeff) {
        if (p.degree() != degree_)
            throw std::invalid_argument("GroupAlgebraElement: term degree mismatch");
        accumulate(p, coeff);
    }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const {
        check_degree(o);
        GroupAlgebraElement r(*this);
        for (const auto& [p, c] : o.terms_) r.accumulate(p, c);
        return r;
    }

    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const {
        check_degree(o);
        GroupAlgebraElement r(*this);
        for (const auto& [p, c] : o.terms_) r.accumulate(p, -c);
        return r;
    }

    GroupAlgebraElement operator-() const {
        GroupAlgebraElement r(degree_);
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }

    // Convolution product under (s*t)(k) = s(t(k)).
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const {
        check_degree(o);
        GroupAlgebraElement r(degree_);
        for (const auto& [p, cp] : terms_)
            for (const auto& [q, cq] : o.terms_) r.accumulate(p * q, cp * cq);
        return r;
    }

    GroupAlgebraElement operator*(const C& s) const {
        GroupAlgebraElement r(degree_);
        if (s.is_zero()) return r;
        for (const auto& [p, c] : terms_) r.accumulate(p, c * s);
        return r;
    }

    bool operator==(const GroupAlgebraElement& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }
    bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

    // Involutive antiautomorphism g -> g^{-1}.
    GroupAlgebraElement alpha() const {
        GroupAlgebraElement r(degree_);
        for (const auto& [p, c] : terms_) r.terms_.emplace(p.inverse(), c);
        return r;
    }

    // Conjugates every permutation onto {offset+1 .. offset+n} inside
    // S_{new_degree}; algebra homomorphism.
    GroupAlgebraElement embed_shift(int offset, int new_degree) const {
        GroupAlgebraElement r(new_degree);
        for (const auto& [p, c] : terms_) r.accumulate(p.shifted(offset, new_degree), c);
        return r;
    }

    // Coefficient-wise ring map (e.g. Rational -> RationalFunction).
    template <typename D, typename F>
    GroupAlgebraElement<D> map_coefficients(F&& f) const {
        GroupAlgebraElement<D> r(degree_);
        for (const auto& [p, c] : terms_) r.add_term(p, f(c));
        return r;
    }

    void accumulate(const Permutation& p, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    void check_degree(const GroupAlgebraElement& o) const {
        if (degree_ != o.degree_)
            throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    }

    int degree_;
    std::map<Permutation, C> terms_;
};

template <typename C>
GroupAlgebraElement<C> operator*(const C& s, const GroupAlgebraElement<C>& x) {
    return x * s;
}

}  // namespace capelli
