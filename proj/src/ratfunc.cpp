#include "capelli/ratfunc.hpp"

namespace capelli {

RationalFunction::RationalFunction(UniPoly n, UniPoly d)
    : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    if (!den_.is_constant() && !num_.is_constant()) {
        UniPoly g = UniPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return RationalFunction(num_ + o.num_);
    // Classical lcm-based addition: only the shared denominator part can
    // reappear in the result's gcd.
    UniPoly g = UniPoly::gcd(den_, o.den_);
    UniPoly da = den_.divide_exact(g);
    UniPoly db = o.den_.divide_exact(g);
    UniPoly n = num_ * db + o.num_ * da;
    UniPoly d = den_ * db;
    if (g.degree() > 0) {
        UniPoly g2 = UniPoly::gcd(n, g);
        if (g2.degree() > 0) {
            n = n.divide_exact(g2);
            d = d.divide_exact(g2);
        }
    }
    RationalFunction r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.num_.is_zero()) {
        r.den_ = UniPoly(Rational(1));
        return r;
    }
    Rational lead = r.den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    // Inputs are reduced, so only cross gcds can cancel.
    UniPoly na = num_, nb = o.num_, da = den_, db = o.den_;
    if (!na.is_constant() && !db.is_constant()) {
        UniPoly g = UniPoly::gcd(na, db);
        if (g.degree() > 0) {
            na = na.divide_exact(g);
            db = db.divide_exact(g);
        }
    }
    if (!nb.is_constant() && !da.is_constant()) {
        UniPoly g = UniPoly::gcd(nb, da);
        if (g.degree() > 0) {
            nb = nb.divide_exact(g);
            da = da.divide_exact(g);
        }
    }
    RationalFunction r;
    r.num_ = na * nb;
    r.den_ = da * db;
    Rational lead = r.den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::invalid_argument("RationalFunction: division by zero function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    Rational lead = r.den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

std::optional<int> RationalFunction::valuation_at(const Rational& p) const {
    if (is_zero()) return std::nullopt;
    return num_.root_order(p) - den_.root_order(p);
}

Rational RationalFunction::limit_at(const Rational& p) const {
    if (is_zero()) return Rational(0);
    int dord = den_.root_order(p);
    if (dord == 0) return num_.evaluate(p) / den_.evaluate(p);
    // Reduced form: a denominator root cannot also be a numerator root,
    // but guard anyway so unreduced constructions fail loudly.
    int nord = num_.root_order(p);
    if (nord >= dord) {
        UniPoly n2 = num_.shift_out_root(p, dord);
        UniPoly d2 = den_.shift_out_root(p, dord);
        return n2.evaluate(p) / d2.evaluate(p);
    }
    throw PoleError(dord - nord, p);
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace capelli
