#include "capelli/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace capelli {

const char* var_name(Var v) {
    switch (v) {
        case Var::t: return "t";
        case Var::z: return "z";
        case Var::u: return "u";
        case Var::v: return "v";
        case Var::w: return "w";
        default: return "_";
    }
}

VariableMismatch::VariableMismatch(Var a, Var b)
    : std::invalid_argument(std::string("variable mismatch: ") + var_name(a) +
                            " vs " + var_name(b)) {}

UniPoly::UniPoly(const Rational& c) : var_(Var::none) {
    if (!c.is_zero()) c_.push_back(c);
}

UniPoly::UniPoly(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) {
    normalize();
}

UniPoly UniPoly::variable(Var v) {
    return UniPoly(v, {Rational(0), Rational(1)});
}

UniPoly UniPoly::linear(Var v, const Rational& a, const Rational& b) {
    return UniPoly(v, {a, b});
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.size() <= 1) var_ = Var::none;
}

Var UniPoly::unify(Var a, Var b) {
    if (a == Var::none) return b;
    if (b == Var::none) return a;
    if (a != b) throw VariableMismatch(a, b);
    return a;
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("UniPoly: leading of zero");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    Var v = unify(var_, o.var_);
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(v, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    Var v = unify(var_, o.var_);
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(v, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    Var v = unify(var_, o.var_);
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(v, std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    UniPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    if (!c_.empty() && !is_constant()) {
        if (o.var_ != Var::none && var_ != Var::none && var_ != o.var_) return false;
    }
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Rational UniPoly::evaluate(const Rational& p) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * p + *it;
    return acc;
}

int UniPoly::root_order(const Rational& p) const {
    if (is_zero()) throw std::logic_error("UniPoly: root_order of zero");
    // Repeated synthetic division by (x - p).
    std::vector<Rational> cur = c_;
    int order = 0;
    while (true) {
        // Evaluate and divide in one pass: cur = q*(x-p) + rem.
        Rational rem(0);
        std::vector<Rational> q(cur.size() > 0 ? cur.size() - 1 : 0, Rational(0));
        Rational acc(0);
        for (int i = static_cast<int>(cur.size()) - 1; i >= 0; --i) {
            acc = acc * p + cur[i];
            if (i > 0) q[i - 1] = acc;
        }
        rem = acc;
        if (!rem.is_zero()) return order;
        ++order;
        cur = std::move(q);
        if (cur.empty()) return order;  // the poly was exactly (x-p)^deg * c
    }
}

UniPoly UniPoly::shift_out_root(const Rational& p, int k) const {
    std::vector<Rational> cur = c_;
    for (int step = 0; step < k; ++step) {
        std::vector<Rational> q(cur.size() - 1, Rational(0));
        Rational acc(0);
        for (int i = static_cast<int>(cur.size()) - 1; i >= 0; --i) {
            acc = acc * p + cur[i];
            if (i > 0) q[i - 1] = acc;
        }
        if (!acc.is_zero()) throw std::logic_error("UniPoly: shift_out_root not divisible");
        cur = std::move(q);
    }
    return UniPoly(var_, std::move(cur));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    Var v = unify(var_, d.var_);
    if (d.is_zero()) throw std::invalid_argument("UniPoly: division by zero");
    if (degree() < d.degree()) return {UniPoly(), *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo(degree() - d.degree() + 1, Rational(0));
    Rational lead_inv = d.leading().inverse();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Rational f = rem[k + d.degree()] * lead_inv;
        if (f.is_zero()) continue;
        quo[k] = f;
        for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= f * d.c_[i];
    }
    return {UniPoly(v, std::move(quo)), UniPoly(v, std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("UniPoly: inexact division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

namespace {

// Integer primitive part: scales a rational-coefficient vector to a
// primitive integer vector with positive leading coefficient.
std::vector<mpz_class> primitive_part(const std::vector<Rational>& c) {
    mpz_class den_lcm = 1;
    for (const auto& x : c)
        if (!x.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<mpz_class> r(c.size());
    mpz_class content = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        r[i] = c[i].numerator() * (den_lcm / c[i].denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), r[i].get_mpz_t());
    }
    if (content == 0) return r;
    for (auto& x : r) x /= content;
    if (r.back() < 0)
        for (auto& x : r) x = -x;
    return r;
}

void make_primitive(std::vector<mpz_class>& r) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) return;
    mpz_class content = 0;
    for (const auto& x : r) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    for (auto& x : r) x /= content;
    if (r.back() < 0)
        for (auto& x : r) x = -x;
}

// Pseudo-remainder of a by b (both integer, b nonzero, deg a >= deg b).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        mpz_class la = a.back();
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    Var v = unify(a.var_, b.var_);
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<mpz_class> p = primitive_part(a.c_);
    std::vector<mpz_class> q = primitive_part(b.c_);
    if (p.size() < q.size()) std::swap(p, q);
    while (!q.empty()) {
        std::vector<mpz_class> r = pseudo_rem(p, q);
        make_primitive(r);
        p = std::move(q);
        q = std::move(r);
    }
    std::vector<Rational> g(p.size());
    for (size_t i = 0; i < p.size(); ++i) g[i] = Rational(p[i]);
    return UniPoly(p.size() <= 1 ? Var::none : v, std::move(g)).monic();
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || !c_[k].is_one()) os << c_[k].str();
        if (k > 0) {
            if (!c_[k].is_one()) os << "*";
            os << var_name(var_);
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace capelli
