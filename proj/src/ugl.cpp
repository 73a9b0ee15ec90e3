#include "capelli/ugl.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace capelli {

PbwMonomial PbwMonomial::from_factors(std::vector<std::array<int, 3>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return std::pair(a[0], a[1]) < std::pair(b[0], b[1]); });
    PbwMonomial m;
    for (const auto& f : factors) {
        if (f[0] < 1 || f[1] < 1 || f[2] <= 0)
            throw std::invalid_argument("PbwMonomial: bad factor");
        if (!m.f_.empty() && m.f_.back()[0] == f[0] && m.f_.back()[1] == f[1])
            m.f_.back()[2] += f[2];
        else
            m.f_.push_back(f);
    }
    return m;
}

int PbwMonomial::total_degree() const {
    int d = 0;
    for (const auto& f : f_) d += f[2];
    return d;
}

int PbwMonomial::max_index() const {
    int m = 0;
    for (const auto& f : f_) m = std::max({m, f[0], f[1]});
    return m;
}

std::vector<std::pair<int, int>> PbwMonomial::word() const {
    std::vector<std::pair<int, int>> w;
    for (const auto& f : f_)
        for (int k = 0; k < f[2]; ++k) w.emplace_back(f[0], f[1]);
    return w;
}

std::string PbwMonomial::str() const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    for (size_t k = 0; k < f_.size(); ++k) {
        if (k) os << " ";
        os << "E" << f_[k][0] << f_[k][1];
        if (f_[k][2] > 1) os << "^" << f_[k][2];
    }
    return os.str();
}

namespace {
std::atomic<int> g_degree_cap{12};
}

int UglElement::degree_cap() { return g_degree_cap.load(); }
void UglElement::set_degree_cap(int cap) { g_degree_cap.store(cap); }

UglElement UglElement::zero(int N) {
    UglElement e;
    e.N_ = N;
    return e;
}

UglElement UglElement::generator(int N, int i, int j) {
    if (i < 1 || j < 1 || i > N || j > N)
        throw std::invalid_argument("UglElement: generator index out of range");
    UglElement e = UglElement::zero(N);
    e.terms_.emplace(PbwMonomial::generator(i, j), Rational(1));
    return e;
}

void UglElement::set_scalar(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(PbwMonomial(), c);
}

bool UglElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational UglElement::coefficient(const PbwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int UglElement::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int UglElement::unify(int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a != b) throw std::invalid_argument("UglElement: gl size mismatch");
    return a;
}

void UglElement::add_term(const PbwMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.max_index() > N_) {
        if (N_ != 0) throw std::invalid_argument("UglElement: monomial index out of range");
        N_ = m.max_index();
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UglElement UglElement::operator-() const {
    UglElement r = zero(N_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

UglElement UglElement::operator+(const UglElement& o) const {
    UglElement r = zero(unify(N_, o.N_));
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

UglElement UglElement::operator-(const UglElement& o) const {
    UglElement r = zero(unify(N_, o.N_));
    r.terms_ = terms_;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

UglElement UglElement::operator*(const Rational& s) const {
    UglElement r = zero(N_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

namespace {

using Word = std::vector<std::pair<int, int>>;

bool generator_less(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return a < b;
}

// Rewrites a word of generators into PBW normal form by bubbling adjacent
// out-of-order pairs with E_ab E_cd = E_cd E_ab + [E_ab, E_cd], where
// [E_ij, E_kl] = delta_jk E_il - delta_li E_kj.
void normal_order_word(Word w, Rational coeff, UglElement& out) {
    if (static_cast<int>(w.size()) > UglElement::degree_cap())
        throw std::length_error("UglElement: degree cap exceeded (runaway product?)");
    for (size_t p = 0; p + 1 < w.size(); ++p) {
        if (!generator_less(w[p + 1], w[p])) continue;
        auto [i, j] = w[p];
        auto [k, l] = w[p + 1];
        // Swap branch.
        Word swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        normal_order_word(std::move(swapped), coeff, out);
        // Commutator branches, each one generator shorter.
        if (j == k) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + p);
            shorter.emplace_back(i, l);
            shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
            normal_order_word(std::move(shorter), coeff, out);
        }
        if (i == l) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + p);
            shorter.emplace_back(k, j);
            shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
            normal_order_word(std::move(shorter), -coeff, out);
        }
        return;
    }
    // Sorted: collect into a monomial.
    std::vector<std::array<int, 3>> factors;
    for (const auto& [i, j] : w) factors.push_back({i, j, 1});
    out.add_term(PbwMonomial::from_factors(std::move(factors)), coeff);
}

}  // namespace

UglElement UglElement::operator*(const UglElement& o) const {
    UglElement r = zero(unify(N_, o.N_));
    for (const auto& [ma, ca] : terms_) {
        Word wa = ma.word();
        for (const auto& [mb, cb] : o.terms_) {
            Word w = wa;
            Word wb = mb.word();
            w.insert(w.end(), wb.begin(), wb.end());
            normal_order_word(std::move(w), ca * cb, r);
        }
    }
    return r;
}

bool UglElement::operator==(const UglElement& o) const {
    return terms_ == o.terms_;
}

bool UglElement::is_central() const {
    for (int i = 1; i <= N_; ++i)
        for (int j = 1; j <= N_; ++j) {
            if (!commutator(generator(N_, i, j)).is_zero()) return false;
        }
    return true;
}

std::string UglElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (!m.is_unit()) os << "*" << m.str();
    }
    return os.str();
}

}  // namespace capelli
