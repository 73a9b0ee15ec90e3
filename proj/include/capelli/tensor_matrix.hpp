#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

// Sparse N^n x N^n matrix on (C^N)^{tensor n} with entries in an algebra
// A (Rational, RationalFunction, UglElement, Poly<...>).  Row and column
// multi-indices are packed base N into machine integers; entry
// multiplication preserves the left-to-right order, so noncommutative
// entry algebras are safe.
template <typename A>
class TensorMatrix {
public:
    using Index = std::uint32_t;

    TensorMatrix(int local_dim, int factors) : N_(local_dim), n_(factors) {
        if (local_dim < 1 || factors < 0)
            throw std::invalid_argument("TensorMatrix: bad dimensions");
        dim_ = 1;
        for (int k = 0; k < factors; ++k) dim_ *= static_cast<Index>(local_dim);
    }

    static TensorMatrix identity(int local_dim, int factors, const A& one = A(1)) {
        TensorMatrix m(local_dim, factors);
        for (Index r = 0; r < m.dim_; ++r) m.e_.emplace(std::make_pair(r, r), one);
        return m;
    }

    int local_dim() const { return N_; }
    int factors() const { return n_; }
    Index dim() const { return dim_; }
    bool is_zero() const { return e_.empty(); }
    size_t entry_count() const { return e_.size(); }
    const std::map<std::pair<Index, Index>, A>& entries() const { return e_; }

    Index encode(const std::vector<int>& idx) const {
        Index r = 0;
        for (int k = 0; k < n_; ++k) {
            if (idx[k] < 1 || idx[k] > N_) throw std::invalid_argument("TensorMatrix: index out of range");
            r = r * N_ + static_cast<Index>(idx[k] - 1);
        }
        return r;
    }
    std::vector<int> decode(Index v) const {
        std::vector<int> idx(n_);
        for (int k = n_ - 1; k >= 0; --k) {
            idx[k] = static_cast<int>(v % N_) + 1;
            v /= N_;
        }
        return idx;
    }

    A get(Index r, Index c) const {
        auto it = e_.find({r, c});
        return it == e_.end() ? A(0) : it->second;
    }

    void add_to_entry(Index r, Index c, const A& v) {
        if (v.is_zero()) return;
        auto key = std::make_pair(r, c);
        auto it = e_.find(key);
        if (it == e_.end()) {
            e_.emplace(key, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) e_.erase(it);
        }
    }

    TensorMatrix operator+(const TensorMatrix& o) const {
        check_shape(o);
        TensorMatrix r(*this);
        for (const auto& [k, v] : o.e_) r.add_to_entry(k.first, k.second, v);
        return r;
    }
    TensorMatrix operator-(const TensorMatrix& o) const {
        check_shape(o);
        TensorMatrix r(*this);
        for (const auto& [k, v] : o.e_) r.add_to_entry(k.first, k.second, -v);
        return r;
    }
    TensorMatrix operator-() const {
        TensorMatrix r(N_, n_);
        for (const auto& [k, v] : e_) r.e_.emplace(k, -v);
        return r;
    }

    TensorMatrix operator*(const TensorMatrix& o) const {
        check_shape(o);
        TensorMatrix r(N_, n_);
        // Entries are ordered row-major, so each middle index selects a
        // contiguous range of the right factor.
        for (const auto& [k, v] : e_) {
            auto lo = o.e_.lower_bound({k.second, 0});
            auto hi = o.e_.lower_bound({k.second + 1, 0});
            for (auto it = lo; it != hi; ++it)
                r.add_to_entry(k.first, it->first.second, v * it->second);
        }
        return r;
    }

    TensorMatrix operator*(const A& s) const {
        TensorMatrix r(N_, n_);
        for (const auto& [k, v] : e_) r.add_to_entry(k.first, k.second, v * s);
        return r;
    }

    // Entry-wise ring map (e.g. Rational -> Poly<UglElement>).
    template <typename B, typename F>
    TensorMatrix<B> map_entries(F&& f) const {
        TensorMatrix<B> r(N_, n_);
        for (const auto& [k, v] : e_) r.add_to_entry(k.first, k.second, f(v));
        return r;
    }

    bool operator==(const TensorMatrix& o) const {
        return N_ == o.N_ && n_ == o.n_ && e_ == o.e_;
    }
    bool operator!=(const TensorMatrix& o) const { return !(*this == o); }

    // Full trace over all tensor factors.
    A trace() const {
        A acc(0);
        for (const auto& [k, v] : e_)
            if (k.first == k.second) acc = acc + v;
        return acc;
    }

private:
    void check_shape(const TensorMatrix& o) const {
        if (N_ != o.N_ || n_ != o.n_)
            throw std::invalid_argument("TensorMatrix: shape mismatch");
    }

    int N_;
    int n_;
    Index dim_;
    std::map<std::pair<Index, Index>, A> e_;
};

}  // namespace capelli
