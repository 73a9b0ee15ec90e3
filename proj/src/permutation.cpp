#include "capelli/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace capelli {

Permutation::Permutation(int n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative degree");
    img_.resize(n);
    for (int k = 0; k < n; ++k) img_[k] = k + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("Permutation: image sequence is not a bijection");
        seen[v - 1] = true;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("Permutation: bad transposition");
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[j - 1]);
    return p;
}

bool Permutation::is_identity() const {
    for (int k = 0; k < degree(); ++k)
        if (img_[k] != k + 1) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (degree() != o.degree())
        throw std::invalid_argument("Permutation: degree mismatch in composition");
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t k = 0; k < img_.size(); ++k) r.img_[k] = img_[o.img_[k] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t k = 0; k < img_.size(); ++k) r.img_[img_[k] - 1] = static_cast<int>(k) + 1;
    return r;
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_type())
        if (len % 2 == 0) s = -s;
    return s;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> type;
    for (size_t k = 0; k < img_.size(); ++k) {
        if (seen[k]) continue;
        int len = 0;
        size_t j = k;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j] - 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

int Permutation::max_moved_point() const {
    for (int k = degree(); k >= 1; --k)
        if (img_[k - 1] != k) return k;
    return 0;
}

Permutation Permutation::shifted(int offset, int new_degree) const {
    if (offset < 0) throw std::invalid_argument("Permutation: negative shift offset");
    if (max_moved_point() + offset > new_degree)
        throw std::invalid_argument("Permutation: shift exceeds target degree");
    Permutation r(new_degree);
    for (int k = 1; k <= degree(); ++k) {
        if (k + offset <= new_degree) r.img_[offset + k - 1] = img_[k - 1] + offset;
    }
    return r;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < img_.size(); ++k) {
        if (k) os << ",";
        os << img_[k];
    }
    os << "]";
    return os.str();
}

}  // namespace capelli
