#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

// Permutation of {1..n}, stored as its image sequence.  Composition is
// right-to-left: (s*t)(k) = s(t(k)).
class Permutation {
public:
    explicit Permutation(int n);  // identity
    static Permutation from_images(std::vector<int> images);
    static Permutation transposition(int n, int i, int j);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    int sign() const;
    // Cycle lengths, weakly decreasing, fixed points included.
    std::vector<int> cycle_type() const;
    // Largest non-fixed point; 0 for the identity.
    int max_moved_point() const;

    // Conjugation onto {offset+1 .. offset+n} inside S_{new_degree},
    // fixing everything else.
    Permutation shifted(int offset, int new_degree) const;

    auto operator<=>(const Permutation& o) const { return img_ <=> o.img_; }
    bool operator==(const Permutation& o) const { return img_ == o.img_; }

    std::string str() const;

private:
    Permutation() = default;
    std::vector<int> img_;
};

}  // namespace capelli
