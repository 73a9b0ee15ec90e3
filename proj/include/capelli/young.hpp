#pragma once

#include <string>
#include <vector>

#include "capelli/group_algebra.hpp"
#include "capelli/rational.hpp"

namespace capelli {

// Partition / Young diagram: weakly decreasing positive row lengths.
class YoungDiagram {
public:
    YoungDiagram() = default;  // empty diagram
    explicit YoungDiagram(std::vector<int> parts);
    YoungDiagram(std::initializer_list<int> parts)
        : YoungDiagram(std::vector<int>(parts)) {}

    // Comma-separated weakly decreasing integers; "" is the empty diagram.
    static YoungDiagram parse(const std::string& s);
    // All diagrams with exactly n boxes, in a fixed deterministic order.
    static std::vector<YoungDiagram> all_with_boxes(int n);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }  // number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }
    std::vector<int> conjugate() const;

    // Number of boxes on the main diagonal.
    int rank() const;
    // Pointwise parts comparison: every row of *this fits inside mu.
    bool contained_in(const YoungDiagram& mu) const;

    bool operator==(const YoungDiagram& o) const { return parts_ == o.parts_; }
    auto operator<=>(const YoungDiagram& o) const { return parts_ <=> o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Bijective filling of a shape by 1..n, rows and columns increasing.
class StandardTableau {
public:
    StandardTableau(YoungDiagram shape, std::vector<std::vector<int>> entries);
    const YoungDiagram& shape() const { return shape_; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }

private:
    YoungDiagram shape_;
    std::vector<std::vector<int>> entries_;
};

std::vector<StandardTableau> standard_tableaux(const YoungDiagram& shape);

// Data read off the column tableau Lambda^c (boxes filled 1..n down
// successive columns, left to right).
std::vector<int> contents(const YoungDiagram& shape);       // c_i = col - row
std::vector<int> column_tableau_rows(const YoungDiagram&);  // row of each i
std::vector<int> column_tableau_cols(const YoungDiagram&);  // column of each i
// Row-reading word of Lambda^c (rows top to bottom, left to right).
std::vector<int> reading_word(const YoungDiagram& shape);

struct Symmetrizers {
    GroupAlgebraElement<Rational> P;    // row group sum
    GroupAlgebraElement<Rational> Q;    // signed column group sum
    GroupAlgebraElement<Rational> Phi;  // Q P Q / prod(column lengths!)
};

Symmetrizers symmetrizers(const YoungDiagram& shape);

// Number of standard tableaux; enumeration cross-checked against the
// hook-length formula on every call (memoized).
long dimension(const YoungDiagram& shape);
long hook_length_dimension(const YoungDiagram& shape);

// Irreducible S_n character via the Murnaghan-Nakayama recursion.
Rational character(const YoungDiagram& shape, const Permutation& sigma);
Rational character_on_cycle_type(const YoungDiagram& shape, const std::vector<int>& rho);
// Independent route: averaged coefficient extraction from Phi.
Rational character_via_matrix_element(const YoungDiagram& shape, const Permutation& sigma);

// (dim/n!)*Phi: the idempotent whose coefficients are the y_sigma weights.
GroupAlgebraElement<Rational> y_coefficients(const YoungDiagram& shape);

// Semistandard tableaux with entries <= N, via the content product formula.
long semistandard_count(const YoungDiagram& shape, int N);

}  // namespace capelli
