#pragma once

#include "capelli/group_algebra.hpp"
#include "capelli/ratfunc.hpp"
#include "capelli/young.hpp"

namespace capelli {

// phi_ij(u,v) = 1 - (i j)/(u - v) as an element of C(x)·S_n, where u and
// v are affine expressions in the single formal variable x.  The whole
// fusion machinery works along one-parameter lines: for the fusion limit
// the line is z_i = r_i * t with r_i the row index of i in the column
// tableau, which lies inside the admissible set (equal parameters within
// rows) and passes through the common point at t = 0.
struct PhiFactor {
    int i, j;          // distinct tensor positions
    UniPoly difference;  // u - v as a polynomial in the line parameter
};

// The substitution z_i = multipliers[i] * t; multipliers agree exactly on
// the rows of the column tableau.
struct FusionLine {
    YoungDiagram shape;
    std::vector<Rational> multipliers;
    static FusionLine for_shape(const YoungDiagram& shape);
    // phi factor for the pair (i, j) along this line, in the variable t.
    PhiFactor factor(int i, int j) const;
};

// Ordered pair list of the full fusion product in lexicographic order.
std::vector<std::pair<int, int>> lexicographic_pairs(int n);

// The reordering that makes regularity at the common point manifest:
// pairs (i,j) with i in the "before" subsequence A_j of the reading word
// come first (j ascending), then the "after" pairs (j descending);
// within one j, by position in the reading word.
struct FusionOrdering {
    std::vector<std::pair<int, int>> a_pairs;
    std::vector<std::pair<int, int>> b_pairs;
    std::vector<std::pair<int, int>> all() const;
};
FusionOrdering fusion_ordering(const YoungDiagram& shape);

// Product over the given pairs of phi_ij(c_i + r_i t, c_j + r_j t),
// coefficients reduced rational functions of t.
GroupAlgebraElement<RationalFunction> fusion_product_over(
    const YoungDiagram& shape, const std::vector<std::pair<int, int>>& pairs);

// The full fusion product in lexicographic order.
GroupAlgebraElement<RationalFunction> fusion_product(const YoungDiagram& shape);

// Coefficient-wise limit at t = 0; equals the matrix element Phi_lambda.
GroupAlgebraElement<Rational> fusion_limit(const YoungDiagram& shape);

// Limit of the product over the A-pairs alone; equals Q_lambda P_lambda.
GroupAlgebraElement<Rational> upsilon_limit(const YoungDiagram& shape);

// Phi_lambda,mu(z) = Phi_lambda * prod phi_{i,j+n}(c_i, d_j + z) * shifted
// Phi_mu, an element of C(z)·S_{n+m} with reduced coefficients.
GroupAlgebraElement<RationalFunction> phi_lambda_mu(const YoungDiagram& lambda,
                                                    const YoungDiagram& mu);

// Max over coefficients of the pole order at z = 0.  Uses a common
// denominator internally, so no per-term reduction is needed.
int pole_order_phi(const YoungDiagram& lambda, const YoungDiagram& mu);

int max_pole_order_at_zero(const GroupAlgebraElement<RationalFunction>& x);

// Appending one box: the ordered product of the extra factors against
// the embedded matrix element collapses to a single simple-pole bracket;
// both sides are expanded over C(u)·S_{n+1} and compared exactly.
bool verify_one_row_extension(const YoungDiagram& shape);

struct LocalIdentityReport {
    bool ok = true;
    std::string failure;  // description of the first failing identity
};

// The Yang-Baxter relation, the four-index commutation, and the
// restriction identities of the triple product at parameter offsets +-1,
// checked as exact rational-function identities: one parameter stays
// symbolic while the others run over three independent generic rational
// samples (degrees in the sampled parameters are at most two, so three
// values are conclusive).
LocalIdentityReport verify_local_identities();

}  // namespace capelli
