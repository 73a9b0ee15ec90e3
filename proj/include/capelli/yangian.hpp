#pragma once

#include "capelli/group_algebra.hpp"
#include "capelli/poly.hpp"
#include "capelli/ratfunc.hpp"
#include "capelli/tensor_matrix.hpp"
#include "capelli/ugl.hpp"
#include "capelli/young.hpp"

namespace capelli {

using UglPoly = Poly<UglElement>;

// Linear extension of the symmetric-group action permuting tensor factors
// of (C^N)^{tensor n}: sigma sends slot k to slot sigma(k).
TensorMatrix<Rational> perm_to_matrix(const GroupAlgebraElement<Rational>& x, int N);

// F_lambda = image of (dim/n!) Phi_lambda; a projector, zero when lambda
// has more than N rows.
TensorMatrix<Rational> f_projector(const YoungDiagram& shape, int N);

// iota_k (x) id of E = sum E_ji (x) E_ij on n factors: the slot-k matrix
// whose (a,b) entry is the generator E_ba.
TensorMatrix<UglElement> e_matrix_at(int N, int n, int k);

// F_lambda (x) 1 * (E_1 + z - c_1) ... (E_n + z - c_n): the polynomial in
// z realizing the normalized R-matrix image on V_lambda.
TensorMatrix<UglPoly> capelli_matrix_polynomial(const YoungDiagram& shape, int N);

// Trace over the matrix part; every z-coefficient is central.
UglPoly e_lambda_poly(const YoungDiagram& shape, int N);
UglElement e_lambda(const YoungDiagram& shape, int N, const Rational& at);

struct QuantumDeterminant {
    // pi(D_1) .. pi(D_N): images of the quantum determinant coefficients.
    std::vector<UglElement> coefficients;
    // The denominator-cleared series: D(u) * u(u-1)...(u-N+1), monic of
    // degree N over U(gl_N).
    UglPoly cleared;
};

QuantumDeterminant quantum_determinant(int N);

// The cleared product F_N (x) 1 * (u - E_1) ... (u - N + 1 - E_N) equals
// F_N tensored with the cleared determinant series.
bool verify_qdet_divisibility(int N);

// R12(u,v) T1(u) T2(v) = T2(v) T1(u) R12(u,v) with T(u) = 1 - E/u, as an
// exact polynomial identity in u after clearing (u-v) u v; v runs over
// three generic rational samples (degree in v is at most two).
bool verify_rtt_evaluation(int N);

// (1 - sum_k P_{1,k+1}/u) (id (x) F_lambda) =
//   prod_k R_{1,k+1}(u, c_k) (id (x) F_lambda) on n+1 factors.
bool verify_projected_action(const YoungDiagram& shape, int N);

// id (x) pi_mu (E_lambda(0)) = 0 for |mu| < |lambda|: every entry of
// E_lambda(0), pushed through the tensor representation on (C^N)^{(x)m}
// and compressed by F_mu on both sides, vanishes.
bool verify_vanishing(const YoungDiagram& lambda, const YoungDiagram& mu, int N);

// (F_lambda (x) id) prod R_{k,l+n}(c_k, d_l + z) (id (x) F_mu) on n+m
// factors, with reduced rational-function entries.
TensorMatrix<RationalFunction> r_lambda_mu(const YoungDiagram& lambda,
                                           const YoungDiagram& mu, int N);

int max_pole_order_at_zero(const TensorMatrix<RationalFunction>& m);

// The tensor representation of U(gl_N) on (C^N)^{tensor m}:
// E_ij -> sum_k iota_k(e_ij), extended multiplicatively.
TensorMatrix<Rational> tensor_representation(const UglElement& x, int m);

}  // namespace capelli
