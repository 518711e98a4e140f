#pragma once
#include "operadlab/matrix.hpp"

namespace operadlab {

// Row-style Hermite normal form over Z or Q[q]:
//   * H = U * M with U invertible over the ring (det +-1 over Z, nonzero
//     rational over Q[q]);
//   * nonzero rows first, pivot columns strictly increasing;
//   * pivots positive (Z) / monic (Q[q]);
//   * entries above a pivot reduced: in [0, pivot) over Z, degree < deg(pivot)
//     over Q[q].
// H is the canonical form of the row module; U is one valid transform.
struct HnfResult {
    Matrix H;
    Matrix U;
    size_t rank = 0;
    Scalar det_u;  // accumulated exactly during elimination
};

HnfResult hnf_with_transform(const Matrix& m);

size_t rank(const Matrix& m);  // over the fraction field

// Basis of {v : M v^T = 0}.  Over Z the rows generate the full integer kernel
// lattice; over Q[q] the kernel as a Q[q]-module.  Rows of the result are the
// bottom rows of the transform U for HNF(M^T).
Matrix nullspace_basis(const Matrix& m);

// Z-basis of the saturation of M's row lattice (all integer vectors inside the
// rational row space); null space applied twice.
Matrix rowspace_saturation_basis(const Matrix& m);

// Reduces v against the nonzero rows of H (which must be an HNF): while v's
// leading column has a pivot whose entry divides v there, subtract the exact
// multiple.  v lies in H's row module iff the remainder is zero.
std::vector<Scalar> membership_reduce(const Matrix& h, const std::vector<Scalar>& v);

bool is_module_member(const Matrix& h, const std::vector<Scalar>& v);

// Entrywise evaluation at q0; result stays in the Q[q] ring (constants).
Matrix specialize_matrix(const Matrix& m, const Rational& q0);

bool is_hnf(const Matrix& m);

} // namespace operadlab
