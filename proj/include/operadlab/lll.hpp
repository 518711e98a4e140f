#pragma once
#include "operadlab/matrix.hpp"

namespace operadlab {

// Exact-rational LLL over Z.  Input rows must be linearly independent; delta
// in (1/4, 1].  Output rows generate the same lattice, are size-reduced
// (|mu_ij| <= 1/2) and satisfy the Lovasz condition at delta, all certified in
// exact arithmetic.
Matrix lll_reduce(const Matrix& basis, const Rational& delta);

// true iff the two integer row lattices coincide (canonical Z-HNF comparison)
bool lattice_equal(const Matrix& a, const Matrix& b);

// LLL followed by: sign-normalize each row to a positive leading entry, sort
// by leading column, then reduce entries above each pivot by integer row
// operations.  Lattice-preserving.
Matrix triangularize(const Matrix& basis, const Rational& delta);

// squared Euclidean row lengths
std::vector<Int> row_square_lengths(const Matrix& m);

// exact certificates, usable as test oracles
bool is_size_reduced(const Matrix& m);
bool satisfies_lovasz(const Matrix& m, const Rational& delta);

} // namespace operadlab
