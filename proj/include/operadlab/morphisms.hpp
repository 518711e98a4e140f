#pragma once
#include "operadlab/relation.hpp"
#include <array>

namespace operadlab {

// Splitting morphism: each one-operation monomial maps to the sum of the four
// two-operation monomials with the same bracketing and permutation.
// O1 -> O2 and SO1 -> SO2.
Relation split_expand(const Relation& r);

// Polarization: substitute xy = [x,y] + x o y at both nodes of every monomial
// and canonicalize onto the polarized basis.  O1/SO1 -> SO1_POLAR.
Relation polarize(const Relation& r);

// Expansion of polarized monomials with the doubled convention
// [x,y] -> xy - yx, x o y -> xy + yx.  SO1_POLAR -> SO1.
// Note expand_polarized(polarize(r)) = 4r.
Relation expand_polarized(const Relation& r);

// Column permutation regrouping the 48 SO2 columns into the three blocks of
// association types {1,5,6}, {2,4,8}, {3,7} (1-based), widths 18/18/12.
struct ColumnPermutation {
    std::array<std::size_t, 48> to_grouped;    // original column -> grouped position
    std::array<std::size_t, 48> from_grouped;  // grouped position -> original column
};

const ColumnPermutation& dendriform_xi();

struct DendriformBlocks {
    std::array<Matrix, 3> blocks;  // column groups of widths 18, 18, 12
    const ColumnPermutation* xi;
};

// Splits a 48-column matrix into the three dendriform column groups.
DendriformBlocks dendriform_partition(const Matrix& m);

// Applies xi to the columns (all three groups side by side) / undoes it.
Matrix group_columns(const Matrix& m);
Matrix ungroup_columns(const Matrix& m);

// Sign twist between an operad's relation matrix and its Koszul dual's:
// width 8 — negate the second-bracketing columns 5..8; width 48 — scale column
// (type t, sigma) by sgn(sigma) and negate the second-bracketing types 5..8.
Matrix koszul_sign_twist(const Matrix& m);

} // namespace operadlab
