#pragma once
#include "operadlab/relation.hpp"
#include <array>
#include <vector>

namespace operadlab {

// Expected values the pipelines verify against.  All tables are stored as
// token strings and parsed through the scalar grammar.

// Parses a comma/newline separated token table into a matrix.
Matrix matrix_from_table(Ring ring, const std::string& table);

Matrix expected_twisted_dendriform();   // 3x8 over Z: the sign-twisted relation matrix
Matrix expected_dias_kernel_rows();     // 5x8 over Z: reference kernel rows
Matrix expected_dias_pair_rows();       // 5x8 over Z: the adjacent-pair reading of the same

Matrix expected_polar_closure();        // 6x12 over Z: closure of the polarized associator
Matrix expected_saturation_rows();      // 6x12 over Z: reference saturation rows
Matrix expected_reduced_rows();         // 6x12 over Z: reference length-3 basis rows

Matrix expected_deformation_hnf();      // 6x12 over Q[q]

std::vector<Relation> expected_split_deform_vectors();   // 3 SO2 vectors over Q[q]
std::array<Matrix, 3> expected_block_hnfs();             // 6x18, 6x18, 6x12 over Q[q]
std::vector<Relation> expected_dend_deform_generators(); // 3 SO2 relations over Q[q]
std::vector<Relation> expected_dias_deform_generators(); // 5 SO2 relations over Q[q]

} // namespace operadlab
