#pragma once
#include "operadlab/hnf.hpp"
#include "operadlab/relation.hpp"
#include <vector>

namespace operadlab {

// Image of a relation under a permutation of the arguments (signed basis action).
Relation act_relation(int sigma, const Relation& r);

// All 6 permutation images of each generator, stacked generator-major with the
// six permutations in lex order inside each block.
Matrix s3_closure(const std::vector<Relation>& gens);

struct S3ModuleResult {
    Matrix closure;  // the 6k-row stack
    HnfResult hnf;   // HNF of the closure (with transform)
};

S3ModuleResult s3_module_hnf(const std::vector<Relation>& gens);

// Canonical basis of the generated S3-module: nonzero rows of the closure HNF.
Matrix s3_module_basis(const std::vector<Relation>& gens);

// True iff the two generator sets span the same S3-module over their ring.
bool module_equal(const std::vector<Relation>& a, const std::vector<Relation>& b);

// Stable row order used before generator extraction: rows containing q first,
// then fewer nonzero entries, then smaller leading column, then entrywise
// lexicographic comparison.
Matrix sort_rows_extraction_order(const Matrix& m);

// Total order on same-ring scalars backing the lexicographic tie-break:
// integers by value; polynomials by coefficient count, then coefficients
// from the constant term up.
int scalar_order(const Scalar& a, const Scalar& b);

enum class Membership { RING, FIELD };

// Forward pass: keep each nonzero row not already in the S3-module generated by
// the rows kept so far (RING: exact membership over the coefficient ring;
// FIELD: rank test, i.e. membership over the fraction field).  With minimize,
// a backward pass drops rows whose omission leaves the module unchanged.
struct ExtractionResult {
    std::vector<Relation> generators;
    std::vector<std::size_t> kept_indices;  // positions in the input list
};

ExtractionResult extract_generators(const std::vector<Relation>& rows, bool minimize,
                                    Membership mode = Membership::RING);

} // namespace operadlab
