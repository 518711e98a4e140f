#pragma once
#include "operadlab/relation.hpp"
#include <vector>

namespace operadlab {

// Defining relations of the dendriform operad on the 8-dimensional
// two-operation basis (type-major order).
Matrix dendriform_relations();  // 3x8 over Z

// Defining relations of the diassociative operad (five two-term relations).
Matrix diassociative_relations();  // 5x8 over Z

// Associativity relation (ab)c - a(bc) on the symmetrized one-operation basis.
Relation associator_so1();  // SO1, over Z

// The one-parameter family deforming the polarized associativity relations:
// Jacobi, the q-weighted derivation-type relation, and Jordan associativity.
std::vector<Relation> deformed_polar_relations();  // SO1_POLAR, over Q[q]

// Poisson relations on the polarized basis (the q = 0 limit), Jacobi included.
std::vector<Relation> poisson_polar_relations();  // SO1_POLAR, over Z

// A two-operation relation placed in the symmetrized space at the identity
// permutation of the arguments.
Relation include_o2_in_so2(const Relation& r);

// Entrywise coercion of an integer relation into the Q[q] ring.
Relation relation_to_poly(const Relation& r);

} // namespace operadlab
