#pragma once
#include "operadlab/perm3.hpp"
#include <cstddef>
#include <string>

namespace operadlab {

// The five arity-3 monomial bases in play.
//   O1        dim 2:  one operation, nonsymmetric: (ab)c, a(bc)
//   O2        dim 8:  two operations <, >, nonsymmetric, type-major
//   SO1_PLAIN dim 12: symmetrized O1, 2 types x 6 permutations, type-major
//   SO1_POLAR dim 12: polarized basis, 4 groups x 3 argument pairs
//   SO2       dim 48: symmetrized O2, 8 types x 6 permutations, type-major
enum class SpaceTag { O1, O2, SO1_PLAIN, SO1_POLAR, SO2 };

std::size_t space_dim(SpaceTag s);
bool space_is_symmetric(SpaceTag s);
std::string space_name(SpaceTag s);
SpaceTag space_from_name(const std::string& name);

struct Monomial {
    SpaceTag space;
    int type;  // association type (or polarized group)
    int perm;  // permutation index (or polarized pair index); 0 for O1/O2
    std::size_t flat_index() const;
    static Monomial from_flat(SpaceTag space, std::size_t index);
};

struct SignedMonomial {
    Monomial monomial;
    int sign;  // +1 or -1
};

// Relabels the arguments of m by sigma and renormalizes to the canonical basis.
// SO2/SO1_PLAIN: same type, composed permutation, sign +1.  SO1_POLAR: the inner
// argument pair is sorted, with a sign flip when the inner operation is the Lie
// bracket and a swap occurred.  Nonsymmetric spaces have no action.
SignedMonomial perm_act(int sigma, const Monomial& m);

enum class PolarOp { LIE, JORDAN };

// An arity-3 polarized monomial before canonicalization: either
// (x inner y) outer z  or  x outer (y inner z), with arguments a=0,b=1,c=2.
struct PolarTree {
    bool inner_left;   // true: (x.y).z, false: x.(y.z)
    PolarOp inner;
    PolarOp outer;
    int x, y, z;       // argument labels in written order
};

// Rewrites the tree into the canonical SO1_POLAR basis: right-hanging trees are
// flipped (sign -1 when the outer operation is the Lie bracket), then the inner
// pair is sorted (sign -1 when the inner operation is the Lie bracket and a
// swap occurred).
SignedMonomial canonicalize_polar(const PolarTree& tree);

// Text form of a basis monomial, e.g. "(a<b)>c", "[[a,b],c]", "(a o b) o c".
// Unicode mode renders the two operations as U+227A / U+227B and the Jordan
// product as U+2218.
std::string monomial_text(const Monomial& m, bool unicode = false);

} // namespace operadlab
