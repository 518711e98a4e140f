#pragma once
#include "operadlab/matrix.hpp"
#include "operadlab/spaces.hpp"
#include <json.hpp>
#include <vector>

namespace operadlab {

// A relation is a vector of coefficients over a fixed monomial basis.
struct Relation {
    SpaceTag space;
    std::vector<Scalar> coeffs;

    Relation(SpaceTag s, std::vector<Scalar> c);
    Relation(SpaceTag s, Ring ring);  // zero relation

    Ring ring() const;
    bool is_zero() const;
    bool operator==(const Relation& o) const;

    static Relation from_row(SpaceTag s, const Matrix& m, std::size_t row);
    static Relation from_ints(SpaceTag s, const std::vector<long>& v);

    nlohmann::ordered_json to_json() const;
    static Relation from_json(const nlohmann::ordered_json& j);
};

// Stacks relations (all in the same space/ring) into a matrix.
Matrix relations_matrix(const std::vector<Relation>& rels);
std::vector<Relation> matrix_relations(SpaceTag space, const Matrix& m);

// Deterministic signed sum of monomial strings; zero renders as "0".
// Unit coefficients print bare; composite coefficients are parenthesized.
std::string render_relation(const Relation& r, bool unicode = false);

} // namespace operadlab
