#include "operadlab/operads.hpp"
#include "operadlab/refdata.hpp"

namespace operadlab {

Matrix dendriform_relations() {
    return Matrix::from_int_rows({{1, 0, 0, 0, -1, -1, 0, 0},
                                  {0, 1, 0, 1, 0, 0, 0, -1},
                                  {0, 0, 1, 0, 0, 0, -1, 0}});
}

Matrix diassociative_relations() {
    return Matrix::from_int_rows({{1, 0, 0, 0, -1, 0, 0, 0},
                                  {1, 0, 0, 0, 0, -1, 0, 0},
                                  {0, 1, 0, -1, 0, 0, 0, 0},
                                  {0, 1, 0, 0, 0, 0, 0, -1},
                                  {0, 0, 1, 0, 0, 0, -1, 0}});
}

Relation associator_so1() {
    return Relation::from_ints(SpaceTag::SO1_PLAIN, {1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0});
}

std::vector<Relation> deformed_polar_relations() {
    Matrix m = matrix_from_table(Ring::POLY,
                                 "1,-1,1,0,0,0,0,0,0,0,0,0\n"
                                 "0,q,0,0,0,0,0,0,0,1,0,-1\n"
                                 "0,0,0,1,0,0,0,-1,-1,0,0,0");
    return matrix_relations(SpaceTag::SO1_POLAR, m);
}

std::vector<Relation> poisson_polar_relations() {
    Matrix m = Matrix::from_int_rows({{1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1},
                                      {0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0}});
    return matrix_relations(SpaceTag::SO1_POLAR, m);
}

Relation include_o2_in_so2(const Relation& r) {
    if (r.space != SpaceTag::O2) throw std::invalid_argument("expected an O2 relation");
    Relation out(SpaceTag::SO2, r.ring());
    for (std::size_t t = 0; t < 8; ++t) out.coeffs[t * 6] = r.coeffs[t];
    return out;
}

Relation relation_to_poly(const Relation& r) {
    std::vector<Scalar> c;
    c.reserve(r.coeffs.size());
    for (const Scalar& x : r.coeffs) c.push_back(to_poly(x));
    return Relation(r.space, std::move(c));
}

} // namespace operadlab
