#include "operadlab/refdata.hpp"
#include <sstream>

namespace operadlab {

Matrix matrix_from_table(Ring ring, const std::string& table) {
    std::vector<std::vector<Scalar>> rows;
    std::istringstream lines(table);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Scalar> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(parse_scalar(cell, ring));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty table");
    Matrix m(ring, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged table");
        m.set_row(i, rows[i]);
    }
    return m;
}

Matrix expected_twisted_dendriform() {
    return Matrix::from_int_rows({{1, 0, 0, 0, 1, 1, 0, 0},
                                  {0, 1, 0, 1, 0, 0, 0, 1},
                                  {0, 0, 1, 0, 0, 0, 1, 0}});
}

Matrix expected_dias_kernel_rows() {
    return Matrix::from_int_rows({{1, 0, 0, 0, -1, 0, 0, 0},
                                  {1, 0, 0, 0, 0, -1, 0, 0},
                                  {0, 1, 0, -1, 0, 0, 0, 0},
                                  {0, 1, 0, 0, 0, 0, 0, -1},
                                  {0, 0, 1, 0, 0, 0, -1, 0}});
}

Matrix expected_dias_pair_rows() {
    // the same relation chains read as equalities of adjacent members
    return Matrix::from_int_rows({{1, 0, 0, 0, -1, 0, 0, 0},
                                  {0, 0, 0, 0, 1, -1, 0, 0},
                                  {0, 1, 0, -1, 0, 0, 0, 0},
                                  {0, 0, 0, 1, 0, 0, 0, -1},
                                  {0, 0, 1, 0, 0, 0, -1, 0}});
}

Matrix expected_polar_closure() {
    return Matrix::from_int_rows({{1, 0, 1, 1, 0, 1, 1, 0, -1, 1, 0, -1},
                                  {0, 1, -1, 0, 1, 1, 0, 1, 1, 0, 1, -1},
                                  {-1, 1, 0, 1, 1, 0, -1, -1, 0, 1, -1, 0},
                                  {0, -1, 1, 0, 1, 1, 0, 1, 1, 0, -1, 1},
                                  {1, -1, 0, 1, 1, 0, -1, -1, 0, -1, 1, 0},
                                  {-1, 0, -1, 1, 0, 1, 1, 0, -1, -1, 0, 1}});
}

Matrix expected_saturation_rows() {
    return Matrix::from_int_rows({{-1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, -1, -1, 0, 1, 1, 0, 0, 0, 0},
                                  {0, 0, 0, -1, 0, 0, 0, 1, 1, 0, 0, 0},
                                  {0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0},
                                  {0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0},
                                  {0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1}});
}

Matrix expected_reduced_rows() {
    return Matrix::from_int_rows({{1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                                  {0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1},
                                  {0, 0, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0},
                                  {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                                  {0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0},
                                  {0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0}});
}

Matrix expected_deformation_hnf() {
    return matrix_from_table(Ring::POLY,
                             "q,0,0,0,0,0,0,0,0,0,1,-1\n"
                             "0,q,0,0,0,0,0,0,0,1,0,-1\n"
                             "0,0,q,0,0,0,0,0,0,1,-1,0\n"
                             "0,0,0,1,0,0,0,-1,-1,0,0,0\n"
                             "0,0,0,0,1,0,-1,0,1,0,0,0\n"
                             "0,0,0,0,0,1,1,1,0,0,0,0");
}

std::vector<Relation> expected_split_deform_vectors() {
    Matrix m = matrix_from_table(
        Ring::POLY,
        "1,-1,-1,1,1,-1,1,-1,-1,1,1,-1,1,-1,-1,1,1,-1,1,-1,-1,1,1,-1,"
        "-1,1,1,-1,-1,1,-1,1,1,-1,-1,1,-1,1,1,-1,-1,1,-1,1,1,-1,-1,1\n"
        "1,q,1,-1,-q,-1,1,q,1,-1,-q,-1,1,q,1,-1,-q,-1,1,q,1,-1,-q,-1,"
        "-1,-1,-q,q,1,1,-1,-1,-q,q,1,1,-1,-1,-q,q,1,1,-1,-1,-q,q,1,1\n"
        "1,-1,1,-1,1,1,1,-1,1,-1,1,1,1,-1,1,-1,1,1,1,-1,1,-1,1,1,"
        "-1,1,-1,1,-1,-1,-1,1,-1,1,-1,-1,-1,1,-1,1,-1,-1,-1,1,-1,1,-1,-1");
    return matrix_relations(SpaceTag::SO2, m);
}

std::array<Matrix, 3> expected_block_hnfs() {
    Matrix b1 = matrix_from_table(
        Ring::POLY,
        "1,0,0,0,0,1,-1,0,0,0,0,-1,-1,0,0,0,0,-1\n"
        "0,1,0,0,-1,1,0,-1,0,0,1,-1,0,-1,0,0,1,-1\n"
        "0,0,1,0,1,0,0,0,-1,0,-1,0,0,0,-1,0,-1,0\n"
        "0,0,0,1,1,-1,0,0,0,-1,-1,1,0,0,0,-1,-1,1\n"
        "0,0,0,0,q+3,0,q-1,-q+1,0,-q+1,-q-3,q-1,q-1,-q+1,0,-q+1,-q-3,q-1\n"
        "0,0,0,0,0,q+3,0,-q+1,q-1,-q+1,q-1,-q-3,0,-q+1,q-1,-q+1,q-1,-q-3");
    Matrix b2 = matrix_from_table(
        Ring::POLY,
        "1,0,0,0,0,1,1,0,0,0,0,1,-1,0,0,0,0,-1\n"
        "0,1,0,0,-1,1,0,1,0,0,-1,1,0,-1,0,0,1,-1\n"
        "0,0,1,0,1,0,0,0,1,0,1,0,0,0,-1,0,-1,0\n"
        "0,0,0,1,1,-1,0,0,0,1,1,-1,0,0,0,-1,-1,1\n"
        "0,0,0,0,q+3,0,0,0,0,0,q+3,0,q-1,-q+1,0,-q+1,-q-3,q-1\n"
        "0,0,0,0,0,q+3,0,0,0,0,0,q+3,0,-q+1,q-1,-q+1,q-1,-q-3");
    Matrix b3 = matrix_from_table(
        Ring::POLY,
        "1,0,0,0,0,1,-1,0,0,0,0,-1\n"
        "0,1,0,0,-1,1,0,-1,0,0,1,-1\n"
        "0,0,1,0,1,0,0,0,-1,0,-1,0\n"
        "0,0,0,1,1,-1,0,0,0,-1,-1,1\n"
        "0,0,0,0,q+3,0,q-1,-q+1,0,-q+1,-q-3,q-1\n"
        "0,0,0,0,0,q+3,0,-q+1,q-1,-q+1,q-1,-q-3");
    return {std::move(b1), std::move(b2), std::move(b3)};
}

std::vector<Relation> expected_dend_deform_generators() {
    Matrix m = matrix_from_table(
        Ring::POLY,
        "0,0,0,0,0,0,0,0,0,0,0,0,q+3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"
        "-q-3,q-1,-q+1,q-1,-q+1,0,0,0,0,0,0,0\n"
        "0,0,0,0,0,0,q+3,0,0,0,0,0,0,0,0,0,0,0,q+3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"
        "0,0,0,0,0,0,-q-3,q-1,-q+1,q-1,-q+1,0\n"
        "q+3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"
        "-q-3,q-1,-q+1,q-1,-q+1,0,-q-3,q-1,-q+1,q-1,-q+1,0,0,0,0,0,0,0,0,0,0,0,0,0");
    return matrix_relations(SpaceTag::SO2, m);
}

std::vector<Relation> expected_dias_deform_generators() {
    Matrix m = matrix_from_table(
        Ring::POLY,
        "0,0,0,0,0,0,0,0,0,0,0,0,q+3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"
        "-q-3,q-1,-q+1,q-1,-q+1,0,0,0,0,0,0,0\n"
        "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,q+3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"
        "0,0,0,0,0,0,-q-3,q-1,-q+1,q-1,-q+1,0\n"
        "q+3,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"
        "-q-3,q-1,-q+1,q-1,-q+1,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
        "0,0,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,-1,0,0,0,0,0,"
        "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0\n"
        "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,"
        "1,0,0,0,0,0,-1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0");
    return matrix_relations(SpaceTag::SO2, m);
}

} // namespace operadlab
