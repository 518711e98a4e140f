#pragma once
#include "operadlab/scalar.hpp"
#include <vector>
#include <string>

namespace operadlab {

// Dense rectangular matrix over one of the two rings; row-major entries.
class Matrix {
public:
    Matrix() : ring_(Ring::INT), rows_(0), cols_(0) {}
    Matrix(Ring ring, size_t rows, size_t cols)
        : ring_(ring), rows_(rows), cols_(cols),
          e_(rows * cols, Scalar::zero(ring)) {}

    static Matrix identity(Ring ring, size_t n);
    static Matrix from_int_rows(const std::vector<std::vector<long>>& rows);

    Ring ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Scalar> row(size_t i) const;
    void set_row(size_t i, const std::vector<Scalar>& r);
    void swap_rows(size_t i, size_t j);

    bool row_is_zero(size_t i) const;
    size_t leading_col(size_t i) const;  // cols() if the row is zero
    Matrix transposed() const;
    Matrix without_zero_rows() const;
    // rows [from, to)
    Matrix row_slice(size_t from, size_t to) const;
    Matrix vstack(const Matrix& below) const;

    bool operator==(const Matrix& o) const;

    Matrix to_poly_ring() const;  // explicit Z -> Q[q] coercion, entrywise
    // defined only when every entry is a constant integer polynomial
    Matrix to_int_ring() const;

    Matrix multiplied(const Matrix& rhs) const;

    std::string to_json() const;
    static Matrix from_json(const std::string& text);
    std::string to_csv() const;
    std::string to_text() const;  // aligned columns, for terminal output

private:
    Ring ring_;
    size_t rows_, cols_;
    std::vector<Scalar> e_;
};

} // namespace operadlab
