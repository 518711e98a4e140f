#include "operadlab/matrix.hpp"
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace operadlab {

using ordered_json = nlohmann::ordered_json;

Matrix Matrix::identity(Ring ring, size_t n) {
    Matrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(ring);
    return m;
}

Matrix Matrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(Ring::INT, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(Int(rows[i][j]));
    }
    return m;
}

std::vector<Scalar> Matrix::row(size_t i) const {
    return {e_.begin() + static_cast<long>(i * cols_),
            e_.begin() + static_cast<long>((i + 1) * cols_)};
}

void Matrix::set_row(size_t i, const std::vector<Scalar>& r) {
    if (r.size() != cols_) throw std::invalid_argument("row width mismatch");
    std::copy(r.begin(), r.end(), e_.begin() + static_cast<long>(i * cols_));
}

void Matrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

bool Matrix::row_is_zero(size_t i) const {
    for (size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) return false;
    return true;
}

size_t Matrix::leading_col(size_t i) const {
    for (size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) return j;
    return cols_;
}

Matrix Matrix::transposed() const {
    Matrix t(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::without_zero_rows() const {
    std::vector<size_t> keep;
    for (size_t i = 0; i < rows_; ++i)
        if (!row_is_zero(i)) keep.push_back(i);
    Matrix m(ring_, keep.size(), cols_);
    for (size_t i = 0; i < keep.size(); ++i) m.set_row(i, row(keep[i]));
    return m;
}

Matrix Matrix::row_slice(size_t from, size_t to) const {
    Matrix m(ring_, to - from, cols_);
    for (size_t i = from; i < to; ++i) m.set_row(i - from, row(i));
    return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (below.cols_ != cols_ || below.ring_ != ring_)
        throw std::invalid_argument("vstack shape/ring mismatch");
    Matrix m(ring_, rows_ + below.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i) m.set_row(i, row(i));
    for (size_t i = 0; i < below.rows_; ++i) m.set_row(rows_ + i, below.row(i));
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::to_poly_ring() const {
    if (ring_ == Ring::POLY) return *this;
    Matrix m(Ring::POLY, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = to_poly(at(i, j));
    return m;
}

Matrix Matrix::to_int_ring() const {
    if (ring_ == Ring::INT) return *this;
    Matrix m(Ring::INT, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const PolyQ& p = at(i, j).as_poly();
            if (!p.is_constant() || (!p.is_zero() && !is_integer(p.coeff(0))))
                throw std::domain_error("matrix entry is not an integer constant");
            m.at(i, j) = Scalar(Int(p.is_zero() ? Int(0) : p.coeff(0).get_num()));
        }
    return m;
}

Matrix Matrix::multiplied(const Matrix& rhs) const {
    if (cols_ != rhs.rows_ || ring_ != rhs.ring_)
        throw std::invalid_argument("matrix product shape/ring mismatch");
    Matrix m(ring_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                m.at(i, j) = m.at(i, j) + a * rhs.at(k, j);
            }
        }
    return m;
}

std::string Matrix::to_json() const {
    ordered_json j;
    j["ring"] = ring_name(ring_);
    j["rows"] = rows_;
    j["cols"] = cols_;
    ordered_json entries = ordered_json::array();
    for (size_t i = 0; i < rows_; ++i) {
        ordered_json r = ordered_json::array();
        for (size_t k = 0; k < cols_; ++k) r.push_back(scalar_to_string(at(i, k)));
        entries.push_back(std::move(r));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

Matrix Matrix::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    std::string rname = j.at("ring").get<std::string>();
    Ring ring;
    if (rname == "Z") ring = Ring::INT;
    else if (rname == "Q[q]") ring = Ring::POLY;
    else throw std::invalid_argument("unknown ring: " + rname);
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("row count mismatch");
    Matrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw std::invalid_argument("column count mismatch");
        for (size_t k = 0; k < cols; ++k)
            m.at(i, k) = parse_scalar(entries[i][k].get<std::string>(), ring);
    }
    return m;
}

std::string Matrix::to_csv() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out << ',';
            out << scalar_to_string(at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string Matrix::to_text() const {
    std::vector<std::string> cells(rows_ * cols_);
    std::vector<size_t> width(cols_, 0);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            cells[i * cols_ + j] = scalar_to_string(at(i, j));
            width[j] = std::max(width[j], cells[i * cols_ + j].size());
        }
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        out << "[ ";
        for (size_t j = 0; j < cols_; ++j) {
            const std::string& c = cells[i * cols_ + j];
            out << std::string(width[j] - c.size(), ' ') << c << (j + 1 < cols_ ? "  " : "");
        }
        out << " ]\n";
    }
    return out.str();
}

} // namespace operadlab
