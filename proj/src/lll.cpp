#include "operadlab/lll.hpp"
#include "operadlab/hnf.hpp"
#include <algorithm>

namespace operadlab {

namespace {

struct Gram {
    // mu[i][j] for j < i, and squared norms of the Gram-Schmidt vectors
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> norm2;
};

Rational dot_zq(const std::vector<Int>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0) s += Rational(a[k]) * b[k];
    return s;
}

Gram gram_schmidt(const std::vector<std::vector<Int>>& b) {
    size_t n = b.size(), w = n ? b[0].size() : 0;
    Gram g;
    g.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    g.norm2.assign(n, Rational(0));
    std::vector<std::vector<Rational>> star(n, std::vector<Rational>(w, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < w; ++k) star[i][k] = Rational(b[i][k]);
        for (size_t j = 0; j < i; ++j) {
            g.mu[i][j] = dot_zq(b[i], star[j]) / g.norm2[j];
            for (size_t k = 0; k < w; ++k) star[i][k] -= g.mu[i][j] * star[j][k];
        }
        for (size_t k = 0; k < w; ++k) g.norm2[i] += star[i][k] * star[i][k];
        if (g.norm2[i] == 0)
            throw std::invalid_argument("input rows must be independent");
    }
    return g;
}

Int round_nearest(const Rational& x) {
    // floor(x + 1/2): deterministic half-up tie break
    Rational y = x + make_rational(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), y.get_num().get_mpz_t(), y.get_den().get_mpz_t());
    return q;
}

std::vector<std::vector<Int>> int_rows(const Matrix& m) {
    if (m.ring() != Ring::INT) throw std::invalid_argument("LLL needs a Z matrix");
    std::vector<std::vector<Int>> b(m.rows(), std::vector<Int>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) b[i][j] = m.at(i, j).as_int();
    return b;
}

Matrix rows_to_matrix(const std::vector<std::vector<Int>>& b, size_t cols) {
    Matrix m(Ring::INT, b.size(), cols);
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(b[i][j]);
    return m;
}

} // namespace

Matrix lll_reduce(const Matrix& basis, const Rational& delta) {
    if (delta <= make_rational(1, 4) || delta > 1)
        throw std::invalid_argument("delta must lie in (1/4, 1]");
    auto b = int_rows(basis);
    size_t n = b.size();
    if (n == 0) return basis;
    Gram g = gram_schmidt(b);
    size_t k = 1;
    while (k < n) {
        for (size_t j = k; j-- > 0;) {
            Rational mu = g.mu[k][j];
            if (mu > make_rational(1, 2) || mu < make_rational(-1, 2)) {
                Int q = round_nearest(mu);
                for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[j][t];
                g = gram_schmidt(b);
            }
        }
        Rational lhs = g.norm2[k];
        Rational rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm2[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            g = gram_schmidt(b);
            k = std::max<size_t>(k - 1, 1);
        }
    }
    return rows_to_matrix(b, basis.cols());
}

bool lattice_equal(const Matrix& a, const Matrix& b) {
    if (a.ring() != Ring::INT || b.ring() != Ring::INT)
        throw std::invalid_argument("lattice comparison is over Z");
    if (a.cols() != b.cols()) throw std::invalid_argument("column count mismatch");
    return hnf_with_transform(a).H.without_zero_rows() ==
           hnf_with_transform(b).H.without_zero_rows();
}

Matrix triangularize(const Matrix& basis, const Rational& delta) {
    Matrix red = lll_reduce(basis, delta);
    auto b = int_rows(red);
    for (auto& row : b) {
        for (const Int& x : row) {
            if (x == 0) continue;
            if (x < 0) for (Int& y : row) y = -y;
            break;
        }
    }
    std::stable_sort(b.begin(), b.end(), [](const auto& r1, const auto& r2) {
        auto lead = [](const auto& r) {
            for (size_t j = 0; j < r.size(); ++j) if (r[j] != 0) return j;
            return r.size();
        };
        return lead(r1) < lead(r2);
    });
    for (size_t i = 0; i < b.size(); ++i) {
        size_t lead = b[i].size();
        for (size_t j = 0; j < b[i].size(); ++j) if (b[i][j] != 0) { lead = j; break; }
        if (lead == b[i].size()) continue;
        for (size_t r = 0; r < i; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), b[r][lead].get_mpz_t(), b[i][lead].get_mpz_t());
            if (q == 0) continue;
            for (size_t j = 0; j < b[r].size(); ++j) b[r][j] -= q * b[i][j];
        }
    }
    return rows_to_matrix(b, basis.cols());
}

std::vector<Int> row_square_lengths(const Matrix& m) {
    std::vector<Int> out(m.rows(), Int(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            out[i] += m.at(i, j).as_int() * m.at(i, j).as_int();
    return out;
}

bool is_size_reduced(const Matrix& m) {
    Gram g = gram_schmidt(int_rows(m));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (g.mu[i][j] > make_rational(1, 2) || g.mu[i][j] < make_rational(-1, 2))
                return false;
    return true;
}

bool satisfies_lovasz(const Matrix& m, const Rational& delta) {
    Gram g = gram_schmidt(int_rows(m));
    for (size_t k = 1; k < m.rows(); ++k) {
        Rational rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.norm2[k - 1];
        if (g.norm2[k] < rhs) return false;
    }
    return true;
}

} // namespace operadlab
