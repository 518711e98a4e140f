#include "operadlab/hnf.hpp"

namespace operadlab {

namespace {

void add_multiple(Matrix& m, size_t dst, size_t src, const Scalar& c) {
    for (size_t j = 0; j < m.cols(); ++j)
        m.at(dst, j) = m.at(dst, j) - c * m.at(src, j);
}

void scale_row(Matrix& m, size_t i, const Scalar& u) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = u * m.at(i, j);
}

// replaces rows (p, r) by ([s t; -b/g a/g] * rows), a = A[p][c], b = A[r][c];
// the 2x2 block has determinant +1, so det U is unchanged
void combine(Matrix& a, Matrix& u, size_t p, size_t r, size_t c) {
    ScalarXgcd x = scalar_xgcd(a.at(p, c), a.at(r, c));
    Scalar ag = a.at(p, c).divexact(x.g);
    Scalar bg = a.at(r, c).divexact(x.g);
    for (Matrix* m : {&a, &u}) {
        for (size_t j = 0; j < m->cols(); ++j) {
            Scalar top = x.s * m->at(p, j) + x.t * m->at(r, j);
            Scalar bot = ag * m->at(r, j) - bg * m->at(p, j);
            m->at(p, j) = std::move(top);
            m->at(r, j) = std::move(bot);
        }
    }
}

} // namespace

HnfResult hnf_with_transform(const Matrix& m0) {
    if (m0.rows() == 0 || m0.cols() == 0)
        throw std::invalid_argument("empty matrix");
    Matrix a = m0;
    Matrix u = Matrix::identity(a.ring(), a.rows());
    Scalar det = Scalar::one(a.ring());
    size_t pr = 0;
    for (size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
        size_t piv = pr;
        while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != pr) {
            a.swap_rows(pr, piv);
            u.swap_rows(pr, piv);
            det = -det;
        }
        for (size_t r = pr + 1; r < a.rows(); ++r)
            if (!a.at(r, c).is_zero()) combine(a, u, pr, r, c);
        if (!(a.ring() == Ring::INT ? sgn(a.at(pr, c).as_int()) > 0
                                    : a.at(pr, c).as_poly().is_monic())) {
            Scalar unit = a.at(pr, c).normalizing_unit();
            scale_row(a, pr, unit);
            scale_row(u, pr, unit);
            det = det * unit;
        }
        for (size_t r = 0; r < pr; ++r) {
            if (a.at(r, c).is_zero()) continue;
            Scalar q = a.at(r, c).divrem(a.at(pr, c)).first;
            if (q.is_zero()) continue;
            add_multiple(a, r, pr, q);
            add_multiple(u, r, pr, q);
        }
        ++pr;
    }
    return {std::move(a), std::move(u), pr, std::move(det)};
}

size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return hnf_with_transform(m).rank;
}

Matrix nullspace_basis(const Matrix& m) {
    HnfResult h = hnf_with_transform(m.transposed());
    return h.U.row_slice(h.rank, h.U.rows());
}

Matrix rowspace_saturation_basis(const Matrix& m) {
    if (m.ring() != Ring::INT)
        throw std::invalid_argument("saturation defined over Z only");
    Matrix kernel = nullspace_basis(m);
    // full row space: the saturation is the whole ambient lattice
    if (kernel.rows() == 0) return Matrix::identity(Ring::INT, m.cols());
    return nullspace_basis(kernel);
}

std::vector<Scalar> membership_reduce(const Matrix& h, const std::vector<Scalar>& v0) {
    if (v0.size() != h.cols()) throw std::invalid_argument("width mismatch");
    if (!v0.empty() && v0[0].ring() != h.ring())
        throw std::invalid_argument("ring mismatch");
    std::vector<size_t> pivot_row(h.cols(), h.rows());
    for (size_t i = 0; i < h.rows(); ++i) {
        size_t lead = h.leading_col(i);
        if (lead < h.cols()) pivot_row[lead] = i;
    }
    std::vector<Scalar> v = v0;
    while (true) {
        size_t lead = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) { lead = j; break; }
        if (lead == v.size() || pivot_row[lead] == h.rows()) return v;
        size_t i = pivot_row[lead];
        auto [q, r] = v[lead].divrem(h.at(i, lead));
        if (!r.is_zero()) return v;
        for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - q * h.at(i, j);
    }
}

bool is_module_member(const Matrix& h, const std::vector<Scalar>& v) {
    for (const Scalar& s : membership_reduce(h, v))
        if (!s.is_zero()) return false;
    return true;
}

Matrix specialize_matrix(const Matrix& m, const Rational& q0) {
    if (m.ring() != Ring::POLY)
        throw std::invalid_argument("specialization needs a Q[q] matrix");
    Matrix out(Ring::POLY, m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = Scalar(PolyQ(m.at(i, j).as_poly().eval(q0)));
    return out;
}

bool is_hnf(const Matrix& m) {
    size_t prev = 0;
    bool seen_zero = false;
    bool first = true;
    for (size_t i = 0; i < m.rows(); ++i) {
        size_t lead = m.leading_col(i);
        if (lead == m.cols()) { seen_zero = true; continue; }
        if (seen_zero) return false;
        if (!first && lead <= prev) return false;
        const Scalar& p = m.at(i, lead);
        if (m.ring() == Ring::INT ? sgn(p.as_int()) <= 0 : !p.as_poly().is_monic())
            return false;
        for (size_t r = 0; r < i; ++r) {
            const Scalar& e = m.at(r, lead);
            if (e.is_zero()) continue;
            if (m.ring() == Ring::INT) {
                if (sgn(e.as_int()) < 0 || e.as_int() >= p.as_int()) return false;
            } else {
                if (e.as_poly().degree() >= p.as_poly().degree()) return false;
            }
        }
        prev = lead;
        first = false;
    }
    return true;
}

} // namespace operadlab
