#include "operadlab/s3module.hpp"
#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace operadlab {

Relation act_relation(int sigma, const Relation& r) {
    Relation out(r.space, r.ring());
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (r.coeffs[i].is_zero()) continue;
        SignedMonomial sm = perm_act(sigma, Monomial::from_flat(r.space, i));
        std::size_t j = sm.monomial.flat_index();
        out.coeffs[j] = out.coeffs[j] + (sm.sign < 0 ? -r.coeffs[i] : r.coeffs[i]);
    }
    return out;
}

Matrix s3_closure(const std::vector<Relation>& gens) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    Matrix m(gens.front().ring(), 6 * gens.size(), space_dim(gens.front().space));
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].space != gens.front().space) throw std::invalid_argument("mixed spaces");
        for (int s = 0; s < 6; ++s) m.set_row(6 * g + s, act_relation(s, gens[g]).coeffs);
    }
    return m;
}

S3ModuleResult s3_module_hnf(const std::vector<Relation>& gens) {
    Matrix closure = s3_closure(gens);
    return {closure, hnf_with_transform(closure)};
}

Matrix s3_module_basis(const std::vector<Relation>& gens) {
    return s3_module_hnf(gens).hnf.H.without_zero_rows();
}

bool module_equal(const std::vector<Relation>& a, const std::vector<Relation>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("no generators");
    if (a.front().space != b.front().space) throw std::invalid_argument("space mismatch");
    return s3_module_basis(a) == s3_module_basis(b);
}

int scalar_order(const Scalar& a, const Scalar& b) {
    if (a.ring() == Ring::INT) return cmp(a.as_int(), b.as_int());
    int na = a.as_poly().degree() + 1, nb = b.as_poly().degree() + 1;
    if (na != nb) return na < nb ? -1 : 1;
    for (int d = 0; d < na; ++d) {
        int c = cmp(a.as_poly().coeff(static_cast<size_t>(d)),
                    b.as_poly().coeff(static_cast<size_t>(d)));
        if (c != 0) return c;
    }
    return 0;
}

namespace {

bool row_contains_q(const Matrix& m, std::size_t i) {
    if (m.ring() != Ring::POLY) return false;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j).as_poly().degree() >= 1) return true;
    return false;
}

std::size_t nonzero_count(const Matrix& m, std::size_t i) {
    std::size_t n = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) ++n;
    return n;
}

} // namespace

Matrix sort_rows_extraction_order(const Matrix& m) {
    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int qa = row_contains_q(m, a) ? 0 : 1, qb = row_contains_q(m, b) ? 0 : 1;
        if (qa != qb) return qa < qb;
        std::size_t na = nonzero_count(m, a), nb = nonzero_count(m, b);
        if (na != nb) return na < nb;
        std::size_t la = m.leading_col(a), lb = m.leading_col(b);
        if (la != lb) return la < lb;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            int c = scalar_order(m.at(a, j), m.at(b, j));
            if (c != 0) return c < 0;
        }
        return false;
    });
    Matrix out(m.ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < order.size(); ++i) out.set_row(i, m.row(order[i]));
    return out;
}

namespace {

bool in_module(const std::vector<Relation>& gens, const Relation& r, Membership mode) {
    Matrix basis = s3_module_basis(gens);
    if (mode == Membership::RING)
        return is_module_member(basis, r.coeffs);
    Matrix stacked = basis.vstack(relations_matrix({r}));
    return rank(stacked) == basis.rows();
}

} // namespace

ExtractionResult extract_generators(const std::vector<Relation>& rows, bool minimize,
                                    Membership mode) {
    ExtractionResult res;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].is_zero()) continue;
        if (!res.generators.empty() && in_module(res.generators, rows[i], mode)) continue;
        res.generators.push_back(rows[i]);
        res.kept_indices.push_back(i);
    }
    if (minimize) {
        std::size_t i = 0;
        while (i < res.generators.size()) {
            std::vector<Relation> trial = res.generators;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            if (!trial.empty() && module_equal(trial, res.generators)) {
                res.generators.erase(res.generators.begin() + static_cast<std::ptrdiff_t>(i));
                res.kept_indices.erase(res.kept_indices.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
    }
    return res;
}

} // namespace operadlab
