#include "operadlab/morphisms.hpp"
#include <stdexcept>

namespace operadlab {

Relation split_expand(const Relation& r) {
    if (r.space == SpaceTag::SO1_PLAIN) {
        Relation out(SpaceTag::SO2, r.ring());
        for (std::size_t i = 0; i < 12; ++i) {
            if (r.coeffs[i].is_zero()) continue;
            std::size_t t = i / 6, p = i % 6;
            for (std::size_t tt = 4 * t; tt < 4 * t + 4; ++tt)
                out.coeffs[tt * 6 + p] = out.coeffs[tt * 6 + p] + r.coeffs[i];
        }
        return out;
    }
    if (r.space == SpaceTag::O1) {
        Relation out(SpaceTag::O2, r.ring());
        for (std::size_t i = 0; i < 2; ++i) {
            if (r.coeffs[i].is_zero()) continue;
            for (std::size_t tt = 4 * i; tt < 4 * i + 4; ++tt)
                out.coeffs[tt] = out.coeffs[tt] + r.coeffs[i];
        }
        return out;
    }
    throw std::invalid_argument("split_expand needs a one-operation source space");
}

Relation polarize(const Relation& r) {
    if (r.space != SpaceTag::O1 && r.space != SpaceTag::SO1_PLAIN)
        throw std::invalid_argument("polarize needs a one-operation source space");
    Relation out(SpaceTag::SO1_POLAR, r.ring());
    auto add_terms = [&](int type, int perm, const Scalar& c) {
        int x = PERM3_TABLE[perm][0], y = PERM3_TABLE[perm][1], z = PERM3_TABLE[perm][2];
        for (PolarOp inner : {PolarOp::LIE, PolarOp::JORDAN})
            for (PolarOp outer : {PolarOp::LIE, PolarOp::JORDAN}) {
                PolarTree t{type == 0, inner, outer, x, y, z};
                SignedMonomial sm = canonicalize_polar(t);
                std::size_t j = sm.monomial.flat_index();
                out.coeffs[j] = out.coeffs[j] + (sm.sign < 0 ? -c : c);
            }
    };
    if (r.space == SpaceTag::O1) {
        for (std::size_t i = 0; i < 2; ++i)
            if (!r.coeffs[i].is_zero()) add_terms(static_cast<int>(i), 0, r.coeffs[i]);
    } else {
        for (std::size_t i = 0; i < 12; ++i)
            if (!r.coeffs[i].is_zero())
                add_terms(static_cast<int>(i / 6), static_cast<int>(i % 6), r.coeffs[i]);
    }
    return out;
}

Relation expand_polarized(const Relation& r) {
    if (r.space != SpaceTag::SO1_POLAR)
        throw std::invalid_argument("expand_polarized needs the polarized space");
    constexpr int PAIRS[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    Relation out(SpaceTag::SO1_PLAIN, r.ring());
    auto add = [&](std::size_t type, int a0, int a1, int a2, const Scalar& c) {
        std::size_t j = type * 6 + static_cast<std::size_t>(perm3_index(a0, a1, a2));
        out.coeffs[j] = out.coeffs[j] + c;
    };
    for (std::size_t i = 0; i < 12; ++i) {
        const Scalar& c = r.coeffs[i];
        if (c.is_zero()) continue;
        std::size_t g = i / 3, p = i % 3;
        int x = PAIRS[p][0], y = PAIRS[p][1], z = PAIRS[p][2];
        bool inner_lie = (g == 0 || g == 2);
        bool outer_lie = (g == 0 || g == 1);
        // (x . y) . z with . expanded: inner gives xy -+ yx, outer appends/prepends z
        add(0, x, y, z, c);
        add(0, y, x, z, inner_lie ? -c : c);
        add(1, z, x, y, outer_lie ? -c : c);
        add(1, z, y, x, inner_lie == outer_lie ? c : -c);
    }
    return out;
}

namespace {

constexpr int BLOCK_TYPES[3][3] = {{0, 4, 5}, {1, 3, 7}, {2, 6, -1}};
constexpr std::size_t BLOCK_WIDTH[3] = {18, 18, 12};

ColumnPermutation build_xi() {
    ColumnPermutation xi{};
    std::size_t pos = 0;
    for (const auto& group : BLOCK_TYPES)
        for (int t : group) {
            if (t < 0) continue;
            for (std::size_t p = 0; p < 6; ++p, ++pos) {
                xi.from_grouped[pos] = static_cast<std::size_t>(t) * 6 + p;
                xi.to_grouped[static_cast<std::size_t>(t) * 6 + p] = pos;
            }
        }
    return xi;
}

} // namespace

const ColumnPermutation& dendriform_xi() {
    static const ColumnPermutation xi = build_xi();
    return xi;
}

Matrix group_columns(const Matrix& m) {
    if (m.cols() != 48) throw std::invalid_argument("expected 48 columns");
    const ColumnPermutation& xi = dendriform_xi();
    Matrix out(m.ring(), m.rows(), 48);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < 48; ++j) out.at(i, j) = m.at(i, xi.from_grouped[j]);
    return out;
}

Matrix ungroup_columns(const Matrix& m) {
    if (m.cols() != 48) throw std::invalid_argument("expected 48 columns");
    const ColumnPermutation& xi = dendriform_xi();
    Matrix out(m.ring(), m.rows(), 48);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < 48; ++j) out.at(i, xi.from_grouped[j]) = m.at(i, j);
    return out;
}

DendriformBlocks dendriform_partition(const Matrix& m) {
    Matrix grouped = group_columns(m);
    std::size_t off = 0;
    DendriformBlocks out{{Matrix(m.ring(), 0, 0), Matrix(m.ring(), 0, 0), Matrix(m.ring(), 0, 0)},
                         &dendriform_xi()};
    for (std::size_t b = 0; b < 3; ++b) {
        Matrix blk(m.ring(), m.rows(), BLOCK_WIDTH[b]);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < BLOCK_WIDTH[b]; ++j) blk.at(i, j) = grouped.at(i, off + j);
        out.blocks[b] = std::move(blk);
        off += BLOCK_WIDTH[b];
    }
    return out;
}

Matrix koszul_sign_twist(const Matrix& m) {
    Matrix out = m;
    if (m.cols() == 8) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 4; j < 8; ++j) out.at(i, j) = -out.at(i, j);
        return out;
    }
    if (m.cols() == 48) {
        for (std::size_t j = 0; j < 48; ++j) {
            int t = static_cast<int>(j / 6), p = static_cast<int>(j % 6);
            int s = perm3_sign(p) * (t >= 4 ? -1 : 1);
            if (s == 1) continue;
            for (std::size_t i = 0; i < m.rows(); ++i) out.at(i, j) = -out.at(i, j);
        }
        return out;
    }
    throw std::invalid_argument("sign twist needs width 8 or 48");
}

} // namespace operadlab
