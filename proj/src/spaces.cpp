#include "operadlab/spaces.hpp"
#include <stdexcept>

namespace operadlab {

std::size_t space_dim(SpaceTag s) {
    switch (s) {
        case SpaceTag::O1: return 2;
        case SpaceTag::O2: return 8;
        case SpaceTag::SO1_PLAIN: return 12;
        case SpaceTag::SO1_POLAR: return 12;
        case SpaceTag::SO2: return 48;
    }
    throw std::logic_error("bad space tag");
}

bool space_is_symmetric(SpaceTag s) {
    return s == SpaceTag::SO1_PLAIN || s == SpaceTag::SO1_POLAR || s == SpaceTag::SO2;
}

std::string space_name(SpaceTag s) {
    switch (s) {
        case SpaceTag::O1: return "O1";
        case SpaceTag::O2: return "O2";
        case SpaceTag::SO1_PLAIN: return "SO1";
        case SpaceTag::SO1_POLAR: return "SO1_POLAR";
        case SpaceTag::SO2: return "SO2";
    }
    throw std::logic_error("bad space tag");
}

SpaceTag space_from_name(const std::string& name) {
    if (name == "O1") return SpaceTag::O1;
    if (name == "O2") return SpaceTag::O2;
    if (name == "SO1") return SpaceTag::SO1_PLAIN;
    if (name == "SO1_POLAR") return SpaceTag::SO1_POLAR;
    if (name == "SO2") return SpaceTag::SO2;
    throw std::invalid_argument("unknown space: '" + name + "'");
}

namespace {

int per_type(SpaceTag s) {
    if (s == SpaceTag::SO1_POLAR) return 3;
    return space_is_symmetric(s) ? 6 : 1;
}

int type_count(SpaceTag s) {
    switch (s) {
        case SpaceTag::O1: return 2;
        case SpaceTag::O2: return 8;
        case SpaceTag::SO1_PLAIN: return 2;
        case SpaceTag::SO1_POLAR: return 4;
        case SpaceTag::SO2: return 8;
    }
    throw std::logic_error("bad space tag");
}

// SO1_POLAR pair index -> (inner pair, outer argument)
constexpr int POLAR_PAIRS[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};

int polar_pair_index(int x, int y) {
    for (int p = 0; p < 3; ++p)
        if (POLAR_PAIRS[p][0] == x && POLAR_PAIRS[p][1] == y) return p;
    throw std::logic_error("bad argument pair");
}

// group g in 0..3: (inner, outer) = (L,L), (J,L), (L,J), (J,J)
bool polar_inner_is_lie(int g) { return g == 0 || g == 2; }
bool polar_outer_is_lie(int g) { return g == 0 || g == 1; }

} // namespace

std::size_t Monomial::flat_index() const {
    return static_cast<std::size_t>(type) * static_cast<std::size_t>(per_type(space)) +
           static_cast<std::size_t>(perm);
}

Monomial Monomial::from_flat(SpaceTag space, std::size_t index) {
    if (index >= space_dim(space)) throw std::out_of_range("monomial index out of range");
    int k = per_type(space);
    return Monomial{space, static_cast<int>(index) / k, static_cast<int>(index) % k};
}

SignedMonomial perm_act(int sigma, const Monomial& m) {
    check_perm3(sigma);
    if (!space_is_symmetric(m.space))
        throw std::invalid_argument("no S3 action on nonsymmetric basis");
    if (m.type < 0 || m.type >= type_count(m.space) || m.perm < 0 || m.perm >= per_type(m.space))
        throw std::out_of_range("monomial indices out of range");
    if (m.space != SpaceTag::SO1_POLAR)
        return {Monomial{m.space, m.type, perm3_compose(sigma, m.perm)}, 1};
    int x = PERM3_TABLE[sigma][POLAR_PAIRS[m.perm][0]];
    int y = PERM3_TABLE[sigma][POLAR_PAIRS[m.perm][1]];
    int sign = 1;
    if (x > y) {
        std::swap(x, y);
        if (polar_inner_is_lie(m.type)) sign = -sign;
    }
    return {Monomial{m.space, m.type, polar_pair_index(x, y)}, sign};
}

SignedMonomial canonicalize_polar(const PolarTree& tree) {
    bool seen[3] = {false, false, false};
    for (int v : {tree.x, tree.y, tree.z}) {
        if (v < 0 || v > 2 || seen[v]) throw std::invalid_argument("malformed polarized tree");
        seen[v] = true;
    }
    int sign = 1;
    int x = tree.x, y = tree.y, z = tree.z;
    if (!tree.inner_left) {
        // x outer (y inner z) -> (y inner z) outer x
        if (tree.outer == PolarOp::LIE) sign = -sign;
        int nx = y, ny = z, nz = x;
        x = nx; y = ny; z = nz;
    }
    if (x > y) {
        std::swap(x, y);
        if (tree.inner == PolarOp::LIE) sign = -sign;
    }
    int g = (tree.inner == PolarOp::LIE ? 0 : 1) + (tree.outer == PolarOp::LIE ? 0 : 2);
    (void)z;
    return {Monomial{SpaceTag::SO1_POLAR, g, polar_pair_index(x, y)}, sign};
}

namespace {

std::string arg_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

std::string op2_text(int op, bool unicode) {
    if (unicode) return op == 0 ? "≺" : "≻";
    return op == 0 ? "<" : ">";
}

// O2/SO2 association types, type-major: t = 4*(bracketing) +- operator pair.
// Types 0..3: (x op1 y) op2 z with (op1,op2) = <<, <>, ><, >>.
// Types 4..7: x op1 (y op2 z) likewise.
std::string two_op_text(int type, const std::string& x, const std::string& y,
                        const std::string& z, bool unicode) {
    int inner_first = type < 4;
    int t = type % 4;
    std::string op1 = op2_text(t / 2, unicode);
    std::string op2 = op2_text(t % 2, unicode);
    if (inner_first) return "((" + x + op1 + y + ")" + op2 + z + ")";
    return "(" + x + op1 + "(" + y + op2 + z + "))";
}

} // namespace

std::string monomial_text(const Monomial& m, bool unicode) {
    switch (m.space) {
        case SpaceTag::O1:
            return m.type == 0 ? "((ab)c)" : "(a(bc))";
        case SpaceTag::O2:
            return two_op_text(m.type, "a", "b", "c", unicode);
        case SpaceTag::SO1_PLAIN: {
            std::string x = arg_name(PERM3_TABLE[m.perm][0]);
            std::string y = arg_name(PERM3_TABLE[m.perm][1]);
            std::string z = arg_name(PERM3_TABLE[m.perm][2]);
            return m.type == 0 ? "((" + x + y + ")" + z + ")" : "(" + x + "(" + y + z + "))";
        }
        case SpaceTag::SO1_POLAR: {
            std::string x = arg_name(POLAR_PAIRS[m.perm][0]);
            std::string y = arg_name(POLAR_PAIRS[m.perm][1]);
            std::string z = arg_name(POLAR_PAIRS[m.perm][2]);
            std::string circ = unicode ? " ∘ " : " o ";
            std::string inner = polar_inner_is_lie(m.type) ? "[" + x + "," + y + "]"
                                                           : x + circ + y;
            if (polar_outer_is_lie(m.type)) return "[" + inner + "," + z + "]";
            if (polar_inner_is_lie(m.type)) return inner + circ + z;
            return "(" + inner + ")" + circ + z;
        }
        case SpaceTag::SO2: {
            std::string x = arg_name(PERM3_TABLE[m.perm][0]);
            std::string y = arg_name(PERM3_TABLE[m.perm][1]);
            std::string z = arg_name(PERM3_TABLE[m.perm][2]);
            return two_op_text(m.type, x, y, z, unicode);
        }
    }
    throw std::logic_error("bad space tag");
}

} // namespace operadlab
