#include "operadlab/relation.hpp"
#include <stdexcept>

namespace operadlab {

Relation::Relation(SpaceTag s, std::vector<Scalar> c) : space(s), coeffs(std::move(c)) {
    if (coeffs.size() != space_dim(space))
        throw std::invalid_argument("coefficient count does not match space dimension");
    for (const Scalar& x : coeffs)
        if (x.ring() != coeffs.front().ring()) throw std::invalid_argument("ring mismatch");
}

Relation::Relation(SpaceTag s, Ring ring)
    : space(s), coeffs(space_dim(s), Scalar::zero(ring)) {}

Ring Relation::ring() const { return coeffs.front().ring(); }

bool Relation::is_zero() const {
    for (const Scalar& x : coeffs)
        if (!x.is_zero()) return false;
    return true;
}

bool Relation::operator==(const Relation& o) const {
    return space == o.space && coeffs == o.coeffs;
}

Relation Relation::from_row(SpaceTag s, const Matrix& m, std::size_t row) {
    return Relation(s, m.row(row));
}

Relation Relation::from_ints(SpaceTag s, const std::vector<long>& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (long x : v) c.push_back(Scalar(Int(x)));
    return Relation(s, std::move(c));
}

nlohmann::ordered_json Relation::to_json() const {
    nlohmann::ordered_json j;
    j["space"] = space_name(space);
    j["ring"] = ring_name(ring());
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const Scalar& x : coeffs) cs.push_back(scalar_to_string(x));
    j["coeffs"] = std::move(cs);
    j["text"] = render_relation(*this);
    return j;
}

Relation Relation::from_json(const nlohmann::ordered_json& j) {
    SpaceTag s = space_from_name(j.at("space").get<std::string>());
    Ring ring = j.at("ring").get<std::string>() == "Z" ? Ring::INT : Ring::POLY;
    std::vector<Scalar> c;
    for (const auto& e : j.at("coeffs"))
        c.push_back(parse_scalar(e.get<std::string>(), ring));
    return Relation(s, std::move(c));
}

Matrix relations_matrix(const std::vector<Relation>& rels) {
    if (rels.empty()) throw std::invalid_argument("no relations");
    Matrix m(rels.front().ring(), rels.size(), space_dim(rels.front().space));
    for (std::size_t i = 0; i < rels.size(); ++i) {
        if (rels[i].space != rels.front().space)
            throw std::invalid_argument("space mismatch");
        m.set_row(i, rels[i].coeffs);
    }
    return m;
}

std::vector<Relation> matrix_relations(SpaceTag space, const Matrix& m) {
    if (m.cols() != space_dim(space)) throw std::invalid_argument("width does not match space");
    std::vector<Relation> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(Relation::from_row(space, m, i));
    return out;
}

namespace {

// sign used to split a coefficient into sign * magnitude for display
int display_sign(const Scalar& x) {
    if (x.ring() == Ring::INT) return sgn(x.as_int()) < 0 ? -1 : 1;
    return x.as_poly().leading() < 0 ? -1 : 1;
}

bool needs_parens(const std::string& s) {
    return s.find_first_of("+-/ ") != std::string::npos;
}

} // namespace

std::string render_relation(const Relation& r, bool unicode) {
    std::string out;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        const Scalar& c = r.coeffs[i];
        if (c.is_zero()) continue;
        int sign = display_sign(c);
        Scalar mag = sign < 0 ? -c : c;
        bool first = out.empty();
        out += first ? (sign < 0 ? "-" : "") : (sign < 0 ? " - " : " + ");
        std::string mono = monomial_text(Monomial::from_flat(r.space, i), unicode);
        if (mag.is_unit() && scalar_to_string(mag) == "1") {
            out += mono;
        } else {
            std::string ms = scalar_to_string(mag);
            out += (needs_parens(ms) ? "(" + ms + ")" : ms) + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace operadlab
