// Acceptance gate.  Runs the five pipelines and the randomized property
// suites, printing one PASS/FAIL line per criterion.  Every comparison is
// exact (zero tolerance); the process exits nonzero if any criterion fails.
#include <operadlab/lll.hpp>
#include <operadlab/morphisms.hpp>
#include <operadlab/operads.hpp>
#include <operadlab/pipelines.hpp>

#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace operadlab;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s\n", ok ? "PASS" : "FAIL", num, name.c_str(),
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    if (!ok) ++g_failures;
}

const Check* find_check(const PipelineReport& rep, const std::string& name) {
    for (const Check& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

// Conjunction of named pipeline checks; a missing name is itself a failure.
bool bundle(const PipelineReport& rep, const std::vector<std::string>& names, std::string& why) {
    for (const std::string& n : names) {
        const Check* c = find_check(rep, n);
        if (!c) { why = "missing check: " + n; return false; }
        if (!c->pass) { why = "failed check: " + n; return false; }
    }
    return true;
}

bool under_budget(const PipelineReport& rep, std::string& why) {
    if (rep.elapsed_ms >= 10000) {
        why = rep.pipeline + " took " + std::to_string(rep.elapsed_ms) + " ms";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// randomized property suites
// ---------------------------------------------------------------------------

struct SuiteResult {
    std::string name;
    long cases = 0;
    bool ok = true;
    std::string why;
};

long rnd(std::mt19937_64& g, long lo, long hi) {
    return lo + static_cast<long>(g() % static_cast<unsigned long>(hi - lo + 1));
}

Matrix random_int_matrix(std::mt19937_64& g, std::size_t m, std::size_t n, long lo, long hi) {
    Matrix a(Ring::INT, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Scalar(Int(rnd(g, lo, hi)));
    return a;
}

PolyQ random_poly(std::mt19937_64& g, int max_deg, long lo, long hi) {
    std::vector<Rational> c;
    int d = static_cast<int>(rnd(g, 0, max_deg));
    for (int i = 0; i <= d; ++i) c.push_back(Rational(rnd(g, lo, hi)));
    return PolyQ(c);
}

Matrix random_poly_matrix(std::mt19937_64& g, std::size_t m, std::size_t n, int max_deg) {
    Matrix a(Ring::POLY, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Scalar(random_poly(g, max_deg, -2, 2));
    return a;
}

// Ring-preserving invertible row operations: swap, unit scaling, adding a
// ring multiple of another row.
void mix_rows(std::mt19937_64& g, Matrix& b, int ops) {
    std::size_t m = b.rows();
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(rnd(g, 0, static_cast<long>(m) - 1));
        std::size_t j = static_cast<std::size_t>(rnd(g, 0, static_cast<long>(m) - 1));
        switch (rnd(g, 0, 2)) {
            case 0:
                b.swap_rows(i, j);
                break;
            case 1: {
                Scalar u = Scalar::one(b.ring());
                if (b.ring() == Ring::INT) {
                    u = Scalar(Int(-1));
                } else {
                    long num = rnd(g, 1, 3) * (rnd(g, 0, 1) ? 1 : -1);
                    u = Scalar(PolyQ(make_rational(num, rnd(g, 1, 3))));
                }
                for (std::size_t c = 0; c < b.cols(); ++c) b.at(i, c) = u * b.at(i, c);
                break;
            }
            default: {
                if (i == j) break;
                Scalar f = b.ring() == Ring::INT ? Scalar(Int(rnd(g, -3, 3)))
                                                 : Scalar(random_poly(g, 1, -2, 2));
                for (std::size_t c = 0; c < b.cols(); ++c)
                    b.at(i, c) = b.at(i, c) + f * b.at(j, c);
                break;
            }
        }
    }
}

SuiteResult suite_hnf_canonicity() {
    SuiteResult r{"hnf-canonicity", 0, true, ""};
    std::mt19937_64 g(1001);
    for (long t = 0; t < 1000; ++t) {
        std::size_t m = static_cast<std::size_t>(rnd(g, 1, 5));
        std::size_t n = static_cast<std::size_t>(rnd(g, 1, 5));
        Matrix a = random_int_matrix(g, m, n, -4, 4);
        Matrix b = a;
        mix_rows(g, b, static_cast<int>(rnd(g, 1, 8)));
        ++r.cases;
        if (!(hnf_with_transform(a).H == hnf_with_transform(b).H)) {
            r.ok = false;
            r.why = "integer case " + std::to_string(t);
            return r;
        }
    }
    for (long t = 0; t < 200; ++t) {
        std::size_t m = static_cast<std::size_t>(rnd(g, 1, 4));
        std::size_t n = static_cast<std::size_t>(rnd(g, 1, 4));
        Matrix a = random_poly_matrix(g, m, n, 2);
        Matrix b = a;
        mix_rows(g, b, static_cast<int>(rnd(g, 1, 6)));
        ++r.cases;
        if (!(hnf_with_transform(a).H == hnf_with_transform(b).H)) {
            r.ok = false;
            r.why = "polynomial case " + std::to_string(t);
            return r;
        }
    }
    return r;
}

// Independent determinant oracle: cofactor expansion along the first column.
Scalar det_cofactor(const Matrix& u) {
    std::size_t n = u.rows();
    if (n == 1) return u.at(0, 0);
    Scalar acc = Scalar::zero(u.ring());
    for (std::size_t i = 0; i < n; ++i) {
        if (u.at(i, 0).is_zero()) continue;
        Matrix minor(u.ring(), n - 1, n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < n; ++c) minor.at(mr, c - 1) = u.at(r, c);
            ++mr;
        }
        Scalar term = u.at(i, 0) * det_cofactor(minor);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

SuiteResult suite_hnf_transform() {
    SuiteResult r{"hnf-transform-certificates", 0, true, ""};
    std::mt19937_64 g(1002);
    for (long t = 0; t < 1200; ++t) {
        bool poly = t >= 1000;
        std::size_t m = static_cast<std::size_t>(rnd(g, 1, poly ? 4 : 5));
        std::size_t n = static_cast<std::size_t>(rnd(g, 1, poly ? 4 : 5));
        Matrix a = poly ? random_poly_matrix(g, m, n, 2) : random_int_matrix(g, m, n, -4, 4);
        HnfResult h = hnf_with_transform(a);
        ++r.cases;
        std::string tag = (poly ? "polynomial case " : "integer case ") + std::to_string(t);
        if (!(h.U.multiplied(a) == h.H)) { r.ok = false; r.why = tag + ": U*M != H"; return r; }
        if (!is_hnf(h.H)) { r.ok = false; r.why = tag + ": H not in normal form"; return r; }
        Scalar d = det_cofactor(h.U);
        if (!(d == h.det_u)) { r.ok = false; r.why = tag + ": det mismatch"; return r; }
        bool unit = poly ? (!d.is_zero() && d.as_poly().is_constant())
                         : (d.as_int() == 1 || d.as_int() == -1);
        if (!unit) { r.ok = false; r.why = tag + ": det not a unit"; return r; }
    }
    return r;
}

SuiteResult suite_lll() {
    SuiteResult r{"lll-certificates", 0, true, ""};
    std::mt19937_64 g(1003);
    const Rational deltas[5] = {make_rational(3, 4), make_rational(9, 10), make_rational(1, 1),
                                make_rational(2, 3), make_rational(51, 100)};
    for (long t = 0; t < 1000; ++t) {
        std::size_t m = static_cast<std::size_t>(rnd(g, 1, 4));
        std::size_t n = static_cast<std::size_t>(rnd(g, m, 6));
        Matrix a = random_int_matrix(g, m, n, -9, 9);
        if (rank(a) < m) { --t; continue; }
        const Rational& d = deltas[rnd(g, 0, 4)];
        Matrix red = lll_reduce(a, d);
        ++r.cases;
        std::string tag = "case " + std::to_string(t);
        if (red.rows() != m) { r.ok = false; r.why = tag + ": row count changed"; return r; }
        if (!lattice_equal(a, red)) { r.ok = false; r.why = tag + ": lattice changed"; return r; }
        if (!is_size_reduced(red)) { r.ok = false; r.why = tag + ": not size-reduced"; return r; }
        if (!satisfies_lovasz(red, d)) { r.ok = false; r.why = tag + ": Lovasz fails"; return r; }
    }
    return r;
}

Relation random_relation(std::mt19937_64& g, SpaceTag space, Ring ring) {
    Relation r(space, ring);
    for (Scalar& c : r.coeffs)
        c = ring == Ring::INT ? Scalar(Int(rnd(g, -5, 5))) : Scalar(random_poly(g, 1, -3, 3));
    return r;
}

SuiteResult suite_s3_action() {
    SuiteResult r{"s3-action-composition", 0, true, ""};
    std::mt19937_64 g(1004);
    const SpaceTag spaces[3] = {SpaceTag::SO1_PLAIN, SpaceTag::SO1_POLAR, SpaceTag::SO2};
    for (long t = 0; t < 1200; ++t) {
        SpaceTag space = spaces[t % 3];
        Ring ring = (t % 2) ? Ring::POLY : Ring::INT;
        Relation rel = random_relation(g, space, ring);
        int s = static_cast<int>(rnd(g, 0, 5));
        int u = static_cast<int>(rnd(g, 0, 5));
        ++r.cases;
        if (!(act_relation(s, act_relation(u, rel)) == act_relation(perm3_compose(s, u), rel))) {
            r.ok = false;
            r.why = "composition fails on " + space_name(space) + " case " + std::to_string(t);
            return r;
        }
        if (!(act_relation(0, rel) == rel)) {
            r.ok = false;
            r.why = "identity fails on " + space_name(space) + " case " + std::to_string(t);
            return r;
        }
    }
    return r;
}

SuiteResult suite_polarize_roundtrip() {
    SuiteResult r{"polarization-roundtrip", 0, true, ""};
    std::mt19937_64 g(1005);
    for (long t = 0; t < 1200; ++t) {
        Ring ring = (t % 2) ? Ring::POLY : Ring::INT;
        Relation rel = random_relation(g, SpaceTag::SO1_PLAIN, ring);
        Relation four(SpaceTag::SO1_PLAIN, ring);
        Scalar f = ring == Ring::INT ? Scalar(Int(4)) : Scalar(PolyQ::constant(4));
        for (std::size_t i = 0; i < rel.coeffs.size(); ++i) four.coeffs[i] = f * rel.coeffs[i];
        ++r.cases;
        if (!(expand_polarized(polarize(rel)) == four)) {
            r.ok = false;
            r.why = "case " + std::to_string(t);
            return r;
        }
    }
    return r;
}

// Rational Gaussian elimination, written here as an oracle independent of the
// library's normal-form code.
std::vector<std::vector<Rational>> to_rational_rows(const Matrix& a) {
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = Rational(a.at(i, j).as_int());
    return m;
}

std::size_t rank_gauss(std::vector<std::vector<Rational>> m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size(), rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t p = rk;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rk]);
        for (std::size_t i = rk + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rk][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rk][j];
        }
        ++rk;
    }
    return rk;
}

// Solves x * B = w over the rationals (rows of B independent).  Returns the
// unique solution or nullopt when w is outside the rational row span.
std::optional<std::vector<Rational>> solve_left(const std::vector<std::vector<Rational>>& b,
                                                const std::vector<Rational>& w) {
    std::size_t k = b.size();
    std::size_t n = w.size();
    // augmented system B^T x^T = w^T
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = b[j][i];
        m[i][k] = w[i];
    }
    std::vector<long> pivot_col(n, -1);
    std::size_t rk = 0;
    for (std::size_t c = 0; c < k && rk < n; ++c) {
        std::size_t p = rk;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[rk]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rk || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rk][c];
            for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[rk][j];
        }
        pivot_col[rk] = static_cast<long>(c);
        ++rk;
    }
    for (std::size_t i = rk; i < n; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rational> x(k, Rational(0));
    for (std::size_t i = 0; i < rk; ++i) x[pivot_col[i]] = m[i][k] / m[i][pivot_col[i]];
    return x;
}

bool all_integral(const std::vector<Rational>& x) {
    for (const Rational& v : x)
        if (!is_integer(v)) return false;
    return true;
}

SuiteResult suite_kernel_membership() {
    SuiteResult r{"kernel-and-membership-oracles", 0, true, ""};
    std::mt19937_64 g(1006);

    // Part 1: right kernels of {-1,0,1} matrices up to 6x8, checked against
    // box enumeration (completeness) and rational elimination (dimension).
    for (long t = 0; t < 1000; ++t) {
        bool big = (t % 10) < 3;
        std::size_t m = static_cast<std::size_t>(big ? rnd(g, 5, 6) : rnd(g, 1, 4));
        std::size_t n = static_cast<std::size_t>(big ? rnd(g, 7, 8) : rnd(g, 1, 6));
        long box = big ? 1 : 2;
        Matrix a = random_int_matrix(g, m, n, -1, 1);
        Matrix nb = nullspace_basis(a);
        ++r.cases;
        std::string tag = "kernel case " + std::to_string(t);

        for (std::size_t i = 0; i < nb.rows(); ++i)
            for (std::size_t row = 0; row < m; ++row) {
                Scalar dot = Scalar::zero(Ring::INT);
                for (std::size_t j = 0; j < n; ++j) dot = dot + a.at(row, j) * nb.at(i, j);
                if (!dot.is_zero()) { r.ok = false; r.why = tag + ": row not in kernel"; return r; }
            }

        std::vector<std::vector<Rational>> aq = to_rational_rows(a);
        if (rank_gauss(aq) + nb.rows() != n) {
            r.ok = false;
            r.why = tag + ": kernel dimension disagrees with elimination";
            return r;
        }

        Matrix h(Ring::INT, 0, n);
        if (nb.rows() > 0) h = hnf_with_transform(nb).H.without_zero_rows();
        std::vector<std::vector<Rational>> nq = to_rational_rows(nb);
        std::vector<long> w(n, -box);
        long aij[6][8];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) aij[i][j] = a.at(i, j).as_int().get_si();
        bool done = false;
        long sampled = 0;
        while (!done) {
            bool zero_vec = true, in_kernel = true;
            for (std::size_t j = 0; j < n && zero_vec; ++j) zero_vec = (w[j] == 0);
            if (!zero_vec) {
                for (std::size_t i = 0; i < m && in_kernel; ++i) {
                    long dot = 0;
                    for (std::size_t j = 0; j < n; ++j) dot += aij[i][j] * w[j];
                    in_kernel = (dot == 0);
                }
                if (in_kernel) {
                    std::vector<Scalar> ws;
                    std::vector<Rational> wq;
                    for (long v : w) { ws.push_back(Scalar(Int(v))); wq.push_back(Rational(v)); }
                    bool lib = is_module_member(h, ws);
                    auto sol = solve_left(nq, wq);
                    bool oracle = sol.has_value() && all_integral(*sol);
                    if (!lib || !oracle) {
                        r.ok = false;
                        r.why = tag + ": kernel vector outside the computed lattice";
                        return r;
                    }
                } else if (++sampled % 41 == 0) {
                    std::vector<Scalar> ws;
                    for (long v : w) ws.push_back(Scalar(Int(v)));
                    if (is_module_member(h, ws)) {
                        r.ok = false;
                        r.why = tag + ": non-kernel vector accepted";
                        return r;
                    }
                }
            }
            std::size_t j = 0;
            while (j < n && w[j] == box) { w[j] = -box; ++j; }
            if (j == n) done = true;
            else ++w[j];
        }
    }

    // Part 2: membership in arbitrary row lattices against rational solving.
    for (long t = 0; t < 1000; ++t) {
        std::size_t k = static_cast<std::size_t>(rnd(g, 1, 3));
        std::size_t n = static_cast<std::size_t>(rnd(g, k, 4));
        Matrix b = random_int_matrix(g, k, n, -2, 2);
        Matrix h = hnf_with_transform(b).H.without_zero_rows();
        if (h.rows() == 0) { --t; continue; }
        std::vector<std::vector<Rational>> hq = to_rational_rows(h);
        ++r.cases;
        std::string tag = "membership case " + std::to_string(t);

        std::vector<Scalar> w(n, Scalar::zero(Ring::INT));
        std::vector<Rational> wq(n, Rational(0));
        if (t % 2 == 0) {
            // integer combination of the basis rows: always a member
            for (std::size_t i = 0; i < h.rows(); ++i) {
                long c = rnd(g, -2, 2);
                for (std::size_t j = 0; j < n; ++j) {
                    w[j] = w[j] + Scalar(Int(c)) * h.at(i, j);
                    wq[j] += Rational(c) * hq[i][j];
                }
            }
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                long v = rnd(g, -4, 4);
                w[j] = Scalar(Int(v));
                wq[j] = Rational(v);
            }
        }
        auto sol = solve_left(hq, wq);
        bool oracle = sol.has_value() && all_integral(*sol);
        if (is_module_member(h, w) != oracle) {
            r.ok = false;
            r.why = tag + ": disagrees with rational-solve oracle";
            return r;
        }
    }
    return r;
}

} // namespace

int main() {
    std::vector<PipelineReport> reps = run_all();
    std::map<std::string, const PipelineReport*> by_name;
    for (const PipelineReport& r : reps) by_name[r.pipeline] = &r;
    const PipelineReport& dias = *by_name.at("dias-from-dend");
    const PipelineReport& polar = *by_name.at("polarize-assoc");
    const PipelineReport& hnf = *by_name.at("deform-hnf");
    const PipelineReport& dend = *by_name.at("dend-deform");
    const PipelineReport& dual = *by_name.at("dias-deform");

    std::string why;
    bool ok;

    ok = bundle(dias,
                {"twisted matrix equals reference", "kernel dimension is 5",
                 "kernel lattice equals reference lattice", "reduced rows have square length 2",
                 "reduced rows match the defining pair relations",
                 "rendered relations match reference text"},
                why) &&
         under_budget(dias, why);
    criterion(1, "kernel of the sign-twisted dendriform relations matches the reference pair relations",
              ok, ok ? "" : why);

    why.clear();
    ok = bundle(polar,
                {"polarized associator equals reference", "closure matrix equals reference",
                 "saturation lattice equals reference saturation lattice",
                 "saturation lattice equals reference reduced lattice",
                 "reduced vectors have square length 3",
                 "reduced lattice equals reference reduced lattice",
                 "triangular form spans the reference lattice",
                 "forward extraction keeps rows {1,2,4,5}", "minimized extraction keeps rows {2,5}",
                 "extraction preserves the generated module",
                 "two-generator module equals polarized associator module (rational)"},
                why) &&
         under_budget(polar, why);
    criterion(2, "polarized associator closure, saturation, short basis, and extraction match the reference",
              ok, ok ? "" : why);

    why.clear();
    ok = bundle(hnf,
                {"hnf equals reference matrix", "generic rank is 6", "rank drops to 5 at q=0",
                 "rank stays 6 at q=1", "q=0 module equals the Poisson module"},
                why) &&
         under_budget(hnf, why);
    criterion(3, "deformation normal form, ranks, and the q=0 limit match the reference", ok,
              ok ? "" : why);

    why.clear();
    ok = bundle(dend,
                {"split deformation vector 1 equals reference",
                 "split deformation vector 2 equals reference",
                 "split deformation vector 3 equals reference"},
                why);
    criterion(4, "split deformation vectors match the reference tables", ok, ok ? "" : why);

    why.clear();
    ok = bundle(dend,
                {"block 1 rank is 6", "block 1 hnf equals reference", "block 2 rank is 6",
                 "block 2 hnf equals reference", "block 3 rank is 6",
                 "block 3 hnf equals reference"},
                why);
    criterion(5, "block normal forms of the grouped deformation stack match the reference tables",
              ok, ok ? "" : why);

    why.clear();
    ok = bundle(dend,
                {"field extraction keeps 3 generators", "generator module equals reference relations",
                 "q=1 generators are 4x integer relations",
                 "q=1 quotients lie in the symmetrized dendriform module",
                 "q=1 module equals the symmetrized dendriform module"},
                why) &&
         under_budget(dend, why);
    criterion(6, "deformed dendriform generators match the reference and satisfy the q=1 contract",
              ok, ok ? "" : why);

    why.clear();
    ok = bundle(dual,
                {"kernel has 30 rows",
                 "kernel hnf entries lie in {1,-1,q-1,-(q-1),q+3,-(q+3)}",
                 "kernel hnf rows have 2, 4, or 6 nonzero entries",
                 "field extraction keeps 5 generators", "generator module equals reference relations",
                 "exactly two generators are q-free", "q-free generators span the bar relation module",
                 "q=1 deformed generators are 4x integer relations",
                 "q=1 quotients lie in the symmetrized diassociative module",
                 "q=1 module equals the symmetrized diassociative module",
                 "sign-twisted pairing with the deformed dendriform module vanishes"},
                why) &&
         under_budget(dual, why);
    criterion(7, "deformed diassociative kernel and generators match the reference and satisfy the q=1 contract",
              ok, ok ? "" : why);

    SuiteResult suites[6] = {suite_hnf_canonicity(), suite_hnf_transform(), suite_lll(),
                             suite_s3_action(), suite_polarize_roundtrip(),
                             suite_kernel_membership()};
    bool all_ok = true;
    std::string detail;
    for (const SuiteResult& s : suites) {
        if (!detail.empty()) detail += "; ";
        detail += s.name + " " + std::to_string(s.cases) + (s.ok ? " ok" : " FAIL " + s.why);
        all_ok = all_ok && s.ok;
    }
    criterion(8, "randomized property suites pass", all_ok, detail);

    std::printf("acceptance: %d/8 criteria passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
