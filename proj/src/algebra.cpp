#include "colorlie/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace colorlie {

namespace {

void fill_fast_tables(GradedAlgebra& A) {
    A.monomial_products = true;
    A.mono_k.assign(static_cast<std::size_t>(A.dim) * A.dim, -1);
    A.mono_c.assign(static_cast<std::size_t>(A.dim) * A.dim, 0);
    for (int i = 0; i < A.dim && A.monomial_products; ++i)
        for (int j = 0; j < A.dim; ++j) {
            const auto& terms = A.prod[i][j];
            if (terms.empty()) continue;
            if (terms.size() > 1) {
                A.monomial_products = false;
                break;
            }
            const auto& [k, c] = terms.front();
            if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
                A.monomial_products = false;
                break;
            }
            A.mono_k[static_cast<std::size_t>(i) * A.dim + j] = k;
            A.mono_c[static_cast<std::size_t>(i) * A.dim + j] = c.get_num().get_si();
        }
    if (!A.monomial_products) {
        A.mono_k.clear();
        A.mono_c.clear();
    }
}

}  // namespace

GradedAlgebra GradedAlgebra::from_entries(std::string name, int dim,
                                          std::vector<GroupElement> degrees,
                                          std::vector<StructEntry> entries) {
    if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
    if (static_cast<int>(degrees.size()) != dim)
        throw std::invalid_argument("degrees array must have length dim");
    GradedAlgebra A;
    A.name = std::move(name);
    A.dim = dim;
    A.degrees = std::move(degrees);
    A.prod.assign(dim, std::vector<std::vector<std::pair<int, Rat>>>(dim));
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& e : entries) {
        if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
            throw std::invalid_argument("structure constant index out of range");
        if (!seen.insert({e.i, e.j, e.k}).second)
            throw std::invalid_argument("duplicate structure constant entry");
        if (e.c == 0) continue;
        if (!(A.degrees[e.k] == A.degrees[e.i] * A.degrees[e.j]))
            throw std::invalid_argument("structure constants violate the grading");
        A.prod[e.i][e.j].emplace_back(e.k, e.c);
    }
    for (auto& row : A.prod)
        for (auto& cell : row)
            std::sort(cell.begin(), cell.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
    fill_fast_tables(A);
    return A;
}

std::vector<StructEntry> GradedAlgebra::entries() const {
    std::vector<StructEntry> out;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : prod[i][j]) out.push_back({i, j, k, c});
    return out;
}

bool GradedAlgebra::trivially_graded() const {
    return std::all_of(degrees.begin(), degrees.end(),
                       [](GroupElement g) { return g == GroupElement::e(); });
}

std::vector<int> GradedAlgebra::basis_of_degree(GroupElement g) const {
    std::vector<int> out;
    for (int i = 0; i < dim; ++i)
        if (degrees[i] == g) out.push_back(i);
    return out;
}

Vec multiply(const GradedAlgebra& A, const Vec& u, const Vec& v) {
    if (u.size() != A.dim || v.size() != A.dim)
        throw std::invalid_argument("multiply: vector dimension mismatch");
    Vec out = Vec::Zero(A.dim);
    for (int i = 0; i < A.dim; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < A.dim; ++j) {
            if (v[j] == 0) continue;
            Rat uv = u[i] * v[j];
            for (const auto& [k, c] : A.prod[i][j]) out[k] += uv * c;
        }
    }
    return out;
}

Vec basis_vec(const GradedAlgebra& A, int i) {
    Vec v = Vec::Zero(A.dim);
    v[i] = 1;
    return v;
}

Mat ad_matrix(const GradedAlgebra& A, const Vec& x) {
    if (x.size() != A.dim) throw std::invalid_argument("ad_matrix: dimension mismatch");
    Mat M = Mat::Zero(A.dim, A.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            if (x[j] == 0) continue;
            for (const auto& [k, c] : A.prod[i][j]) M(k, i) += x[j] * c;
        }
    return M;
}

Mat killing_matrix(const GradedAlgebra& A) {
    std::vector<Mat> ads;
    ads.reserve(A.dim);
    for (int i = 0; i < A.dim; ++i) ads.push_back(ad_matrix(A, basis_vec(A, i)));
    Mat K = Mat::Zero(A.dim, A.dim);
    for (int r = 0; r < A.dim; ++r)
        for (int s = r; s < A.dim; ++s) {
            Rat tr = 0;
            for (int p = 0; p < A.dim; ++p)
                for (int q = 0; q < A.dim; ++q) tr += ads[r](p, q) * ads[s](q, p);
            K(r, s) = tr;
            K(s, r) = tr;
        }
    return K;
}

Rat killing_value(const GradedAlgebra& A, const Vec& x, const Vec& y) {
    Mat ax = ad_matrix(A, x), ay = ad_matrix(A, y);
    Rat tr = 0;
    for (int p = 0; p < A.dim; ++p)
        for (int q = 0; q < A.dim; ++q) tr += ax(p, q) * ay(q, p);
    return tr;
}

std::vector<std::pair<GroupElement, Vec>> homogeneous_components(const GradedAlgebra& A,
                                                                 const Vec& v) {
    std::vector<std::pair<GroupElement, Vec>> out;
    for (GroupElement g : group_elements()) {
        Vec comp = Vec::Zero(A.dim);
        bool nonzero = false;
        for (int i = 0; i < A.dim; ++i)
            if (A.degrees[i] == g && v[i] != 0) {
                comp[i] = v[i];
                nonzero = true;
            }
        if (nonzero) out.emplace_back(g, std::move(comp));
    }
    return out;
}

ColorAxiomReport check_color_axioms(const GradedAlgebra& A, const Bicharacter& beta) {
    ColorAxiomReport rep;
    const int m = A.dim;
    std::vector<Vec> basis;
    for (int i = 0; i < m; ++i) basis.push_back(basis_vec(A, i));

    auto record = [&rep](ColorViolation v) {
        ++rep.violation_count;
        if (rep.violations.size() < ColorAxiomReport::kMaxStored)
            rep.violations.push_back(std::move(v));
    };

    // products of basis pairs, reused by the Jacobi pass
    std::vector<std::vector<Vec>> pr(m, std::vector<Vec>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) pr[i][j] = multiply(A, basis[i], basis[j]);

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            ++rep.pairs_checked;
            Rat b(beta(A.degrees[i], A.degrees[j]));
            Vec defect = pr[i][j] + b * pr[j][i];
            if (!is_zero(defect)) record({"anticommutativity", {i, j}, defect});
        }

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rat b(beta(A.degrees[i], A.degrees[j]));
            for (int k = 0; k < m; ++k) {
                ++rep.triples_checked;
                Vec defect = multiply(A, pr[i][j], basis[k]) -
                             multiply(A, basis[i], pr[j][k]) +
                             b * multiply(A, basis[j], multiply(A, basis[i], basis[k]));
                if (!is_zero(defect)) record({"jacobi", {i, j, k}, defect});
            }
        }
    return rep;
}

Mat2 group_matrix_rep(GroupElement g) {
    Mat2 m;
    switch (g.index()) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << -1, 0, 0, 1; break;
        case 2: m << 0, 1, 1, 0; break;
        default: m << 0, -1, 1, 0; break;
    }
    return m;
}

Eigen::Matrix<Rat, 4, 1> mat2_group_coeffs(const Mat2& m) {
    // e = I, a = diag(-1,1), b = antidiag(1,1), ab = [[0,-1],[1,0]]
    Eigen::Matrix<Rat, 4, 1> c;
    c[0] = (m(0, 0) + m(1, 1)) / 2;
    c[1] = (m(1, 1) - m(0, 0)) / 2;
    c[2] = (m(0, 1) + m(1, 0)) / 2;
    c[3] = (m(1, 0) - m(0, 1)) / 2;
    return c;
}

Eigen::Matrix<Rat, 4, 1> matrix_unit_group_coeffs(int u, int v) {
    Mat2 m = Mat2::Zero();
    m(u - 1, v - 1) = 1;
    return mat2_group_coeffs(m);
}

GroupRingCheck group_ring_matrix_check(const Cocycle& s) {
    GroupRingCheck out;
    for (GroupElement g : group_elements())
        for (GroupElement h : group_elements()) {
            Mat2 lhs = group_matrix_rep(g) * group_matrix_rep(h);
            Mat2 rhs = Rat(s(g, h)) * group_matrix_rep(g * h);
            bool ok = lhs == rhs;
            out.pair_ok[g.index()][h.index()] = ok;
            if (!ok) out.all_ok = false;
        }
    return out;
}

namespace {

// Reduced spanning set with leading-coordinate pivots; used by the ideal
// closure.  Returns true when v enlarged the span.
struct SpanBasis {
    std::vector<Vec> vecs;
    std::vector<int> pivots;

    bool add(Vec v) {
        for (std::size_t t = 0; t < vecs.size(); ++t)
            if (v[pivots[t]] != 0) v -= Rat(v[pivots[t]]) * vecs[t];
        int p = -1;
        for (int i = 0; i < v.size(); ++i)
            if (v[i] != 0) {
                p = i;
                break;
            }
        if (p < 0) return false;
        v /= Rat(v[p]);
        for (std::size_t t = 0; t < vecs.size(); ++t)
            if (vecs[t][p] != 0) vecs[t] -= Rat(vecs[t][p]) * v;
        vecs.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

}  // namespace

SimplicityReport is_graded_simple(const GradedAlgebra& A) {
    SimplicityReport rep;
    bool any_product = false;
    for (int i = 0; i < A.dim && !any_product; ++i)
        for (int j = 0; j < A.dim; ++j)
            if (!A.prod[i][j].empty()) {
                any_product = true;
                break;
            }
    if (!any_product) {
        rep.zero_product = true;
        rep.simple = false;
        rep.generator_index = 0;
        rep.witness.push_back(basis_vec(A, 0));
        return rep;
    }

    for (int g = 0; g < A.dim; ++g) {
        SpanBasis span;
        span.add(basis_vec(A, g));
        // closure under two-sided multiplication by basis elements, with
        // homogeneous splitting (graded ideals only)
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Vec> frontier = span.vecs;
            for (const Vec& v : frontier)
                for (int j = 0; j < A.dim; ++j) {
                    for (const auto& [deg, comp] :
                         homogeneous_components(A, multiply(A, v, basis_vec(A, j))))
                        grew |= span.add(comp);
                    for (const auto& [deg, comp] :
                         homogeneous_components(A, multiply(A, basis_vec(A, j), v)))
                        grew |= span.add(comp);
                }
        }
        if (static_cast<int>(span.vecs.size()) < A.dim) {
            rep.simple = false;
            rep.generator_index = g;
            rep.witness = span.vecs;
            return rep;
        }
    }
    rep.simple = true;
    return rep;
}

// ---- factories -----------------------------------------------------------

GradedAlgebra sl2_factory() {
    std::vector<StructEntry> ent = {
        {0, 1, 0, -2},  // [e,h] = -2e
        {1, 0, 0, 2},   // [h,e] = 2e
        {1, 2, 2, -2},  // [h,f] = -2f
        {2, 1, 2, 2},   // [f,h] = 2f
        {0, 2, 1, 1},   // [e,f] = h
        {2, 0, 1, -1},  // [f,e] = -h
    };
    return GradedAlgebra::from_entries(
        "sl2", 3, std::vector<GroupElement>(3, GroupElement::e()), std::move(ent));
}

GradedAlgebra sln_factory(int n) {
    if (n < 2 || n > 3) throw std::invalid_argument("sln_factory: n must be 2 or 3");
    // basis: off-diagonal E_pq in lexicographic (p,q) order, then
    // H_k = E_kk - E_{k+1,k+1}
    struct BasisMat {
        Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic> m;
    };
    std::vector<BasisMat> basis;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            BasisMat b{Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n)};
            b.m(p, q) = 1;
            basis.push_back(std::move(b));
        }
    for (int k = 0; k + 1 < n; ++k) {
        BasisMat b{Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n)};
        b.m(k, k) = 1;
        b.m(k + 1, k + 1) = -1;
        basis.push_back(std::move(b));
    }
    const int d = static_cast<int>(basis.size());

    // expand a traceless matrix in the basis: off-diagonals direct, diagonal
    // part via partial sums in the H_k coordinates
    auto coords = [&](const Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>& M) {
        std::vector<Rat> c(d, Rat(0));
        int idx = 0;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if (p == q) continue;
                c[idx++] = M(p, q);
            }
        Rat partial = 0;
        for (int k = 0; k + 1 < n; ++k) {
            partial += M(k, k);
            c[idx++] = partial;
        }
        return c;
    };

    std::vector<StructEntry> ent;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto comm = (basis[i].m * basis[j].m - basis[j].m * basis[i].m).eval();
            auto c = coords(comm);
            for (int k = 0; k < d; ++k)
                if (c[k] != 0) ent.push_back({i, j, k, c[k]});
        }
    return GradedAlgebra::from_entries("sl" + std::to_string(n), d,
                                       std::vector<GroupElement>(d, GroupElement::e()),
                                       std::move(ent));
}

GradedAlgebra tensor_color_construct(const GradedAlgebra& B, const Cocycle& s) {
    if (!B.trivially_graded())
        throw std::invalid_argument("tensor_color_construct: B must be trivially graded");
    const int d = B.dim;
    const int dim = 4 * d;
    std::vector<GroupElement> degrees(dim);
    for (GroupElement g : group_elements())
        for (int i = 0; i < d; ++i) degrees[g.index() * d + i] = g;

    std::vector<StructEntry> ent;
    for (GroupElement g : group_elements())
        for (GroupElement h : group_elements()) {
            const int sg = s(g, h);
            const int base = (g * h).index() * d;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    for (const auto& [k, c] : B.prod[i][j])
                        ent.push_back({g.index() * d + i, h.index() * d + j, base + k,
                                       Rat(sg) * c});
        }
    return GradedAlgebra::from_entries("F[G]x" + B.name, dim, std::move(degrees),
                                       std::move(ent));
}

GradedAlgebra direct_sum(const GradedAlgebra& A, const GradedAlgebra& B) {
    std::vector<GroupElement> degrees = A.degrees;
    degrees.insert(degrees.end(), B.degrees.begin(), B.degrees.end());
    std::vector<StructEntry> ent = A.entries();
    for (const auto& e : B.entries())
        ent.push_back({e.i + A.dim, e.j + A.dim, e.k + A.dim, e.c});
    return GradedAlgebra::from_entries(A.name + "+" + B.name, A.dim + B.dim,
                                       std::move(degrees), std::move(ent));
}

GradedAlgebra abelian_factory(int m) {
    return GradedAlgebra::from_entries("abelian" + std::to_string(m), m,
                                       std::vector<GroupElement>(m, GroupElement::e()), {});
}

}  // namespace colorlie
