#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/group.hpp"
#include "colorlie/rational.hpp"

namespace colorlie {

struct StructEntry {
    int i, j, k;
    Rat c;
};

// Finite-dimensional algebra over Q given by exact structure constants
// basis_i * basis_j = sum_k c_{ijk} basis_k, with a Z2 x Z2 degree on each
// basis element.  The product encodes u * v = [u, v].  Immutable after
// construction; the constructor validates ranges, duplicate entries and
// degree compatibility.
struct GradedAlgebra {
    std::string name;
    int dim = 0;
    std::vector<GroupElement> degrees;
    // prod[i][j] -> sorted list of (k, coeff), coeff != 0
    std::vector<std::vector<std::vector<std::pair<int, Rat>>>> prod;

    // Fast-path tables, present when every basis product is a scalar times a
    // single basis element with an int64 coefficient (true for sl2 and the
    // tensor algebras built from it).
    bool monomial_products = false;
    std::vector<std::int32_t> mono_k;   // dim*dim, -1 for zero product
    std::vector<std::int64_t> mono_c;   // dim*dim

    static GradedAlgebra from_entries(std::string name, int dim,
                                      std::vector<GroupElement> degrees,
                                      std::vector<StructEntry> entries);
    std::vector<StructEntry> entries() const;

    bool trivially_graded() const;
    std::vector<int> basis_of_degree(GroupElement g) const;
};

// ---- arithmetic ----------------------------------------------------------

Vec multiply(const GradedAlgebra& A, const Vec& u, const Vec& v);
Vec basis_vec(const GradedAlgebra& A, int i);

// Matrix of ad x : y -> y * x; column i is basis_i * x.
Mat ad_matrix(const GradedAlgebra& A, const Vec& x);

// rho(x, y) = tr(ad x . ad y) on the basis; exactly symmetric.
Mat killing_matrix(const GradedAlgebra& A);

// Killing form value for two coefficient vectors.
Rat killing_value(const GradedAlgebra& A, const Vec& x, const Vec& y);

// Splits v into its nonzero homogeneous components.
std::vector<std::pair<GroupElement, Vec>> homogeneous_components(const GradedAlgebra& A,
                                                                 const Vec& v);

// ---- axiom checking ------------------------------------------------------

struct ColorViolation {
    std::string axiom;         // "anticommutativity" or "jacobi"
    std::vector<int> indices;  // offending basis tuple
    Vec defect;
};

struct ColorAxiomReport {
    long long pairs_checked = 0;
    long long triples_checked = 0;
    long long violation_count = 0;
    std::vector<ColorViolation> violations;  // capped at kMaxStored
    static constexpr std::size_t kMaxStored = 64;
    bool ok() const { return violation_count == 0; }
};

// Checks x y = -beta(x,y) y x and (xy)z = x(yz) - beta(x,y) y(xz) over all
// homogeneous basis pairs and triples.
ColorAxiomReport check_color_axioms(const GradedAlgebra& A, const Bicharacter& beta);

// ---- the twisted group ring as 2x2 matrices -------------------------------

using Mat2 = Eigen::Matrix<Rat, 2, 2>;

Mat2 group_matrix_rep(GroupElement g);
// Coefficients of a 2x2 matrix in the e, a, b, ab matrix basis.
Eigen::Matrix<Rat, 4, 1> mat2_group_coeffs(const Mat2& m);
// Matrix unit E_{uv} (1-based indices) written in the group basis.
Eigen::Matrix<Rat, 4, 1> matrix_unit_group_coeffs(int u, int v);

struct GroupRingCheck {
    std::array<std::array<bool, 4>, 4> pair_ok;
    bool all_ok = true;
};

// Verifies M(g) M(h) == s(g,h) M(gh) for all 16 pairs.
GroupRingCheck group_ring_matrix_check(const Cocycle& s);

// ---- graded simplicity ---------------------------------------------------

struct SimplicityReport {
    bool simple = false;
    bool zero_product = false;  // identically zero product: not simple by convention
    int generator_index = -1;   // basis element whose closure is proper
    std::vector<Vec> witness;   // echelon basis of a proper graded ideal
};

SimplicityReport is_graded_simple(const GradedAlgebra& A);

// ---- factories -----------------------------------------------------------

// sl2 with basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
GradedAlgebra sl2_factory();
// sl_n (n in {2,3}) on the elementary-matrix basis, trivial grading.
GradedAlgebra sln_factory(int n);
// L = F[G] (x) B with product (g (x) x)(h (x) y) = s(g,h) (gh (x) [x,y]);
// basis ordered g-major; requires B trivially graded.
GradedAlgebra tensor_color_construct(const GradedAlgebra& B, const Cocycle& s);
GradedAlgebra direct_sum(const GradedAlgebra& A, const GradedAlgebra& B);
// m-dimensional algebra with zero product, trivial grading.
GradedAlgebra abelian_factory(int m);

}  // namespace colorlie
