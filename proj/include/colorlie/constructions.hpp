#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/algebra.hpp"
#include "colorlie/poly.hpp"

namespace colorlie {

// A multilinear monomial f of the interleaved left-normed shape
// [x-block, y_1, x-block, y_2, ..., y_d, x] together with an evaluation at
// which Alt_Y(f) is nonzero; Y has size dim(target).
struct WitnessPolynomial {
    std::string algebra;          // target algebra name
    MultilinearPoly poly;         // single monomial, shape as above
    std::vector<int> alt_set;     // the y variables, in word order
    std::vector<int> aux_vars;    // the x variables, in word order
    Assignment evaluation;        // certifying evaluation
    Vec alt_value;                // alt_evaluate(poly, alt_set, ., evaluation) != 0
};

struct WitnessSearchResult {
    bool found = false;
    long long trials_used = 0;
    std::vector<int> block_sizes;  // t_1..t_d of the shape that succeeded
    std::optional<WitnessPolynomial> witness;
};

// Seeded search for a left-normed witness with all blocks nonempty; tries
// basis evaluations shape by shape until the trial budget runs out.
WitnessSearchResult find_alternating_nonidentity(const GradedAlgebra& B, long long trials,
                                                 std::uint64_t seed);

// Result of lifting a witness for B to L = F[G] (x) B through the matrix
// units of the 2x2 identification.
struct LiftRecord {
    bool nonzero = false;
    Vec value;                        // exact value of the block-alternated product
    std::array<MultilinearPoly, 4> copies;       // renamed witness monomials
    std::array<std::vector<int>, 4> copy_y_vars; // per copy, in word order
    std::vector<std::vector<int>> connector_vars;  // per gap (3 between + 1 trailing)
    Assignment phi0;                  // evaluation into L (copies + connectors)
    int connector_attempts = 0;       // 0 means the r = 0 default succeeded
    long long cross_samples = 0;
    long long cross_nonzero = 0;      // sampled cross-block terms that failed to vanish
    Monomial composed;                // the product monomial H
    LiftRecord() : composed(Monomial::leaf(1)) {}
};

// Builds the four matrix-unit copies, checks the combined value is exactly
// nonzero (escalating through seeded homogeneous connectors if the
// connector-free product vanishes), and samples cross-block permutation
// terms of the full alternation, which must all vanish at phi0.
LiftRecord lift_to_L(const WitnessPolynomial& wB, const GradedAlgebra& L,
                     const GradedAlgebra& B, const Cocycle& s, std::uint64_t seed,
                     long long cross_samples = 10000);

// g = sum over x in X of f with x replaced by [x, v, z]; preserves
// alternation on X.
MultilinearPoly insert_bracket_sum(const MultilinearPoly& f, const std::vector<int>& X, int v,
                                   int z);

struct TraceExtractRecord {
    Vec lhs;  // value of the iterated insertion polynomial
    Vec rhs;  // product of traces times the value of f
    std::vector<Rat> traces;
    bool equal = false;
};

// Trace-extraction identity: evaluates g (k nested insertion sums) against
// prod_s tr(ad v_s ad z_s) * f, exactly.
TraceExtractRecord trace_extract(const MultilinearPoly& f, const std::vector<int>& X,
                                 const std::vector<std::pair<Vec, Vec>>& pair_values,
                                 const GradedAlgebra& A, const Assignment& e);

struct DeterminantIdentityRecord {
    int k = 0;
    Vec lhs;  // value of g_k via implicit double alternation
    Vec rhs;  // prod_s det(rho_s) * value of f
    std::vector<Rat> dets;
    bool equal = false;
    int num_aux = 0;          // N: auxiliary variables of f, independent of k
    bool alternating_ok = false;  // repeated-vector evaluations vanish on every set
};

// Proposition-1 identity on a small algebra (dim A = |X| = q <= 4): builds
// the 1/q!-averaged doubly alternated trace extractor implicitly and checks
// phi(g_k) = prod det(rho_s) phi(f) for a seeded random evaluation.
DeterminantIdentityRecord determinant_identity_check(const MultilinearPoly& f, const std::vector<int>& X,
                                    const GradedAlgebra& A, int k, std::uint64_t seed);

// Seeded random coefficient vector with small integer entries.
Vec random_small_vec(int dim, std::mt19937_64& rng, int span = 3);

}  // namespace colorlie
