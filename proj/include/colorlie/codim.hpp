#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorlie/algebra.hpp"
#include "colorlie/poly.hpp"

namespace colorlie {

// Raised when a computation would exceed its size guard; the message states
// the size that would be needed.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodimOptions {
    enum class Mode { Exact, Randomized };
    enum class ExactStrategy { Auto, DirectEchelon, Gram };

    Mode mode = Mode::Exact;
    ExactStrategy strategy = ExactStrategy::Auto;
    std::uint64_t seed = 1;
    std::vector<std::uint64_t> primes = {1000003, 1000033};
    int num_seeds = 3;              // randomized repetitions per prime
    int batch_columns = 64;
    int stabilization_window = 5;   // batches with unchanged rank before stopping
    long long max_coord_columns = 1'000'000;  // exact-mode guard
    long long max_rows = 250'000;
};

struct CodimReport {
    std::string algebra;
    int n = 0;
    std::string mode;       // "exact-full-basis" or "randomized"
    std::string row_shape;  // "all-bracketings" or "left-normed-first-fixed"
    long long value = 0;
    std::vector<std::uint64_t> primes;  // empty in exact mode
    std::uint64_t seed = 0;
    long long rows = 0;
    long long columns_processed = 0;
    int stabilization_window = 0;
    std::string status;  // "exact" or "lower-bound-whp"
    std::optional<std::array<int, 4>> graded_key;
};

// dim P_n / (P_n cap Id(A)) over all bracketing monomials.  Exact mode
// enumerates every basis tuple (sound by multilinearity); randomized mode
// gives a lower bound that holds with high probability.
CodimReport codim_plain(const GradedAlgebra& A, int n, const CodimOptions& opts = {});

// Lie codimension: rows restricted to left-normed monomials with x_1 first.
// Rejects algebras that fail the Lie axioms.
CodimReport codim_lie(const GradedAlgebra& B, int n, const CodimOptions& opts = {});

// Graded component dimension for variables of degrees e^k1 a^k2 b^k3 (ab)^k4;
// evaluations range over homogeneous basis elements of matching degree.
CodimReport codim_graded_component(const GradedAlgebra& L, const std::array<int, 4>& key,
                                   const CodimOptions& opts = {},
                                   MonomialShape row_shape = MonomialShape::LeftNormedFirstFixed);

// c_n^gr: multinomial-weighted sum of component dimensions.
CodimReport codim_graded_total(const GradedAlgebra& L, int n, const CodimOptions& opts = {});

struct TrendRow {
    int n = 0;
    long long c_n = 0;
    double root = 0.0;     // c_n^{1/n}
    double ratio = 0.0;    // c_{n+1}/c_n, 0 on the last row
    bool has_ratio = false;
};

// Finite trend report (no asymptotic claim).
std::vector<TrendRow> exponent_trend(const GradedAlgebra& A, int n_max,
                                     const CodimOptions& opts = {});

// Multinomial coefficient n! / (k1! k2! k3! k4!).
Int multinomial4(int n, const std::array<int, 4>& k);

// All compositions of n into 4 nonnegative parts, lexicographic.
std::vector<std::array<int, 4>> compositions4(int n);

long long catalan(int n);
long long monomial_count(int n, MonomialShape shape);

}  // namespace colorlie
