#pragma once

#include <cstdint>
#include <vector>

#include "colorlie/rational.hpp"

namespace colorlie {

// Incremental reduced echelon basis for a stream of Q-vectors of fixed
// length.  Rank is monotone in the number of vectors added.
class RationalEchelon {
public:
    explicit RationalEchelon(Eigen::Index len) : len_(len) {}

    // Returns true when v enlarged the span.
    bool add(Vec v);
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    // Remainder of v after reduction against the basis.
    Vec reduce(Vec v) const;

private:
    Eigen::Index len_;
    std::vector<Vec> basis_;
    std::vector<Eigen::Index> pivots_;
};

// Exact rank over Q.  Rescales rows to integers and runs fraction-free
// (Bareiss) elimination with column pivoting; a mod-p pre-pass reorders the
// columns of wide matrices so that likely pivots come first, and the result
// is still certified over Q.
int rank_exact(const Mat& M);

// Exact determinant by fraction-free elimination.
Rat det_bareiss(const Mat& M);

// ---- prime-field tools -----------------------------------------------------

bool is_prime_u64(std::uint64_t p);

struct PrimeField {
    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime);

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        std::uint64_t s = x + y;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const { return x >= y ? x - y : x + p - y; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
    }
    std::uint64_t neg(std::uint64_t x) const { return x ? p - x : 0; }
    std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t x) const;
    std::uint64_t from_int64(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return r < 0 ? static_cast<std::uint64_t>(r + static_cast<std::int64_t>(p))
                     : static_cast<std::uint64_t>(r);
    }
    std::uint64_t from_rat(const Rat& q) const;
};

// Row-reduced basis of a growing column space over F_p.
class FpEchelon {
public:
    FpEchelon(PrimeField f, std::size_t len) : f_(f), len_(len) {}

    bool add(std::vector<std::uint64_t> v);  // true when rank grew
    int rank() const { return static_cast<int>(basis_.size()); }

private:
    PrimeField f_;
    std::size_t len_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<std::size_t> pivots_;
};

// Rank of an integer matrix over F_p (independent oracle for rank_exact).
int rank_mod_p(const Mat& M, std::uint64_t p);

}  // namespace colorlie
