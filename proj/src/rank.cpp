#include "colorlie/rank.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace colorlie {

bool RationalEchelon::add(Vec v) {
    if (v.size() != len_) throw std::invalid_argument("RationalEchelon: length mismatch");
    for (std::size_t t = 0; t < basis_.size(); ++t)
        if (v[pivots_[t]] != 0) v -= Rat(v[pivots_[t]]) * basis_[t];
    Eigen::Index p = -1;
    for (Eigen::Index i = 0; i < len_; ++i)
        if (v[i] != 0) {
            p = i;
            break;
        }
    if (p < 0) return false;
    v /= Rat(v[p]);
    for (std::size_t t = 0; t < basis_.size(); ++t)
        if (basis_[t][p] != 0) basis_[t] -= Rat(basis_[t][p]) * v;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

Vec RationalEchelon::reduce(Vec v) const {
    for (std::size_t t = 0; t < basis_.size(); ++t)
        if (v[pivots_[t]] != 0) v -= Rat(v[pivots_[t]]) * basis_[t];
    return v;
}

namespace {

// Clears denominators row by row; the rank is unchanged.
std::vector<std::vector<Int>> integer_rows(const Mat& M) {
    std::vector<std::vector<Int>> rows(M.rows(), std::vector<Int>(M.cols()));
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        Int l = 1;
        for (Eigen::Index j = 0; j < M.cols(); ++j) l = lcm(l, Int(M(i, j).get_den()));
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            Rat q = M(i, j) * Rat(l);
            rows[i][j] = q.get_num();
        }
    }
    return rows;
}

// Fraction-free elimination; destroys rows.  col_order selects the column
// visiting order (pivot candidates first when a pre-pass supplied one).
int bareiss_rank(std::vector<std::vector<Int>>& rows, std::vector<int> col_order) {
    const int R = static_cast<int>(rows.size());
    if (R == 0) return 0;
    Int prev = 1;
    int r = 0;
    for (int c : col_order) {
        if (r == R) break;
        int pivot = -1;
        for (int i = r; i < R; ++i)
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        const Int& pv = rows[r][c];
        for (int i = r + 1; i < R; ++i) {
            for (int j : col_order) {
                if (j == c) continue;
                Int num = rows[i][j] * pv - rows[i][c] * rows[r][j];
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("bareiss: inexact division");
                rows[i][j] = q;
            }
            rows[i][c] = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

}  // namespace

int rank_exact(const Mat& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    auto rows = integer_rows(M);
    const int C = static_cast<int>(M.cols());
    std::vector<int> col_order(C);
    std::iota(col_order.begin(), col_order.end(), 0);

    // mod-p pre-pass: put the columns that raised the F_p rank first
    if (C > 2 * M.rows() && C > 64) {
        const PrimeField f(1000003);
        FpEchelon ech(f, rows.size());
        std::vector<int> first, rest;
        std::vector<std::uint64_t> col(rows.size());
        for (int j = 0; j < C; ++j) {
            for (std::size_t i = 0; i < rows.size(); ++i)
                col[i] = f.from_rat(Rat(rows[i][j]));
            (ech.add(col) ? first : rest).push_back(j);
        }
        col_order = std::move(first);
        col_order.insert(col_order.end(), rest.begin(), rest.end());
    }
    return bareiss_rank(rows, std::move(col_order));
}

Rat det_bareiss(const Mat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("det_bareiss: matrix not square");
    const int n = static_cast<int>(M.rows());
    if (n == 0) return 1;
    // scale rows to integers, tracking the factor
    auto rows = integer_rows(M);
    Rat scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, Int(M(i, j).get_den()));
        scale *= Rat(l);
    }
    Int prev = 1;
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            std::swap(rows[c], rows[pivot]);
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) {
                Int num = rows[i][j] * rows[c][c] - rows[i][c] * rows[c][j];
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("det_bareiss: inexact division");
                rows[i][j] = q;
            }
            rows[i][c] = 0;
        }
        prev = rows[c][c];
    }
    Rat det(Int(sign) * rows[n - 1][n - 1]);
    return det / scale;
}

// ---- prime-field tools -----------------------------------------------------

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime_u64(prime)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t x, std::uint64_t e) const {
    std::uint64_t r = 1;
    x %= p;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t x) const {
    if (x % p == 0) throw std::invalid_argument("PrimeField: inverse of zero");
    return pow(x, p - 2);
}

std::uint64_t PrimeField::from_rat(const Rat& q) const {
    Int num = q.get_num(), den = q.get_den();
    std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    return mul(n, inv(d));
}

bool FpEchelon::add(std::vector<std::uint64_t> v) {
    if (v.size() != len_) throw std::invalid_argument("FpEchelon: length mismatch");
    for (std::size_t t = 0; t < basis_.size(); ++t) {
        const std::uint64_t c = v[pivots_[t]];
        if (c == 0) continue;
        for (std::size_t i = 0; i < len_; ++i)
            v[i] = f_.sub(v[i], f_.mul(c, basis_[t][i]));
    }
    std::size_t p = len_;
    for (std::size_t i = 0; i < len_; ++i)
        if (v[i] != 0) {
            p = i;
            break;
        }
    if (p == len_) return false;
    const std::uint64_t ip = f_.inv(v[p]);
    for (std::size_t i = 0; i < len_; ++i) v[i] = f_.mul(v[i], ip);
    for (std::size_t t = 0; t < basis_.size(); ++t) {
        const std::uint64_t c = basis_[t][p];
        if (c == 0) continue;
        for (std::size_t i = 0; i < len_; ++i)
            basis_[t][i] = f_.sub(basis_[t][i], f_.mul(c, v[i]));
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

int rank_mod_p(const Mat& M, std::uint64_t p) {
    const PrimeField f(p);
    FpEchelon ech(f, M.rows());
    std::vector<std::uint64_t> col(M.rows());
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
        for (Eigen::Index i = 0; i < M.rows(); ++i) col[i] = f.from_rat(M(i, j));
        ech.add(col);
    }
    return ech.rank();
}

}  // namespace colorlie
