#include "colorlie/codim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "colorlie/rank.hpp"

namespace colorlie {

long long catalan(int n) {
    long long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

long long monomial_count(int n, MonomialShape shape) {
    if (shape == MonomialShape::LeftNormedFirstFixed) {
        long long f = 1;
        for (int i = 2; i < n; ++i) f *= i;
        return f;
    }
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return catalan(n - 1) * f;
}

Int multinomial4(int n, const std::array<int, 4>& k) {
    Int num;
    mpz_fac_ui(num.get_mpz_t(), n);
    for (int t = 0; t < 4; ++t) {
        Int d;
        mpz_fac_ui(d.get_mpz_t(), k[t]);
        num /= d;
    }
    return num;
}

std::vector<std::array<int, 4>> compositions4(int n) {
    std::vector<std::array<int, 4>> out;
    for (int k1 = 0; k1 <= n; ++k1)
        for (int k2 = 0; k2 + k1 <= n; ++k2)
            for (int k3 = 0; k3 + k2 + k1 <= n; ++k3)
                out.push_back({k1, k2, k3, n - k1 - k2 - k3});
    return out;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

// value of a monomial at a basis tuple when every basis product is a scalar
// times a basis element: c * basis_k, c == 0 meaning zero
struct IdxVal {
    std::int64_t c;
    std::int32_t k;
};

IdxVal eval_idx(std::span<const int> code, std::size_t& pos, const GradedAlgebra& A,
                std::span<const int> var_to_basis) {
    const int c = code[pos++];
    if (c != Monomial::kInternal) return {1, var_to_basis[c - 1]};
    IdxVal l = eval_idx(code, pos, A, var_to_basis);
    IdxVal r = eval_idx(code, pos, A, var_to_basis);
    if (l.c == 0 || r.c == 0) return {0, -1};
    const std::size_t t = static_cast<std::size_t>(l.k) * A.dim + r.k;
    if (A.mono_k[t] < 0) return {0, -1};
    return {l.c * r.c * A.mono_c[t], A.mono_k[t]};
}

Vec eval_dense(std::span<const int> code, std::size_t& pos, const GradedAlgebra& A,
               std::span<const int> var_to_basis) {
    const int c = code[pos++];
    if (c != Monomial::kInternal) return basis_vec(A, var_to_basis[c - 1]);
    Vec l = eval_dense(code, pos, A, var_to_basis);
    Vec r = eval_dense(code, pos, A, var_to_basis);
    return multiply(A, l, r);
}

// structure constants reduced mod p
struct FpAlgebra {
    const GradedAlgebra* A;
    PrimeField f;
    std::vector<std::vector<std::pair<int, std::uint64_t>>> prod;  // [i*dim+j]

    FpAlgebra(const GradedAlgebra& alg, PrimeField field) : A(&alg), f(field) {
        prod.resize(static_cast<std::size_t>(alg.dim) * alg.dim);
        for (int i = 0; i < alg.dim; ++i)
            for (int j = 0; j < alg.dim; ++j)
                for (const auto& [k, c] : alg.prod[i][j])
                    prod[static_cast<std::size_t>(i) * alg.dim + j].emplace_back(k, f.from_rat(c));
    }

    std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& u,
                                   const std::vector<std::uint64_t>& v) const {
        std::vector<std::uint64_t> out(A->dim, 0);
        for (int i = 0; i < A->dim; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < A->dim; ++j) {
                if (v[j] == 0) continue;
                const std::uint64_t uv = f.mul(u[i], v[j]);
                for (const auto& [k, c] : prod[static_cast<std::size_t>(i) * A->dim + j])
                    out[k] = f.add(out[k], f.mul(uv, c));
            }
        }
        return out;
    }
};

std::vector<std::uint64_t> eval_fp(std::span<const int> code, std::size_t& pos,
                                   const FpAlgebra& FA,
                                   const std::vector<std::vector<std::uint64_t>>& assign) {
    const int c = code[pos++];
    if (c != Monomial::kInternal) return assign[c - 1];
    auto l = eval_fp(code, pos, FA, assign);
    auto r = eval_fp(code, pos, FA, assign);
    return FA.mul(l, r);
}

struct Odometer {
    const std::vector<std::vector<int>>* lists;
    std::vector<std::size_t> pos;
    std::vector<int> tuple;
    bool done = false;

    explicit Odometer(const std::vector<std::vector<int>>& l)
        : lists(&l), pos(l.size(), 0), tuple(l.size()) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i].empty()) {
                done = true;
                return;
            }
            tuple[i] = l[i][0];
        }
    }

    void advance() {
        for (std::size_t i = lists->size(); i-- > 0;) {
            if (++pos[i] < (*lists)[i].size()) {
                tuple[i] = (*lists)[i][pos[i]];
                return;
            }
            pos[i] = 0;
            tuple[i] = (*lists)[i][0];
        }
        done = true;
    }
};

struct RankResult {
    long long rank = 0;
    long long columns_processed = 0;
};

bool fits_fast_path(const GradedAlgebra& A, int n, long long num_tuples) {
    if (!A.monomial_products) return false;
    std::int64_t maxc = 1;
    for (std::int64_t c : A.mono_c) maxc = std::max(maxc, std::abs(c));
    long double v = std::pow(static_cast<long double>(maxc), n - 1);
    if (v > 1e9L) return false;
    return static_cast<long double>(num_tuples) * v * v < 4.0e18L;
}

// ---- exact engine ----------------------------------------------------------

RankResult exact_rank(const GradedAlgebra& A, const std::vector<Monomial>& rows,
                      const std::vector<std::vector<int>>& lists, const CodimOptions& opts) {
    const int R = static_cast<int>(rows.size());
    const int n = static_cast<int>(lists.size());

    long long num_tuples = 1;
    for (const auto& l : lists) {
        num_tuples *= static_cast<long long>(l.size());
        if (num_tuples == 0) break;
        if (num_tuples > opts.max_coord_columns) break;
    }
    const long long coord_columns = num_tuples * A.dim;
    if (num_tuples > opts.max_coord_columns || coord_columns > opts.max_coord_columns)
        throw GuardExceeded("exact mode needs " + std::to_string(coord_columns) +
                            " coordinate columns; guard is " +
                            std::to_string(opts.max_coord_columns));
    if (num_tuples == 0) return {0, 0};

    const bool fast = fits_fast_path(A, n, num_tuples);
    bool use_gram = coord_columns > 30000 || R > 400;
    if (opts.strategy == CodimOptions::ExactStrategy::DirectEchelon) use_gram = false;
    if (opts.strategy == CodimOptions::ExactStrategy::Gram) use_gram = true;

    std::vector<std::span<const int>> codes;
    codes.reserve(rows.size());
    for (const auto& m : rows) codes.emplace_back(m.code());

    RankResult res;

    if (!use_gram) {
        RationalEchelon ech(R);
        std::vector<Vec> values(R);
        std::vector<IdxVal> ivals(R);
        for (Odometer od(lists); !od.done; od.advance()) {
            if (fast) {
                for (int r = 0; r < R; ++r) {
                    std::size_t p = 0;
                    ivals[r] = eval_idx(codes[r], p, A, od.tuple);
                }
            } else {
                for (int r = 0; r < R; ++r) {
                    std::size_t p = 0;
                    values[r] = eval_dense(codes[r], p, A, od.tuple);
                }
            }
            for (int k = 0; k < A.dim; ++k) {
                ++res.columns_processed;
                Vec col = Vec::Zero(R);
                bool nonzero = false;
                for (int r = 0; r < R; ++r) {
                    if (fast) {
                        if (ivals[r].c != 0 && ivals[r].k == k) {
                            col[r] = ivals[r].c;
                            nonzero = true;
                        }
                    } else if (values[r][k] != 0) {
                        col[r] = values[r][k];
                        nonzero = true;
                    }
                }
                if (nonzero) ech.add(std::move(col));
            }
            if (ech.rank() == R) break;
        }
        res.rank = ech.rank();
        return res;
    }

    // Gram route: rank(M M^T) = rank(M) over Q; streams the columns into an
    // R x R matrix instead of reducing each one.
    if (fast) {
        std::vector<std::int64_t> G(static_cast<std::size_t>(R) * R, 0);
        std::vector<std::vector<std::pair<int, std::int64_t>>> buckets(A.dim);
        std::vector<IdxVal> ivals(R);
        for (Odometer od(lists); !od.done; od.advance()) {
            for (auto& b : buckets) b.clear();
            for (int r = 0; r < R; ++r) {
                std::size_t p = 0;
                ivals[r] = eval_idx(codes[r], p, A, od.tuple);
                if (ivals[r].c != 0) buckets[ivals[r].k].emplace_back(r, ivals[r].c);
            }
            res.columns_processed += A.dim;
            for (const auto& bucket : buckets)
                for (std::size_t s = 0; s < bucket.size(); ++s)
                    for (std::size_t t = s; t < bucket.size(); ++t)
                        G[static_cast<std::size_t>(bucket[s].first) * R + bucket[t].first] +=
                            bucket[s].second * bucket[t].second;
        }
        if (R <= 400) {
            Mat GM(R, R);
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < R; ++j)
                    GM(i, j) = i <= j ? Rat(static_cast<long>(G[static_cast<std::size_t>(i) * R + j]))
                                      : Rat(static_cast<long>(G[static_cast<std::size_t>(j) * R + i]));
            res.rank = rank_exact(GM);
        } else {
            RationalEchelon ech(R);
            Vec row(R);
            for (int i = 0; i < R; ++i) {
                for (int j = 0; j < R; ++j)
                    row[j] = Rat(static_cast<long>(
                        i <= j ? G[static_cast<std::size_t>(i) * R + j]
                               : G[static_cast<std::size_t>(j) * R + i]));
                ech.add(row);
                if (ech.rank() == R) break;
            }
            res.rank = ech.rank();
        }
        return res;
    }

    Mat G = Mat::Zero(R, R);
    std::vector<Vec> values(R);
    std::vector<std::vector<std::pair<int, Rat>>> buckets(A.dim);
    for (Odometer od(lists); !od.done; od.advance()) {
        for (auto& b : buckets) b.clear();
        for (int r = 0; r < R; ++r) {
            std::size_t p = 0;
            values[r] = eval_dense(codes[r], p, A, od.tuple);
            for (int k = 0; k < A.dim; ++k)
                if (values[r][k] != 0) buckets[k].emplace_back(r, values[r][k]);
        }
        res.columns_processed += A.dim;
        for (const auto& bucket : buckets)
            for (std::size_t s = 0; s < bucket.size(); ++s)
                for (std::size_t t = s; t < bucket.size(); ++t) {
                    Rat pr = bucket[s].second * bucket[t].second;
                    G(bucket[s].first, bucket[t].first) += pr;
                    if (s != t) G(bucket[t].first, bucket[s].first) += pr;
                }
    }
    // mirror the upper triangle accumulated above
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < i; ++j) G(i, j) = G(j, i);
    res.rank = rank_exact(G);
    return res;
}

// ---- randomized engine -------------------------------------------------------

RankResult randomized_rank(const GradedAlgebra& A, const std::vector<Monomial>& rows,
                           const std::vector<std::vector<int>>& lists,
                           const CodimOptions& opts) {
    const int R = static_cast<int>(rows.size());
    const int n = static_cast<int>(lists.size());
    if (opts.primes.empty()) throw std::invalid_argument("randomized mode needs primes");
    for (std::uint64_t p : opts.primes) {
        if (p <= 1'000'000) throw std::invalid_argument("primes must exceed 10^6");
        if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    }
    for (const auto& l : lists)
        if (l.empty()) return {0, 0};

    std::vector<std::span<const int>> codes;
    for (const auto& m : rows) codes.emplace_back(m.code());

    RankResult res;
    for (std::uint64_t p : opts.primes) {
        const PrimeField f(p);
        const FpAlgebra FA(A, f);
        for (int sidx = 0; sidx < opts.num_seeds; ++sidx) {
            std::mt19937_64 rng(mix64(mix64(opts.seed ^ p) + static_cast<std::uint64_t>(sidx)));
            FpEchelon ech(f, R);
            int stable = 0, last_rank = 0, in_batch = 0;
            long long cols = 0;
            std::vector<std::vector<std::uint64_t>> assign(n,
                                                           std::vector<std::uint64_t>(A.dim, 0));
            std::vector<std::uint64_t> col(R);
            bool done = false;
            while (!done) {
                for (int v = 0; v < n; ++v) {
                    std::fill(assign[v].begin(), assign[v].end(), 0);
                    for (int idx : lists[v]) assign[v][idx] = uniform_below(rng, p);
                }
                std::vector<std::vector<std::uint64_t>> values(R);
                for (int r = 0; r < R; ++r) {
                    std::size_t pos = 0;
                    values[r] = eval_fp(codes[r], pos, FA, assign);
                }
                for (int k = 0; k < A.dim && !done; ++k) {
                    for (int r = 0; r < R; ++r) col[r] = values[r][k];
                    ech.add(col);
                    ++cols;
                    if (++in_batch == opts.batch_columns) {
                        in_batch = 0;
                        if (ech.rank() == last_rank) {
                            if (++stable >= opts.stabilization_window) done = true;
                        } else {
                            stable = 0;
                            last_rank = ech.rank();
                        }
                    }
                    if (ech.rank() == R) done = true;
                }
            }
            res.rank = std::max<long long>(res.rank, ech.rank());
            res.columns_processed += cols;
        }
    }
    return res;
}

// ---- shared driver -----------------------------------------------------------

void check_invariants(const CodimReport& rep, const GradedAlgebra& A, bool rank_report) {
    if (rank_report && rep.value > rep.rows)
        throw std::logic_error("codim report violates value <= rows");
    Int bound = 1;
    for (int i = 0; i <= rep.n; ++i) bound *= A.dim;
    if (Int(static_cast<long>(rep.value)) > bound)
        throw std::logic_error("codim report violates value <= dim^(n+1)");
}

CodimReport run_codim(const GradedAlgebra& A, int n, MonomialShape shape,
                      const std::vector<std::vector<int>>& lists, const CodimOptions& opts,
                      std::optional<std::array<int, 4>> key) {
    if (n < 1) throw std::invalid_argument("codim: n must be >= 1");
    if (n > (shape == MonomialShape::AllBracketings ? 14 : 20))
        throw GuardExceeded("row count overflows machine integers at n = " + std::to_string(n));
    const long long row_count = monomial_count(n, shape);
    if (row_count > opts.max_rows)
        throw GuardExceeded("row set needs " + std::to_string(row_count) + " monomials; guard is " +
                            std::to_string(opts.max_rows));
    const std::vector<Monomial> rows = enumerate_monomials(n, shape);

    CodimReport rep;
    rep.algebra = A.name;
    rep.n = n;
    rep.row_shape =
        shape == MonomialShape::AllBracketings ? "all-bracketings" : "left-normed-first-fixed";
    rep.rows = row_count;
    rep.seed = opts.seed;
    rep.graded_key = key;
    if (opts.mode == CodimOptions::Mode::Exact) {
        rep.mode = "exact-full-basis";
        rep.status = "exact";
        rep.stabilization_window = 0;
        auto r = exact_rank(A, rows, lists, opts);
        rep.value = r.rank;
        rep.columns_processed = r.columns_processed;
    } else {
        rep.mode = "randomized";
        rep.status = "lower-bound-whp";
        rep.primes = opts.primes;
        rep.stabilization_window = opts.stabilization_window;
        auto r = randomized_rank(A, rows, lists, opts);
        rep.value = r.rank;
        rep.columns_processed = r.columns_processed;
    }
    check_invariants(rep, A, true);
    return rep;
}

}  // namespace

CodimReport codim_plain(const GradedAlgebra& A, int n, const CodimOptions& opts) {
    std::vector<int> all(A.dim);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> lists(n, all);
    return run_codim(A, n, MonomialShape::AllBracketings, lists, opts, std::nullopt);
}

CodimReport codim_lie(const GradedAlgebra& B, int n, const CodimOptions& opts) {
    if (!B.trivially_graded() || !check_color_axioms(B, SignTable::ones()).ok())
        throw std::invalid_argument("codim_lie: input fails the Lie axioms");
    std::vector<int> all(B.dim);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> lists(n, all);
    CodimReport rep = run_codim(B, n, MonomialShape::LeftNormedFirstFixed, lists, opts, std::nullopt);
    return rep;
}

CodimReport codim_graded_component(const GradedAlgebra& L, const std::array<int, 4>& key,
                                   const CodimOptions& opts, MonomialShape row_shape) {
    int n = 0;
    for (int t = 0; t < 4; ++t) {
        if (key[t] < 0) throw std::invalid_argument("graded key must be nonnegative");
        n += key[t];
    }
    if (n < 1) throw std::invalid_argument("graded key must sum to n >= 1");
    std::vector<std::vector<int>> lists;
    for (int t = 0; t < 4; ++t) {
        auto basis = L.basis_of_degree(GroupElement::from_index(t));
        for (int c = 0; c < key[t]; ++c) lists.push_back(basis);
    }
    return run_codim(L, n, row_shape, lists, opts, key);
}

CodimReport codim_graded_total(const GradedAlgebra& L, int n, const CodimOptions& opts) {
    if (n < 1) throw std::invalid_argument("codim_graded_total: n must be >= 1");
    CodimReport rep;
    rep.algebra = L.name;
    rep.n = n;
    rep.row_shape = "left-normed-first-fixed";
    rep.seed = opts.seed;
    rep.mode = opts.mode == CodimOptions::Mode::Exact ? "exact-full-basis" : "randomized";
    rep.status = opts.mode == CodimOptions::Mode::Exact ? "exact" : "lower-bound-whp";
    if (opts.mode == CodimOptions::Mode::Randomized) {
        rep.primes = opts.primes;
        rep.stabilization_window = opts.stabilization_window;
    }
    Int total = 0;
    Int total_rows = 0;
    for (const auto& key : compositions4(n)) {
        CodimReport comp = codim_graded_component(L, key, opts);
        const Int weight = multinomial4(n, key);
        total += weight * Int(static_cast<long>(comp.value));
        total_rows += weight * Int(static_cast<long>(comp.rows));
        rep.columns_processed += comp.columns_processed;
    }
    if (!total.fits_slong_p())
        throw GuardExceeded("graded total does not fit in a machine integer");
    rep.value = total.get_si();
    // row space of the full graded multilinear component, counted with
    // multiplicities
    rep.rows = total_rows.fits_slong_p() ? total_rows.get_si() : -1;
    check_invariants(rep, L, false);
    return rep;
}

std::vector<TrendRow> exponent_trend(const GradedAlgebra& A, int n_max, const CodimOptions& opts) {
    if (n_max < 1) throw std::invalid_argument("exponent_trend: n_max must be >= 1");
    std::vector<TrendRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        CodimReport rep = codim_plain(A, n, opts);
        TrendRow tr;
        tr.n = n;
        tr.c_n = rep.value;
        tr.root = std::pow(static_cast<double>(rep.value), 1.0 / n);
        rows.push_back(tr);
    }
    for (std::size_t t = 0; t + 1 < rows.size(); ++t) {
        if (rows[t].c_n > 0) {
            rows[t].ratio = static_cast<double>(rows[t + 1].c_n) / rows[t].c_n;
            rows[t].has_ratio = true;
        }
    }
    return rows;
}

}  // namespace colorlie
