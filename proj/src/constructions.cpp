#include "colorlie/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "colorlie/rank.hpp"

namespace colorlie {

Vec random_small_vec(int dim, std::mt19937_64& rng, int span) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i)
        v[i] = Rat(static_cast<long>(rng() % (2 * span + 1)) - span);
    return v;
}

// ---- witness search --------------------------------------------------------

namespace {

// word of the interleaved shape for block sizes t_1..t_d (+ trailing letter);
// returns (word, y ids, x ids), variables numbered 1.. in word order
struct ShapeWord {
    std::vector<int> word;
    std::vector<int> ys;
    std::vector<int> xs;
};

ShapeWord shape_word(const std::vector<int>& t) {
    ShapeWord sw;
    int next = 1;
    for (std::size_t blk = 0; blk < t.size(); ++blk) {
        for (int c = 0; c < t[blk]; ++c) {
            sw.word.push_back(next);
            sw.xs.push_back(next++);
        }
        sw.word.push_back(next);
        sw.ys.push_back(next++);
    }
    sw.word.push_back(next);
    sw.xs.push_back(next++);
    return sw;
}

// block-size vectors with all entries positive and given total surplus,
// enumerated by surplus then lexicographically
std::vector<std::vector<int>> block_shapes(int d, int max_surplus) {
    std::vector<std::vector<int>> out;
    for (int surplus = 0; surplus <= max_surplus; ++surplus) {
        std::vector<int> t(d, 1);
        std::function<void(int, int)> rec = [&](int idx, int rest) {
            if (idx == d) {
                if (rest == 0) out.push_back(t);
                return;
            }
            for (int add = 0; add <= rest; ++add) {
                t[idx] = 1 + add;
                rec(idx + 1, rest - add);
            }
            t[idx] = 1;
        };
        rec(0, surplus);
    }
    return out;
}

}  // namespace

WitnessSearchResult find_alternating_nonidentity(const GradedAlgebra& B, long long trials,
                                                 std::uint64_t seed) {
    if (B.dim > 8)
        throw std::invalid_argument("find_alternating_nonidentity: dim B must be <= 8");
    const int d = B.dim;
    WitnessSearchResult res;
    std::mt19937_64 rng(seed);

    for (const auto& t : block_shapes(d, 2)) {
        ShapeWord sw = shape_word(t);
        const Monomial m = Monomial::left_normed(sw.word);
        const MultilinearPoly f = MultilinearPoly::from_monomial(m);
        for (long long trial = 0; trial < trials / 4 + 1; ++trial) {
            if (res.trials_used >= trials) return res;
            ++res.trials_used;
            Assignment e;
            // the alternating variables take the basis in order; alternation
            // covers their permutations, so only the x-values are sampled
            for (int q = 0; q < d; ++q) e[sw.ys[q]] = basis_vec(B, q);
            for (int x : sw.xs) e[x] = basis_vec(B, static_cast<int>(rng() % d));
            Vec val = alt_evaluate(f, sw.ys, B, e);
            if (!is_zero(val)) {
                WitnessPolynomial w;
                w.algebra = B.name;
                w.poly = f;
                w.alt_set = sw.ys;
                w.aux_vars = sw.xs;
                w.evaluation = std::move(e);
                w.alt_value = std::move(val);
                res.found = true;
                res.block_sizes = t;
                res.witness = std::move(w);
                return res;
            }
        }
    }
    return res;
}

// ---- lift to L --------------------------------------------------------------

namespace {

// E-factors along the word so the matrix chain multiplies to E_11: entry and
// exit link indices are forced by the y-slots (row i, column j).
std::vector<Mat2> word_matrix_factors(const std::vector<int>& word,
                                      const std::vector<int>& y_vars, int i, int j) {
    const std::size_t len = word.size();
    std::vector<bool> is_y(len, false);
    for (std::size_t p = 0; p < len; ++p)
        is_y[p] = std::find(y_vars.begin(), y_vars.end(), word[p]) != y_vars.end();

    auto unit = [](int r, int c) {
        Mat2 m = Mat2::Zero();
        m(r - 1, c - 1) = 1;
        return m;
    };

    std::vector<Mat2> out(len);
    int link = 1;  // column of the previous factor; the chain starts at row 1
    for (std::size_t p = 0; p < len; ++p) {
        if (is_y[p]) {
            out[p] = unit(i, j);
            link = j;
            continue;
        }
        // next boundary: the following y forces column i, the word end
        // forces column 1
        std::size_t q = p;
        while (q < len && !is_y[q]) ++q;
        const int exit = q < len ? i : 1;
        for (; p < q; ++p) {
            const int col = (p + 1 == q) ? exit : 1;
            out[p] = unit(link, col);
            link = col;
        }
        --p;  // outer loop increments past the run
    }
    return out;
}

Vec tensor_vec(const GradedAlgebra& L, const Eigen::Matrix<Rat, 4, 1>& gcoeffs, const Vec& b) {
    const int dB = L.dim / 4;
    Vec v = Vec::Zero(L.dim);
    for (int g = 0; g < 4; ++g) {
        if (gcoeffs[g] == 0) continue;
        for (int t = 0; t < dB; ++t) v[g * dB + t] = gcoeffs[g] * b[t];
    }
    return v;
}

}  // namespace

LiftRecord lift_to_L(const WitnessPolynomial& wB, const GradedAlgebra& L,
                     const GradedAlgebra& B, const Cocycle& s, std::uint64_t seed,
                     long long cross_samples) {
    if (L.dim != 4 * B.dim)
        throw std::invalid_argument("lift_to_L: dim L must be 4 dim B");
    if (!group_ring_matrix_check(s).all_ok)
        throw std::invalid_argument(
            "lift_to_L: cocycle does not realize the matrix-algebra identification");

    const Monomial& base = wB.poly.terms().begin()->first;
    const std::vector<int> word = base.leaf_word();
    const int stride = *std::max_element(word.begin(), word.end());
    const std::array<std::pair<int, int>, 4> units = {{{1, 1}, {1, 2}, {2, 1}, {2, 2}}};

    LiftRecord rec;
    std::mt19937_64 rng(seed);

    // renamed copies and their matrix-unit evaluations
    std::array<std::vector<int>, 4> copy_words;
    for (int c = 0; c < 4; ++c) {
        std::map<int, int> ren;
        for (int v : base.variables()) ren[v] = v + c * stride;
        Monomial mc = base.relabeled(ren);
        rec.copies[c] = MultilinearPoly::from_monomial(mc);
        copy_words[c] = mc.leaf_word();
        for (int y : wB.alt_set) rec.copy_y_vars[c].push_back(y + c * stride);

        auto factors = word_matrix_factors(word, wB.alt_set, units[c].first, units[c].second);
        for (std::size_t p = 0; p < word.size(); ++p) {
            const Vec& bval = wB.evaluation.at(word[p]);
            rec.phi0[word[p] + c * stride] =
                tensor_vec(L, mat2_group_coeffs(factors[p]), bval);
        }
    }

    auto copy_value = [&](int c, const Assignment& e) {
        return alt_evaluate(rec.copies[c], rec.copy_y_vars[c], L, e);
    };

    // connector escalation: r = 0 first, then one homogeneous connector per
    // gap, re-drawn until the product is nonzero
    int connector_base = 4 * stride;
    rec.connector_vars.assign(4, {});
    const int kMaxAttempts = 64;
    for (int attempt = 0; attempt <= kMaxAttempts; ++attempt) {
        Assignment phi = rec.phi0;
        std::vector<std::vector<int>> connectors(4);
        if (attempt > 0) {
            int next = connector_base + 1;
            for (int gap = 0; gap < 3; ++gap) {
                connectors[gap].push_back(next);
                GroupElement g = (rng() % 2) ? GroupElement::e() : GroupElement::a();
                Vec u = Vec::Zero(B.dim);
                u[static_cast<int>(rng() % B.dim)] = 1;
                Eigen::Matrix<Rat, 4, 1> gc = Eigen::Matrix<Rat, 4, 1>::Zero();
                gc[g.index()] = 1;
                phi[next] = tensor_vec(L, gc, u);
                ++next;
            }
        }
        Vec acc = copy_value(0, phi);
        for (int c = 1; c < 4; ++c) {
            for (int z : connectors[c - 1]) acc = multiply(L, acc, phi.at(z));
            acc = multiply(L, acc, copy_value(c, phi));
        }
        for (int z : connectors[3]) acc = multiply(L, acc, phi.at(z));
        if (!is_zero(acc)) {
            rec.nonzero = true;
            rec.value = acc;
            rec.connector_attempts = attempt;
            rec.connector_vars = connectors;
            rec.phi0 = std::move(phi);
            break;
        }
    }
    if (!rec.nonzero) return rec;

    // composed monomial H
    {
        Monomial H = rec.copies[0].terms().begin()->first;
        for (int c = 1; c < 4; ++c) {
            for (int z : rec.connector_vars[c - 1]) H = Monomial::bracket(H, Monomial::leaf(z));
            H = Monomial::bracket(H, rec.copies[c].terms().begin()->first);
        }
        for (int z : rec.connector_vars[3]) H = Monomial::bracket(H, Monomial::leaf(z));
        rec.composed = H;
    }

    // sampled check: cross-block permutations of the 4d alternated variables
    // vanish term by term at phi0
    std::vector<int> slots;  // all y variables in word order
    for (int c = 0; c < 4; ++c)
        slots.insert(slots.end(), rec.copy_y_vars[c].begin(), rec.copy_y_vars[c].end());
    const std::size_t ny = slots.size();
    const std::size_t block = wB.alt_set.size();

    std::vector<std::size_t> perm(ny);
    for (long long t = 0; t < cross_samples; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t u = ny; u > 1; --u) std::swap(perm[u - 1], perm[rng() % u]);
        bool block_preserving = true;
        for (std::size_t u = 0; u < ny && block_preserving; ++u)
            if (perm[u] / block != u / block) block_preserving = false;
        if (block_preserving) continue;
        ++rec.cross_samples;

        Assignment e = rec.phi0;
        for (std::size_t u = 0; u < ny; ++u) e[slots[u]] = rec.phi0.at(slots[perm[u]]);
        Vec acc = evaluate(rec.copies[0], L, e);
        for (int c = 1; c < 4; ++c) {
            for (int z : rec.connector_vars[c - 1]) acc = multiply(L, acc, e.at(z));
            acc = multiply(L, acc, evaluate(rec.copies[c], L, e));
        }
        for (int z : rec.connector_vars[3]) acc = multiply(L, acc, e.at(z));
        if (!is_zero(acc)) ++rec.cross_nonzero;
    }
    return rec;
}

// ---- bracket insertion and trace extraction ----------------------------------

MultilinearPoly insert_bracket_sum(const MultilinearPoly& f, const std::vector<int>& X, int v,
                                   int z) {
    const auto& vars = f.variables();
    if (std::binary_search(vars.begin(), vars.end(), v) ||
        std::binary_search(vars.begin(), vars.end(), z) || v == z)
        throw std::invalid_argument("insert_bracket_sum: v, z must be fresh variables");
    for (int x : X)
        if (!std::binary_search(vars.begin(), vars.end(), x))
            throw std::invalid_argument("insert_bracket_sum: X must be variables of f");

    std::vector<int> new_vars = vars;
    new_vars.push_back(v);
    new_vars.push_back(z);
    MultilinearPoly out = MultilinearPoly::zero(new_vars);
    for (const auto& [m, c] : f.terms()) {
        const auto& code = m.code();
        for (int x : X) {
            std::vector<int> nc;
            nc.reserve(code.size() + 4);
            for (int cc : code) {
                if (cc == x) {
                    // [x, v, z]
                    nc.push_back(Monomial::kInternal);
                    nc.push_back(Monomial::kInternal);
                    nc.push_back(x);
                    nc.push_back(v);
                    nc.push_back(z);
                } else {
                    nc.push_back(cc);
                }
            }
            out.add_term(Monomial(std::move(nc)), c);
        }
    }
    return out;
}

TraceExtractRecord trace_extract(const MultilinearPoly& f, const std::vector<int>& X,
                                 const std::vector<std::pair<Vec, Vec>>& pair_values,
                                 const GradedAlgebra& A, const Assignment& e) {
    if (static_cast<int>(X.size()) != A.dim)
        throw std::invalid_argument("trace_extract: |X| must equal dim A");
    int next = f.variables().back() + 1;
    MultilinearPoly g = f;
    Assignment ge = e;
    TraceExtractRecord rec;
    for (const auto& [vbar, zbar] : pair_values) {
        const int v = next++, z = next++;
        g = insert_bracket_sum(g, X, v, z);
        ge[v] = vbar;
        ge[z] = zbar;
        rec.traces.push_back(killing_value(A, vbar, zbar));
    }
    rec.lhs = evaluate(g, A, ge);
    Rat factor = 1;
    for (const Rat& t : rec.traces) factor *= t;
    rec.rhs = factor * evaluate(f, A, e);
    rec.equal = is_zero((rec.lhs - rec.rhs).eval());
    return rec;
}

// ---- Proposition 1 -----------------------------------------------------------

namespace {

// dense operator on the q-fold tensor power of A, indexed by basis tuples
struct TensorOp {
    int dim, q;
    long size;
    Mat m;  // size x size

    TensorOp(int dim_, int q_) : dim(dim_), q(q_) {
        size = 1;
        for (int t = 0; t < q; ++t) size *= dim;
        m = Mat::Zero(size, size);
    }
};

// sum over slots of applying the linear map op (dim x dim) to one slot
TensorOp slot_sum_operator(const Mat& op, int dim, int q) {
    TensorOp D(dim, q);
    std::vector<long> stride(q);
    long s = 1;
    for (int t = q - 1; t >= 0; --t) {
        stride[t] = s;
        s *= dim;
    }
    for (long b = 0; b < D.size; ++b) {
        for (int slot = 0; slot < q; ++slot) {
            const int bi = static_cast<int>((b / stride[slot]) % dim);
            const long base = b - bi * stride[slot];
            for (int mo = 0; mo < dim; ++mo) {
                if (op(mo, bi) == 0) continue;
                D.m(base + mo * stride[slot], b) += op(mo, bi);
            }
        }
    }
    return D;
}

}  // namespace

DeterminantIdentityRecord determinant_identity_check(const MultilinearPoly& f, const std::vector<int>& X,
                                    const GradedAlgebra& A, int k, std::uint64_t seed) {
    const int q = static_cast<int>(X.size());
    if (q != A.dim) throw std::invalid_argument("determinant_identity_check: |X| must equal dim A");
    if (q > 4) throw std::invalid_argument("determinant_identity_check: size guard q <= 4");
    if (k < 1) throw std::invalid_argument("determinant_identity_check: k >= 1");

    DeterminantIdentityRecord rec;
    rec.k = k;
    rec.num_aux = f.num_vars() - q;
    std::mt19937_64 rng(seed);

    // seeded random evaluation of the x's, the auxiliaries, and k sets of q
    // (v, z) pairs
    Assignment e;
    for (int v : f.variables()) e[v] = random_small_vec(A.dim, rng);
    std::vector<std::vector<Vec>> vs(k, std::vector<Vec>(q)), zs(k, std::vector<Vec>(q));
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < q; ++t) {
            vs[s][t] = random_small_vec(A.dim, rng);
            zs[s][t] = random_small_vec(A.dim, rng);
        }

    long tsize = 1;
    for (int t = 0; t < q; ++t) tsize *= A.dim;

    // values of f at every basis tuple in the X slots (auxiliaries fixed)
    auto f_table = [&](const Assignment& base) {
        std::vector<Vec> table(tsize);
        std::vector<long> stride(q);
        long s = 1;
        for (int t = q - 1; t >= 0; --t) {
            stride[t] = s;
            s *= A.dim;
        }
        Assignment cur = base;
        for (long b = 0; b < tsize; ++b) {
            for (int t = 0; t < q; ++t)
                cur[X[t]] = basis_vec(A, static_cast<int>((b / stride[t]) % A.dim));
            table[b] = evaluate(f, A, cur);
        }
        return table;
    };

    auto parity = [](const std::vector<int>& p) {
        int sg = 1;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                if (p[a] > p[b]) sg = -sg;
        return sg;
    };

    // phi(g_k) via multilinearity of f in the X slots: per level, the q
    // nested insertion sums act on the table of basis-tuple values, and the
    // 1/q!-averaged double alternation sums those actions over (sigma, tau)
    auto run = [&](const Assignment& base, const std::vector<std::vector<Vec>>& vsets,
                   const std::vector<std::vector<Vec>>& zsets) {
        std::vector<Vec> G = f_table(base);
        const int levels = static_cast<int>(vsets.size());
        for (int s = 0; s < levels; ++s) {
            // A_{ij}(u) = [[u, v_i], z_j] = ad(z_j) ad(v_i) u, summed over the
            // X slots of the tensor power
            std::vector<std::vector<Mat>> D(q, std::vector<Mat>(q));
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j)
                    D[i][j] = slot_sum_operator(
                                  (ad_matrix(A, zsets[s][j]) * ad_matrix(A, vsets[s][i])).eval(),
                                  A.dim, q)
                                  .m;

            auto apply_transposed = [&](const Mat& M, const std::vector<Vec>& in) {
                std::vector<Vec> out(tsize, Vec::Zero(A.dim));
                for (long col = 0; col < tsize; ++col)
                    for (long row = 0; row < tsize; ++row)
                        if (M(row, col) != 0) out[col] += M(row, col) * in[row];
                return out;
            };

            std::vector<Vec> next(tsize, Vec::Zero(A.dim));
            std::vector<int> sigma(q), tau(q);
            std::iota(sigma.begin(), sigma.end(), 0);
            do {
                const int ssign = parity(sigma);
                std::iota(tau.begin(), tau.end(), 0);
                do {
                    const int sgn = ssign * parity(tau);
                    // value table of the q-fold insertion for this (sigma, tau)
                    std::vector<Vec> H = G;
                    for (int t = 0; t < q; ++t) H = apply_transposed(D[sigma[t]][tau[t]], H);
                    for (long b = 0; b < tsize; ++b) next[b] += Rat(sgn) * H[b];
                } while (std::next_permutation(tau.begin(), tau.end()));
            } while (std::next_permutation(sigma.begin(), sigma.end()));
            Rat fact = 1;
            for (int t = 2; t <= q; ++t) fact *= t;
            for (long b = 0; b < tsize; ++b) next[b] /= fact;
            G = std::move(next);
        }
        // contract with the actual x values
        Vec out = Vec::Zero(A.dim);
        std::vector<long> stride(q);
        long s2 = 1;
        for (int t = q - 1; t >= 0; --t) {
            stride[t] = s2;
            s2 *= A.dim;
        }
        for (long b = 0; b < tsize; ++b) {
            Rat coef = 1;
            for (int t = 0; t < q; ++t)
                coef *= base.at(X[t])[static_cast<int>((b / stride[t]) % A.dim)];
            if (coef != 0) out += coef * G[b];
        }
        return out;
    };

    rec.lhs = run(e, vs, zs);

    Rat detprod = 1;
    for (int s = 0; s < k; ++s) {
        Mat rho(q, q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) rho(i, j) = killing_value(A, vs[s][i], zs[s][j]);
        Rat det = det_bareiss(rho);
        rec.dets.push_back(det);
        detprod *= det;
    }
    rec.rhs = detprod * evaluate(f, A, e);
    rec.equal = is_zero((rec.lhs - rec.rhs).eval());

    // alternation: a repeated vector inside any of the 2k+1 sets kills the value
    rec.alternating_ok = true;
    {
        Assignment e2 = e;
        e2[X[1]] = e2[X[0]];
        if (!is_zero(run(e2, vs, zs))) rec.alternating_ok = false;
    }
    for (int s = 0; s < k && rec.alternating_ok; ++s) {
        auto vs2 = vs;
        vs2[s][1] = vs2[s][0];
        if (!is_zero(run(e, vs2, zs))) rec.alternating_ok = false;
        auto zs2 = zs;
        zs2[s][1] = zs2[s][0];
        if (!is_zero(run(e, vs, zs2))) rec.alternating_ok = false;
    }
    return rec;
}

}  // namespace colorlie
