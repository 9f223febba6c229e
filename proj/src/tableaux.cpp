#include "colorlie/tableaux.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace colorlie {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (parts[t] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (t > 0 && parts[t] > parts[t - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (t) os << ',';
        os << parts[t];
    }
    os << ')';
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0 || n > 40) throw std::invalid_argument("partitions_of: need 0 <= n <= 40");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending compositions built largest-part-first
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n == 0) {
        out.emplace_back(std::vector<int>{});  // the empty partition
        return out;
    }
    rec(n, n);
    std::sort(out.begin(), out.end(),
              [](const Partition& x, const Partition& y) { return x.parts < y.parts; });
    return out;
}

Int hook_dim(const Partition& lambda) {
    const int n = lambda.weight();
    // column heights
    const int cols = lambda.parts.empty() ? 0 : lambda.parts[0];
    std::vector<int> height(cols, 0);
    for (int r = 0; r < lambda.rows(); ++r)
        for (int c = 0; c < lambda.parts[r]; ++c) ++height[c];
    Int prod = 1;
    for (int r = 0; r < lambda.rows(); ++r)
        for (int c = 0; c < lambda.parts[r]; ++c) {
            const int hook = (lambda.parts[r] - c) + (height[c] - r) - 1;
            prod *= hook;
        }
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), fact.get_mpz_t(), prod.get_mpz_t());
    if (rem != 0) throw std::logic_error("hook_dim: hook product does not divide n!");
    return q;
}

RectangleBound rectangle_bound(int q, int k) {
    if (q < 1 || k < 1) throw std::invalid_argument("rectangle_bound: q, k >= 1");
    RectangleBound rb{Partition(std::vector<int>(q, 2 * k + 1)), 0, 0, 0.0, false, 0.0};
    rb.n = (2 * k + 1) * q;
    rb.dim = hook_dim(rb.shape);
    const double n = rb.n;
    double fact = 1.0;
    for (int t = 2; t <= q; ++t) fact *= t;
    rb.bound = fact / std::pow(2.0 * M_PI * n, q) * std::pow(static_cast<double>(q), n);
    const double dimd = rb.dim.get_d();
    rb.holds = dimd >= rb.bound;
    rb.root = std::pow(dimd, 1.0 / n);
    return rb;
}

Tableau::Tableau(Partition s, std::vector<std::vector<int>> f)
    : shape(std::move(s)), fill(std::move(f)) {
    if (static_cast<int>(fill.size()) != shape.rows())
        throw std::invalid_argument("tableau: row count mismatch");
    std::vector<char> seen(shape.weight() + 1, 0);
    for (int r = 0; r < shape.rows(); ++r) {
        if (static_cast<int>(fill[r].size()) != shape.parts[r])
            throw std::invalid_argument("tableau: row length mismatch");
        for (int v : fill[r]) {
            if (v < 1 || v > shape.weight() || seen[v])
                throw std::invalid_argument("tableau: filling is not a bijection onto 1..n");
            seen[v] = 1;
        }
    }
}

Tableau Tableau::row_major(const Partition& s) {
    std::vector<std::vector<int>> f;
    int next = 1;
    for (int r = 0; r < s.rows(); ++r) {
        std::vector<int> row(s.parts[r]);
        std::iota(row.begin(), row.end(), next);
        next += s.parts[r];
        f.push_back(std::move(row));
    }
    return Tableau(s, std::move(f));
}

Int standard_tableau_count(const Partition& lambda) {
    const int n = lambda.weight();
    const int rows = lambda.rows();
    std::vector<int> filled(rows, 0);  // boxes already used per row
    Int count = 0;
    std::function<void(int)> rec = [&](int next) {
        if (next > n) {
            ++count;
            return;
        }
        for (int r = 0; r < rows; ++r) {
            if (filled[r] == lambda.parts[r]) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;  // column must grow downward
            ++filled[r];
            rec(next + 1);
            --filled[r];
        }
    };
    rec(1);
    return count;
}

// ---- group algebra -----------------------------------------------------------

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("perm_compose: size mismatch");
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[q[i] - 1];
    return out;
}

int perm_sign(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2) ? -1 : 1;
}

void GroupAlgebraElem::add(const Perm& p, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

GroupAlgebraElem ga_multiply(const GroupAlgebraElem& x, const GroupAlgebraElem& y) {
    GroupAlgebraElem out;
    out.n = x.n;
    for (const auto& [p, cp] : x.terms)
        for (const auto& [q, cq] : y.terms) out.add(perm_compose(p, q), cp * cq);
    return out;
}

GroupAlgebraElem ga_scale(const Rat& c, const GroupAlgebraElem& x) {
    GroupAlgebraElem out;
    out.n = x.n;
    if (c == 0) return out;
    for (const auto& [p, cp] : x.terms) out.terms.emplace(p, c * cp);
    return out;
}

bool ga_equal(const GroupAlgebraElem& x, const GroupAlgebraElem& y) {
    return x.n == y.n && x.terms == y.terms;
}

namespace {

constexpr int kSymmetrizerCap = 8;  // 8! = 40320 terms

// all permutations fixing the given blocks setwise
void block_permutations(const std::vector<std::vector<int>>& blocks, int n,
                        const std::function<void(const Perm&)>& fn) {
    std::vector<std::vector<int>> arranged = blocks;
    std::function<void(std::size_t, Perm&)> rec = [&](std::size_t b, Perm& acc) {
        if (b == blocks.size()) {
            fn(acc);
            return;
        }
        std::vector<int>& arr = arranged[b];
        std::sort(arr.begin(), arr.end());
        do {
            for (std::size_t t = 0; t < arr.size(); ++t) acc[blocks[b][t] - 1] = arr[t];
            rec(b + 1, acc);
        } while (std::next_permutation(arr.begin(), arr.end()));
    };
    Perm acc = perm_identity(n);
    rec(0, acc);
}

}  // namespace

GroupAlgebraElem row_symmetrizer(const Tableau& T) {
    const int n = T.weight();
    if (n > kSymmetrizerCap)
        throw std::invalid_argument("row_symmetrizer: materialization cap n <= 8 exceeded");
    GroupAlgebraElem out;
    out.n = n;
    block_permutations(T.fill, n, [&](const Perm& p) { out.add(p, 1); });
    return out;
}

GroupAlgebraElem column_antisymmetrizer(const Tableau& T) {
    const int n = T.weight();
    if (n > kSymmetrizerCap)
        throw std::invalid_argument("column_antisymmetrizer: materialization cap n <= 8 exceeded");
    std::vector<std::vector<int>> cols;
    const int width = T.shape.parts.empty() ? 0 : T.shape.parts[0];
    for (int c = 0; c < width; ++c) {
        std::vector<int> col;
        for (int r = 0; r < T.shape.rows(); ++r)
            if (c < T.shape.parts[r]) col.push_back(T.fill[r][c]);
        cols.push_back(std::move(col));
    }
    GroupAlgebraElem out;
    out.n = n;
    block_permutations(cols, n, [&](const Perm& p) { out.add(p, perm_sign(p)); });
    return out;
}

MultilinearPoly ga_apply(const GroupAlgebraElem& x, const MultilinearPoly& f) {
    MultilinearPoly out = MultilinearPoly::zero(f.variables());
    for (const auto& [p, c] : x.terms) {
        std::map<int, int> sigma;
        for (std::size_t i = 0; i < p.size(); ++i) sigma[static_cast<int>(i) + 1] = p[i];
        out += c * sn_act(sigma, f);
    }
    return out;
}

MultilinearPoly essential_idempotent_apply(const Tableau& T, const MultilinearPoly& f) {
    return ga_apply(row_symmetrizer(T), ga_apply(column_antisymmetrizer(T), f));
}

}  // namespace colorlie
