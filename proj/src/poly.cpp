#include "colorlie/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "colorlie/algebra.hpp"

namespace colorlie {

namespace {

// walks one subtree of a preorder code, returning the position past it
std::size_t skip_subtree(std::span<const int> code, std::size_t pos) {
    if (pos >= code.size()) throw std::invalid_argument("monomial code truncated");
    if (code[pos] != Monomial::kInternal) return pos + 1;
    pos = skip_subtree(code, pos + 1);
    return skip_subtree(code, pos);
}

}  // namespace

Monomial::Monomial(std::vector<int> code) : code_(std::move(code)) {
    if (skip_subtree(code_, 0) != code_.size())
        throw std::invalid_argument("monomial code is not a single tree");
    std::set<int> seen;
    num_vars_ = 0;
    for (int c : code_) {
        if (c == kInternal) continue;
        if (c < 1) throw std::invalid_argument("variable ids must be >= 1");
        if (!seen.insert(c).second)
            throw std::invalid_argument("monomial is not multilinear: repeated variable");
        ++num_vars_;
    }
}

Monomial Monomial::leaf(int var) { return Monomial(std::vector<int>{var}); }

Monomial Monomial::bracket(const Monomial& l, const Monomial& r) {
    std::vector<int> code;
    code.reserve(l.code_.size() + r.code_.size() + 1);
    code.push_back(kInternal);
    code.insert(code.end(), l.code_.begin(), l.code_.end());
    code.insert(code.end(), r.code_.begin(), r.code_.end());
    return Monomial(std::move(code));
}

Monomial Monomial::left_normed(std::span<const int> word) {
    if (word.empty()) throw std::invalid_argument("left-normed word must be nonempty");
    Monomial m = leaf(word[0]);
    for (std::size_t t = 1; t < word.size(); ++t) m = bracket(m, leaf(word[t]));
    return m;
}

std::vector<int> Monomial::leaf_word() const {
    std::vector<int> w;
    for (int c : code_)
        if (c != kInternal) w.push_back(c);
    return w;
}

std::vector<int> Monomial::variables() const {
    std::vector<int> w = leaf_word();
    std::sort(w.begin(), w.end());
    return w;
}

std::vector<int> Monomial::shape_key() const {
    std::vector<int> k = code_;
    for (int& c : k)
        if (c != kInternal) c = 0;
    return k;
}

bool Monomial::has_left_normed_shape() const {
    // preorder of a left comb: all internal markers first, then the leaves
    const int internal = static_cast<int>(code_.size()) - num_vars_;
    for (int t = 0; t < internal; ++t)
        if (code_[t] != kInternal) return false;
    return true;
}

Monomial Monomial::relabeled(const std::map<int, int>& image) const {
    std::vector<int> code = code_;
    for (int& c : code) {
        if (c == kInternal) continue;
        auto it = image.find(c);
        if (it == image.end()) throw std::invalid_argument("relabeled: variable not in image map");
        c = it->second;
    }
    return Monomial(std::move(code));
}

std::string Monomial::to_string() const {
    // collapse left chains so left-normed monomials print as flat lists
    std::function<void(std::size_t, std::ostringstream&, bool)> rec =
        [&](std::size_t pos, std::ostringstream& os, bool top) {
            if (code_[pos] != kInternal) {
                if (top) os << '(' << code_[pos] << ')';
                else os << code_[pos];
                return;
            }
            std::vector<std::size_t> items;  // left chain, outermost last
            std::size_t p = pos;
            while (code_[p] == kInternal) {
                items.push_back(skip_subtree(code_, p + 1));  // right child position
                p = p + 1;
            }
            os << '(';
            rec(p, os, false);
            for (auto it = items.rbegin(); it != items.rend(); ++it) {
                os << ' ';
                rec(*it, os, false);
            }
            os << ')';
        };
    std::ostringstream os;
    rec(0, os, true);
    return os.str();
}

Monomial Monomial::parse(std::string_view s) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    std::function<Monomial()> item = [&]() -> Monomial {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("monomial parse: unexpected end");
        if (s[pos] == '(') {
            ++pos;
            std::vector<Monomial> items;
            while (true) {
                skip_ws();
                if (pos >= s.size()) throw std::invalid_argument("monomial parse: missing ')'");
                if (s[pos] == ')') {
                    ++pos;
                    break;
                }
                items.push_back(item());
            }
            if (items.empty()) throw std::invalid_argument("monomial parse: empty list");
            Monomial m = items[0];
            for (std::size_t t = 1; t < items.size(); ++t) m = bracket(m, items[t]);
            return m;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[pos])))
            throw std::invalid_argument("monomial parse: expected digit or '('");
        int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return leaf(v);
    };
    Monomial m = item();
    skip_ws();
    if (pos != s.size()) throw std::invalid_argument("monomial parse: trailing characters");
    return m;
}

bool MonomialOrder::operator()(const Monomial& x, const Monomial& y) const {
    auto sx = x.shape_key(), sy = y.shape_key();
    if (sx != sy) return sx < sy;
    return x.leaf_word() < y.leaf_word();
}

// ---- MultilinearPoly -----------------------------------------------------

MultilinearPoly MultilinearPoly::zero(std::vector<int> vars) {
    std::sort(vars.begin(), vars.end());
    MultilinearPoly p;
    p.vars_ = std::move(vars);
    return p;
}

MultilinearPoly MultilinearPoly::from_monomial(const Monomial& m, const Rat& c) {
    MultilinearPoly p;
    p.vars_ = m.variables();
    p.add_term(m, c);
    return p;
}

void MultilinearPoly::add_term(const Monomial& m, const Rat& c) {
    if (vars_.empty() && terms_.empty()) vars_ = m.variables();
    if (m.variables() != vars_)
        throw std::invalid_argument("add_term: monomial variable set differs from polynomial's");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (terms_.empty() && vars_.empty()) vars_ = rhs.vars_;
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultilinearPoly& MultilinearPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

bool operator==(const MultilinearPoly& a, const MultilinearPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string MultilinearPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << rat_to_string(c) << "*" << m.to_string();
        first = false;
    }
    return os.str();
}

// ---- evaluation ----------------------------------------------------------

namespace {

Vec eval_rec(std::span<const int> code, std::size_t& pos, const GradedAlgebra& A,
             const Assignment& e) {
    const int c = code[pos++];
    if (c != Monomial::kInternal) {
        auto it = e.find(c);
        if (it == e.end())
            throw std::invalid_argument("evaluate: no value assigned to variable " +
                                        std::to_string(c));
        if (it->second.size() != A.dim)
            throw std::invalid_argument("evaluate: assigned vector has wrong dimension");
        return it->second;
    }
    Vec l = eval_rec(code, pos, A, e);
    Vec r = eval_rec(code, pos, A, e);
    return multiply(A, l, r);
}

}  // namespace

Vec evaluate(const Monomial& m, const GradedAlgebra& A, const Assignment& e) {
    std::size_t pos = 0;
    return eval_rec(m.code(), pos, A, e);
}

Vec evaluate(const MultilinearPoly& f, const GradedAlgebra& A, const Assignment& e) {
    Vec out = Vec::Zero(A.dim);
    for (const auto& [m, c] : f.terms()) out += c * evaluate(m, A, e);
    return out;
}

void check_homogeneous_assignment(const GradedAlgebra& A, const DegreeMap& degrees,
                                  const Assignment& e) {
    for (const auto& [var, deg] : degrees) {
        auto it = e.find(var);
        if (it == e.end()) continue;
        if (it->second.size() != A.dim)
            throw std::invalid_argument("assignment vector has wrong dimension");
        for (int i = 0; i < A.dim; ++i)
            if (it->second[i] != 0 && !(A.degrees[i] == deg))
                throw std::invalid_argument(
                    "variable " + std::to_string(var) +
                    " is assigned a vector outside its homogeneous component");
    }
}

// ---- S_n action and alternation ------------------------------------------

MultilinearPoly sn_act(const std::map<int, int>& sigma, const MultilinearPoly& f) {
    std::vector<int> image;
    for (int v : f.variables()) {
        auto it = sigma.find(v);
        if (it == sigma.end())
            throw std::invalid_argument("sn_act: permutation does not cover variable " +
                                        std::to_string(v));
        image.push_back(it->second);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        throw std::invalid_argument("sn_act: map is not injective on the variables");
    MultilinearPoly out = MultilinearPoly::zero(image);
    for (const auto& [m, c] : f.terms()) out.add_term(m.relabeled(sigma), c);
    return out;
}

namespace {

int parity_of(std::span<const std::size_t> perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv % 2) ? -1 : 1;
}

}  // namespace

MultilinearPoly alt_on_set(const MultilinearPoly& f, const std::vector<int>& Y) {
    const auto& vars = f.variables();
    for (int y : Y)
        if (!std::binary_search(vars.begin(), vars.end(), y))
            throw std::invalid_argument("alt_on_set: Y is not a subset of the variables");
    if (Y.size() > 8)
        throw std::invalid_argument(
            "alt_on_set: expansion cap exceeded (|Y| > 8); use alt_evaluate");

    std::vector<int> sortedY = Y;
    std::sort(sortedY.begin(), sortedY.end());
    std::vector<std::size_t> idx(sortedY.size());
    std::iota(idx.begin(), idx.end(), 0);

    MultilinearPoly out = MultilinearPoly::zero(vars);
    do {
        std::map<int, int> sigma;
        for (int v : vars) sigma[v] = v;
        for (std::size_t t = 0; t < sortedY.size(); ++t) sigma[sortedY[t]] = sortedY[idx[t]];
        const Rat sgn(parity_of(idx));
        for (const auto& [m, c] : f.terms()) out.add_term(m.relabeled(sigma), sgn * c);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

Vec alt_evaluate(const MultilinearPoly& f, const std::vector<int>& Y, const GradedAlgebra& A,
                 const Assignment& e, const AltEvalOptions& opts) {
    std::vector<int> sortedY = Y;
    std::sort(sortedY.begin(), sortedY.end());

    auto term_value = [&](std::span<const std::size_t> idx) {
        Assignment perm_e = e;
        for (std::size_t t = 0; t < sortedY.size(); ++t)
            perm_e[sortedY[t]] = e.at(sortedY[idx[t]]);
        return (Rat(parity_of(idx)) * evaluate(f, A, perm_e)).eval();
    };

    Vec out = Vec::Zero(A.dim);
    std::vector<std::size_t> idx(sortedY.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (!opts.sampled) {
        do out += term_value(idx);
        while (std::next_permutation(idx.begin(), idx.end()));
        return out;
    }
    std::mt19937_64 rng(opts.seed);
    for (std::size_t s = 0; s < opts.sample_count; ++s) {
        std::iota(idx.begin(), idx.end(), 0);
        for (std::size_t t = idx.size(); t > 1; --t)
            std::swap(idx[t - 1], idx[rng() % t]);
        out += term_value(idx);
    }
    return out;
}

// ---- enumeration ---------------------------------------------------------

namespace {

// all bracketing shapes with n leaves, as shape codes (0 = leaf slot),
// sorted lexicographically
const std::vector<std::vector<int>>& shapes_of(int n) {
    static std::vector<std::vector<std::vector<int>>> cache;
    if (static_cast<int>(cache.size()) > n && !cache[n].empty()) return cache[n];
    if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
    if (n == 1) {
        cache[1] = {{0}};
        return cache[1];
    }
    std::vector<std::vector<int>> out;
    for (int l = 1; l < n; ++l)
        for (const auto& ls : shapes_of(l))
            for (const auto& rs : shapes_of(n - l)) {
                std::vector<int> code;
                code.reserve(ls.size() + rs.size() + 1);
                code.push_back(Monomial::kInternal);
                code.insert(code.end(), ls.begin(), ls.end());
                code.insert(code.end(), rs.begin(), rs.end());
                out.push_back(std::move(code));
            }
    std::sort(out.begin(), out.end());
    cache[n] = std::move(out);
    return cache[n];
}

}  // namespace

void for_each_monomial(int n, MonomialShape shape,
                       const std::function<void(const Monomial&)>& fn) {
    if (n < 1) throw std::invalid_argument("for_each_monomial: n must be >= 1");
    if (shape == MonomialShape::LeftNormedFirstFixed) {
        std::vector<int> rest(n - 1);
        std::iota(rest.begin(), rest.end(), 2);
        do {
            std::vector<int> word;
            word.reserve(n);
            word.push_back(1);
            word.insert(word.end(), rest.begin(), rest.end());
            fn(Monomial::left_normed(word));
        } while (std::next_permutation(rest.begin(), rest.end()));
        return;
    }
    std::vector<int> word(n);
    for (const auto& sc : shapes_of(n)) {
        std::iota(word.begin(), word.end(), 1);
        do {
            std::vector<int> code = sc;
            std::size_t t = 0;
            for (int& c : code)
                if (c == 0) c = word[t++];
            fn(Monomial(std::move(code)));
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

std::vector<Monomial> enumerate_monomials(int n, MonomialShape shape) {
    std::vector<Monomial> out;
    for_each_monomial(n, shape, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

// ---- graded sign calculus --------------------------------------------------

ColorSign color_sign(std::span<const int> word, const DegreeMap& degrees, const Cocycle& s) {
    if (word.empty()) throw std::invalid_argument("color_sign: empty word");
    auto deg = [&](int v) {
        auto it = degrees.find(v);
        if (it == degrees.end())
            throw std::invalid_argument("color_sign: no degree for variable " + std::to_string(v));
        return it->second;
    };
    int sign = 1;
    GroupElement acc = deg(word[0]);
    for (std::size_t t = 1; t < word.size(); ++t) {
        GroupElement g = deg(word[t]);
        sign *= s(acc, g);
        acc = acc * g;
    }
    return {sign, acc};
}

MultilinearPoly tilde_transform(const MultilinearPoly& f, const DegreeMap& degrees,
                                const Cocycle& s) {
    if (f.is_zero()) return f;
    std::optional<int> first;
    MultilinearPoly out = MultilinearPoly::zero(f.variables());
    for (const auto& [m, c] : f.terms()) {
        if (!m.has_left_normed_shape())
            throw std::invalid_argument("tilde_transform: monomial is not left-normed");
        std::vector<int> word = m.leaf_word();
        if (!first) first = word[0];
        if (word[0] != *first)
            throw std::invalid_argument("tilde_transform: terms must share the first variable");
        out.add_term(m, Rat(color_sign(word, degrees, s).sign) * c);
    }
    return out;
}

}  // namespace colorlie
