#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colorlie/group.hpp"
#include "colorlie/rational.hpp"

namespace colorlie {

struct GradedAlgebra;

// Multilinear bracketing monomial: a binary tree whose leaves are distinct
// variable ids (>= 1).  Stored as a preorder code with -1 marking internal
// nodes, e.g. [[x1,x2],x3] is (-1, -1, 1, 2, 3).
class Monomial {
public:
    static constexpr int kInternal = -1;

    explicit Monomial(std::vector<int> code);
    static Monomial leaf(int var);
    static Monomial bracket(const Monomial& l, const Monomial& r);
    // Left-to-right folding: [w0, w1, ..., wk] = [...[[w0,w1],w2]...,wk].
    static Monomial left_normed(std::span<const int> word);

    const std::vector<int>& code() const { return code_; }
    int num_vars() const { return num_vars_; }
    // Leaves in left-to-right order.
    std::vector<int> leaf_word() const;
    // Sorted distinct variable ids.
    std::vector<int> variables() const;
    // The code with every leaf replaced by 0; identifies the bracketing shape.
    std::vector<int> shape_key() const;
    bool has_left_normed_shape() const;

    Monomial relabeled(const std::map<int, int>& image) const;

    // Nested parenthesized list, e.g. ((1 2) (3 4)); a left-normed monomial
    // prints as a flat list (1 2 3 4).
    std::string to_string() const;
    static Monomial parse(std::string_view s);

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.code_ == y.code_; }

private:
    std::vector<int> code_;
    int num_vars_;
};

// Rows ordered by (bracketing shape, leaf word), both lexicographic.
struct MonomialOrder {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

using DegreeMap = std::map<int, GroupElement>;  // variable id -> degree
using Assignment = std::map<int, Vec>;          // variable id -> coefficient vector

// Rational linear combination of multilinear monomials on a common
// variable set.
class MultilinearPoly {
public:
    MultilinearPoly() = default;
    static MultilinearPoly zero(std::vector<int> vars);
    static MultilinearPoly from_monomial(const Monomial& m, const Rat& c = 1);

    void add_term(const Monomial& m, const Rat& c);

    const std::map<Monomial, Rat, MonomialOrder>& terms() const { return terms_; }
    const std::vector<int>& variables() const { return vars_; }
    int num_vars() const { return static_cast<int>(vars_.size()); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    MultilinearPoly& operator+=(const MultilinearPoly& rhs);
    MultilinearPoly& operator*=(const Rat& c);
    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
    friend MultilinearPoly operator*(const Rat& c, MultilinearPoly p) { return p *= c; }
    friend bool operator==(const MultilinearPoly& a, const MultilinearPoly& b);

    std::string to_string() const;

private:
    std::map<Monomial, Rat, MonomialOrder> terms_;
    std::vector<int> vars_;
};

// ---- evaluation ----------------------------------------------------------

Vec evaluate(const Monomial& m, const GradedAlgebra& A, const Assignment& e);
Vec evaluate(const MultilinearPoly& f, const GradedAlgebra& A, const Assignment& e);

// When a degree assignment is in force, each assigned vector must be
// supported on its variable's homogeneous component.  Throws on violation.
void check_homogeneous_assignment(const GradedAlgebra& A, const DegreeMap& degrees,
                                  const Assignment& e);

// ---- symmetric-group action and alternation ------------------------------

// sigma f(x_1,...,x_n) = f(x_{sigma(1)},...,x_{sigma(n)}); sigma maps the
// poly's variables bijectively onto themselves (or onto a renamed set).
MultilinearPoly sn_act(const std::map<int, int>& sigma, const MultilinearPoly& f);

// Materialized alternation over Y: sum of sgn(sigma) sigma f.  Caps at
// |Y| <= 8 (8! terms); larger sets must go through alt_evaluate.
MultilinearPoly alt_on_set(const MultilinearPoly& f, const std::vector<int>& Y);

struct AltEvalOptions {
    bool sampled = false;
    std::uint64_t seed = 0;
    std::size_t sample_count = 0;  // number of random permutations when sampled
};

// Evaluates Alt_Y(f) without expanding it: folds over permutations of the
// Y-slots of the assignment.  Sampled mode returns the partial sum over a
// seeded random subset of the permutations.
Vec alt_evaluate(const MultilinearPoly& f, const std::vector<int>& Y, const GradedAlgebra& A,
                 const Assignment& e, const AltEvalOptions& opts = {});

// ---- enumeration ---------------------------------------------------------

enum class MonomialShape {
    AllBracketings,      // Catalan(n-1) * n! monomials
    LeftNormedFirstFixed // (n-1)! left-normed words starting with x_1
};

void for_each_monomial(int n, MonomialShape shape, const std::function<void(const Monomial&)>& fn);
std::vector<Monomial> enumerate_monomials(int n, MonomialShape shape);

// ---- graded sign calculus (left-normed words) ----------------------------

struct ColorSign {
    int sign;               // the scalar picked up by the word
    GroupElement degree;    // product of all variable degrees
};

// Sign of m_sigma(g_1 (x) x_1, ...) = g_1...g_n (x) sign * m_sigma(x_1, ...),
// obtained by folding the cocycle along the left-normed product.
ColorSign color_sign(std::span<const int> word, const DegreeMap& degrees, const Cocycle& s);

// Rescales each left-normed term by its color sign.  Requires every monomial
// to be left-normed with a common first variable.
MultilinearPoly tilde_transform(const MultilinearPoly& f, const DegreeMap& degrees,
                                const Cocycle& s);

}  // namespace colorlie
