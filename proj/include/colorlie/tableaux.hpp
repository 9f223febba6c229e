#pragma once

#include <map>
#include <string>
#include <vector>

#include "colorlie/poly.hpp"
#include "colorlie/rational.hpp"

namespace colorlie {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> p);
    int weight() const;
    int rows() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts == y.parts; }
    std::string to_string() const;
};

// All partitions of n in lexicographic order (ascending); n <= 40.
std::vector<Partition> partitions_of(int n);

// n! / product of hooks, exact.
Int hook_dim(const Partition& lambda);

struct RectangleBound {
    Partition shape;       // ((2k+1)^q)
    int n = 0;             // (2k+1) * q
    Int dim;               // hook dimension, exact
    double bound = 0.0;    // q! / (2 pi n)^q * q^n
    bool holds = false;    // dim >= bound
    double root = 0.0;     // dim^(1/n)
};

RectangleBound rectangle_bound(int q, int k);

// A filling of the diagram by 1..n (bijective).
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> fill;

    Tableau(Partition s, std::vector<std::vector<int>> f);
    static Tableau row_major(const Partition& s);  // canonical filling 1..n
    int weight() const { return shape.weight(); }
};

// Count of standard fillings by backtracking (independent of the hook
// formula; test oracle, exported for the CLI tableaux report).
Int standard_tableau_count(const Partition& lambda);

// Permutations are stored as images of 1..n (value at index i-1 is the image
// of i); composition p*q applies q first.
using Perm = std::vector<int>;
Perm perm_identity(int n);
Perm perm_compose(const Perm& p, const Perm& q);
int perm_sign(const Perm& p);

// Element of the rational group algebra of S_n.
struct GroupAlgebraElem {
    int n = 0;
    std::map<Perm, Rat> terms;

    void add(const Perm& p, const Rat& c);
    std::size_t support_size() const { return terms.size(); }
};

GroupAlgebraElem ga_multiply(const GroupAlgebraElem& x, const GroupAlgebraElem& y);
// scalar * x
GroupAlgebraElem ga_scale(const Rat& c, const GroupAlgebraElem& x);
bool ga_equal(const GroupAlgebraElem& x, const GroupAlgebraElem& y);

// Row symmetrizer and signed column symmetrizer; requires weight <= 8.
GroupAlgebraElem row_symmetrizer(const Tableau& T);
GroupAlgebraElem column_antisymmetrizer(const Tableau& T);

// Action of a group-algebra element on a multilinear polynomial whose
// variables are 1..n.
MultilinearPoly ga_apply(const GroupAlgebraElem& x, const MultilinearPoly& f);

// e_T f = R(C f).
MultilinearPoly essential_idempotent_apply(const Tableau& T, const MultilinearPoly& f);

}  // namespace colorlie
