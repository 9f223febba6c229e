#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace colorlie {

// Element a^i b^j of the Klein group Z2 x Z2.  The group is written
// multiplicatively; every element is its own inverse.
struct GroupElement {
    std::uint8_t i = 0;  // exponent of a
    std::uint8_t j = 0;  // exponent of b

    static constexpr GroupElement e() { return {0, 0}; }
    static constexpr GroupElement a() { return {1, 0}; }
    static constexpr GroupElement b() { return {0, 1}; }
    static constexpr GroupElement ab() { return {1, 1}; }

    // Element order e, a, b, ab used for all 4x4 tables and basis layouts.
    constexpr int index() const { return i + 2 * j; }
    static constexpr GroupElement from_index(int k) {
        return {static_cast<std::uint8_t>(k & 1), static_cast<std::uint8_t>((k >> 1) & 1)};
    }

    friend constexpr GroupElement operator*(GroupElement x, GroupElement y) {
        return {static_cast<std::uint8_t>(x.i ^ y.i), static_cast<std::uint8_t>(x.j ^ y.j)};
    }
    friend constexpr bool operator==(GroupElement x, GroupElement y) {
        return x.i == y.i && x.j == y.j;
    }
    friend constexpr bool operator!=(GroupElement x, GroupElement y) { return !(x == y); }

    std::string to_string() const;
};

inline GroupElement group_mul(GroupElement x, GroupElement y) { return x * y; }

constexpr int kGroupOrder = 4;

inline std::array<GroupElement, kGroupOrder> group_elements() {
    return {GroupElement::e(), GroupElement::a(), GroupElement::b(), GroupElement::ab()};
}

// +-1 valued table on G x G.  Cocycles and bicharacters share the storage;
// the validators below tell them apart.
struct SignTable {
    std::array<std::array<int, kGroupOrder>, kGroupOrder> v{};

    int operator()(GroupElement g, GroupElement h) const { return v[g.index()][h.index()]; }
    int& at(GroupElement g, GroupElement h) { return v[g.index()][h.index()]; }

    friend bool operator==(const SignTable& x, const SignTable& y) { return x.v == y.v; }

    static SignTable ones();
};

using Cocycle = SignTable;
using Bicharacter = SignTable;

struct AxiomViolation {
    std::string axiom;                  // which law failed
    std::vector<GroupElement> where;    // offending tuple
    std::string detail;
};

struct TableReport {
    std::vector<AxiomViolation> violations;
    bool valid() const { return violations.empty(); }
};

// sigma(a^i b^j, a^k b^l) = (-1)^(j*k); normalized 2-cocycle twisting F[G].
Cocycle canonical_cocycle();

// The table (-1)^(j+k).  Fails both the cocycle law and normalization;
// kept as a falsification fixture for the axiom checkers.
SignTable literal_cocycle_candidate();

// All-plus table: the untwisted product (trivial bicharacter case).
Cocycle trivial_cocycle();

TableReport validate_cocycle(const SignTable& s);
TableReport validate_bicharacter(const SignTable& b);

// beta(g,h) = s(g,h) * s(h,g)^{-1}.  Throws std::invalid_argument unless s
// satisfies the cocycle invariants.
Bicharacter bicharacter_from_cocycle(const Cocycle& s);

}  // namespace colorlie
