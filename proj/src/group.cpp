#include "colorlie/group.hpp"

#include <stdexcept>

namespace colorlie {

std::string GroupElement::to_string() const {
    switch (index()) {
        case 0: return "e";
        case 1: return "a";
        case 2: return "b";
        default: return "ab";
    }
}

SignTable SignTable::ones() {
    SignTable t;
    for (auto& row : t.v) row.fill(1);
    return t;
}

Cocycle canonical_cocycle() {
    Cocycle s;
    for (GroupElement g : group_elements())
        for (GroupElement h : group_elements())
            s.at(g, h) = (g.j & h.i) ? -1 : 1;
    return s;
}

SignTable literal_cocycle_candidate() {
    SignTable s;
    for (GroupElement g : group_elements())
        for (GroupElement h : group_elements())
            s.at(g, h) = ((g.j ^ h.i) & 1) ? -1 : 1;
    return s;
}

Cocycle trivial_cocycle() { return SignTable::ones(); }

static bool sign_valued(const SignTable& t, TableReport& rep) {
    for (GroupElement g : group_elements())
        for (GroupElement h : group_elements())
            if (t(g, h) != 1 && t(g, h) != -1) {
                rep.violations.push_back({"sign-valued", {g, h}, "entry not in {+1,-1}"});
                return false;
            }
    return true;
}

TableReport validate_cocycle(const SignTable& s) {
    TableReport rep;
    if (!sign_valued(s, rep)) return rep;
    for (GroupElement g : group_elements()) {
        if (s(GroupElement::e(), g) != 1)
            rep.violations.push_back({"unit", {GroupElement::e(), g}, "sigma(e,g) != 1"});
        if (s(g, GroupElement::e()) != 1)
            rep.violations.push_back({"unit", {g, GroupElement::e()}, "sigma(g,e) != 1"});
    }
    for (GroupElement g : group_elements())
        for (GroupElement h : group_elements())
            for (GroupElement k : group_elements())
                if (s(g, h) * s(g * h, k) != s(h, k) * s(g, h * k))
                    rep.violations.push_back({"cocycle-law", {g, h, k},
                                              "sigma(g,h)sigma(gh,k) != sigma(h,k)sigma(g,hk)"});
    return rep;
}

TableReport validate_bicharacter(const SignTable& b) {
    TableReport rep;
    if (!sign_valued(b, rep)) return rep;
    for (GroupElement g : group_elements()) {
        if (b(GroupElement::e(), g) != 1)
            rep.violations.push_back({"unit", {GroupElement::e(), g}, "beta(e,g) != 1"});
        if (b(g, GroupElement::e()) != 1)
            rep.violations.push_back({"unit", {g, GroupElement::e()}, "beta(g,e) != 1"});
    }
    for (GroupElement g : group_elements())
        for (GroupElement h : group_elements()) {
            if (b(g, h) * b(h, g) != 1)
                rep.violations.push_back({"skew", {g, h}, "beta(g,h)beta(h,g) != 1"});
            for (GroupElement k : group_elements()) {
                if (b(g * h, k) != b(g, k) * b(h, k))
                    rep.violations.push_back({"left-multiplicative", {g, h, k},
                                              "beta(gh,k) != beta(g,k)beta(h,k)"});
                if (b(g, h * k) != b(g, h) * b(g, k))
                    rep.violations.push_back({"right-multiplicative", {g, h, k},
                                              "beta(g,hk) != beta(g,h)beta(g,k)"});
            }
        }
    return rep;
}

Bicharacter bicharacter_from_cocycle(const Cocycle& s) {
    TableReport rep = validate_cocycle(s);
    if (!rep.valid())
        throw std::invalid_argument("bicharacter_from_cocycle: input fails the cocycle law (" +
                                    rep.violations.front().axiom + ")");
    Bicharacter b;
    for (GroupElement g : group_elements())
        for (GroupElement h : group_elements())
            b.at(g, h) = s(g, h) * s(h, g);  // s(h,g)^{-1} = s(h,g) for signs
    return b;
}

}  // namespace colorlie
