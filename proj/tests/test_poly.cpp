#include <doctest.h>

#include <random>
#include <stdexcept>

#include "colorlie/algebra.hpp"
#include "colorlie/poly.hpp"

using namespace colorlie;

namespace {

Vec rnd_vec(int dim, std::mt19937_64& rng) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Rat(static_cast<long>(rng() % 9) - 4);
    return v;
}

MultilinearPoly rnd_poly(int n, std::mt19937_64& rng) {
    auto monos = enumerate_monomials(n, MonomialShape::AllBracketings);
    MultilinearPoly f = MultilinearPoly::zero({});
    bool any = false;
    for (const auto& m : monos) {
        long c = static_cast<long>(rng() % 5) - 2;
        if (c != 0) {
            f.add_term(m, Rat(c));
            any = true;
        }
    }
    if (!any) f.add_term(monos[0], 1);
    return f;
}

}  // namespace

TEST_CASE("monomial basics") {
    Monomial m = Monomial::left_normed(std::vector<int>{1, 2, 3});
    CHECK(m.num_vars() == 3);
    CHECK(m.leaf_word() == std::vector<int>{1, 2, 3});
    CHECK(m.has_left_normed_shape());
    CHECK(m.to_string() == "(1 2 3)");

    Monomial nested = Monomial::bracket(Monomial::bracket(Monomial::leaf(1), Monomial::leaf(2)),
                                        Monomial::bracket(Monomial::leaf(3), Monomial::leaf(4)));
    CHECK_FALSE(nested.has_left_normed_shape());
    CHECK(nested.to_string() == "(1 2 (3 4))");
    CHECK(Monomial::parse("((1 2) (3 4))") == nested);
    CHECK(Monomial::parse(nested.to_string()) == nested);

    CHECK_THROWS_AS(Monomial::left_normed(std::vector<int>{1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("(1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Monomial::parse("()"), std::invalid_argument);
}

TEST_CASE("monomial parse round trip on random trees") {
    std::mt19937_64 rng(5);
    for (const auto& m : enumerate_monomials(4, MonomialShape::AllBracketings))
        CHECK(Monomial::parse(m.to_string()) == m);
    (void)rng;
}

TEST_CASE("enumeration counts") {
    // all bracketings: Catalan(n-1) * n!; left-normed with x1 first: (n-1)!
    CHECK(enumerate_monomials(1, MonomialShape::AllBracketings).size() == 1);
    CHECK(enumerate_monomials(3, MonomialShape::AllBracketings).size() == 12);
    CHECK(enumerate_monomials(4, MonomialShape::LeftNormedFirstFixed).size() == 6);
    CHECK(enumerate_monomials(5, MonomialShape::AllBracketings).size() == 1680);

    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132};
    long long fact = 1;
    for (int n = 1; n <= 7; ++n) {
        fact *= n;
        long long expected = catalan[n - 1] * fact;
        long long count = 0;
        for_each_monomial(n, MonomialShape::AllBracketings, [&](const Monomial&) { ++count; });
        CHECK(count == expected);
        long long lncount = 0;
        for_each_monomial(n, MonomialShape::LeftNormedFirstFixed,
                          [&](const Monomial& m) {
                              ++lncount;
                              CHECK(m.leaf_word()[0] == 1);
                          });
        CHECK(lncount == fact / n);
    }
}

TEST_CASE("evaluation") {
    GradedAlgebra A = sl2_factory();
    SUBCASE("single bracket [x1,x2] at (e,f) gives h") {
        MultilinearPoly f =
            MultilinearPoly::from_monomial(Monomial::left_normed(std::vector<int>{1, 2}));
        Assignment e{{1, basis_vec(A, 0)}, {2, basis_vec(A, 2)}};
        CHECK(evaluate(f, A, e) == basis_vec(A, 1));
    }
    SUBCASE("zero polynomial evaluates to zero") {
        MultilinearPoly z = MultilinearPoly::zero({1, 2});
        Assignment e{{1, basis_vec(A, 0)}, {2, basis_vec(A, 2)}};
        CHECK(is_zero(evaluate(z, A, e)));
    }
    SUBCASE("color anticommutativity instance vanishes in L") {
        GradedAlgebra L = tensor_color_construct(A, canonical_cocycle());
        Bicharacter beta = bicharacter_from_cocycle(canonical_cocycle());
        MultilinearPoly f =
            MultilinearPoly::from_monomial(Monomial::left_normed(std::vector<int>{1, 2}));
        f.add_term(Monomial::left_normed(std::vector<int>{2, 1}),
                   Rat(beta(GroupElement::a(), GroupElement::b())));
        // x1 homogeneous of degree a, x2 of degree b
        Assignment e{{1, basis_vec(L, 1 * 3 + 0)}, {2, basis_vec(L, 2 * 3 + 2)}};
        CHECK(is_zero(evaluate(f, L, e)));
    }
    SUBCASE("missing assignment throws") {
        MultilinearPoly f =
            MultilinearPoly::from_monomial(Monomial::left_normed(std::vector<int>{1, 2}));
        Assignment e{{1, basis_vec(A, 0)}};
        CHECK_THROWS_AS(evaluate(f, A, e), std::invalid_argument);
    }
}

TEST_CASE("evaluate is multilinear in each slot") {
    GradedAlgebra A = sl2_factory();
    std::mt19937_64 rng(11);
    MultilinearPoly f = rnd_poly(3, rng);
    for (int slot = 1; slot <= 3; ++slot) {
        Assignment e;
        for (int v = 1; v <= 3; ++v) e[v] = rnd_vec(3, rng);
        Vec u = rnd_vec(3, rng), w = rnd_vec(3, rng);
        Rat alpha = rat_frac(3, 7);
        Assignment eu = e, ew = e, emix = e;
        eu[slot] = u;
        ew[slot] = w;
        emix[slot] = alpha * u + w;
        CHECK(evaluate(f, A, emix) == (alpha * evaluate(f, A, eu) + evaluate(f, A, ew)).eval());
    }
}

TEST_CASE("sn_act") {
    MultilinearPoly f =
        MultilinearPoly::from_monomial(Monomial::left_normed(std::vector<int>{1, 2}));
    SUBCASE("identity") {
        std::map<int, int> id{{1, 1}, {2, 2}};
        CHECK(sn_act(id, f) == f);
    }
    SUBCASE("transposition on [x1,x2]") {
        std::map<int, int> sw{{1, 2}, {2, 1}};
        CHECK(sn_act(sw, f) ==
              MultilinearPoly::from_monomial(Monomial::left_normed(std::vector<int>{2, 1})));
    }
    SUBCASE("action law sigma(tau f) = (sigma tau) f") {
        std::mt19937_64 rng(3);
        for (int n = 2; n <= 5; ++n) {
            MultilinearPoly g = rnd_poly(n, rng);
            std::vector<int> sp(n), tp(n);
            for (int t = 0; t < n; ++t) sp[t] = tp[t] = t + 1;
            for (int t = n; t > 1; --t) {
                std::swap(sp[t - 1], sp[rng() % t]);
                std::swap(tp[t - 1], tp[rng() % t]);
            }
            std::map<int, int> sigma, tau, comp;
            for (int t = 0; t < n; ++t) {
                sigma[t + 1] = sp[t];
                tau[t + 1] = tp[t];
                comp[t + 1] = sp[tp[t] - 1];  // sigma after tau
            }
            CHECK(sn_act(sigma, sn_act(tau, g)) == sn_act(comp, g));
        }
    }
    SUBCASE("non-covering map throws") {
        std::map<int, int> bad{{1, 2}};
        CHECK_THROWS_AS(sn_act(bad, f), std::invalid_argument);
    }
}

TEST_CASE("alt_on_set") {
    MultilinearPoly f =
        MultilinearPoly::from_monomial(Monomial::left_normed(std::vector<int>{1, 2}));
    SUBCASE("singleton set leaves f unchanged") { CHECK(alt_on_set(f, {1}) == f); }
    SUBCASE("two-element alternation") {
        MultilinearPoly expect = f;
        expect.add_term(Monomial::left_normed(std::vector<int>{2, 1}), -1);
        CHECK(alt_on_set(f, {1, 2}) == expect);
    }
    SUBCASE("alternator is |Y|!-idempotent") {
        std::mt19937_64 rng(9);
        for (int n = 2; n <= 4; ++n) {
            MultilinearPoly g = rnd_poly(n, rng);
            std::vector<int> Y;
            for (int t = 1; t <= n; ++t) Y.push_back(t);
            MultilinearPoly once = alt_on_set(g, Y);
            MultilinearPoly twice = alt_on_set(once, Y);
            Rat fact = 1;
            for (int t = 2; t <= n; ++t) fact *= t;
            CHECK(twice == fact * once);
        }
    }
    SUBCASE("cap exceeded") {
        auto m = Monomial::left_normed(std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
        std::vector<int> Y{1, 2, 3, 4, 5, 6, 7, 8, 9};
        CHECK_THROWS_AS(alt_on_set(MultilinearPoly::from_monomial(m), Y), std::invalid_argument);
    }
}

TEST_CASE("alt_evaluate") {
    GradedAlgebra A = sl2_factory();
    std::mt19937_64 rng(21);
    SUBCASE("agrees with materialized alternation") {
        for (int n = 2; n <= 5; ++n) {
            MultilinearPoly f = rnd_poly(n, rng);
            std::vector<int> Y;
            for (int t = 1; t <= n; ++t) Y.push_back(t);
            Assignment e;
            for (int v = 1; v <= n; ++v) e[v] = rnd_vec(3, rng);
            CHECK(alt_evaluate(f, Y, A, e) == evaluate(alt_on_set(f, Y), A, e));
        }
        // |Y| = 6 over a left-normed combination
        MultilinearPoly f6 = MultilinearPoly::zero({1, 2, 3, 4, 5, 6});
        for (const auto& m : enumerate_monomials(6, MonomialShape::LeftNormedFirstFixed))
            f6.add_term(m, Rat(static_cast<long>(rng() % 3) - 1));
        std::vector<int> Y6{1, 2, 3, 4, 5, 6};
        Assignment e6;
        for (int v = 1; v <= 6; ++v) e6[v] = rnd_vec(3, rng);
        CHECK(alt_evaluate(f6, Y6, A, e6) == evaluate(alt_on_set(f6, Y6), A, e6));
    }
    SUBCASE("repeated vector kills the alternation") {
        MultilinearPoly f = rnd_poly(3, rng);
        Assignment e;
        for (int v = 1; v <= 3; ++v) e[v] = rnd_vec(3, rng);
        e[2] = e[1];
        CHECK(is_zero(alt_evaluate(f, {1, 2, 3}, A, e)));
    }
    SUBCASE("linearly dependent vectors kill the alternation") {
        MultilinearPoly f = rnd_poly(3, rng);
        Assignment e;
        e[1] = rnd_vec(3, rng);
        e[2] = rnd_vec(3, rng);
        e[3] = (2 * e[1] - 3 * e[2]).eval();
        CHECK(is_zero(alt_evaluate(f, {1, 2, 3}, A, e)));
    }
    SUBCASE("sampled mode: deterministic partial sums over sampled permutations") {
        MultilinearPoly f = rnd_poly(3, rng);
        Assignment e;
        for (int v = 1; v <= 3; ++v) e[v] = rnd_vec(3, rng);
        AltEvalOptions opts;
        opts.sampled = true;
        opts.seed = 17;
        opts.sample_count = 200;
        Vec s1 = alt_evaluate(f, {1, 2, 3}, A, e, opts);
        Vec s2 = alt_evaluate(f, {1, 2, 3}, A, e, opts);
        CHECK(s1 == s2);
        // the partial sum lies in the integer lattice spanned by the six
        // signed term values
        std::vector<Vec> terms;
        std::vector<int> perm{1, 2, 3};
        do {
            std::map<int, int> sigma{{1, perm[0]}, {2, perm[1]}, {3, perm[2]}};
            terms.push_back(evaluate(sn_act(sigma, f), A, e));
        } while (std::next_permutation(perm.begin(), perm.end()));
        // with equal Y-vectors sampled mode still returns exact zero sums
        Assignment eq = e;
        eq[2] = eq[1];
        // each sampled term of an alternation with two equal slots pairs up,
        // but single samples need not vanish; only check determinism here
        Vec z1 = alt_evaluate(f, {1, 2, 3}, A, eq, opts);
        Vec z2 = alt_evaluate(f, {1, 2, 3}, A, eq, opts);
        CHECK(z1 == z2);
        CHECK(terms.size() == 6);
    }
}

TEST_CASE("color_sign") {
    Cocycle s = canonical_cocycle();
    SUBCASE("identity degrees give +1 for every word") {
        DegreeMap deg;
        for (int v = 1; v <= 4; ++v) deg[v] = GroupElement::e();
        std::vector<int> word{1, 2, 3, 4};
        do {
            CHECK(color_sign(word, deg, s).sign == 1);
        } while (std::next_permutation(word.begin(), word.end()));
    }
    SUBCASE("two variables of degrees a, b") {
        DegreeMap deg{{1, GroupElement::a()}, {2, GroupElement::b()}};
        CHECK(color_sign(std::vector<int>{1, 2}, deg, s).sign == 1);   // sigma(a,b) = +1
        CHECK(color_sign(std::vector<int>{2, 1}, deg, s).sign == -1);  // sigma(b,a) = -1
    }
    SUBCASE("total degree independent of the order") {
        std::mt19937_64 rng(2);
        DegreeMap deg;
        for (int v = 1; v <= 4; ++v) deg[v] = GroupElement::from_index(rng() % 4);
        GroupElement total = GroupElement::e();
        for (int v = 1; v <= 4; ++v) total = total * deg[v];
        std::vector<int> word{1, 2, 3, 4};
        do {
            CHECK(color_sign(word, deg, s).degree == total);
        } while (std::next_permutation(word.begin(), word.end()));
    }
}

// the displayed identity: m_sigma(g1 (x) x1, ..., gn (x) xn)
// = g1...gn (x) lambda_sigma m_sigma(x1, ..., xn), on basis evaluations
TEST_CASE("color_sign matches evaluation in L") {
    GradedAlgebra B = sl2_factory();
    GradedAlgebra L = tensor_color_construct(B, canonical_cocycle());
    Cocycle s = canonical_cocycle();
    for (int n = 2; n <= 4; ++n) {
        // all degree words over the four group elements
        std::vector<int> word_idx(n, 0);
        while (true) {
            DegreeMap deg;
            for (int v = 1; v <= n; ++v) deg[v] = GroupElement::from_index(word_idx[v - 1]);
            for_each_monomial(n, MonomialShape::LeftNormedFirstFixed, [&](const Monomial& m) {
                std::vector<int> w = m.leaf_word();
                ColorSign cs = color_sign(w, deg, s);
                // basis evaluations: x_v -> basis element b_v of B
                std::vector<int> tuple(n, 0);
                while (true) {
                    Assignment eB, eL;
                    for (int v = 1; v <= n; ++v) {
                        eB[v] = basis_vec(B, tuple[v - 1]);
                        eL[v] = basis_vec(L, deg[v].index() * 3 + tuple[v - 1]);
                    }
                    Vec inB = evaluate(MultilinearPoly::from_monomial(m), B, eB);
                    Vec inL = evaluate(MultilinearPoly::from_monomial(m), L, eL);
                    Vec expect = Vec::Zero(12);
                    for (int k = 0; k < 3; ++k)
                        expect[cs.degree.index() * 3 + k] = Rat(cs.sign) * inB[k];
                    CHECK(inL == expect);
                    int t = n - 1;
                    while (t >= 0 && ++tuple[t] == 3) tuple[t--] = 0;
                    if (t < 0) break;
                }
            });
            int t = n - 1;
            while (t >= 0 && ++word_idx[t] == 4) word_idx[t--] = 0;
            if (t < 0) break;
        }
        if (n == 3) break;  // n = 4 with all 256 degree words runs in the acceptance suite
    }
}

TEST_CASE("homogeneous assignment validation") {
    GradedAlgebra L = tensor_color_construct(sl2_factory(), canonical_cocycle());
    DegreeMap deg{{1, GroupElement::a()}, {2, GroupElement::b()}};
    Assignment good{{1, basis_vec(L, 3)}, {2, basis_vec(L, 7)}};
    CHECK_NOTHROW(check_homogeneous_assignment(L, deg, good));
    Assignment bad{{1, basis_vec(L, 0)}, {2, basis_vec(L, 7)}};  // e-component in an a slot
    CHECK_THROWS_AS(check_homogeneous_assignment(L, deg, bad), std::invalid_argument);
    Assignment short_vec{{1, Vec::Zero(3)}};
    CHECK_THROWS_AS(check_homogeneous_assignment(L, deg, short_vec), std::invalid_argument);
}

TEST_CASE("tilde transform") {
    Cocycle s = canonical_cocycle();
    GradedAlgebra B = sl2_factory();
    std::mt19937_64 rng(13);

    SUBCASE("identity degrees give the identity map") {
        DegreeMap deg;
        for (int v = 1; v <= 3; ++v) deg[v] = GroupElement::e();
        MultilinearPoly f = MultilinearPoly::zero({1, 2, 3});
        for (const auto& m : enumerate_monomials(3, MonomialShape::LeftNormedFirstFixed))
            f.add_term(m, Rat(static_cast<long>(rng() % 7) - 3));
        CHECK(tilde_transform(f, deg, s) == f);
    }
    SUBCASE("involution") {
        for (int trial = 0; trial < 10; ++trial) {
            DegreeMap deg;
            for (int v = 1; v <= 4; ++v) deg[v] = GroupElement::from_index(rng() % 4);
            MultilinearPoly f = MultilinearPoly::zero({1, 2, 3, 4});
            for (const auto& m : enumerate_monomials(4, MonomialShape::LeftNormedFirstFixed))
                f.add_term(m, Rat(static_cast<long>(rng() % 7) - 3));
            CHECK(tilde_transform(tilde_transform(f, deg, s), deg, s) == f);
        }
    }
    SUBCASE("non-left-normed support rejected") {
        Monomial nested =
            Monomial::bracket(Monomial::bracket(Monomial::leaf(1), Monomial::leaf(2)),
                              Monomial::bracket(Monomial::leaf(3), Monomial::leaf(4)));
        DegreeMap deg;
        for (int v = 1; v <= 4; ++v) deg[v] = GroupElement::e();
        CHECK_THROWS_AS(tilde_transform(MultilinearPoly::from_monomial(nested), deg, s),
                        std::invalid_argument);
    }
    SUBCASE("a genuine identity maps to a genuine graded identity at n = 4") {
        // the 2-dim solvable algebra has multilinear identities already in
        // low degree, unlike sl2
        GradedAlgebra aff = GradedAlgebra::from_entries(
            "aff2", 2, std::vector<GroupElement>(2, GroupElement::e()),
            {{0, 1, 0, Rat(1)}, {1, 0, 0, Rat(-1)}});
        REQUIRE(check_color_axioms(aff, SignTable::ones()).ok());
        GradedAlgebra Laff = tensor_color_construct(aff, canonical_cocycle());

        auto rows4 = enumerate_monomials(4, MonomialShape::LeftNormedFirstFixed);
        const int R = static_cast<int>(rows4.size());

        // evaluation matrix rows over all basis tuples, with a tracked
        // elimination to extract a left-kernel vector
        const int C = 16 * 2;
        Mat M(R, C);
        for (int r = 0; r < R; ++r) {
            int col = 0;
            for (int t = 0; t < 16; ++t) {
                Assignment e;
                for (int v = 1; v <= 4; ++v) e[v] = basis_vec(aff, (t >> (v - 1)) & 1);
                Vec val = evaluate(MultilinearPoly::from_monomial(rows4[r]), aff, e);
                for (int k = 0; k < 2; ++k) M(r, col++) = val[k];
            }
        }
        Mat T = Mat::Identity(R, R);  // combination tracker
        int lead = 0;
        for (int c = 0; c < C && lead < R; ++c) {
            int piv = -1;
            for (int r = lead; r < R; ++r)
                if (M(r, c) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            M.row(piv).swap(M.row(lead));
            T.row(piv).swap(T.row(lead));
            for (int r = 0; r < R; ++r) {
                if (r == lead || M(r, c) == 0) continue;
                Rat m = M(r, c) / M(lead, c);
                M.row(r) -= m * M.row(lead);
                T.row(r) -= m * T.row(lead);
            }
            ++lead;
        }
        REQUIRE(lead < R);  // aff2 has identities in degree 4
        // combination in the last row is an identity of aff2
        MultilinearPoly g = MultilinearPoly::zero({1, 2, 3, 4});
        for (int r = 0; r < R; ++r) g.add_term(rows4[r], T(R - 1, r));
        REQUIRE_FALSE(g.is_zero());

        DegreeMap deg{{1, GroupElement::a()},
                      {2, GroupElement::b()},
                      {3, GroupElement::a()},
                      {4, GroupElement::ab()}};
        MultilinearPoly f = tilde_transform(g, deg, s);
        CHECK(tilde_transform(f, deg, s) == g);
        // f is a graded identity of L(aff2): all homogeneous evaluations die
        for (int t = 0; t < 16; ++t) {
            Assignment e;
            for (int v = 1; v <= 4; ++v)
                e[v] = basis_vec(Laff, deg[v].index() * 2 + ((t >> (v - 1)) & 1));
            CHECK(is_zero(evaluate(f, Laff, e)));
        }
    }

    SUBCASE("graded identity of L iff tilde is an identity of B") {
        // degree word (a, a, b) on three variables
        GradedAlgebra L = tensor_color_construct(B, canonical_cocycle());
        DegreeMap deg{{1, GroupElement::a()}, {2, GroupElement::a()}, {3, GroupElement::b()}};
        auto is_graded_identity = [&](const MultilinearPoly& f) {
            std::vector<int> tuple(3, 0);
            while (true) {
                Assignment e;
                for (int v = 1; v <= 3; ++v)
                    e[v] = basis_vec(L, deg[v].index() * 3 + tuple[v - 1]);
                if (!is_zero(evaluate(f, L, e))) return false;
                int t = 2;
                while (t >= 0 && ++tuple[t] == 3) tuple[t--] = 0;
                if (t < 0) break;
            }
            return true;
        };
        auto is_B_identity = [&](const MultilinearPoly& f) {
            std::vector<int> tuple(3, 0);
            while (true) {
                Assignment e;
                for (int v = 1; v <= 3; ++v) e[v] = basis_vec(B, tuple[v - 1]);
                if (!is_zero(evaluate(f, B, e))) return false;
                int t = 2;
                while (t >= 0 && ++tuple[t] == 3) tuple[t--] = 0;
                if (t < 0) break;
            }
            return true;
        };
        for (int trial = 0; trial < 20; ++trial) {
            MultilinearPoly f = MultilinearPoly::zero({1, 2, 3});
            for (const auto& m : enumerate_monomials(3, MonomialShape::LeftNormedFirstFixed))
                f.add_term(m, Rat(static_cast<long>(rng() % 7) - 3));
            CHECK(is_graded_identity(f) == is_B_identity(tilde_transform(f, deg, s)));
        }
    }
}
