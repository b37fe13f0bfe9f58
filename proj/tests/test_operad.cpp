#include "doctest.h"
#include "dgop/free_operad.hpp"
#include "helpers.hpp"

#include <set>

using namespace dgop;
using dgop_test::Rng;

namespace {
const Field F2{2};
const Field F3{3};
const Field Q{0};

// Independent oracle: count leaf-labeled binary trees with vertex labels from
// a two-element set, modulo the child-swap move that also twists the label.
// Written as brute-force orbit enumeration on planar representatives.
int oracle_binary_trees_regular_rep(int nleaves) {
    // planar binary trees on a sequence of leaves = all full binary trees with
    // nleaves leaves, leaves labeled by a permutation, vertices labeled in S_2
    struct PT {
        bool is_leaf;
        int leaf;
        int vlabel;  // 0 or 1, meaning identity or twist
        std::unique_ptr<PT> l, r;
    };
    // enumerate planar shapes with leaf labels via recursion on subsets
    std::function<std::vector<std::string>(std::vector<int>)> shapes =
        [&](std::vector<int> leaves) -> std::vector<std::string> {
        if (leaves.size() == 1)
            return {std::to_string(leaves[0])};
        std::vector<std::string> out;
        int n = static_cast<int>(leaves.size());
        // ordered split into nonempty left/right subsequences (subsets)
        for (int mask = 1; mask + 1 < (1 << n); ++mask) {
            std::vector<int> lft, rgt;
            for (int i = 0; i < n; ++i)
                (mask >> i & 1 ? lft : rgt).push_back(leaves[i]);
            for (auto& ls : shapes(lft))
                for (auto& rs : shapes(rgt))
                    for (int vl = 0; vl < 2; ++vl)
                        out.push_back("v" + std::to_string(vl) + "(" + ls + "," + rs + ")");
        }
        return out;
    };
    std::vector<int> leaves;
    for (int i = 1; i <= nleaves; ++i)
        leaves.push_back(i);
    std::vector<std::string> planar = shapes(leaves);
    // canonical form: recursively swap children so the smaller min-leaf comes
    // first, twisting the vertex label (regular representation)
    std::function<std::string(const std::string&)> canon = [&](const std::string& s) -> std::string {
        if (s[0] != 'v')
            return s;
        int vl = s[1] - '0';
        // split arguments
        int depth = 0;
        size_t cut = 0;
        for (size_t i = 3; i < s.size(); ++i) {
            if (s[i] == '(')
                ++depth;
            if (s[i] == ')')
                --depth;
            if (s[i] == ',' && depth == 0) {
                cut = i;
                break;
            }
        }
        std::string a = canon(s.substr(3, cut - 3));
        std::string b = canon(s.substr(cut + 1, s.size() - cut - 2));
        auto min_leaf = [](const std::string& t) {
            int m = 1 << 30;
            for (size_t i = 0; i < t.size(); ++i)
                if (isdigit(t[i]) && (i == 0 || !isdigit(t[i - 1])) && (i == 0 || t[i - 1] != 'v'))
                    m = std::min(m, t[i] - '0');
            return m;
        };
        if (min_leaf(a) > min_leaf(b)) {
            std::swap(a, b);
            vl = 1 - vl;  // regular representation twist
        }
        return "v" + std::to_string(vl) + "(" + a + "," + b + ")";
    };
    std::set<std::string> classes;
    for (auto& s : planar)
        classes.insert(canon(s));
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("free operad on the regular arity-2 representation: dims (1,2,12)") {
    SymmetricSequence m = sphere_sequence(F2, 0, 2);
    RealizedOperad t = free_operad(m, 3, Window{-2, 2});
    CHECK(t.exact);
    CHECK(t.op.seq.at(1).space.total_dim() == 1);
    CHECK(t.op.seq.at(2).space.dim(0) == 2);
    CHECK(t.op.seq.at(3).space.dim(0) == 12);
    // independent oracle路线 1: brute-force orbit count of labeled planar trees
    CHECK(oracle_binary_trees_regular_rep(2) == 2);
    CHECK(oracle_binary_trees_regular_rep(3) == 12);
    // independent route 2: the iterated composition recursion
    auto dims = free_operad_dims_by_recursion(m, 3, Window{-2, 2});
    CHECK(dims[1][0] == 1);
    CHECK(dims[2][0] == 2);
    CHECK(dims[3][0] == 12);
}

TEST_CASE("free operad on the trivial arity-2 representation has 3 trees in arity 3") {
    SymmetricSequence m = trivial_sequence(Q, 0, 2);
    RealizedOperad t = free_operad(m, 3, Window{-2, 2});
    CHECK(t.op.seq.at(3).space.dim(0) == 3);
    auto dims = free_operad_dims_by_recursion(m, 3, Window{-2, 2});
    CHECK(dims[3][0] == 3);
    CHECK(dims[2][0] == 1);
}

TEST_CASE("free operad is the unit operad on zero generators") {
    SymmetricSequence zero(F2, 2);
    RealizedOperad t = free_operad(zero, 2, Window{-1, 1});
    CHECK(t.op.seq.at(1).space.total_dim() == 1);
    CHECK(t.op.seq.at(2).space.empty());
    Report rep = check_operad(t.op);
    CHECK(rep.pass());
}

TEST_CASE("free operads pass the full axiom pack") {
    for (auto f : {F2, Q}) {
        SymmetricSequence m = sphere_sequence(f, 0, 2);
        RealizedOperad t = free_operad(m, 4, Window{-2, 2});
        Report rep = check_operad(t.op);
        if (!rep.pass())
            for (auto& e : rep.failures)
                MESSAGE(e.check, ": ", e.witness);
        CHECK(rep.pass());
    }
    // a generator with internal differential and odd degree
    SymmetricSequence md = disk_sequence(Q, 1, 2);
    RealizedOperad td = free_operad(md, 3, Window{-4, 4});
    Report repd = check_operad(td.op);
    if (!repd.pass())
        for (auto& e : repd.failures)
            MESSAGE(e.check, ": ", e.witness);
    CHECK(repd.pass());
}

TEST_CASE("towers of an arity-1 generator stabilize degreewise") {
    SymmetricSequence m = sphere_sequence(Q, 1, 1);
    RealizedOperad t = free_operad(m, 1, Window{0, 5});
    CHECK_FALSE(t.exact);
    for (Deg d = 0; d <= 5; ++d)
        CHECK(t.op.seq.at(1).space.dim(d) == 1);
    // a degree-0 arity-1 generator cannot stabilize
    SymmetricSequence bad = sphere_sequence(Q, 0, 1);
    CHECK_THROWS_AS(free_operad(bad, 1, Window{-1, 1}), Error);
}

TEST_CASE("endomorphism operad of a 2-dimensional space") {
    GradedVectorSpace v(F2);
    v.add(0, "a");
    v.add(0, "b");
    ChainComplex c(v);
    Operad e = endomorphism_operad(c, 3);
    CHECK(e.seq.at(2).space.dim(0) == 8);
    CHECK(e.seq.at(1).space.dim(0) == 4);
    Report rep = check_operad(e);
    if (!rep.pass())
        for (auto& en : rep.failures)
            MESSAGE(en.check, ": ", en.witness);
    CHECK(rep.pass());
}

TEST_CASE("endomorphism operad axioms on a random complex with differential") {
    Rng rng(99);
    for (auto f : {F2, Q}) {
        ChainComplex c = dgop_test::random_complex(f, rng, 3, 0, 1);
        Operad e = endomorphism_operad(c, 3);
        Report rep = check_operad(e);
        if (!rep.pass())
            for (auto& en : rep.failures)
                MESSAGE(en.check, ": ", en.witness);
        CHECK(rep.pass());
    }
}

TEST_CASE("coendomorphism operad") {
    ChainComplex u = unit_complex(Q);
    Operad ce = coendomorphism_operad(u, 4);
    for (int n = 1; n <= 4; ++n)
        CHECK(ce.seq.at(n).space.total_dim() == 1);
    CHECK(check_operad(ce).pass());

    Rng rng(7);
    ChainComplex c = dgop_test::random_complex(F3, rng, 3, 0, 1);
    Operad ce2 = coendomorphism_operad(c, 3);
    Report rep = check_operad(ce2);
    if (!rep.pass())
        for (auto& en : rep.failures)
            MESSAGE(en.check, ": ", en.witness);
    CHECK(rep.pass());
    // coEnd_V(1) and End_V(1) agree as dg algebras: same complex, same composition
    Operad e2 = endomorphism_operad(c, 1);
    for (Deg d : ce2.seq.at(1).space.degrees())
        CHECK(ce2.seq.at(1).space.dim(d) == e2.seq.at(1).space.dim(d));
}

TEST_CASE("A-infinity presentation realizes with d^2 = 0 through arity 4") {
    for (auto f : {F2, Q}) {
        QuasiFreePresentation q = a_infinity_presentation(f, 4);
        RealizedOperad r = realize(q, f, 4, Window{-1, 3});
        // d(m3) = m2 o_2 m2 - m2 o_1 m2 exactly
        TreeNode m3;
        m3.gen = "m3.w123";
        m3.children = {leaf_tree(1), leaf_tree(2), leaf_tree(3)};
        HVec dm3 = r.op.seq.at(3).d.apply(r.to_hvec(3, [&] {
            TreePoly p;
            p.add(m3, Scalar::one(f));
            return p;
        }()));
        TreePoly dp = r.to_poly(3, dm3);
        TreePoly expect;
        expect.add(parse_tree("m2.w12(1,m2.w12(2,3))"), Scalar::one(f));
        expect.add(parse_tree("m2.w12(m2.w12(1,2),3)"), -Scalar::one(f));
        for (auto& [k, mono] : expect.terms) {
            REQUIRE(dp.terms.count(k));
            CHECK(dp.terms.at(k).c == mono.c);
        }
        CHECK(dp.terms.size() == 2);
        // axiom pack on the truncation
        Report rep = check_operad(r.op);
        if (!rep.pass())
            for (auto& en : rep.failures)
                MESSAGE(en.check, ": ", en.witness);
        CHECK(rep.pass());
    }
}

TEST_CASE("attach_cell rejects non-cycle boundaries and accepts cycles") {
    QuasiFreePresentation q;
    // one free arity-2 degree-0 cell
    q = attach_cell(q, 2, 0, TreePoly{});
    CHECK(q.gens.size() == 1);
    RealizedOperad r = realize(q, F2, 3, Window{-2, 2});
    CHECK(r.op.seq.at(3).space.dim(0) == 12);  // same as T(S^0(2))

    // the A-infinity m3 boundary is a cycle
    TreePoly b;
    b.add(parse_tree("x0(1,x0(2,3))"), Scalar::one(F2));
    b.add(parse_tree("x0(x0(1,2),3)"), Scalar::one(F2));
    QuasiFreePresentation q2 = attach_cell(q, 3, 1, b, 3, Window{-2, 2});
    RealizedOperad r2 = realize(q2, F2, 3, Window{-2, 2});
    CHECK(check_operad(r2.op).pass());

    // a non-cycle boundary: d(m3)-shaped tree has nonzero differential once m3 exists
    TreePoly bad;
    bad.add(parse_tree("x1(1,2,3)"), Scalar::one(F2));
    // degree of x1 is 1, so this is a candidate boundary for a (3, 2) cell
    CHECK_THROWS_AS(attach_cell(q2, 3, 2, bad, 3, Window{-2, 2}), Error);
}

TEST_CASE("realize rejects inconsistent presentations") {
    // d(g) = h where d(h) != 0 relative to the induced differential
    QuasiFreePresentation q;
    GeneratorSpec h;
    h.name = "h";
    h.arity = 2;
    h.degree = 0;
    q.gens.push_back(h);
    GeneratorSpec g;
    g.name = "g";
    g.arity = 2;
    g.degree = 1;
    g.boundary.add(parse_tree("h(1,2)"), Scalar::one(F2));
    q.gens.push_back(g);
    GeneratorSpec k;
    k.name = "k";
    k.arity = 2;
    k.degree = 2;
    k.boundary.add(parse_tree("g(1,2)"), Scalar::one(F2));
    q.gens.push_back(k);
    // d(k) = g but d(g) = h != 0, so d² != 0
    CHECK_THROWS_AS(realize(q, F2, 2, Window{-2, 3}), Error);
}

TEST_CASE("operad morphism: quotient of the free operad onto associativity") {
    // T(S^0(2)) -> End of a 1-dim space in degree 0 sending both generators to
    // the multiplication; verifies up to arity 3
    SymmetricSequence m = sphere_sequence(Q, 0, 2);
    RealizedOperad t = free_operad(m, 3, Window{-1, 1});
    ChainComplex u = unit_complex(Q);
    Operad e = endomorphism_operad(u, 3);
    OperadMorphism phi;
    phi.maps.resize(4);
    for (int n = 1; n <= 3; ++n) {
        LinearMap mp(t.op.seq.at(n).space, e.seq.at(n).space, 0);
        for (Deg d : t.op.seq.at(n).space.degrees())
            for (int i = 0; i < t.op.seq.at(n).space.dim(d); ++i)
                if (d == 0)
                    mp.set(0, 0, i, Scalar::one(Q));
        phi.maps[n] = mp;
    }
    phi.maps[0] = LinearMap(t.op.seq.at(0).space, e.seq.at(0).space, 0);
    Report rep = verify_operad_morphism(t.op, e, phi);
    if (!rep.pass())
        for (auto& en : rep.failures)
            MESSAGE(en.check, ": ", en.witness);
    CHECK(rep.pass());

    // identity morphism verifies
    CHECK(verify_operad_morphism(t.op, t.op, identity_morphism(t.op)).pass());

    // a wrong image fails with a witness
    OperadMorphism badphi = phi;
    badphi.maps[2] = LinearMap(t.op.seq.at(2).space, e.seq.at(2).space, 0);
    Report bad = verify_operad_morphism(t.op, e, badphi);
    CHECK_FALSE(bad.pass());
    CHECK(!bad.failures.empty());
}
