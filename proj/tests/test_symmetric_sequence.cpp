#include "doctest.h"
#include "dgop/symmetric_sequence.hpp"
#include "helpers.hpp"

using namespace dgop;
using dgop_test::Rng;

namespace {
const Field F2{2};
const Field Q{0};

// seeded random symmetric sequence assembled from valid building blocks
SymmetricSequence random_sequence(Field f, Rng& rng, int max_arity, Deg lo, Deg hi) {
    SymmetricSequence s(f, max_arity);
    bool nonempty = false;
    for (int n = 0; n <= max_arity; ++n) {
        if (rng.upto(3) == 0 && (nonempty || n < max_arity))
            continue;  // leave arity empty sometimes
        Deg k = lo + rng.upto(hi - lo + 1);
        SymmetricSequence piece;
        switch (rng.upto(3)) {
            case 0: piece = trivial_sequence(f, k, n); break;
            case 1: piece = sphere_sequence(f, k, n); break;
            default: piece = disk_sequence(f, k == lo ? k + 1 : k, n); break;
        }
        SymmetricSequence padded(f, max_arity);
        padded.component[n] = piece.component[n];
        padded.action[n] = piece.action[n];
        SymmetricSequence merged = seq_direct_sum(s, padded);
        s = merged;
        nonempty = true;
    }
    return s;
}

}  // namespace

TEST_CASE("unit sequence matches the defining display") {
    SymmetricSequence i = unit_sequence(Q);
    i.validate();
    CHECK(i.at(1).space.total_dim() == 1);
    CHECK(i.at(1).space.dim(0) == 1);
    CHECK(i.at(0).space.empty());
    CHECK(i.zero_at(2));
}

TEST_CASE("sphere and disk sequences") {
    SymmetricSequence s = sphere_sequence(F2, 0, 2);
    s.validate();
    CHECK(s.at(2).space.dim(0) == 2);
    CHECK(s.at(2).space.total_dim() == 2);

    SymmetricSequence d = disk_sequence(Q, 3, 2);
    d.validate();
    CHECK(d.at(2).space.dim(3) == 2);
    CHECK(d.at(2).space.dim(2) == 2);
    CHECK(betti_numbers(d.at(2)).empty());  // acyclic

    SymmetricSequence s0 = sphere_sequence(Q, 1, 0);
    CHECK(s0.at(0).space.total_dim() == 1);
}

TEST_CASE("regular representation action satisfies Coxeter relations") {
    for (int p : {2, 3, 4}) {
        SymmetricSequence s = sphere_sequence(F2, 0, p);
        s.validate();
        // the action is free: s_i has no fixed basis vector
        for (int i = 1; i < p; ++i)
            for (int c = 0; c < s.at(p).space.dim(0); ++c) {
                HVec im = s.action[p][i - 1].apply_basis(0, c);
                REQUIRE(im.c.size() == 1);
                CHECK(im.c.begin()->first != c);
            }
    }
}

TEST_CASE("compose_product with the unit is the identity up to relabeling") {
    Window w{-6, 6};
    Rng rng(5);
    for (int trial = 0; trial < 4; ++trial) {
        Field f = trial % 2 ? F2 : Q;
        SymmetricSequence m = random_sequence(f, rng, 3, -1, 2);
        SymmetricSequence i = unit_sequence(f);
        SymmetricSequence l = compose_product(i, m, 3, w);
        SymmetricSequence r = compose_product(m, i, 3, w);
        l.validate();
        r.validate();
        for (int n = 0; n <= 3; ++n) {
            for (Deg d : m.component[n].space.degrees()) {
                CHECK(l.component[n].space.dim(d) == m.component[n].space.dim(d));
                CHECK(r.component[n].space.dim(d) == m.component[n].space.dim(d));
            }
            // canonical relabeling is a chain isomorphism commuting with the action:
            // check rank of differentials and action traces agree
            for (Deg d : m.component[n].space.degrees()) {
                CHECK(rank(l.component[n].d.dense_block(d)) == rank(m.component[n].d.dense_block(d)));
                CHECK(rank(r.component[n].d.dense_block(d)) == rank(m.component[n].d.dense_block(d)));
            }
        }
    }
}

TEST_CASE("S0(2) composed with itself has the oracle dimension 24 in arity 4") {
    SymmetricSequence m = sphere_sequence(F2, 0, 2);
    SymmetricSequence c = compose_product(m, m, 4, Window{-2, 2});
    c.validate();

    // brute-force oracle: enumerate the labeled basis of the direct sum over
    // the ordered 2+2 partitions of {1,2,3,4} and count S_2-orbits directly
    auto parts = ordered_partitions(4, 2, false);
    int labeled = 0;
    std::set<std::set<std::string>> orbits;
    std::vector<std::string> s2 = {"w12", "w21"};
    for (auto& blocks : parts) {
        if (blocks[0].size() != 2 || blocks[1].size() != 2)
            continue;
        for (auto& ml : s2)
            for (auto& x1 : s2)
                for (auto& x2 : s2) {
                    ++labeled;
                    auto name = [&](const std::vector<std::vector<int>>& bs, const std::string& a,
                                    const std::string& b, const std::string& c2) {
                        return a + "/" + std::to_string(bs[0][0]) + std::to_string(bs[0][1]) + ":" +
                               b + "/" + std::to_string(bs[1][0]) + std::to_string(bs[1][1]) + ":" + c2;
                    };
                    // swap = right multiplication on m by the transposition,
                    // blocks and arguments exchanged
                    std::string swapped_m = (ml == "w12") ? "w21" : "w12";
                    std::set<std::string> orbit{name(blocks, ml, x1, x2),
                                                name({blocks[1], blocks[0]}, swapped_m, x2, x1)};
                    orbits.insert(orbit);
                }
    }
    CHECK(labeled == 48);
    CHECK(static_cast<int>(orbits.size()) == 24);
    CHECK(c.component[4].space.dim(0) == 24);
    CHECK(c.component[4].space.total_dim() == 24);
}

TEST_CASE("compose_product vanishes when no partition matches the supports") {
    // M concentrated in arity 3, N in arity 2: (M∘N)(5) needs 3 blocks summing
    // to 5 with each of size 2 -- impossible
    SymmetricSequence m = trivial_sequence(Q, 0, 3);
    SymmetricSequence n = trivial_sequence(Q, 0, 2);
    SymmetricSequence c = compose_product(m, n, 6, Window{-2, 2});
    CHECK(c.component[5].space.empty());
    // 90 ordered partitions of {1..6} into three 2-blocks, free S_3 action
    CHECK(c.component[6].space.dim(0) == 15);
    CHECK(c.component[4].space.empty());
}

TEST_CASE("associativity of the composition product on dimensions") {
    Rng rng(17);
    Window w{-6, 6};
    int done = 0;
    for (int trial = 0; done < 6; ++trial) {
        Field f = trial % 2 ? F2 : Q;
        SymmetricSequence a = random_sequence(f, rng, 3, -1, 1);
        SymmetricSequence b = random_sequence(f, rng, 2, 0, 1);
        SymmetricSequence c = random_sequence(f, rng, 2, -1, 1);
        if (!b.zero_at(0) || !c.zero_at(0)) {
            // keep inner sequences without arity-0 parts so supports stay bounded
            continue;
        }
        SymmetricSequence l = compose_product(compose_product(a, b, 4, w), c, 4, w);
        SymmetricSequence r = compose_product(a, compose_product(b, c, 4, w), 4, w);
        l.validate();
        r.validate();
        for (int n = 0; n <= 4; ++n) {
            std::vector<Deg> degs = l.component[n].space.degrees();
            for (Deg d : r.component[n].space.degrees())
                degs.push_back(d);
            for (Deg d : degs)
                CHECK(l.component[n].space.dim(d) == r.component[n].space.dim(d));
        }
        ++done;
    }
}

TEST_CASE("composition dimensions are bilinear in direct sums") {
    Rng rng(29);
    Window w{-6, 6};
    Field f = F2;
    SymmetricSequence m1 = random_sequence(f, rng, 2, 0, 1);
    SymmetricSequence m2 = random_sequence(f, rng, 2, 0, 1);
    SymmetricSequence n = trivial_sequence(f, 0, 2);
    SymmetricSequence lhs = compose_product(seq_direct_sum(m1, m2), n, 3, w);
    SymmetricSequence r1 = compose_product(m1, n, 3, w);
    SymmetricSequence r2 = compose_product(m2, n, 3, w);
    for (int k = 0; k <= 3; ++k) {
        std::vector<Deg> degs = lhs.component[k].space.degrees();
        for (Deg d : degs)
            CHECK(lhs.component[k].space.dim(d) ==
                  r1.component[k].space.dim(d) + r2.component[k].space.dim(d));
    }
}

TEST_CASE("truncation overflow is a loud error") {
    SymmetricSequence m = sphere_sequence(Q, 5, 2);
    CHECK_THROWS_AS(compose_product(m, m, 4, Window{-2, 2}), Error);
    std::vector<std::string> notes;
    SymmetricSequence c = compose_product(m, m, 4, Window{-2, 2}, true, &notes);
    CHECK(!notes.empty());
}
