#include <doctest.h>

#include "test_util.hpp"

using namespace nonbasis;
using namespace nonbasis::testutil;

TEST_CASE("sumset basics") {
    GroupType z4 = GroupType::from_moduli({4});
    CHECK(sumset(z4, Subset::of(4, {0, 1}), Subset::of(4, {0, 1})) == Subset::of(4, {0, 1, 2}));
    GroupType z5 = GroupType::from_moduli({5});
    CHECK(sumset(z5, Subset::of(5, {0, 1}), Subset::of(5, {2})) == Subset::of(5, {2, 3}));
    Subset A = Subset::of(5, {0, 2, 3});
    CHECK(sumset(z5, A, Subset::single(5, 0)) == A);
    CHECK_THROWS_AS(sumset(z5, Subset(5), A), Error);
}

TEST_CASE("hfold basics") {
    GroupType z7 = GroupType::from_moduli({7});
    CHECK(hfold(z7, Subset::of(7, {0, 1}), 3) == Subset::of(7, {0, 1, 2, 3}));
    GroupType z9 = GroupType::from_moduli({9});
    CHECK(hfold(z9, Subset::of(9, {0, 1, 2}), 3) == Subset::of(9, {0, 1, 2, 3, 4, 5, 6}));
    CHECK(hfold(z9, Subset::full(9), 3).is_full());
    Subset A = Subset::of(7, {2, 5});
    CHECK(hfold(z7, A, 1) == A);
    CHECK_THROWS_AS(hfold(z7, A, 0), Error);
}

TEST_CASE("bitset sumset equals the naive double loop") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 1000; ++iter) {
        GroupType G = random_group(rng, 2, 128);
        Subset A = random_nonempty_subset(rng, G.order());
        Subset B = random_nonempty_subset(rng, G.order());
        CHECK(sumset(G, A, B) == naive_sumset(G, A, B));
    }
}

TEST_CASE("repeated-doubling hfold equals the naive fold") {
    std::mt19937 rng(12);
    for (int iter = 0; iter < 300; ++iter) {
        GroupType G = random_group(rng, 2, 64);
        Subset A = random_nonempty_subset(rng, G.order());
        for (int h : {2, 3, 4, 5}) CHECK(hfold(G, A, h) == naive_hfold(G, A, h));
    }
}

TEST_CASE("hfold is monotone and translation covariant") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 300; ++iter) {
        GroupType G = random_group(rng, 2, 64);
        const int n = G.order();
        Subset A = random_nonempty_subset(rng, n);
        Subset B = A | random_nonempty_subset(rng, n);
        int h = 2 + int(rng() % 3);
        CHECK(hfold(G, B, h).contains(hfold(G, A, h)));
        int t = int(rng() % n);
        Subset shifted = translate(G, A, t);
        CHECK(hfold(G, shifted, h) ==
              translate(G, hfold(G, A, h), G.scalar_mul(h, t)));
        // hfold(A, h+1) contains hfold(A, h) + a for each a in A
        Subset next = hfold(G, A, h + 1);
        Subset cur = hfold(G, A, h);
        A.for_each([&](int a) { CHECK(next.contains(translate(G, cur, a))); });
    }
}

TEST_CASE("stabilizer") {
    GroupType z4 = GroupType::from_moduli({4});
    CHECK(stabilizer_of(z4, Subset::full(4)).order == 4);
    CHECK(stabilizer_of(z4, Subset::of(4, {0, 2})).members == Subset::of(4, {0, 2}));
    GroupType z5 = GroupType::from_moduli({5});
    CHECK(stabilizer_of(z5, Subset::of(5, {0, 1})).order == 1);
}

TEST_CASE("stabilizer is the maximal stabilizing subgroup") {
    std::mt19937 rng(14);
    for (int iter = 0; iter < 60; ++iter) {
        GroupType G = random_group(rng, 2, 64);
        Subset S = random_nonempty_subset(rng, G.order());
        Subgroup H = stabilizer_of(G, S);
        CHECK(is_subgroup(G, H.members));
        CHECK(is_union_of_cosets(G, S, H));
        for (const Subgroup& K : enumerate_subgroups(G))
            if (is_union_of_cosets(G, S, K)) CHECK(H.members.contains(K.members));
    }
}

TEST_CASE("is_union_of_cosets") {
    GroupType z4 = GroupType::from_moduli({4});
    Subgroup H = canonical_subgroup(z4, {2});
    CHECK(is_union_of_cosets(z4, Subset::of(4, {0, 2}), H));
    CHECK(!is_union_of_cosets(z4, Subset::of(4, {0, 1}), H));
    GroupType z9 = GroupType::from_moduli({9});
    CHECK(is_union_of_cosets(z9, Subset::of(9, {0, 1, 3, 4, 6, 7}),
                             canonical_subgroup(z9, {3})));
}

TEST_CASE("certificates") {
    GroupType z4 = GroupType::from_moduli({4});
    SumsetCertificate c = certify(z4, Subset::of(4, {0, 2}), 2);
    CHECK(c.k1 == 1);
    CHECK(c.k2 == 1);
    CHECK(c.stabilizer.members == Subset::of(4, {0, 2}));
    CHECK(!c.complete);

    GroupType z8 = GroupType::from_moduli({8});
    c = certify(z8, Subset::of(8, {0, 1, 4, 5}), 2);
    CHECK(c.hfold_size == 6);
    CHECK(!c.complete);

    GroupType z7 = GroupType::from_moduli({7});
    c = certify(z7, Subset::of(7, {1, 2}), 3);
    CHECK(c.hsum == Subset::of(7, {3, 4, 5, 6}));
    CHECK(!c.hsum.test(0));
}

TEST_CASE("Kneser inequality on random instances") {
    std::mt19937 rng(15);
    for (int iter = 0; iter < 1000; ++iter) {
        GroupType G = random_group(rng, 2, 64);
        Subset A = random_nonempty_subset(rng, G.order());
        int h = 2 + int(rng() % 3);
        SumsetCertificate c = certify(G, A, h); // certify throws on violation
        CHECK(c.hfold_size >= c.kneser_bound);
        CHECK(c.hfold_size % c.stabilizer.order == 0);
    }
}
