#include <doctest.h>

#include <algorithm>

#include "nonbasis/oracle.hpp"
#include "nonbasis/theory.hpp"
#include "test_util.hpp"

using namespace nonbasis;
using namespace nonbasis::testutil;

namespace {

GroupType g(std::initializer_list<long long> mods) { return GroupType::from_moduli(mods); }

// Reference enumeration: all m-subsets containing 0 in colex order on the
// nonzero part, using the naive double-loop sumset.
BruteResult reference_S(const GroupType& G, int h, int m) {
    const int n = G.order();
    BruteResult res;
    std::vector<int> c(m - 1);
    for (int i = 0; i < m - 1; ++i) c[i] = i + 1;
    auto visit = [&](const std::vector<int>& picks) {
        Subset A(n);
        A.set(0);
        for (int v : picks) A.set(v);
        int s = naive_hfold(G, A, h).size();
        if (s < n && !res.witnesses.count(s)) res.witnesses.emplace(s, A);
    };
    if (m == 1) {
        visit({});
    } else {
        while (true) {
            visit(c);
            int i = 0;
            while (i < m - 1 && c[i] + 1 == (i + 1 < m - 1 ? c[i + 1] : n)) ++i;
            if (i == m - 1) break;
            ++c[i];
            for (int j = 0; j < i; ++j) c[j] = j + 1;
        }
    }
    for (const auto& [s, w] : res.witnesses) res.sizes.push_back(s);
    return res;
}

} // namespace

TEST_CASE("brute_S pinned example") {
    BruteResult r = brute_S(g({8}), 2, 4);
    CHECK(r.sizes == std::vector<long long>{4, 6, 7});
    CHECK(r.witnesses.at(4) == Subset::of(8, {0, 2, 4, 6}));
    CHECK(r.witnesses.at(6) == Subset::of(8, {0, 1, 4, 5}));
    CHECK(r.witnesses.at(7) == Subset::of(8, {0, 1, 2, 3}));
}

TEST_CASE("brute_S agrees with a naive reference enumeration") {
    std::mt19937 rng(41);
    for (int iter = 0; iter < 60; ++iter) {
        GroupType G = random_group(rng, 2, 14);
        std::uniform_int_distribution<int> md(1, std::min(6, G.order())), hd(2, 4);
        int m = md(rng), h = hd(rng);
        BruteResult fast = brute_S(G, h, m);
        BruteResult ref = reference_S(G, h, m);
        CHECK(fast.sizes == ref.sizes);
        for (long long s : ref.sizes) CHECK(fast.witnesses.at(s) == ref.witnesses.at(s));
    }
}

TEST_CASE("brute_S witnesses certify at their recorded sizes") {
    for (long long n = 2; n <= 20; ++n)
        for (const GroupType& G : abelian_group_types(n))
            for (int h : {2, 3}) {
                int m = int(max_incomplete_size(G, h));
                BruteResult r = brute_S(G, h, m);
                for (const auto& [s, w] : r.witnesses) {
                    CHECK(w.test(0));
                    CHECK(int(w.size()) == m);
                    CHECK(hfold(G, w, h).size() == s);
                }
            }
}

TEST_CASE("brute_S is deterministic across worker counts") {
    for (int workers : {2, 3, 5}) {
        BruteOptions opt;
        opt.workers = workers;
        BruteResult a = brute_S(g({2, 8}), 2, 8, opt);
        BruteResult b = brute_S(g({2, 8}), 2, 8);
        CHECK(a.sizes == b.sizes);
        CHECK(a.witnesses == b.witnesses);
    }
}

TEST_CASE("chi_brute") {
    CHECK(chi_brute(g({4}), 2) == 3);
    CHECK(chi_brute(g({4}), 3) == 3);
    CHECK(chi_brute(g({10}), 3) == 6);
    CHECK(chi_brute(g({5}), 4) == 2);
    for (long long n = 2; n <= 14; ++n)
        for (const GroupType& G : abelian_group_types(n))
            for (int h : {2, 3}) CHECK(chi_brute(G, h) == chi(G, h));
}

TEST_CASE("budget enforcement") {
    BruteOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(brute_S(g({32}), 2, 16, tiny), Error);
    try {
        brute_S(g({32}), 2, 16, tiny);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::search_budget);
    }
    CHECK_THROWS_AS(brute_S(g({128}), 2, 3), Error); // order > 64
}

TEST_CASE("verify_two_unequal") {
    CHECK(verify_two_unequal(g({6})).holds);
    CHECK(verify_two_unequal(g({2})).holds);
    CHECK(verify_two_unequal(g({2, 6})).holds);

    TwoUnequalResult r = verify_two_unequal(g({2, 4}));
    CHECK(!r.holds);
    REQUIRE(r.counterexample.has_value());
    CHECK(*r.counterexample == Subset::of(8, {0, 1, 4, 5}));

    r = verify_two_unequal(g({12}));
    CHECK(!r.holds);
    REQUIRE(r.counterexample.has_value());
    // a counterexample splits evenly across every index-2 subgroup
    for (const Subgroup& H : enumerate_subgroups(g({12}), 2))
        CHECK((*r.counterexample & H.members).size() == 3);

    CHECK_THROWS_AS(verify_two_unequal(g({9})), Error);
}

TEST_CASE("decompose_z7 round-trips the default chains") {
    for (int r = 1; r <= 2; ++r) {
        GroupType G = g(r == 1 ? std::initializer_list<long long>{7}
                               : std::initializer_list<long long>{7, 7});
        Subset A = realize_z7_chain(G);
        Z7ChainSpec spec = decompose_z7(G, A);
        CHECK(realize_z7_chain(G, spec) == A);
    }
}

TEST_CASE("decompose_z7 round-trips randomized chains") {
    GroupType G = g({7, 7});
    auto order7 = enumerate_subgroups(G, 7);
    REQUIRE(order7.size() == 8);
    std::mt19937 rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        Z7ChainSpec spec;
        spec.r = 2;
        const Subgroup& H1 = order7[rng() % order7.size()];
        spec.chain = {Subset::single(49, 0), H1.members, Subset::full(49)};
        auto members = H1.members.to_indices();
        int a0 = members[1 + rng() % 6];
        spec.a0 = a0;
        spec.a0_alt = G.add(a0, a0);
        int a1 = int(rng() % 49);
        while (H1.members.test(a1)) a1 = int(rng() % 49);
        spec.links = {a1};
        Subset A = realize_z7_chain(G, spec);
        CHECK(A.size() == 16);
        CHECK(hfold(G, A, 3).size() == 46);
        Z7ChainSpec back = decompose_z7(G, A);
        CHECK(realize_z7_chain(G, back) == A);
    }
}

TEST_CASE("decompose_z7 input validation") {
    GroupType G = g({7, 7});
    CHECK_THROWS_AS(decompose_z7(g({49}), Subset::of(49, {1, 2})), Error);
    CHECK_THROWS_AS(decompose_z7(G, Subset::of(49, {1, 2})), Error); // wrong size
    Subset bad = initial_segment(G, 16); // contains 0, so 0 is in 3A
    CHECK_THROWS_AS(decompose_z7(G, bad), Error);
}

TEST_CASE("survey covers all types and marks verdicts") {
    SurveyOptions opt;
    auto rows = survey(9, {2}, opt);
    CHECK(rows.size() == 12);
    for (const auto& rep : rows) {
        CHECK(rep.h == 2);
        CHECK(rep.verdict == Verdict::match);
        REQUIRE(rep.predicted.has_value());
        CHECK(rep.brute == *rep.predicted);
        CHECK(rep.chi_brute_value.has_value());
        CHECK(*rep.chi_brute_value == *rep.chi_formula);
    }

    auto rows4 = survey(6, {4}, opt);
    for (const auto& rep : rows4) CHECK(rep.verdict == Verdict::formula_unavailable);

    SurveyOptions tiny;
    tiny.budget = 2;
    auto starved = survey(12, {2}, tiny);
    bool any_budget = false;
    for (const auto& rep : starved)
        if (rep.verdict == Verdict::budget_exceeded) any_budget = true;
    CHECK(any_budget);
}
