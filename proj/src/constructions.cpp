#include "nonbasis/constructions.hpp"

#include <algorithm>

#include "nonbasis/theory.hpp"

namespace nonbasis {

Subset initial_segment(const GroupType& G, int m, bool star) {
    const int n = G.order();
    if (m < 1 || m >= n) throw Error(Errc::range, "m must satisfy 1 <= m < n");
    Subset A(n);
    if (star) {
        int q_r = G.coords(m).back();
        if (q_r < 3)
            throw Error(Errc::degenerate_star, "I*(G,m) requires the last digit of m to be >= 3");
        for (int i = 0; i + 1 < m; ++i) A.set(i);
        A.set(m);
    } else {
        for (int i = 0; i < m; ++i) A.set(i);
    }
    return A;
}

long long segment_size_prediction(const GroupType& G, int m, int h, bool star) {
    if (m < 1 || m >= G.order()) throw Error(Errc::range, "m must satisfy 1 <= m < n");
    auto q = G.coords(m);
    const auto& f = G.factors();
    for (std::size_t k = 0; k < q.size(); ++k)
        if ((long long)h * q[k] >= f[k])
            throw Error(Errc::hypothesis_not_met, "digit hypothesis h*q_k < n_k fails");
    if (q.back() < (star ? 3 : 1))
        throw Error(Errc::hypothesis_not_met, "last digit of m too small");
    return star ? (long long)h * m : (long long)h * m - h + 1;
}

Subset lift(const GroupType& G, const Subgroup& H, const Subset& B) {
    auto cosets = coset_decomposition(G, H);
    if (B.universe() != int(cosets.size()))
        throw Error(Errc::invalid_input, "B is not indexed over G/H");
    Subset A(G.order());
    B.for_each([&](int j) { A |= cosets[j]; });
    return A;
}

GroupType quotient_group(const std::vector<int>& dvec) {
    std::vector<int> factors;
    for (int d : dvec)
        if (d > 1) factors.push_back(d);
    if (factors.empty()) throw Error(Errc::invalid_quotient, "trivial quotient");
    return GroupType::of_type(factors);
}

Subset lift_through(const GroupType& G, const std::vector<int>& dvec, const Subset& B) {
    GroupType K = quotient_group(dvec);
    if (B.universe() != K.order())
        throw Error(Errc::invalid_input, "B is not indexed over the quotient type");
    const int n = G.order();
    Subset A(n);
    std::vector<int> qc;
    for (int i = 0; i < n; ++i) {
        auto c = G.coords(i);
        qc.clear();
        for (std::size_t k = 0; k < dvec.size(); ++k)
            if (dvec[k] > 1) qc.push_back(c[k] % dvec[k]);
        if (B.test(K.index_of(qc))) A.set(i);
    }
    return A;
}

Subset punctured_subgroup_set(const GroupType& K, int q) {
    const int d = K.order();
    if (q == 2) {
        if (d % 2 != 0 || d <= 4)
            throw Error(Errc::construction_hypothesis, "punctured set needs |K| even and > 4");
    } else if (q == 3) {
        if (d % 3 != 0 || d < 9)
            throw Error(Errc::construction_hypothesis,
                        "punctured set needs 3 | |K| and |K| >= 9");
    } else {
        throw Error(Errc::construction_hypothesis, "q must be 2 or 3");
    }
    Subgroup H = canonical_subgroup(K, factor_index(K, q));
    int h0 = -1;
    H.members.for_each([&](int i) {
        if (i != 0 && h0 < 0) h0 = i;
    });
    int g0 = -1;
    for (int i = 0; i < d && g0 < 0; ++i)
        if (!H.members.test(i)) g0 = i;
    Subset B = H.members;
    B.reset(h0);
    B.set(g0);
    return B;
}

Subset special_replacement_set(const GroupType& G) {
    const int n = G.order();
    const int r = G.rank();
    std::vector<int> removed(r), added(r);
    if (G.is_elementary(3) && r >= 3) {
        // (1,...,1,0,2,2) -> (1,...,1,2,0,0)
        std::fill(removed.begin(), removed.end(), 1);
        std::fill(added.begin(), added.end(), 1);
        removed[r - 3] = 0, removed[r - 2] = 2, removed[r - 1] = 2;
        added[r - 3] = 2, added[r - 2] = 0, added[r - 1] = 0;
    } else if (G.is_elementary(5) && r >= 2) {
        // (2,...,2,1,4) -> (2,...,2,3,0)
        std::fill(removed.begin(), removed.end(), 2);
        std::fill(added.begin(), added.end(), 2);
        removed[r - 2] = 1, removed[r - 1] = 4;
        added[r - 2] = 3, added[r - 1] = 0;
    } else {
        throw Error(Errc::not_applicable,
                    "replacement sets exist only for Z_3^r (r>=3) and Z_5^r (r>=2)");
    }
    Subset A = initial_segment(G, (n - 1) / 2);
    A.reset(G.index_of(removed));
    A.set(G.index_of(added));
    return A;
}

Subset ap_lift(const GroupType& G, int p) {
    auto q = smallest_prime_2mod3(G.order());
    if (!q || *q != p)
        throw Error(Errc::not_applicable,
                    "p must be the smallest prime divisor of n congruent to 2 mod 3");
    std::vector<int> dvec = factor_index(G, p);
    Subset B(p);
    for (int i = 0; i < (p + 1) / 3; ++i) B.set(i);
    return lift_through(G, dvec, B);
}

Z7ChainSpec default_z7_chain(const GroupType& G) {
    if (!G.is_elementary(7))
        throw Error(Errc::not_applicable, "chain sets exist only in elementary abelian 7-groups");
    const int r = G.rank();
    const int n = G.order();
    Z7ChainSpec spec;
    spec.r = r;
    // H_k: the span of the last k coordinates.
    for (int k = 0; k <= r; ++k) {
        Subset H(n);
        int hk = 1;
        for (int i = 0; i < k; ++i) hk *= 7;
        for (int i = 0; i < hk; ++i) H.set(i);
        spec.chain.push_back(std::move(H));
    }
    spec.a0 = 1;      // (0,...,0,1)
    spec.a0_alt = 2;  // (0,...,0,2)
    int w = 1;
    for (int k = 1; k < r; ++k) {
        w *= 7;
        spec.links.push_back(w); // unit vector entering H_{k+1}
    }
    return spec;
}

Subset realize_z7_chain(const GroupType& G, const std::optional<Z7ChainSpec>& spec_opt) {
    if (!G.is_elementary(7))
        throw Error(Errc::not_applicable, "chain sets exist only in elementary abelian 7-groups");
    const int r = G.rank();
    const int n = G.order();
    Z7ChainSpec spec = spec_opt ? *spec_opt : default_z7_chain(G);
    if (spec.r != r || int(spec.chain.size()) != r + 1 || int(spec.links.size()) != r - 1)
        throw Error(Errc::invalid_chain, "chain arity mismatch");
    int expect = 1;
    for (int k = 0; k <= r; ++k) {
        if (spec.chain[k].size() != expect || !is_subgroup(G, spec.chain[k]))
            throw Error(Errc::invalid_chain, "H_k is not a subgroup of order 7^k");
        if (k > 0 && !spec.chain[k].contains(spec.chain[k - 1]))
            throw Error(Errc::invalid_chain, "chain is not ascending");
        expect *= 7;
    }
    if (spec.a0 == spec.a0_alt || spec.a0 == 0 || spec.a0_alt == 0 ||
        !spec.chain[1].test(spec.a0) || !spec.chain[1].test(spec.a0_alt))
        throw Error(Errc::invalid_chain, "a0, a0' must be distinct nonzero elements of H_1");
    for (int k = 1; k < r; ++k) {
        int a = spec.links[k - 1];
        if (!spec.chain[k + 1].test(a) || spec.chain[k].test(a))
            throw Error(Errc::invalid_chain, "a_k must lie in H_{k+1} \\ H_k");
    }
    Subset A(n);
    A.set(spec.a0);
    A.set(spec.a0_alt);
    for (int k = 1; k < r; ++k) {
        int a = spec.links[k - 1];
        A |= translate(G, spec.chain[k], a);
        A |= translate(G, spec.chain[k], G.add(a, a));
    }
    if (A.size() != (n - 1) / 3)
        throw Error(Errc::invalid_chain, "assembled set has wrong size");
    if (hfold(G, A, 3).test(0))
        throw Error(Errc::invalid_choices, "assembled set has 0 in 3A");
    return A;
}

namespace {

Subset realize_h2(const GroupType& G, long long target) {
    const long long n = G.order();
    if (n % 2 == 0) {
        long long d = n / (n - target);
        if (d == 2) return canonical_subgroup(G, factor_index(G, 2)).members;
        if (d == 4) {
            Subset B(4);
            B.set(0);
            B.set(1);
            return lift_through(G, factor_index(G, 4), B);
        }
        std::vector<int> dvec = factor_index(G, int(d));
        return lift_through(G, dvec, punctured_subgroup_set(quotient_group(dvec), 2));
    }
    if (target == n - 2) return initial_segment(G, int((n - 1) / 2));
    // target == n - 1
    if ((G.exponent() - 1) / 2 >= 3) return initial_segment(G, int((n - 1) / 2), true);
    return special_replacement_set(G);
}

Subset realize_h3(const GroupType& G, long long target) {
    const long long n = G.order();
    H3Case c = classify_h3(n);
    switch (c.tag) {
    case H3Tag::has_prime_2mod3:
        return ap_lift(G, c.p);
    case H3Tag::div3_no_2mod3: {
        if (n % (n - target) == 0) {
            long long d = n / (n - target);
            if (d % 3 == 0 && d != 3) {
                std::vector<int> dvec = factor_index(G, int(d));
                return lift_through(G, dvec,
                                    punctured_subgroup_set(quotient_group(dvec), 3));
            }
        }
        long long d = 2 * n / (n - target);
        if (d == 3) {
            // n - 2n/3 = n/3: the preimage of a single nonzero element of Z_3.
            Subset B(3);
            B.set(1);
            return lift_through(G, factor_index(G, 3, true), B);
        }
        std::vector<int> dvec = factor_index(G, int(d), true);
        GroupType K = quotient_group(dvec);
        return lift_through(G, dvec, initial_segment(K, int(d / 3)));
    }
    case H3Tag::all_divisors_1mod3:
        if (target == n - 3) return initial_segment(G, int((n - 1) / 3));
        return initial_segment(G, int((n - 1) / 3), true);
    }
    throw Error(Errc::invalid_input, "unreachable");
}

} // namespace

Subset realize(const GroupType& G, int h, long long target) {
    auto predicted = predict_S(G, h);
    if (!std::binary_search(predicted.begin(), predicted.end(), target))
        throw Error(Errc::unrealizable_target, "target is not in the predicted S(G,h)");
    Subset A = (h == 2) ? realize_h2(G, target) : realize_h3(G, target);
    SumsetCertificate cert = certify(G, A, h);
    if (cert.set_size != max_incomplete_size(G, h) || cert.complete ||
        cert.hfold_size != target)
        throw Error(Errc::theorem_violation,
                    "constructed witness does not certify at the classified size");
    return A;
}

} // namespace nonbasis
