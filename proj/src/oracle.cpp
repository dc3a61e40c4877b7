#include "nonbasis/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <thread>

#include "nonbasis/sumset.hpp"

namespace nonbasis {

unsigned long long default_budget() {
    if (const char* env = std::getenv("NONBASIS_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ull;
}

namespace {

unsigned long long binom_clamped(int n, int k, unsigned long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (unsigned long long)(n - k + i) / i;
    }
    return std::min(r, cap + 1);
}

constexpr int kMaxH = 12;

inline std::uint64_t translate64(std::uint64_t s, const std::uint16_t* row) {
    std::uint64_t out = 0;
    while (s) {
        out |= std::uint64_t{1} << row[std::countr_zero(s)];
        s &= s - 1;
    }
    return out;
}

using Powers = std::array<std::uint64_t, kMaxH + 1>;

// new jA = union over t of (t*x + old (j-t)A), old 0A = {0}.
inline void add_element(const std::uint16_t* tbl, int n, int h, const Powers& in, Powers& out,
                        int x) {
    out = in;
    int tx = 0;
    for (int t = 1; t <= h; ++t) {
        tx = tbl[std::size_t(tx) * n + x];
        const std::uint16_t* row = tbl + std::size_t(tx) * n;
        out[t] |= std::uint64_t{1} << tx;
        for (int j = t + 1; j <= h; ++j) out[j] |= translate64(in[j - t], row);
    }
}

// DFS over m-subsets containing 0, colex on the nonzero part (largest
// element chosen first, iterated ascending).  Subtrees whose partial hA
// already covers G are pruned.
struct Searcher {
    const std::uint16_t* tbl;
    int n, h, m;
    std::uint64_t full;
    bool stop_after_first = false;

    std::array<int, 65> wit_branch{};    // top-level branch per achieved size
    std::array<std::uint64_t, 65> wit_set{};
    std::uint64_t seen_sizes = 0;
    bool found_any = false;

    Searcher(const std::uint16_t* tbl, int n, int h, int m)
        : tbl(tbl), n(n), h(h), m(m),
          full(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) {
        wit_branch.fill(-1);
    }

    int cur_branch = 0;

    void leaf(const Powers& pw, std::uint64_t setmask) {
        std::uint64_t hA = pw[h];
        int s = std::popcount(hA);
        found_any = true;
        if (!(seen_sizes >> s & 1)) {
            seen_sizes |= std::uint64_t{1} << s;
            wit_branch[s] = cur_branch;
            wit_set[s] = setmask;
        }
    }

    void rec(int need, int maxv, const Powers& pw, std::uint64_t setmask) {
        if (need == 0) {
            leaf(pw, setmask);
            return;
        }
        for (int v = need; v <= maxv; ++v) {
            if (stop_after_first && found_any) return;
            Powers npw;
            add_element(tbl, n, h, pw, npw, v);
            if (npw[h] == full) continue;
            rec(need - 1, v - 1, npw, setmask | (std::uint64_t{1} << v));
        }
    }

    /// Runs the top-level branches in `tops` (each a candidate for the
    /// largest nonzero element), ascending.
    void run(const std::vector<int>& tops) {
        Powers base{};
        for (int j = 0; j <= h; ++j) base[j] = 1; // powers of {0}
        const int k = m - 1;
        if (k == 0) {
            if (base[h] != full) leaf(base, 1);
            return;
        }
        for (int v : tops) {
            if (stop_after_first && found_any) return;
            cur_branch = v;
            Powers npw;
            add_element(tbl, n, h, base, npw, v);
            if (npw[h] == full) continue;
            rec(k - 1, v - 1, npw, std::uint64_t{1} | (std::uint64_t{1} << v));
        }
    }
};

Subset subset_from_mask(int n, std::uint64_t mask) {
    Subset s(n);
    while (mask) {
        s.set(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

BruteResult run_search(const GroupType& G, int h, int m, const BruteOptions& opt,
                       bool stop_after_first, bool* found) {
    const int n = G.order();
    if (h < 1 || h > kMaxH) throw Error(Errc::invalid_h, "h out of supported range");
    if (m < 1 || m > n) throw Error(Errc::invalid_input, "m must satisfy 1 <= m <= n");
    if (binom_clamped(n - 1, m - 1, opt.budget) > opt.budget)
        throw Error(Errc::search_budget, "C(n-1, m-1) exceeds the subset-count budget");
    if (n > 64 || !G.table())
        throw Error(Errc::search_budget, "exhaustive search requires order <= 64");

    std::vector<int> tops;
    for (int v = m - 1; v <= n - 1; ++v) tops.push_back(v);

    int workers = std::max(1, opt.workers);
    if (m == 1 || stop_after_first) workers = 1;
    std::vector<Searcher> searchers;
    searchers.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        searchers.emplace_back(G.table(), n, h, m);
        searchers.back().stop_after_first = stop_after_first;
    }
    std::vector<std::vector<int>> parts(workers);
    for (std::size_t i = 0; i < tops.size(); ++i) parts[i % workers].push_back(tops[i]);

    if (workers == 1) {
        searchers[0].run(tops);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] { searchers[w].run(parts[w]); });
        for (auto& t : threads) t.join();
    }

    // Merge: colex-smallest witness per size = smallest top-level branch.
    BruteResult res;
    bool any = false;
    for (int s = 0; s <= n; ++s) {
        int best = -1;
        std::uint64_t bestset = 0;
        for (const Searcher& sr : searchers) {
            any = any || sr.found_any;
            if (sr.wit_branch[s] < 0) continue;
            if (best < 0 || sr.wit_branch[s] < best) {
                best = sr.wit_branch[s];
                bestset = sr.wit_set[s];
            }
        }
        if (best >= 0) {
            res.sizes.push_back(s);
            res.witnesses.emplace(s, subset_from_mask(n, bestset));
        }
    }
    if (found) *found = any;
    return res;
}

} // namespace

BruteResult brute_S(const GroupType& G, int h, int m, const BruteOptions& opt) {
    return run_search(G, h, m, opt, false, nullptr);
}

int chi_brute(const GroupType& G, int h, const BruteOptions& opt) {
    const int n = G.order();
    for (int m = n - 1; m >= 1; --m) {
        bool found = false;
        run_search(G, h, m, opt, true, &found);
        if (found) return m + 1;
    }
    return 1;
}

TwoUnequalResult verify_two_unequal(const GroupType& G, const BruteOptions& opt) {
    const int n = G.order();
    if (n % 2 != 0) throw Error(Errc::not_applicable, "requires a group of even order");
    if (binom_clamped(n, n / 2, opt.budget) > opt.budget || n > 64)
        throw Error(Errc::search_budget, "C(n, n/2) exceeds the subset-count budget");

    std::vector<std::uint64_t> subgroup_masks;
    for (const Subgroup& H : enumerate_subgroups(G, 2)) {
        std::uint64_t msk = 0;
        H.members.for_each([&](int i) { msk |= std::uint64_t{1} << i; });
        subgroup_masks.push_back(msk);
    }

    const int k = n / 2;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int v : c) mask |= std::uint64_t{1} << v;
        bool some_unequal = false;
        for (std::uint64_t H : subgroup_masks)
            if (2 * std::popcount(mask & H) != k) {
                some_unequal = true;
                break;
            }
        if (!some_unequal) return {false, subset_from_mask(n, mask)};
        // colex successor
        int i = 0;
        while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : n)) ++i;
        if (i == k) break;
        ++c[i];
        for (int j = 0; j < i; ++j) c[j] = j;
    }
    return {true, {}};
}

Z7ChainSpec decompose_z7(const GroupType& G, const Subset& A) {
    if (!G.is_elementary(7))
        throw Error(Errc::invalid_input, "decomposition applies to elementary abelian 7-groups");
    const int n = G.order();
    const int r = G.rank();
    if (A.size() != (n - 1) / 3)
        throw Error(Errc::invalid_input, "set does not have the maximum 3-incomplete size");
    if (hfold(G, A, 3).test(0))
        throw Error(Errc::invalid_input, "0 lies in 3A; translate the set first");

    auto subs = enumerate_subgroups(G);
    std::map<int, std::vector<const Subgroup*>> by_order;
    for (const Subgroup& H : subs) by_order[H.order].push_back(&H);

    Z7ChainSpec spec;
    spec.r = r;
    spec.chain.assign(r + 1, Subset(n));
    spec.links.assign(r - 1, 0);
    spec.chain[r] = Subset::full(n);
    spec.chain[0] = Subset::single(n, 0);

    // Peels one index-7 layer at a time; backtracks across candidate
    // subgroups if an inner level fails.
    auto peel = [&](auto&& self, int level, const Subset& S, const Subset& AS) -> bool {
        if (level == 1) {
            if (AS.size() != 2 || AS.test(0)) return false;
            auto idx = AS.to_indices();
            spec.a0 = idx[0];
            spec.a0_alt = idx[1];
            return true;
        }
        int sub_order = S.size() / 7;
        int inner_expect = (sub_order - 1) / 3;
        for (const Subgroup* H : by_order[sub_order]) {
            if (!S.contains(H->members)) continue;
            Subset inner = AS & H->members;
            if (inner.size() != inner_expect) continue;
            Subset R = AS - inner;
            if (R.size() != 2 * sub_order) continue;
            int u = R.first();
            Subset U = translate(G, H->members, u);
            if (!R.contains(U)) continue;
            Subset R2 = R - U;
            int v = R2.first();
            Subset V = translate(G, H->members, v);
            if (!((U | V) == R)) continue;
            int a;
            if (V.test(G.add(u, u)))
                a = u;
            else if (U.test(G.add(v, v)))
                a = v;
            else
                continue;
            if (self(self, level - 1, H->members, inner)) {
                spec.chain[level - 1] = H->members;
                spec.links[level - 2] = a;
                return true;
            }
        }
        return false;
    };

    if (!peel(peel, r, spec.chain[r], A))
        throw Error(Errc::structure_violation,
                    "no chain decomposition exists; this contradicts the structure theorem");
    return spec;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::formula_unavailable: return "formula-unavailable";
    case Verdict::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

std::vector<SghReport> survey(long long max_order, const std::vector<int>& h_list,
                              const SurveyOptions& opt) {
    std::vector<int> hs = h_list;
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    BruteOptions bopt{opt.budget, opt.workers};

    std::vector<SghReport> out;
    for (long long n = 2; n <= max_order; ++n) {
        for (const GroupType& G : abelian_group_types(n)) {
            for (int h : hs) {
                SghReport rep;
                rep.group = G.factors();
                rep.h = h;
                bool formula = (h == 2 || h == 3);
                try {
                    if (formula) {
                        rep.chi_formula = chi(G, h);
                        rep.predicted = predict_S(G, h);
                        if (n <= opt.chi_brute_max_order)
                            rep.chi_brute_value = chi_brute(G, h, bopt);
                    } else {
                        rep.chi_brute_value = chi_brute(G, h, bopt);
                    }
                    int m = int((rep.chi_formula ? *rep.chi_formula : *rep.chi_brute_value) - 1);
                    BruteResult br = brute_S(G, h, m, bopt);
                    rep.brute = br.sizes;
                    for (const auto& [s, w] : br.witnesses)
                        rep.witnesses.emplace(s, w.to_indices());
                    if (!formula) {
                        rep.verdict = Verdict::formula_unavailable;
                    } else {
                        bool ok = rep.brute == *rep.predicted &&
                                  (!rep.chi_brute_value ||
                                   *rep.chi_brute_value == *rep.chi_formula);
                        rep.verdict = ok ? Verdict::match : Verdict::mismatch;
                    }
                } catch (const Error& e) {
                    if (e.code() != Errc::search_budget) throw;
                    rep.verdict = Verdict::budget_exceeded;
                    rep.note = e.what();
                }
                out.push_back(std::move(rep));
            }
        }
    }
    return out;
}

} // namespace nonbasis
