#include "nonbasis/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace nonbasis {

namespace {
constexpr long long kMaxOrder = 1 << 16;
constexpr int kTableLimit = 2048;
} // namespace

GroupType::GroupType(std::vector<int> factors, bool) : factors_(std::move(factors)) {
    weights_.resize(factors_.size());
    long long n = 1;
    for (int k = int(factors_.size()) - 1; k >= 0; --k) {
        weights_[k] = int(n);
        n *= factors_[k];
    }
    order_ = int(n);
    if (order_ <= kTableLimit) {
        std::vector<std::uint16_t> t(std::size_t(order_) * order_);
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b) {
                int res = 0;
                for (std::size_t k = 0; k < factors_.size(); ++k) {
                    int ca = (a / weights_[k]) % factors_[k];
                    int cb = (b / weights_[k]) % factors_[k];
                    res += ((ca + cb) % factors_[k]) * weights_[k];
                }
                t[std::size_t(a) * order_ + b] = std::uint16_t(res);
            }
        table_ = std::move(t);
    }
}

GroupType GroupType::from_moduli(const std::vector<long long>& moduli) {
    if (moduli.empty()) throw Error(Errc::invalid_modulus, "empty modulus list");
    long long n = 1;
    for (long long m : moduli) {
        if (m < 2) throw Error(Errc::invalid_modulus, "modulus must be >= 2");
        n *= m;
        if (n > kMaxOrder) throw Error(Errc::order_limit, "group order exceeds 2^16");
    }
    // Bucket prime-power components per prime, largest into the last factor.
    std::map<long long, std::vector<int>> exps;
    for (long long m : moduli)
        for (auto [p, e] : factorize(m)) exps[p].push_back(e);
    std::size_t r = 0;
    for (auto& [p, v] : exps) {
        std::sort(v.rbegin(), v.rend());
        r = std::max(r, v.size());
    }
    std::vector<int> factors(r, 1);
    for (auto& [p, v] : exps)
        for (std::size_t j = 0; j < v.size(); ++j) {
            long long pw = 1;
            for (int i = 0; i < v[j]; ++i) pw *= p;
            factors[r - 1 - j] = int(factors[r - 1 - j] * pw);
        }
    while (factors.size() > 1 && factors.front() == 1) factors.erase(factors.begin());
    return GroupType(std::move(factors), true);
}

GroupType GroupType::of_type(const std::vector<int>& factors) {
    if (factors.empty() || factors.front() < 2)
        throw Error(Errc::invalid_modulus, "invalid type: first factor must be >= 2");
    long long n = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw Error(Errc::invalid_modulus, "invalid type: divisibility chain violated");
        n *= factors[i];
        if (n > kMaxOrder) throw Error(Errc::order_limit, "group order exceeds 2^16");
    }
    return GroupType(factors, true);
}

int GroupType::add(int a, int b) const {
    if (a < 0 || a >= order_ || b < 0 || b >= order_)
        throw Error(Errc::element_range, "element index out of range");
    if (!table_.empty()) return table_[std::size_t(a) * order_ + b];
    int res = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        int ca = (a / weights_[k]) % factors_[k];
        int cb = (b / weights_[k]) % factors_[k];
        res += ((ca + cb) % factors_[k]) * weights_[k];
    }
    return res;
}

int GroupType::negate(int a) const {
    if (a < 0 || a >= order_) throw Error(Errc::element_range, "element index out of range");
    int res = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        int ca = (a / weights_[k]) % factors_[k];
        res += ((factors_[k] - ca) % factors_[k]) * weights_[k];
    }
    return res;
}

int GroupType::scalar_mul(long long k, int a) const {
    if (a < 0 || a >= order_) throw Error(Errc::element_range, "element index out of range");
    if (k < 0) throw Error(Errc::element_range, "scalar must be >= 0");
    int res = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        int ca = (a / weights_[i]) % factors_[i];
        res += int((k * ca) % factors_[i]) * weights_[i];
    }
    return res;
}

std::vector<int> GroupType::coords(int index) const {
    if (index < 0 || index >= order_)
        throw Error(Errc::element_range, "element index out of range");
    std::vector<int> c(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k)
        c[k] = (index / weights_[k]) % factors_[k];
    return c;
}

int GroupType::index_of(const std::vector<int>& c) const {
    if (c.size() != factors_.size())
        throw Error(Errc::element_range, "coordinate arity mismatch");
    int idx = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 0 || c[k] >= factors_[k])
            throw Error(Errc::element_range, "coordinate out of range");
        idx += c[k] * weights_[k];
    }
    return idx;
}

bool is_subgroup(const GroupType& G, const Subset& S) {
    if (!S.test(0)) return false;
    bool ok = true;
    S.for_each([&](int a) {
        if (!S.test(G.negate(a))) ok = false;
        S.for_each([&](int b) {
            if (!S.test(G.add(a, b))) ok = false;
        });
    });
    return ok;
}

Subgroup subgroup_from_members(const GroupType& G, const Subset& members) {
    Subgroup H;
    H.members = members;
    H.order = members.size();
    if (H.order == 0 || G.order() % H.order != 0 || !is_subgroup(G, members))
        throw Error(Errc::invalid_input, "member set is not a subgroup");
    H.index = G.order() / H.order;
    return H;
}

namespace {

// Closure of subgroup S extended by one generator g: the union of the
// cosets j*g + S.
Subset extend_by(const GroupType& G, const Subset& S, int g) {
    Subset T = S;
    int cur = g;
    while (!T.test(cur)) {
        S.for_each([&](int s) { T.set(G.add(s, cur)); });
        cur = G.add(cur, g);
    }
    return T;
}

} // namespace

std::vector<Subgroup> enumerate_subgroups(const GroupType& G, std::optional<int> index_filter,
                                          int enumeration_bound) {
    const int n = G.order();
    if (n > enumeration_bound)
        throw Error(Errc::enumeration_limit, "group order exceeds subgroup enumeration bound");
    std::set<Subset> seen;
    std::queue<Subset> work;
    Subset trivial = Subset::single(n, 0);
    seen.insert(trivial);
    work.push(trivial);
    while (!work.empty()) {
        Subset S = work.front();
        work.pop();
        for (int g = 1; g < n; ++g) {
            if (S.test(g)) continue;
            Subset T = extend_by(G, S, g);
            if (seen.insert(T).second) work.push(T);
        }
    }
    std::vector<Subgroup> out;
    for (const Subset& S : seen) {
        int ord = S.size();
        if (index_filter && n / ord != *index_filter) continue;
        out.push_back({S, ord, n / ord});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members < b.members;
    });
    return out;
}

Subgroup canonical_subgroup(const GroupType& G, const std::vector<int>& quotient_type) {
    const auto& f = G.factors();
    if (quotient_type.size() != f.size())
        throw Error(Errc::invalid_quotient, "quotient type arity mismatch");
    for (std::size_t k = 0; k < f.size(); ++k)
        if (quotient_type[k] < 1 || f[k] % quotient_type[k] != 0)
            throw Error(Errc::invalid_quotient, "quotient factor does not divide group factor");
    Subset members(G.order());
    for (int i = 0; i < G.order(); ++i) {
        auto c = G.coords(i);
        bool in = true;
        for (std::size_t k = 0; k < f.size(); ++k)
            if (c[k] % quotient_type[k] != 0) in = false;
        if (in) members.set(i);
    }
    return subgroup_from_members(G, members);
}

std::vector<int> factor_index(const GroupType& G, int d, bool three_part_last) {
    if (d < 1 || G.order() % d != 0)
        throw Error(Errc::invalid_index, "d does not divide the group order");
    const auto& f = G.factors();
    const int r = G.rank();
    std::vector<int> dv(r, 1);
    for (auto [p, a] : factorize(d)) {
        int remaining = a;
        if (three_part_last && p == 3) {
            if (nu(3, f[r - 1]) < a)
                throw Error(Errc::constraint_infeasible,
                            "3-part of d does not fit in the last factor");
            for (int i = 0; i < a; ++i) dv[r - 1] *= 3;
            continue;
        }
        for (int k = r - 1; k >= 0 && remaining > 0; --k) {
            int take = std::min(remaining, nu(int(p), f[k]));
            long long pw = 1;
            for (int i = 0; i < take; ++i) pw *= p;
            dv[k] = int(dv[k] * pw);
            remaining -= take;
        }
        if (remaining > 0)
            throw Error(Errc::invalid_index, "d does not divide the group order");
    }
    return dv;
}

std::vector<Subset> coset_decomposition(const GroupType& G, const Subgroup& H) {
    const int n = G.order();
    std::vector<Subset> cosets;
    Subset covered(n);
    for (int i = 0; i < n; ++i) {
        if (covered.test(i)) continue;
        Subset C(n);
        H.members.for_each([&](int h) { C.set(G.add(h, i)); });
        covered |= C;
        cosets.push_back(std::move(C));
    }
    return cosets;
}

int nu(int p, long long t) {
    int v = 0;
    while (t % p == 0) {
        t /= p;
        ++v;
    }
    return v;
}

std::optional<int> smallest_prime_2mod3(long long n) {
    for (auto [p, e] : factorize(n))
        if (p % 3 == 2) return int(p);
    return {};
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        long long pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(n - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<GroupType> abelian_group_types(long long order) {
    if (order < 2 || order > kMaxOrder)
        throw Error(Errc::order_limit, "order out of range");
    auto fact = factorize(order);
    // Partitions of each prime exponent, then the cartesian product.
    std::vector<std::vector<std::vector<int>>> parts(fact.size());
    for (std::size_t i = 0; i < fact.size(); ++i) {
        std::vector<int> cur;
        gen_partitions(fact[i].second, fact[i].second, cur, parts[i]);
    }
    std::vector<GroupType> out;
    std::vector<std::size_t> pick(fact.size(), 0);
    while (true) {
        std::size_t r = 1;
        for (std::size_t i = 0; i < fact.size(); ++i)
            r = std::max(r, parts[i][pick[i]].size());
        std::vector<int> factors(r, 1);
        for (std::size_t i = 0; i < fact.size(); ++i) {
            const auto& lambda = parts[i][pick[i]]; // descending
            for (std::size_t j = 0; j < lambda.size(); ++j) {
                long long pw = 1;
                for (int t = 0; t < lambda[j]; ++t) pw *= fact[i].first;
                factors[r - 1 - j] = int(factors[r - 1 - j] * pw);
            }
        }
        while (factors.size() > 1 && factors.front() == 1) factors.erase(factors.begin());
        out.push_back(GroupType::of_type(factors));
        std::size_t i = 0;
        for (; i < fact.size(); ++i) {
            if (++pick[i] < parts[i].size()) break;
            pick[i] = 0;
        }
        if (i == fact.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const GroupType& a, const GroupType& b) { return a.factors() < b.factors(); });
    return out;
}

GroupType parse_group_spec(const std::string& spec) {
    std::vector<long long> moduli;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            while (pos < tok.size() && std::isspace(unsigned(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument(tok);
            moduli.push_back(v);
        } catch (const std::exception&) {
            throw Error(Errc::usage, "bad group spec: '" + spec + "'");
        }
    }
    if (moduli.empty()) throw Error(Errc::usage, "empty group spec");
    return GroupType::from_moduli(moduli);
}

} // namespace nonbasis
