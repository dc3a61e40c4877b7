#include "nonbasis/theory.hpp"

#include <algorithm>

namespace nonbasis {

H3Case classify_h3(long long n) {
    if (auto p = smallest_prime_2mod3(n)) return {H3Tag::has_prime_2mod3, *p};
    if (n % 3 == 0) return {H3Tag::div3_no_2mod3, 0};
    return {H3Tag::all_divisors_1mod3, 0};
}

long long chi(const GroupType& G, int h) {
    const long long n = G.order();
    if (h == 2) return n / 2 + 1;
    if (h == 3) {
        H3Case c = classify_h3(n);
        if (c.tag == H3Tag::has_prime_2mod3)
            return (long long)((c.p + 1) / 3) * (n / c.p) + 1; // (1 + 1/p) n/3 + 1, exact

        return n / 3 + 1;
    }
    throw Error(Errc::unsupported_h, "no closed form for h outside {2,3}; use the oracle");
}

long long max_incomplete_size(const GroupType& G, int h) { return chi(G, h) - 1; }

namespace {

bool is_exceptional_h2_odd(const GroupType& G) {
    const auto& f = G.factors();
    return f == std::vector<int>{3} || f == std::vector<int>{5} || f == std::vector<int>{3, 3};
}

} // namespace

std::vector<long long> predict_S(const GroupType& G, int h) {
    const long long n = G.order();
    const long long kappa = G.exponent();
    std::vector<long long> out;
    if (h == 2) {
        if (n % 2 == 0) {
            for (long long d : divisors(n)) {
                if (d % 2 != 0) continue;
                if (d == 4 && kappa % 4 != 0) continue;
                out.push_back(n - n / d);
            }
        } else {
            out.push_back(n - 2);
            if (!is_exceptional_h2_odd(G)) out.push_back(n - 1);
        }
    } else if (h == 3) {
        H3Case c = classify_h3(n);
        switch (c.tag) {
        case H3Tag::has_prime_2mod3:
            out.push_back(n - n / c.p);
            break;
        case H3Tag::div3_no_2mod3:
            for (long long d : divisors(n)) {
                if (d % 3 != 0) continue;
                if (d != 3) out.push_back(n - n / d);
                if (nu(3, d) <= nu(3, kappa)) out.push_back(n - 2 * n / d);
            }
            break;
        case H3Tag::all_divisors_1mod3:
            out.push_back(n - 3);
            if (!G.is_elementary(7)) out.push_back(n - 1);
            break;
        }
    } else {
        throw Error(Errc::unsupported_h, "no classification for h outside {2,3}");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace nonbasis
