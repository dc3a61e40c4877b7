#pragma once

#include "nonbasis/group.hpp"

namespace nonbasis {

enum class H3Tag {
    has_prime_2mod3,     // n has a prime divisor congruent to 2 mod 3
    div3_no_2mod3,       // 3 | n but no prime divisor congruent to 2 mod 3
    all_divisors_1mod3,  // every divisor of n is congruent to 1 mod 3
};

struct H3Case {
    H3Tag tag;
    int p = 0; // smallest qualifying prime for has_prime_2mod3
};

H3Case classify_h3(long long n);

/// Closed-form critical number for h in {2, 3}.
long long chi(const GroupType& G, int h);

/// chi(G, h) - 1.
long long max_incomplete_size(const GroupType& G, int h);

/// The classified set of achievable |hA| over maximum-size h-incomplete
/// subsets, sorted ascending.
std::vector<long long> predict_S(const GroupType& G, int h);

} // namespace nonbasis
