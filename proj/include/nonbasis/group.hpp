#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nonbasis/error.hpp"
#include "nonbasis/subset.hpp"

namespace nonbasis {

/// A finite abelian group in invariant-factor form: Z_{n1} x ... x Z_{nr}
/// with n1 >= 2 and n_i | n_{i+1}.  Elements are canonical mixed-radix
/// indices in [0, n), coordinate 1 most significant, so index order is
/// lexicographic order on coordinate tuples.
class GroupType {
public:
    /// Canonicalizes an arbitrary direct-product description into
    /// invariant-factor form (e.g. {2,2,3} -> (2,6)).
    static GroupType from_moduli(const std::vector<long long>& moduli);

    /// Wraps a factor list that is already a valid invariant-factor chain.
    static GroupType of_type(const std::vector<int>& factors);

    const std::vector<int>& factors() const { return factors_; }
    int rank() const { return int(factors_.size()); }
    int order() const { return order_; }
    int exponent() const { return factors_.back(); }

    int add(int a, int b) const;
    int negate(int a) const;
    int scalar_mul(long long k, int a) const;

    std::vector<int> coords(int index) const;
    int index_of(const std::vector<int>& coords) const;

    /// Flat n*n addition table, or nullptr for large groups.
    const std::uint16_t* table() const { return table_.empty() ? nullptr : table_.data(); }

    bool is_elementary(int p) const {
        for (int f : factors_)
            if (f != p) return false;
        return true;
    }

    friend bool operator==(const GroupType& a, const GroupType& b) {
        return a.factors_ == b.factors_;
    }

private:
    GroupType(std::vector<int> factors, bool);

    std::vector<int> factors_;
    std::vector<int> weights_; // weights_[k] = n_{k+1} * ... * n_r
    int order_ = 1;
    std::vector<std::uint16_t> table_;
};

struct Subgroup {
    Subset members;
    int order = 0;
    int index = 0; // n / order
};

/// All subgroups of G, optionally only those of the given index, as
/// closed member bitsets sorted by (order, bitset).
std::vector<Subgroup> enumerate_subgroups(const GroupType& G,
                                          std::optional<int> index_filter = {},
                                          int enumeration_bound = 512);

/// H = d1*Z_{n1} x ... x dr*Z_{nr}; the quotient G/H has type (d1,...,dr).
Subgroup canonical_subgroup(const GroupType& G, const std::vector<int>& quotient_type);

/// Factors d into (d1,...,dr) with di | ni, greedily assigning each prime
/// power from the last coordinate down.  With three_part_last, the entire
/// 3-part of d goes into dr.
std::vector<int> factor_index(const GroupType& G, int d, bool three_part_last = false);

/// The d cosets of H, ordered by smallest representative.
std::vector<Subset> coset_decomposition(const GroupType& G, const Subgroup& H);

/// Checks closure under add/negate and membership of 0.
bool is_subgroup(const GroupType& G, const Subset& S);

Subgroup subgroup_from_members(const GroupType& G, const Subset& members);

/// p-adic valuation of t.
int nu(int p, long long t);

/// Smallest prime divisor of n congruent to 2 mod 3, if any.
std::optional<int> smallest_prime_2mod3(long long n);

std::vector<std::pair<long long, int>> factorize(long long n);
std::vector<long long> divisors(long long n);

/// All abelian group types of the given order, in invariant-factor form,
/// sorted lexicographically by factor list.
std::vector<GroupType> abelian_group_types(long long order);

/// Parses the CLI group grammar: comma-separated moduli ("3,9", "12").
GroupType parse_group_spec(const std::string& spec);

} // namespace nonbasis
