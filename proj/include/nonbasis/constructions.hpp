#pragma once

#include <optional>

#include "nonbasis/group.hpp"
#include "nonbasis/sumset.hpp"

namespace nonbasis {

/// Chain data behind the extremal sets of elementary abelian 7-groups:
/// subgroups {0} = H_0 < H_1 < ... < H_r = G with |H_k| = 7^k, two
/// distinct nonzero elements a0, a0' of H_1, and links a_k in
/// H_{k+1} \ H_k.  The assembled set is
///   {a0, a0'}  union  union_k ({a_k, 2 a_k} + H_k).
struct Z7ChainSpec {
    int r = 0;
    std::vector<Subset> chain; // H_0 .. H_r, member bitsets
    int a0 = 0;
    int a0_alt = 0;
    std::vector<int> links; // a_1 .. a_{r-1}
};

/// First m elements in lexicographic order; with star, the last element
/// is replaced by the next one (requires last digit of m >= 3).
Subset initial_segment(const GroupType& G, int m, bool star = false);

/// Closed-form |h I(G,m)| = hm-h+1 or |h I*(G,m)| = hm, valid only under
/// the digit hypotheses h q_k < n_k and q_r >= 1 (>= 3 for star).
long long segment_size_prediction(const GroupType& G, int m, int h, bool star = false);

/// Full preimage of B under the canonical map G -> G/H; cosets of H are
/// indexed by smallest representative, matching coset_decomposition.
Subset lift(const GroupType& G, const Subgroup& H, const Subset& B);

/// Preimage through the canonical subgroup of the quotient type dvec;
/// B is indexed over the quotient group of type dvec (trivial factors
/// dropped).
Subset lift_through(const GroupType& G, const std::vector<int>& dvec, const Subset& B);

/// The quotient type dvec with trivial factors dropped, as a GroupType.
GroupType quotient_group(const std::vector<int>& dvec);

/// (H \ {h0}) u {g0} for the canonical index-q subgroup H of K, with h0
/// the smallest nonzero member of H and g0 the smallest element outside;
/// |qB| = |K| - 1.
Subset punctured_subgroup_set(const GroupType& K, int q);

/// The replacement sets for Z_3^r (r >= 3) and Z_5^r (r >= 2): the first
/// (n-1)/2 elements with one element swapped; the 2-fold sumset misses
/// exactly one element.
Subset special_replacement_set(const GroupType& G);

/// Lift of the progression {0, ..., (p+1)/3 - 1} through the canonical
/// index-p subgroup, for the smallest prime divisor p of n with
/// p = 2 mod 3; |3A| = n - n/p.
Subset ap_lift(const GroupType& G, int p);

Z7ChainSpec default_z7_chain(const GroupType& G);

/// Assembles the chain set; validates the spec and that 0 is not in 3A.
Subset realize_z7_chain(const GroupType& G, const std::optional<Z7ChainSpec>& spec = {});

/// Constructs a witness A with |A| = chi(G,h)-1 and |hA| = target for any
/// target in predict_S(G,h); engine-verified before returning.
Subset realize(const GroupType& G, int h, long long target);

} // namespace nonbasis
