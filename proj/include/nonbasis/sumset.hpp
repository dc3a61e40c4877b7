#pragma once

#include "nonbasis/group.hpp"
#include "nonbasis/subset.hpp"

namespace nonbasis {

/// Kneser/periodicity certificate for (A, hA).
struct SumsetCertificate {
    int set_size = 0;   // |A|
    int hfold_size = 0; // |hA|
    Subgroup stabilizer;
    int k1 = 0; // cosets of H meeting A
    int k2 = 0; // cosets of H in hA
    long long kneser_bound = 0; // h|A| - (h-1)|H|
    bool complete = false;      // hA == G
    Subset hsum;
};

/// {g + s : s in S}.
Subset translate(const GroupType& G, const Subset& S, int g);

/// Minkowski sum {a + b : a in A, b in B}; inputs must be nonempty.
Subset sumset(const GroupType& G, const Subset& A, const Subset& B);

/// h-fold sumset of A, h >= 1.
Subset hfold(const GroupType& G, const Subset& A, int h);

/// H(S) = {g : g + S = S}.
Subgroup stabilizer_of(const GroupType& G, const Subset& S);

/// true iff S + H = S.
bool is_union_of_cosets(const GroupType& G, const Subset& S, const Subgroup& H);

SumsetCertificate certify(const GroupType& G, const Subset& A, int h);

} // namespace nonbasis
