#pragma once

#include <map>
#include <optional>
#include <string>

#include "nonbasis/constructions.hpp"
#include "nonbasis/group.hpp"
#include "nonbasis/theory.hpp"

namespace nonbasis {

unsigned long long default_budget(); // NONBASIS_BUDGET env override, else 1e8

struct BruteOptions {
    unsigned long long budget = default_budget(); // subset-count ceiling
    int workers = 1;
};

struct BruteResult {
    std::vector<long long> sizes;         // achieved |hA| < n, ascending
    std::map<long long, Subset> witnesses; // colex-smallest witness per size
};

/// Exhaustive S computation over all m-subsets containing 0 (sizes of hA
/// are translation invariant, so this normalization loses nothing).
/// Enumeration is in colex order on the nonzero elements; subtrees whose
/// partial hA already covers G are pruned, which cannot drop any
/// incomplete leaf because hA is monotone in A.
BruteResult brute_S(const GroupType& G, int h, int m, const BruteOptions& opt = {});

/// 1 + the largest m admitting an h-incomplete m-set, by descending scan.
int chi_brute(const GroupType& G, int h, const BruteOptions& opt = {});

struct TwoUnequalResult {
    bool holds = false;
    std::optional<Subset> counterexample; // colex-smallest evenly-split half-set
};

/// Checks, over every subset A of size n/2, whether some index-2 subgroup
/// H has |A n H| != |A \ H|.  For exponent = 2 mod 4 this is the claimed
/// theorem; for 4 | exponent it hunts for the counterexample.
TwoUnequalResult verify_two_unequal(const GroupType& G, const BruteOptions& opt = {});

/// Recovers the chain data of a maximum 3-incomplete subset of Z_7^r with
/// 0 not in 3A.  Throws structure_violation (a finding, not a bug) if no
/// chain fits.
Z7ChainSpec decompose_z7(const GroupType& G, const Subset& A);

enum class Verdict { match, mismatch, formula_unavailable, budget_exceeded };

std::string to_string(Verdict v);

struct SghReport {
    std::vector<int> group; // invariant factors
    int h = 0;
    std::optional<long long> chi_formula;
    std::optional<long long> chi_brute_value;
    std::optional<std::vector<long long>> predicted;
    std::vector<long long> brute;
    std::map<long long, std::vector<int>> witnesses;
    Verdict verdict = Verdict::match;
    std::string note;
};

struct SurveyOptions {
    unsigned long long budget = default_budget();
    int workers = 1;
    int chi_brute_max_order = 16; // beyond this, skip brute chi when a formula exists
};

std::vector<SghReport> survey(long long max_order, const std::vector<int>& h_list,
                              const SurveyOptions& opt = {});

} // namespace nonbasis
