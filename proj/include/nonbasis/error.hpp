#pragma once

#include <stdexcept>
#include <string>

namespace nonbasis {

enum class Errc {
    invalid_modulus,
    order_limit,
    element_range,
    enumeration_limit,
    invalid_quotient,
    invalid_index,
    constraint_infeasible,
    empty_set,
    invalid_h,
    unsupported_h,
    degenerate_star,
    range,
    hypothesis_not_met,
    construction_hypothesis,
    not_applicable,
    invalid_chain,
    invalid_choices,
    unrealizable_target,
    theorem_violation,
    search_budget,
    engine_invariant,
    invalid_input,
    structure_violation,
    usage,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace nonbasis
