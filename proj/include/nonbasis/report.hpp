#pragma once

#include <string>

#include "nonbasis/oracle.hpp"

namespace nonbasis {

struct SurveyParameters {
    long long max_order = 0;
    std::vector<int> h_list;
    unsigned long long budget = 0;
};

std::string report_to_json(const std::vector<SghReport>& rows, const SurveyParameters& params);
std::string report_to_csv(const std::vector<SghReport>& rows);
std::string report_to_text(const std::vector<SghReport>& rows);

/// Re-reads a JSON report and re-certifies every witness against the
/// engine; returns false if any recorded size fails to reproduce.
bool reverify_json_report(const std::string& json_text);

} // namespace nonbasis
