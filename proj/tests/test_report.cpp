#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "nonbasis/report.hpp"

using namespace nonbasis;

namespace {

std::vector<SghReport> sample_rows() { return survey(8, {2, 3}); }

SurveyParameters sample_params() {
    SurveyParameters p;
    p.max_order = 8;
    p.h_list = {2, 3};
    p.budget = default_budget();
    return p;
}

} // namespace

TEST_CASE("json report schema") {
    auto rows = sample_rows();
    std::string text = report_to_json(rows, sample_params());
    auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("version") == 1);
    CHECK(doc.at("parameters").at("max_order") == 8);
    CHECK(doc.at("parameters").at("h") == std::vector<int>{2, 3});
    REQUIRE(doc.at("rows").size() == rows.size());
    const auto& first = doc.at("rows").at(0); // Z_2, h = 2
    CHECK(first.at("group") == std::vector<int>{2});
    CHECK(first.at("h") == 2);
    CHECK(first.at("chi_formula") == 2);
    CHECK(first.at("brute_S") == std::vector<long long>{1});
    CHECK(first.at("witnesses").at("1") == std::vector<int>{0});
    CHECK(first.at("verdict") == "match");
}

TEST_CASE("json report is byte-identical across worker counts") {
    SurveyOptions one, four;
    four.workers = 4;
    auto p = sample_params();
    std::string a = report_to_json(survey(8, {2, 3}, one), p);
    std::string b = report_to_json(survey(8, {2, 3}, four), p);
    CHECK(a == b);
}

TEST_CASE("json report reverifies against the engine") {
    std::string text = report_to_json(sample_rows(), sample_params());
    CHECK(reverify_json_report(text));

    // corrupt one witness: the recorded size no longer reproduces
    auto doc = nlohmann::json::parse(text);
    for (auto& row : doc.at("rows")) {
        auto& wit = row.at("witnesses");
        if (!wit.empty()) {
            auto it = wit.begin();
            std::vector<int> idx = it.value().get<std::vector<int>>();
            idx.push_back(1);
            if (idx[0] == 1) idx[0] = 0;
            it.value() = idx;
            break;
        }
    }
    CHECK(!reverify_json_report(doc.dump()));
}

TEST_CASE("csv and text renderings") {
    auto rows = sample_rows();
    std::string csv = report_to_csv(rows);
    CHECK(csv.rfind("group,h,chi_formula,chi_brute,predicted_S,brute_S,verdict\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == long(rows.size()) + 1);
    CHECK(csv.find("match") != std::string::npos);

    std::string text = report_to_text(rows);
    CHECK(text.find("G = (2)  h = 2") != std::string::npos);
    CHECK(text.find("verdict: match") != std::string::npos);
}
