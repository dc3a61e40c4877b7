#include "nonbasis/report.hpp"

#include <sstream>

#include <json.hpp>

#include "nonbasis/sumset.hpp"

namespace nonbasis {

namespace {

using json = nlohmann::ordered_json;

json row_to_json(const SghReport& r) {
    json row;
    row["group"] = r.group;
    row["h"] = r.h;
    row["chi_formula"] = r.chi_formula ? json(*r.chi_formula) : json(nullptr);
    row["chi_brute"] = r.chi_brute_value ? json(*r.chi_brute_value) : json(nullptr);
    row["predicted_S"] = r.predicted ? json(*r.predicted) : json(nullptr);
    row["brute_S"] = r.brute;
    json wit = json::object();
    for (const auto& [size, indices] : r.witnesses) wit[std::to_string(size)] = indices;
    row["witnesses"] = wit;
    row["verdict"] = to_string(r.verdict);
    if (!r.note.empty()) row["note"] = r.note;
    return row;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

} // namespace

std::string report_to_json(const std::vector<SghReport>& rows, const SurveyParameters& params) {
    json doc;
    doc["version"] = 1;
    doc["parameters"] = {{"max_order", params.max_order},
                         {"h", params.h_list},
                         {"budget", params.budget}};
    json jrows = json::array();
    for (const SghReport& r : rows) jrows.push_back(row_to_json(r));
    doc["rows"] = jrows;
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const std::vector<SghReport>& rows) {
    std::ostringstream os;
    os << "group,h,chi_formula,chi_brute,predicted_S,brute_S,verdict\n";
    for (const SghReport& r : rows) {
        os << join(r.group, ";") << "," << r.h << ",";
        if (r.chi_formula) os << *r.chi_formula;
        os << ",";
        if (r.chi_brute_value) os << *r.chi_brute_value;
        os << ",";
        if (r.predicted) os << join(*r.predicted, ";");
        os << "," << join(r.brute, ";") << "," << to_string(r.verdict) << "\n";
    }
    return os.str();
}

std::string report_to_text(const std::vector<SghReport>& rows) {
    std::ostringstream os;
    for (const SghReport& r : rows) {
        os << "G = (" << join(r.group, ",") << ")  h = " << r.h;
        if (r.chi_formula) os << "  chi = " << *r.chi_formula;
        if (r.chi_brute_value) os << "  chi_brute = " << *r.chi_brute_value;
        os << "\n";
        if (r.predicted) os << "  predicted S = {" << join(*r.predicted, ", ") << "}\n";
        os << "  brute S     = {" << join(r.brute, ", ") << "}\n";
        os << "  verdict: " << to_string(r.verdict);
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << "\n";
    }
    return os.str();
}

bool reverify_json_report(const std::string& json_text) {
    json doc = json::parse(json_text);
    for (const auto& row : doc.at("rows")) {
        std::vector<long long> moduli = row.at("group").get<std::vector<long long>>();
        GroupType G = GroupType::from_moduli(moduli);
        int h = row.at("h").get<int>();
        for (const auto& [size_str, indices] : row.at("witnesses").items()) {
            long long size = std::stoll(size_str);
            Subset A = Subset::of(G.order(), indices.get<std::vector<int>>());
            Subset hA = hfold(G, A, h);
            if (hA.size() != size || hA.is_full()) return false;
        }
    }
    return true;
}

} // namespace nonbasis
