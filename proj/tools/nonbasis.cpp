// Command-line front end: sumset certificates, closed-form predictions,
// witness constructions, exhaustive verification, and survey reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nonbasis/constructions.hpp"
#include "nonbasis/oracle.hpp"
#include "nonbasis/report.hpp"
#include "nonbasis/sumset.hpp"
#include "nonbasis/theory.hpp"

namespace {

using namespace nonbasis;

// Accepts "0,1,4,5" (element indices) or "(0 1),(1 3)" (coordinates).
Subset parse_set(const GroupType& G, const std::string& text) {
    Subset A(G.order());
    if (text.find('(') != std::string::npos) {
        std::size_t pos = 0;
        while ((pos = text.find('(', pos)) != std::string::npos) {
            std::size_t end = text.find(')', pos);
            if (end == std::string::npos)
                throw Error(Errc::usage, "unbalanced parenthesis in set");
            std::stringstream ss(text.substr(pos + 1, end - pos - 1));
            std::vector<int> c;
            int v;
            while (ss >> v) c.push_back(v);
            A.set(G.index_of(c));
            pos = end + 1;
        }
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int v = std::stoi(tok);
            if (v < 0 || v >= G.order())
                throw Error(Errc::element_range, "set index out of range");
            A.set(v);
        }
    }
    if (A.empty()) throw Error(Errc::usage, "empty set");
    return A;
}

std::string set_to_string(const Subset& S) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    S.for_each([&](int i) {
        if (!first) os << ",";
        os << i;
        first = false;
    });
    os << "}";
    return os.str();
}

template <class T>
std::string set_to_string(const std::vector<T>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "}";
    return os.str();
}

void print_certificate(const GroupType& G, const Subset& A, int h) {
    SumsetCertificate cert = certify(G, A, h);
    std::cout << "|A| = " << cert.set_size << "\n"
              << "|" << h << "A| = " << cert.hfold_size << "\n"
              << "stabilizer order = " << cert.stabilizer.order << "\n"
              << "k1 = " << cert.k1 << ", k2 = " << cert.k2 << "\n"
              << "Kneser bound = " << cert.kneser_bound << "\n"
              << (cert.complete ? "complete (hA = G)" : "incomplete (hA != G)") << "\n";
}

std::vector<int> parse_h_list(const std::string& text) {
    std::vector<int> hs;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) hs.push_back(std::stoi(tok));
    if (hs.empty()) throw Error(Errc::usage, "empty h list");
    return hs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"h-fold sumsets and maximum nonbases in finite abelian groups"};
    app.require_subcommand(1);
    // --h is an option on every subcommand, so keep help on --help only.
    app.set_help_flag("--help", "print help");

    std::string group_spec, set_spec, h_spec = "2,3", format = "text", out_path;
    int h = 2, m = -1, workers = 1;
    long long target = 0, max_order = 16;
    unsigned long long budget = default_budget();
    bool with_brute = false;

    auto* c_sumset = app.add_subcommand("sumset", "certificate for a given set");
    c_sumset->add_option("--group", group_spec)->required();
    c_sumset->add_option("--set", set_spec)->required();
    c_sumset->add_option("--h", h)->required();

    auto* c_chi = app.add_subcommand("chi", "critical number chi(G,h)");
    c_chi->add_option("--group", group_spec)->required();
    c_chi->add_option("--h", h)->required();
    c_chi->add_flag("--brute", with_brute, "also compute chi by exhaustive search");

    auto* c_predict = app.add_subcommand("predict", "classified S(G,h)");
    c_predict->add_option("--group", group_spec)->required();
    c_predict->add_option("--h", h)->required();

    auto* c_construct = app.add_subcommand("construct", "witness for a target |hA|");
    c_construct->add_option("--group", group_spec)->required();
    c_construct->add_option("--h", h)->required();
    c_construct->add_option("--target", target)->required();

    auto* c_brute = app.add_subcommand("brute", "exhaustive S(G,h) with witnesses");
    c_brute->add_option("--group", group_spec)->required();
    c_brute->add_option("--h", h)->required();
    c_brute->add_option("--m", m, "set size (default: chi(G,h)-1)");
    c_brute->add_option("--budget", budget);
    c_brute->add_option("--workers", workers);

    auto* c_survey = app.add_subcommand("survey", "sweep all group types up to an order");
    c_survey->add_option("--max-order", max_order)->required();
    c_survey->add_option("--h", h_spec, "comma-separated h values (default 2,3)");
    c_survey->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    c_survey->add_option("--out", out_path);
    c_survey->add_option("--budget", budget);
    c_survey->add_option("--workers", workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_sumset) {
            GroupType G = parse_group_spec(group_spec);
            print_certificate(G, parse_set(G, set_spec), h);
        } else if (*c_chi) {
            GroupType G = parse_group_spec(group_spec);
            if (h == 2 || h == 3) std::cout << "chi = " << chi(G, h) << "\n";
            if (with_brute)
                std::cout << "chi_brute = " << chi_brute(G, h, {budget, workers}) << "\n";
        } else if (*c_predict) {
            GroupType G = parse_group_spec(group_spec);
            std::cout << set_to_string(predict_S(G, h)) << "\n";
        } else if (*c_construct) {
            GroupType G = parse_group_spec(group_spec);
            Subset A = realize(G, h, target);
            std::cout << "A = " << set_to_string(A) << "\n";
            print_certificate(G, A, h);
        } else if (*c_brute) {
            GroupType G = parse_group_spec(group_spec);
            int msize = m >= 0 ? m : int(max_incomplete_size(G, h));
            BruteResult res = brute_S(G, h, msize, {budget, workers});
            std::cout << "S = " << set_to_string(res.sizes) << "\n";
            for (const auto& [s, w] : res.witnesses)
                std::cout << "  |" << h << "A| = " << s << ": A = " << set_to_string(w) << "\n";
        } else if (*c_survey) {
            SurveyOptions opt;
            opt.budget = budget;
            opt.workers = workers;
            auto hs = parse_h_list(h_spec);
            auto rows = survey(max_order, hs, opt);
            std::string text;
            if (format == "json")
                text = report_to_json(rows, {max_order, hs, budget});
            else if (format == "csv")
                text = report_to_csv(rows);
            else
                text = report_to_text(rows);
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                f << text;
            } else {
                std::cout << text;
            }
            bool mismatch = false, budget_hit = false;
            for (const auto& r : rows) {
                mismatch = mismatch || r.verdict == Verdict::mismatch;
                budget_hit = budget_hit || r.verdict == Verdict::budget_exceeded;
            }
            if (mismatch) return 1;
            if (budget_hit) return 3;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::search_budget ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
