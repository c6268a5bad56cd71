// Command-line front end: classify instances, compute rates, build codes,
// export confusion graphs, and run validation sweeps.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tsuic/coloring.hpp"
#include "tsuic/confusion.hpp"
#include "tsuic/index_code.hpp"
#include "tsuic/msuic.hpp"
#include "tsuic/oracle.hpp"
#include "tsuic/problem.hpp"
#include "tsuic/rate_engine.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_sender_sets(const std::string& text) {
    int count = 0;
    for (size_t i = 0; i + 1 < text.size(); ++i)
        if (text[i] == 'M' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) ++count;
    return count;
}

tsuic::Problem load_problem(const std::string& path, int t_override, int max_tn) {
    std::string text = read_input(path);
    tsuic::Problem p = tsuic::parse_problem(text, max_tn);
    if (t_override > 0) {
        p.t = t_override;
        if (p.t * p.n > max_tn) throw std::invalid_argument("t*N exceeds the size guardrail");
    }
    return p;
}

int cmd_classify(const std::string& path, bool json, int max_tn) {
    tsuic::Problem p = load_problem(path, 0, max_tn);
    tsuic::MessagePartition mp = tsuic::partition(p);
    tsuic::InteractionDigraph h = tsuic::interaction_map(p, mp);
    tsuic::InteractionClass cls = tsuic::classify(h);
    bool fully = tsuic::is_fully_participated(p, mp);

    auto group_list = [&](const std::vector<int>& g) {
        std::vector<int> out;
        for (int v : g) out.push_back(v + 1);
        return out;
    };

    if (json) {
        nlohmann::json j;
        j["instance"] = tsuic::to_text(p);
        j["partition"] = {{"V(D1)", group_list(mp.d1)},
                          {"V(D2)", group_list(mp.d2)},
                          {"V(D3)", group_list(mp.d3)}};
        j["class_id"] = cls.class_id;
        if (cls.paper_label) {
            j["label"] = *cls.paper_label;
            j["label_inferred"] = cls.paper_label_inferred;
        }
        j["case"] = tsuic::case_label_name(cls.case_label);
        j["fully_participated"] = fully;
        if (mp.d3.empty()) j["note"] = "common pool empty: the sender sub-problems separate";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "case " << tsuic::case_label_name(cls.case_label);
        if (cls.paper_label) std::cout << " (" << *cls.paper_label << ")";
        std::cout << ", class " << cls.class_id << ", "
                  << (fully ? "fully participated" : "partially participated") << "\n";
        if (mp.d3.empty())
            std::cout << "note: common pool empty, the sender sub-problems separate\n";
    }
    return 0;
}

int cmd_beta(const std::string& path, const std::string& method, int t_override, bool json,
             int max_tn) {
    std::string text = read_input(path);
    if (count_sender_sets(text) >= 3) {
        tsuic::MsProblem mp = tsuic::parse_ms_problem(text, max_tn);
        if (t_override > 0) mp.t = t_override;
        tsuic::MsConfusionGraph g = tsuic::ms_build(mp, max_tn);
        tsuic::MsMinimizeResult m = tsuic::ms_minimize(mp, g);
        if (json) {
            nlohmann::json j;
            j["value"] = tsuic::to_string(m.rate);
            j["exact"] = m.exact;
            j["bits"] = m.bits;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "beta_" << mp.t << " = " << tsuic::to_string(m.rate) << "\n";
        }
        return 0;
    }
    tsuic::Problem p = tsuic::parse_problem(text, max_tn);
    if (t_override > 0) {
        p.t = t_override;
        if (p.t * p.n > max_tn) throw std::invalid_argument("t*N exceeds the size guardrail");
    }
    if (method == "dispatch") {
        tsuic::RateResult r = tsuic::dispatch(p);
        if (json) {
            std::cout << tsuic::rate_result_to_json(r) << "\n";
        } else if (r.exact) {
            std::cout << "beta_" << p.t << " = " << tsuic::to_string(r.value()) << " ("
                      << r.provenance << ")\n";
        } else {
            std::cout << "beta_" << p.t << " in [" << tsuic::to_string(r.lower) << ", "
                      << tsuic::to_string(r.upper) << "] (" << r.provenance << ")\n";
        }
        return 0;
    }
    if (method == "coloring") {
        tsuic::MessagePartition mp = tsuic::partition(p);
        tsuic::ConfusionGraph g = tsuic::build(p, mp, max_tn);
        tsuic::MinimizeResult m = tsuic::minimize(p, g);
        if (json) {
            nlohmann::json j;
            j["value"] = tsuic::to_string(m.cost.rate);
            j["exact"] = m.exact;
            j["bits"] = {m.cost.bits1, m.cost.bits2};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "beta_" << p.t << " = " << tsuic::to_string(m.cost.rate)
                      << (m.exact ? "" : " (upper bound only)") << "\n";
        }
        return 0;
    }
    if (method == "oracle") {
        tsuic::OracleBudget budget;
        budget.max_tn = std::min(max_tn, 5);
        tsuic::Rational o = tsuic::brute_force_beta_t(p, budget);
        if (json) {
            nlohmann::json j;
            j["value"] = tsuic::to_string(o);
            j["exact"] = true;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "beta_" << p.t << " = " << tsuic::to_string(o) << "\n";
        }
        return 0;
    }
    std::cerr << "unknown method: " << method << "\n";
    return 1;
}

int cmd_code(const std::string& path, bool construct, bool json, int max_tn) {
    tsuic::Problem p = load_problem(path, 0, max_tn);
    tsuic::MessagePartition mp = tsuic::partition(p);
    tsuic::InteractionDigraph h = tsuic::interaction_map(p, mp);
    tsuic::InteractionClass cls = tsuic::classify(h);

    tsuic::IndexCode code;
    if (construct && tsuic::is_fully_participated(p, mp) &&
        (cls.case_label == tsuic::CaseLabel::IIB || cls.case_label == tsuic::CaseLabel::IIC ||
         cls.case_label == tsuic::CaseLabel::IID)) {
        tsuic::SubCodes sc = tsuic::sub_codes(p, mp);
        if (cls.case_label == tsuic::CaseLabel::IIB) code = tsuic::construct_case_iib(p, mp, sc);
        else if (cls.case_label == tsuic::CaseLabel::IIC) code = tsuic::construct_case_iic(p, mp, sc);
        else code = tsuic::construct_case_iid(p, mp, sc);
    } else {
        tsuic::ConfusionGraph g = tsuic::build(p, mp, max_tn);
        tsuic::MinimizeResult m = tsuic::minimize(p, g);
        code = tsuic::coloring_to_code(p, g, m.coloring);
    }
    tsuic::CodeVerdict v = tsuic::verify(p, code);
    if (!v.ok) {
        std::cerr << "internal error: produced code failed verification: " << v.reason << "\n";
        return 1;
    }
    if (json) {
        std::cout << tsuic::code_to_json(code) << "\n";
    } else {
        std::cout << "rate = " << tsuic::to_string(code.rate()) << "\n";
        if (auto lf = tsuic::linear_form(code)) std::cout << "code = " << *lf << "\n";
    }
    return 0;
}

int cmd_confusion(const std::string& path, bool dot, int t_override, int max_tn) {
    tsuic::Problem p = load_problem(path, t_override, max_tn);
    tsuic::MessagePartition mp = tsuic::partition(p);
    tsuic::ConfusionGraph g = tsuic::build(p, mp, max_tn);
    if (dot) {
        std::cout << tsuic::to_dot(g);
    } else {
        std::cout << "vertices: " << g.vertex_count() << "\n";
        std::cout << "edges: " << g.g.edge_count() << "\n";
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if (g.g.has_edge(u, v))
                    std::cout << g.label(static_cast<uint32_t>(u)) << " -- "
                              << g.label(static_cast<uint32_t>(v)) << "\n";
        }
    }
    return 0;
}

int cmd_sweep(const std::string& family, const std::string& check) {
    std::vector<tsuic::Problem> instances;
    if (family == "fp36") {
        instances = tsuic::family_fp36();
    } else if (family == "iib") {
        for (auto sizes : {std::tuple<int, int, int>{1, 1, 1}, {1, 1, 2}}) {
            auto [n1, n2, n3] = sizes;
            auto f = tsuic::family_for_class(60, n1, n2, n3); // both 2-cycles with the common group
            instances.insert(instances.end(), f.begin(), f.end());
        }
    } else if (family == "empty") {
        // deliberately empty
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 1;
    }

    tsuic::SweepCheck checker;
    if (check == "dispatch-vs-oracle") {
        checker = tsuic::check_dispatch_vs_oracle();
    } else if (check == "minimize-vs-oracle") {
        checker = tsuic::check_minimize_vs_oracle();
    } else if (check == "roundtrip") {
        checker = tsuic::check_roundtrip();
    } else if (check == "maxformula") {
        checker = [](const tsuic::Problem& p) -> std::optional<tsuic::SweepFailure> {
            tsuic::MessagePartition mp = tsuic::partition(p);
            tsuic::Digraph d = p.digraph();
            tsuic::Rational b1 = tsuic::beta_t_ssuic(d.induced(mp.p1), p.t);
            tsuic::Rational b2 = tsuic::beta_t_ssuic(d.induced(mp.p2), p.t);
            tsuic::Rational b3 = tsuic::beta_t_ssuic(d.induced(mp.p3), p.t);
            tsuic::Rational expected = std::max(b3, b1 + b2);
            tsuic::Rational got = tsuic::brute_force_beta_t(p);
            if (expected == got) return std::nullopt;
            return tsuic::SweepFailure{tsuic::to_text(p), tsuic::to_string(expected),
                                       tsuic::to_string(got)};
        };
    } else {
        std::cerr << "unknown check: " << check << "\n";
        return 1;
    }

    int failures = 0;
    for (const tsuic::Problem& p : instances) {
        auto failure = checker(p);
        nlohmann::json j;
        j["instance"] = tsuic::to_text(p);
        if (failure) {
            ++failures;
            j["status"] = "fail";
            j["expected"] = failure->expected;
            j["got"] = failure->got;
        } else {
            j["status"] = "pass";
        }
        std::cout << j.dump() << "\n";
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sender unicast index coding analyzer"};
    app.require_subcommand(1);

    int t_override = 0;
    int max_tn = 16;
    int seed = 0; // reserved
    bool json = false;
    bool dot = false;
    app.add_option("--t", t_override, "override message length t");
    app.add_option("--max-tn", max_tn, "size guardrail on t*N");
    app.add_option("--seed", seed, "reserved, no functional effect");
    app.add_flag("--json", json, "machine-readable JSON output");

    std::string file;
    auto* classify_cmd = app.add_subcommand("classify", "classify the interaction pattern");
    classify_cmd->add_option("file", file, "problem file or - for stdin")->required();

    std::string method = "dispatch";
    auto* beta_cmd = app.add_subcommand("beta", "compute the optimal broadcast rate");
    beta_cmd->add_option("file", file, "problem file or - for stdin")->required();
    beta_cmd->add_option("--method", method, "dispatch | coloring | oracle");

    bool construct = false;
    auto* code_cmd = app.add_subcommand("code", "produce an index code");
    code_cmd->add_option("file", file, "problem file or - for stdin")->required();
    code_cmd->add_flag("--construct", construct, "use the case-specific construction");

    auto* confusion_cmd = app.add_subcommand("confusion", "export the confusion graph");
    confusion_cmd->add_option("file", file, "problem file or - for stdin")->required();
    confusion_cmd->add_flag("--dot", dot, "DOT output with block clusters");

    std::string family = "fp36", check = "dispatch-vs-oracle";
    auto* sweep_cmd = app.add_subcommand("sweep", "run a validation sweep");
    sweep_cmd->add_option("--family", family, "fp36 | iib | empty");
    sweep_cmd->add_option("--check", check,
                          "dispatch-vs-oracle | minimize-vs-oracle | roundtrip | maxformula");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(file, json, max_tn);
        if (beta_cmd->parsed()) return cmd_beta(file, method, t_override, json, max_tn);
        if (code_cmd->parsed()) return cmd_code(file, construct, json, max_tn);
        if (confusion_cmd->parsed()) return cmd_confusion(file, dot, t_override, max_tn);
        if (sweep_cmd->parsed()) return cmd_sweep(family, check);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
