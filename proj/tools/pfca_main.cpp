#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "golden.hpp"
#include "pfca/pfca.hpp"

namespace {

using namespace pfca;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;
constexpr int kExitReproduce = 4;

double comparison_eps() {
    const char* text = std::getenv("PFCONFLICT_EPS");
    if (!text) return kCompareEps;
    double eps = 0.0;
    try {
        eps = parse_double(text, "PFCONFLICT_EPS");
    } catch (const Error&) {
        throw ThresholdError("PFCONFLICT_EPS is not a number: '" + std::string(text) + "'");
    }
    if (!(eps >= 0.0))
        throw ThresholdError("PFCONFLICT_EPS must be >= 0, got " + std::string(text));
    return eps;
}

SystemFormat resolve_format(const std::string& flag, const std::string& path) {
    if (flag == "csv") return SystemFormat::Csv;
    if (flag == "json") return SystemFormat::Json;
    return format_from_path(path);
}

Comparison parse_comparison(const std::string& text) {
    if (text == "pfn") return Comparison::QuasiOrder;
    if (text == "score") return Comparison::Score;
    if (text == "closeness") return Comparison::Closeness;
    throw ThresholdError("unknown comparison '" + text + "' (expected pfn|score|closeness)");
}

Pfn parse_pfn_flag(const std::string& text, const std::string& flag) {
    try {
        return detail::parse_cell(text, flag);
    } catch (const ParseError& e) {
        throw ThresholdError(e.what());
    } catch (const ConstraintError& e) {
        throw ThresholdError(e.what());
    }
}

// ---------------------------------------------------------------- validate

int run_validate(const std::string& system_path, const std::string& format) {
    std::ifstream in(system_path);
    if (!in) {
        std::cerr << "error: cannot open '" << system_path << "'\n";
        return kExitInput;
    }
    const SystemScan scan = scan_system(in, resolve_format(format, system_path));
    if (scan.agent_count > 0)
        std::cout << scan.agent_count << " agents, " << scan.issue_count << " issues\n";
    if (!scan.weights.empty()) {
        std::cout << "weights:";
        for (double k : scan.weights) std::cout << ' ' << format_double(k);
        if (scan.weights_defaulted) std::cout << " (uniform weights assumed)";
        std::cout << '\n';
    }
    if (scan.ok()) {
        std::cout << "valid\n";
        return kExitOk;
    }
    for (const auto& defect : scan.defects) std::cout << "invalid: " << defect << '\n';
    return kExitInput;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeOptions {
    std::string system_path;
    std::string format;
    std::string regime;
    std::string rule = "score";
    std::string out = "markdown";
    std::string gamma_upper;
    std::string gamma_lower;
    std::string loss_path;
    std::string panel_path;
    double alpha = 0.0;
    double beta = 0.0;
    bool has_alpha = false;
    bool has_beta = false;
    int precision = 4;
};

struct AnalyzeResult {
    std::vector<AgentAggregate> aggregates;
    std::optional<std::vector<RiskRow>> rows; // loss or panel runs only
    std::string matrix_heading;
    Comparison matrix_rule = Comparison::Score;
    Partition partition{Comparison::Score, {}, {}, {}, {}};
};

AnalyzeResult compute(const AnalyzeOptions& o, const InfoSystem& s, double eps) {
    AnalyzeResult result;
    result.aggregates = s.aggregate_all();

    if (!o.loss_path.empty() || !o.panel_path.empty()) {
        const Comparison rule = parse_comparison(o.rule);
        result.matrix_rule = rule;
        if (!o.loss_path.empty()) {
            const LossFunction l = load_loss_file(o.loss_path);
            if (!validate_loss(l, eps).count(rule))
                std::cerr << "warning: the loss function is not monotone under rule '"
                          << to_string(rule) << "'\n";
            result.rows = expected_loss_matrix(s, l);
            result.matrix_heading = "Expected losses";
        } else {
            const LossPanel panel = load_panel_file(o.panel_path);
            if (!panel.common_modes().count(rule))
                std::cerr << "warning: not every expert is monotone under rule '"
                          << to_string(rule) << "'\n";
            result.rows = group_expected_loss_matrix(s, panel);
            result.matrix_heading = "Group expected losses";
        }
        result.partition = to_partition(classify_all(*result.rows, rule, eps), rule);
        return result;
    }

    const Comparison regime = parse_comparison(o.regime);
    switch (regime) {
        case Comparison::QuasiOrder: {
            if (o.gamma_upper.empty() || o.gamma_lower.empty())
                throw ThresholdError("regime 'pfn' needs --gamma-upper and --gamma-lower");
            const QuasiThresholds t{parse_pfn_flag(o.gamma_upper, "--gamma-upper"),
                                    parse_pfn_flag(o.gamma_lower, "--gamma-lower")};
            result.partition = partition_quasi(s, t, eps);
            break;
        }
        case Comparison::Score:
        case Comparison::Closeness: {
            if (!o.has_alpha || !o.has_beta)
                throw ThresholdError("regime '" + std::string(to_string(regime)) +
                                     "' needs --alpha and --beta");
            const BandThresholds t{o.alpha, o.beta};
            result.partition = regime == Comparison::Score ? partition_score(s, t, eps)
                                                           : partition_closeness(s, t, eps);
            break;
        }
    }
    return result;
}

std::string matrix_heading(const AnalyzeResult& r) {
    const bool group = r.matrix_heading.rfind("Group", 0) == 0;
    switch (r.matrix_rule) {
        case Comparison::QuasiOrder: return r.matrix_heading;
        case Comparison::Score:
            return group ? "Group expected-loss scores" : "Expected-loss scores";
        case Comparison::Closeness:
            return group ? "Group expected-loss closeness indices"
                         : "Expected-loss closeness indices";
    }
    return r.matrix_heading;
}

Table matrix_table(const AnalyzeResult& r, int precision) {
    switch (r.matrix_rule) {
        case Comparison::QuasiOrder: return loss_table(*r.rows, precision);
        case Comparison::Score:
        case Comparison::Closeness: {
            std::vector<std::string> agents;
            std::vector<std::array<double, 3>> values;
            for (const auto& row : *r.rows) {
                agents.push_back(row.agent);
                values.push_back(r.matrix_rule == Comparison::Score ? score_row(row)
                                                                    : closeness_row(row));
            }
            return value_table(agents, values, precision);
        }
    }
    return {};
}

void emit_text(const AnalyzeResult& r, const AnalyzeOptions& o, bool markdown) {
    const auto emit = [&](const std::string& heading, const Table& t) {
        if (markdown)
            std::cout << "## " << heading << "\n\n" << render_markdown(t) << '\n';
        else
            std::cout << "# " << heading << '\n' << render_csv(t);
    };
    emit("Aggregates", aggregate_table(r.aggregates, o.precision));
    if (r.rows) emit(matrix_heading(r), matrix_table(r, o.precision));
    emit("Partition", partition_table(r.partition));
}

void emit_json(const AnalyzeResult& r, const AnalyzeOptions& o) {
    nlohmann::json j;
    auto& aggregates = j["aggregates"] = nlohmann::json::array();
    for (const auto& a : r.aggregates)
        aggregates.push_back({{"agent", a.agent},
                              {"value", to_json(a.value, o.precision)},
                              {"score", round_to(a.score, o.precision)},
                              {"closeness", round_to(a.closeness, o.precision)}});
    if (r.rows) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : *r.rows) {
            nlohmann::json entry{{"agent", row.agent}};
            if (r.matrix_rule == Comparison::QuasiOrder) {
                entry["P"] = to_json(row.loss_p, o.precision);
                entry["B"] = to_json(row.loss_b, o.precision);
                entry["N"] = to_json(row.loss_n, o.precision);
            } else {
                const auto v = r.matrix_rule == Comparison::Score ? score_row(row)
                                                                  : closeness_row(row);
                entry["P"] = round_to(v[0], o.precision);
                entry["B"] = round_to(v[1], o.precision);
                entry["N"] = round_to(v[2], o.precision);
            }
            rows.push_back(std::move(entry));
        }
        j["matrix"] = {{"rule", std::string(to_string(r.matrix_rule))},
                       {"rows", std::move(rows)}};
    }
    j["partition"] = to_json(r.partition);
    std::cout << j.dump(2) << '\n';
}

int run_analyze(const AnalyzeOptions& o) {
    const double eps = comparison_eps();
    const InfoSystem s = load_system_file(o.system_path, resolve_format(o.format, o.system_path));
    const AnalyzeResult r = compute(o, s, eps);
    if (o.out == "json")
        emit_json(r, o);
    else
        emit_text(r, o, o.out == "markdown");
    return kExitOk;
}

// --------------------------------------------------------------- reproduce

class Checker {
public:
    void check(const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
        all_ok_ &= ok;
    }
    bool all_ok() const { return all_ok_; }

private:
    bool all_ok_ = true;
};

bool near(double value, double expected, double tol) {
    return std::fabs(value - expected) <= tol;
}

bool same_partition(const Partition& p, const std::vector<std::string>& positive,
                    const std::vector<std::string>& central,
                    const std::vector<std::string>& negative,
                    const std::vector<std::string>& unclassified) {
    return p.positive == positive && p.central == central && p.negative == negative &&
           p.unclassified == unclassified;
}

bool rows_near(const std::vector<RiskRow>& rows,
               const std::array<std::array<std::array<double, 2>, 3>, 6>& expected,
               double tol) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::array<const Pfn*, 3> losses{&rows[i].loss_p, &rows[i].loss_b,
                                               &rows[i].loss_n};
        for (std::size_t a = 0; a < 3; ++a)
            if (!near(losses[a]->mu(), expected[i][a][0], tol) ||
                !near(losses[a]->nu(), expected[i][a][1], tol))
                return false;
    }
    return true;
}

bool grid_near(const std::vector<std::array<double, 3>>& grid,
               const std::array<std::array<double, 3>, 6>& expected, double tol) {
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t a = 0; a < 3; ++a)
            if (!near(grid[i][a], expected[i][a], tol)) return false;
    return true;
}

int run_reproduce(const std::string& data_dir) {
    const InfoSystem s = load_system_file(data_dir + "/conflict_system.csv");
    const LossFunction loss = load_loss_file(data_dir + "/loss_function.json");
    const LossPanel panel = load_panel_file(data_dir + "/loss_panel.json");
    const double eps = comparison_eps();

    Checker c;
    const auto aggregates = s.aggregate_all();

    bool ok = aggregates.size() == 6;
    for (std::size_t i = 0; ok && i < 6; ++i)
        ok = near(aggregates[i].value.mu(), golden::kAggregates[i][0], 1e-12) &&
             near(aggregates[i].value.nu(), golden::kAggregates[i][1], 1e-12);
    c.check("aggregation", ok);

    ok = true;
    for (std::size_t i = 0; i < 6; ++i) ok &= near(aggregates[i].score, golden::kScores[i], 1e-9);
    c.check("aggregate scores", ok);

    ok = true;
    for (std::size_t i = 0; i < 6; ++i)
        ok &= near(aggregates[i].closeness, golden::kCloseness[i], 5e-4);
    c.check("aggregate closeness indices", ok);

    c.check("quasi-order partition",
            same_partition(
                partition_quasi(s, QuasiThresholds{Pfn(0.7, 0.4), Pfn(0.25, 0.85)}, eps),
                {"x1"}, {"x2", "x4", "x5", "x6"}, {}, {"x3"}));
    c.check("score partition",
            same_partition(partition_score(s, BandThresholds{0.5, -0.5}, eps), {"x1"},
                           {"x2", "x4", "x5", "x6"}, {"x3"}, {}));
    c.check("closeness partition",
            same_partition(partition_closeness(s, BandThresholds{0.75, 0.3}, eps), {"x1"},
                           {"x2", "x4", "x5", "x6"}, {"x3"}, {}));

    const auto rows = expected_loss_matrix(s, loss);
    c.check("expected-loss matrix", rows_near(rows, golden::kLossMatrix, 2e-3));
    c.check("score matrix", grid_near(score_matrix(s, loss), golden::kScoreMatrix, 2e-3));
    c.check("closeness matrix",
            grid_near(closeness_matrix(s, loss), golden::kClosenessMatrix, 2e-3));

    c.check("quasi-order classification",
            same_partition(
                to_partition(classify_all(rows, Comparison::QuasiOrder, eps),
                             Comparison::QuasiOrder),
                {"x1"}, {"x2", "x5", "x6"}, {}, {"x3", "x4"}));
    c.check("score classification",
            same_partition(to_partition(classify_all(rows, Comparison::Score, eps),
                                        Comparison::Score),
                           {"x1"}, {"x2", "x3", "x4", "x5", "x6"}, {}, {}));
    c.check("closeness classification",
            same_partition(to_partition(classify_all(rows, Comparison::Closeness, eps),
                                        Comparison::Closeness),
                           {"x1"}, {"x2", "x3", "x4", "x5", "x6"}, {}, {}));

    const GroupMatrices group = group_matrices(s, panel);
    c.check("group expected-loss matrix", rows_near(group.losses, golden::kGroupLosses, 2e-3));
    c.check("group score matrix", grid_near(group.scores, golden::kGroupScores, 2e-3));
    c.check("group closeness matrix",
            grid_near(group.closenesses, golden::kGroupCloseness, 2e-3));

    c.check("group quasi-order classification",
            same_partition(to_partition(classify_all(group.losses, Comparison::QuasiOrder, eps),
                                        Comparison::QuasiOrder),
                           {"x1"}, {"x2", "x4", "x5", "x6"}, {}, {"x3"}));
    c.check("group score classification",
            same_partition(to_partition(classify_all(group.losses, Comparison::Score, eps),
                                        Comparison::Score),
                           {"x1"}, {"x2", "x4", "x5", "x6"}, {"x3"}, {}));
    c.check("group closeness classification",
            same_partition(to_partition(classify_all(group.losses, Comparison::Closeness, eps),
                                        Comparison::Closeness),
                           {"x1"}, {"x2", "x4", "x5", "x6"}, {"x3"}, {}));

    std::cout << (c.all_ok() ? "all checks passed\n" : "some checks failed\n");
    return c.all_ok() ? kExitOk : kExitReproduce;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conflict analysis over Pythagorean fuzzy opinion systems"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "Check a system file and report defects");
    std::string v_system;
    std::string v_format;
    validate->add_option("--system", v_system, "system file (CSV or JSON)")->required();
    validate->add_option("--format", v_format, "csv|json (default: by file extension)")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* analyze = app.add_subcommand("analyze", "Aggregate, build matrices and partition");
    AnalyzeOptions a;
    analyze->add_option("--system", a.system_path, "system file (CSV or JSON)")->required();
    analyze->add_option("--format", a.format, "csv|json (default: by file extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* regime_opt = analyze->add_option(
        "--regime", a.regime, "threshold partition regime: pfn|score|closeness");
    auto* alpha_opt = analyze->add_option("--alpha", a.alpha, "upper band threshold");
    auto* beta_opt = analyze->add_option("--beta", a.beta, "lower band threshold");
    analyze->add_option("--gamma-upper", a.gamma_upper, "upper PFN threshold as mu,nu");
    analyze->add_option("--gamma-lower", a.gamma_lower, "lower PFN threshold as mu,nu");
    auto* loss_opt =
        analyze->add_option("--loss", a.loss_path, "loss function file (JSON)");
    auto* panel_opt =
        analyze->add_option("--panel", a.panel_path, "loss panel file (JSON)");
    analyze->add_option("--rule", a.rule, "decision rule: pfn|score|closeness (default score)")
        ->check(CLI::IsMember({"pfn", "score", "closeness"}));
    analyze->add_option("--out", a.out, "output format (default markdown)")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
    analyze->add_option("--precision", a.precision, "decimal digits in output (default 4)")
        ->check(CLI::Range(1, 17));
    regime_opt->excludes(loss_opt);
    regime_opt->excludes(panel_opt);
    loss_opt->excludes(panel_opt);

    auto* reproduce =
        app.add_subcommand("reproduce", "Recompute the bundled demo dataset golden results");
    std::string data_dir = "data";
    reproduce->add_option("--data", data_dir, "fixture directory (default ./data)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    a.has_alpha = alpha_opt->count() > 0;
    a.has_beta = beta_opt->count() > 0;

    try {
        if (*validate) return run_validate(v_system, v_format);
        if (*analyze) {
            if (a.loss_path.empty() && a.panel_path.empty() && a.regime.empty()) {
                std::cerr << "error: exactly one of --regime, --loss or --panel must drive "
                             "the run\n";
                return kExitConfig;
            }
            return run_analyze(a);
        }
        return run_reproduce(data_dir);
    } catch (const ThresholdError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const LossOrderError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
