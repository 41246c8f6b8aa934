#pragma once

#include <array>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfca/alliance.hpp"
#include "pfca/format.hpp"
#include "pfca/info_system.hpp"
#include "pfca/risk.hpp"

namespace pfca {

/// Rounds to `precision` decimal digits (ties to even), for numeric output
/// that should match the fixed-point text rendering.
inline double round_to(double v, int precision) {
    return std::strtod(format_fixed(v, precision).c_str(), nullptr);
}

/// "P(mu,nu)" at fixed precision.
inline std::string format_pfn(const Pfn& g, int precision) {
    return "P(" + format_fixed(g.mu(), precision) + "," + format_fixed(g.nu(), precision) + ")";
}

/// A rendered table: one header row plus data rows, all pre-formatted text.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline std::string render_csv(const Table& t) {
    auto line = [](const std::vector<std::string>& fields) {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out += ',';
            out += detail::csv_escape(fields[i]);
        }
        return out + "\n";
    };
    std::string out = line(t.header);
    for (const auto& row : t.rows) out += line(row);
    return out;
}

inline std::string render_markdown(const Table& t) {
    auto line = [](const std::vector<std::string>& fields) {
        std::string out = "|";
        for (const auto& f : fields) out += " " + f + " |";
        return out + "\n";
    };
    std::string out = line(t.header);
    out += "|";
    for (std::size_t i = 0; i < t.header.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& row : t.rows) out += line(row);
    return out;
}

/// Per-agent aggregates with score and closeness columns.
inline Table aggregate_table(std::span<const AgentAggregate> aggregates, int precision) {
    Table t{{"agent", "aggregate", "score", "closeness"}, {}};
    for (const auto& a : aggregates)
        t.rows.push_back({a.agent, format_pfn(a.value, precision),
                          format_fixed(a.score, precision),
                          format_fixed(a.closeness, precision)});
    return t;
}

/// PFN-valued loss matrix, agents as rows and actions P/B/N as columns.
inline Table loss_table(std::span<const RiskRow> rows, int precision) {
    Table t{{"agent", "P", "B", "N"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r.agent, format_pfn(r.loss_p, precision),
                          format_pfn(r.loss_b, precision), format_pfn(r.loss_n, precision)});
    return t;
}

/// Scalar matrix (score or closeness view) with the same layout.
inline Table value_table(std::span<const std::string> agents,
                         std::span<const std::array<double, 3>> values, int precision) {
    Table t{{"agent", "P", "B", "N"}, {}};
    for (std::size_t i = 0; i < agents.size(); ++i)
        t.rows.push_back({agents[i], format_fixed(values[i][0], precision),
                          format_fixed(values[i][1], precision),
                          format_fixed(values[i][2], precision)});
    return t;
}

inline Table partition_table(const Partition& p) {
    auto join = [](const std::vector<std::string>& names) {
        std::string out;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) out += ' ';
            out += names[i];
        }
        return out;
    };
    Table t{{"alliance", "agents"}, {}};
    t.rows.push_back({"positive", join(p.positive)});
    t.rows.push_back({"central", join(p.central)});
    t.rows.push_back({"negative", join(p.negative)});
    t.rows.push_back({"unclassified", join(p.unclassified)});
    return t;
}

/// {"regime": ..., "positive": [...], "central": [...], "negative": [...],
///  "unclassified": [...]}
inline nlohmann::json to_json(const Partition& p) {
    return {{"regime", std::string(to_string(p.regime))},
            {"positive", p.positive},
            {"central", p.central},
            {"negative", p.negative},
            {"unclassified", p.unclassified}};
}

inline nlohmann::json to_json(const Pfn& g, int precision) {
    return {{"mu", round_to(g.mu(), precision)}, {"nu", round_to(g.nu(), precision)}};
}

} // namespace pfca
