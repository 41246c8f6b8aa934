#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pfca/error.hpp"
#include "pfca/format.hpp"
#include "pfca/group.hpp"
#include "pfca/info_system.hpp"
#include "pfca/loss.hpp"
#include "pfca/pfn.hpp"

namespace pfca {

enum class SystemFormat { Csv, Json };

namespace detail {

inline std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One CSV record -> fields. Double quotes delimit fields, "" escapes a quote.
inline std::vector<std::string> split_record(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

inline std::string csv_escape(std::string_view field) {
    // leading '!' is quoted so that an agent id can never read as the
    // reserved !weights marker
    if (field.find_first_of(",\"\n") == std::string_view::npos &&
        !field.starts_with('!'))
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// "mu,nu" -> Pfn; `where` names the cell in error messages.
inline Pfn parse_cell(std::string_view text, const std::string& where) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos)
        throw ParseError(where + ": cell '" + std::string(text) + "' is not of the form mu,nu");
    const double mu = parse_double(text.substr(0, comma), where + " membership");
    const double nu = parse_double(text.substr(comma + 1), where + " non-membership");
    try {
        return Pfn(mu, nu);
    } catch (const Error& e) {
        throw ConstraintError(where + ": " + e.what());
    }
}

inline std::vector<std::string> non_blank_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(line);
    }
    return lines;
}

struct CsvParts {
    std::vector<std::string> issues;
    std::vector<double> weights; // empty when the weights row is absent
    std::vector<std::string> agents;
    std::vector<std::vector<std::string>> cells; // raw "mu,nu" text
};

inline CsvParts parse_csv_structure(const std::string& text) {
    CsvParts parts;
    const auto lines = non_blank_lines(text);
    if (lines.empty()) throw ParseError("empty input");
    auto header = split_record(lines[0], 1);
    if (header.size() < 2) throw ParseError("header must list at least one issue");
    parts.issues.assign(header.begin() + 1, header.end());
    std::size_t first_data = 1;
    // the marker is matched on the raw line: a quoted "!weights" is an agent id
    if (lines.size() > 1 && lines[1].rfind("!weights,", 0) == 0) {
        const auto second = split_record(lines[1], 2);
        if (second.size() != parts.issues.size() + 1)
            throw ParseError("weights row has " + std::to_string(second.size() - 1) +
                             " entries for " + std::to_string(parts.issues.size()) +
                             " issues");
        for (std::size_t i = 1; i < second.size(); ++i)
            parts.weights.push_back(
                parse_double(second[i], "weight of issue '" + parts.issues[i - 1] + "'"));
        first_data = 2;
    }
    for (std::size_t li = first_data; li < lines.size(); ++li) {
        auto fields = split_record(lines[li], li + 1);
        if (fields.size() != parts.issues.size() + 1)
            throw ParseError("line " + std::to_string(li + 1) + ": expected " +
                             std::to_string(parts.issues.size() + 1) + " fields, got " +
                             std::to_string(fields.size()));
        parts.agents.push_back(fields[0]);
        parts.cells.emplace_back(fields.begin() + 1, fields.end());
    }
    if (parts.agents.empty()) throw ParseError("no agent rows");
    return parts;
}

inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline Pfn pfn_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("mu") || !j.contains("nu") ||
        !j["mu"].is_number() || !j["nu"].is_number())
        throw ParseError(where + ": expected an object {\"mu\": r, \"nu\": r}");
    try {
        return Pfn(j["mu"].get<double>(), j["nu"].get<double>());
    } catch (const Error& e) {
        throw ConstraintError(where + ": " + e.what());
    }
}

} // namespace detail

inline InfoSystem load_system(const std::string& text, SystemFormat format) {
    if (format == SystemFormat::Csv) {
        auto parts = detail::parse_csv_structure(text);
        std::vector<std::vector<Pfn>> values;
        values.reserve(parts.agents.size());
        for (std::size_t r = 0; r < parts.agents.size(); ++r) {
            std::vector<Pfn> row;
            row.reserve(parts.issues.size());
            for (std::size_t c = 0; c < parts.issues.size(); ++c)
                row.push_back(detail::parse_cell(parts.cells[r][c],
                                                 "agent '" + parts.agents[r] + "', issue '" +
                                                     parts.issues[c] + "'"));
            values.push_back(std::move(row));
        }
        return InfoSystem(std::move(parts.agents), std::move(parts.issues), std::move(values),
                          std::move(parts.weights));
    }
    const nlohmann::json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("agents") || !j.contains("issues") || !j.contains("values"))
        throw ParseError("system JSON needs 'agents', 'issues' and 'values'");
    std::vector<std::string> agents;
    std::vector<std::string> issues;
    try {
        agents = j["agents"].get<std::vector<std::string>>();
        issues = j["issues"].get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("'agents' and 'issues' must be arrays of strings");
    }
    if (agents.empty()) throw ParseError("no agent rows");
    if (!j["values"].is_array() || j["values"].size() != agents.size())
        throw ParseError("'values' must hold one row per agent");
    std::vector<std::vector<Pfn>> values;
    values.reserve(agents.size());
    for (std::size_t r = 0; r < agents.size(); ++r) {
        const auto& jrow = j["values"][r];
        if (!jrow.is_array() || jrow.size() != issues.size())
            throw ParseError("agent '" + agents[r] + "': expected " +
                             std::to_string(issues.size()) + " cells");
        std::vector<Pfn> row;
        row.reserve(issues.size());
        for (std::size_t c = 0; c < issues.size(); ++c)
            row.push_back(detail::pfn_from_json(
                jrow[c], "agent '" + agents[r] + "', issue '" + issues[c] + "'"));
        values.push_back(std::move(row));
    }
    std::vector<double> weights;
    if (j.contains("weights")) {
        try {
            weights = j["weights"].get<std::vector<double>>();
        } catch (const nlohmann::json::exception&) {
            throw ParseError("'weights' must be an array of numbers");
        }
    }
    return InfoSystem(std::move(agents), std::move(issues), std::move(values),
                      std::move(weights));
}

inline InfoSystem load_system(std::istream& in, SystemFormat format) {
    return load_system(detail::read_all(in), format);
}

inline SystemFormat format_from_path(const std::filesystem::path& p) {
    return p.extension() == ".json" ? SystemFormat::Json : SystemFormat::Csv;
}

inline InfoSystem load_system_file(const std::filesystem::path& p,
                                   std::optional<SystemFormat> format = std::nullopt) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open '" + p.string() + "'");
    return load_system(in, format.value_or(format_from_path(p)));
}

inline std::string serialize_system(const InfoSystem& s, SystemFormat format) {
    if (format == SystemFormat::Csv) {
        std::string out = "agent";
        for (const auto& issue : s.issues()) out += "," + detail::csv_escape(issue);
        out += "\n!weights";
        for (double k : s.weights()) out += "," + format_double(k);
        out += "\n";
        for (std::size_t r = 0; r < s.agent_count(); ++r) {
            out += detail::csv_escape(s.agents()[r]);
            for (std::size_t c = 0; c < s.issue_count(); ++c) {
                const Pfn& g = s.at(r, c);
                out += ",\"" + format_double(g.mu()) + "," + format_double(g.nu()) + "\"";
            }
            out += "\n";
        }
        return out;
    }
    nlohmann::json j;
    j["agents"] = s.agents();
    j["issues"] = s.issues();
    j["weights"] = s.weights();
    auto& values = j["values"] = nlohmann::json::array();
    for (std::size_t r = 0; r < s.agent_count(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < s.issue_count(); ++c)
            row.push_back({{"mu", s.at(r, c).mu()}, {"nu", s.at(r, c).nu()}});
        values.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

inline void save_system(const InfoSystem& s, std::ostream& out, SystemFormat format) {
    out << serialize_system(s, format);
}

/// Loss function JSON: {"pp": {"mu": r, "nu": r}, "bp": ..., "np": ...,
/// "pn": ..., "bn": ..., "nn": ...}.
inline LossFunction loss_from_json(const nlohmann::json& j, const std::string& where = "loss") {
    if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
    auto entry = [&](const char* key) {
        if (!j.contains(key))
            throw ParseError(where + ": missing entry '" + std::string(key) + "'");
        return detail::pfn_from_json(j[key], where + " entry '" + key + "'");
    };
    return LossFunction{entry("pp"), entry("bp"), entry("np"),
                        entry("pn"), entry("bn"), entry("nn")};
}

inline LossFunction load_loss(const std::string& text) {
    return loss_from_json(detail::parse_json(text));
}

inline LossFunction load_loss(std::istream& in) { return load_loss(detail::read_all(in)); }

inline LossFunction load_loss_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open '" + p.string() + "'");
    return load_loss(in);
}

/// Panel JSON: {"weights": [..], "experts": [<loss objects>]}; omitted
/// weights default to the uniform vector.
inline LossPanel load_panel(const std::string& text) {
    const nlohmann::json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("experts") || !j["experts"].is_array())
        throw ParseError("panel JSON needs an 'experts' array");
    std::vector<LossFunction> experts;
    for (std::size_t i = 0; i < j["experts"].size(); ++i)
        experts.push_back(
            loss_from_json(j["experts"][i], "expert " + std::to_string(i + 1)));
    std::vector<double> weights;
    if (j.contains("weights")) {
        try {
            weights = j["weights"].get<std::vector<double>>();
        } catch (const nlohmann::json::exception&) {
            throw ParseError("'weights' must be an array of numbers");
        }
    }
    return LossPanel(std::move(experts), std::move(weights));
}

inline LossPanel load_panel(std::istream& in) { return load_panel(detail::read_all(in)); }

inline LossPanel load_panel_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw ParseError("cannot open '" + p.string() + "'");
    return load_panel(in);
}

/// Lenient validation report: dimensions, resolved weights and every defect
/// found, instead of stopping at the first one.
struct SystemScan {
    std::size_t agent_count = 0;
    std::size_t issue_count = 0;
    std::vector<double> weights;
    bool weights_defaulted = false;
    std::vector<std::string> defects;

    bool ok() const noexcept { return defects.empty(); }
};

inline SystemScan scan_system(const std::string& text, SystemFormat format) {
    SystemScan scan;
    if (format == SystemFormat::Json) {
        // JSON structure errors are not individually recoverable; fall back to
        // the strict loader and report its first complaint.
        try {
            const InfoSystem s = load_system(text, format);
            scan.agent_count = s.agent_count();
            scan.issue_count = s.issue_count();
            scan.weights = s.weights();
            const nlohmann::json j = detail::parse_json(text);
            scan.weights_defaulted = !j.contains("weights");
        } catch (const Error& e) {
            scan.defects.emplace_back(e.what());
        }
        return scan;
    }
    detail::CsvParts parts;
    try {
        parts = detail::parse_csv_structure(text);
    } catch (const Error& e) {
        scan.defects.emplace_back(e.what());
        return scan;
    }
    scan.agent_count = parts.agents.size();
    scan.issue_count = parts.issues.size();
    scan.weights_defaulted = parts.weights.empty();
    scan.weights = parts.weights;
    if (scan.weights_defaulted)
        scan.weights.assign(parts.issues.size(), 1.0 / static_cast<double>(parts.issues.size()));
    try {
        check_weights(scan.weights, "issue weights");
    } catch (const Error& e) {
        scan.defects.emplace_back(e.what());
    }
    for (std::size_t r = 0; r < parts.agents.size(); ++r) {
        for (std::size_t c = 0; c < parts.issues.size(); ++c) {
            try {
                detail::parse_cell(parts.cells[r][c], "agent '" + parts.agents[r] +
                                                          "', issue '" + parts.issues[c] + "'");
            } catch (const Error& e) {
                scan.defects.emplace_back(e.what());
            }
        }
    }
    for (std::size_t r = 0; r < parts.agents.size(); ++r)
        for (std::size_t q = r + 1; q < parts.agents.size(); ++q)
            if (parts.agents[r] == parts.agents[q])
                scan.defects.push_back("duplicate agent identifier '" + parts.agents[r] + "'");
    return scan;
}

inline SystemScan scan_system(std::istream& in, SystemFormat format) {
    return scan_system(detail::read_all(in), format);
}

} // namespace pfca
