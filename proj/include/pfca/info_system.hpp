#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pfca/error.hpp"
#include "pfca/pfn.hpp"

namespace pfca {

/// One agent's aggregated attitude with its two total-order summaries.
struct AgentAggregate {
    std::string agent;
    Pfn value;
    double score;
    double closeness;
};

/// A Pythagorean fuzzy information system: agents x issues grid of Pfn values
/// plus one importance weight per issue. Immutable after construction, so all
/// reads (including concurrent ones) are safe.
class InfoSystem {
public:
    /// Validates shape, identifier uniqueness and weights. Empty `weights`
    /// defaults to the uniform vector 1/m.
    InfoSystem(std::vector<std::string> agents, std::vector<std::string> issues,
               std::vector<std::vector<Pfn>> values, std::vector<double> weights = {})
        : agents_(std::move(agents)),
          issues_(std::move(issues)),
          values_(std::move(values)),
          weights_(std::move(weights)) {
        if (agents_.empty()) throw ShapeError("information system has no agents");
        if (issues_.empty()) throw ShapeError("information system has no issues");
        check_unique(agents_, "agent");
        check_unique(issues_, "issue");
        if (values_.size() != agents_.size())
            throw ShapeError("value grid has " + std::to_string(values_.size()) +
                             " rows for " + std::to_string(agents_.size()) + " agents");
        for (std::size_t r = 0; r < values_.size(); ++r) {
            if (values_[r].size() != issues_.size())
                throw ShapeError("agent '" + agents_[r] + "' has " +
                                 std::to_string(values_[r].size()) + " cells for " +
                                 std::to_string(issues_.size()) + " issues");
        }
        if (weights_.empty())
            weights_.assign(issues_.size(), 1.0 / static_cast<double>(issues_.size()));
        if (weights_.size() != issues_.size())
            throw WeightError("weight vector has " + std::to_string(weights_.size()) +
                              " entries for " + std::to_string(issues_.size()) + " issues");
        check_weights(weights_, "issue weights");
    }

    const std::vector<std::string>& agents() const noexcept { return agents_; }
    const std::vector<std::string>& issues() const noexcept { return issues_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    std::size_t agent_count() const noexcept { return agents_.size(); }
    std::size_t issue_count() const noexcept { return issues_.size(); }

    /// The Pythagorean matrix: the full grid, row per agent in input order.
    const std::vector<std::vector<Pfn>>& matrix() const noexcept { return values_; }

    const Pfn& at(std::size_t row, std::size_t col) const { return values_.at(row).at(col); }

    /// Index of an agent identifier; throws UnknownAgentError when absent.
    std::size_t agent_index(std::string_view agent) const {
        for (std::size_t i = 0; i < agents_.size(); ++i)
            if (agents_[i] == agent) return i;
        throw UnknownAgentError("unknown agent '" + std::string(agent) + "'");
    }

    /// Weighted average of one agent's row under the issue weights.
    Pfn aggregate(std::size_t row) const {
        return weighted_average(values_.at(row), weights_);
    }

    Pfn aggregate(std::string_view agent) const { return aggregate(agent_index(agent)); }

    /// Aggregate every agent, with score and closeness index, in agent order.
    std::vector<AgentAggregate> aggregate_all() const {
        std::vector<AgentAggregate> out;
        out.reserve(agents_.size());
        for (std::size_t i = 0; i < agents_.size(); ++i) {
            const Pfn r = aggregate(i);
            out.push_back({agents_[i], r, pfca::score(r), pfca::closeness(r)});
        }
        return out;
    }

    friend bool operator==(const InfoSystem&, const InfoSystem&) = default;

private:
    static void check_unique(const std::vector<std::string>& ids, std::string_view kind) {
        std::unordered_set<std::string_view> seen;
        for (const auto& id : ids) {
            if (id.empty())
                throw ConstraintError("empty " + std::string(kind) + " identifier");
            if (!seen.insert(id).second)
                throw ConstraintError("duplicate " + std::string(kind) + " identifier '" + id + "'");
        }
    }

    std::vector<std::string> agents_;
    std::vector<std::string> issues_;
    std::vector<std::vector<Pfn>> values_;
    std::vector<double> weights_;
};

} // namespace pfca
