#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "pfca/alliance.hpp"
#include "pfca/error.hpp"
#include "pfca/info_system.hpp"
#include "pfca/loss.hpp"
#include "pfca/pfn.hpp"

namespace pfca {

/// The three classification actions, in tie-break precedence order.
enum class Action { Positive, Central, Negative };

/// Outcome region of a minimum-risk classification. `Unclassified` can occur
/// only under the quasi-order rule, when no action's loss is below both others.
enum class Region { Positive, Central, Negative, Unclassified };

inline std::string_view to_string(Region r) noexcept {
    switch (r) {
        case Region::Positive: return "positive";
        case Region::Central: return "central";
        case Region::Negative: return "negative";
        case Region::Unclassified: return "unclassified";
    }
    return "?";
}

/// Expected losses of the three actions for one agent.
struct RiskRow {
    std::string agent;
    Pfn loss_p;
    Pfn loss_b;
    Pfn loss_n;
};

struct Classification {
    std::string agent;
    Region region;
    Comparison rule;
};

/// Expected loss of an action for an agent whose aggregate has closeness
/// index p: the Pythagorean mix p * lambda_X + (1-p) * lambda_notX, evaluated
/// in product form
///   P( sqrt(1 - (1-mu_X^2)^p (1-mu_notX^2)^(1-p)),  nu_X^p nu_notX^(1-p) ).
/// At p = 1 this is exactly the X-column loss, at p = 0 the other column.
inline Pfn expected_loss(double p, const LossFunction& l, Action action) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("conditional probability out of [0,1]: " + format_double(p));
    const Pfn* on_x = nullptr;
    const Pfn* off_x = nullptr;
    switch (action) {
        case Action::Positive: on_x = &l.pp; off_x = &l.pn; break;
        case Action::Central: on_x = &l.bp; off_x = &l.bn; break;
        case Action::Negative: on_x = &l.np; off_x = &l.nn; break;
    }
    // the mix degenerates to a single column at the endpoints; return it
    // outright instead of round-tripping through pow/sqrt
    if (p == 1.0) return *on_x;
    if (p == 0.0) return *off_x;
    const double t = std::pow(1.0 - on_x->mu() * on_x->mu(), p) *
                     std::pow(1.0 - off_x->mu() * off_x->mu(), 1.0 - p);
    const double nu = std::pow(on_x->nu(), p) * std::pow(off_x->nu(), 1.0 - p);
    return Pfn(std::sqrt(std::clamp(1.0 - t, 0.0, 1.0)), std::clamp(nu, 0.0, 1.0));
}

/// One RiskRow per agent, driven by the closeness index of each aggregate.
inline std::vector<RiskRow> expected_loss_matrix(const InfoSystem& s, const LossFunction& l) {
    std::vector<RiskRow> out;
    out.reserve(s.agent_count());
    for (std::size_t i = 0; i < s.agent_count(); ++i) {
        const double p = closeness(s.aggregate(i));
        out.push_back({s.agents()[i], expected_loss(p, l, Action::Positive),
                       expected_loss(p, l, Action::Central),
                       expected_loss(p, l, Action::Negative)});
    }
    return out;
}

/// Scores of the three expected losses of a row, in P, B, N order.
inline std::array<double, 3> score_row(const RiskRow& r) noexcept {
    return {score(r.loss_p), score(r.loss_b), score(r.loss_n)};
}

/// Closeness indices of the three expected losses of a row, in P, B, N order.
inline std::array<double, 3> closeness_row(const RiskRow& r) noexcept {
    return {closeness(r.loss_p), closeness(r.loss_b), closeness(r.loss_n)};
}

inline std::vector<std::array<double, 3>> score_matrix(const InfoSystem& s,
                                                       const LossFunction& l) {
    std::vector<std::array<double, 3>> out;
    for (const RiskRow& r : expected_loss_matrix(s, l)) out.push_back(score_row(r));
    return out;
}

inline std::vector<std::array<double, 3>> closeness_matrix(const InfoSystem& s,
                                                           const LossFunction& l) {
    std::vector<std::array<double, 3>> out;
    for (const RiskRow& r : expected_loss_matrix(s, l)) out.push_back(closeness_row(r));
    return out;
}

namespace detail {

inline Region region_of_min(const std::array<double, 3>& v, double eps) noexcept {
    // keep the earliest index on ties: precedence Positive, Central, Negative
    std::size_t best = 0;
    for (std::size_t i = 1; i < 3; ++i)
        if (v[i] < v[best] - eps) best = i;
    return best == 0 ? Region::Positive : (best == 1 ? Region::Central : Region::Negative);
}

} // namespace detail

/// Minimum-expected-loss classification of one row under the given rule.
///
/// Quasi-order: the region whose loss is <= both others; with several minima
/// the precedence is P, B, N; with none the agent is Unclassified.
/// Score/closeness: the action with the smallest total-order value, same
/// precedence on ties; never Unclassified.
inline Classification classify(const RiskRow& r, Comparison rule, double eps = kCompareEps) {
    Region region = Region::Unclassified;
    switch (rule) {
        case Comparison::QuasiOrder: {
            if (quasi_le(r.loss_p, r.loss_b, eps) && quasi_le(r.loss_p, r.loss_n, eps))
                region = Region::Positive;
            else if (quasi_le(r.loss_b, r.loss_p, eps) && quasi_le(r.loss_b, r.loss_n, eps))
                region = Region::Central;
            else if (quasi_le(r.loss_n, r.loss_p, eps) && quasi_le(r.loss_n, r.loss_b, eps))
                region = Region::Negative;
            break;
        }
        case Comparison::Score:
            region = detail::region_of_min(score_row(r), eps);
            break;
        case Comparison::Closeness:
            region = detail::region_of_min(closeness_row(r), eps);
            break;
    }
    return {r.agent, region, rule};
}

inline std::vector<Classification> classify_all(const std::vector<RiskRow>& rows,
                                                Comparison rule, double eps = kCompareEps) {
    std::vector<Classification> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(classify(r, rule, eps));
    return out;
}

/// Assembles classifications (already in agent order) into a Partition.
inline Partition to_partition(const std::vector<Classification>& cls, Comparison rule) {
    Partition out{rule, {}, {}, {}, {}};
    for (const auto& c : cls) {
        switch (c.region) {
            case Region::Positive: out.positive.push_back(c.agent); break;
            case Region::Central: out.central.push_back(c.agent); break;
            case Region::Negative: out.negative.push_back(c.agent); break;
            case Region::Unclassified: out.unclassified.push_back(c.agent); break;
        }
    }
    return out;
}

} // namespace pfca
