#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pfca/error.hpp"
#include "pfca/info_system.hpp"
#include "pfca/pfn.hpp"

namespace pfca {

/// The three comparison families the analysis can run under. Used to select
/// the partition regime, the loss-function validation mode, and the
/// minimum-risk decision rule.
enum class Comparison {
    QuasiOrder, ///< componentwise partial order; may leave pairs incomparable
    Score,      ///< total order by mu^2 - nu^2
    Closeness,  ///< total order by the closeness index
};

inline std::string_view to_string(Comparison c) noexcept {
    switch (c) {
        case Comparison::QuasiOrder: return "pfn";
        case Comparison::Score: return "score";
        case Comparison::Closeness: return "closeness";
    }
    return "?";
}

/// Quasi-order thresholds: an upper PFN for joining the positive alliance and
/// a lower PFN for the negative one.
struct QuasiThresholds {
    Pfn upper; ///< aggregates >= upper are positive
    Pfn lower; ///< aggregates <= lower are negative
};

/// Scalar thresholds for the score and closeness regimes; requires beta < alpha.
struct BandThresholds {
    double alpha;
    double beta;
};

/// Disjoint partition of the agent universe. The four sets cover every agent;
/// `unclassified` is non-empty only under the quasi-order regime, where an
/// aggregate can be incomparable with both thresholds.
struct Partition {
    Comparison regime;
    std::vector<std::string> positive;
    std::vector<std::string> central;
    std::vector<std::string> negative;
    std::vector<std::string> unclassified;
};

namespace detail {

inline void check_band(const BandThresholds& t, double lo, double hi, double eps) {
    if (!(t.alpha >= lo - eps && t.alpha <= hi + eps))
        throw ThresholdError("alpha = " + format_double(t.alpha) + " outside [" +
                             format_double(lo) + "," + format_double(hi) + "]");
    if (!(t.beta >= lo - eps && t.beta <= hi + eps))
        throw ThresholdError("beta = " + format_double(t.beta) + " outside [" +
                             format_double(lo) + "," + format_double(hi) + "]");
    if (!(t.alpha - t.beta > eps))
        throw ThresholdError("alpha = " + format_double(t.alpha) +
                             " must exceed beta = " + format_double(t.beta));
}

template <typename Value>
Partition partition_by_band(const InfoSystem& s, const BandThresholds& t, Comparison regime,
                            double eps, Value value_of) {
    Partition out{regime, {}, {}, {}, {}};
    const auto aggregates = s.aggregate_all();
    for (const auto& a : aggregates) {
        const double v = value_of(a);
        if (v >= t.alpha - eps)
            out.positive.push_back(a.agent);
        else if (v <= t.beta + eps)
            out.negative.push_back(a.agent);
        else
            out.central.push_back(a.agent);
    }
    return out;
}

} // namespace detail

/// Partition by the quasi-order against a pair of PFN thresholds.
/// An agent whose aggregate is incomparable with the deciding threshold(s)
/// lands in `unclassified`; that is expected output, not an error.
inline Partition partition_quasi(const InfoSystem& s, const QuasiThresholds& t,
                                 double eps = kCompareEps) {
    if (!quasi_le(t.lower, t.upper, eps))
        throw ThresholdError("lower threshold " + to_string(t.lower) +
                             " is not below upper threshold " + to_string(t.upper) +
                             " in the quasi-order");
    Partition out{Comparison::QuasiOrder, {}, {}, {}, {}};
    for (std::size_t i = 0; i < s.agent_count(); ++i) {
        const Pfn r = s.aggregate(i);
        const auto& agent = s.agents()[i];
        if (quasi_ge(r, t.upper, eps)) {
            out.positive.push_back(agent);
        } else if (quasi_le(r, t.lower, eps)) {
            out.negative.push_back(agent);
        } else if (quasi_ge(r, t.lower, eps) && quasi_le(r, t.upper, eps)) {
            // strictly between: comparable with both and equal to neither,
            // the boundary cases having been taken by the branches above
            out.central.push_back(agent);
        } else {
            out.unclassified.push_back(agent);
        }
    }
    return out;
}

/// Partition by score against alpha/beta in [-1, 1]. Always total.
inline Partition partition_score(const InfoSystem& s, const BandThresholds& t,
                                 double eps = kCompareEps) {
    detail::check_band(t, -1.0, 1.0, eps);
    return detail::partition_by_band(s, t, Comparison::Score, eps,
                                     [](const AgentAggregate& a) { return a.score; });
}

/// Partition by closeness index against alpha/beta in [0, 1]. Always total.
inline Partition partition_closeness(const InfoSystem& s, const BandThresholds& t,
                                     double eps = kCompareEps) {
    detail::check_band(t, 0.0, 1.0, eps);
    return detail::partition_by_band(s, t, Comparison::Closeness, eps,
                                     [](const AgentAggregate& a) { return a.closeness; });
}

} // namespace pfca
