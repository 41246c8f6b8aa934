#pragma once

#include <set>
#include <string>

#include "pfca/alliance.hpp"
#include "pfca/error.hpp"
#include "pfca/pfn.hpp"

namespace pfca {

/// Six PFN-valued losses for the three-way decision: taking action P/B/N
/// (classify positive/central/negative) when the agent truly belongs to the
/// target camp (X column: pp, bp, np) or does not (non-X column: pn, bn, nn).
struct LossFunction {
    Pfn pp; ///< classify positive, agent in the camp
    Pfn bp; ///< classify central,  agent in the camp
    Pfn np; ///< classify negative, agent in the camp
    Pfn pn; ///< classify positive, agent outside the camp
    Pfn bn; ///< classify central,  agent outside the camp
    Pfn nn; ///< classify negative, agent outside the camp

    friend bool operator==(const LossFunction&, const LossFunction&) = default;
};

namespace detail {

template <typename Le>
bool chains_hold(const LossFunction& l, Le le) {
    // cost of misclassifying grows with distance from the true camp:
    // pp <= bp <= np on the X column and nn <= bn <= pn on the other
    return le(l.pp, l.bp) && le(l.bp, l.np) && le(l.nn, l.bn) && le(l.bn, l.pn);
}

} // namespace detail

/// Returns every comparison mode under which both monotonicity chains hold.
/// Throws LossOrderError when the set would be empty.
inline std::set<Comparison> validate_loss(const LossFunction& l, double eps = kCompareEps) {
    std::set<Comparison> modes;
    if (detail::chains_hold(l, [eps](const Pfn& a, const Pfn& b) { return quasi_le(a, b, eps); }))
        modes.insert(Comparison::QuasiOrder);
    if (detail::chains_hold(l, [eps](const Pfn& a, const Pfn& b) {
            return score_compare(a, b, eps) <= 0;
        }))
        modes.insert(Comparison::Score);
    if (detail::chains_hold(l, [eps](const Pfn& a, const Pfn& b) {
            return closeness_compare(a, b, eps) <= 0;
        }))
        modes.insert(Comparison::Closeness);
    if (modes.empty())
        throw LossOrderError("loss function is not monotone under any comparison mode");
    return modes;
}

} // namespace pfca
