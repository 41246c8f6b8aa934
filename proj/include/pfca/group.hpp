#pragma once

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "pfca/error.hpp"
#include "pfca/info_system.hpp"
#include "pfca/loss.hpp"
#include "pfca/pfn.hpp"
#include "pfca/risk.hpp"

namespace pfca {

/// A panel of expert loss functions with expert weights. Every member must be
/// monotone under at least one comparison mode; the panel keeps the
/// intersection of the members' modes so callers can tell whether a chosen
/// decision rule is backed by every expert.
class LossPanel {
public:
    /// Empty `weights` defaults to the uniform vector 1/m.
    explicit LossPanel(std::vector<LossFunction> experts, std::vector<double> weights = {})
        : experts_(std::move(experts)), weights_(std::move(weights)) {
        if (experts_.empty()) throw ShapeError("loss panel has no experts");
        if (weights_.empty())
            weights_.assign(experts_.size(), 1.0 / static_cast<double>(experts_.size()));
        if (weights_.size() != experts_.size())
            throw WeightError("panel has " + std::to_string(weights_.size()) +
                              " weights for " + std::to_string(experts_.size()) + " experts");
        check_weights(weights_, "expert weights");
        for (std::size_t i = 0; i < experts_.size(); ++i) {
            std::set<Comparison> modes;
            try {
                modes = validate_loss(experts_[i]);
            } catch (const LossOrderError& e) {
                throw LossOrderError("expert " + std::to_string(i + 1) + ": " + e.what());
            }
            if (i == 0) {
                common_ = modes;
            } else {
                std::set<Comparison> kept;
                for (Comparison c : common_)
                    if (modes.count(c)) kept.insert(c);
                common_ = std::move(kept);
            }
        }
    }

    const std::vector<LossFunction>& experts() const noexcept { return experts_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return experts_.size(); }

    /// Comparison modes under which every expert is monotone. May be empty;
    /// classification still works, but the chosen rule then lacks unanimous
    /// expert backing and front ends should warn.
    const std::set<Comparison>& common_modes() const noexcept { return common_; }

private:
    std::vector<LossFunction> experts_;
    std::vector<double> weights_;
    std::set<Comparison> common_;
};

/// Expert-weighted group expected loss: the componentwise weighted mean of the
/// per-expert expected losses,
///   P( sum_i k_i sqrt(1 - (1-mu_X^2)^p (1-mu_notX^2)^(1-p)),
///      sum_i k_i nu_X^p nu_notX^(1-p) ).
inline Pfn group_expected_loss(double p, const LossPanel& panel, Action action) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("conditional probability out of [0,1]: " + format_double(p));
    double mu = 0.0;
    double nu = 0.0;
    for (std::size_t i = 0; i < panel.size(); ++i) {
        const LossFunction& l = panel.experts()[i];
        const Pfn* on_x = nullptr;
        const Pfn* off_x = nullptr;
        switch (action) {
            case Action::Positive: on_x = &l.pp; off_x = &l.pn; break;
            case Action::Central: on_x = &l.bp; off_x = &l.bn; break;
            case Action::Negative: on_x = &l.np; off_x = &l.nn; break;
        }
        const double t = std::pow(1.0 - on_x->mu() * on_x->mu(), p) *
                         std::pow(1.0 - off_x->mu() * off_x->mu(), 1.0 - p);
        const double k = panel.weights()[i];
        mu += k * std::sqrt(std::clamp(1.0 - t, 0.0, 1.0));
        nu += k * std::pow(on_x->nu(), p) * std::pow(off_x->nu(), 1.0 - p);
    }
    return Pfn(std::clamp(mu, 0.0, 1.0), std::clamp(nu, 0.0, 1.0));
}

/// One group RiskRow per agent, driven by each aggregate's closeness index.
inline std::vector<RiskRow> group_expected_loss_matrix(const InfoSystem& s,
                                                       const LossPanel& panel) {
    std::vector<RiskRow> out;
    out.reserve(s.agent_count());
    for (std::size_t i = 0; i < s.agent_count(); ++i) {
        const double p = closeness(s.aggregate(i));
        out.push_back({s.agents()[i], group_expected_loss(p, panel, Action::Positive),
                       group_expected_loss(p, panel, Action::Central),
                       group_expected_loss(p, panel, Action::Negative)});
    }
    return out;
}

/// The three aligned group matrices: PFN-valued losses plus their entrywise
/// score and closeness views.
struct GroupMatrices {
    std::vector<RiskRow> losses;
    std::vector<std::array<double, 3>> scores;
    std::vector<std::array<double, 3>> closenesses;
};

inline GroupMatrices group_matrices(const InfoSystem& s, const LossPanel& panel) {
    GroupMatrices out;
    out.losses = group_expected_loss_matrix(s, panel);
    out.scores.reserve(out.losses.size());
    out.closenesses.reserve(out.losses.size());
    for (const RiskRow& r : out.losses) {
        out.scores.push_back(score_row(r));
        out.closenesses.push_back(closeness_row(r));
    }
    return out;
}

} // namespace pfca
