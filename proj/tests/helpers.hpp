#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "pfca/pfca.hpp"

namespace testutil {

inline pfca::Pfn random_pfn(std::mt19937& g) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double mu = u(g);
    const double cap = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    return pfca::Pfn(mu, u(g) * cap);
}

inline std::vector<double> random_weights(std::mt19937& g, std::size_t n) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        x = e(g);
        sum += x;
    }
    for (auto& x : w) x /= sum;
    return w;
}

inline pfca::InfoSystem random_system(std::mt19937& g, std::size_t max_agents = 8,
                                      std::size_t max_issues = 6) {
    std::uniform_int_distribution<std::size_t> na(1, max_agents);
    std::uniform_int_distribution<std::size_t> ni(1, max_issues);
    const std::size_t n = na(g);
    const std::size_t m = ni(g);
    std::vector<std::string> agents;
    std::vector<std::string> issues;
    for (std::size_t i = 0; i < n; ++i) agents.push_back("x" + std::to_string(i + 1));
    for (std::size_t j = 0; j < m; ++j) issues.push_back("c" + std::to_string(j + 1));
    std::vector<std::vector<pfca::Pfn>> values;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<pfca::Pfn> row;
        for (std::size_t j = 0; j < m; ++j) row.push_back(random_pfn(g));
        values.push_back(std::move(row));
    }
    return pfca::InfoSystem(std::move(agents), std::move(issues), std::move(values),
                            random_weights(g, m));
}

/// Chain g1 <= g2 <= ... <= gk in the quasi-order: pair ascending memberships
/// with descending non-memberships drawn from valid samples (the k-th largest
/// nu was valid for some mu at least as large as the k-th smallest mu, so
/// every re-paired element is valid).
inline std::vector<pfca::Pfn> random_quasi_chain(std::mt19937& g, std::size_t k) {
    std::vector<double> mus;
    std::vector<double> nus;
    for (std::size_t i = 0; i < k; ++i) {
        const pfca::Pfn p = random_pfn(g);
        mus.push_back(p.mu());
        nus.push_back(p.nu());
    }
    std::sort(mus.begin(), mus.end());
    std::sort(nus.rbegin(), nus.rend());
    std::vector<pfca::Pfn> chain;
    for (std::size_t i = 0; i < k; ++i) chain.emplace_back(mus[i], nus[i]);
    return chain;
}

/// Loss function monotone under the quasi-order (hence under score and
/// closeness as well).
inline pfca::LossFunction random_quasi_loss(std::mt19937& g) {
    const auto on_x = random_quasi_chain(g, 3);   // pp <= bp <= np
    const auto off_x = random_quasi_chain(g, 3);  // nn <= bn <= pn
    return pfca::LossFunction{on_x[0], on_x[1], on_x[2], off_x[2], off_x[1], off_x[0]};
}

inline pfca::LossPanel random_panel(std::mt19937& g, std::size_t max_experts = 5) {
    std::uniform_int_distribution<std::size_t> ne(1, max_experts);
    const std::size_t m = ne(g);
    std::vector<pfca::LossFunction> experts;
    for (std::size_t i = 0; i < m; ++i) experts.push_back(random_quasi_loss(g));
    return pfca::LossPanel(std::move(experts), random_weights(g, m));
}

} // namespace testutil
