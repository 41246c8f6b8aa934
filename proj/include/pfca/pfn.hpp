#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <span>
#include <string>
#include <string_view>

#include "pfca/error.hpp"
#include "pfca/format.hpp"

namespace pfca {

/// Slack allowed on mu^2 + nu^2 <= 1 so that boundary pairs such as
/// (0.6, 0.8) survive decimal rounding.
inline constexpr double kValidityEps = 1e-9;

/// Tie tolerance used by every order comparison in the library. Values that
/// differ by at most this amount compare as equal.
inline constexpr double kCompareEps = 1e-9;

/// Tolerance on weight-vector sums (they must add up to one).
inline constexpr double kWeightEps = 1e-9;

/// Pythagorean fuzzy number: a membership degree mu and a non-membership
/// degree nu, both in [0,1], constrained by mu^2 + nu^2 <= 1.
///
/// Immutable value type; every constructed instance satisfies the constraint,
/// so functions taking a Pfn never need to re-validate it.
class Pfn {
public:
    /// Validating constructor.
    /// Throws DomainError when a degree leaves [0,1] and ConstraintError when
    /// mu^2 + nu^2 exceeds 1 beyond kValidityEps.
    Pfn(double mu, double nu) : mu_(mu), nu_(nu) {
        if (!(mu >= 0.0 && mu <= 1.0))
            throw DomainError("membership degree out of [0,1]: " + format_double(mu));
        if (!(nu >= 0.0 && nu <= 1.0))
            throw DomainError("non-membership degree out of [0,1]: " + format_double(nu));
        if (mu * mu + nu * nu > 1.0 + kValidityEps)
            throw ConstraintError("mu^2 + nu^2 = " + format_double(mu * mu + nu * nu) +
                                  " exceeds 1 for (" + format_double(mu) + ", " +
                                  format_double(nu) + ")");
    }

    double mu() const noexcept { return mu_; }
    double nu() const noexcept { return nu_; }

    /// Hesitancy degree sqrt(1 - mu^2 - nu^2). The radicand is clamped to
    /// [0,1] to absorb rounding at the boundary.
    double hesitancy() const noexcept {
        return std::sqrt(std::clamp(1.0 - mu_ * mu_ - nu_ * nu_, 0.0, 1.0));
    }

    /// Full support, P(1,0).
    static Pfn ideal() noexcept { return Pfn(unchecked{}, 1.0, 0.0); }
    /// Full opposition, P(0,1).
    static Pfn anti_ideal() noexcept { return Pfn(unchecked{}, 0.0, 1.0); }

    /// Exact componentwise equality (tolerant comparison lives in
    /// quasi_compare / score_compare / closeness_compare).
    friend bool operator==(const Pfn&, const Pfn&) = default;

private:
    struct unchecked {};
    Pfn(unchecked, double mu, double nu) noexcept : mu_(mu), nu_(nu) {}

    double mu_;
    double nu_;
};

/// "P(mu,nu)" with round-trippable components; used in messages and output.
inline std::string to_string(const Pfn& g) {
    return "P(" + format_double(g.mu()) + "," + format_double(g.nu()) + ")";
}

/// a <= b in the natural quasi-order: mu_a <= mu_b and nu_a >= nu_b.
inline bool quasi_le(const Pfn& a, const Pfn& b, double eps = kCompareEps) noexcept {
    return a.mu() <= b.mu() + eps && a.nu() >= b.nu() - eps;
}

/// a >= b in the natural quasi-order: mu_a >= mu_b and nu_a <= nu_b.
inline bool quasi_ge(const Pfn& a, const Pfn& b, double eps = kCompareEps) noexcept {
    return a.mu() >= b.mu() - eps && a.nu() <= b.nu() + eps;
}

/// Natural quasi-order on Pythagorean fuzzy numbers. Partial: pairs whose
/// coordinates move in the same direction are `unordered`. Coordinates within
/// eps count as equal.
inline std::partial_ordering quasi_compare(const Pfn& a, const Pfn& b,
                                           double eps = kCompareEps) noexcept {
    const bool ge = quasi_ge(a, b, eps);
    const bool le = quasi_le(a, b, eps);
    if (ge && le) return std::partial_ordering::equivalent;
    if (ge) return std::partial_ordering::greater;
    if (le) return std::partial_ordering::less;
    return std::partial_ordering::unordered;
}

/// Pythagorean sum: P(sqrt(mu_a^2 + mu_b^2 - mu_a^2 mu_b^2), nu_a nu_b).
/// Closed on valid inputs; commutative and associative with identity P(0,1).
inline Pfn add(const Pfn& a, const Pfn& b) {
    const double ma = a.mu() * a.mu();
    const double mb = b.mu() * b.mu();
    // mu_a^2 + mu_b^2 - mu_a^2 mu_b^2, grouped so that full membership stays exact
    const double m2 = std::clamp(ma + mb * (1.0 - ma), 0.0, 1.0);
    return Pfn(std::sqrt(m2), a.nu() * b.nu());
}

/// Scalar multiple: k g = P(sqrt(1 - (1-mu^2)^k), nu^k) for k >= 0.
/// k = 1 is the identity, k = 0 collapses to P(0,1).
inline Pfn scale(double k, const Pfn& g) {
    if (!(k >= 0.0))
        throw DomainError("scaling factor must be >= 0, got " + format_double(k));
    // exact at the two degenerate factors; the general path would shave
    // sub-epsilon memberships through 1 - (1 - mu^2)
    if (k == 1.0) return g;
    if (k == 0.0) return Pfn::anti_ideal();
    const double m2 = std::clamp(1.0 - std::pow(1.0 - g.mu() * g.mu(), k), 0.0, 1.0);
    return Pfn(std::sqrt(m2), std::pow(g.nu(), k));
}

/// Score function mu^2 - nu^2, in [-1, 1]. Total preorder, coarser than the
/// quasi-order (quasi-comparable pairs keep their relative order).
inline double score(const Pfn& g) noexcept {
    return g.mu() * g.mu() - g.nu() * g.nu();
}

/// Half-sum of absolute differences of the squared components (membership,
/// non-membership, hesitancy). Symmetric, zero on equal arguments, and
/// d(g, P(1,0)) = 1 - mu^2, d(g, P(0,1)) = 1 - nu^2 hold exactly.
inline double distance(const Pfn& a, const Pfn& b) noexcept {
    const double pa = a.hesitancy();
    const double pb = b.hesitancy();
    return 0.5 * (std::fabs(a.mu() * a.mu() - b.mu() * b.mu()) +
                  std::fabs(a.nu() * a.nu() - b.nu() * b.nu()) +
                  std::fabs(pa * pa - pb * pb));
}

/// Closeness index (1 - nu^2) / (2 - mu^2 - nu^2): relative proximity to the
/// ideal P(1,0) against the anti-ideal P(0,1). Always in [0,1]; the
/// denominator is at least 1 because mu^2 + nu^2 <= 1.
inline double closeness(const Pfn& g) noexcept {
    const double m2 = g.mu() * g.mu();
    const double n2 = g.nu() * g.nu();
    return (1.0 - n2) / (2.0 - m2 - n2);
}

/// Total order induced by the score function; ties within eps are equivalent.
inline std::weak_ordering score_compare(const Pfn& a, const Pfn& b,
                                        double eps = kCompareEps) noexcept {
    const double d = score(a) - score(b);
    if (std::fabs(d) <= eps) return std::weak_ordering::equivalent;
    return d < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
}

/// Total order induced by the closeness index; ties within eps are equivalent.
inline std::weak_ordering closeness_compare(const Pfn& a, const Pfn& b,
                                            double eps = kCompareEps) noexcept {
    const double d = closeness(a) - closeness(b);
    if (std::fabs(d) <= eps) return std::weak_ordering::equivalent;
    return d < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
}

/// Checks a weight vector: every entry >= 0 and the sum equals one within
/// kWeightEps. Throws WeightError otherwise. `what` names the vector.
inline void check_weights(std::span<const double> weights, std::string_view what) {
    double sum = 0.0;
    for (double k : weights) {
        if (!(k >= 0.0))
            throw WeightError(std::string(what) + ": negative weight " + format_double(k));
        sum += k;
    }
    if (std::fabs(sum - 1.0) > kWeightEps)
        throw WeightError(std::string(what) + ": weights sum to " + format_double(sum) +
                          ", expected 1");
}

/// Weighted averaging operator P(sum k_i mu_i, sum k_i nu_i).
///
/// Weights must be non-negative and sum to one; they are deliberately not
/// renormalized. The result is always valid: by convexity of x^2, both
/// (sum k mu)^2 and (sum k nu)^2 are bounded by the weighted means of the
/// squares, whose sum is at most one.
inline Pfn weighted_average(std::span<const Pfn> values, std::span<const double> weights) {
    if (values.empty())
        throw ShapeError("weighted_average: empty input");
    if (values.size() != weights.size())
        throw ShapeError("weighted_average: " + std::to_string(values.size()) + " values vs " +
                         std::to_string(weights.size()) + " weights");
    check_weights(weights, "weighted_average");
    double mu = 0.0;
    double nu = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        mu += weights[i] * values[i].mu();
        nu += weights[i] * values[i].nu();
    }
    return Pfn(std::clamp(mu, 0.0, 1.0), std::clamp(nu, 0.0, 1.0));
}

} // namespace pfca
