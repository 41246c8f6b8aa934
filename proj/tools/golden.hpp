#pragma once

// Frozen reference outputs for the bundled six-agent demo dataset. The
// `reproduce` subcommand and the acceptance suite both verify the pipeline
// against these numbers.

#include <array>

namespace golden {

// row-wise aggregates (mu, nu), exact finite decimals
inline constexpr std::array<std::array<double, 2>, 6> kAggregates{{
    {0.90, 0.16},
    {0.38, 0.64},
    {0.20, 0.80},
    {0.30, 0.70},
    {0.36, 0.70},
    {0.48, 0.58},
}};

inline constexpr std::array<double, 6> kScores{0.7844, -0.2652, -0.6000,
                                               -0.4000, -0.3604, -0.1060};

// closeness indices of the aggregates; the last entry is the exact ratio
// (1 - 0.58^2) / (2 - 0.48^2 - 0.58^2)
inline const std::array<double, 6> kCloseness{0.8368, 0.4083,        0.2727,
                                              0.3592, 0.3695,        0.6636 / 1.4332};

// expected-loss matrix under the bundled loss function, (mu, nu) per P/B/N
inline constexpr std::array<std::array<std::array<double, 2>, 3>, 6> kLossMatrix{{
    {{{0.4937, 0.6380}, {0.5859, 0.5151}, {0.8675, 0.3521}}},
    {{{0.7920, 0.3522}, {0.5450, 0.5570}, {0.7103, 0.5360}}},
    {{{0.8378, 0.2919}, {0.5308, 0.5709}, {0.6187, 0.6122}}},
    {{{0.8101, 0.3291}, {0.5399, 0.5620}, {0.6808, 0.5625}}},
    {{{0.8065, 0.3338}, {0.5410, 0.5609}, {0.6873, 0.5568}}},
    {{{0.7694, 0.3800}, {0.5505, 0.5514}, {0.7393, 0.5080}}},
}};

inline constexpr std::array<std::array<double, 3>, 6> kScoreMatrix{{
    {-0.1633, 0.0779, 0.6286},
    {0.5031, -0.0132, 0.2172},
    {0.6168, -0.0442, 0.0080},
    {0.5480, -0.0243, 0.1471},
    {0.5390, -0.0219, 0.1623},
    {0.4476, -0.0010, 0.2885},
}};

inline constexpr std::array<std::array<double, 3>, 6> kClosenessMatrix{{
    {0.4395, 0.5280, 0.7797},
    {0.7015, 0.4953, 0.5899},
    {0.7543, 0.4841, 0.5032},
    {0.7218, 0.4913, 0.5603},
    {0.7176, 0.4921, 0.5666},
    {0.6771, 0.4997, 0.6207},
}};

// group matrices under the bundled three-expert panel, uniform weights
inline constexpr std::array<std::array<std::array<double, 2>, 3>, 6> kGroupLosses{{
    {{{0.4623, 0.6731}, {0.5412, 0.5926}, {0.7617, 0.2503}}},
    {{{0.7203, 0.3558}, {0.5571, 0.5769}, {0.6020, 0.4633}}},
    {{{0.7660, 0.2929}, {0.5609, 0.5730}, {0.5186, 0.5679}}},
    {{{0.7380, 0.3314}, {0.5586, 0.5754}, {0.5746, 0.4986}}},
    {{{0.7344, 0.3364}, {0.5583, 0.5757}, {0.5806, 0.4909}}},
    {{{0.6987, 0.3852}, {0.5554, 0.5786}, {0.6295, 0.4273}}},
}};

inline constexpr std::array<std::array<double, 3>, 6> kGroupScores{{
    {-0.2393, -0.0583, 0.5176},
    {0.3922, -0.0224, 0.1478},
    {0.5009, -0.0137, -0.0536},
    {0.4349, -0.0191, 0.0816},
    {0.4263, -0.0198, 0.0961},
    {0.3398, -0.0262, 0.2137},
}};

inline constexpr std::array<std::array<double, 3>, 6> kGroupCloseness{{
    {0.4103, 0.4785, 0.6907},
    {0.6448, 0.4918, 0.5519},
    {0.6887, 0.4950, 0.4810},
    {0.6616, 0.4930, 0.5287},
    {0.6582, 0.4927, 0.5338},
    {0.6246, 0.4903, 0.5752},
}};

} // namespace golden
