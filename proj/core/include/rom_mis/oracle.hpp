#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rom_mis/geometry.hpp"
#include "rom_mis/rng.hpp"

namespace rommis {

struct MisResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness; // indices into the input, ascending
};

/// Maximum upper bound on brute force input size; keeps the worst case
/// well under a second.
inline constexpr std::size_t kBruteForceLimit = 24;

/// Exact maximum independent set by branch and bound over the intersection
/// graph. Independent verification oracle; throws when |objs| exceeds
/// kBruteForceLimit.
MisResult brute_force_mis(std::span<const HyperRect> objs);

/// Number of red balls in a uniform random n-subset of N balls of which M
/// are red, drawn by partial Fisher-Yates (exactly hypergeometric).
std::size_t sample_hypergeometric(std::size_t N, std::size_t M, std::size_t n, Rng& rng);

/// Largest gap left on [n] by a uniform random ceil(n/2)-subset T:
/// with sorted T = {X_1 < ... < X_m} and the conventions X_0 = 1,
/// X_{m+1} = n, returns max_i (X_i - X_{i-1}).
std::size_t sample_max_gap(std::size_t n, Rng& rng);

/// Same statistic for a given sorted 1-based position set.
std::size_t max_gap_of_positions(std::size_t n, std::span<const std::size_t> sorted_positions);

/// Exact distribution of sample_max_gap(n) by enumerating all subsets;
/// n <= 20 or so. pmf[g] = P(max gap = g), g in 0..n.
std::vector<double> exact_max_gap_pmf(std::size_t n);

/// Empirical check of the hypergeometric tail bounds
///   P[X >= (1+delta) p n] <= exp(-delta^2 p n / 3)
///   P[X <= (1-delta) p n] <= exp(-delta^2 p n / 2)
/// with p = M/N. Tail events are decided with exact rational thresholds.
struct TailBoundReport {
    std::size_t N = 0, M = 0, n = 0;
    Rational delta;
    std::size_t draws = 0;
    double empirical_upper_tail = 0.0;
    double empirical_lower_tail = 0.0;
    double bound_upper = 0.0;
    double bound_lower = 0.0;
};

TailBoundReport tail_bound_experiment(std::size_t N, std::size_t M, std::size_t n,
                                      const Rational& delta, std::size_t draws,
                                      std::uint64_t seed);

} // namespace rommis
