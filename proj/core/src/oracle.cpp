#include "rom_mis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace rommis {

namespace {

struct BnB {
    std::vector<std::uint32_t> adj; // adjacency bitmask per vertex
    std::uint32_t best_mask = 0;
    std::size_t best = 0;

    void search(std::uint32_t chosen, std::size_t chosen_count, std::uint32_t candidates) {
        if (chosen_count + static_cast<std::size_t>(std::popcount(candidates)) <= best)
            return; // cannot beat the incumbent
        if (!candidates) {
            if (chosen_count > best) {
                best = chosen_count;
                best_mask = chosen;
            }
            return;
        }
        // branch on the candidate with the most candidate neighbours
        std::uint32_t rest = candidates;
        int pick = -1, pick_deg = -1;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int deg = std::popcount(adj[v] & candidates);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        std::uint32_t bit = 1u << pick;
        search(chosen | bit, chosen_count + 1, candidates & ~(adj[pick] | bit));
        search(chosen, chosen_count, candidates & ~bit);
    }
};

} // namespace

MisResult brute_force_mis(std::span<const HyperRect> objs) {
    const std::size_t n = objs.size();
    if (n > kBruteForceLimit)
        throw ContractViolation("brute_force_mis: instance larger than " +
                                std::to_string(kBruteForceLimit));
    MisResult res;
    if (n == 0)
        return res;
    BnB b;
    b.adj.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (intersects(objs[i], objs[j])) {
                b.adj[i] |= 1u << j;
                b.adj[j] |= 1u << i;
            }
    // greedy seed gives the pruner a good incumbent
    {
        std::uint32_t chosen = 0, blocked = 0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t bit = 1u << i;
            if (blocked & bit)
                continue;
            chosen |= bit;
            blocked |= b.adj[i] | bit;
            ++count;
        }
        b.best = count;
        b.best_mask = chosen;
    }
    b.search(0, 0, (1u << n) - 1);
    res.size = b.best;
    for (std::size_t i = 0; i < n; ++i)
        if (b.best_mask & (1u << i))
            res.witness.push_back(i);
    return res;
}

std::size_t sample_hypergeometric(std::size_t N, std::size_t M, std::size_t n, Rng& rng) {
    if (M > N || n > N)
        throw ContractViolation("sample_hypergeometric: need M <= N and n <= N");
    // balls[0..M) red; partial Fisher-Yates picks the sample prefix, then
    // the swaps are undone so the pool can be reused across draws.
    thread_local std::vector<std::uint32_t> balls;
    if (balls.size() != N) {
        balls.resize(N);
        std::iota(balls.begin(), balls.end(), 0u);
    }
    thread_local std::vector<std::pair<std::uint32_t, std::uint32_t>> swaps;
    swaps.clear();
    std::size_t reds = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + rng.index(N - i);
        if (i != j) {
            std::swap(balls[i], balls[j]);
            swaps.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
        if (balls[i] < M)
            ++reds;
    }
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
        std::swap(balls[it->first], balls[it->second]);
    return reds;
}

std::size_t max_gap_of_positions(std::size_t n, std::span<const std::size_t> sorted) {
    std::size_t prev = 1; // X_0 = 1
    std::size_t max_gap = 0;
    for (std::size_t x : sorted) {
        max_gap = std::max(max_gap, x - prev);
        prev = x;
    }
    max_gap = std::max(max_gap, n - prev); // X_{m+1} = n
    return max_gap;
}

std::size_t sample_max_gap(std::size_t n, Rng& rng) {
    if (n < 2)
        throw ContractViolation("sample_max_gap: n must be >= 2");
    const std::size_t m = (n + 1) / 2;
    thread_local std::vector<std::uint32_t> pool;
    pool.resize(n);
    std::iota(pool.begin(), pool.end(), 1u); // positions 1..n
    for (std::size_t i = 0; i < m; ++i)
        std::swap(pool[i], pool[i + rng.index(n - i)]);
    thread_local std::vector<std::size_t> picked;
    picked.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(picked.begin(), picked.end());
    return max_gap_of_positions(n, picked);
}

std::vector<double> exact_max_gap_pmf(std::size_t n) {
    if (n < 2 || n > 20)
        throw ContractViolation("exact_max_gap_pmf: n in [2, 20]");
    const std::size_t m = (n + 1) / 2;
    std::vector<double> counts(n + 1, 0.0);
    std::vector<std::size_t> positions;
    double total = 0;
    // enumerate all m-subsets of [n] via the lowest-bit trick
    std::uint32_t subset = (1u << m) - 1;
    const std::uint32_t limit = 1u << n;
    while (subset < limit) {
        positions.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (subset & (1u << i))
                positions.push_back(i + 1);
        counts[max_gap_of_positions(n, positions)] += 1.0;
        total += 1.0;
        // next combination with same popcount
        std::uint32_t c = subset & (0u - subset);
        std::uint32_t r = subset + c;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
    for (auto& v : counts)
        v /= total;
    return counts;
}

TailBoundReport tail_bound_experiment(std::size_t N, std::size_t M, std::size_t n,
                                      const Rational& delta, std::size_t draws,
                                      std::uint64_t seed) {
    if (delta.sign() < 0 || delta > Rational(1))
        throw ContractViolation("tail_bound_experiment: delta in [0,1]");
    TailBoundReport rep;
    rep.N = N;
    rep.M = M;
    rep.n = n;
    rep.delta = delta;
    rep.draws = draws;
    // exact rational thresholds: X >= (1 +/- delta) * (M/N) * n
    const Rational pn = Rational(BigInt(M) * n, BigInt(N));
    const Rational upper = (Rational(1) + delta) * pn;
    const Rational lower = (Rational(1) - delta) * pn;
    Rng rng(seed);
    std::size_t up = 0, low = 0;
    for (std::size_t i = 0; i < draws; ++i) {
        const auto x = Rational(static_cast<long long>(sample_hypergeometric(N, M, n, rng)));
        if (x >= upper)
            ++up;
        if (x <= lower)
            ++low;
    }
    const double pnd = pn.to_double();
    const double d = delta.to_double();
    rep.empirical_upper_tail = static_cast<double>(up) / static_cast<double>(draws);
    rep.empirical_lower_tail = static_cast<double>(low) / static_cast<double>(draws);
    rep.bound_upper = std::exp(-d * d * pnd / 3.0);
    rep.bound_lower = std::exp(-d * d * pnd / 2.0);
    return rep;
}

} // namespace rommis
