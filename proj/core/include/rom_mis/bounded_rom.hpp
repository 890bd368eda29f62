#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rom_mis/classifier.hpp"
#include "rom_mis/greedy.hpp"

namespace rommis {

/// Instance promise for the two-phase runners: every object lies in
/// [0, K]^d, the per-dimension count of objects whose projection is
/// strictly inside an open unit cell (i, i+1) is at most D, and the total
/// count n is announced up front. The runners rely on the promise; they do
/// not verify it (see verify_bounded in generators.hpp for the offline
/// check).
struct BoundedInstanceMeta {
    Rational K;
    long long D = 0;
    std::size_t n = 0;
    int dim = 1;
};

/// Testing/documentation record of the analysis constants: the guarantee
/// thresholds opt(S_i) >= 1000 * d * log k (natural log) for a class to
/// count as big, the split tolerance delta = 1/10, and the small-instance
/// cutoff 10^4 * k * log k. Used to parameterize statistical tests, never
/// consulted at runtime.
struct AlgoGuarantee {
    static double big_class_threshold(int k, int d) { return 1e3 * d * std::log(k); }
    static double small_instance_cutoff(int k) { return 1e4 * k * std::log(k); }
    static constexpr double delta = 0.1;
};

/// Exact offline interval scheduling: sort by right endpoint, sweep.
/// Returns the optimum size and a witness (ascending input indices).
struct IntervalOptResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness;
};
IntervalOptResult exact_interval_opt(std::span<const HyperRect> intervals);

/// Class choice for the interval runner: m = argmax over {1..k} of
/// opt_per_class (smallest index wins ties), overridden to 0 iff
/// opt_per_class[0] > k * opt_per_class[m].
int select_class_intervals(std::span<const std::size_t> opt_per_class, int k);

/// Class choice for the hyperrectangle runner. m1/m2 are the argmax thin /
/// similar-size classes (smallest axis resp. lexicographically smallest
/// tuple on ties; an absent side counts as estimate 0 with the smallest
/// label). m = m1 iff Lhat_{m1} >= ((k+1)^d / max(D, 1)) * Lhat_{m2},
/// decided in exact integer arithmetic.
ClassId select_class_hyperrects(const std::vector<std::size_t>& lhat_thin,
                                const std::map<std::vector<int>, std::size_t>& lhat_similar,
                                int k, int d, long long D);

/// Shared diagnostics of a two-phase run.
struct BoundedRunReport {
    std::vector<HyperRect> selected;          // arrival order
    std::vector<std::size_t> selection_steps; // 1-based arrival indices
    std::optional<ClassId> chosen_class;      // set at the phase boundary
    bool fallback_used = false;
};

/// Two-phase random-order algorithm for (K, D)-bounded intervals.
///
/// Observation phase (first ceil(n/2) arrivals): buffer each interval into
/// its length class, select nothing. At the boundary compute the exact
/// offline optimum of every buffered class and pick the class m.
/// Action phase: greedily select arrivals of class m; if the very last
/// arrival finds nothing selected, select it regardless of class. The
/// output is an independent set, nonempty whenever n >= 2.
class BoundedIntervalRunner {
public:
    explicit BoundedIntervalRunner(BoundedInstanceMeta meta);

    /// Feeds the next arrival; true iff it is selected. Throws
    /// ProtocolViolation when driven past the announced n.
    bool offer(const HyperRect& interval);

    std::size_t steps_seen() const noexcept { return step_; }
    bool in_observation_phase() const noexcept { return step_ < obs_len_; }
    const BoundedInstanceMeta& meta() const noexcept { return meta_; }
    std::optional<ClassId> chosen_class() const;
    const std::vector<HyperRect>& selected() const noexcept { return report_.selected; }
    const BoundedRunReport& report() const noexcept { return report_; }

    /// Per-class exact optima computed at the phase boundary (empty before).
    const std::vector<std::size_t>& observed_class_opts() const noexcept { return opt_per_class_; }

private:
    BoundedInstanceMeta meta_;
    ClassParams params_;
    std::size_t obs_len_;
    std::size_t step_ = 0;
    std::vector<std::vector<HyperRect>> buffers_; // class 0..k
    std::vector<std::size_t> opt_per_class_;
    int m_ = -1;
    IntervalMapChecker action_;
    BoundedRunReport report_;

    void close_observation();
};

/// Two-phase runner for (K, D)-bounded d-dimensional hyperrectangles.
/// Same shape as the interval runner, but per-class optima are estimated
/// online with greedy (thin classes on a start-point search structure,
/// similar-size classes on a uniform grid), and the class choice balances
/// the thin/similar estimates with the (k+1)^d / D threshold.
class BoundedHyperrectRunner {
public:
    explicit BoundedHyperrectRunner(BoundedInstanceMeta meta);

    bool offer(const HyperRect& h);

    std::size_t steps_seen() const noexcept { return step_; }
    bool in_observation_phase() const noexcept { return step_ < obs_len_; }
    const BoundedInstanceMeta& meta() const noexcept { return meta_; }
    std::optional<ClassId> chosen_class() const;
    const std::vector<HyperRect>& selected() const noexcept { return report_.selected; }
    const BoundedRunReport& report() const noexcept { return report_; }

    /// Greedy estimates per realized class at the phase boundary.
    const std::map<ClassId, std::size_t>& estimates() const noexcept { return estimates_; }

private:
    BoundedInstanceMeta meta_;
    ClassParams params_;
    std::size_t obs_len_;
    std::size_t step_ = 0;
    std::map<ClassId, GreedyState> observers_;
    std::map<ClassId, std::size_t> estimates_;
    std::optional<ClassId> m_;
    std::unique_ptr<GreedyState> action_;
    BoundedRunReport report_;

    std::unique_ptr<IndependenceChecker> checker_for(const ClassId& cls) const;
    void close_observation();
};

/// Batch wrappers; the stream length must equal meta.n.
BoundedRunReport run_bounded_intervals(std::span<const HyperRect> stream,
                                       const BoundedInstanceMeta& meta);
BoundedRunReport run_bounded_hyperrects(std::span<const HyperRect> stream,
                                        const BoundedInstanceMeta& meta);

} // namespace rommis
