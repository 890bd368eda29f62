#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rom_mis/structures.hpp"

namespace rommis {

/// Online greedy over an arrival sequence: accept an object iff it is
/// disjoint from everything accepted so far. The accepted list is a
/// maximal independent set of the offered prefix, kept in arrival order.
/// Semantics are defined purely by arrival order; the pluggable checker
/// backend may only change speed, never decisions.
class GreedyState {
public:
    explicit GreedyState(int dim, std::unique_ptr<IndependenceChecker> checker = nullptr);

    /// One greedy step; true iff h was accepted (and appended).
    bool offer(const HyperRect& h);

    const std::vector<HyperRect>& accepted() const noexcept { return accepted_; }
    std::size_t size() const noexcept { return accepted_.size(); }
    int dim() const noexcept { return dim_; }

private:
    int dim_;
    std::unique_ptr<IndependenceChecker> checker_;
    std::vector<HyperRect> accepted_;
};

/// Runs greedy over the whole sequence; returns the accepted objects in
/// arrival order.
std::vector<HyperRect> greedy_run(std::span<const HyperRect> seq,
                                  std::unique_ptr<IndependenceChecker> checker = nullptr);

/// Same, but arrivals are seq[order[0]], seq[order[1]], ...
std::vector<HyperRect> greedy_run_order(std::span<const HyperRect> seq,
                                        std::span<const std::uint32_t> order,
                                        std::unique_ptr<IndependenceChecker> checker = nullptr);

} // namespace rommis
