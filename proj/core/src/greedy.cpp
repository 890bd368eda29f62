#include "rom_mis/greedy.hpp"

namespace rommis {

GreedyState::GreedyState(int dim, std::unique_ptr<IndependenceChecker> checker)
    : dim_(dim), checker_(std::move(checker)) {
    if (dim < 1)
        throw ContractViolation("GreedyState: dim must be >= 1");
    if (!checker_)
        checker_ = make_naive_checker(dim);
}

bool GreedyState::offer(const HyperRect& h) {
    if (h.dim() != dim_)
        throw ContractViolation("GreedyState: dimension mismatch");
    if (!checker_->try_insert(h))
        return false;
    accepted_.push_back(h);
    return true;
}

std::vector<HyperRect> greedy_run(std::span<const HyperRect> seq,
                                  std::unique_ptr<IndependenceChecker> checker) {
    if (seq.empty())
        return {};
    GreedyState state(seq.front().dim(), std::move(checker));
    for (const auto& h : seq)
        state.offer(h);
    return state.accepted();
}

std::vector<HyperRect> greedy_run_order(std::span<const HyperRect> seq,
                                        std::span<const std::uint32_t> order,
                                        std::unique_ptr<IndependenceChecker> checker) {
    if (order.empty())
        return {};
    if (order.size() != seq.size())
        throw ContractViolation("greedy_run_order: order length mismatch");
    GreedyState state(seq.front().dim(), std::move(checker));
    for (std::uint32_t idx : order)
        state.offer(seq[idx]);
    return state.accepted();
}

} // namespace rommis
