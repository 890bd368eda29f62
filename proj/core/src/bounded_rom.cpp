#include "rom_mis/bounded_rom.hpp"

#include <algorithm>
#include <numeric>

namespace rommis {

IntervalOptResult exact_interval_opt(std::span<const HyperRect> intervals) {
    IntervalOptResult res;
    if (intervals.empty())
        return res;
    std::vector<std::size_t> order(intervals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int c = compare(intervals[a].hi(0), intervals[b].hi(0));
        if (c != 0)
            return c < 0;
        return a < b;
    });
    bool have_last = false;
    Rational last_hi;
    for (std::size_t idx : order) {
        const HyperRect& iv = intervals[idx];
        if (iv.dim() != 1)
            throw ContractViolation("exact_interval_opt: intervals only");
        // closed semantics: touching intervals intersect
        if (!have_last || iv.lo(0) > last_hi) {
            res.witness.push_back(idx);
            last_hi = iv.hi(0);
            have_last = true;
        }
    }
    res.size = res.witness.size();
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

int select_class_intervals(std::span<const std::size_t> opt_per_class, int k) {
    if (k < 1 || opt_per_class.size() != static_cast<std::size_t>(k) + 1)
        throw ContractViolation("select_class_intervals: need k+1 entries");
    int m = 1;
    for (int i = 2; i <= k; ++i)
        if (opt_per_class[static_cast<std::size_t>(i)] > opt_per_class[static_cast<std::size_t>(m)])
            m = i;
    if (opt_per_class[0] >
        static_cast<std::size_t>(k) * opt_per_class[static_cast<std::size_t>(m)])
        m = 0;
    return m;
}

ClassId select_class_hyperrects(const std::vector<std::size_t>& lhat_thin,
                                const std::map<std::vector<int>, std::size_t>& lhat_similar,
                                int k, int d, long long D) {
    if (static_cast<int>(lhat_thin.size()) != d)
        throw ContractViolation("select_class_hyperrects: need d thin estimates");
    int m1 = 0;
    for (int x = 1; x < d; ++x)
        if (lhat_thin[static_cast<std::size_t>(x)] > lhat_thin[static_cast<std::size_t>(m1)])
            m1 = x;
    std::vector<int> m2(static_cast<std::size_t>(d), 1);
    std::size_t m2_val = 0;
    for (const auto& [tuple, val] : lhat_similar) { // ascending => first strict max wins
        if (val > m2_val) {
            m2 = tuple;
            m2_val = val;
        }
    }
    // m = m1 iff Lhat_m1 * max(D, 1) >= (k+1)^d * Lhat_m2
    const BigInt divisor = std::max<long long>(D, 1);
    BigInt threshold_num = 1;
    for (int i = 0; i < d; ++i)
        threshold_num *= k + 1;
    if (BigInt(lhat_thin[static_cast<std::size_t>(m1)]) * divisor >= threshold_num * m2_val)
        return ClassId::thin(m1);
    return ClassId::similar(std::move(m2));
}

// ------------------------------------------------------------- intervals

BoundedIntervalRunner::BoundedIntervalRunner(BoundedInstanceMeta meta)
    : meta_(std::move(meta)), params_(ClassParams::make(meta_.K, 1)),
      obs_len_((meta_.n + 1) / 2) {
    if (meta_.dim != 1)
        throw ContractViolation("BoundedIntervalRunner: dim must be 1");
    if (meta_.D < 0)
        throw ContractViolation("BoundedIntervalRunner: D must be >= 0");
    buffers_.resize(static_cast<std::size_t>(params_.k) + 1);
}

void BoundedIntervalRunner::close_observation() {
    opt_per_class_.resize(buffers_.size());
    for (std::size_t i = 0; i < buffers_.size(); ++i)
        opt_per_class_[i] = exact_interval_opt(buffers_[i]).size;
    m_ = select_class_intervals(opt_per_class_, params_.k);
    report_.chosen_class = ClassId::interval(m_);
}

bool BoundedIntervalRunner::offer(const HyperRect& interval) {
    if (interval.dim() != 1)
        throw ContractViolation("BoundedIntervalRunner: intervals only");
    if (step_ >= meta_.n)
        throw ProtocolViolation("BoundedIntervalRunner: stream longer than announced n");
    ++step_;
    const int cls = interval_class(interval.side(0), params_);
    if (step_ <= obs_len_) {
        buffers_[static_cast<std::size_t>(cls)].push_back(interval);
        if (step_ == obs_len_)
            close_observation();
        return false;
    }
    bool take = false;
    if (cls == m_ && action_.try_insert(interval)) {
        take = true;
    } else if (step_ == meta_.n && report_.selected.empty()) {
        take = true; // last arrival, nothing selected yet
        report_.fallback_used = true;
    }
    if (take) {
        report_.selected.push_back(interval);
        report_.selection_steps.push_back(step_);
    }
    return take;
}

std::optional<ClassId> BoundedIntervalRunner::chosen_class() const {
    if (m_ < 0)
        return std::nullopt;
    return ClassId::interval(m_);
}

// ---------------------------------------------------------- hyperrects

BoundedHyperrectRunner::BoundedHyperrectRunner(BoundedInstanceMeta meta)
    : meta_(std::move(meta)), params_(ClassParams::make(meta_.K, meta_.dim)),
      obs_len_((meta_.n + 1) / 2) {
    if (meta_.dim < 1)
        throw ContractViolation("BoundedHyperrectRunner: dim must be >= 1");
    if (meta_.D < 0)
        throw ContractViolation("BoundedHyperrectRunner: D must be >= 0");
}

std::unique_ptr<IndependenceChecker> BoundedHyperrectRunner::checker_for(const ClassId& cls) const {
    if (cls.kind() == ClassId::Kind::Thin)
        return std::make_unique<ThinChecker>(meta_.dim, cls.axis());
    std::vector<Rational> cell;
    cell.reserve(cls.tuple().size());
    for (int e : cls.tuple())
        cell.push_back(params_.pow2(e - 1)); // class lower bound per axis
    return std::make_unique<GridChecker>(std::move(cell));
}

void BoundedHyperrectRunner::close_observation() {
    std::vector<std::size_t> lhat_thin(static_cast<std::size_t>(meta_.dim), 0);
    std::map<std::vector<int>, std::size_t> lhat_similar;
    for (const auto& [cls, state] : observers_) {
        estimates_[cls] = state.size();
        if (cls.kind() == ClassId::Kind::Thin)
            lhat_thin[static_cast<std::size_t>(cls.axis())] = state.size();
        else
            lhat_similar[cls.tuple()] = state.size();
    }
    m_ = select_class_hyperrects(lhat_thin, lhat_similar, params_.k, meta_.dim, meta_.D);
    report_.chosen_class = m_;
    action_ = std::make_unique<GreedyState>(meta_.dim, checker_for(*m_));
}

bool BoundedHyperrectRunner::offer(const HyperRect& h) {
    if (h.dim() != meta_.dim)
        throw ContractViolation("BoundedHyperrectRunner: dimension mismatch");
    if (step_ >= meta_.n)
        throw ProtocolViolation("BoundedHyperrectRunner: stream longer than announced n");
    ++step_;
    const ClassId cls = hyperrect_class(h, params_);
    if (step_ <= obs_len_) {
        auto it = observers_.find(cls);
        if (it == observers_.end())
            it = observers_.emplace(cls, GreedyState(meta_.dim, checker_for(cls))).first;
        it->second.offer(h); // estimate only, nothing is selected
        if (step_ == obs_len_)
            close_observation();
        return false;
    }
    bool take = false;
    if (cls == *m_ && action_->offer(h)) {
        take = true;
    } else if (step_ == meta_.n && report_.selected.empty()) {
        take = true;
        report_.fallback_used = true;
    }
    if (take) {
        report_.selected.push_back(h);
        report_.selection_steps.push_back(step_);
    }
    return take;
}

std::optional<ClassId> BoundedHyperrectRunner::chosen_class() const {
    return m_;
}

// ----------------------------------------------------------------- batch

namespace {

template <typename Runner>
BoundedRunReport run_stream(std::span<const HyperRect> stream, const BoundedInstanceMeta& meta) {
    if (stream.size() != meta.n)
        throw ProtocolViolation("bounded run: stream length " + std::to_string(stream.size()) +
                                " != announced n " + std::to_string(meta.n));
    Runner runner(meta);
    for (const auto& h : stream)
        runner.offer(h);
    return runner.report();
}

} // namespace

BoundedRunReport run_bounded_intervals(std::span<const HyperRect> stream,
                                       const BoundedInstanceMeta& meta) {
    return run_stream<BoundedIntervalRunner>(stream, meta);
}

BoundedRunReport run_bounded_hyperrects(std::span<const HyperRect> stream,
                                        const BoundedInstanceMeta& meta) {
    return run_stream<BoundedHyperrectRunner>(stream, meta);
}

} // namespace rommis
