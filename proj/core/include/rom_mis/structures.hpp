#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "rom_mis/geometry.hpp"

namespace rommis {

/// Incremental independence test over a growing disjoint family: an
/// "independence update" answers whether the arriving box intersects any
/// stored box and, if not, stores it. All backends must give answers
/// identical to the naive pairwise scan; the accelerated ones are pure
/// performance substitutes.
class IndependenceChecker {
public:
    virtual ~IndependenceChecker() = default;

    /// True iff h is disjoint from everything stored; stores h on success.
    virtual bool try_insert(const HyperRect& h) = 0;

    /// Superset of the stored boxes that can intersect h (exact filtering
    /// is the caller's or try_insert's job).
    virtual std::vector<const HyperRect*> candidates(const HyperRect& h) const = 0;

    virtual std::size_t size() const = 0;
};

/// Pairwise scan over everything stored. Reference backend.
class NaiveChecker final : public IndependenceChecker {
public:
    explicit NaiveChecker(int dim) : dim_(dim) {}
    bool try_insert(const HyperRect& h) override;
    std::vector<const HyperRect*> candidates(const HyperRect& h) const override;
    std::size_t size() const override { return stored_.size(); }

private:
    int dim_;
    std::vector<HyperRect> stored_;
};

/// d = 1 backend: disjoint intervals keyed by left endpoint in an ordered
/// map, so an update touches only the two neighbours. O(log n) per update.
class IntervalMapChecker final : public IndependenceChecker {
public:
    bool try_insert(const HyperRect& h) override;
    std::vector<const HyperRect*> candidates(const HyperRect& h) const override;
    std::size_t size() const override { return by_lo_.size(); }

private:
    std::map<Rational, HyperRect> by_lo_;
};

/// Backend for a thin class X(axis): every stored box has side <= 1 along
/// `axis`. Starting points of the axis projections are kept in an ordered
/// multimap; a query scans starting points in [lo - 1, hi], which covers
/// every stored box whose axis projection can overlap the query's.
class ThinChecker final : public IndependenceChecker {
public:
    ThinChecker(int dim, int axis);
    bool try_insert(const HyperRect& h) override;
    std::vector<const HyperRect*> candidates(const HyperRect& h) const override;
    std::size_t size() const override { return by_start_.size(); }

private:
    int dim_;
    int axis_;
    std::multimap<Rational, HyperRect> by_start_;
    void check_member(const HyperRect& h) const;
};

/// Backend for a similar-size class Y(y): all stored sides along axis j lie
/// in (cell_j, 2 cell_j]. A sparse uniform grid with cell side cell_j,
/// anchored at 0 with half-open cells [m cell_j, (m+1) cell_j), stores the
/// ids of boxes touching each cell. Class-consistent inputs touch at most
/// 3^d cells per box and at most 5^d stored disjoint boxes per cell; both
/// caps are enforced.
class GridChecker final : public IndependenceChecker {
public:
    explicit GridChecker(std::vector<Rational> cell_sides);
    bool try_insert(const HyperRect& h) override;
    std::vector<const HyperRect*> candidates(const HyperRect& h) const override;
    std::size_t size() const override { return stored_.size(); }

private:
    using CellKey = std::vector<BigInt>;
    struct KeyHash {
        std::size_t operator()(const CellKey& key) const;
    };
    std::vector<Rational> cell_;
    std::vector<HyperRect> stored_;
    std::unordered_map<CellKey, std::vector<std::uint32_t>, KeyHash> cells_;
    std::size_t cap_per_cell_;
    std::size_t cap_cells_;

    void cells_of(const HyperRect& h, std::vector<CellKey>& out) const;
    void check_member(const HyperRect& h) const;
};

std::unique_ptr<IndependenceChecker> make_naive_checker(int dim);

/// Ordered multiset of rationals with O(log n) insert, predecessor,
/// successor and rank, backed by a size-augmented treap with deterministic
/// per-instance priorities.
class OrderedMultiset {
public:
    OrderedMultiset();
    ~OrderedMultiset();
    OrderedMultiset(OrderedMultiset&&) noexcept;
    OrderedMultiset& operator=(OrderedMultiset&&) noexcept;
    OrderedMultiset(const OrderedMultiset&) = delete;
    OrderedMultiset& operator=(const OrderedMultiset&) = delete;

    void insert(Rational key);
    std::size_t size() const noexcept { return count_; }
    /// Number of stored keys strictly less than `key`.
    std::size_t rank(const Rational& key) const;
    /// Largest stored key < key / smallest stored key > key.
    const Rational* predecessor(const Rational& key) const;
    const Rational* successor(const Rational& key) const;
    /// In-order visit.
    void for_each(const std::function<void(const Rational&)>& fn) const;

private:
    struct Node;
    std::unique_ptr<Node> root_;
    std::size_t count_ = 0;
    std::uint64_t prio_state_;
};

} // namespace rommis
