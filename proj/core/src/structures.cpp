#include "rom_mis/structures.hpp"

#include <algorithm>

namespace rommis {

// ---------------------------------------------------------------- Naive

bool NaiveChecker::try_insert(const HyperRect& h) {
    if (h.dim() != dim_)
        throw ContractViolation("NaiveChecker: dimension mismatch");
    for (const auto& s : stored_)
        if (intersects(s, h))
            return false;
    stored_.push_back(h);
    return true;
}

std::vector<const HyperRect*> NaiveChecker::candidates(const HyperRect& h) const {
    if (h.dim() != dim_)
        throw ContractViolation("NaiveChecker: dimension mismatch");
    std::vector<const HyperRect*> out;
    out.reserve(stored_.size());
    for (const auto& s : stored_)
        out.push_back(&s);
    return out;
}

// ---------------------------------------------------------- IntervalMap

bool IntervalMapChecker::try_insert(const HyperRect& h) {
    if (h.dim() != 1)
        throw ContractViolation("IntervalMapChecker: intervals only");
    auto it = by_lo_.lower_bound(h.lo(0));
    if (it != by_lo_.end() && it->first <= h.hi(0))
        return false; // successor starts inside [lo, hi]
    if (it != by_lo_.begin()) {
        auto prev = std::prev(it);
        if (prev->second.hi(0) >= h.lo(0))
            return false; // predecessor reaches into [lo, hi]
    }
    by_lo_.emplace(h.lo(0), h);
    return true;
}

std::vector<const HyperRect*> IntervalMapChecker::candidates(const HyperRect& h) const {
    if (h.dim() != 1)
        throw ContractViolation("IntervalMapChecker: intervals only");
    std::vector<const HyperRect*> out;
    auto it = by_lo_.lower_bound(h.lo(0));
    if (it != by_lo_.begin())
        out.push_back(&std::prev(it)->second);
    for (; it != by_lo_.end() && it->first <= h.hi(0); ++it)
        out.push_back(&it->second);
    return out;
}

// ----------------------------------------------------------------- Thin

ThinChecker::ThinChecker(int dim, int axis) : dim_(dim), axis_(axis) {
    if (axis < 0 || axis >= dim)
        throw ContractViolation("ThinChecker: axis out of range");
}

void ThinChecker::check_member(const HyperRect& h) const {
    if (h.dim() != dim_)
        throw ContractViolation("ThinChecker: dimension mismatch");
    if (h.side(axis_) > Rational(1))
        throw ContractViolation("ThinChecker: box is not thin along the class axis");
}

bool ThinChecker::try_insert(const HyperRect& h) {
    check_member(h);
    // Stored sides along axis_ are <= 1, so any stored box whose axis
    // projection overlaps [lo, hi] starts at or after lo - 1.
    auto it = by_start_.lower_bound(h.lo(axis_) - Rational(1));
    for (; it != by_start_.end() && it->first <= h.hi(axis_); ++it)
        if (intersects(it->second, h))
            return false;
    by_start_.emplace(h.lo(axis_), h);
    return true;
}

std::vector<const HyperRect*> ThinChecker::candidates(const HyperRect& h) const {
    check_member(h);
    std::vector<const HyperRect*> out;
    auto it = by_start_.lower_bound(h.lo(axis_) - Rational(1));
    for (; it != by_start_.end() && it->first <= h.hi(axis_); ++it)
        if (it->second.hi(axis_) >= h.lo(axis_)) // axis projections overlap
            out.push_back(&it->second);
    return out;
}

// ----------------------------------------------------------------- Grid

namespace {
std::size_t pow_size(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}
} // namespace

GridChecker::GridChecker(std::vector<Rational> cell_sides) : cell_(std::move(cell_sides)) {
    if (cell_.empty())
        throw ContractViolation("GridChecker: need cell sides");
    for (const auto& c : cell_)
        if (c.sign() <= 0)
            throw ContractViolation("GridChecker: cell sides must be positive");
    int d = static_cast<int>(cell_.size());
    cap_per_cell_ = pow_size(5, d);
    cap_cells_ = pow_size(3, d);
}

std::size_t GridChecker::KeyHash::operator()(const CellKey& key) const {
    std::size_t seed = 0;
    for (const auto& v : key)
        boost::hash_combine(seed, boost::hash<BigInt>{}(v));
    return seed;
}

void GridChecker::check_member(const HyperRect& h) const {
    if (h.dim() != static_cast<int>(cell_.size()))
        throw ContractViolation("GridChecker: dimension mismatch");
    for (int j = 0; j < h.dim(); ++j) {
        const Rational len = h.side(j);
        if (len <= cell_[j] || len > cell_[j] * Rational(2))
            throw ContractViolation("GridChecker: side " + std::to_string(j) +
                                    " outside the class range");
    }
}

void GridChecker::cells_of(const HyperRect& h, std::vector<CellKey>& out) const {
    const int d = h.dim();
    std::vector<BigInt> lo_idx(d), hi_idx(d);
    for (int j = 0; j < d; ++j) {
        lo_idx[j] = floor_div(h.lo(j), cell_[j]);
        hi_idx[j] = floor_div(h.hi(j), cell_[j]);
    }
    out.clear();
    CellKey cur = lo_idx;
    for (;;) {
        out.push_back(cur);
        int j = 0;
        while (j < d) {
            ++cur[j];
            if (cur[j] <= hi_idx[j])
                break;
            cur[j] = lo_idx[j];
            ++j;
        }
        if (j == d)
            break;
    }
    if (out.size() > cap_cells_)
        throw ContractViolation("GridChecker: box touches more than 3^d cells");
}

bool GridChecker::try_insert(const HyperRect& h) {
    check_member(h);
    std::vector<CellKey> keys;
    cells_of(h, keys);
    std::vector<std::uint32_t> cand;
    for (const auto& key : keys) {
        auto it = cells_.find(key);
        if (it == cells_.end())
            continue;
        cand.insert(cand.end(), it->second.begin(), it->second.end());
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (std::uint32_t id : cand)
        if (intersects(stored_[id], h))
            return false;
    auto id = static_cast<std::uint32_t>(stored_.size());
    stored_.push_back(h);
    for (auto& key : keys) {
        auto& bucket = cells_[std::move(key)];
        bucket.push_back(id);
        if (bucket.size() > cap_per_cell_)
            throw ContractViolation("GridChecker: cell holds more than 5^d disjoint boxes");
    }
    return true;
}

std::vector<const HyperRect*> GridChecker::candidates(const HyperRect& h) const {
    check_member(h);
    std::vector<CellKey> keys;
    cells_of(h, keys);
    std::vector<std::uint32_t> cand;
    for (const auto& key : keys) {
        auto it = cells_.find(key);
        if (it == cells_.end())
            continue;
        cand.insert(cand.end(), it->second.begin(), it->second.end());
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<const HyperRect*> out;
    out.reserve(cand.size());
    for (std::uint32_t id : cand)
        out.push_back(&stored_[id]);
    return out;
}

std::unique_ptr<IndependenceChecker> make_naive_checker(int dim) {
    return std::make_unique<NaiveChecker>(dim);
}

// ------------------------------------------------------- OrderedMultiset

struct OrderedMultiset::Node {
    Rational key;
    std::uint64_t prio;
    std::size_t size = 1;
    std::unique_ptr<Node> left, right;
    Node(Rational k, std::uint64_t p) : key(std::move(k)), prio(p) {}
};

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using NodePtr = std::unique_ptr<OrderedMultiset::Node>;

std::size_t node_size(const NodePtr& n) {
    return n ? n->size : 0;
}

void pull(NodePtr& n) {
    n->size = 1 + node_size(n->left) + node_size(n->right);
}

// keys < key go left, keys >= key go right
void split_node(NodePtr t, const Rational& key, NodePtr& l, NodePtr& r) {
    if (!t) {
        l = nullptr;
        r = nullptr;
        return;
    }
    if (t->key < key) {
        split_node(std::move(t->right), key, t->right, r);
        l = std::move(t);
        pull(l);
    } else {
        split_node(std::move(t->left), key, l, t->left);
        r = std::move(t);
        pull(r);
    }
}

void insert_node(NodePtr& root, NodePtr node) {
    if (!root) {
        root = std::move(node);
        return;
    }
    if (node->prio > root->prio) {
        split_node(std::move(root), node->key, node->left, node->right);
        pull(node);
        root = std::move(node);
        return;
    }
    if (node->key < root->key)
        insert_node(root->left, std::move(node));
    else
        insert_node(root->right, std::move(node));
    pull(root);
}

} // namespace

OrderedMultiset::OrderedMultiset() : prio_state_(0x8d2f1a7bc4e9035dULL) {}
OrderedMultiset::~OrderedMultiset() {
    // iterative teardown; recursion could overflow on large sets
    std::vector<NodePtr> stack;
    if (root_)
        stack.push_back(std::move(root_));
    while (!stack.empty()) {
        NodePtr n = std::move(stack.back());
        stack.pop_back();
        if (n->left)
            stack.push_back(std::move(n->left));
        if (n->right)
            stack.push_back(std::move(n->right));
    }
}
OrderedMultiset::OrderedMultiset(OrderedMultiset&&) noexcept = default;
OrderedMultiset& OrderedMultiset::operator=(OrderedMultiset&&) noexcept = default;

void OrderedMultiset::insert(Rational key) {
    auto node = std::make_unique<Node>(std::move(key), splitmix64(prio_state_));
    insert_node(root_, std::move(node));
    ++count_;
}

std::size_t OrderedMultiset::rank(const Rational& key) const {
    std::size_t r = 0;
    const Node* cur = root_.get();
    while (cur) {
        if (cur->key < key) {
            r += node_size(cur->left) + 1;
            cur = cur->right.get();
        } else {
            cur = cur->left.get();
        }
    }
    return r;
}

const Rational* OrderedMultiset::predecessor(const Rational& key) const {
    const Node* best = nullptr;
    const Node* cur = root_.get();
    while (cur) {
        if (cur->key < key) {
            best = cur;
            cur = cur->right.get();
        } else {
            cur = cur->left.get();
        }
    }
    return best ? &best->key : nullptr;
}

const Rational* OrderedMultiset::successor(const Rational& key) const {
    const Node* best = nullptr;
    const Node* cur = root_.get();
    while (cur) {
        if (cur->key > key) {
            best = cur;
            cur = cur->left.get();
        } else {
            cur = cur->right.get();
        }
    }
    return best ? &best->key : nullptr;
}

void OrderedMultiset::for_each(const std::function<void(const Rational&)>& fn) const {
    std::vector<const Node*> stack;
    const Node* cur = root_.get();
    while (cur || !stack.empty()) {
        while (cur) {
            stack.push_back(cur);
            cur = cur->left.get();
        }
        cur = stack.back();
        stack.pop_back();
        fn(cur->key);
        cur = cur->right.get();
    }
}

} // namespace rommis
