#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rom_mis/geometry.hpp"

namespace rommis {

/// Size-class parameters for a bounding box [0, K]^d. The class growth
/// factor is fixed at 2, so class boundaries are exact powers of two:
/// class 0 holds lengths in [0, 1] and class i holds (2^{i-1}, 2^i].
struct ClassParams {
    Rational K;
    int k = 1; // number of non-trivial length classes, k >= 1
    int dim = 1;

    /// k = ceil(log2 K) computed exactly (clamped to >= 1 for tiny K).
    static ClassParams make(Rational K, int dim);

    /// Precomputed 2^0 .. 2^k.
    const Rational& pow2(int e) const { return powers_[static_cast<std::size_t>(e)]; }

private:
    std::vector<Rational> powers_;
};

/// Label of one size class.
///   Interval: class index i in {0..k}   (d = 1 algorithm)
///   Thin:     X(axis), the smallest 0-based axis with side length <= 1
///   Similar:  Y(tuple), per-axis class indices, every entry in 1..k
class ClassId {
public:
    enum class Kind : std::uint8_t { Interval, Thin, Similar };

    static ClassId interval(int i);
    static ClassId thin(int axis);
    static ClassId similar(std::vector<int> tuple);

    Kind kind() const noexcept { return kind_; }
    int interval_index() const;
    int axis() const;
    const std::vector<int>& tuple() const;

    bool operator==(const ClassId& o) const = default;
    /// Orders by kind, then payload (tuples lexicographically); gives the
    /// deterministic smallest-index tie-breaks used in class selection.
    std::strong_ordering operator<=>(const ClassId& o) const;

    /// Display form, 1-based like on paper: "S3", "X1", "Y(1,2)".
    std::string str() const;

private:
    ClassId(Kind k, int scalar, std::vector<int> tuple)
        : kind_(k), scalar_(scalar), tuple_(std::move(tuple)) {}
    Kind kind_;
    int scalar_ = -1;
    std::vector<int> tuple_;
};

/// Class index of an interval length: 0 for len in [0,1], else the unique
/// i with len in (2^{i-1}, 2^i]. Throws ContractViolation when len > 2^k
/// (the instance violates its declared K) or len < 0.
int interval_class(const Rational& len, const ClassParams& params);

/// Partition rule for hyperrectangles: a box with any side <= 1 goes to
/// the thin class of its smallest such axis; otherwise to the similar-size
/// class of its per-axis length classes.
ClassId hyperrect_class(const HyperRect& h, const ClassParams& params);

} // namespace rommis
