#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rom_mis/rational.hpp"

namespace rommis {

/// Closed axis-aligned box in d dimensions. Immutable value type; an
/// interval is the d = 1 case. Degenerate sides (lo == hi) are legal and a
/// degenerate box intersects anything containing its point.
class HyperRect {
public:
    /// Requires lo.size() == hi.size() >= 1 and lo[j] <= hi[j] for all j.
    HyperRect(std::vector<Rational> lo, std::vector<Rational> hi);

    static HyperRect interval(Rational lo, Rational hi);
    /// The sentinel [0,0]^d.
    static HyperRect origin_point(int dim);

    int dim() const noexcept { return static_cast<int>(coords_.size() / 2); }
    const Rational& lo(int j) const { return coords_[check_axis(j)]; }
    const Rational& hi(int j) const { return coords_[check_axis(j) + coords_.size() / 2]; }

    /// Side length along axis j (0-based), >= 0.
    Rational side(int j) const { return hi(j) - lo(j); }

    bool operator==(const HyperRect& o) const { return coords_ == o.coords_; }

    std::string str() const;

private:
    // Layout: lo_0 .. lo_{d-1}, hi_0 .. hi_{d-1}.
    std::vector<Rational> coords_;
    std::size_t check_axis(int j) const;
};

/// True iff the closed boxes share at least one point; boundary contact
/// counts. Throws ContractViolation on dimension mismatch.
bool intersects(const HyperRect& a, const HyperRect& b);

/// hi[j] - lo[j]; throws on axis out of range. Axes are 0-based.
Rational side_length(const HyperRect& h, int axis);

/// Pairwise-disjointness check, O(m^2); verification use only.
bool is_independent_set(std::span<const HyperRect> objs);

/// Object sandwiched between axis-aligned boxes: in_box inside the true
/// shape inside out_box, with l_j(in) >= l_j(out) / sigma in every
/// dimension and sigma > 1. The algorithms only ever consume out_box;
/// verification relies on the in/out sandwich.
class SigmaObject {
public:
    SigmaObject(HyperRect out, HyperRect in, Rational sigma, std::string shape_tag = {});

    const HyperRect& out_box() const noexcept { return out_; }
    const HyperRect& in_box() const noexcept { return in_; }
    const Rational& sigma() const noexcept { return sigma_; }
    const std::string& shape_tag() const noexcept { return tag_; }
    int dim() const noexcept { return out_.dim(); }

private:
    HyperRect out_;
    HyperRect in_;
    Rational sigma_;
    std::string tag_; // opaque generator payload, not serialized
};

inline const HyperRect& out_box(const SigmaObject& f) { return f.out_box(); }

/// An ordered input set in canonical (pre-shuffle) order. Holds either
/// plain boxes or sigma-rectangular objects, never both.
struct Instance {
    int dim = 1;
    std::vector<HyperRect> rects;
    std::vector<SigmaObject> sigmas;
    std::optional<Rational> declared_K;

    bool is_sigma() const noexcept { return !sigmas.empty(); }
    std::size_t size() const noexcept { return is_sigma() ? sigmas.size() : rects.size(); }

    /// Checks uniform dimension and, when declared_K is present,
    /// containment of every object in [0, K]^d.
    void validate() const;
};

} // namespace rommis
