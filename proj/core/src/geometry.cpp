#include "rom_mis/geometry.hpp"

#include <sstream>
#include <utility>

namespace rommis {

HyperRect::HyperRect(std::vector<Rational> lo, std::vector<Rational> hi) {
    if (lo.empty() || lo.size() != hi.size())
        throw ContractViolation("HyperRect: need matching non-empty lo/hi");
    for (std::size_t j = 0; j < lo.size(); ++j)
        if (lo[j] > hi[j])
            throw ContractViolation("HyperRect: lo > hi in axis " + std::to_string(j));
    coords_ = std::move(lo);
    coords_.insert(coords_.end(), std::make_move_iterator(hi.begin()),
                   std::make_move_iterator(hi.end()));
}

HyperRect HyperRect::interval(Rational lo, Rational hi) {
    std::vector<Rational> l{std::move(lo)}, h{std::move(hi)};
    return HyperRect(std::move(l), std::move(h));
}

HyperRect HyperRect::origin_point(int dim) {
    if (dim < 1)
        throw ContractViolation("HyperRect: dim must be >= 1");
    return HyperRect(std::vector<Rational>(dim, Rational(0)),
                     std::vector<Rational>(dim, Rational(0)));
}

std::size_t HyperRect::check_axis(int j) const {
    if (j < 0 || j >= dim())
        throw ContractViolation("HyperRect: axis " + std::to_string(j) + " out of range");
    return static_cast<std::size_t>(j);
}

std::string HyperRect::str() const {
    std::ostringstream os;
    for (int j = 0; j < dim(); ++j) {
        if (j)
            os << " x ";
        os << '[' << lo(j) << ',' << hi(j) << ']';
    }
    return os.str();
}

bool intersects(const HyperRect& a, const HyperRect& b) {
    if (a.dim() != b.dim())
        throw ContractViolation("intersects: dimension mismatch");
    for (int j = 0; j < a.dim(); ++j) {
        if (a.lo(j) > b.hi(j) || b.lo(j) > a.hi(j))
            return false;
    }
    return true;
}

Rational side_length(const HyperRect& h, int axis) {
    return h.side(axis);
}

bool is_independent_set(std::span<const HyperRect> objs) {
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j)
            if (intersects(objs[i], objs[j]))
                return false;
    return true;
}

SigmaObject::SigmaObject(HyperRect out, HyperRect in, Rational sigma, std::string shape_tag)
    : out_(std::move(out)), in_(std::move(in)), sigma_(std::move(sigma)), tag_(std::move(shape_tag)) {
    if (out_.dim() != in_.dim())
        throw ContractViolation("SigmaObject: in/out dimension mismatch");
    if (sigma_ <= Rational(1))
        throw ContractViolation("SigmaObject: sigma must be > 1");
    for (int j = 0; j < out_.dim(); ++j) {
        if (in_.lo(j) < out_.lo(j) || in_.hi(j) > out_.hi(j))
            throw ContractViolation("SigmaObject: in_box not contained in out_box");
        // l_j(in) >= l_j(out) / sigma, kept exact: l_j(in) * sigma >= l_j(out)
        if (in_.side(j) * sigma_ < out_.side(j))
            throw ContractViolation("SigmaObject: in_box too thin for declared sigma");
    }
}

void Instance::validate() const {
    if (dim < 1)
        throw ContractViolation("Instance: dim must be >= 1");
    if (!rects.empty() && !sigmas.empty())
        throw ContractViolation("Instance: holds both boxes and sigma objects");
    auto check_box = [&](const HyperRect& h) {
        if (h.dim() != dim)
            throw ContractViolation("Instance: object dimension mismatch");
        if (declared_K) {
            for (int j = 0; j < dim; ++j)
                if (h.lo(j) < Rational(0) || h.hi(j) > *declared_K)
                    throw ContractViolation("Instance: object outside [0, K]^d");
        }
    };
    for (const auto& r : rects)
        check_box(r);
    for (const auto& s : sigmas)
        check_box(s.out_box());
}

} // namespace rommis
