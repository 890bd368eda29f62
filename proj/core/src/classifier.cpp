#include "rom_mis/classifier.hpp"

#include <sstream>

namespace rommis {

ClassParams ClassParams::make(Rational K, int dim) {
    if (dim < 1)
        throw ContractViolation("ClassParams: dim must be >= 1");
    if (K.sign() <= 0)
        throw ContractViolation("ClassParams: K must be positive");
    ClassParams p;
    p.dim = dim;
    p.K = std::move(K);
    int k = 1;
    while (Rational::pow2(k) < p.K)
        ++k;
    p.k = k;
    p.powers_.reserve(static_cast<std::size_t>(k) + 1);
    for (int e = 0; e <= k; ++e)
        p.powers_.push_back(Rational::pow2(e));
    return p;
}

ClassId ClassId::interval(int i) {
    if (i < 0)
        throw ContractViolation("ClassId: negative interval class");
    return ClassId(Kind::Interval, i, {});
}

ClassId ClassId::thin(int axis) {
    if (axis < 0)
        throw ContractViolation("ClassId: negative axis");
    return ClassId(Kind::Thin, axis, {});
}

ClassId ClassId::similar(std::vector<int> tuple) {
    if (tuple.empty())
        throw ContractViolation("ClassId: empty tuple");
    for (int e : tuple)
        if (e < 1)
            throw ContractViolation("ClassId: similar-class entries must be >= 1");
    return ClassId(Kind::Similar, -1, std::move(tuple));
}

int ClassId::interval_index() const {
    if (kind_ != Kind::Interval)
        throw ContractViolation("ClassId: not an interval class");
    return scalar_;
}

int ClassId::axis() const {
    if (kind_ != Kind::Thin)
        throw ContractViolation("ClassId: not a thin class");
    return scalar_;
}

const std::vector<int>& ClassId::tuple() const {
    if (kind_ != Kind::Similar)
        throw ContractViolation("ClassId: not a similar-size class");
    return tuple_;
}

std::strong_ordering ClassId::operator<=>(const ClassId& o) const {
    if (auto c = kind_ <=> o.kind_; c != 0)
        return c;
    if (kind_ != Kind::Similar)
        return scalar_ <=> o.scalar_;
    return tuple_ <=> o.tuple_;
}

std::string ClassId::str() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Interval:
        os << 'S' << scalar_;
        break;
    case Kind::Thin:
        os << 'X' << (scalar_ + 1);
        break;
    case Kind::Similar:
        os << "Y(";
        for (std::size_t i = 0; i < tuple_.size(); ++i) {
            if (i)
                os << ',';
            os << tuple_[i];
        }
        os << ')';
        break;
    }
    return os.str();
}

int interval_class(const Rational& len, const ClassParams& params) {
    if (len.sign() < 0)
        throw ContractViolation("interval_class: negative length");
    if (len <= params.pow2(0))
        return 0;
    if (len > params.pow2(params.k))
        throw ContractViolation("interval_class: length " + len.str() +
                                " exceeds 2^k; instance violates declared K");
    // unique i in [1, k] with 2^{i-1} < len <= 2^i
    int lo = 1, hi = params.k;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (len <= params.pow2(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

ClassId hyperrect_class(const HyperRect& h, const ClassParams& params) {
    if (h.dim() != params.dim)
        throw ContractViolation("hyperrect_class: dimension mismatch");
    for (int j = 0; j < h.dim(); ++j)
        if (h.side(j) <= params.pow2(0))
            return ClassId::thin(j);
    std::vector<int> tuple;
    tuple.reserve(static_cast<std::size_t>(h.dim()));
    for (int j = 0; j < h.dim(); ++j)
        tuple.push_back(interval_class(h.side(j), params));
    return ClassId::similar(std::move(tuple));
}

} // namespace rommis
