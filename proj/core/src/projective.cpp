#include "k3ent/projective.hpp"

#include <ostream>

#include "k3ent/errors.hpp"

namespace k3ent {

ProjPoint::ProjPoint(GaussianRational c0, GaussianRational c1)
    : c0_(std::move(c0)), c1_(std::move(c1)) {
    if (c0_.is_zero() && c1_.is_zero())
        throw InvalidPointError("ProjPoint: (0, 0) is not a projective point");
}

ProjPoint ProjPoint::canonical() const {
    if (c1_.is_zero()) return infinity();
    return finite(c0_ / c1_);
}

GaussianRational ProjPoint::affine() const {
    if (c1_.is_zero()) throw InvalidPointError("ProjPoint: [1:0] has no affine value");
    return c0_ / c1_;
}

bool proj_eq(const ProjPoint& p, const ProjPoint& q) {
    return (p.c0() * q.c1() - p.c1() * q.c0()).is_zero();
}

std::string ProjPoint::str() const {
    if (is_infinity()) return "inf";
    return (c0_ / c1_).str();
}

std::optional<ProjPoint> ProjPoint::try_parse(const std::string& text) {
    if (text == "inf") return infinity();
    auto v = GaussianRational::try_parse(text);
    if (!v) return std::nullopt;
    return finite(*v);
}

ProjPoint ProjPoint::parse(const std::string& text) {
    auto p = try_parse(text);
    if (!p) throw ParseError("invalid projective point: \"" + text + "\"");
    return *p;
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.str(); }

}  // namespace k3ent
