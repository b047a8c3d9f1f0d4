#pragma once

#include <string>

#include "k3ent/axis.hpp"
#include "k3ent/projective.hpp"

namespace k3ent {

/// A curve parallel to an axis, cut out by fixing the other two
/// coordinates. Basepoints follow the paper pair convention:
/// C_{x,(p1,p2)}: y=p1, z=p2; C_{y,(p1,p2)}: z=p1, x=p2;
/// C_{z,(p1,p2)}: x=p1, y=p2.
class AxisCurve {
public:
    AxisCurve(Axis axis, ProjPoint p1, ProjPoint p2)
        : axis_(axis), p1_(std::move(p1)), p2_(std::move(p2)) {}

    Axis axis() const { return axis_; }
    const ProjPoint& p1() const { return p1_; }
    const ProjPoint& p2() const { return p2_; }

    /// Fixed coordinate on one of the two transverse axes.
    const ProjPoint& fixed_on(Axis other) const;

    std::string label() const;  // e.g. "C_{x,(i,0)}"

private:
    Axis axis_;
    ProjPoint p1_, p2_;
};

/// Same axis and projectively equal basepoints.
bool same_curve(const AxisCurve& a, const AxisCurve& b);

}  // namespace k3ent
