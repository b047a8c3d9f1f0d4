#pragma once

#include <optional>
#include <string>
#include <utility>

#include "k3ent/multipoly.hpp"

namespace k3ent {

enum class Axis : int { x = 0, y = 1, z = 2 };

constexpr const char* axis_name(Axis a) {
    switch (a) {
        case Axis::x: return "x";
        case Axis::y: return "y";
        case Axis::z: return "z";
    }
    return "?";
}

std::optional<Axis> axis_from_string(const std::string& s);

constexpr Axis cyclic_next(Axis a) { return static_cast<Axis>((static_cast<int>(a) + 1) % 3); }

/// The other two axes in cyclic order x->y->z: x |-> (y,z), y |-> (z,x),
/// z |-> (x,y). Matches the basepoint conventions of the parallel curves
/// C_{x,p}: y=p1, z=p2; C_{y,p}: z=p1, x=p2; C_{z,p}: x=p1, y=p2.
constexpr std::pair<Axis, Axis> companion_axes(Axis a) {
    return {cyclic_next(a), cyclic_next(cyclic_next(a))};
}

/// Homogeneous coordinate variables of an axis.
constexpr std::pair<Var, Var> vars_of(Axis a) {
    switch (a) {
        case Axis::x: return {Var::x0, Var::x1};
        case Axis::y: return {Var::y0, Var::y1};
        case Axis::z: return {Var::z0, Var::z1};
    }
    return {Var::x0, Var::x1};
}

constexpr std::array<Axis, 3> kAllAxes{Axis::x, Axis::y, Axis::z};

}  // namespace k3ent
