#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3ent/axiscurve.hpp"
#include "k3ent/intmatrix.hpp"
#include "k3ent/purelattice.hpp"

namespace k3ent {

/// A divisor-class generator: a fiber class E_axis or the class of an
/// axis-parallel curve.
class Generator {
public:
    static Generator fiber(Axis a) { return Generator(a); }
    static Generator curve(AxisCurve c) { return Generator(std::move(c)); }

    bool is_fiber() const { return !curve_.has_value(); }
    Axis axis() const { return is_fiber() ? fiber_axis_ : curve_->axis(); }
    const AxisCurve& as_curve() const { return *curve_; }

    std::string label() const;

private:
    explicit Generator(Axis a) : fiber_axis_(a) {}
    explicit Generator(AxisCurve c) : fiber_axis_(c.axis()), curve_(std::move(c)) {}

    Axis fiber_axis_;
    std::optional<AxisCurve> curve_;
};

/// Intersection number from the combinatorial rules: E·E = 0, E·E' = 2,
/// fiber meets its parallel curves once, same-axis curves are equal
/// (-2) or disjoint (0), transverse curves meet iff their fixed values
/// on the shared axis agree.
Integer intersection(const Generator& a, const Generator& b);

/// Pairwise intersection matrix of a generator list.
IntMatrix gram_of(const std::vector<Generator>& generators);

/// The 24 axis-parallel curves of the explicit surface, in display
/// order (index 1..24 maps to entries 0..23).
const std::vector<AxisCurve>& tilde_curves();

/// Ex, Ey, Ez followed by the 24 curves (27 generators).
const std::vector<Generator>& tilde_generators();

/// Cached 27x27 pairing matrix of tilde_generators().
const IntMatrix& tilde_pairing_matrix();

/// Integer class over the 27 tilde generators (Ex,Ey,Ez,C1..C24).
class PicClass {
public:
    PicClass() : c_(27, Integer(0)) {}

    static PicClass fiber(Axis a);
    /// 1-based curve index matching the display order.
    static PicClass curve(int index);

    Integer& operator[](int i) { return c_[i]; }
    const Integer& operator[](int i) const { return c_[i]; }
    int size() const { return static_cast<int>(c_.size()); }

    PicClass operator-() const;
    friend PicClass operator+(const PicClass& a, const PicClass& b);
    friend PicClass operator-(const PicClass& a, const PicClass& b);
    PicClass operator*(const Integer& s) const;
    friend bool operator==(const PicClass& a, const PicClass& b) { return a.c_ == b.c_; }

private:
    std::vector<Integer> c_;
};

Integer pic_pairing(const PicClass& a, const PicClass& b);

/// Numerical equivalence against the full generator set: (lhs - rhs)
/// pairs to zero with all 27 generators.
bool verify_relation(const PicClass& lhs, const PicClass& rhs);

/// Selection of generators by index (0..2 fibers, 3..26 curves C1..C24);
/// true iff the pairing matrix, reordered to the fixed basis order
/// (Ex,Ey,Ez, then curves grouped by axis), equals build_gram(expected).
bool sublattice_check(const std::vector<int>& selection, const PureType& expected);

/// A relation between divisor classes, stated as lhs = rhs.
struct PicRelation {
    std::string name;
    PicClass lhs, rhs;
};

/// The displayed relations on the explicit surface: [C24] against the
/// fiber/curve combination, and both displayed expressions for [C22].
std::vector<PicRelation> tilde_relations();

/// A displayed sublattice of the 27 generators together with the pure
/// type its Gram matrix must reproduce.
struct NamedSelection {
    std::string name;
    std::vector<int> selection;  // generator indices
    PureType expected;
};

/// The eight displayed selections: four isometric sublattice displays
/// plus the four obstruction lattices.
std::vector<NamedSelection> tilde_sublattice_selections();

struct BasisExpression {
    std::vector<Rational> coeffs;
    bool integral = false;
};

/// Solves G·c = pairings(target, basis) exactly and validates that the
/// residual class pairs to zero with every generator. Throws NotInSpan
/// or SingularGram.
BasisExpression express_in_basis(const PicClass& target, const std::vector<int>& basis);

}  // namespace k3ent
