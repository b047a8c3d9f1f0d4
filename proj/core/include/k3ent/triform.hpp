#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "k3ent/axis.hpp"
#include "k3ent/axiscurve.hpp"
#include "k3ent/multipoly.hpp"
#include "k3ent/projective.hpp"

namespace k3ent {

using NumericCoords = std::array<std::complex<double>, 6>;

/// Bi-homogeneous form of bi-degree (2,2) in two P¹ coordinate pairs
/// (u0:u1), (v0:v1); entry (a,b) is the coefficient of
/// u0^a u1^(2-a) v0^b v1^(2-b).
class BiForm {
public:
    BiForm() = default;

    GaussianRational& at(int a, int b) { return c_[a * 3 + b]; }
    const GaussianRational& at(int a, int b) const { return c_[a * 3 + b]; }

    bool is_zero() const;

    GaussianRational eval(const ProjPoint& u, const ProjPoint& v) const;
    std::complex<double> eval(const std::complex<double>& u0, const std::complex<double>& u1,
                              const std::complex<double>& v0, const std::complex<double>& v1) const;

    friend bool operator==(const BiForm& a, const BiForm& b) { return a.c_ == b.c_; }

private:
    std::array<GaussianRational, 9> c_{};
};

/// Tri-homogeneous form of tri-degree (2,2,2); entry (j,k,l) is the
/// coefficient of x0^j x1^(2-j) y0^k y1^(2-k) z0^l z1^(2-l).
class TriForm {
public:
    TriForm() = default;

    GaussianRational& at(int j, int k, int l) { return c_[(j * 3 + k) * 3 + l]; }
    const GaussianRational& at(int j, int k, int l) const { return c_[(j * 3 + k) * 3 + l]; }

    bool is_zero() const;

    MultiPoly to_multipoly() const;

    GaussianRational eval(const ProjPoint& x, const ProjPoint& y, const ProjPoint& z) const;
    std::complex<double> eval(const NumericCoords& p) const;

    friend bool operator==(const TriForm& a, const TriForm& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TriForm& a, const TriForm& b) { return !(a == b); }

    /// JSON: {"coeffs":[{"x":j,"y":k,"z":l,"c":"a/b+c/d*i"}, ...]},
    /// omitted entries zero.
    std::string to_json() const;
    static TriForm from_json(const std::string& text);
    static TriForm load(const std::string& path);

private:
    std::array<GaussianRational, 27> c_{};
};

/// The paper's explicit surface: (x0²+x1²)(y0²+y1²)(z0²+z1²)
/// + 3·x0x1y0y1z0z1 - 2·x1²y0y1z0z1.
TriForm build_tilde_Q();

/// Coefficient forms with respect to one axis: Q = sum_j w0^j w1^(2-j) Q_j,
/// each Q_j a (2,2)-form in the companion coordinate pairs.
std::array<BiForm, 3> slices(const TriForm& q, Axis axis);

struct SurfacePoint {
    ProjPoint x, y, z;
    const ProjPoint& get(Axis a) const;
    void set(Axis a, ProjPoint p);
    NumericCoords to_numeric() const;
};

bool same_point(const SurfacePoint& a, const SurfacePoint& b);

enum class TauFormula { general, on_surface };

/// The birational involution along one axis, applied to an exact point.
/// general: w -> [w0·Q2 + w1·Q1 : -w1·Q2]; on_surface: w -> [w1·Q0 : w0·Q2]
/// (requires Q(p) = 0). Throws IndeterminatePoint when both output
/// coordinates vanish.
SurfacePoint tau_point(const TriForm& q, Axis axis, const SurfacePoint& p, TauFormula formula);

/// Numeric variant; nullopt when the output coordinates are both below
/// eps (numerically indeterminate). Output is normalized.
std::optional<NumericCoords> tau_point_numeric(const TriForm& q, Axis axis, const NumericCoords& p,
                                               TauFormula formula, double eps = 1e-9);

struct IdentityReport {
    bool conjugation = false;  // Q(tau(w)) = Q2² · Q symbolically
    bool cross = false;        // the two formulas agree against Q2 symbolically
    bool ok() const { return conjugation && cross; }
};

/// Symbolic verification (exact multivariate expansion) of the identities
/// behind the involution being an automorphism of {Q=0}.
IdentityReport verify_tau_identities(const TriForm& q, Axis axis);

/// C_{axis,p} ⊆ {Q=0} iff all three slices vanish at the basepoint.
bool curve_contained(const TriForm& q, const AxisCurve& c);

struct JacobianData {
    GaussianRational value;
    std::array<GaussianRational, 6> grad;
    bool singular_at_point() const;
};

/// Exact Q(p) and all six partial derivatives at representative
/// coordinates.
JacobianData jacobian(const TriForm& q, const SurfacePoint& p);

enum class Certainty { exact, numeric };

struct FoundCurve {
    Certainty certainty = Certainty::numeric;
    std::optional<AxisCurve> curve;  // present iff exact
    std::array<std::complex<double>, 4> basepoint{};  // u0,u1,v0,v1 (normalized)
    double residual = 0.0;
};

/// Solves the slice system Q0 = Q1 = Q2 = 0 on P¹×P¹ chart-by-chart via
/// resultant elimination; Gaussian-rational candidates are confirmed
/// exactly. Throws SharedComponent when an elimination resultant vanishes
/// identically (positive-dimensional solution locus).
std::vector<FoundCurve> find_axis_curves(const TriForm& q, Axis axis, unsigned denom_bound = 64);

struct SampleSet {
    std::vector<SurfacePoint> exact;     // Q(p) = 0 exactly
    std::vector<NumericCoords> numeric;  // |Q(p)| small
    size_t total() const { return exact.size() + numeric.size(); }
};

/// Random on-surface points: rational (y,z), quadratic in x solved
/// exactly when its discriminant is a perfect square in Q(i), numerically
/// otherwise. Deterministic for a fixed seed.
SampleSet sample_surface_points(const TriForm& q, size_t target, unsigned long seed);

}  // namespace k3ent
