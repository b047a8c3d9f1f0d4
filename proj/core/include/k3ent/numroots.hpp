#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "k3ent/gaussian.hpp"
#include "k3ent/gqpoly.hpp"

namespace k3ent {

struct NumericRoots {
    std::vector<std::complex<double>> roots;  // count = degree, with clusters
    bool converged = true;
    double residual_bound = 0.0;  // max |p(r)| over returned roots
};

/// Simultaneous (Durand-Kerner) iteration. Residual target is
/// |p(r)| <= 1e-8·(1 + max |coeff|) within a 200-iteration budget;
/// on failure the partial results come back flagged.
NumericRoots complex_roots_numeric(const std::vector<std::complex<double>>& coeffs);
NumericRoots complex_roots_numeric(const GqPoly& p);

/// Best rational with denominator <= denom_bound via continued-fraction
/// rounding; nullopt when no such rational lies within tol.
std::optional<Rational> recognize_rational(double x, unsigned denom_bound, double tol);

/// Componentwise recognition of a+bi with both denominators bounded.
std::optional<GaussianRational> recognize_gaussian_rational(const std::complex<double>& z,
                                                            unsigned denom_bound, double tol);

}  // namespace k3ent
