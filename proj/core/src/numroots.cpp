#include "k3ent/numroots.hpp"

#include <algorithm>
#include <cmath>

#include "k3ent/errors.hpp"

namespace k3ent {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c,
                            const std::complex<double>& x) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

NumericRoots complex_roots_numeric(const std::vector<std::complex<double>>& coeffs_in) {
    std::vector<std::complex<double>> c = coeffs_in;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) throw ZeroPolynomialError("complex_roots_numeric: degree must be >= 1");

    double max_coeff = 0.0;
    for (const auto& a : c) max_coeff = std::max(max_coeff, std::abs(a));
    const double target = 1e-8 * (1.0 + max_coeff);

    const int n = static_cast<int>(c.size()) - 1;
    // Monic copy for the correction denominator.
    std::vector<std::complex<double>> mc(c.size());
    for (size_t i = 0; i < c.size(); ++i) mc[i] = c[i] / c.back();

    // Radius bound, then staggered initial points avoiding symmetry traps.
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(mc[i]));
    radius = 1.0 + radius;
    std::vector<std::complex<double>> x(n);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        acc *= seed;
        x[i] = acc * radius;
    }

    const int budget = 200;
    for (int iter = 0; iter < budget; ++iter) {
        double move = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (x[i] - x[j]);
            if (std::abs(denom) == 0.0) {
                x[i] += std::complex<double>(1e-8, 1e-8);
                continue;
            }
            std::complex<double> delta = horner(mc, x[i]) / denom;
            x[i] -= delta;
            move = std::max(move, std::abs(delta));
        }
        if (move < 1e-15 * radius) break;
    }

    NumericRoots out;
    out.roots = x;
    out.residual_bound = 0.0;
    for (const auto& r : x) out.residual_bound = std::max(out.residual_bound, std::abs(horner(c, r)));
    out.converged = out.residual_bound <= target;
    return out;
}

NumericRoots complex_roots_numeric(const GqPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw ZeroPolynomialError("complex_roots_numeric: degree must be >= 1");
    return complex_roots_numeric(p.to_complex_coeffs());
}

std::optional<Rational> recognize_rational(double x, unsigned denom_bound, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // Continued-fraction convergents of x, denominators capped.
    long p0 = 0, q0 = 1;  // previous convergent
    long p1 = 1, q1 = 0;  // current convergent
    double v = x;
    for (int step = 0; step < 64; ++step) {
        double fl = std::floor(v);
        if (fl > 1e17 || fl < -1e17) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0;
        long q2 = a * q1 + q0;
        if (q2 > static_cast<long>(denom_bound)) break;
        p0 = p1, q0 = q1;
        p1 = p2, q1 = q2;
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return std::nullopt;
    Rational cand = make_rational(Integer(p1), Integer(q1));
    if (std::abs(cand.get_d() - x) <= tol) return cand;
    return std::nullopt;
}

std::optional<GaussianRational> recognize_gaussian_rational(const std::complex<double>& z,
                                                            unsigned denom_bound, double tol) {
    auto re = recognize_rational(z.real(), denom_bound, tol);
    if (!re) return std::nullopt;
    auto im = recognize_rational(z.imag(), denom_bound, tol);
    if (!im) return std::nullopt;
    return GaussianRational(*re, *im);
}

}  // namespace k3ent
