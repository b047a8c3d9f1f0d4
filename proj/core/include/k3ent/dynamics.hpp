#pragma once

#include <vector>

#include "k3ent/axis.hpp"
#include "k3ent/intmatrix.hpp"
#include "k3ent/intpoly.hpp"
#include "k3ent/purelattice.hpp"

namespace k3ent {

/// Integer matrix acting on a pure Picard basis; column j is the image
/// of basis element j.
struct IsometryMatrix {
    PureType type;
    std::vector<std::string> basis;
    IntMatrix entries;
};

/// Pullback of the involution along one axis on the pure basis of the
/// given type: both transverse fibers and the parallel curves are fixed;
/// a curve parallel to another axis maps to (third fiber) - (curve);
/// the parallel fiber maps to -E + 2E' + 2E'' - sum of parallel curves.
IsometryMatrix tau_star(Axis axis, const PureType& t);

/// Pullback of f = tau_z ∘ tau_y ∘ tau_x: the matrix product Tx·Ty·Tz.
IsometryMatrix f_star(const PureType& t);

/// AᵀMA = M exactly.
bool is_isometry(const IntMatrix& a, const IntMatrix& gram);

/// Exact det(tI - A), monic, computed by the Faddeev-LeVerrier
/// recurrence over the integers.
IntPolynomial char_poly(const IntMatrix& a);

struct CyclotomicPart {
    int n = 0;
    int multiplicity = 0;
    friend bool operator==(const CyclotomicPart& a, const CyclotomicPart& b) {
        return a.n == b.n && a.multiplicity == b.multiplicity;
    }
};

/// Divides out every cyclotomic factor; returns the quotient (the Salem
/// factor, or 1) and the stripped indices with multiplicities.
std::pair<IntPolynomial, std::vector<CyclotomicPart>> strip_cyclotomic(const IntPolynomial& p);

struct SpectralData {
    double lambda = 1.0;
    IntPolynomial min_poly;
};

/// Largest real root of the Salem factor of the characteristic
/// polynomial; (1, t-1) when the factor is constant.
SpectralData spectral_radius(const IsometryMatrix& a, double tol = 1e-12);

struct EntropyRow {
    PureType type;  // unordered canonical
    double lambda = 1.0;
    IntPolynomial min_poly;
    IntPolynomial characteristic;
    std::vector<CyclotomicPart> cyclotomic_parts;
    double entropy = 0.0;  // ln(lambda)
};

EntropyRow entropy_row(const PureType& t, double tol = 1e-12);

/// One row per unordered type of N (30 rows, lexicographic order).
std::vector<EntropyRow> entropy_table();

/// Identical Salem factors and lambda agreement within 1e-9 across all
/// orderings of the triple.
bool permutation_invariance_check(const PureType& t);

struct MonotonicityViolation {
    PureType lower, higher;
    double lambda_lower = 0.0, lambda_higher = 0.0;
};

/// Checks strict decrease of lambda along every componentwise-comparable
/// pair of unordered types (margin 1e-6); empty result means the
/// monotonicity statement holds.
std::vector<MonotonicityViolation> monotonicity_check();

}  // namespace k3ent
