#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "k3ent/gaussian.hpp"

namespace k3ent {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored lowest degree first. The leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return {}; }
    static IntPolynomial constant(Integer c);
    /// t - a
    static IntPolynomial t_minus(const Integer& a) { return IntPolynomial({-a, Integer(1)}); }

    const std::vector<Integer>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Integer& leading() const;
    Integer coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Integer(0); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    IntPolynomial derivative() const;

    Rational eval(const Rational& x) const;
    Integer eval(const Integer& x) const;
    double eval(double x) const;

    /// Quotient of exact division over Z; false if the division is not exact.
    bool divide_exact(const IntPolynomial& divisor, IntPolynomial& quotient) const;

    /// Coefficient list reads the same in both directions.
    bool is_palindromic() const;

    /// t^n · p(1/t) up to sign: reciprocal polynomials of isometries.
    bool is_reciprocal_up_to_sign() const;

    /// Human-readable form such as "t^2 - 18t + 1".
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Content-normalized gcd with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Product of the distinct irreducible factors (positive leading coeff).
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Yun decomposition: p = c · prod f_i^i with each f_i squarefree,
/// pairwise coprime, positive leading coefficient. Pairs are (f_i, i)
/// with non-trivial f_i only.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

/// n-th cyclotomic polynomial.
IntPolynomial cyclotomic(int n);

/// Euler's totient.
int euler_phi(int n);

struct RootInterval {
    Rational lo, hi;   // lo == hi encodes an exact rational root
    int multiplicity = 1;
};

/// Isolating intervals for the distinct real roots, each containing
/// exactly one root of the squarefree part, pairwise disjoint, ordered
/// increasingly; multiplicities from the squarefree decomposition.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

/// Bisection refinement of an isolated root down to |hi-lo| < tol.
double refine_root(const IntPolynomial& p, const Rational& lo, const Rational& hi,
                   double tol = 1e-12);

/// Number of distinct real roots in (lo, hi) of the squarefree part.
int count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi);

}  // namespace k3ent
