#pragma once

#include <complex>
#include <vector>

#include "k3ent/gaussian.hpp"

namespace k3ent {

/// Dense univariate polynomial over Q(i), lowest degree first.
class GqPoly {
public:
    GqPoly() = default;
    explicit GqPoly(std::vector<GaussianRational> coeffs);
    GqPoly(std::initializer_list<GaussianRational> coeffs);

    static GqPoly constant(GaussianRational c);
    static GqPoly variable();  // t

    const std::vector<GaussianRational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const GaussianRational& leading() const;
    GaussianRational coeff(int k) const;

    GqPoly operator-() const;
    friend GqPoly operator+(const GqPoly& a, const GqPoly& b);
    friend GqPoly operator-(const GqPoly& a, const GqPoly& b);
    friend GqPoly operator*(const GqPoly& a, const GqPoly& b);
    GqPoly operator*(const GaussianRational& s) const;
    friend bool operator==(const GqPoly& a, const GqPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const GqPoly& a, const GqPoly& b) { return !(a == b); }

    GqPoly derivative() const;
    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;
    GqPoly monic() const;

    /// Quotient and remainder by a nonzero divisor.
    std::pair<GqPoly, GqPoly> divmod(const GqPoly& divisor) const;
    /// Exact quotient; throws NonIntegerResult if the remainder is nonzero.
    GqPoly divide_exact(const GqPoly& divisor) const;

    std::vector<std::complex<double>> to_complex_coeffs() const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

/// Monic gcd over the field Q(i) (1 for coprime inputs).
GqPoly gq_gcd(const GqPoly& a, const GqPoly& b);

/// Product of distinct roots only (p / gcd(p, p')), monic.
GqPoly gq_squarefree(const GqPoly& p);

/// Sylvester-matrix resultant computed by fraction-free (Bareiss)
/// elimination. Throws BothZero when both arguments vanish.
GaussianRational resultant(const GqPoly& p, const GqPoly& q);

/// Polynomial in an outer variable s whose coefficients are GqPoly in s;
/// index = power of the inner variable t. Used for chartwise elimination.
class GqPoly2 {
public:
    GqPoly2() = default;
    explicit GqPoly2(std::vector<GqPoly> coeffs);

    const std::vector<GqPoly>& coeffs() const { return c_; }
    int degree_t() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Substitute the outer variable: result is a polynomial in t.
    GqPoly eval_outer(const GaussianRational& s) const;
    std::vector<std::complex<double>> eval_outer_numeric_coeffs(const std::complex<double>& s) const;

private:
    void trim();
    std::vector<GqPoly> c_;
};

/// Resultant with respect to the inner variable t; an element of Q(i)[s].
GqPoly resultant_t(const GqPoly2& p, const GqPoly2& q);

}  // namespace k3ent
