#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>

#include "k3ent/gaussian.hpp"

namespace k3ent {

/// The six homogeneous coordinates of P¹×P¹×P¹.
enum class Var : int { x0 = 0, x1 = 1, y0 = 2, y1 = 3, z0 = 4, z1 = 5 };

using Exponents = std::array<int, 6>;

/// Sparse polynomial in Q(i)[x0,x1,y0,y1,z0,z1]; no stored term has a
/// zero coefficient.
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(GaussianRational c);
    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Exponents& e, GaussianRational c);

    const std::map<Exponents, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    GaussianRational coeff(const Exponents& e) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const GaussianRational& s) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly derivative(Var v) const;

    GaussianRational eval(const std::array<GaussianRational, 6>& point) const;
    std::complex<double> eval(const std::array<std::complex<double>, 6>& point) const;

    /// Simultaneous substitution of two variables by polynomials; the
    /// other four variables are untouched.
    MultiPoly substitute_pair(Var a, const MultiPoly& pa, Var b, const MultiPoly& pb) const;

    void add_term(const Exponents& e, const GaussianRational& c);

    std::string str() const;

private:
    std::map<Exponents, GaussianRational> terms_;
};

}  // namespace k3ent
