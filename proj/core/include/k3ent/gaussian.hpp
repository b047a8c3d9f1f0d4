#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

namespace k3ent {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a rational in lowest terms with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// An element of the field Q(i), stored as two exact rationals.
///
/// Components are always kept canonical (lowest terms, positive
/// denominator), so equality is plain component comparison.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }

    /// conj(a)·a = re² + im²; real and non-negative.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Total order for use as a map key; not an arithmetic order.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Exact square root in Q(i), when one exists.
    std::optional<GaussianRational> sqrt() const;

    /// Canonical string form "a/b+c/d*i" with zero parts omitted:
    /// "2/3", "-i", "3-1/2*i", "0".
    std::string str() const;

    static GaussianRational parse(const std::string& text);
    static std::optional<GaussianRational> try_parse(const std::string& text);

private:
    Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

enum class GqOp { add, sub, mul, div, conj, norm };

/// Dispatch-style entry point mirroring the scalar arithmetic contract;
/// conj and norm ignore the second operand.
GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, GqOp op);

}  // namespace k3ent
