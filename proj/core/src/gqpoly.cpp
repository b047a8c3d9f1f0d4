#include "k3ent/gqpoly.hpp"

#include <algorithm>

#include "k3ent/errors.hpp"

namespace k3ent {

namespace {

// Bareiss fraction-free determinant over an integral domain. Divisions by
// the previous pivot are exact in the domain; Div must implement them.
template <typename K, typename IsZero, typename Mul, typename Sub, typename Div>
K bareiss_det(std::vector<std::vector<K>> a, const K& one, IsZero is_zero, Mul mul, Sub sub,
              Div div) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return one;
    K prev = one;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (is_zero(a[k][k])) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!is_zero(a[i][k])) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return K{};  // zero column => zero determinant
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                K num = sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j]));
                a[i][j] = div(num, prev);
            }
            a[i][k] = K{};
        }
        prev = a[k][k];
    }
    K det = a[n - 1][n - 1];
    if (sign < 0) det = sub(K{}, det);
    return det;
}

template <typename K>
std::vector<std::vector<K>> sylvester(const std::vector<K>& p, const std::vector<K>& q) {
    const int m = static_cast<int>(p.size()) - 1;  // deg p
    const int n = static_cast<int>(q.size()) - 1;  // deg q
    const int size = m + n;
    std::vector<std::vector<K>> s(size, std::vector<K>(size, K{}));
    // n rows of p coefficients (highest degree first), then m rows of q.
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) s[r][r + j] = p[m - j];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) s[n + r][r + j] = q[n - j];
    return s;
}

}  // namespace

GqPoly::GqPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

GqPoly::GqPoly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { trim(); }

GqPoly GqPoly::constant(GaussianRational c) {
    GqPoly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

GqPoly GqPoly::variable() { return GqPoly({GaussianRational(0), GaussianRational(1)}); }

void GqPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const GaussianRational& GqPoly::leading() const {
    if (c_.empty()) throw ZeroPolynomialError("GqPoly: zero polynomial has no leading coefficient");
    return c_.back();
}

GaussianRational GqPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational(0);
    return c_[k];
}

GqPoly GqPoly::operator-() const {
    GqPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

GqPoly operator+(const GqPoly& a, const GqPoly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return GqPoly(std::move(c));
}

GqPoly operator-(const GqPoly& a, const GqPoly& b) { return a + (-b); }

GqPoly operator*(const GqPoly& a, const GqPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return GqPoly(std::move(c));
}

GqPoly GqPoly::operator*(const GaussianRational& s) const {
    if (s.is_zero()) return {};
    GqPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

GqPoly GqPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * GaussianRational(static_cast<long>(i));
    return GqPoly(std::move(d));
}

GaussianRational GqPoly::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> GqPoly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

GqPoly GqPoly::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

std::pair<GqPoly, GqPoly> GqPoly::divmod(const GqPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("GqPoly: division by zero polynomial");
    GqPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {GqPoly{}, rem};
    std::vector<GaussianRational> q(rem.degree() - divisor.degree() + 1);
    GaussianRational inv = divisor.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        GaussianRational f = rem.leading() * inv;
        q[shift] = f;
        std::vector<GaussianRational> rc = rem.c_;
        for (size_t j = 0; j < divisor.c_.size(); ++j) rc[j + shift] -= f * divisor.c_[j];
        rem = GqPoly(std::move(rc));
    }
    return {GqPoly(std::move(q)), rem};
}

GqPoly GqPoly::divide_exact(const GqPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw NonIntegerResultError("GqPoly: inexact division");
    return q;
}

std::vector<std::complex<double>> GqPoly::to_complex_coeffs() const {
    std::vector<std::complex<double>> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.to_complex());
    return out;
}

GqPoly gq_gcd(const GqPoly& a, const GqPoly& b) {
    GqPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        GqPoly r2 = r0.divmod(r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return {};
    return r0.monic();
}

GqPoly gq_squarefree(const GqPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError("gq_squarefree: zero polynomial");
    if (p.degree() == 0) return GqPoly::constant(GaussianRational(1));
    GqPoly g = gq_gcd(p, p.derivative());
    return p.divide_exact(g).monic();
}

GaussianRational resultant(const GqPoly& p, const GqPoly& q) {
    if (p.is_zero() && q.is_zero()) throw BothZeroError("resultant: both polynomials are zero");
    if (p.is_zero() || q.is_zero()) return GaussianRational(0);
    const int m = p.degree(), n = q.degree();
    if (m == 0 && n == 0) return GaussianRational(1);
    if (m == 0) {
        GaussianRational r(1);
        for (int i = 0; i < n; ++i) r *= p.coeff(0);
        return r;
    }
    if (n == 0) {
        GaussianRational r(1);
        for (int i = 0; i < m; ++i) r *= q.coeff(0);
        return r;
    }
    auto s = sylvester(p.coeffs(), q.coeffs());
    return bareiss_det<GaussianRational>(
        std::move(s), GaussianRational(1),
        [](const GaussianRational& x) { return x.is_zero(); },
        [](const GaussianRational& x, const GaussianRational& y) { return x * y; },
        [](const GaussianRational& x, const GaussianRational& y) { return x - y; },
        [](const GaussianRational& x, const GaussianRational& y) { return x / y; });
}

GqPoly2::GqPoly2(std::vector<GqPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

void GqPoly2::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GqPoly GqPoly2::eval_outer(const GaussianRational& s) const {
    std::vector<GaussianRational> out;
    out.reserve(c_.size());
    for (const auto& p : c_) out.push_back(p.eval(s));
    return GqPoly(std::move(out));
}

std::vector<std::complex<double>> GqPoly2::eval_outer_numeric_coeffs(
    const std::complex<double>& s) const {
    std::vector<std::complex<double>> out;
    out.reserve(c_.size());
    for (const auto& p : c_) out.push_back(p.eval(s));
    return out;
}

GqPoly resultant_t(const GqPoly2& p, const GqPoly2& q) {
    if (p.is_zero() && q.is_zero()) throw BothZeroError("resultant_t: both polynomials are zero");
    if (p.is_zero() || q.is_zero()) return {};
    const int m = p.degree_t(), n = q.degree_t();
    if (m == 0 && n == 0) return GqPoly::constant(GaussianRational(1));
    if (m == 0) {
        GqPoly r = GqPoly::constant(GaussianRational(1));
        for (int i = 0; i < n; ++i) r = r * p.coeffs()[0];
        return r;
    }
    if (n == 0) {
        GqPoly r = GqPoly::constant(GaussianRational(1));
        for (int i = 0; i < m; ++i) r = r * q.coeffs()[0];
        return r;
    }
    auto s = sylvester(p.coeffs(), q.coeffs());
    return bareiss_det<GqPoly>(
        std::move(s), GqPoly::constant(GaussianRational(1)),
        [](const GqPoly& x) { return x.is_zero(); },
        [](const GqPoly& x, const GqPoly& y) { return x * y; },
        [](const GqPoly& x, const GqPoly& y) { return x - y; },
        [](const GqPoly& x, const GqPoly& y) { return x.divide_exact(y); });
}

}  // namespace k3ent
