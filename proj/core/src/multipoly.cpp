#include "k3ent/multipoly.hpp"

#include <sstream>

namespace k3ent {

namespace {
const char* kVarNames[6] = {"x0", "x1", "y0", "y1", "z0", "z1"};
}

MultiPoly MultiPoly::constant(GaussianRational c) {
    MultiPoly p;
    p.add_term({0, 0, 0, 0, 0, 0}, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    Exponents e{0, 0, 0, 0, 0, 0};
    e[static_cast<int>(v)] = 1;
    return monomial(e, GaussianRational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, GaussianRational c) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

GaussianRational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int i = 0; i < 6; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const GaussianRational& s) const {
    MultiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    const int vi = static_cast<int>(v);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[vi] == 0) continue;
        Exponents d = e;
        d[vi] -= 1;
        r.add_term(d, c * GaussianRational(e[vi]));
    }
    return r;
}

GaussianRational MultiPoly::eval(const std::array<GaussianRational, 6>& point) const {
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::complex<double> MultiPoly::eval(const std::array<std::complex<double>, 6>& point) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_pair(Var a, const MultiPoly& pa, Var b, const MultiPoly& pb) const {
    const int ia = static_cast<int>(a), ib = static_cast<int>(b);
    // Cache small powers; exponents here never exceed the tri-degree.
    auto powers = [](const MultiPoly& p, int maxe) {
        std::vector<MultiPoly> pw;
        pw.push_back(MultiPoly::constant(GaussianRational(1)));
        for (int k = 1; k <= maxe; ++k) pw.push_back(pw.back() * p);
        return pw;
    };
    int max_a = 0, max_b = 0;
    for (const auto& [e, c] : terms_) {
        max_a = std::max(max_a, e[ia]);
        max_b = std::max(max_b, e[ib]);
    }
    auto pow_a = powers(pa, max_a);
    auto pow_b = powers(pb, max_b);

    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[ia] = 0;
        rest[ib] = 0;
        MultiPoly term = MultiPoly::monomial(rest, c) * pow_a[e[ia]] * pow_b[e[ib]];
        out = out + term;
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < 6; ++i) {
            if (e[i] == 0) continue;
            os << "*" << kVarNames[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace k3ent
