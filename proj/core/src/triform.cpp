#include "k3ent/triform.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "k3ent/errors.hpp"

namespace k3ent {

using nlohmann::ordered_json;

const ProjPoint& AxisCurve::fixed_on(Axis other) const {
    auto [u, v] = companion_axes(axis_);
    if (other == u) return p1_;
    if (other == v) return p2_;
    throw DimensionMismatchError("AxisCurve: no fixed coordinate on the parallel axis");
}

std::string AxisCurve::label() const {
    std::ostringstream os;
    os << "C_{" << axis_name(axis_) << ",(" << p1_.str() << "," << p2_.str() << ")}";
    return os.str();
}

bool same_curve(const AxisCurve& a, const AxisCurve& b) {
    return a.axis() == b.axis() && proj_eq(a.p1(), b.p1()) && proj_eq(a.p2(), b.p2());
}

std::optional<Axis> axis_from_string(const std::string& s) {
    if (s == "x") return Axis::x;
    if (s == "y") return Axis::y;
    if (s == "z") return Axis::z;
    return std::nullopt;
}

bool BiForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

GaussianRational BiForm::eval(const ProjPoint& u, const ProjPoint& v) const {
    // Homogeneous: the result scales with the representative, so zero
    // tests and projective formulas are representative-independent.
    std::array<GaussianRational, 3> up, vp;
    up[0] = u.c1() * u.c1();
    up[1] = u.c0() * u.c1();
    up[2] = u.c0() * u.c0();
    vp[0] = v.c1() * v.c1();
    vp[1] = v.c0() * v.c1();
    vp[2] = v.c0() * v.c0();
    GaussianRational acc(0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const auto& c = at(a, b);
            if (!c.is_zero()) acc += c * up[a] * vp[b];
        }
    return acc;
}

std::complex<double> BiForm::eval(const std::complex<double>& u0, const std::complex<double>& u1,
                                  const std::complex<double>& v0,
                                  const std::complex<double>& v1) const {
    std::array<std::complex<double>, 3> up{u1 * u1, u0 * u1, u0 * u0};
    std::array<std::complex<double>, 3> vp{v1 * v1, v0 * v1, v0 * v0};
    std::complex<double> acc(0.0, 0.0);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const auto& c = at(a, b);
            if (!c.is_zero()) acc += c.to_complex() * up[a] * vp[b];
        }
    return acc;
}

bool TriForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

MultiPoly TriForm::to_multipoly() const {
    MultiPoly p;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                const auto& c = at(j, k, l);
                if (c.is_zero()) continue;
                p.add_term({j, 2 - j, k, 2 - k, l, 2 - l}, c);
            }
    return p;
}

GaussianRational TriForm::eval(const ProjPoint& x, const ProjPoint& y, const ProjPoint& z) const {
    auto powers = [](const ProjPoint& p) {
        std::array<GaussianRational, 3> w;
        w[0] = p.c1() * p.c1();
        w[1] = p.c0() * p.c1();
        w[2] = p.c0() * p.c0();
        return w;
    };
    auto xp = powers(x), yp = powers(y), zp = powers(z);
    GaussianRational acc(0);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                const auto& c = at(j, k, l);
                if (!c.is_zero()) acc += c * xp[j] * yp[k] * zp[l];
            }
    return acc;
}

std::complex<double> TriForm::eval(const NumericCoords& p) const {
    auto powers = [](const std::complex<double>& a, const std::complex<double>& b) {
        return std::array<std::complex<double>, 3>{b * b, a * b, a * a};
    };
    auto xp = powers(p[0], p[1]), yp = powers(p[2], p[3]), zp = powers(p[4], p[5]);
    std::complex<double> acc(0.0, 0.0);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                const auto& c = at(j, k, l);
                if (!c.is_zero()) acc += c.to_complex() * xp[j] * yp[k] * zp[l];
            }
    return acc;
}

std::string TriForm::to_json() const {
    ordered_json coeffs = ordered_json::array();
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                const auto& c = at(j, k, l);
                if (c.is_zero()) continue;
                coeffs.push_back({{"x", j}, {"y", k}, {"z", l}, {"c", c.str()}});
            }
    ordered_json out{{"coeffs", coeffs}};
    return out.dump(2);
}

TriForm TriForm::from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("TriForm JSON: ") + e.what());
    }
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array())
        throw ParseError("TriForm JSON: missing \"coeffs\" array");
    TriForm q;
    for (const auto& t : doc["coeffs"]) {
        if (!t.contains("x") || !t.contains("y") || !t.contains("z") || !t.contains("c"))
            throw ParseError("TriForm JSON: coefficient entry needs x, y, z, c");
        int j = t["x"].get<int>(), k = t["y"].get<int>(), l = t["z"].get<int>();
        if (j < 0 || j > 2 || k < 0 || k > 2 || l < 0 || l > 2)
            throw ParseError("TriForm JSON: exponents must lie in 0..2");
        q.at(j, k, l) += GaussianRational::parse(t["c"].get<std::string>());
    }
    return q;
}

TriForm TriForm::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open TriForm file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

TriForm build_tilde_Q() {
    TriForm q;
    for (int j : {0, 2})
        for (int k : {0, 2})
            for (int l : {0, 2}) q.at(j, k, l) = GaussianRational(1);
    q.at(1, 1, 1) = GaussianRational(3);
    q.at(0, 1, 1) = GaussianRational(-2);
    return q;
}

std::array<BiForm, 3> slices(const TriForm& q, Axis axis) {
    std::array<BiForm, 3> out;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) {
                const auto& c = q.at(j, k, l);
                if (c.is_zero()) continue;
                switch (axis) {
                    case Axis::x: out[j].at(k, l) += c; break;  // (u,v) = (y,z)
                    case Axis::y: out[k].at(l, j) += c; break;  // (u,v) = (z,x)
                    case Axis::z: out[l].at(j, k) += c; break;  // (u,v) = (x,y)
                }
            }
    return out;
}

const ProjPoint& SurfacePoint::get(Axis a) const {
    switch (a) {
        case Axis::x: return x;
        case Axis::y: return y;
        case Axis::z: return z;
    }
    return x;
}

void SurfacePoint::set(Axis a, ProjPoint p) {
    switch (a) {
        case Axis::x: x = std::move(p); break;
        case Axis::y: y = std::move(p); break;
        case Axis::z: z = std::move(p); break;
    }
}

NumericCoords SurfacePoint::to_numeric() const {
    return {x.c0().to_complex(), x.c1().to_complex(), y.c0().to_complex(),
            y.c1().to_complex(), z.c0().to_complex(), z.c1().to_complex()};
}

bool same_point(const SurfacePoint& a, const SurfacePoint& b) {
    return proj_eq(a.x, b.x) && proj_eq(a.y, b.y) && proj_eq(a.z, b.z);
}

SurfacePoint tau_point(const TriForm& q, Axis axis, const SurfacePoint& p, TauFormula formula) {
    auto [ua, va] = companion_axes(axis);
    auto s = slices(q, axis);
    const ProjPoint& u = p.get(ua);
    const ProjPoint& v = p.get(va);
    GaussianRational q0 = s[0].eval(u, v);
    GaussianRational q1 = s[1].eval(u, v);
    GaussianRational q2 = s[2].eval(u, v);
    const ProjPoint& w = p.get(axis);
    GaussianRational n0, n1;
    if (formula == TauFormula::general) {
        n0 = w.c0() * q2 + w.c1() * q1;
        n1 = -(w.c1() * q2);
    } else {
        n0 = w.c1() * q0;
        n1 = w.c0() * q2;
    }
    if (n0.is_zero() && n1.is_zero())
        throw IndeterminatePointError("tau_point: both output coordinates vanish");
    SurfacePoint out = p;
    out.set(axis, ProjPoint(std::move(n0), std::move(n1)));
    return out;
}

std::optional<NumericCoords> tau_point_numeric(const TriForm& q, Axis axis, const NumericCoords& p,
                                               TauFormula formula, double eps) {
    auto [ua, va] = companion_axes(axis);
    auto s = slices(q, axis);
    const int ui = 2 * static_cast<int>(ua), vi = 2 * static_cast<int>(va);
    const int wi = 2 * static_cast<int>(axis);
    std::complex<double> q0 = s[0].eval(p[ui], p[ui + 1], p[vi], p[vi + 1]);
    std::complex<double> q1 = s[1].eval(p[ui], p[ui + 1], p[vi], p[vi + 1]);
    std::complex<double> q2 = s[2].eval(p[ui], p[ui + 1], p[vi], p[vi + 1]);
    std::complex<double> n0, n1;
    if (formula == TauFormula::general) {
        n0 = p[wi] * q2 + p[wi + 1] * q1;
        n1 = -(p[wi + 1] * q2);
    } else {
        n0 = p[wi + 1] * q0;
        n1 = p[wi] * q2;
    }
    double mag = std::max(std::abs(n0), std::abs(n1));
    if (mag < eps) return std::nullopt;
    NumericCoords out = p;
    out[wi] = n0 / mag;
    out[wi + 1] = n1 / mag;
    return out;
}

namespace {

// Lifts a slice to the full six-variable ring.
MultiPoly biform_to_multipoly(const BiForm& b, Axis axis) {
    auto [ua, va] = companion_axes(axis);
    auto [u0, u1] = vars_of(ua);
    auto [v0, v1] = vars_of(va);
    MultiPoly p;
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) {
            const auto& coeff = b.at(a, c);
            if (coeff.is_zero()) continue;
            Exponents e{0, 0, 0, 0, 0, 0};
            e[static_cast<int>(u0)] = a;
            e[static_cast<int>(u1)] = 2 - a;
            e[static_cast<int>(v0)] = c;
            e[static_cast<int>(v1)] = 2 - c;
            p.add_term(e, coeff);
        }
    return p;
}

}  // namespace

IdentityReport verify_tau_identities(const TriForm& q, Axis axis) {
    MultiPoly full = q.to_multipoly();
    auto sl = slices(q, axis);
    MultiPoly s0 = biform_to_multipoly(sl[0], axis);
    MultiPoly s1 = biform_to_multipoly(sl[1], axis);
    MultiPoly s2 = biform_to_multipoly(sl[2], axis);
    auto [w0v, w1v] = vars_of(axis);
    MultiPoly w0 = MultiPoly::variable(w0v);
    MultiPoly w1 = MultiPoly::variable(w1v);

    MultiPoly sub0 = w0 * s2 + w1 * s1;  // image of w0
    MultiPoly sub1 = -(w1 * s2);         // image of w1

    IdentityReport rep;
    rep.conjugation = full.substitute_pair(w0v, sub0, w1v, sub1) == s2 * s2 * full;
    rep.cross = (w1 * s0) * sub1 - (w0 * s2) * sub0 == -(s2 * full);
    return rep;
}

bool curve_contained(const TriForm& q, const AxisCurve& c) {
    auto sl = slices(q, c.axis());
    for (const auto& b : sl)
        if (!b.eval(c.p1(), c.p2()).is_zero()) return false;
    return true;
}

bool JacobianData::singular_at_point() const {
    if (!value.is_zero()) return false;
    for (const auto& g : grad)
        if (!g.is_zero()) return false;
    return true;
}

JacobianData jacobian(const TriForm& q, const SurfacePoint& p) {
    MultiPoly mp = q.to_multipoly();
    std::array<GaussianRational, 6> coords{p.x.c0(), p.x.c1(), p.y.c0(),
                                           p.y.c1(), p.z.c0(), p.z.c1()};
    JacobianData out;
    out.value = mp.eval(coords);
    for (int v = 0; v < 6; ++v) out.grad[v] = mp.derivative(static_cast<Var>(v)).eval(coords);
    return out;
}

SampleSet sample_surface_points(const TriForm& q, size_t target, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    auto random_point = [&]() {
        return ProjPoint::finite(GaussianRational(make_rational(num(rng), den(rng))));
    };

    auto sl = slices(q, Axis::x);
    SampleSet out;
    int guard = 0;
    while (out.total() < target && ++guard < 10000) {
        ProjPoint y = random_point();
        ProjPoint z = random_point();
        GaussianRational q0 = sl[0].eval(y, z);
        GaussianRational q1 = sl[1].eval(y, z);
        GaussianRational q2 = sl[2].eval(y, z);
        if (q2.is_zero() && q1.is_zero()) continue;  // no isolated x solution
        if (q2.is_zero()) {
            // Linear in the affine chart: q1·t + q0 = 0.
            SurfacePoint p{ProjPoint::finite(-(q0 / q1)), y, z};
            out.exact.push_back(std::move(p));
            continue;
        }
        GaussianRational disc = q1 * q1 - GaussianRational(4) * q2 * q0;
        if (auto d = disc.sqrt()) {
            GaussianRational two_a = GaussianRational(2) * q2;
            out.exact.push_back({ProjPoint::finite((-q1 + *d) / two_a), y, z});
            if (!d->is_zero() && out.total() < target)
                out.exact.push_back({ProjPoint::finite((-q1 - *d) / two_a), y, z});
        } else {
            std::complex<double> a = q2.to_complex(), b = q1.to_complex(), c = q0.to_complex();
            std::complex<double> sq = std::sqrt(b * b - 4.0 * a * c);
            for (int sgn : {+1, -1}) {
                if (out.total() >= target) break;
                std::complex<double> t = (-b + (sgn > 0 ? sq : -sq)) / (2.0 * a);
                NumericCoords pc{t,
                                 {1.0, 0.0},
                                 y.c0().to_complex(),
                                 y.c1().to_complex(),
                                 z.c0().to_complex(),
                                 z.c1().to_complex()};
                out.numeric.push_back(pc);
            }
        }
    }
    return out;
}

}  // namespace k3ent
