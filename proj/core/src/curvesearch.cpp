#include <algorithm>
#include <cmath>

#include "k3ent/errors.hpp"
#include "k3ent/gqpoly.hpp"
#include "k3ent/numroots.hpp"
#include "k3ent/triform.hpp"

namespace k3ent {

namespace {

// Residual threshold for accepting a numeric common zero, relative to
// the coefficient scale of the slice system.
constexpr double kNumericResidualTol = 1e-6;
// Candidate roots closer than this are treated as one cluster.
constexpr double kClusterTol = 1e-8;

// A slice restricted to an affine chart, as a polynomial in t with
// coefficients in Q(i)[s]: u = [s:1] or [1:s], v = [t:1] or [1:t].
GqPoly2 chart_poly(const BiForm& b, bool uflip, bool vflip) {
    std::array<std::vector<GaussianRational>, 3> sc;
    for (auto& v : sc) v.assign(3, GaussianRational(0));
    for (int a = 0; a < 3; ++a)
        for (int c = 0; c < 3; ++c) {
            const auto& coeff = b.at(a, c);
            if (coeff.is_zero()) continue;
            int se = uflip ? 2 - a : a;
            int te = vflip ? 2 - c : c;
            sc[te][se] += coeff;
        }
    std::vector<GqPoly> out;
    out.reserve(3);
    for (auto& v : sc) out.emplace_back(std::move(v));
    return GqPoly2(std::move(out));
}

ProjPoint chart_point(const GaussianRational& value, bool flip) {
    return flip ? ProjPoint(GaussianRational(1), value) : ProjPoint(value, GaussianRational(1));
}

std::array<std::complex<double>, 2> chart_point_numeric(const std::complex<double>& value,
                                                        bool flip) {
    std::complex<double> c0 = flip ? std::complex<double>(1.0, 0.0) : value;
    std::complex<double> c1 = flip ? value : std::complex<double>(1.0, 0.0);
    double mag = std::max(std::abs(c0), std::abs(c1));
    return {c0 / mag, c1 / mag};
}

bool numeric_proj_eq(const std::complex<double>& a0, const std::complex<double>& a1,
                     const std::complex<double>& b0, const std::complex<double>& b1) {
    return std::abs(a0 * b1 - a1 * b0) < 1e-6;
}

double slice_scale(const std::array<BiForm, 3>& sl) {
    double m = 0.0;
    for (const auto& b : sl)
        for (int a = 0; a < 3; ++a)
            for (int c = 0; c < 3; ++c) m = std::max(m, std::abs(b.at(a, c).to_complex()));
    return 1.0 + m;
}

double slice_residual(const std::array<BiForm, 3>& sl, const std::array<std::complex<double>, 4>& bp) {
    double r = 0.0;
    for (const auto& b : sl) r = std::max(r, std::abs(b.eval(bp[0], bp[1], bp[2], bp[3])));
    return r;
}

}  // namespace

std::vector<FoundCurve> find_axis_curves(const TriForm& q, Axis axis, unsigned denom_bound) {
    if (q.is_zero()) throw ZeroPolynomialError("find_axis_curves: zero form");
    auto sl = slices(q, axis);

    std::vector<const BiForm*> nonzero;
    for (const auto& b : sl)
        if (!b.is_zero()) nonzero.push_back(&b);
    if (nonzero.size() <= 1)
        throw SharedComponentError(
            "find_axis_curves: at most one nonzero slice; common locus is positive-dimensional");

    const double scale = slice_scale(sl);
    std::vector<FoundCurve> found;

    auto already_have_exact = [&](const AxisCurve& c) {
        return std::any_of(found.begin(), found.end(), [&](const FoundCurve& f) {
            return f.curve && same_curve(*f.curve, c);
        });
    };
    auto already_have_numeric = [&](const std::array<std::complex<double>, 4>& bp) {
        return std::any_of(found.begin(), found.end(), [&](const FoundCurve& f) {
            return numeric_proj_eq(f.basepoint[0], f.basepoint[1], bp[0], bp[1]) &&
                   numeric_proj_eq(f.basepoint[2], f.basepoint[3], bp[2], bp[3]);
        });
    };

    auto push_exact = [&](const GaussianRational& s_hat, const GaussianRational& t_hat, bool uflip,
                          bool vflip) {
        AxisCurve curve(axis, chart_point(s_hat, uflip), chart_point(t_hat, vflip));
        if (already_have_exact(curve)) return;
        if (!curve_contained(q, curve)) return;  // exact confirmation gate
        FoundCurve f;
        f.certainty = Certainty::exact;
        f.curve = curve;
        auto u = curve.p1().canonical();
        auto v = curve.p2().canonical();
        f.basepoint = {u.c0().to_complex(), u.c1().to_complex(), v.c0().to_complex(),
                       v.c1().to_complex()};
        f.residual = 0.0;
        found.push_back(std::move(f));
    };

    auto push_numeric = [&](const std::complex<double>& s0, const std::complex<double>& t0,
                            bool uflip, bool vflip) {
        std::array<std::complex<double>, 4> bp{};
        auto u = chart_point_numeric(s0, uflip);
        auto v = chart_point_numeric(t0, vflip);
        bp = {u[0], u[1], v[0], v[1]};
        double res = slice_residual(sl, bp);
        if (res > kNumericResidualTol * scale) return;
        if (already_have_numeric(bp)) return;
        FoundCurve f;
        f.certainty = Certainty::numeric;
        f.basepoint = bp;
        f.residual = res;
        found.push_back(std::move(f));
    };

    for (int chart = 0; chart < 4; ++chart) {
        const bool uflip = (chart & 1) != 0;
        const bool vflip = (chart & 2) != 0;

        std::vector<GqPoly2> polys;
        polys.reserve(nonzero.size());
        for (const BiForm* b : nonzero) polys.push_back(chart_poly(*b, uflip, vflip));

        int lead = -1;
        for (size_t i = 0; i < polys.size(); ++i)
            if (polys[i].degree_t() >= 1) {
                lead = static_cast<int>(i);
                break;
            }

        std::vector<GqPoly> elim;
        for (size_t i = 0; i < polys.size(); ++i) {
            if (static_cast<int>(i) == lead) continue;
            if (polys[i].degree_t() == 0) {
                elim.push_back(polys[i].coeffs()[0]);
            } else if (lead >= 0) {
                GqPoly r = resultant_t(polys[lead], polys[i]);
                if (r.is_zero())
                    throw SharedComponentError(
                        "find_axis_curves: elimination resultant vanishes identically");
                elim.push_back(std::move(r));
            }
        }
        if (lead < 0) {
            // No slice involves t in this chart; a common s-root would fix
            // an entire t-line inside the locus.
            GqPoly g = elim.front();
            for (size_t i = 1; i < elim.size(); ++i) g = gq_gcd(g, elim[i]);
            if (g.degree() >= 1)
                throw SharedComponentError(
                    "find_axis_curves: solution locus contains a coordinate line");
            continue;
        }

        GqPoly g = elim.front();
        for (size_t i = 1; i < elim.size(); ++i) g = gq_gcd(g, elim[i]);
        if (g.is_zero())
            throw SharedComponentError("find_axis_curves: elimination system vanishes identically");
        if (g.degree() == 0) continue;  // no candidate fibers in this chart

        GqPoly gsf = gq_squarefree(g);
        auto sroots = complex_roots_numeric(gsf);

        std::vector<std::complex<double>> candidates;
        for (const auto& r : sroots.roots) {
            bool dup = std::any_of(candidates.begin(), candidates.end(), [&](const auto& c) {
                return std::abs(c - r) < kClusterTol;
            });
            if (!dup) candidates.push_back(r);
        }

        for (const auto& s0 : candidates) {
            auto s_hat = recognize_gaussian_rational(s0, denom_bound, 1e-6);
            if (s_hat && gsf.eval(*s_hat).is_zero()) {
                // Exact fiber: substitute and intersect over Q(i)[t].
                std::vector<GqPoly> subs;
                for (const auto& p2 : polys) {
                    GqPoly sub = p2.eval_outer(*s_hat);
                    if (!sub.is_zero()) subs.push_back(std::move(sub));
                }
                if (subs.empty())
                    throw SharedComponentError(
                        "find_axis_curves: an entire fiber lies in the slice locus");
                GqPoly h = subs.front();
                for (size_t i = 1; i < subs.size(); ++i) h = gq_gcd(h, subs[i]);
                if (subs.size() < polys.size() && h.degree() >= 1) {
                    // Some slice vanished identically on this fiber; h keeps
                    // only the constraints that survive.
                }
                if (h.is_zero() || h.degree() == 0) continue;
                GqPoly hsf = gq_squarefree(h);
                if (hsf.degree() == 1) {
                    GaussianRational t_hat = -(hsf.coeff(0) / hsf.coeff(1));
                    push_exact(*s_hat, t_hat, uflip, vflip);
                    continue;
                }
                auto troots = complex_roots_numeric(hsf);
                for (const auto& t0 : troots.roots) {
                    auto t_hat = recognize_gaussian_rational(t0, denom_bound, 1e-6);
                    if (t_hat && hsf.eval(*t_hat).is_zero()) {
                        push_exact(*s_hat, *t_hat, uflip, vflip);
                    } else {
                        push_numeric(s0, t0, uflip, vflip);
                    }
                }
            } else {
                // Numeric fiber.
                auto coeffs = polys[static_cast<size_t>(lead)].eval_outer_numeric_coeffs(s0);
                while (!coeffs.empty() && std::abs(coeffs.back()) < 1e-9 * scale) coeffs.pop_back();
                if (coeffs.size() < 2) continue;
                auto troots = complex_roots_numeric(coeffs);
                for (const auto& t0 : troots.roots) push_numeric(s0, t0, uflip, vflip);
            }
        }
    }

    std::stable_sort(found.begin(), found.end(), [](const FoundCurve& a, const FoundCurve& b) {
        return static_cast<int>(a.certainty) < static_cast<int>(b.certainty);
    });
    return found;
}

}  // namespace k3ent
