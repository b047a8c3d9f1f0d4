#include "k3ent/picard.hpp"

#include <algorithm>

#include "k3ent/errors.hpp"

namespace k3ent {

std::string Generator::label() const {
    if (is_fiber()) return std::string("E") + axis_name(fiber_axis_);
    return curve_->label();
}

Integer intersection(const Generator& a, const Generator& b) {
    if (a.is_fiber() && b.is_fiber()) return a.axis() == b.axis() ? 0 : 2;
    if (a.is_fiber() != b.is_fiber()) {
        const Generator& fiber = a.is_fiber() ? a : b;
        const Generator& curve = a.is_fiber() ? b : a;
        return curve.axis() == fiber.axis() ? 1 : 0;
    }
    const AxisCurve& ca = a.as_curve();
    const AxisCurve& cb = b.as_curve();
    if (ca.axis() == cb.axis()) return same_curve(ca, cb) ? -2 : 0;
    // Transverse curves share exactly one fixed axis: the third one.
    Axis shared = Axis::x;
    for (Axis ax : kAllAxes)
        if (ax != ca.axis() && ax != cb.axis()) shared = ax;
    return proj_eq(ca.fixed_on(shared), cb.fixed_on(shared)) ? 1 : 0;
}

IntMatrix gram_of(const std::vector<Generator>& generators) {
    const int n = static_cast<int>(generators.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Integer v = intersection(generators[i], generators[j]);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

const std::vector<AxisCurve>& tilde_curves() {
    static const std::vector<AxisCurve> curves = [] {
        const GaussianRational i = GaussianRational::i();
        const GaussianRational mi = -i;
        const GaussianRational tt(make_rational(2, 3));
        const GaussianRational zero(0);
        auto fin = [](const GaussianRational& v) { return ProjPoint::finite(v); };
        const ProjPoint inf = ProjPoint::infinity();
        std::vector<AxisCurve> c;
        c.reserve(24);
        // Display order, left to right, top to bottom.
        c.emplace_back(Axis::z, fin(i), fin(zero));    // C1  = C_{z,(i,0)}
        c.emplace_back(Axis::z, fin(i), inf);          // C2  = C_{z,(i,inf)}
        c.emplace_back(Axis::y, fin(zero), fin(i));    // C3  = C_{y,(0,i)}
        c.emplace_back(Axis::y, inf, fin(i));          // C4  = C_{y,(inf,i)}
        c.emplace_back(Axis::z, fin(tt), fin(i));      // C5  = C_{z,(2/3,i)}
        c.emplace_back(Axis::z, inf, fin(i));          // C6  = C_{z,(inf,i)}
        c.emplace_back(Axis::x, fin(i), fin(zero));    // C7  = C_{x,(i,0)}
        c.emplace_back(Axis::x, fin(i), inf);          // C8  = C_{x,(i,inf)}
        c.emplace_back(Axis::y, fin(i), fin(tt));      // C9  = C_{y,(i,2/3)}
        c.emplace_back(Axis::y, fin(i), inf);          // C10 = C_{y,(i,inf)}
        c.emplace_back(Axis::x, fin(zero), fin(i));    // C11 = C_{x,(0,i)}
        c.emplace_back(Axis::x, inf, fin(i));          // C12 = C_{x,(inf,i)}
        c.emplace_back(Axis::z, fin(mi), fin(zero));   // C13 = C_{z,(-i,0)}
        c.emplace_back(Axis::z, fin(mi), inf);         // C14 = C_{z,(-i,inf)}
        c.emplace_back(Axis::y, fin(zero), fin(mi));   // C15 = C_{y,(0,-i)}
        c.emplace_back(Axis::y, inf, fin(mi));         // C16 = C_{y,(inf,-i)}
        c.emplace_back(Axis::z, fin(tt), fin(mi));     // C17 = C_{z,(2/3,-i)}
        c.emplace_back(Axis::z, inf, fin(mi));         // C18 = C_{z,(inf,-i)}
        c.emplace_back(Axis::x, fin(mi), fin(zero));   // C19 = C_{x,(-i,0)}
        c.emplace_back(Axis::x, fin(mi), inf);         // C20 = C_{x,(-i,inf)}
        c.emplace_back(Axis::y, fin(mi), fin(tt));     // C21 = C_{y,(-i,2/3)}
        c.emplace_back(Axis::y, fin(mi), inf);         // C22 = C_{y,(-i,inf)}
        c.emplace_back(Axis::x, fin(zero), fin(mi));   // C23 = C_{x,(0,-i)}
        c.emplace_back(Axis::x, inf, fin(mi));         // C24 = C_{x,(inf,-i)}
        return c;
    }();
    return curves;
}

const std::vector<Generator>& tilde_generators() {
    static const std::vector<Generator> gens = [] {
        std::vector<Generator> g;
        g.reserve(27);
        for (Axis a : kAllAxes) g.push_back(Generator::fiber(a));
        for (const auto& c : tilde_curves()) g.push_back(Generator::curve(c));
        return g;
    }();
    return gens;
}

const IntMatrix& tilde_pairing_matrix() {
    static const IntMatrix m = gram_of(tilde_generators());
    return m;
}

PicClass PicClass::fiber(Axis a) {
    PicClass c;
    c[static_cast<int>(a)] = 1;
    return c;
}

PicClass PicClass::curve(int index) {
    if (index < 1 || index > 24) throw UnknownNameError("PicClass: curve index out of range");
    PicClass c;
    c[2 + index] = 1;
    return c;
}

PicClass PicClass::operator-() const {
    PicClass r;
    for (int i = 0; i < size(); ++i) r[i] = -c_[i];
    return r;
}

PicClass operator+(const PicClass& a, const PicClass& b) {
    PicClass r;
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

PicClass operator-(const PicClass& a, const PicClass& b) {
    PicClass r;
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

PicClass PicClass::operator*(const Integer& s) const {
    PicClass r;
    for (int i = 0; i < size(); ++i) r[i] = c_[i] * s;
    return r;
}

Integer pic_pairing(const PicClass& a, const PicClass& b) {
    const IntMatrix& p = tilde_pairing_matrix();
    Integer acc(0);
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            acc += a[i] * p.at(i, j) * b[j];
        }
    }
    return acc;
}

bool verify_relation(const PicClass& lhs, const PicClass& rhs) {
    PicClass d = lhs - rhs;
    const IntMatrix& p = tilde_pairing_matrix();
    for (int g = 0; g < 27; ++g) {
        Integer acc(0);
        for (int i = 0; i < 27; ++i)
            if (d[i] != 0) acc += d[i] * p.at(i, g);
        if (acc != 0) return false;
    }
    return true;
}

namespace {

std::vector<int> canonical_selection_order(const std::vector<int>& selection) {
    std::vector<int> fibers, curves_by_axis[3];
    for (int idx : selection) {
        if (idx < 0 || idx >= 27) throw UnknownNameError("selection index out of range");
        if (idx < 3)
            fibers.push_back(idx);
        else
            curves_by_axis[static_cast<int>(tilde_curves()[idx - 3].axis())].push_back(idx);
    }
    std::sort(fibers.begin(), fibers.end());
    std::vector<int> order = fibers;
    for (auto& grp : curves_by_axis)
        for (int idx : grp) order.push_back(idx);
    return order;
}

}  // namespace

bool sublattice_check(const std::vector<int>& selection, const PureType& expected) {
    if (static_cast<int>(selection.size()) != expected.rank()) return false;
    auto order = canonical_selection_order(selection);
    const IntMatrix& p = tilde_pairing_matrix();
    const int n = static_cast<int>(order.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = p.at(order[i], order[j]);
    return m == build_gram(expected).gram;
}

std::vector<PicRelation> tilde_relations() {
    auto E = [](Axis a) { return PicClass::fiber(a); };
    auto C = [](int i) { return PicClass::curve(i); };
    std::vector<PicRelation> rels;

    // [C24] = 2Ey + 2Ez - 2Ex - C7 - C8 - C11 - C12 - C19 - C20 - C23
    rels.push_back({"C24", C(24),
                    E(Axis::y) * 2 + E(Axis::z) * 2 - E(Axis::x) * 2 - C(7) - C(8) - C(11) -
                        C(12) - C(19) - C(20) - C(23)});
    // [C22] = C11 + C12 - C21 + 2Ex - 2Ey - Ez + C7 + C8 + C19 + C20
    rels.push_back({"C22a", C(22),
                    C(11) + C(12) - C(21) + E(Axis::x) * 2 - E(Axis::y) * 2 - E(Axis::z) + C(7) +
                        C(8) + C(19) + C(20)});
    // [C22] = -C21 + 2Ex - 2Ey - C9 - C10 + C7 + C8 + C19 + C20
    rels.push_back({"C22b", C(22),
                    -C(21) + E(Axis::x) * 2 - E(Axis::y) * 2 - C(9) - C(10) + C(7) + C(8) + C(19) +
                        C(20)});
    return rels;
}

std::vector<NamedSelection> tilde_sublattice_selections() {
    auto sel = [](std::initializer_list<int> curves) {
        std::vector<int> s{0, 1, 2};
        for (int c : curves) s.push_back(2 + c);
        return s;
    };
    return {
        {"L600", sel({7, 8, 11, 12, 19, 20}), {6, 0, 0}},
        {"L511", sel({2, 7, 8, 11, 19, 20, 21}), {5, 1, 1}},
        {"L422", sel({1, 2, 7, 8, 9, 10, 19, 20}), {4, 2, 2}},
        {"L333", sel({1, 2, 7, 8, 9, 10, 13, 19, 21}), {3, 3, 3}},
        {"L700", sel({7, 8, 11, 12, 19, 20, 23}), {7, 0, 0}},
        {"L610", sel({7, 8, 11, 12, 19, 20, 21}), {6, 1, 0}},
        {"L520", sel({7, 8, 11, 19, 20, 21, 22}), {5, 2, 0}},
        {"L430", sel({7, 8, 9, 10, 19, 20, 21}), {4, 3, 0}},
    };
}

BasisExpression express_in_basis(const PicClass& target, const std::vector<int>& basis) {
    const int r = static_cast<int>(basis.size());
    const IntMatrix& p = tilde_pairing_matrix();

    IntMatrix g(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) g.at(i, j) = p.at(basis[i], basis[j]);

    std::vector<Rational> rhs(r);
    for (int i = 0; i < r; ++i) {
        Integer acc(0);
        for (int t = 0; t < 27; ++t)
            if (target[t] != 0) acc += target[t] * p.at(t, basis[i]);
        rhs[i] = Rational(acc);
    }

    std::vector<Rational> coeffs;
    try {
        coeffs = solve_rational(g, rhs);
    } catch (const SingularGramError&) {
        throw SingularGramError("express_in_basis: degenerate Gram matrix");
    }

    // Residual class must pair to zero with every generator.
    for (int gidx = 0; gidx < 27; ++gidx) {
        Rational acc(0);
        for (int t = 0; t < 27; ++t)
            if (target[t] != 0) acc += Rational(target[t] * p.at(t, gidx));
        for (int i = 0; i < r; ++i) acc -= coeffs[i] * Rational(p.at(basis[i], gidx));
        if (acc != 0)
            throw NotInSpanError("express_in_basis: target is not in the span of the basis");
    }

    BasisExpression out;
    out.coeffs = coeffs;
    out.integral = std::all_of(coeffs.begin(), coeffs.end(),
                               [](const Rational& q) { return q.get_den() == 1; });
    return out;
}

}  // namespace k3ent
