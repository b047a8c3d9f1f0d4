#include "k3ent/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "k3ent/errors.hpp"

namespace k3ent {

namespace {

// Basis layout: 0,1,2 = Ex,Ey,Ez; then k x-curves, l y-curves, m z-curves.
int fiber_index(Axis a) { return static_cast<int>(a); }

std::pair<int, int> curve_range(const PureType& t, Axis a) {
    switch (a) {
        case Axis::x: return {3, 3 + t.k};
        case Axis::y: return {3 + t.k, 3 + t.k + t.l};
        case Axis::z: return {3 + t.k + t.l, 3 + t.k + t.l + t.m};
    }
    return {3, 3};
}

}  // namespace

IsometryMatrix tau_star(Axis axis, const PureType& t) {
    const int n = t.rank();
    GramLattice g = build_gram(t);
    IntMatrix a(n, n);

    auto [o1, o2] = companion_axes(axis);

    // Transverse fibers fixed.
    a.at(fiber_index(o1), fiber_index(o1)) = 1;
    a.at(fiber_index(o2), fiber_index(o2)) = 1;

    // Curves parallel to the axis fixed.
    auto [pb, pe] = curve_range(t, axis);
    for (int j = pb; j < pe; ++j) a.at(j, j) = 1;

    // A transverse curve maps to (third fiber) - (curve).
    for (Axis other : {o1, o2}) {
        Axis third = (other == o1) ? o2 : o1;
        auto [cb, ce] = curve_range(t, other);
        for (int j = cb; j < ce; ++j) {
            a.at(fiber_index(third), j) = 1;
            a.at(j, j) = -1;
        }
    }

    // The parallel fiber.
    const int ei = fiber_index(axis);
    a.at(ei, ei) = -1;
    a.at(fiber_index(o1), ei) = 2;
    a.at(fiber_index(o2), ei) = 2;
    for (int j = pb; j < pe; ++j) a.at(j, ei) = -1;

    return {t, g.labels, std::move(a)};
}

IsometryMatrix f_star(const PureType& t) {
    IsometryMatrix tx = tau_star(Axis::x, t);
    IsometryMatrix ty = tau_star(Axis::y, t);
    IsometryMatrix tz = tau_star(Axis::z, t);
    // (g∘h)* = h*∘g*, so f = tau_z∘tau_y∘tau_x pulls back to Tx·Ty·Tz.
    return {t, tx.basis, tx.entries * ty.entries * tz.entries};
}

bool is_isometry(const IntMatrix& a, const IntMatrix& gram) {
    if (!a.is_square() || !gram.is_square() || a.rows() != gram.rows())
        throw DimensionMismatchError("is_isometry: dimension mismatch");
    return a.transpose() * gram * a == gram;
}

IntPolynomial char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw NonSquareError("char_poly: matrix must be square");
    const int n = a.rows();
    std::vector<Integer> c(n + 1, Integer(0));
    c[n] = 1;
    if (n == 0) return IntPolynomial(std::move(c));
    IntMatrix mk = a;
    c[n - 1] = -mk.trace();
    for (int k = 2; k <= n; ++k) {
        IntMatrix shifted = mk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
        mk = a * shifted;
        Integer tr = mk.trace();
        // The recurrence divides exactly over Z.
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(k)))
            throw NonIntegerResultError("char_poly: Faddeev-LeVerrier trace not divisible");
        c[n - k] = -(tr / k);
    }
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, std::vector<CyclotomicPart>> strip_cyclotomic(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw NonMonicError("strip_cyclotomic: input must be monic");
    IntPolynomial salem = p;
    std::vector<CyclotomicPart> parts;
    for (int n = 1; n <= 1000; ++n) {
        if (salem.degree() == 0) break;
        if (euler_phi(n) > salem.degree()) continue;
        IntPolynomial phi = cyclotomic(n);
        int mult = 0;
        IntPolynomial quotient;
        while (salem.divide_exact(phi, quotient)) {
            salem = quotient;
            ++mult;
        }
        if (mult > 0) parts.push_back({n, mult});
    }
    return {salem, parts};
}

SpectralData spectral_radius(const IsometryMatrix& a, double tol) {
    IntPolynomial cp = char_poly(a.entries);
    auto [salem, parts] = strip_cyclotomic(cp);
    if (salem.degree() <= 0) return {1.0, IntPolynomial({-1, 1})};
    auto roots = isolate_real_roots(salem);
    if (roots.empty())
        throw NoSignChangeError("spectral_radius: Salem factor has no real roots");
    const auto& top = roots.back();
    double lambda = refine_root(salem, top.lo, top.hi, tol);
    return {lambda, salem};
}

EntropyRow entropy_row(const PureType& t, double tol) {
    IsometryMatrix f = f_star(t);
    EntropyRow row;
    row.type = t.sorted_desc();
    row.characteristic = char_poly(f.entries);
    auto [salem, parts] = strip_cyclotomic(row.characteristic);
    row.cyclotomic_parts = parts;
    if (salem.degree() <= 0) {
        row.lambda = 1.0;
        row.min_poly = IntPolynomial({-1, 1});
    } else {
        auto roots = isolate_real_roots(salem);
        row.lambda = refine_root(salem, roots.back().lo, roots.back().hi, tol);
        row.min_poly = salem;
    }
    row.entropy = std::log(row.lambda);
    return row;
}

std::vector<EntropyRow> entropy_table() {
    std::vector<EntropyRow> rows;
    for (const auto& t : enumerate_N_unordered()) rows.push_back(entropy_row(t));
    return rows;
}

bool permutation_invariance_check(const PureType& t) {
    auto orders = t.orderings();
    SpectralData base = spectral_radius(f_star(orders.front()));
    for (size_t i = 1; i < orders.size(); ++i) {
        SpectralData cur = spectral_radius(f_star(orders[i]));
        if (cur.min_poly != base.min_poly) return false;
        if (std::abs(cur.lambda - base.lambda) > 1e-9) return false;
    }
    return true;
}

std::vector<MonotonicityViolation> monotonicity_check() {
    auto rows = entropy_table();
    std::vector<MonotonicityViolation> violations;
    for (const auto& a : rows) {
        for (const auto& b : rows) {
            if (a.type == b.type) continue;
            if (!PureType::leq(a.type, b.type)) continue;
            // a < b componentwise: lambda must strictly drop.
            if (!(a.lambda > b.lambda + 1e-6))
                violations.push_back({a.type, b.type, a.lambda, b.lambda});
        }
    }
    return violations;
}

}  // namespace k3ent
