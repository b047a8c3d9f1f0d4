#include "k3ent/purelattice.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "k3ent/errors.hpp"

namespace k3ent {

PureType PureType::sorted_desc() const {
    std::array<int, 3> v{k, l, m};
    std::sort(v.begin(), v.end(), std::greater<>());
    return {v[0], v[1], v[2]};
}

std::vector<PureType> PureType::orderings() const {
    std::array<int, 3> v{k, l, m};
    std::sort(v.begin(), v.end());
    std::vector<PureType> out;
    do {
        out.push_back({v[0], v[1], v[2]});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::string PureType::label() const {
    std::ostringstream os;
    os << "(" << k << "," << l << "," << m << ")";
    return os.str();
}

std::optional<PureType> PureType::parse(const std::string& text) {
    std::istringstream is(text);
    int k, l, m;
    char c1, c2;
    if (!(is >> k >> c1 >> l >> c2 >> m) || c1 != ',' || c2 != ',') return std::nullopt;
    std::string rest;
    if (is >> rest) return std::nullopt;
    if (k < 0 || l < 0 || m < 0) return std::nullopt;
    return PureType{k, l, m};
}

bool in_N(const PureType& t) {
    static const std::array<PureType, 4> generators{
        PureType{6, 0, 0}, PureType{5, 1, 1}, PureType{4, 2, 2}, PureType{3, 3, 3}};
    for (const auto& g : generators)
        for (const auto& nu : g.orderings())
            if (PureType::leq(t, nu)) return true;
    return false;
}

std::vector<PureType> enumerate_N_unordered() {
    std::vector<PureType> out;
    for (int k = 0; k <= 6; ++k)
        for (int l = 0; l <= k; ++l)
            for (int m = 0; m <= l; ++m) {
                PureType t{k, l, m};
                if (in_N(t)) out.push_back(t);
            }
    return out;
}

GramLattice build_gram(const PureType& t) {
    const int n = t.rank();
    GramLattice g;
    g.labels = {"Ex", "Ey", "Ez"};
    for (int i = 1; i <= t.k; ++i) g.labels.push_back("Cx" + std::to_string(i));
    for (int i = 1; i <= t.l; ++i) g.labels.push_back("Cy" + std::to_string(i));
    for (int i = 1; i <= t.m; ++i) g.labels.push_back("Cz" + std::to_string(i));

    IntMatrix m(n, n);
    // Fiber block: (E·E) = 0 on the diagonal, 2 off it.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = (i == j) ? 0 : 2;
    // Curves: self-intersection -2, meeting only their own fiber once.
    auto curve_axis = [&](int idx) {  // idx >= 3
        int c = idx - 3;
        if (c < t.k) return 0;
        if (c < t.k + t.l) return 1;
        return 2;
    };
    for (int i = 3; i < n; ++i) {
        m.at(i, i) = -2;
        int a = curve_axis(i);
        m.at(i, a) = 1;
        m.at(a, i) = 1;
    }
    g.gram = std::move(m);
    return g;
}

Integer det_formula(const PureType& t) {
    const int s = t.sum();
    Rational base(-2);
    Rational pw(1);
    if (s >= 3) {
        for (int i = 0; i < s - 3; ++i) pw *= base;
    } else {
        for (int i = 0; i < 3 - s; ++i) pw /= base;
    }
    Rational value = -pw * Rational(128 - 16 * s + t.k * t.l * t.m);
    if (value.get_den() != 1)
        throw NonIntegerResultError("det_formula: non-integer value for " + t.label());
    return value.get_num();
}

GramLattice build_LK3() {
    GramLattice g;
    for (int i = 1; i <= 22; ++i) g.labels.push_back("b" + std::to_string(i));
    IntMatrix m(22, 22);
    // Three hyperbolic planes.
    for (int b = 0; b < 3; ++b) {
        m.at(2 * b, 2 * b + 1) = 1;
        m.at(2 * b + 1, 2 * b) = 1;
    }
    // Two copies of the rank-8 block.
    static const int e8[8][8] = {
        {-2, 0, 0, 1, 0, 0, 0, 0},
        {0, -2, 1, 0, 0, 0, 0, 0},
        {0, 1, -2, 1, 0, 0, 0, 0},
        {1, 0, 1, -2, 1, 0, 0, 0},
        {0, 0, 0, 1, -2, 1, 0, 0},
        {0, 0, 0, 0, 1, -2, 1, 0},
        {0, 0, 0, 0, 0, 1, -2, 1},
        {0, 0, 0, 0, 0, 0, 1, -2},
    };
    for (int copy = 0; copy < 2; ++copy) {
        const int off = 6 + 8 * copy;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m.at(off + i, off + j) = e8[i][j];
    }
    g.gram = std::move(m);
    return g;
}

std::optional<EmbeddingName> embedding_name_from_string(const std::string& s) {
    if (s == "B600") return EmbeddingName::B600;
    if (s == "B511") return EmbeddingName::B511;
    if (s == "B422") return EmbeddingName::B422;
    if (s == "B332") return EmbeddingName::B332;
    return std::nullopt;
}

std::string embedding_name_str(EmbeddingName n) {
    switch (n) {
        case EmbeddingName::B600: return "B600";
        case EmbeddingName::B511: return "B511";
        case EmbeddingName::B422: return "B422";
        case EmbeddingName::B332: return "B332";
    }
    return "?";
}

PureType embedding_expected_type(EmbeddingName n) {
    switch (n) {
        case EmbeddingName::B600: return {6, 0, 0};
        case EmbeddingName::B511: return {5, 1, 1};
        case EmbeddingName::B422: return {4, 2, 2};
        case EmbeddingName::B332: return {3, 3, 2};
    }
    return {0, 0, 0};
}

namespace {

// beta indices are 1-based, matching the displayed lists.
std::vector<Integer> beta_comb(std::initializer_list<std::pair<int, int>> terms) {
    std::vector<Integer> v(22, Integer(0));
    for (auto [idx, coeff] : terms) v[idx - 1] += coeff;
    return v;
}

std::vector<Integer> beta(int idx) { return beta_comb({{idx, 1}}); }

}  // namespace

EmbeddingData embedding_vectors(EmbeddingName name) {
    EmbeddingData e;
    e.name = name;
    switch (name) {
        case EmbeddingName::B600:
            e.vectors = {
                beta_comb({{1, 1}, {2, 2}, {4, 1}, {6, 1}, {10, 1}, {18, 1}}),
                beta_comb({{3, 1}, {2, 1}, {6, 1}}),
                beta_comb({{5, 1}, {2, 1}, {4, 1}}),
                beta(7), beta(9), beta(11), beta(15), beta(17), beta(19)};
            break;
        case EmbeddingName::B511:
            e.vectors = {
                beta_comb({{1, 1}, {2, 2}, {4, 1}, {6, 1}, {10, 1}, {18, 1}}),
                beta_comb({{3, 1}, {4, 1}, {2, 1}, {6, 1}, {13, 1}}),
                beta_comb({{5, 1}, {6, 1}, {2, 1}, {4, 1}, {21, 1}}),
                beta(7), beta(9), beta(11), beta(14), beta(15), beta(17), beta(22)};
            break;
        case EmbeddingName::B422:
            e.vectors = {
                beta_comb({{1, 1}, {2, 2}, {4, 1}, {6, 1}, {10, 1}, {18, 1}}),
                beta_comb({{3, 1}, {4, 1}, {2, 1}, {6, 1}, {13, 1}}),
                beta_comb({{5, 1}, {6, 1}, {2, 1}, {4, 1}, {21, 1}}),
                beta(7), beta(9), beta(12), beta(14), beta(15), beta(17), beta(20), beta(22)};
            break;
        case EmbeddingName::B332:
            e.vectors = {
                beta_comb({{1, 1}, {2, 1}, {4, 1}, {6, 1}, {10, 1}}),
                beta_comb({{3, 1}, {4, 1}, {2, 1}, {6, 1}, {18, 1}}),
                beta_comb({{5, 1}, {6, 2}, {2, 1}, {4, 1}, {13, 1}, {21, 1}}),
                beta(7), beta(9), beta(11), beta(14), beta(15), beta(17), beta(19), beta(22)};
            break;
    }
    return e;
}

EmbeddingReport check_embedding(const EmbeddingData& e, const PureType& expected) {
    const int r = static_cast<int>(e.vectors.size());
    for (const auto& v : e.vectors)
        if (v.size() != 22)
            throw DimensionMismatchError("check_embedding: vectors must have length 22");

    const IntMatrix mk3 = build_LK3().gram;
    IntMatrix coords(22, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < 22; ++i) coords.at(i, j) = e.vectors[j][i];

    IntMatrix pairings = coords.transpose() * mk3 * coords;

    EmbeddingReport rep;
    for (int j = 0; j < r; ++j) rep.self_ints.push_back(pairings.at(j, j));

    // Primitivity: the column span is a direct summand iff every SNF
    // invariant factor is 1 (full column rank included).
    SnfResult snf = smith_normal_form(coords);
    rep.invariant_factors = snf.invariant_factors();
    rep.primitive = static_cast<int>(rep.invariant_factors.size()) == r &&
                    std::all_of(rep.invariant_factors.begin(), rep.invariant_factors.end(),
                                [](const Integer& d) { return d == 1; });

    // Gram comparison in the canonical basis order: the three fiber
    // images first, then curve vectors grouped by the unique fiber they
    // pair to 1 with.
    rep.gram_ok = false;
    if (r == expected.rank()) {
        std::vector<int> order = {0, 1, 2};
        bool classifiable = r >= 3;
        std::vector<std::vector<int>> by_axis(3);
        for (int j = 3; j < r && classifiable; ++j) {
            int axis = -1;
            for (int a = 0; a < 3; ++a) {
                if (pairings.at(j, a) == 1) {
                    if (axis >= 0) {
                        classifiable = false;
                        break;
                    }
                    axis = a;
                } else if (pairings.at(j, a) != 0) {
                    classifiable = false;
                    break;
                }
            }
            if (axis < 0) classifiable = false;
            if (classifiable) by_axis[axis].push_back(j);
        }
        if (classifiable) {
            for (const auto& grp : by_axis)
                for (int j : grp) order.push_back(j);
            IntMatrix sorted(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sorted.at(i, j) = pairings.at(order[i], order[j]);
            rep.gram_ok = sorted == build_gram(expected).gram;
        }
    }
    return rep;
}

}  // namespace k3ent
