#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3ent/intmatrix.hpp"

namespace k3ent {

/// Ordered triple (k,l,m): number of parallel curves per axis.
struct PureType {
    int k = 0, l = 0, m = 0;

    int sum() const { return k + l + m; }
    int rank() const { return 3 + sum(); }

    /// Unordered canonical form, components descending.
    PureType sorted_desc() const;

    /// All distinct orderings of the triple.
    std::vector<PureType> orderings() const;

    /// Componentwise a <= b.
    static bool leq(const PureType& a, const PureType& b) {
        return a.k <= b.k && a.l <= b.l && a.m <= b.m;
    }

    friend bool operator==(const PureType& a, const PureType& b) {
        return a.k == b.k && a.l == b.l && a.m == b.m;
    }
    friend bool operator!=(const PureType& a, const PureType& b) { return !(a == b); }
    friend bool operator<(const PureType& a, const PureType& b) {
        if (a.k != b.k) return a.k < b.k;
        if (a.l != b.l) return a.l < b.l;
        return a.m < b.m;
    }

    std::string label() const;  // "(k,l,m)"
    static std::optional<PureType> parse(const std::string& text);  // "k,l,m"
};

/// Labeled integer symmetric pairing matrix.
struct GramLattice {
    std::vector<std::string> labels;
    IntMatrix gram;
};

/// Membership in N: (k,l,m) <= some permutation of (6,0,0), (5,1,1),
/// (4,2,2) or (3,3,3).
bool in_N(const PureType& t);

/// The 30 unordered triples of N, components descending, in
/// lexicographic order.
std::vector<PureType> enumerate_N_unordered();

/// M_{k,l,m} in the basis Ex, Ey, Ez, x-curves, y-curves, z-curves.
GramLattice build_gram(const PureType& t);

/// -(-2)^(k+l+m-3) · (128 - 16(k+l+m) + klm), evaluated exactly.
Integer det_formula(const PureType& t);

/// The even unimodular rank-22 lattice: three hyperbolic planes
/// (b1..b6) followed by two rank-8 blocks (b7..b14, b15..b22).
GramLattice build_LK3();

enum class EmbeddingName { B600, B511, B422, B332 };

std::optional<EmbeddingName> embedding_name_from_string(const std::string& s);
std::string embedding_name_str(EmbeddingName n);
PureType embedding_expected_type(EmbeddingName n);

struct EmbeddingData {
    EmbeddingName name;
    std::vector<std::vector<Integer>> vectors;  // each of length 22, beta basis
};

/// The explicit vector sets of the primitive-embedding construction.
EmbeddingData embedding_vectors(EmbeddingName name);

struct EmbeddingReport {
    bool gram_ok = false;
    bool primitive = false;
    std::vector<Integer> self_ints;          // diagonal pairings, input order
    std::vector<Integer> invariant_factors;  // SNF of the coordinate matrix
};

/// gram_ok: pairwise pairings reproduce build_gram(expected) once the
/// curve vectors are grouped by the fiber they meet; primitive: all SNF
/// invariant factors of the 22×r coordinate matrix equal 1.
EmbeddingReport check_embedding(const EmbeddingData& e, const PureType& expected);

}  // namespace k3ent
