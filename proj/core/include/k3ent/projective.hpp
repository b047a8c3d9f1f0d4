#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "k3ent/gaussian.hpp"

namespace k3ent {

/// A point of P¹ over Q(i). The representative (c0, c1) is never (0, 0);
/// equality is projective.
class ProjPoint {
public:
    ProjPoint(GaussianRational c0, GaussianRational c1);

    static ProjPoint finite(GaussianRational v) { return {std::move(v), GaussianRational(1)}; }
    static ProjPoint infinity() { return {GaussianRational(1), GaussianRational(0)}; }

    const GaussianRational& c0() const { return c0_; }
    const GaussianRational& c1() const { return c1_; }

    bool is_infinity() const { return c1_.is_zero(); }

    /// Representative with c1 = 1, or c0 = 1 when c1 = 0.
    ProjPoint canonical() const;

    /// Finite value c0/c1; throws for [1:0].
    GaussianRational affine() const;

    /// "2/3", "i", "inf".
    std::string str() const;
    static ProjPoint parse(const std::string& text);
    static std::optional<ProjPoint> try_parse(const std::string& text);

private:
    GaussianRational c0_, c1_;
};

/// True iff p.c0·q.c1 - p.c1·q.c0 = 0.
bool proj_eq(const ProjPoint& p, const ProjPoint& q);

inline bool operator==(const ProjPoint& p, const ProjPoint& q) { return proj_eq(p, q); }
inline bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !proj_eq(p, q); }

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);

}  // namespace k3ent
