#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "k3ent/gaussian.hpp"

namespace k3ent {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    IntMatrix operator*(const Integer& s) const;
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    bool is_symmetric() const;
    bool is_identity() const;

    /// Exact determinant by Bareiss fraction-free elimination.
    Integer det_bareiss() const;

    /// Rank over Q by fraction-free elimination.
    int rank() const;

    Integer trace() const;

    std::string str() const;  // rows of space-separated integers

private:
    int rows_, cols_;
    std::vector<Integer> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U·m·V = D with U, V unimodular and diagonal d1 | d2 | ... >= 0.
struct SnfResult {
    IntMatrix d, u, v;
    std::vector<Integer> invariant_factors() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Exact solution of a·x = b over Q; throws SingularGram when a is
/// singular (a square).
std::vector<Rational> solve_rational(const IntMatrix& a, const std::vector<Rational>& b);

}  // namespace k3ent
