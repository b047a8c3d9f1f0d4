#include "k3ent/intmatrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "k3ent/errors.hpp"

namespace k3ent {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    for (const auto& r : rows) cols_ = std::max(cols_, static_cast<int>(r.size()));
    a_.assign(static_cast<size_t>(rows_) * cols_, Integer(0));
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long v : r) at(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatchError("IntMatrix: product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatchError("IntMatrix: sum dimension mismatch");
    IntMatrix c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatchError("IntMatrix: difference dimension mismatch");
    IntMatrix c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

IntMatrix IntMatrix::operator*(const Integer& s) const {
    IntMatrix c = *this;
    for (auto& v : c.a_) v *= s;
    return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Integer IntMatrix::trace() const {
    if (!is_square()) throw NonSquareError("IntMatrix: trace of non-square matrix");
    Integer t(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Integer IntMatrix::det_bareiss() const {
    if (!is_square()) throw NonSquareError("IntMatrix: determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return Integer(1);
    IntMatrix m = *this;
    Integer prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Integer(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Integer num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                // Exact by the Bareiss identity.
                m.at(i, j) = num / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Integer det = m.at(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

int IntMatrix::rank() const {
    IntMatrix m = *this;
    const int r = rows_, c = cols_;
    int rank = 0;
    Integer prev(1);
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int pivot = -1;
        for (int i = row; i < r; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < c; ++j) std::swap(m.at(row, j), m.at(pivot, j));
        for (int i = row + 1; i < r; ++i) {
            for (int j = col + 1; j < c; ++j) {
                Integer num = m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j);
                m.at(i, j) = num / prev;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.str(); }

std::vector<Integer> SnfResult::invariant_factors() const {
    std::vector<Integer> f;
    const int n = std::min(d.rows(), d.cols());
    for (int i = 0; i < n; ++i)
        if (d.at(i, i) != 0) f.push_back(d.at(i, i));
    return f;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    const int r = d.rows(), c = d.cols();
    const int steps = std::min(r, c);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int t = 0; t < c; ++t) std::swap(d.at(i, t), d.at(j, t));
        for (int t = 0; t < u.cols(); ++t) std::swap(u.at(i, t), u.at(j, t));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int t = 0; t < r; ++t) std::swap(d.at(t, i), d.at(t, j));
        for (int t = 0; t < v.rows(); ++t) std::swap(v.at(t, i), v.at(t, j));
    };
    auto add_row = [&](int dst, int src, const Integer& f) {
        if (f == 0) return;
        for (int t = 0; t < c; ++t) d.at(dst, t) += f * d.at(src, t);
        for (int t = 0; t < u.cols(); ++t) u.at(dst, t) += f * u.at(src, t);
    };
    auto add_col = [&](int dst, int src, const Integer& f) {
        if (f == 0) return;
        for (int t = 0; t < r; ++t) d.at(t, dst) += f * d.at(t, src);
        for (int t = 0; t < v.rows(); ++t) v.at(t, dst) += f * v.at(t, src);
    };
    auto negate_row = [&](int i) {
        for (int t = 0; t < c; ++t) d.at(i, t) = -d.at(i, t);
        for (int t = 0; t < u.cols(); ++t) u.at(i, t) = -u.at(i, t);
    };

    for (int k = 0; k < steps; ++k) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        while (true) {
            int pi = -1, pj = -1;
            Integer best(0);
            for (int i = k; i < r; ++i)
                for (int j = k; j < c; ++j) {
                    if (d.at(i, j) == 0) continue;
                    Integer a = abs(d.at(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;  // trailing block zero; done
            swap_rows(k, pi);
            swap_cols(k, pj);

            bool reduced = true;
            for (int i = k + 1; i < r; ++i) {
                if (d.at(i, k) == 0) continue;
                Integer q;
                // Round-to-nearest quotient keeps pivots small.
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, k).get_mpz_t(), d.at(k, k).get_mpz_t());
                add_row(i, k, -q);
                if (d.at(i, k) != 0) reduced = false;
            }
            for (int j = k + 1; j < c; ++j) {
                if (d.at(k, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(k, j).get_mpz_t(), d.at(k, k).get_mpz_t());
                add_col(j, k, -q);
                if (d.at(k, j) != 0) reduced = false;
            }
            if (!reduced) continue;  // pivot changed; retry with new minimum

            // Pivot must divide the trailing block for the factor chain.
            bool divides = true;
            for (int i = k + 1; i < r && divides; ++i)
                for (int j = k + 1; j < c && divides; ++j)
                    if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(k, k).get_mpz_t())) {
                        add_row(k, i, Integer(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(k, k) < 0) negate_row(k);
    }
    return res;
}

std::vector<Rational> solve_rational(const IntMatrix& a, const std::vector<Rational>& b) {
    if (!a.is_square()) throw NonSquareError("solve_rational: matrix must be square");
    const int n = a.rows();
    if (static_cast<int>(b.size()) != n)
        throw DimensionMismatchError("solve_rational: rhs size mismatch");
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rational(a.at(i, j));
        m[i][n] = b[i];
    }
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularGramError("solve_rational: singular matrix");
        std::swap(m[k], m[pivot]);
        Rational inv = 1 / m[k][k];
        for (int j = k; j <= n; ++j) m[k][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0) continue;
            Rational f = m[i][k];
            for (int j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

}  // namespace k3ent
