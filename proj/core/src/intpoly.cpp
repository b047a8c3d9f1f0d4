#include "k3ent/intpoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "k3ent/errors.hpp"

namespace k3ent {

namespace {

// Rational dense polynomials, lowest degree first; internal helpers for
// Euclidean steps and Sturm chains.
using RatPoly = std::vector<Rational>;

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_from(const IntPolynomial& p) {
    RatPoly r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return r;
}

// Remainder of a by b (b nonzero).
RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        Rational q = a.back() / b.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j) a[j + shift] -= q * b[j];
        a.pop_back();
        rp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Scales a nonzero rational polynomial by a positive rational so that it
// becomes integer and primitive, preserving signs.
IntPolynomial rp_primitive(const RatPoly& p) {
    Integer lcm_den(1);
    for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> z;
    z.reserve(p.size());
    Integer content(0);
    for (const auto& c : p) {
        Integer v = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (content == 0) return IntPolynomial::zero();
    for (auto& v : z) v /= content;
    return IntPolynomial(std::move(z));
}

int sign_of(const Rational& q) { return static_cast<int>(sgn(q)); }

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(Integer c) {
    IntPolynomial p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPolynomial::leading() const {
    if (c_.empty()) throw ZeroPolynomialError("IntPolynomial: zero polynomial has no leading coefficient");
    return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return IntPolynomial(std::move(d));
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPolynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

bool IntPolynomial::divide_exact(const IntPolynomial& divisor, IntPolynomial& quotient) const {
    if (divisor.is_zero()) throw DivisionByZeroError("IntPolynomial: division by zero polynomial");
    if (is_zero()) {
        quotient = {};
        return true;
    }
    if (degree() < divisor.degree()) return false;
    std::vector<Integer> rem = c_;
    std::vector<Integer> q(degree() - divisor.degree() + 1, Integer(0));
    const auto& d = divisor.c_;
    for (int k = static_cast<int>(rem.size()) - 1; k >= static_cast<int>(d.size()) - 1; --k) {
        if (rem[k] == 0) continue;
        Integer qk;
        if (!mpz_divisible_p(rem[k].get_mpz_t(), d.back().get_mpz_t())) return false;
        qk = rem[k] / d.back();
        int shift = k - (static_cast<int>(d.size()) - 1);
        q[shift] = qk;
        for (size_t j = 0; j < d.size(); ++j) rem[j + shift] -= qk * d[j];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    quotient = IntPolynomial(std::move(q));
    return true;
}

bool IntPolynomial::is_palindromic() const {
    if (c_.empty()) return false;
    auto rev = c_;
    std::reverse(rev.begin(), rev.end());
    return rev == c_;
}

bool IntPolynomial::is_reciprocal_up_to_sign() const {
    if (c_.empty()) return false;
    auto rev = c_;
    std::reverse(rev.begin(), rev.end());
    if (rev == c_) return true;
    for (auto& c : rev) c = -c;
    return rev == c_;
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = c_[k];
        if (c == 0) continue;
        Integer a = c > 0 ? c : Integer(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k >= 1) {
            os << var;
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    RatPoly r0 = rp_from(a), r1 = rp_from(b);
    rp_trim(r0);
    rp_trim(r1);
    while (!r1.empty()) {
        RatPoly r2 = rp_rem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.empty()) return {};
    IntPolynomial g = rp_primitive(r0);
    if (g.leading() < 0) g = -g;
    return g;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPolynomial({1});
    IntPolynomial g = poly_gcd(p, p.derivative());
    RatPoly num = rp_from(p), den = rp_from(g);
    // Exact over Q since g | p; reduce to a primitive integer quotient.
    RatPoly q;
    {
        RatPoly rem = num;
        int dq = static_cast<int>(num.size()) - static_cast<int>(den.size());
        q.assign(dq + 1, Rational(0));
        for (int k = static_cast<int>(rem.size()) - 1; k >= static_cast<int>(den.size()) - 1; --k) {
            if (rem[k] == 0) continue;
            int shift = k - (static_cast<int>(den.size()) - 1);
            if (shift < 0) break;
            Rational qk = rem[k] / den.back();
            q[shift] = qk;
            for (size_t j = 0; j < den.size(); ++j) rem[j + shift] -= qk * den[j];
        }
    }
    IntPolynomial sf = rp_primitive(q);
    if (!sf.is_zero() && sf.leading() < 0) sf = -sf;
    return sf;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<IntPolynomial, int>> out;
    if (p.degree() == 0) return out;
    IntPolynomial f = p;
    if (f.leading() < 0) f = -f;

    IntPolynomial g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPolynomial w, y;
    if (!f.divide_exact(g, w) || !f.derivative().divide_exact(g, y)) {
        // Content mismatch: fall back to primitive parts.
        IntPolynomial fp = rp_primitive(rp_from(f));
        return squarefree_decomposition(fp);
    }
    int i = 1;
    IntPolynomial z = y - w.derivative();
    while (w.degree() > 0) {
        IntPolynomial fi = poly_gcd(w, z);
        if (fi.is_zero()) fi = IntPolynomial({1});
        if (fi.degree() > 0) out.emplace_back(fi, i);
        IntPolynomial w2, y2;
        if (!w.divide_exact(fi, w2)) throw NonIntegerResultError("Yun: inexact division");
        if (!z.divide_exact(fi, y2)) throw NonIntegerResultError("Yun: inexact division");
        w = std::move(w2);
        z = y2 - w.derivative();
        ++i;
    }
    return out;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPolynomial cyclotomic(int n) {
    static std::map<int, IntPolynomial> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // t^n - 1 divided by all proper cyclotomic divisors.
    std::vector<Integer> tn(n + 1, Integer(0));
    tn[0] = -1;
    tn[n] = 1;
    IntPolynomial phi(std::move(tn));
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        IntPolynomial q;
        if (!phi.divide_exact(cyclotomic(d), q))
            throw NonIntegerResultError("cyclotomic: inexact division");
        phi = std::move(q);
    }
    cache[n] = phi;
    return phi;
}

namespace {

// Sturm chain of a squarefree integer polynomial; each element is scaled
// to a primitive integer polynomial by a positive rational, which leaves
// all sign counts unchanged.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& sf) {
    std::vector<IntPolynomial> chain;
    chain.push_back(sf);
    IntPolynomial d = sf.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const IntPolynomial& a = chain[chain.size() - 2];
        const IntPolynomial& b = chain.back();
        RatPoly r = rp_rem(rp_from(a), rp_from(b));
        if (r.empty()) break;
        IntPolynomial next = rp_primitive(r);
        chain.push_back(-next);
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int sturm_variations(const std::vector<IntPolynomial>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Number of roots of the squarefree polynomial in (lo, hi].
int sturm_count_half_open(const std::vector<IntPolynomial>& chain, const Rational& lo,
                          const Rational& hi) {
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

Rational cauchy_bound(const IntPolynomial& p) {
    Rational maxq(0);
    Rational lead = Rational(p.leading());
    if (lead < 0) lead = -lead;
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = Rational(p.coeff(i)) / lead;
        if (q < 0) q = -q;
        if (q > maxq) maxq = q;
    }
    return maxq + 1;
}

void isolate_rec(const IntPolynomial& sf, const std::vector<IntPolynomial>& chain,
                 const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) {
    int n = sturm_count_half_open(chain, lo, hi);
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi, 1});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (sf.eval(mid) == 0) {
        out.push_back({mid, mid, 1});
        Rational delta = (hi - lo) / 4;
        while (sf.eval(mid - delta) == 0 || sf.eval(mid + delta) == 0 ||
               sturm_count_half_open(chain, mid - delta, mid + delta) != 1) {
            delta /= 2;
        }
        isolate_rec(sf, chain, lo, mid - delta, out);
        isolate_rec(sf, chain, mid + delta, hi, out);
    } else {
        isolate_rec(sf, chain, lo, mid, out);
        isolate_rec(sf, chain, mid, hi, out);
    }
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw ZeroPolynomialError("count_real_roots: zero polynomial");
    IntPolynomial sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    auto chain = sturm_chain(sf);
    int n = sturm_count_half_open(chain, lo, hi);
    if (sf.eval(hi) == 0) --n;
    return n;
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("isolate_real_roots: zero polynomial");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    IntPolynomial sf = squarefree_part(p);
    if (sf.degree() <= 0) return out;
    auto chain = sturm_chain(sf);
    Rational bound = cauchy_bound(sf);
    isolate_rec(sf, chain, -bound, bound, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

    auto decomp = squarefree_decomposition(p);
    if (decomp.size() == 1 && decomp[0].second == 1) return out;  // all simple
    for (auto& iv : out) {
        for (const auto& [f, mult] : decomp) {
            if (f.degree() <= 0) continue;
            bool owns;
            if (iv.lo == iv.hi) {
                owns = f.eval(iv.lo) == 0;
            } else {
                auto fchain = sturm_chain(squarefree_part(f));
                owns = sturm_count_half_open(fchain, iv.lo, iv.hi) == 1;
            }
            if (owns) {
                iv.multiplicity = mult;
                break;
            }
        }
    }
    return out;
}

double refine_root(const IntPolynomial& p, const Rational& lo_in, const Rational& hi_in,
                   double tol) {
    if (p.is_zero()) throw ZeroPolynomialError("refine_root: zero polynomial");
    IntPolynomial sf = squarefree_part(p);
    Rational lo = lo_in, hi = hi_in;
    if (lo == hi) {
        if (sf.eval(lo) == 0) return lo.get_d();
        throw NoSignChangeError("refine_root: point interval is not a root");
    }
    if (lo > hi) std::swap(lo, hi);
    int slo = sign_of(sf.eval(lo));
    int shi = sign_of(sf.eval(hi));
    if (slo == 0) return lo.get_d();
    if (shi == 0) return hi.get_d();
    if (slo == shi)
        throw NoSignChangeError("refine_root: interval does not bracket a root of the squarefree part");
    Rational width = hi - lo;
    Rational rtol(tol);
    while (width >= rtol) {
        Rational mid = (lo + hi) / 2;
        int sm = sign_of(sf.eval(mid));
        if (sm == 0) return mid.get_d();
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
        width = hi - lo;
    }
    Rational mid = (lo + hi) / 2;
    return mid.get_d();
}

}  // namespace k3ent
