#include "k3ent/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "k3ent/errors.hpp"

namespace k3ent {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZeroError("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer num = q.get_num(), den = q.get_den();
    Integer rn, rd;
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return make_rational(rn, rd);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("GaussianRational: inverse of zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw DivisionByZeroError("GaussianRational: division by zero");
    return a * b.inverse();
}

std::optional<GaussianRational> GaussianRational::sqrt() const {
    // Solve (c+di)² = re+im·i exactly: c²-d² = re, 2cd = im,
    // c²+d² = sqrt(norm).
    if (is_zero()) return GaussianRational();
    auto r = rational_sqrt(norm());
    if (!r) return std::nullopt;
    Rational c2 = (re_ + *r) / 2;
    auto c = rational_sqrt(c2);
    if (!c) return std::nullopt;
    GaussianRational root;
    if (*c != 0) {
        Rational d = im_ / (2 * (*c));
        root = GaussianRational(*c, d);
    } else {
        auto d = rational_sqrt(-re_);
        if (!d) return std::nullopt;
        root = GaussianRational(Rational(0), *d);
    }
    if (root * root != *this) return std::nullopt;
    return root;
}

namespace {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// Parses "a" or "a/b" starting at pos; advances pos.
std::optional<Rational> parse_rational_at(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
        pos = start;
        return std::nullopt;
    }
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t den_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_start) {
            pos = start;
            return std::nullopt;
        }
    }
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.substr(start, pos - start).c_str(), 10) != 0) {
        pos = start;
        return std::nullopt;
    }
    q.canonicalize();
    return q;
}

}  // namespace

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) out += rational_str(re_);
    if (im_ != 0) {
        if (im_ == 1) {
            out += out.empty() ? "i" : "+i";
        } else if (im_ == -1) {
            out += "-i";
        } else {
            std::string part = rational_str(im_) + "*i";
            if (!out.empty() && im_ > 0) out += "+";
            out += part;
        }
    }
    return out;
}

std::optional<GaussianRational> GaussianRational::try_parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;

    Rational re(0), im(0);
    size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        size_t term_start = pos;
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        if (pos < s.size() && s[pos] == 'i') {
            // bare "i" / "-i"
            ++pos;
            im += sign;
            any = true;
            continue;
        }
        pos = term_start;
        auto q = parse_rational_at(s, pos);
        if (!q) return std::nullopt;
        if (pos < s.size() && (s[pos] == '*' || s[pos] == 'i')) {
            if (s[pos] == '*') {
                ++pos;
                if (pos >= s.size() || s[pos] != 'i') return std::nullopt;
            }
            ++pos;  // consume 'i'
            im += *q;
        } else {
            re += *q;
        }
        any = true;
    }
    if (!any) return std::nullopt;
    return GaussianRational(re, im);
}

GaussianRational GaussianRational::parse(const std::string& text) {
    auto q = try_parse(text);
    if (!q) throw ParseError("invalid Gaussian rational: \"" + text + "\"");
    return *q;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.str(); }

GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, GqOp op) {
    switch (op) {
        case GqOp::add: return a + b;
        case GqOp::sub: return a - b;
        case GqOp::mul: return a * b;
        case GqOp::div: return a / b;
        case GqOp::conj: return a.conj();
        case GqOp::norm: return GaussianRational(a.norm());
    }
    throw std::invalid_argument("gq_arith: unknown op");
}

}  // namespace k3ent
