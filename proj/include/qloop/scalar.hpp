#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qloop/laurent.hpp"

namespace qloop {

// Element of the ground field Q(t), t = q^(1/2), as a reduced fraction of
// Laurent polynomials. Canonical form: gcd(num, den) = 1, den has lowest
// t-degree 0 and leading coefficient 1; zero is 0/1. Equality is structural.
class Scalar {
public:
    Scalar() : num_(), den_(Rat(1)) {}

    Scalar(const Rat& r) : num_(r), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)

    Scalar(long n) : num_(Rat(n)), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)

    Scalar(Laurent num, Laurent den) { assign(std::move(num), std::move(den)); }

    static Scalar tpow(long k) { return Scalar(Laurent::tpow(k), Laurent(Rat(1))); }

    // q = t^2; q^k.
    static Scalar qpow(long k) { return tpow(2 * k); }

    static Scalar q() { return qpow(1); }

    // q^e for rational e with at most half-integer part (exponent of t = 2e).
    static Scalar qpow_halfint(const Rat& e) {
        Rat te = e * 2;
        if (!is_integer(te))
            throw std::domain_error("Scalar: q-exponent must be a half-integer, got " + rat_str(e));
        return tpow(to_long(te));
    }

    // kappa_q = q - q^-1.
    static Scalar kappa() { return qpow(1) - qpow(-1); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend Scalar operator-(const Scalar& a) {
        Scalar out;
        out.num_ = -a.num_;
        out.den_ = a.den_;
        return out;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) {
            Scalar out;
            out.num_ = a.num_ + b.num_;
            out.den_ = Laurent(Rat(1));
            return out;
        }
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.den_.is_one() && b.den_.is_one()) {
            Scalar out;
            out.num_ = a.num_ * b.num_;
            out.den_ = Laurent(Rat(1));
            return out;
        }
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        if (a.is_zero()) return Scalar();
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
        return Scalar(den_, num_);
    }

    Scalar pow(long e) const {
        if (e == 0) return Scalar(Rat(1));
        Scalar base = e < 0 ? inverse() : *this;
        long n = e < 0 ? -e : e;
        Scalar acc(Rat(1));
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Substitute a rational value for t. Throws on a pole of the reduced form.
    Rat eval_at(const Rat& t_value) const {
        Rat d = den_.eval(t_value);
        if (d == 0) throw std::domain_error("Scalar: pole at t = " + rat_str(t_value));
        return num_.eval(t_value) / d;
    }

    // If the value is c * q^e for a rational number c and half-integer q-power,
    // returns (c, e); otherwise nullopt.
    std::optional<std::pair<Rat, Rat>> as_monomial_q_power() const {
        if (!den_.is_one()) return std::nullopt;
        if (num_.is_zero()) return std::nullopt;
        if (num_.span() != 1) return std::nullopt;
        return std::make_pair(num_.trailing(), rat_of(num_.min_deg(), 2));
    }

    // If the value is exactly q^e, returns e.
    std::optional<Rat> as_q_power() const {
        auto m = as_monomial_q_power();
        if (!m || m->first != 1) return std::nullopt;
        return m->second;
    }

    std::string str() const;

    static Scalar parse(const std::string& text);

private:
    void assign(Laurent num, Laurent den) {
        if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
        if (num.is_zero()) {
            num_ = Laurent();
            den_ = Laurent(Rat(1));
            return;
        }
        Laurent g = gcd_poly(num, den);
        if (!g.is_one()) {
            // gcd_poly ignores t-offsets, so divide the offset-free parts.
            long no = num.min_deg(), do_ = den.min_deg();
            num = divexact(num.shifted(-no), g).shifted(no);
            den = divexact(den.shifted(-do_), g).shifted(do_);
        }
        // Denominator: lowest t-degree 0, leading coefficient 1.
        long shift = den.min_deg();
        den = den.shifted(-shift);
        num = num.shifted(-shift);
        Rat lc = den.leading();
        if (lc != 1) {
            den = den * (Rat(1) / lc);
            num = num * (Rat(1) / lc);
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    Laurent num_;
    Laurent den_;
};

// [n]_q = (q^n - q^-n) / (q - q^-1), computed by exact division.
inline Scalar qnum(long n) {
    if (n == 0) return Scalar();
    Laurent top = Laurent::tpow(2 * n) - Laurent::tpow(-2 * n);
    Laurent bot = Laurent::tpow(2) - Laurent::tpow(-2);
    return Scalar(divexact(top, bot), Laurent(Rat(1)));
}

// [n]_q! with [0]_q! = 1.
inline Scalar qfact(long n) {
    if (n < 0) throw std::domain_error("qfact: negative argument");
    Scalar acc(Rat(1));
    for (long m = 1; m <= n; ++m) acc = acc * qnum(m);
    return acc;
}

namespace detail {

inline void render_q_exponent(std::ostream& os, long tdeg) {
    // Even t-powers print as integer q-powers, odd ones as q^(k/2).
    if (tdeg == 2) {
        os << "q";
    } else if (tdeg % 2 == 0) {
        os << "q^" << tdeg / 2;
    } else {
        os << "q^(" << tdeg << "/2)";
    }
}

inline void render_laurent(std::ostream& os, const Laurent& p) {
    if (p.is_zero()) {
        os << "0";
        return;
    }
    bool first = true;
    // Highest degree first.
    for (long d = p.max_deg(); d >= p.min_deg(); --d) {
        Rat c = p.coeff_at(d);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (d == 0) {
            os << rat_str(mag);
        } else {
            if (mag != 1) os << rat_str(mag) << "*";
            render_q_exponent(os, d);
        }
    }
}

}  // namespace detail

inline std::string Scalar::str() const {
    std::ostringstream os;
    if (den_.is_one()) {
        detail::render_laurent(os, num_);
    } else {
        os << "(";
        detail::render_laurent(os, num_);
        os << ")/(";
        detail::render_laurent(os, den_);
        os << ")";
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& text) : s_(text) {}

    Scalar parse() {
        skip_ws();
        Scalar out;
        if (peek() == '(') {
            Laurent num = parse_paren_poly();
            skip_ws();
            expect('/');
            Laurent den = parse_paren_poly();
            out = Scalar(num, den);
        } else {
            out = Scalar(parse_poly(), Laurent(Rat(1)));
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return out;
    }

private:
    Laurent parse_paren_poly() {
        skip_ws();
        expect('(');
        Laurent p = parse_poly();
        skip_ws();
        expect(')');
        return p;
    }

    Laurent parse_poly() {
        Laurent acc;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            Laurent t = parse_term();
            acc = acc + (neg ? -t : t);
            skip_ws();
            if (peek() == '+') {
                neg = false;
                ++pos_;
            } else if (peek() == '-') {
                neg = true;
                ++pos_;
            } else {
                break;
            }
        }
        return acc;
    }

    Laurent parse_term() {
        skip_ws();
        Rat coef(1);
        bool saw_coef = false;
        if (std::isdigit(peek())) {
            coef = parse_rational();
            saw_coef = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else if (peek() != 'q') {
                return Laurent(coef);
            }
        }
        if (peek() == 'q') {
            long tdeg = parse_q_power();
            return Laurent::term(coef, tdeg);
        }
        if (!saw_coef) fail("expected term");
        return Laurent(coef);
    }

    // Returns the t-degree of the parsed q-power.
    long parse_q_power() {
        expect('q');
        if (peek() != '^') return 2;
        ++pos_;
        if (peek() == '(') {
            ++pos_;
            skip_ws();
            long num = parse_signed_int();
            skip_ws();
            expect('/');
            skip_ws();
            long den = parse_signed_int();
            skip_ws();
            expect(')');
            if (den != 2) fail("q-exponent denominator must be 2");
            return num;
        }
        return 2 * parse_signed_int();
    }

    Rat parse_rational() {
        std::size_t start = pos_;
        while (std::isdigit(peek())) ++pos_;
        if (start == pos_) fail("expected number");
        std::string num = s_.substr(start, pos_ - start);
        // A '/' directly followed by a digit is a rational coefficient; the
        // num/den split of a Scalar always parenthesizes, so no ambiguity.
        if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(s_[pos_ + 1])) {
            ++pos_;
            std::size_t dstart = pos_;
            while (std::isdigit(peek())) ++pos_;
            return rat_parse(num + "/" + s_.substr(dstart, pos_ - dstart));
        }
        return rat_parse(num);
    }

    long parse_signed_int() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (std::isdigit(peek())) ++pos_;
        if (start == pos_) fail("expected integer");
        long v = std::stol(s_.substr(start, pos_ - start));
        return neg ? -v : v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("Scalar parse error at position " + std::to_string(pos_) +
                                    ": " + why + " in '" + s_ + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text) { return detail::ScalarParser(text).parse(); }

}  // namespace qloop
