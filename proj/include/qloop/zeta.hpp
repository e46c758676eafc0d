#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

// Monomial in one or more spectral variables: product of zeta_slot^exp.
// Slot 0 is the default spectral parameter; tensor factors evaluated at
// independent spectral points use distinct slots. Exponents are exact
// rationals (in practice integers, e.g. s_i, s - s_ij, n*s).
class ZetaMono {
public:
    ZetaMono() = default;

    static ZetaMono unit() { return ZetaMono(); }

    static ZetaMono power(int slot, const Rat& exp) {
        ZetaMono m;
        if (exp != 0) m.terms_.push_back({slot, exp});
        return m;
    }

    bool is_unit() const { return terms_.empty(); }

    // Exponent for the given slot (0 if absent).
    Rat exponent(int slot) const {
        for (const auto& t : terms_)
            if (t.first == slot) return t.second;
        return Rat(0);
    }

    const std::vector<std::pair<int, Rat>>& terms() const { return terms_; }

    friend ZetaMono operator*(const ZetaMono& a, const ZetaMono& b) {
        ZetaMono out;
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                Rat e = a.terms_[i].second + b.terms_[j].second;
                if (e != 0) out.terms_.push_back({a.terms_[i].first, e});
                ++i;
                ++j;
            }
        }
        return out;
    }

    friend bool operator==(const ZetaMono& a, const ZetaMono& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ZetaMono& a, const ZetaMono& b) { return !(a == b); }

    friend bool operator<(const ZetaMono& a, const ZetaMono& b) {
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
            [](const auto& x, const auto& y) {
                return x.first != y.first ? x.first < y.first
                                          : cmp(x.second, y.second) < 0;
            });
    }

    // Evaluate given per-slot rational values. Exponents must be integers.
    Rat eval(const std::vector<Rat>& slot_values) const {
        Rat acc(1);
        for (const auto& [slot, exp] : terms_) {
            if (slot < 0 || static_cast<std::size_t>(slot) >= slot_values.size())
                throw std::domain_error("ZetaMono: no value for slot " + std::to_string(slot));
            acc *= rat_pow(slot_values[static_cast<std::size_t>(slot)], to_long(exp));
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [slot, exp] : terms_) {
            if (!first) os << "*";
            first = false;
            os << "zeta";
            if (slot != 0) os << slot;
            os << "^" << rat_str(exp);
        }
        return os.str();
    }

private:
    std::vector<std::pair<int, Rat>> terms_;  // sorted by slot, exponents nonzero
};

// Finite sum of Scalar * ZetaMono terms. Most operator entries are a single
// term; sums appear on Lax-matrix diagonals and in tensor-product entries.
class ZPoly {
public:
    ZPoly() = default;

    ZPoly(const Scalar& s) {  // NOLINT(google-explicit-constructor)
        if (!s.is_zero()) terms_.push_back({ZetaMono(), s});
    }

    ZPoly(const Scalar& s, const ZetaMono& z) {
        if (!s.is_zero()) terms_.push_back({z, s});
    }

    static ZPoly one() { return ZPoly(Scalar(Rat(1))); }

    bool is_zero() const { return terms_.empty(); }

    std::size_t term_count() const { return terms_.size(); }

    const std::vector<std::pair<ZetaMono, Scalar>>& terms() const { return terms_; }

    // The single (mono, scalar) term; throws unless term_count() == 1.
    const std::pair<ZetaMono, Scalar>& single() const {
        if (terms_.size() != 1) throw std::domain_error("ZPoly: not a single monomial");
        return terms_[0];
    }

    friend ZPoly operator-(const ZPoly& a) {
        ZPoly out = a;
        for (auto& t : out.terms_) t.second = -t.second;
        return out;
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly out;
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                Scalar s = a.terms_[i].second + b.terms_[j].second;
                if (!s.is_zero()) out.terms_.push_back({a.terms_[i].first, s});
                ++i;
                ++j;
            }
        }
        return out;
    }

    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        ZPoly out;
        for (const auto& [za, sa] : a.terms_)
            for (const auto& [zb, sb] : b.terms_) out = out + ZPoly(sa * sb, za * zb);
        return out;
    }

    ZPoly& operator+=(const ZPoly& b) { return *this = *this + b; }
    ZPoly& operator*=(const ZPoly& b) { return *this = *this * b; }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    Rat eval(const Rat& t_value, const std::vector<Rat>& slot_values) const {
        Rat acc(0);
        for (const auto& [z, s] : terms_) acc += s.eval_at(t_value) * z.eval(slot_values);
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [z, s] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (z.is_unit()) {
                os << s.str();
            } else {
                os << "(" << s.str() << ")*" << z.str();
            }
        }
        return os.str();
    }

private:
    std::vector<std::pair<ZetaMono, Scalar>> terms_;  // sorted by monomial
};

}  // namespace qloop
