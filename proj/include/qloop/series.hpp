#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qloop/zeta.hpp"

namespace qloop {

// Polynomial in u with ZPoly coefficients (used for rational l-weight data).
class UPoly {
public:
    UPoly() = default;

    explicit UPoly(ZPoly constant) {
        if (!constant.is_zero()) coeff_.push_back(std::move(constant));
    }

    static UPoly one() { return UPoly(ZPoly::one()); }

    // c * u^n
    static UPoly term(const ZPoly& c, std::size_t n) {
        UPoly p;
        if (!c.is_zero()) {
            p.coeff_.assign(n + 1, ZPoly());
            p.coeff_[n] = c;
        }
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }

    std::size_t degree() const { return coeff_.empty() ? 0 : coeff_.size() - 1; }

    ZPoly coeff(std::size_t n) const { return n < coeff_.size() ? coeff_[n] : ZPoly(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly out;
        out.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()));
        for (std::size_t n = 0; n < out.coeff_.size(); ++n) out.coeff_[n] = a.coeff(n) + b.coeff(n);
        out.trim();
        return out;
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly out;
        out.coeff_.resize(std::max(a.coeff_.size(), b.coeff_.size()));
        for (std::size_t n = 0; n < out.coeff_.size(); ++n) out.coeff_[n] = a.coeff(n) - b.coeff(n);
        out.trim();
        return out;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly out;
        out.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, ZPoly());
        for (std::size_t i = 0; i < a.coeff_.size(); ++i)
            for (std::size_t j = 0; j < b.coeff_.size(); ++j)
                out.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        out.trim();
        return out;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t n = 0; n < coeff_.size(); ++n) {
            if (coeff_[n].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + coeff_[n].str() + ")";
            if (n == 1) out += "*u";
            if (n > 1) out += "*u^" + std::to_string(n);
        }
        return out;
    }

private:
    void trim() {
        while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    }

    std::vector<ZPoly> coeff_;
};

// Truncated power series in u over ZPoly. Arithmetic truncates at `order`
// (coefficients of u^0 .. u^order are kept).
class USeries {
public:
    explicit USeries(std::size_t order) : coeff_(order + 1) {}

    USeries(std::size_t order, const ZPoly& constant) : coeff_(order + 1) { coeff_[0] = constant; }

    static USeries one(std::size_t order) { return USeries(order, ZPoly::one()); }

    std::size_t order() const { return coeff_.size() - 1; }

    const ZPoly& coeff(std::size_t n) const {
        if (n >= coeff_.size()) throw std::out_of_range("USeries: order exceeded");
        return coeff_[n];
    }

    ZPoly& coeff(std::size_t n) {
        if (n >= coeff_.size()) throw std::out_of_range("USeries: order exceeded");
        return coeff_[n];
    }

    friend USeries operator+(const USeries& a, const USeries& b) {
        check_orders(a, b);
        USeries out(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) out.coeff_[n] = a.coeff_[n] + b.coeff_[n];
        return out;
    }

    friend USeries operator-(const USeries& a, const USeries& b) {
        check_orders(a, b);
        USeries out(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) out.coeff_[n] = a.coeff_[n] - b.coeff_[n];
        return out;
    }

    friend USeries operator*(const USeries& a, const USeries& b) {
        check_orders(a, b);
        USeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeff_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= b.order(); ++j)
                out.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        }
        return out;
    }

    friend bool operator==(const USeries& a, const USeries& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

    // Multiplicative inverse; requires an invertible (single-monomial,
    // nonzero) constant term.
    USeries inverse() const {
        const ZPoly& c0 = coeff_[0];
        if (c0.is_zero()) throw std::domain_error("USeries: inverse needs nonzero constant term");
        const auto& [z0, s0] = c0.single();
        if (!z0.is_unit())
            throw std::domain_error("USeries: inverse needs zeta-free constant term");
        ZPoly inv0(s0.inverse());
        USeries out(order());
        out.coeff_[0] = inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            ZPoly acc;
            for (std::size_t k = 1; k <= n; ++k) acc += coeff_[k] * out.coeff_[n - k];
            out.coeff_[n] = -(inv0 * acc);
        }
        return out;
    }

    // log(1 + x) where x = *this; requires zero constant term.
    USeries log1p() const {
        if (!coeff_[0].is_zero()) throw std::domain_error("USeries: log1p needs zero constant term");
        USeries out(order());
        USeries power = *this;  // x^k, truncated
        int sign = 1;
        for (std::size_t k = 1; k <= order(); ++k) {
            Scalar inv_k = Scalar(Rat(sign)) * Scalar(Rat(1, static_cast<long>(k)));
            for (std::size_t n = k; n <= order(); ++n)
                out.coeff_[n] += ZPoly(inv_k) * power.coeff(n);
            if (k < order()) power = power * *this;
            sign = -sign;
        }
        return out;
    }

    // exp(x) where x = *this; requires zero constant term.
    USeries exp() const {
        if (!coeff_[0].is_zero()) throw std::domain_error("USeries: exp needs zero constant term");
        USeries out = one(order());
        USeries power = one(order());
        Scalar fact(Rat(1));
        for (std::size_t k = 1; k <= order(); ++k) {
            power = power * *this;
            fact = fact * Scalar(Rat(static_cast<long>(k)));
            Scalar inv = fact.inverse();
            for (std::size_t n = k; n <= order(); ++n) out.coeff_[n] += ZPoly(inv) * power.coeff(n);
        }
        return out;
    }

    // True when the u^n coefficient of every n is a single monomial of
    // zeta-degree n*step in the given slot (or zero).
    bool is_zeta_homogeneous(int slot, const Rat& step) const {
        for (std::size_t n = 0; n <= order(); ++n) {
            if (coeff_[n].is_zero()) continue;
            for (const auto& [z, s] : coeff_[n].terms()) {
                (void)s;
                if (z.exponent(slot) != step * static_cast<long>(n)) return false;
                if (z.terms().size() > (z.exponent(slot) != 0 ? 1u : 0u)) return false;
            }
        }
        return true;
    }

    std::string str() const {
        std::string out;
        for (std::size_t n = 0; n <= order(); ++n) {
            if (!out.empty()) out += " + ";
            out += "(" + coeff_[n].str() + ")";
            if (n == 1) out += "*u";
            if (n > 1) out += "*u^" + std::to_string(n);
        }
        return out + " + O(u^" + std::to_string(order() + 1) + ")";
    }

private:
    static void check_orders(const USeries& a, const USeries& b) {
        if (a.order() != b.order()) throw std::domain_error("USeries: order mismatch");
    }

    std::vector<ZPoly> coeff_;
};

// Expansion of num/den as a truncated series; den must have an invertible
// constant term. expand_rational((1 - a*u)^±1, n) gives the geometric data.
inline USeries expand_rational(const UPoly& num, const UPoly& den, std::size_t order) {
    USeries n_series(order), d_series(order);
    for (std::size_t k = 0; k <= order; ++k) {
        n_series.coeff(k) = num.coeff(k);
        d_series.coeff(k) = den.coeff(k);
    }
    return n_series * d_series.inverse();
}

}  // namespace qloop
