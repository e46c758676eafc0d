#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qloop/rat.hpp"

namespace qloop {

// Laurent polynomial in t with rational coefficients, stored densely as
// coeff_[k] * t^(off_ + k). Both ends are kept trimmed; zero is the empty
// coefficient vector with off_ = 0.
class Laurent {
public:
    Laurent() = default;

    explicit Laurent(const Rat& c) {
        if (c != 0) coeff_ = {c};
    }

    static Laurent term(const Rat& c, long deg) {
        Laurent p;
        if (c != 0) {
            p.off_ = deg;
            p.coeff_ = {c};
        }
        return p;
    }

    static Laurent tpow(long deg) { return term(Rat(1), deg); }

    bool is_zero() const { return coeff_.empty(); }

    bool is_one() const { return coeff_.size() == 1 && off_ == 0 && coeff_[0] == 1; }

    long min_deg() const {
        if (is_zero()) throw std::domain_error("Laurent: degree of zero");
        return off_;
    }

    long max_deg() const {
        if (is_zero()) throw std::domain_error("Laurent: degree of zero");
        return off_ + static_cast<long>(coeff_.size()) - 1;
    }

    // Number of stored coefficients (max_deg - min_deg + 1), 0 for zero.
    std::size_t span() const { return coeff_.size(); }

    Rat coeff_at(long deg) const {
        if (is_zero() || deg < off_ || deg > max_deg()) return Rat(0);
        return coeff_[static_cast<std::size_t>(deg - off_)];
    }

    const Rat& leading() const {
        if (is_zero()) throw std::domain_error("Laurent: leading of zero");
        return coeff_.back();
    }

    const Rat& trailing() const {
        if (is_zero()) throw std::domain_error("Laurent: trailing of zero");
        return coeff_.front();
    }

    Laurent shifted(long by) const {
        Laurent p = *this;
        if (!p.is_zero()) p.off_ += by;
        return p;
    }

    friend Laurent operator-(const Laurent& a) {
        Laurent p = a;
        for (auto& c : p.coeff_) c = -c;
        return p;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long lo = std::min(a.off_, b.off_);
        long hi = std::max(a.max_deg(), b.max_deg());
        Laurent out;
        out.off_ = lo;
        out.coeff_.assign(static_cast<std::size_t>(hi - lo + 1), Rat(0));
        for (std::size_t k = 0; k < a.coeff_.size(); ++k)
            out.coeff_[static_cast<std::size_t>(a.off_ - lo) + k] += a.coeff_[k];
        for (std::size_t k = 0; k < b.coeff_.size(); ++k)
            out.coeff_[static_cast<std::size_t>(b.off_ - lo) + k] += b.coeff_[k];
        out.trim();
        return out;
    }

    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return Laurent();
        Laurent out;
        out.off_ = a.off_ + b.off_;
        out.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
            if (a.coeff_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeff_.size(); ++j) {
                if (b.coeff_[j] == 0) continue;
                out.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
            }
        }
        out.trim();
        return out;
    }

    friend Laurent operator*(const Laurent& a, const Rat& c) {
        if (c == 0) return Laurent();
        Laurent out = a;
        for (auto& x : out.coeff_) x *= c;
        return out;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.off_ == b.off_ && a.coeff_ == b.coeff_;
    }

    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // Exact division in the Laurent ring; throws if not exact. Trailing
    // coefficients are nonzero, so min-degrees are additive under exact
    // factorization and the quotient offset is min(a) - min(b).
    friend Laurent divexact(const Laurent& a, const Laurent& b) {
        if (b.is_zero()) throw std::domain_error("Laurent: division by zero");
        if (a.is_zero()) return Laurent();
        auto [q, r] = divmod_poly(a.shifted(-a.off_), b.shifted(-b.off_));
        if (!r.is_zero()) throw std::domain_error("Laurent: division not exact");
        return q.shifted(a.off_ - b.off_);
    }

    // Classic polynomial divmod; both operands must have offset 0.
    friend std::pair<Laurent, Laurent> divmod_poly(const Laurent& a, const Laurent& b) {
        if ((!a.is_zero() && a.off_ != 0) || b.off_ != 0)
            throw std::domain_error("Laurent: divmod_poly needs offset-0 operands");
        Laurent rem = a;
        Laurent quo;
        long dn = b.max_deg();
        while (!rem.is_zero() && rem.max_deg() >= dn) {
            Rat c = rem.leading() / b.leading();
            long d = rem.max_deg() - dn;
            Laurent mono = term(c, d);
            quo = quo + mono;
            rem = rem - mono * b;
        }
        return {quo, rem};
    }

    // Monic gcd of the underlying ordinary polynomials (offsets ignored):
    // gcd in the Laurent ring is only defined up to a unit t^k anyway.
    friend Laurent gcd_poly(Laurent a, Laurent b) {
        if (a.is_zero()) return normalize_monic(b);
        if (b.is_zero()) return normalize_monic(a);
        a = a.shifted(-a.off_);
        b = b.shifted(-b.off_);
        while (!b.is_zero()) {
            Laurent r = divmod_poly(a, b).second;
            a = b;
            b = r.is_zero() ? Laurent() : r.shifted(-r.off_);
        }
        return normalize_monic(a);
    }

    friend Laurent normalize_monic(Laurent p) {
        if (p.is_zero()) return p;
        p = p.shifted(-p.off_);
        Rat lc = p.leading();
        if (lc != 1)
            for (auto& c : p.coeff_) c /= lc;
        return p;
    }

    // Evaluate at t = v. v = 0 is a pole when negative powers are present.
    Rat eval(const Rat& v) const {
        if (is_zero()) return Rat(0);
        if (v == 0) {
            if (off_ < 0) throw std::domain_error("Laurent: pole at t = 0");
            return off_ == 0 ? coeff_[0] : Rat(0);
        }
        Rat acc(0);
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * v + *it;
        return acc * rat_pow(v, off_);
    }

    // Substitute t -> t^-1.
    Laurent reciprocal() const {
        if (is_zero()) return Laurent();
        Laurent out;
        out.coeff_.assign(coeff_.rbegin(), coeff_.rend());
        out.off_ = -max_deg();
        return out;
    }

    template <typename F>
    void for_each_term(F&& f) const {
        for (std::size_t k = 0; k < coeff_.size(); ++k)
            if (coeff_[k] != 0) f(off_ + static_cast<long>(k), coeff_[k]);
    }

private:
    void trim() {
        std::size_t lead = coeff_.size();
        while (lead > 0 && coeff_[lead - 1] == 0) --lead;
        coeff_.resize(lead);
        std::size_t skip = 0;
        while (skip < coeff_.size() && coeff_[skip] == 0) ++skip;
        if (skip > 0) {
            coeff_.erase(coeff_.begin(), coeff_.begin() + static_cast<long>(skip));
            off_ += static_cast<long>(skip);
        }
        if (coeff_.empty()) off_ = 0;
    }

    long off_ = 0;
    std::vector<Rat> coeff_;
};

}  // namespace qloop
