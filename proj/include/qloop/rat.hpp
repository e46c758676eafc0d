#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qloop {

// Exact rational numbers. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after canonicalization, which is exactly the invariant we need.
using Rat = mpq_class;

inline Rat rat_of(long n) { return Rat(n); }

inline Rat rat_of(long n, long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("Rat: not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw std::domain_error("Rat: integer out of range");
    return r.get_num().get_si();
}

// r^e for integer e; e < 0 requires r != 0.
inline Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    if (r == 0) {
        if (e < 0) throw std::domain_error("Rat: 0^negative");
        return Rat(0);
    }
    mpz_class num = r.get_num(), den = r.get_den();
    if (e < 0) {
        std::swap(num, den);
        e = -e;
        if (den < 0) { den = -den; num = -num; }
    }
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rat out(pn, pd);
    out.canonicalize();
    return out;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace qloop
