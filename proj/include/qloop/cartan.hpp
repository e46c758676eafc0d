#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloop/rat.hpp"

namespace qloop {

// Rank data: l >= 1, spectral grading integers s_0..s_l with total s.
struct RankConfig {
    int l;
    std::vector<long> s;  // size l+1, indexed by 0..l
    long s_total;

    explicit RankConfig(int rank, std::vector<long> grading = {}) : l(rank) {
        if (l < 1) throw std::invalid_argument("RankConfig: l must be >= 1");
        if (grading.empty()) grading.assign(static_cast<std::size_t>(l) + 1, 1);
        if (grading.size() != static_cast<std::size_t>(l) + 1)
            throw std::invalid_argument("RankConfig: need l+1 grading integers");
        s = std::move(grading);
        s_total = 0;
        for (long v : s) s_total += v;
        if (s_total < 1) throw std::invalid_argument("RankConfig: total s must be >= 1");
    }

    // s_{ij} = sum_{k=i}^{j-1} s_k for 1 <= i < j <= l+1.
    long s_partial(int i, int j) const {
        long acc = 0;
        for (int k = i; k < j; ++k) acc += s[static_cast<std::size_t>(k)];
        return acc;
    }
};

struct CartanMatrices {
    // c[i][j] = <alpha_j, K_i>, i = 1..l+1, j = 1..l (0-based storage).
    std::vector<std::vector<long>> c;
    // a[i][j]: Cartan matrix of sl_{l+1}, i, j = 1..l.
    std::vector<std::vector<long>> a;
    // a_ext[i][j]: extended Cartan matrix, i, j = 0..l.
    std::vector<std::vector<long>> a_ext;
};

inline CartanMatrices cartan_matrices(int l) {
    if (l < 1) throw std::invalid_argument("cartan_matrices: l must be >= 1");
    CartanMatrices m;
    auto delta = [](int x, int y) { return x == y ? 1L : 0L; };
    m.c.assign(static_cast<std::size_t>(l) + 1, std::vector<long>(static_cast<std::size_t>(l)));
    for (int i = 1; i <= l + 1; ++i)
        for (int j = 1; j <= l; ++j)
            m.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                delta(i, j) - delta(i, j + 1);
    m.a.assign(static_cast<std::size_t>(l), std::vector<long>(static_cast<std::size_t>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                m.c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] -
                m.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
    // Extended matrix of A_l^(1); l = 1 is the special case with a_01 = -2.
    m.a_ext.assign(static_cast<std::size_t>(l) + 1,
                   std::vector<long>(static_cast<std::size_t>(l) + 1, 0));
    for (int i = 0; i <= l; ++i) {
        for (int j = 0; j <= l; ++j) {
            if (i == j) {
                m.a_ext[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 2;
            } else if (l == 1) {
                m.a_ext[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -2;
            } else {
                int d = (i - j + l + 1) % (l + 1);
                if (d == 1 || d == l)
                    m.a_ext[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
            }
        }
    }
    return m;
}

// <rho, K_i> = l/2 - i + 1 for the half-sum rho of positive gl_{l+1} roots.
inline Rat rho_pairing(int l, int i) {
    if (i < 1 || i > l + 1) throw std::out_of_range("rho_pairing: index out of range");
    return rat_of(l, 2) - i + 1;
}

// Positive affine root: alpha_{ij} + n*delta, (delta - alpha_{ij}) + n*delta,
// or an imaginary root n*delta tagged by a color i in I.
struct AffineRoot {
    enum class Kind { RealPlus, RealMinus, Imag };

    Kind kind;
    int i = 0;  // RealPlus/RealMinus: 1 <= i < j <= l+1; Imag: color in I
    int j = 0;
    long n = 0;

    static AffineRoot real_plus(int i, int j, long n = 0) {
        if (!(1 <= i && i < j) || n < 0) throw std::invalid_argument("AffineRoot: bad real root");
        return {Kind::RealPlus, i, j, n};
    }

    static AffineRoot real_minus(int i, int j, long n = 0) {
        if (!(1 <= i && i < j) || n < 0) throw std::invalid_argument("AffineRoot: bad real root");
        return {Kind::RealMinus, i, j, n};
    }

    static AffineRoot imag(long n, int color) {
        if (n < 1 || color < 1) throw std::invalid_argument("AffineRoot: bad imaginary root");
        return {Kind::Imag, color, 0, n};
    }

    // Multiplicities over the simple affine roots alpha_0..alpha_l.
    std::vector<long> multiplicities(int l) const {
        if (kind != Kind::Imag && j > l + 1)
            throw std::out_of_range("AffineRoot: index exceeds rank");
        if (kind == Kind::Imag && i > l) throw std::out_of_range("AffineRoot: color exceeds rank");
        std::vector<long> m(static_cast<std::size_t>(l) + 1, n);
        switch (kind) {
            case Kind::Imag:
                break;
            case Kind::RealPlus:
                for (int k = i; k < j; ++k) m[static_cast<std::size_t>(k)] += 1;
                break;
            case Kind::RealMinus:
                for (int k = 0; k <= l; ++k) m[static_cast<std::size_t>(k)] += 1;
                for (int k = i; k < j; ++k) m[static_cast<std::size_t>(k)] -= 1;
                break;
        }
        return m;
    }

    std::string str() const {
        switch (kind) {
            case Kind::RealPlus:
                return "alpha[" + std::to_string(i) + "," + std::to_string(j) + "]+" +
                       std::to_string(n) + "d";
            case Kind::RealMinus:
                return "(d-alpha[" + std::to_string(i) + "," + std::to_string(j) + "])+" +
                       std::to_string(n) + "d";
            case Kind::Imag:
                return std::to_string(n) + "d{" + std::to_string(i) + "}";
        }
        return "?";
    }

    friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.n == b.n;
    }
};

// Symmetric bilinear form extended from (alpha_i | alpha_j) = a_ext_{ij};
// delta is automatically isotropic and orthogonal to everything.
inline long root_pairing(int l, const AffineRoot& r1, const AffineRoot& r2) {
    const auto m = cartan_matrices(l);
    const auto v1 = r1.multiplicities(l);
    const auto v2 = r2.multiplicities(l);
    long acc = 0;
    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j)
            acc += v1[static_cast<std::size_t>(i)] *
                   m.a_ext[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   v2[static_cast<std::size_t>(j)];
    return acc;
}

enum class Ordering { Less, Equal, Greater };

// Normal order on positive affine roots: real-plus block, then imaginary
// roots (mutually unordered), then real-minus block. Within real-plus the key
// is (i, n, j) ascending; within real-minus it is (i desc, n desc, j asc).
inline Ordering normal_order_cmp(const AffineRoot& r1, const AffineRoot& r2) {
    auto block = [](const AffineRoot& r) {
        switch (r.kind) {
            case AffineRoot::Kind::RealPlus:
                return 0;
            case AffineRoot::Kind::Imag:
                return 1;
            case AffineRoot::Kind::RealMinus:
                return 2;
        }
        return -1;
    };
    int b1 = block(r1), b2 = block(r2);
    if (b1 != b2) return b1 < b2 ? Ordering::Less : Ordering::Greater;
    if (r1.kind == AffineRoot::Kind::Imag) return Ordering::Equal;
    auto key = [&](const AffineRoot& r) {
        if (r.kind == AffineRoot::Kind::RealPlus)
            return std::array<long, 3>{static_cast<long>(r.i), r.n, static_cast<long>(r.j)};
        return std::array<long, 3>{static_cast<long>(-r.i), -r.n, static_cast<long>(r.j)};
    };
    auto k1 = key(r1), k2 = key(r2);
    if (k1 < k2) return Ordering::Less;
    if (k2 < k1) return Ordering::Greater;
    return Ordering::Equal;
}

// Weight of gl_{l+1} (K-basis, l+1 components) or sl_{l+1} (omega-basis,
// l components).
struct Weight {
    enum class Basis { K, Omega };

    Basis basis;
    std::vector<Rat> comps;

    static Weight K_weight(std::vector<Rat> comps) { return {Basis::K, std::move(comps)}; }

    static Weight omega_weight(std::vector<Rat> comps) { return {Basis::Omega, std::move(comps)}; }

    static Weight zero_omega(int l) {
        return omega_weight(std::vector<Rat>(static_cast<std::size_t>(l), Rat(0)));
    }

    int l() const {
        return basis == Basis::K ? static_cast<int>(comps.size()) - 1
                                 : static_cast<int>(comps.size());
    }

    // <lambda, K_i>, only in the K-basis.
    const Rat& pairing_K(int i) const {
        if (basis != Basis::K) throw std::domain_error("Weight: K-pairing needs K-basis");
        if (i < 1 || static_cast<std::size_t>(i) > comps.size())
            throw std::out_of_range("Weight: K index");
        return comps[static_cast<std::size_t>(i - 1)];
    }

    // <lambda, h_i> for i in I.
    Rat pairing_h(int i) const {
        if (i < 1 || i > l()) throw std::out_of_range("Weight: h index");
        if (basis == Basis::K)
            return comps[static_cast<std::size_t>(i - 1)] - comps[static_cast<std::size_t>(i)];
        return comps[static_cast<std::size_t>(i - 1)];
    }

    // sl-part in the omega-basis: coefficient of omega_i is <lambda, h_i>.
    Weight to_omega() const {
        if (basis == Basis::Omega) return *this;
        std::vector<Rat> w;
        for (int i = 1; i <= l(); ++i) w.push_back(pairing_h(i));
        return omega_weight(std::move(w));
    }

    // K-basis representative of an omega-weight, normalized by lambda_{l+1}=0.
    Weight to_K_normalized() const {
        if (basis == Basis::K) return *this;
        std::vector<Rat> k(comps.size() + 1, Rat(0));
        for (std::size_t i = comps.size(); i-- > 0;) k[i] = k[i + 1] + comps[i];
        return K_weight(std::move(k));
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        if (a.basis != b.basis || a.comps.size() != b.comps.size())
            throw std::domain_error("Weight: mismatched bases");
        Weight out = a;
        for (std::size_t i = 0; i < out.comps.size(); ++i) out.comps[i] += b.comps[i];
        return out;
    }

    friend Weight operator*(const Rat& c, const Weight& a) {
        Weight out = a;
        for (auto& x : out.comps) x *= c;
        return out;
    }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.basis == b.basis && a.comps == b.comps;
    }

    std::string str() const {
        std::string out = basis == Basis::K ? "K[" : "omega[";
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i) out += ",";
            out += rat_str(comps[i]);
        }
        return out + "]";
    }
};

// omega_i as an omega-basis weight; omega_0 and omega_{l+1} are zero.
inline Weight fundamental_weight(int l, int i) {
    Weight w = Weight::zero_omega(l);
    if (i >= 1 && i <= l) w.comps[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

}  // namespace qloop
