#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloop/loop_reps.hpp"
#include "qloop/series.hpp"

namespace qloop {

// Rational function of u over ZPoly coefficients (num/den polynomials).
struct RationalU {
    UPoly num;
    UPoly den;

    static RationalU one() { return {UPoly::one(), UPoly::one()}; }

    friend RationalU operator*(const RationalU& a, const RationalU& b) {
        return {a.num * b.num, a.den * b.den};
    }

    // Exact equality as rational functions (cross-multiplied).
    friend bool operator==(const RationalU& a, const RationalU& b) {
        return a.num * b.den == b.num * a.den;
    }

    friend bool operator!=(const RationalU& a, const RationalU& b) { return !(a == b); }

    USeries expand(std::size_t order) const { return expand_rational(num, den, order); }

    // u -> c*u (equivalently x -> c*x for the spectral coefficient).
    RationalU substituted_u_scale(const Scalar& c) const;

    std::string str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }
};

// l-weight of a Borel module: sl-weight (omega-basis) plus the l-tuple of
// rational functions Psi^+_i(u). The constant term of Psi^+_i equals
// q^{<lambda, h_i>}.
struct LWeight {
    Weight lambda;
    std::vector<RationalU> psi;  // index 0 .. l-1 for i = 1 .. l

    std::string str() const;
};

// Truncated-series form of an l-weight, as computed from a representation.
struct LWeightSeries {
    Weight lambda;
    std::vector<USeries> psi;
};

struct NotLWeightVector : std::runtime_error {
    explicit NotLWeightVector(const std::string& witness)
        : std::runtime_error("not an l-weight vector: " + witness) {}
};

// Coefficients of the series phi^+_i(u) = q^{h_i}(1 - kappa_q
// e'_{delta,alpha_i}((-1)^i u)) as operators; index n = 0..n_max.
std::vector<GradedOperator> phi_plus_series(const GeneratorMap& map, int i, long n_max);

// Applies phi^+_i(u) to v and extracts the eigen-series; throws
// NotLWeightVector with the off-diagonal witness if v is not an l-weight
// vector, and std::domain_error if the truncation is too small.
LWeightSeries lweight_of_vector(const GeneratorMap& map, const SparseVec& v, long n_max,
                                bool assert_homogeneous = true);

// Checks e_{alpha_i + n delta} v = 0 for all i in I, 0 <= n <= n_max.
CheckReport highest_vector_check(const GeneratorMap& map, const SparseVec& v, long n_max);

// Closed-form highest l-weights. x = zeta^s is carried as an exact
// zeta-exponent s on the given slot attached to each power of u.
LWeight closed_theta(const RankConfig& rc, int a, int zeta_slot = 0);
LWeight closed_theta_bar(const RankConfig& rc, int a, int zeta_slot = 0);

// Prefundamental L^{+-}_{i, c x}: slot i carries (1 - c x u)^{+-1}.
LWeight closed_prefund(const RankConfig& rc, int i, const Scalar& c, bool plus,
                       int zeta_slot = 0);

// One-dimensional representation L_xi.
LWeight closed_onedim(const RankConfig& rc, const Weight& xi_omega);

// Highest l-weight of the Borel restriction of the evaluation Verma module.
LWeight closed_verma(const RankConfig& rc, const std::vector<long>& lambda, int zeta_slot = 0);

LWeight lweight_product(const LWeight& a, const LWeight& b);

// x -> c*x on every slot function.
LWeight lweight_substitute_x(const LWeight& lw, const Scalar& c);

LWeightSeries lweight_expand(const LWeight& lw, std::size_t order);

// Exact comparison; returns a witness description on mismatch.
std::optional<std::string> lweight_mismatch(const LWeight& a, const LWeight& b);
std::optional<std::string> lweight_series_mismatch(const LWeightSeries& a,
                                                   const LWeightSeries& b);

// Drinfeld generators chi_{i,n} realized through the series logarithm of the
// primed imaginary root-vector series; index n = 1..n_max.
std::vector<GradedOperator> drinfeld_chi_series(const GeneratorMap& map, int i, long n_max);

// Barred symmetry on computed highest l-weights:
// Psibar_{i,a}(u) = Psi_{l-i+1, l-a+2}(-(-1)^l u) and
// lambdabar_a = iota(lambda_{l-a+2}) with iota(omega_i) = omega_{l-i+1}.
CheckReport check_barred_symmetry(const RankConfig& rc, long N, long n_max);

std::string lweight_json(const LWeight& lw);
std::string lweight_series_json(const LWeightSeries& lw);

}  // namespace qloop
