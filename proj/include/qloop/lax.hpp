#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/finite_reps.hpp"
#include "qloop/numeric.hpp"
#include "qloop/operators.hpp"
#include "qloop/osc.hpp"
#include "qloop/report.hpp"

namespace qloop {

// Symbolic factors of the monodromy-matrix entries over U_q(gl_{l+1}).
struct GlFactor {
    enum class Kind { E, F, QK };

    Kind kind;
    int i = 0, j = 0;          // E_ij / F_ij
    std::vector<long> kcoef;   // QK: q^{sum kcoef[a] K_a}, indexed 1..l+1

    static GlFactor E_(int i, int j) { return {Kind::E, i, j, {}}; }
    static GlFactor F_(int i, int j) { return {Kind::F, i, j, {}}; }
    static GlFactor QK(std::vector<long> kcoef) { return {Kind::QK, 0, 0, std::move(kcoef)}; }

    std::string str() const;
};

struct GlTerm {
    Scalar coeff;
    ZetaMono zeta;
    std::vector<GlFactor> factors;  // leftmost factor acts last

    std::string str() const;
};

struct OscLaxTerm {
    Scalar coeff;
    ZetaMono zeta;
    std::vector<OscFactor> factors;

    std::string str() const;
};

// (l+1) x (l+1) matrix of symbolic entries; entries are short sums of terms.
template <typename Term>
struct LaxMatrix {
    int size = 0;
    std::vector<std::vector<std::vector<Term>>> entries;  // [row][col]

    const std::vector<Term>& at(int i, int j) const {
        return entries.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1));
    }
};

using MTildeMatrix = LaxMatrix<GlTerm>;
using LTildeMatrix = LaxMatrix<OscLaxTerm>;

// Explicit monodromy matrix M~(zeta) over U_q(gl_{l+1}) symbols.
MTildeMatrix build_M_tilde(const RankConfig& rc, int zeta_slot = 0);

// Explicit L-operator L~(zeta) over the l-fold oscillator algebra.
LTildeMatrix build_L_tilde(const RankConfig& rc, int zeta_slot = 0);

// zeta-grading of the entries: s_{ji} below the diagonal, s - s_{ij} above,
// {0, s} on the diagonal. Checked structurally on the symbolic matrices.
CheckReport check_lax_grading(const RankConfig& rc);

// Entrywise realization on a representation.
std::vector<std::vector<GradedOperator>> realize_M(const MTildeMatrix& m, const FiniteRep& rep,
                                                   int zeta_slot = 0);
std::vector<std::vector<GradedOperator>> realize_L(const LTildeMatrix& m,
                                                   const std::shared_ptr<const FockBasis>& basis,
                                                   const ChiPattern& pattern, int zeta_slot = 0);

// The R-matrix R~(zeta) on C^{l+1} (x) C^{l+1}: identity-diagonal part plus
// a(zeta^s), b(zeta^s) blocks with zeta^{s_ij} monomials.
struct RTilde {
    RankConfig rc;
    bool corrupt_a = false;  // negative control: scales a(z) by q

    // a(z) = q(1-z)/(1-q^2 z), b(z) = (1-q^2)/(1-q^2 z) over the formal field.
    static Scalar a_of(const Scalar& z);
    static Scalar b_of(const Scalar& z);

    // Exact evaluation at rational t and spectral value zeta; throws
    // std::domain_error on the pole 1 - q^2 zeta^s = 0.
    SparseQMatrix eval(const Rat& t, const Rat& zeta) const;
};

RTilde build_R_tilde(const RankConfig& rc);

// Yang-Baxter equation for R~ by exact evaluation: a full certification grid
// whose per-variable point count exceeds twice the degree bound (so the
// rational identity is proven), plus `sample_points` extra random triples.
CheckReport check_ybe_R(const RankConfig& rc, int sample_points, std::uint64_t seed,
                        bool corrupt = false);

// RLL exchange relation for L~ with R~ on (truncated Fock) (x) C^{l+1} (x)
// C^{l+1}, restricted to Fock columns of degree <= N - 2, at seeded rational
// points (t, zeta_1, zeta_2).
CheckReport check_rll(const RankConfig& rc, long N, int points, std::uint64_t seed,
                      bool corrupt = false);

// Same exchange relation for M~ realized on a truncated Verma module.
CheckReport check_rmm(const RankConfig& rc, const std::vector<long>& lambda, long N, int points,
                      std::uint64_t seed);

}  // namespace qloop
