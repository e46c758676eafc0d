#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/finite_reps.hpp"
#include "qloop/operators.hpp"
#include "qloop/osc.hpp"
#include "qloop/report.hpp"

namespace qloop {

// A representation of U_q(L(sl_{l+1})) or of its positive Borel subalgebra:
// operators for e_i and q^{h_i}, i in 0..l, plus f_i for the full algebra.
// Spectral grading is attached at construction: e_i carries zeta^{s_i} (and
// f_i carries zeta^{-s_i}) in the map's zeta slot.
struct GeneratorMap {
    enum class Algebra { BorelPlus, FullLoop };

    Algebra algebra = Algebra::BorelPlus;
    RankConfig rc{1};
    BasisPtr basis;
    int zeta_slot = 0;
    std::string desc;
    std::vector<GradedOperator> e;   // index 0..l
    std::vector<GradedOperator> qh;  // index 0..l
    std::vector<GradedOperator> f;   // index 0..l; entry 0 may be absent
    bool has_f0 = false;

    int l() const { return rc.l; }

    const GradedOperator& gen_e(int i) const { return e.at(static_cast<std::size_t>(i)); }

    const GradedOperator& gen_qh(int i) const { return qh.at(static_cast<std::size_t>(i)); }

    const GradedOperator& gen_f(int i) const {
        if (algebra != Algebra::FullLoop)
            throw std::domain_error("GeneratorMap: Borel map has no f generators");
        if (i == 0 && !has_f0)
            throw std::domain_error(
                "GeneratorMap: f_0 is not available on Verma evaluation modules");
        return f.at(static_cast<std::size_t>(i));
    }

    GradedOperator qh_inverse(int i) const { return gen_qh(i).diagonal_inverse(); }

    // Negative controls.
    GeneratorMap with_scaled_e(int i, const Scalar& c) const;
    // Rebuild-level corruption used by the Borel suite: see osc_rep_corrupt.
};

// Jimbo evaluation module restricted to the Borel subalgebra (or the full
// loop algebra when the underlying finite rep is the vector representation,
// where f_0 exists). lambda enters through the finite rep.
GeneratorMap eval_map(const FiniteRep& rep, const RankConfig& rc, bool full_loop = false,
                      int zeta_slot = 0);

// Pure generator reindexing map -> map o sigma^k / map o tau.
GeneratorMap twist_sigma(const GeneratorMap& map, int k);
GeneratorMap twist_tau(const GeneratorMap& map);

enum class OscKind { Theta, ThetaBar };

// The homomorphism rho (and its sigma/tau twists rho_a, rhobar_a) composed
// with the chi^-/chi^+ tensor pattern: the q-oscillator representations
// theta_a, thetabar_a on the truncated Fock space.
GeneratorMap osc_rep(const RankConfig& rc, int a, OscKind kind, long N, int zeta_slot = 0);

// Documented corruption for negative controls: removes the Cartan factor
// q^{N_i - N_{i+1} - 1} from rho(e_i), i = 1..l-1 (from rho(e_l) for l = 1).
GeneratorMap osc_rep_corrupt(const RankConfig& rc, int a, OscKind kind, long N,
                             int zeta_slot = 0);

// The untwisted rho table as oscillator expressions (index 0..l), exposed
// for the explicit-formula oracle tests.
std::vector<OscExpr> rho_table_e(int l);
std::vector<OscExpr> rho_table_qh(int l);

// Coproduct tensor product: Delta(e_i) = e_i (x) 1 + q^{h_i} (x) e_i,
// Delta(q^x) = q^x (x) q^x; factors keep their own spectral slots.
GeneratorMap tensor_rep(const GeneratorMap& m1, const GeneratorMap& m2);

// Borel relation suite: Cartan commutation with the extended Cartan matrix,
// e-Serre relations (quartic for l = 1), and the loop quotient q^{nu c} = 1.
CheckReport check_relations_borel(const GeneratorMap& map);

}  // namespace qloop
