#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qloop/basis.hpp"
#include "qloop/operators.hpp"

namespace qloop {

// Symbols of the l-fold q-oscillator algebra: b_k, bdag_k and diagonal
// Cartan-type factors q^{cst + sum_k coef_k N_k}.
struct OscFactor {
    enum class Kind { B, Bdag, QN };

    Kind kind;
    int slot = 0;             // B / Bdag: 1..l
    long cst = 0;             // QN
    std::vector<long> coef;   // QN: coefficient of N_k at index k-1

    static OscFactor b(int k) { return {Kind::B, k, 0, {}}; }
    static OscFactor bdag(int k) { return {Kind::Bdag, k, 0, {}}; }
    static OscFactor qn(long cst, std::vector<long> coef) {
        return {Kind::QN, 0, cst, std::move(coef)};
    }

    std::string str() const {
        switch (kind) {
            case Kind::B:
                return "b" + std::to_string(slot);
            case Kind::Bdag:
                return "b" + std::to_string(slot) + "+";
            case Kind::QN: {
                std::ostringstream os;
                os << "q^(" << cst;
                for (std::size_t k = 0; k < coef.size(); ++k) {
                    if (coef[k] == 0) continue;
                    os << (coef[k] > 0 ? "+" : "") << coef[k] << "N" << (k + 1);
                }
                os << ")";
                return os.str();
            }
        }
        return "?";
    }
};

// Product of oscillator factors with a scalar prefactor; factors act
// right-to-left, matching algebra products.
struct OscTerm {
    Scalar coeff;
    std::vector<OscFactor> factors;

    std::string str() const {
        std::string out = "(" + coeff.str() + ")";
        for (const auto& f : factors) out += " " + f.str();
        return out;
    }
};

using OscExpr = std::vector<OscTerm>;

// Fock-type representation pattern: per tensor slot, chi_plus realizes the
// number operator as m and bdag as the raising operator, chi_minus realizes
// the number operator as -(m+1) and b as the raising operator.
enum class ChiKind { Plus, Minus };

using ChiPattern = std::vector<ChiKind>;  // size l, index slot-1

// Realizes an oscillator expression on the truncated Fock basis under the
// given chi pattern. Raising moves that would leave the truncation are
// dropped; max_raise is set from the surviving entries plus the a-priori
// raise of the word.
GradedOperator realize_osc(const OscExpr& expr, const std::shared_ptr<const FockBasis>& basis,
                           const ChiPattern& pattern);

}  // namespace qloop
