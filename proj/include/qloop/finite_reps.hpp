#pragma once

#include <map>
#include <string>
#include <vector>

#include "qloop/basis.hpp"
#include "qloop/cartan.hpp"
#include "qloop/operators.hpp"
#include "qloop/report.hpp"

namespace qloop {

// U_q(gl_{l+1}) generators realized as exact sparse matrices, either on a
// degree-truncated Verma module or on the (l+1)-dimensional vector
// representation. Jimbo's composite root vectors E_ij / F_ij are built on
// demand and memoized.
class FiniteRep {
public:
    static FiniteRep verma(int l, const std::vector<long>& lambda, long N);

    static FiniteRep vector_rep(int l);

    int l() const { return l_; }
    const BasisPtr& basis() const { return basis_; }
    const std::vector<long>& lambda() const { return lambda_; }
    bool is_verma() const { return is_verma_; }

    const GradedOperator& E(int i) const;  // E_{i,i+1}, i in I
    const GradedOperator& F(int i) const;  // F_{i,i+1}, i in I

    // q^{sum_i coeff_i K_i + cst}: diagonal from the stored K-eigenvalue
    // exponents. coeff is indexed 1..l+1.
    GradedOperator q_K_form(const std::vector<long>& coeff, long cst = 0) const;

    GradedOperator q_K(int i, long nu = 1) const;  // q^{nu K_i}

    // Jimbo recursion root vectors; j - i = 1 returns the base generator.
    const GradedOperator& E_root(int i, int j) const;
    const GradedOperator& F_root(int i, int j) const;

    // Negative control: copy with E_1 scaled by q.
    FiniteRep with_scaled_E1() const;

    std::string desc() const { return desc_; }

private:
    FiniteRep() = default;

    int l_ = 0;
    bool is_verma_ = false;
    std::vector<long> lambda_;  // K-components for Verma, empty for vector rep
    BasisPtr basis_;
    std::vector<GradedOperator> e_;  // index 1..l
    std::vector<GradedOperator> f_;  // index 1..l
    // K-eigenvalue exponent of basis state j under K_i: k_eig_[i-1][j].
    std::vector<std::vector<long>> k_eig_;
    std::string desc_;
    mutable std::map<std::pair<int, int>, GradedOperator> e_root_cache_;
    mutable std::map<std::pair<int, int>, GradedOperator> f_root_cache_;
};

// Verifies the defining relations (Cartan commutation, [E_i, F_j], both
// Serre families) on the safe domain of the truncation; residuals are exact.
CheckReport check_relations_finite(const FiniteRep& rep);

}  // namespace qloop
