#pragma once

#include <vector>

#include "qloop/lweights.hpp"

namespace qloop {

// Oscillator <-> prefundamental decompositions at the l-weight level:
// theta_a / thetabar_a against the shifted prefundamental products.
// The corrupt flag scales one spectral shift by q (documented negative
// control for this suite).
CheckReport check_osc_prefund(const RankConfig& rc, int a, OscKind kind, bool corrupt = false);

// Reverse relations: shifted prefundamental = ordered product of oscillator
// l-weights at q-shifted spectral points.
CheckReport check_reverse(const RankConfig& rc, int i, bool plus, OscKind kind,
                          bool corrupt = false);

// Three-way TQ factorization: (A) product of theta_a l-weights at
// zeta_a^s = q^{2<lambda+rho,K_a>} x, (B) the two-factor ratio form, (C)
// one-dimensional shift times the Verma closed form.
CheckReport check_tq_factorization(const RankConfig& rc, const std::vector<long>& lambda,
                                   bool corrupt = false);

// Computed counterpart: the actual tensor module of the theta_a at
// independent spectral slots, compared against the product of closed forms
// coefficient by coefficient.
CheckReport check_tensor_computed(const RankConfig& rc, long N, long n_max);

// The shift xi_a = (l-a+1) omega_{a-1} - (l-a+2) omega_a and its barred
// counterpart xibar_a = -a omega_{a-1} + (a-1) omega_a.
Weight xi_shift(const RankConfig& rc, int a);
Weight xi_bar_shift(const RankConfig& rc, int a);

}  // namespace qloop
