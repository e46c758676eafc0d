#include "qloop/funrel.hpp"

#include <sstream>
#include <stdexcept>

namespace qloop {

namespace {

Scalar sign_pow(long e) { return Scalar(Rat(e % 2 == 0 ? 1 : -1)); }

// Total-zeta-degree homogeneity in x: the u^n coefficients of num and den
// must carry zeta-degree n*s. Asserted on both sides before any comparison.
void assert_x_homogeneous(const LWeight& lw, const RankConfig& rc, const std::string& what) {
    auto check_upoly = [&](const UPoly& p) {
        for (std::size_t n = 0; n <= p.degree(); ++n) {
            const ZPoly coeff = p.coeff(n);
            for (const auto& [z, s] : coeff.terms()) {
                (void)s;
                Rat total(0);
                for (const auto& [slot, e] : z.terms()) {
                    (void)slot;
                    total += e;
                }
                if (total != Rat(rc.s_total) * static_cast<long>(n))
                    throw std::domain_error(what + ": zeta-inhomogeneous coefficient at u^" +
                                            std::to_string(n));
            }
        }
    };
    for (const auto& p : lw.psi) {
        check_upoly(p.num);
        check_upoly(p.den);
    }
}

void add_equality_item(CheckReport& out, const std::string& name, const LWeight& lhs,
                       const LWeight& rhs) {
    Stopwatch sw;
    auto mismatch = lweight_mismatch(lhs, rhs);
    out.add(name, !mismatch.has_value(), mismatch.value_or(""), sw.millis());
}

}  // namespace

Weight xi_shift(const RankConfig& rc, int a) {
    const int l = rc.l;
    return Rat(l - a + 1) * fundamental_weight(l, a - 1) +
           Rat(-(l - a + 2)) * fundamental_weight(l, a);
}

Weight xi_bar_shift(const RankConfig& rc, int a) {
    const int l = rc.l;
    return Rat(-a) * fundamental_weight(l, a - 1) + Rat(a - 1) * fundamental_weight(l, a);
}

CheckReport check_osc_prefund(const RankConfig& rc, int a, OscKind kind, bool corrupt) {
    const int l = rc.l;
    CheckReport out;
    out.suite = "funrel-osc-prefund";
    out.param("l", std::to_string(l));
    out.param("a", std::to_string(a));
    out.param("kind", kind == OscKind::Theta ? "theta" : "theta-bar");
    const Scalar bump = corrupt ? Scalar::q() : Scalar(Rat(1));
    if (corrupt) out.param("corrupt", "shift-scale");

    LWeight lhs = kind == OscKind::Theta ? closed_theta(rc, a) : closed_theta_bar(rc, a);
    LWeight rhs;
    if (kind == OscKind::Theta) {
        if (a == 1) {
            rhs = lweight_product(closed_onedim(rc, xi_shift(rc, 1)),
                                  closed_prefund(rc, 1, bump * Scalar::qpow(-l), false));
        } else if (a <= l) {
            rhs = lweight_product(
                closed_onedim(rc, xi_shift(rc, a)),
                lweight_product(closed_prefund(rc, a - 1, bump * Scalar::qpow(a - l), true),
                                closed_prefund(rc, a, Scalar::qpow(a - l - 1), false)));
        } else {
            rhs = closed_prefund(rc, l, bump * Scalar::q(), true);
        }
    } else {
        const Scalar sl1 = sign_pow(l + 1);  // (-1)^{l+1}
        const Scalar slm = sign_pow(l - 1);  // (-1)^{l-1}
        if (a == 1) {
            rhs = closed_prefund(rc, 1, bump * (sl1 * Scalar::q()), true);
        } else if (a <= l) {
            // The L^+ factor sits at (-1)^{l+1} q^{-a+2} zeta^s: the spectral
            // points of the two factors are one q-power apart, exactly as in
            // the unbarred family, and this is what the barred closed forms
            // (and their reflection to the unbarred ones) require.
            rhs = lweight_product(
                closed_onedim(rc, xi_bar_shift(rc, a)),
                lweight_product(
                    closed_prefund(rc, a - 1, bump * (slm * Scalar::qpow(1 - a)), false),
                    closed_prefund(rc, a, sl1 * Scalar::qpow(2 - a), true)));
        } else {
            rhs = lweight_product(closed_onedim(rc, xi_bar_shift(rc, l + 1)),
                                  closed_prefund(rc, l, bump * (sl1 * Scalar::qpow(-l)), false));
        }
    }
    assert_x_homogeneous(lhs, rc, "osc-prefund lhs");
    assert_x_homogeneous(rhs, rc, "osc-prefund rhs");
    std::string name = std::string(kind == OscKind::Theta ? "theta_" : "thetabar_") +
                       std::to_string(a) + " = shifted prefundamental product";
    add_equality_item(out, name, lhs, rhs);
    return out;
}

CheckReport check_reverse(const RankConfig& rc, int i, bool plus, OscKind kind, bool corrupt) {
    const int l = rc.l;
    if (i < 1 || i > l) throw std::out_of_range("check_reverse: i out of range");
    CheckReport out;
    out.suite = "funrel-reverse";
    out.param("l", std::to_string(l));
    out.param("i", std::to_string(i));
    out.param("sign", plus ? "+" : "-");
    out.param("kind", kind == OscKind::Theta ? "theta" : "theta-bar");
    const Scalar bump = corrupt ? Scalar::q() : Scalar(Rat(1));
    if (corrupt) out.param("corrupt", "shift-scale");

    Weight xi = Weight::zero_omega(l);
    LWeight rhs;
    bool first = true;
    auto accumulate = [&](const LWeight& factor) {
        rhs = first ? factor : lweight_product(rhs, factor);
        first = false;
    };
    if (kind == OscKind::Theta) {
        if (!plus) {
            // L_{xi^-_i} (x) L^-_{i, x} = prod_{a=1}^{i} theta_a at q^{l+i+1-2a} x.
            for (int j = 1; j < i; ++j) xi = xi + Rat(-2) * fundamental_weight(l, j);
            xi = xi + Rat(-(l - i + 2)) * fundamental_weight(l, i);
            for (int a = 1; a <= i; ++a)
                accumulate(lweight_substitute_x(closed_theta(rc, a),
                                                bump * Scalar::qpow(l + i + 1 - 2 * a)));
        } else {
            // L_{xi^+_i} (x) L^+_{i, x} = prod_{a=i+1}^{l+1} theta_a at q^{l+i+1-2a} x.
            xi = xi + Rat(l - i) * fundamental_weight(l, i);
            for (int j = i + 1; j <= l; ++j) xi = xi + Rat(-2) * fundamental_weight(l, j);
            for (int a = i + 1; a <= l + 1; ++a)
                accumulate(lweight_substitute_x(closed_theta(rc, a),
                                                bump * Scalar::qpow(l + i + 1 - 2 * a)));
        }
    } else {
        const Scalar slm = sign_pow(l - 1);  // (-1)^{l-1}
        if (plus) {
            // L_{xi^+_i} (x) L^+_{i, x} = prod_{a=1}^{i} thetabar_a at
            // (-1)^{l-1} q^{2a-i-2} x.
            for (int j = 1; j < i; ++j) xi = xi + Rat(-2) * fundamental_weight(l, j);
            xi = xi + Rat(i - 1) * fundamental_weight(l, i);
            for (int a = 1; a <= i; ++a)
                accumulate(lweight_substitute_x(closed_theta_bar(rc, a),
                                                bump * (slm * Scalar::qpow(2 * a - i - 2))));
        } else {
            // L_{xi^-_i} (x) L^-_{i, x} = prod_{a=i+1}^{l+1} thetabar_a at
            // (-1)^{l-1} q^{2a-i-2} x.
            xi = xi + Rat(-(i + 1)) * fundamental_weight(l, i);
            for (int j = i + 1; j <= l; ++j) xi = xi + Rat(-2) * fundamental_weight(l, j);
            for (int a = i + 1; a <= l + 1; ++a)
                accumulate(lweight_substitute_x(closed_theta_bar(rc, a),
                                                bump * (slm * Scalar::qpow(2 * a - i - 2))));
        }
    }
    LWeight lhs = lweight_product(closed_onedim(rc, xi),
                                  closed_prefund(rc, i, Scalar(Rat(1)), plus));
    assert_x_homogeneous(lhs, rc, "reverse lhs");
    assert_x_homogeneous(rhs, rc, "reverse rhs");
    std::ostringstream name;
    name << "L_xi (x) L^" << (plus ? "+" : "-") << "_" << i << " = product of "
         << (kind == OscKind::Theta ? "theta" : "thetabar") << " l-weights";
    add_equality_item(out, name.str(), lhs, rhs);
    return out;
}

CheckReport check_tq_factorization(const RankConfig& rc, const std::vector<long>& lambda,
                                   bool corrupt) {
    const int l = rc.l;
    if (lambda.size() != static_cast<std::size_t>(l) + 1)
        throw std::invalid_argument("check_tq_factorization: lambda needs l+1 components");
    CheckReport out;
    out.suite = "funrel-tq";
    out.param("l", std::to_string(l));
    {
        std::string s = "(";
        for (std::size_t k = 0; k < lambda.size(); ++k)
            s += (k ? "," : "") + std::to_string(lambda[k]);
        out.param("lambda", s + ")");
    }
    const Scalar bump = corrupt ? Scalar::q() : Scalar(Rat(1));
    if (corrupt) out.param("corrupt", "shift-scale");

    // (A): product over a of theta_a at zeta_a^s = q^{2 lambda_a + l - 2a + 2} x.
    LWeight prod_side;
    for (int a = 1; a <= l + 1; ++a) {
        long shift = 2 * lambda[static_cast<std::size_t>(a - 1)] + l - 2 * a + 2;
        LWeight factor = lweight_substitute_x(
            closed_theta(rc, a), (a == 1 ? bump : Scalar(Rat(1))) * Scalar::qpow(shift));
        prod_side = a == 1 ? factor : lweight_product(prod_side, factor);
    }

    // (B): the displayed two-factor ratio with the same substitution.
    LWeight ratio_side;
    {
        std::vector<Rat> comps(static_cast<std::size_t>(l), Rat(-2));
        ratio_side.lambda = Weight::omega_weight(comps);
        for (int i = 1; i <= l; ++i) {
            long up = (-l + i + 1) + 2 * lambda[static_cast<std::size_t>(i)] + l - 2 * (i + 1) + 2;
            long dn = (-l + i - 1) + 2 * lambda[static_cast<std::size_t>(i - 1)] + l - 2 * i + 2;
            RationalU p;
            UPoly xu_up = UPoly::one() -
                          UPoly::term(ZPoly(Scalar::qpow(up), ZetaMono::power(0, Rat(rc.s_total))), 1);
            UPoly xu_dn = UPoly::one() -
                          UPoly::term(ZPoly(Scalar::qpow(dn), ZetaMono::power(0, Rat(rc.s_total))), 1);
            p.num = UPoly(ZPoly(Scalar::qpow(-2))) * xu_up;
            p.den = xu_dn;
            ratio_side.psi.push_back(std::move(p));
        }
    }

    // (C): one-dimensional shift times the Verma closed form.
    Weight xi = Weight::zero_omega(l);
    for (int i = 1; i <= l; ++i)
        xi = xi +
             Rat(-(lambda[static_cast<std::size_t>(i - 1)] - lambda[static_cast<std::size_t>(i)] +
                   2)) *
                 fundamental_weight(l, i);
    LWeight shifted_verma = lweight_product(closed_onedim(rc, xi), closed_verma(rc, lambda));

    assert_x_homogeneous(prod_side, rc, "tq product side");
    assert_x_homogeneous(ratio_side, rc, "tq ratio side");
    assert_x_homogeneous(shifted_verma, rc, "tq verma side");
    add_equality_item(out, "theta-product = ratio form", prod_side, ratio_side);
    add_equality_item(out, "ratio form = shifted Verma l-weight", ratio_side, shifted_verma);
    add_equality_item(out, "theta-product = shifted Verma l-weight", prod_side, shifted_verma);
    return out;
}

CheckReport check_tensor_computed(const RankConfig& rc, long N, long n_max) {
    const int l = rc.l;
    CheckReport out;
    out.suite = "funrel-tensor-computed";
    out.param("l", std::to_string(l));
    out.param("N", std::to_string(N));
    out.param("n_max", std::to_string(n_max));

    // Degenerate single-factor case first: reduces to the lweights oracle.
    {
        Stopwatch sw;
        GeneratorMap single = osc_rep(rc, 1, OscKind::Theta, N, 1);
        LWeightSeries computed = lweight_of_vector(single, {{0, ZPoly::one()}}, n_max);
        LWeightSeries closed = lweight_expand(closed_theta(rc, 1, 1), static_cast<std::size_t>(n_max));
        auto mismatch = lweight_series_mismatch(computed, closed);
        out.add("single-factor theta_1 reduces to the closed form", !mismatch.has_value(),
                mismatch.value_or(""), sw.millis());
    }

    // Full tensor product over a = 1..l+1 with per-factor spectral slots.
    Stopwatch sw;
    GeneratorMap tensor = osc_rep(rc, 1, OscKind::Theta, N, 1);
    LWeight closed_prod = closed_theta(rc, 1, 1);
    for (int a = 2; a <= l + 1; ++a) {
        tensor = tensor_rep(tensor, osc_rep(rc, a, OscKind::Theta, N, a));
        closed_prod = lweight_product(closed_prod, closed_theta(rc, a, a));
    }
    LWeightSeries computed = lweight_of_vector(tensor, {{0, ZPoly::one()}}, n_max);
    LWeightSeries closed = lweight_expand(closed_prod, static_cast<std::size_t>(n_max));
    auto mismatch = lweight_series_mismatch(computed, closed);
    out.add("tensor of theta_1..theta_" + std::to_string(l + 1) +
                " highest vector matches the closed-form product",
            !mismatch.has_value(), mismatch.value_or(""), sw.millis());
    return out;
}

}  // namespace qloop
