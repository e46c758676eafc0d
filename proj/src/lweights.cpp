#include "qloop/lweights.hpp"

#include <sstream>

#include "json.hpp"
#include "qloop/rootvec.hpp"

namespace qloop {

namespace {

Scalar sign_pow(long e) { return Scalar(Rat(e % 2 == 0 ? 1 : -1)); }

long max_basis_degree(const BasisPtr& basis) {
    long cap = 0;
    for (std::size_t s = 0; s < basis->size(); ++s) cap = std::max(cap, basis->degree(s));
    return cap;
}

long vec_degree(const BasisPtr& basis, const SparseVec& v) {
    long d = 0;
    for (const auto& [idx, c] : v) {
        (void)c;
        d = std::max(d, basis->degree(idx));
    }
    return d;
}

// 1 - c * x * u with x = zeta^s on the slot.
UPoly one_minus_cxu(const RankConfig& rc, const Scalar& c, int slot) {
    UPoly p = UPoly::one();
    return p - UPoly::term(ZPoly(c, ZetaMono::power(slot, Rat(rc.s_total))), 1);
}

ZPoly scalar_z(const Scalar& s) { return ZPoly(s); }

}  // namespace

RationalU RationalU::substituted_u_scale(const Scalar& c) const {
    RationalU out;
    Scalar acc(Rat(1));
    for (std::size_t n = 0; n <= num.degree() || n <= den.degree(); ++n) {
        if (n > 0) acc = acc * c;
        out.num = out.num + UPoly::term(ZPoly(acc) * num.coeff(n), n);
        out.den = out.den + UPoly::term(ZPoly(acc) * den.coeff(n), n);
    }
    return out;
}

std::string LWeight::str() const {
    std::string out = "lambda = " + lambda.str();
    for (std::size_t i = 0; i < psi.size(); ++i)
        out += "\n  Psi_" + std::to_string(i + 1) + " = " + psi[i].str();
    return out;
}

std::vector<GradedOperator> phi_plus_series(const GeneratorMap& map, int i, long n_max) {
    if (i < 1 || i > map.l()) throw std::out_of_range("phi_plus_series: i out of range");
    if (n_max < 0) throw std::invalid_argument("phi_plus_series: n_max must be >= 0");
    std::vector<GradedOperator> coeff;
    coeff.reserve(static_cast<std::size_t>(n_max) + 1);
    coeff.push_back(map.gen_qh(i));
    RootVectorBuilder builder(map.l());
    std::map<const CommWord*, GradedOperator> cache;
    for (long n = 1; n <= n_max; ++n) {
        GradedOperator prime = eval_word(map.e, builder.imag_prime(n, i), &cache);
        // phi^+_{i,n} = -(-1)^{n i} kappa_q q^{h_i} e'_{n delta, alpha_i}
        Scalar c = -Scalar::kappa() * sign_pow(static_cast<long>(i) * n);
        coeff.push_back(c * (map.gen_qh(i) * prime));
    }
    return coeff;
}

namespace {

// Extracts c with w = c * v; throws NotLWeightVector when impossible.
ZPoly eigenvalue_of(const BasisPtr& basis, const SparseVec& v, const SparseVec& w,
                    const std::string& what) {
    if (w.empty()) return ZPoly();
    if (v.empty()) throw NotLWeightVector(what + ": zero vector");
    const auto& [idx0, v0] = v.front();
    ZPoly c;
    {
        // The reference coefficient must be an invertible single monomial.
        const auto& [z0, s0] = v0.single();
        ZetaMono zi;
        for (const auto& [slot, e] : z0.terms()) zi = zi * ZetaMono::power(slot, -e);
        ZPoly inv0(s0.inverse(), zi);
        ZPoly w_at;
        for (const auto& [idx, val] : w)
            if (idx == idx0) w_at = val;
        c = w_at * inv0;
    }
    // Verify w == c * v exactly.
    std::vector<ZPoly> dense;
    dense.assign(basis->size(), ZPoly());
    for (const auto& [idx, val] : w) dense[idx] += val;
    for (const auto& [idx, val] : v) dense[idx] = dense[idx] - c * val;
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
        if (!dense[idx].is_zero())
            throw NotLWeightVector(what + ": off-diagonal component at " + basis->label(idx) +
                                   ": " + dense[idx].str());
    }
    return c;
}

}  // namespace

LWeightSeries lweight_of_vector(const GeneratorMap& map, const SparseVec& v, long n_max,
                                bool assert_homogeneous) {
    const int l = map.l();
    const long cap = max_basis_degree(map.basis);
    const long vdeg = vec_degree(map.basis, v);
    LWeightSeries out;
    std::vector<Rat> lambda_comps;
    out.psi.reserve(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) {
        auto coeff = phi_plus_series(map, i, n_max);
        USeries series(static_cast<std::size_t>(n_max));
        for (long n = 0; n <= n_max; ++n) {
            const auto& op = coeff[static_cast<std::size_t>(n)];
            if (vdeg + op.max_raise() > cap)
                throw std::domain_error(
                    "lweight_of_vector: truncation too small for order " + std::to_string(n) +
                    " (need N >= " + std::to_string(vdeg + op.max_raise()) + ")");
            SparseVec w = op.apply(v);
            series.coeff(static_cast<std::size_t>(n)) = eigenvalue_of(
                map.basis, v, w, "phi^+_" + std::to_string(i) + " at u^" + std::to_string(n));
        }
        if (assert_homogeneous) {
            // Total zeta-degree of the u^n coefficient must be n*s.
            for (long n = 0; n <= n_max; ++n) {
                for (const auto& [z, sc] : series.coeff(static_cast<std::size_t>(n)).terms()) {
                    (void)sc;
                    Rat total(0);
                    for (const auto& [slot, e] : z.terms()) {
                        (void)slot;
                        total += e;
                    }
                    if (total != Rat(map.rc.s_total) * n)
                        throw std::domain_error("lweight_of_vector: zeta-degree of u^" +
                                                std::to_string(n) + " coefficient is " +
                                                rat_str(total) + ", expected " +
                                                rat_str(Rat(map.rc.s_total) * n));
                }
            }
        }
        // lambda from the constant term: must be a pure q-power.
        const ZPoly& c0 = series.coeff(0);
        if (c0.is_zero()) throw NotLWeightVector("Psi_{i,0} vanishes for i = " + std::to_string(i));
        const auto& [z0, s0] = c0.single();
        if (!z0.is_unit())
            throw NotLWeightVector("Psi_{i,0} carries a zeta power for i = " + std::to_string(i));
        auto qe = s0.as_q_power();
        if (!qe)
            throw NotLWeightVector("Psi_{i,0} = " + s0.str() + " is not a q-power for i = " +
                                   std::to_string(i));
        lambda_comps.push_back(*qe);
        out.psi.push_back(std::move(series));
    }
    out.lambda = Weight::omega_weight(std::move(lambda_comps));
    return out;
}

CheckReport highest_vector_check(const GeneratorMap& map, const SparseVec& v, long n_max) {
    CheckReport out;
    out.suite = "highest-vector";
    out.param("rep", map.desc);
    out.param("n_max", std::to_string(n_max));
    const long cap = max_basis_degree(map.basis);
    const long vdeg = vec_degree(map.basis, v);
    RootVectorBuilder builder(map.l());
    std::map<const CommWord*, GradedOperator> cache;
    for (int i = 1; i <= map.l(); ++i) {
        for (long n = 0; n <= n_max; ++n) {
            Stopwatch sw;
            GradedOperator op = eval_word(map.e, builder.real_plus(i, i + 1, n), &cache);
            if (vdeg + op.max_raise() > cap) {
                out.add("e_{alpha_" + std::to_string(i) + "+" + std::to_string(n) + "d} v = 0",
                        false, "truncation too small", sw.millis());
                continue;
            }
            SparseVec w = op.apply(v);
            std::string witness;
            if (!w.empty())
                witness = "component at " + map.basis->label(w.front().first) + ": " +
                          w.front().second.str();
            out.add("e_{alpha_" + std::to_string(i) + "+" + std::to_string(n) + "d} v = 0",
                    w.empty(), witness, sw.millis());
        }
    }
    return out;
}

LWeight closed_theta(const RankConfig& rc, int a, int zeta_slot) {
    const int l = rc.l;
    if (a < 1 || a > l + 1) throw std::out_of_range("closed_theta: a out of range");
    LWeight lw;
    lw.lambda = Rat(l - a + 1) * fundamental_weight(l, a - 1) +
                Rat(-(l - a + 2)) * fundamental_weight(l, a);
    lw.psi.assign(static_cast<std::size_t>(l), RationalU::one());
    if (a >= 2) {
        // Psi_{a-1} = q^{l-a+1} (1 - q^{a-l} x u)
        RationalU& p = lw.psi[static_cast<std::size_t>(a - 2)];
        p.num = UPoly(scalar_z(Scalar::qpow(l - a + 1))) * one_minus_cxu(rc, Scalar::qpow(a - l), zeta_slot);
        p.den = UPoly::one();
    }
    if (a <= l) {
        // Psi_a = q^{a-l-2} (1 - q^{a-l-1} x u)^{-1}
        RationalU& p = lw.psi[static_cast<std::size_t>(a - 1)];
        p.num = UPoly(scalar_z(Scalar::qpow(a - l - 2)));
        p.den = one_minus_cxu(rc, Scalar::qpow(a - l - 1), zeta_slot);
    }
    return lw;
}

LWeight closed_theta_bar(const RankConfig& rc, int a, int zeta_slot) {
    const int l = rc.l;
    if (a < 1 || a > l + 1) throw std::out_of_range("closed_theta_bar: a out of range");
    const Scalar sgn = sign_pow(l);  // (-1)^l
    LWeight lw;
    lw.lambda = Rat(-a) * fundamental_weight(l, a - 1) + Rat(a - 1) * fundamental_weight(l, a);
    lw.psi.assign(static_cast<std::size_t>(l), RationalU::one());
    if (a >= 2) {
        // Psi_{a-1} = q^{-a} (1 + (-1)^l q^{-a+1} x u)^{-1}
        RationalU& p = lw.psi[static_cast<std::size_t>(a - 2)];
        p.num = UPoly(scalar_z(Scalar::qpow(-a)));
        p.den = one_minus_cxu(rc, -(sgn * Scalar::qpow(1 - a)), zeta_slot);
    }
    if (a <= l) {
        // Psi_a = q^{a-1} (1 + (-1)^l q^{-a+2} x u)
        RationalU& p = lw.psi[static_cast<std::size_t>(a - 1)];
        p.num = UPoly(scalar_z(Scalar::qpow(a - 1))) *
                one_minus_cxu(rc, -(sgn * Scalar::qpow(2 - a)), zeta_slot);
        p.den = UPoly::one();
    }
    return lw;
}

LWeight closed_prefund(const RankConfig& rc, int i, const Scalar& c, bool plus, int zeta_slot) {
    const int l = rc.l;
    if (i < 1 || i > l) throw std::out_of_range("closed_prefund: i out of range");
    LWeight lw;
    lw.lambda = Weight::zero_omega(l);
    lw.psi.assign(static_cast<std::size_t>(l), RationalU::one());
    RationalU& p = lw.psi[static_cast<std::size_t>(i - 1)];
    if (plus) {
        p.num = one_minus_cxu(rc, c, zeta_slot);
    } else {
        p.den = one_minus_cxu(rc, c, zeta_slot);
    }
    return lw;
}

LWeight closed_onedim(const RankConfig& rc, const Weight& xi_omega) {
    const int l = rc.l;
    Weight xi = xi_omega.to_omega();
    LWeight lw;
    lw.lambda = xi;
    lw.psi.reserve(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) {
        RationalU p = RationalU::one();
        p.num = UPoly(scalar_z(Scalar::qpow_halfint(xi.pairing_h(i))));
        lw.psi.push_back(std::move(p));
    }
    return lw;
}

LWeight closed_verma(const RankConfig& rc, const std::vector<long>& lambda, int zeta_slot) {
    const int l = rc.l;
    if (lambda.size() != static_cast<std::size_t>(l) + 1)
        throw std::invalid_argument("closed_verma: lambda needs l+1 components");
    LWeight lw;
    std::vector<Rat> comps;
    for (int i = 1; i <= l; ++i)
        comps.push_back(Rat(lambda[static_cast<std::size_t>(i - 1)] -
                            lambda[static_cast<std::size_t>(i)]));
    lw.lambda = Weight::omega_weight(comps);
    lw.psi.reserve(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) {
        long li = lambda[static_cast<std::size_t>(i - 1)];
        long lip = lambda[static_cast<std::size_t>(i)];
        RationalU p;
        // Psi_i = q^{lambda_i - lambda_{i+1}}
        //         (1 - q^{2 lambda_{i+1} - i + 1} x u) / (1 - q^{2 lambda_i - i + 1} x u)
        p.num = UPoly(scalar_z(Scalar::qpow(li - lip))) *
                one_minus_cxu(rc, Scalar::qpow(2 * lip - i + 1), zeta_slot);
        p.den = one_minus_cxu(rc, Scalar::qpow(2 * li - i + 1), zeta_slot);
        lw.psi.push_back(std::move(p));
    }
    return lw;
}

LWeight lweight_product(const LWeight& a, const LWeight& b) {
    if (a.psi.size() != b.psi.size()) throw std::domain_error("lweight_product: rank mismatch");
    LWeight out;
    out.lambda = a.lambda + b.lambda;
    out.psi.reserve(a.psi.size());
    for (std::size_t i = 0; i < a.psi.size(); ++i) out.psi.push_back(a.psi[i] * b.psi[i]);
    return out;
}

LWeight lweight_substitute_x(const LWeight& lw, const Scalar& c) {
    LWeight out;
    out.lambda = lw.lambda;
    out.psi.reserve(lw.psi.size());
    for (const auto& p : lw.psi) out.psi.push_back(p.substituted_u_scale(c));
    return out;
}

LWeightSeries lweight_expand(const LWeight& lw, std::size_t order) {
    LWeightSeries out;
    out.lambda = lw.lambda;
    out.psi.reserve(lw.psi.size());
    for (const auto& p : lw.psi) out.psi.push_back(p.expand(order));
    return out;
}

std::optional<std::string> lweight_mismatch(const LWeight& a, const LWeight& b) {
    if (!(a.lambda.to_omega() == b.lambda.to_omega()))
        return "lambda mismatch: " + a.lambda.to_omega().str() + " vs " +
               b.lambda.to_omega().str();
    if (a.psi.size() != b.psi.size()) return std::string("rank mismatch");
    for (std::size_t i = 0; i < a.psi.size(); ++i) {
        if (a.psi[i] != b.psi[i])
            return "Psi_" + std::to_string(i + 1) + " mismatch: " + a.psi[i].str() + " vs " +
                   b.psi[i].str();
    }
    return std::nullopt;
}

std::optional<std::string> lweight_series_mismatch(const LWeightSeries& a,
                                                   const LWeightSeries& b) {
    if (!(a.lambda.to_omega() == b.lambda.to_omega()))
        return "lambda mismatch: " + a.lambda.to_omega().str() + " vs " +
               b.lambda.to_omega().str();
    if (a.psi.size() != b.psi.size()) return std::string("rank mismatch");
    for (std::size_t i = 0; i < a.psi.size(); ++i) {
        if (a.psi[i].order() != b.psi[i].order()) return std::string("order mismatch");
        for (std::size_t n = 0; n <= a.psi[i].order(); ++n) {
            if (a.psi[i].coeff(n) != b.psi[i].coeff(n))
                return "Psi_" + std::to_string(i + 1) + " u^" + std::to_string(n) +
                       " coefficient mismatch: " + a.psi[i].coeff(n).str() + " vs " +
                       b.psi[i].coeff(n).str();
        }
    }
    return std::nullopt;
}

std::vector<GradedOperator> drinfeld_chi_series(const GeneratorMap& map, int i, long n_max) {
    if (n_max < 1) throw std::invalid_argument("drinfeld_chi_series: n_max must be >= 1");
    RootVectorBuilder builder(map.l());
    std::map<const CommWord*, GradedOperator> cache;
    const std::size_t order = static_cast<std::size_t>(n_max);
    // X(u) = -kappa_q * sum_n e'_{n delta, alpha_i} u^n  (zero constant term)
    std::vector<GradedOperator> x(order + 1, GradedOperator(map.basis));
    for (long n = 1; n <= n_max; ++n)
        x[static_cast<std::size_t>(n)] =
            (-Scalar::kappa()) * eval_word(map.e, builder.imag_prime(n, i), &cache);
    // L = log(1 + X) truncated: sum_k (-1)^{k+1} X^k / k.
    std::vector<GradedOperator> log_series(order + 1, GradedOperator(map.basis));
    std::vector<GradedOperator> power = x;
    long sign = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        Scalar c = Scalar(Rat(sign, static_cast<long>(k)));
        for (std::size_t n = k; n <= order; ++n)
            log_series[n] = log_series[n] + c * power[n];
        if (k < order) {
            std::vector<GradedOperator> next(order + 1, GradedOperator(map.basis));
            for (std::size_t m = k + 1; m <= order; ++m) {
                GradedOperator acc(map.basis);
                for (std::size_t j = 1; m >= j && m - j >= 1; ++j) {
                    if (m - j > order) continue;
                    if (power[m - j].is_zero() || x[j].is_zero()) continue;
                    acc = acc + power[m - j] * x[j];
                }
                next[m] = acc;
            }
            power = std::move(next);
        }
        sign = -sign;
    }
    // chi_{i,n} = -(-1)^{n i} e_{n delta, alpha_i} with
    // e_{n delta, alpha_i} = -kappa_q^{-1} L_n.
    std::vector<GradedOperator> chi;
    chi.reserve(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Scalar c = sign_pow(static_cast<long>(n) * i) * Scalar::kappa().inverse();
        chi.push_back(c * log_series[n]);
    }
    return chi;
}

CheckReport check_barred_symmetry(const RankConfig& rc, long N, long n_max) {
    CheckReport out;
    out.suite = "barred-symmetry";
    const int l = rc.l;
    out.param("l", std::to_string(l));
    out.param("N", std::to_string(N));
    out.param("n_max", std::to_string(n_max));
    const SparseVec v0 = {{0, ZPoly::one()}};
    const Scalar flip = -sign_pow(l);  // -(-1)^l
    for (int a = 1; a <= l + 1; ++a) {
        Stopwatch sw;
        bool pass = true;
        std::string witness;
        try {
            LWeightSeries barred =
                lweight_of_vector(osc_rep(rc, a, OscKind::ThetaBar, N), v0, n_max);
            LWeightSeries plain =
                lweight_of_vector(osc_rep(rc, l - a + 2, OscKind::Theta, N), v0, n_max);
            for (int i = 1; i <= l && pass; ++i) {
                const USeries& lhs = barred.psi[static_cast<std::size_t>(i - 1)];
                const USeries& rhs = plain.psi[static_cast<std::size_t>(l - i)];
                Scalar scale(Rat(1));
                for (std::size_t n = 0; n <= lhs.order(); ++n) {
                    if (n > 0) scale = scale * flip;
                    if (lhs.coeff(n) != ZPoly(scale) * rhs.coeff(n)) {
                        pass = false;
                        witness = "slot " + std::to_string(i) + " u^" + std::to_string(n) +
                                  ": " + lhs.coeff(n).str() + " vs scaled " + rhs.coeff(n).str();
                        break;
                    }
                }
            }
            if (pass) {
                for (int i = 1; i <= l; ++i) {
                    if (barred.lambda.pairing_h(i) != plain.lambda.pairing_h(l - i + 1)) {
                        pass = false;
                        witness = "lambda component " + std::to_string(i);
                        break;
                    }
                }
            }
        } catch (const std::exception& ex) {
            pass = false;
            witness = ex.what();
        }
        out.add("thetabar_" + std::to_string(a) + " vs theta_" + std::to_string(l - a + 2) +
                    " reflection",
                pass, witness, sw.millis());
    }
    return out;
}

namespace {

nlohmann::ordered_json upoly_json(const UPoly& p) {
    return p.str();
}

}  // namespace

std::string lweight_json(const LWeight& lw) {
    nlohmann::ordered_json out;
    out["lambda_omega"] = nlohmann::ordered_json::array();
    for (const auto& c : lw.lambda.to_omega().comps) out["lambda_omega"].push_back(rat_str(c));
    out["psi"] = nlohmann::ordered_json::array();
    for (const auto& p : lw.psi) {
        nlohmann::ordered_json entry;
        entry["num"] = upoly_json(p.num);
        entry["den"] = upoly_json(p.den);
        out["psi"].push_back(entry);
    }
    return out.dump(2);
}

std::string lweight_series_json(const LWeightSeries& lw) {
    nlohmann::ordered_json out;
    out["lambda_omega"] = nlohmann::ordered_json::array();
    for (const auto& c : lw.lambda.to_omega().comps) out["lambda_omega"].push_back(rat_str(c));
    out["psi"] = nlohmann::ordered_json::array();
    for (const auto& p : lw.psi) {
        nlohmann::ordered_json entry;
        entry["series"] = nlohmann::ordered_json::array();
        for (std::size_t n = 0; n <= p.order(); ++n) entry["series"].push_back(p.coeff(n).str());
        out["psi"].push_back(entry);
    }
    return out.dump(2);
}

}  // namespace qloop
