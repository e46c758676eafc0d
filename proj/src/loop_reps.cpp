#include "qloop/loop_reps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qloop {

namespace {

int mod_index(int i, int period) {
    int r = i % period;
    return r < 0 ? r + period : r;
}

// Net degree change of one oscillator factor under the chi pattern.
long factor_net_raise(const OscFactor& f, const ChiPattern& pattern) {
    switch (f.kind) {
        case OscFactor::Kind::B:
            return pattern[static_cast<std::size_t>(f.slot - 1)] == ChiKind::Minus ? 1 : -1;
        case OscFactor::Kind::Bdag:
            return pattern[static_cast<std::size_t>(f.slot - 1)] == ChiKind::Plus ? 1 : -1;
        case OscFactor::Kind::QN:
            return 0;
    }
    return 0;
}

}  // namespace

GradedOperator realize_osc(const OscExpr& expr, const std::shared_ptr<const FockBasis>& basis,
                           const ChiPattern& pattern) {
    const int l = basis->l();
    if (pattern.size() != static_cast<std::size_t>(l))
        throw std::invalid_argument("realize_osc: pattern size mismatch");
    GradedOperator op(basis);
    bool first_term = true;
    long net_max = 0;
    for (const auto& term : expr) {
        long net = 0;
        for (const auto& f : term.factors) net += factor_net_raise(f, pattern);
        net_max = first_term ? net : std::max(net_max, net);
        first_term = false;
        for (std::size_t s = 0; s < basis->size(); ++s) {
            std::vector<long> cur = basis->tuple(s);
            Scalar coeff = term.coeff;
            bool dead = false;
            // Factors act right to left; intermediate states live in the full
            // Fock space, only the final target is truncated.
            for (auto it = term.factors.rbegin(); it != term.factors.rend() && !dead; ++it) {
                const OscFactor& f = *it;
                switch (f.kind) {
                    case OscFactor::Kind::QN: {
                        long e = f.cst;
                        for (std::size_t k = 0; k < f.coef.size(); ++k) {
                            long w = pattern[k] == ChiKind::Plus ? cur[k] : -(cur[k] + 1);
                            e += f.coef[k] * w;
                        }
                        coeff = coeff * Scalar::qpow(e);
                        break;
                    }
                    case OscFactor::Kind::B: {
                        auto& m = cur[static_cast<std::size_t>(f.slot - 1)];
                        if (pattern[static_cast<std::size_t>(f.slot - 1)] == ChiKind::Plus) {
                            if (m == 0) {
                                dead = true;
                                break;
                            }
                            coeff = coeff * qnum(m);
                            m -= 1;
                        } else {
                            m += 1;
                        }
                        break;
                    }
                    case OscFactor::Kind::Bdag: {
                        auto& m = cur[static_cast<std::size_t>(f.slot - 1)];
                        if (pattern[static_cast<std::size_t>(f.slot - 1)] == ChiKind::Plus) {
                            m += 1;
                        } else {
                            if (m == 0) {
                                dead = true;
                                break;
                            }
                            coeff = coeff * (-qnum(m));
                            m -= 1;
                        }
                        break;
                    }
                }
            }
            if (dead || coeff.is_zero()) continue;
            std::size_t target = basis->index_of(cur);
            if (target == TupleBasis::npos) continue;  // outside the truncation
            op.add_entry(target, s, ZPoly(coeff));
        }
    }
    op.set_max_raise(net_max);
    return op;
}

GeneratorMap GeneratorMap::with_scaled_e(int i, const Scalar& c) const {
    GeneratorMap out = *this;
    out.e.at(static_cast<std::size_t>(i)) = c * out.e.at(static_cast<std::size_t>(i));
    out.desc += " [corrupt: e_" + std::to_string(i) + " scaled]";
    return out;
}

GeneratorMap eval_map(const FiniteRep& rep, const RankConfig& rc, bool full_loop, int zeta_slot) {
    if (rep.l() != rc.l) throw std::invalid_argument("eval_map: rank mismatch");
    const int l = rc.l;
    GeneratorMap map;
    map.algebra = full_loop ? GeneratorMap::Algebra::FullLoop : GeneratorMap::Algebra::BorelPlus;
    map.rc = rc;
    map.basis = rep.basis();
    map.zeta_slot = zeta_slot;
    map.desc = std::string(full_loop ? "evaluation" : "evaluation-borel") + " on " + rep.desc();
    map.e.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
    map.qh.assign(static_cast<std::size_t>(l) + 1, GradedOperator());

    auto zeta = [&](long exp) {
        return ZPoly(Scalar(Rat(1)), ZetaMono::power(zeta_slot, Rat(exp)));
    };

    // e_0 = F_{1,l+1} q^{K_1 + K_{l+1}}, e_i = E_{i,i+1}.
    {
        std::vector<long> coeff(static_cast<std::size_t>(l) + 2, 0);
        coeff[1] = 1;
        coeff[static_cast<std::size_t>(l) + 1] = 1;
        GradedOperator e0 = rep.F_root(1, l + 1) * rep.q_K_form(coeff);
        e0.set_max_raise(1);
        map.e[0] = zeta(rc.s[0]) * e0;
    }
    for (int i = 1; i <= l; ++i)
        map.e[static_cast<std::size_t>(i)] =
            zeta(rc.s[static_cast<std::size_t>(i)]) * rep.E(i);

    // q^{h_i} = q^{K_i - K_{i+1}}, q^{h_0} = q^{K_{l+1} - K_1}.
    for (int i = 0; i <= l; ++i) {
        std::vector<long> coeff(static_cast<std::size_t>(l) + 2, 0);
        if (i == 0) {
            coeff[static_cast<std::size_t>(l) + 1] = 1;
            coeff[1] = -1;
        } else {
            coeff[static_cast<std::size_t>(i)] = 1;
            coeff[static_cast<std::size_t>(i) + 1] = -1;
        }
        map.qh[static_cast<std::size_t>(i)] = rep.q_K_form(coeff);
    }

    if (full_loop) {
        map.f.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
        for (int i = 1; i <= l; ++i)
            map.f[static_cast<std::size_t>(i)] =
                zeta(-rc.s[static_cast<std::size_t>(i)]) * rep.F(i);
        if (!rep.is_verma()) {
            std::vector<long> coeff(static_cast<std::size_t>(l) + 2, 0);
            coeff[1] = -1;
            coeff[static_cast<std::size_t>(l) + 1] = -1;
            map.f[0] = zeta(-rc.s[0]) * (rep.E_root(1, l + 1) * rep.q_K_form(coeff));
            map.has_f0 = true;
        }
    }
    return map;
}

GeneratorMap twist_sigma(const GeneratorMap& map, int k) {
    if (map.algebra == GeneratorMap::Algebra::FullLoop && !map.has_f0)
        throw std::domain_error("twist: full map without f_0 cannot be twisted");
    const int period = map.l() + 1;
    GeneratorMap out = map;
    for (int i = 0; i < period; ++i) {
        int src = mod_index(i + k, period);
        out.e[static_cast<std::size_t>(i)] = map.e[static_cast<std::size_t>(src)];
        out.qh[static_cast<std::size_t>(i)] = map.qh[static_cast<std::size_t>(src)];
        if (map.algebra == GeneratorMap::Algebra::FullLoop)
            out.f[static_cast<std::size_t>(i)] = map.f[static_cast<std::size_t>(src)];
    }
    out.desc = map.desc + " o sigma^" + std::to_string(k);
    return out;
}

GeneratorMap twist_tau(const GeneratorMap& map) {
    if (map.algebra == GeneratorMap::Algebra::FullLoop && !map.has_f0)
        throw std::domain_error("twist: full map without f_0 cannot be twisted");
    const int l = map.l();
    GeneratorMap out = map;
    for (int i = 0; i <= l; ++i) {
        int src = i == 0 ? 0 : l - i + 1;
        out.e[static_cast<std::size_t>(i)] = map.e[static_cast<std::size_t>(src)];
        out.qh[static_cast<std::size_t>(i)] = map.qh[static_cast<std::size_t>(src)];
        if (map.algebra == GeneratorMap::Algebra::FullLoop)
            out.f[static_cast<std::size_t>(i)] = map.f[static_cast<std::size_t>(src)];
    }
    out.desc = map.desc + " o tau";
    return out;
}

std::vector<OscExpr> rho_table_e(int l) {
    std::vector<OscExpr> table(static_cast<std::size_t>(l) + 1);
    const std::size_t nl = static_cast<std::size_t>(l);
    {
        // rho(e_0) = bdag_1 q^{sum_{j>=2} N_j}
        std::vector<long> coef(nl, 0);
        for (std::size_t j = 1; j < nl; ++j) coef[j] = 1;
        table[0] = {OscTerm{Scalar(Rat(1)), {OscFactor::bdag(1), OscFactor::qn(0, coef)}}};
    }
    for (int i = 1; i <= l - 1; ++i) {
        // rho(e_i) = -b_i bdag_{i+1} q^{N_i - N_{i+1} - 1}
        std::vector<long> coef(nl, 0);
        coef[static_cast<std::size_t>(i - 1)] = 1;
        coef[static_cast<std::size_t>(i)] = -1;
        table[static_cast<std::size_t>(i)] = {
            OscTerm{Scalar(Rat(-1)),
                    {OscFactor::b(i), OscFactor::bdag(i + 1), OscFactor::qn(-1, coef)}}};
    }
    {
        // rho(e_l) = -kappa_q^-1 b_l q^{N_l}
        std::vector<long> coef(nl, 0);
        coef[nl - 1] = 1;
        table[nl] = {OscTerm{-Scalar::kappa().inverse(),
                             {OscFactor::b(l), OscFactor::qn(0, coef)}}};
    }
    return table;
}

std::vector<OscExpr> rho_table_qh(int l) {
    std::vector<OscExpr> table(static_cast<std::size_t>(l) + 1);
    const std::size_t nl = static_cast<std::size_t>(l);
    {
        // rho(q^{h_0}) = q^{2 N_1 + sum_{j>=2} N_j}
        std::vector<long> coef(nl, 1);
        coef[0] = 2;
        table[0] = {OscTerm{Scalar(Rat(1)), {OscFactor::qn(0, coef)}}};
    }
    for (int i = 1; i <= l - 1; ++i) {
        // rho(q^{h_i}) = q^{N_{i+1} - N_i}
        std::vector<long> coef(nl, 0);
        coef[static_cast<std::size_t>(i - 1)] = -1;
        coef[static_cast<std::size_t>(i)] = 1;
        table[static_cast<std::size_t>(i)] = {OscTerm{Scalar(Rat(1)), {OscFactor::qn(0, coef)}}};
    }
    {
        // rho(q^{h_l}) = q^{-(2 N_l + sum_{j<l} N_j)}
        std::vector<long> coef(nl, -1);
        coef[nl - 1] = -2;
        table[nl] = {OscTerm{Scalar(Rat(1)), {OscFactor::qn(0, coef)}}};
    }
    return table;
}

namespace {

GeneratorMap osc_rep_from_tables(const RankConfig& rc, int a, OscKind kind, long N, int zeta_slot,
                                 std::vector<OscExpr> te, std::vector<OscExpr> tq,
                                 const std::string& tag) {
    const int l = rc.l;
    if (a < 1 || a > l + 1) throw std::out_of_range("osc_rep: a out of range");
    const int period = l + 1;

    // Permutation: theta_a uses rho o sigma^-a, thetabar_a uses
    // rho o tau o sigma^{-a+1} (tau applied to the inner index).
    auto src_index = [&](int i) {
        if (kind == OscKind::Theta) return mod_index(i - a, period);
        int k = mod_index(i - a + 1, period);
        return k == 0 ? 0 : l - k + 1;
    };

    ChiPattern pattern(static_cast<std::size_t>(l));
    for (int k = 1; k <= l; ++k) {
        bool minus = kind == OscKind::Theta ? k <= l - a + 1 : k <= a - 1;
        pattern[static_cast<std::size_t>(k - 1)] = minus ? ChiKind::Minus : ChiKind::Plus;
    }

    auto basis = std::make_shared<FockBasis>(
        l, N, kind == OscKind::Theta ? FockBasis::Tag::Theta : FockBasis::Tag::ThetaBar, a);

    GeneratorMap map;
    map.algebra = GeneratorMap::Algebra::BorelPlus;
    map.rc = rc;
    map.basis = basis;
    map.zeta_slot = zeta_slot;
    map.desc = (kind == OscKind::Theta ? "theta_" : "thetabar_") + std::to_string(a) +
               " l=" + std::to_string(l) + " N=" + std::to_string(N) + tag;
    map.e.assign(static_cast<std::size_t>(period), GradedOperator());
    map.qh.assign(static_cast<std::size_t>(period), GradedOperator());
    for (int i = 0; i < period; ++i) {
        int src = src_index(i);
        GradedOperator op = realize_osc(te[static_cast<std::size_t>(src)], basis, pattern);
        ZPoly zeta(Scalar(Rat(1)),
                   ZetaMono::power(zeta_slot, Rat(rc.s[static_cast<std::size_t>(i)])));
        map.e[static_cast<std::size_t>(i)] = zeta * op;
        map.qh[static_cast<std::size_t>(i)] =
            realize_osc(tq[static_cast<std::size_t>(src)], basis, pattern);
    }
    return map;
}

}  // namespace

GeneratorMap osc_rep(const RankConfig& rc, int a, OscKind kind, long N, int zeta_slot) {
    return osc_rep_from_tables(rc, a, kind, N, zeta_slot, rho_table_e(rc.l), rho_table_qh(rc.l),
                               "");
}

GeneratorMap osc_rep_corrupt(const RankConfig& rc, int a, OscKind kind, long N, int zeta_slot) {
    // A constant rescaling of a generator would be invisible to the e-side
    // relations (they are homogeneous per generator), so the perturbation
    // removes the whole Cartan factor from rho(e_i) (rho(e_l) for l = 1).
    auto te = rho_table_e(rc.l);
    auto strip_qn = [](OscExpr& expr) {
        for (auto& term : expr) {
            std::vector<OscFactor> kept;
            for (auto& f : term.factors)
                if (f.kind != OscFactor::Kind::QN) kept.push_back(f);
            term.factors = std::move(kept);
        }
    };
    if (rc.l >= 2) {
        for (int i = 1; i <= rc.l - 1; ++i) strip_qn(te[static_cast<std::size_t>(i)]);
    } else {
        strip_qn(te[1]);
    }
    return osc_rep_from_tables(rc, a, kind, N, zeta_slot, std::move(te), rho_table_qh(rc.l),
                               " [corrupt: rho]");
}

namespace {

GradedOperator kron_op(const GradedOperator& A, const GradedOperator& B, const BasisPtr& tbasis) {
    GradedOperator out(tbasis);
    const std::size_t db = B.domain()->size();
    const std::size_t rb = B.codomain()->size();
    for (std::size_t ca = 0; ca < A.domain()->size(); ++ca) {
        for (const auto& [ra, va] : A.column(ca)) {
            for (std::size_t cb = 0; cb < db; ++cb) {
                for (const auto& [rbi, vb] : B.column(cb))
                    out.add_entry(ra * rb + rbi, ca * db + cb, va * vb);
            }
        }
    }
    out.set_degree_bounds(A.shift_max() + B.shift_max(), A.max_raise() + B.max_raise());
    return out;
}

}  // namespace

GeneratorMap tensor_rep(const GeneratorMap& m1, const GeneratorMap& m2) {
    if (m1.l() != m2.l()) throw std::domain_error("tensor_rep: mismatched l");
    if (m1.algebra != m2.algebra) throw std::domain_error("tensor_rep: mismatched algebra tags");
    if (m1.rc.s != m2.rc.s) throw std::domain_error("tensor_rep: mismatched grading integers");
    const int l = m1.l();
    GeneratorMap out;
    out.algebra = m1.algebra;
    out.rc = m1.rc;
    out.zeta_slot = m1.zeta_slot;
    auto tbasis = std::make_shared<TensorBasis>(std::vector<BasisPtr>{m1.basis, m2.basis});
    out.basis = tbasis;
    out.desc = "(" + m1.desc + ") (x) (" + m2.desc + ")";
    out.e.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
    out.qh.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
    GradedOperator id1 = GradedOperator::identity(m1.basis);
    GradedOperator id2 = GradedOperator::identity(m2.basis);
    for (int i = 0; i <= l; ++i) {
        out.e[static_cast<std::size_t>(i)] =
            kron_op(m1.gen_e(i), id2, tbasis) + kron_op(m1.gen_qh(i), m2.gen_e(i), tbasis);
        out.qh[static_cast<std::size_t>(i)] = kron_op(m1.gen_qh(i), m2.gen_qh(i), tbasis);
    }
    if (out.algebra == GeneratorMap::Algebra::FullLoop) {
        out.f.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
        out.has_f0 = m1.has_f0 && m2.has_f0;
        for (int i = 0; i <= l; ++i) {
            if (i == 0 && !out.has_f0) continue;
            out.f[static_cast<std::size_t>(i)] =
                kron_op(m1.gen_f(i), m2.qh_inverse(i), tbasis) +
                kron_op(id1, m2.gen_f(i), tbasis);
        }
    }
    return out;
}

namespace {

long max_basis_degree(const BasisPtr& basis) {
    long cap = 0;
    for (std::size_t s = 0; s < basis->size(); ++s) cap = std::max(cap, basis->degree(s));
    return cap;
}

void check_zero_on(CheckReport& rep, const std::string& name, const GradedOperator& op,
                   long max_col_degree) {
    Stopwatch sw;
    auto witness = op.nonzero_witness(max_col_degree);
    rep.add(name, !witness.has_value(), witness.value_or(""), sw.millis());
}

}  // namespace

CheckReport check_relations_borel(const GeneratorMap& map) {
    CheckReport out;
    out.suite = "relations-borel";
    out.param("rep", map.desc);
    const int l = map.l();
    const auto cm = cartan_matrices(l);
    const long cap = max_basis_degree(map.basis);

    // Loop quotient: prod_i q^{h_i} = 1.
    {
        Stopwatch sw;
        GradedOperator prod = GradedOperator::identity(map.basis);
        for (int i = 0; i <= l; ++i) prod = prod * map.gen_qh(i);
        GradedOperator diff = prod - GradedOperator::identity(map.basis);
        out.add("q^c = 1 (prod q^{h_i} = id)", diff.is_zero(),
                diff.nonzero_witness(cap).value_or(""), sw.millis());
    }

    // Cartan commutation: q^{h_j} e_i = q^{a_ext[j][i]} e_i q^{h_j}.
    for (int j = 0; j <= l; ++j) {
        for (int i = 0; i <= l; ++i) {
            long aji = cm.a_ext[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            GradedOperator diff = map.gen_qh(j) * map.gen_e(i) -
                                  Scalar::qpow(aji) * (map.gen_e(i) * map.gen_qh(j));
            check_zero_on(out,
                          "qh" + std::to_string(j) + " e" + std::to_string(i) + " gradation",
                          diff, cap - map.gen_e(i).max_raise());
        }
    }

    // e-Serre relations with the extended Cartan matrix.
    for (int i = 0; i <= l; ++i) {
        for (int j = 0; j <= l; ++j) {
            if (i == j) continue;
            long a = cm.a_ext[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            long order = 1 - a;  // number of e_i factors
            const GradedOperator& ei = map.gen_e(i);
            const GradedOperator& ej = map.gen_e(j);
            std::vector<GradedOperator> ei_pow;  // ei^k, k = 0..order
            ei_pow.push_back(GradedOperator::identity(map.basis));
            for (long k = 1; k <= order; ++k) ei_pow.push_back(ei_pow.back() * ei);
            GradedOperator acc(map.basis);
            long sign = 1;
            for (long k = 0; k <= order; ++k) {
                Scalar c = Scalar(Rat(sign)) *
                           (qfact(order - k).inverse() * qfact(k).inverse());
                acc = acc + c * (ei_pow[static_cast<std::size_t>(order - k)] * ej *
                                 ei_pow[static_cast<std::size_t>(k)]);
                sign = -sign;
            }
            long margin = order * ei.max_raise() + ej.max_raise();
            check_zero_on(out,
                          "Serre e" + std::to_string(i) + "/e" + std::to_string(j) + " (order " +
                              std::to_string(order + 1) + ")",
                          acc, cap - margin);
        }
    }
    return out;
}

}  // namespace qloop
