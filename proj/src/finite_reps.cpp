#include "qloop/finite_reps.hpp"

#include <cstdlib>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace qloop {

namespace {

// q^k as a zeta-free entry.
ZPoly qp(long k) { return ZPoly(Scalar::qpow(k)); }

}  // namespace

FiniteRep FiniteRep::verma(int l, const std::vector<long>& lambda, long N) {
    if (lambda.size() != static_cast<std::size_t>(l) + 1)
        throw std::invalid_argument("verma: lambda needs l+1 integer components");
    if (N < 1) throw std::invalid_argument("verma: N must be >= 1");
    FiniteRep rep;
    rep.l_ = l;
    rep.is_verma_ = true;
    rep.lambda_ = lambda;
    auto basis = std::make_shared<MTupleBasis>(l, N);
    rep.basis_ = basis;
    {
        std::ostringstream os;
        os << "verma l=" << l << " N=" << N << " lambda=(";
        for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
        os << ")";
        rep.desc_ = os.str();
    }

    const std::size_t dim = basis->size();
    auto m_at = [&](const std::vector<long>& m, int i, int j) -> long {
        return m[basis->slot(i, j)];
    };

    // K-eigenvalue exponents: <K_i> on v_m is
    // lambda_i + sum_{k<i} m_{ki} - sum_{k>i} m_{ik}.
    rep.k_eig_.assign(static_cast<std::size_t>(l) + 1, std::vector<long>(dim, 0));
    for (int i = 1; i <= l + 1; ++i) {
        for (std::size_t s = 0; s < dim; ++s) {
            const auto& m = basis->tuple(s);
            long e = lambda[static_cast<std::size_t>(i - 1)];
            for (int k = 1; k < i; ++k) e += m_at(m, k, i);
            for (int k = i + 1; k <= l + 1; ++k) e -= m_at(m, i, k);
            rep.k_eig_[static_cast<std::size_t>(i - 1)][s] = e;
        }
    }

    rep.e_.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
    rep.f_.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
    for (int i = 1; i <= l; ++i) {
        GradedOperator Ei(rep.basis_), Fi(rep.basis_);
        for (std::size_t s = 0; s < dim; ++s) {
            std::vector<long> m = basis->tuple(s);
            const long lam_i = lambda[static_cast<std::size_t>(i - 1)];
            const long lam_ip1 = lambda[static_cast<std::size_t>(i)];

            // E_{i,i+1} action.
            long tail = 0;  // sum_{j >= i+2} (m_{ij} - m_{i+1,j})
            for (int j = i + 2; j <= l + 1; ++j) tail += m_at(m, i, j) - m_at(m, i + 1, j);
            if (m_at(m, i, i + 1) >= 1) {
                long arg = lam_i - lam_ip1 - tail - m_at(m, i, i + 1) + 1;
                Scalar c = qnum(arg) * qnum(m_at(m, i, i + 1));
                if (!c.is_zero()) {
                    auto tgt = m;
                    tgt[basis->slot(i, i + 1)] -= 1;
                    Ei.add_entry(basis->index_of(tgt), s, ZPoly(c));
                }
            }
            {
                long b_exp = lam_i - lam_ip1 - 2 * m_at(m, i, i + 1) - tail;
                for (int j = 1; j <= i - 1; ++j) {
                    if (m_at(m, j, i + 1) < 1) continue;
                    long c_exp = 0;
                    for (int k = j + 1; k <= i - 1; ++k) c_exp += m_at(m, k, i) - m_at(m, k, i + 1);
                    Scalar c = Scalar::qpow(b_exp + c_exp) * qnum(m_at(m, j, i + 1));
                    auto tgt = m;
                    tgt[basis->slot(j, i + 1)] -= 1;
                    tgt[basis->slot(j, i)] += 1;
                    Ei.add_entry(basis->index_of(tgt), s, ZPoly(c));
                }
            }
            for (int j = i + 2; j <= l + 1; ++j) {
                if (m_at(m, i, j) < 1) continue;
                long d_exp = -lam_i + lam_ip1 - 2;
                for (int k = j; k <= l + 1; ++k) d_exp += m_at(m, i, k) - m_at(m, i + 1, k);
                Scalar c = -(Scalar::qpow(d_exp) * qnum(m_at(m, i, j)));
                auto tgt = m;
                tgt[basis->slot(i, j)] -= 1;
                tgt[basis->slot(i + 1, j)] += 1;
                Ei.add_entry(basis->index_of(tgt), s, ZPoly(c));
            }

            // F_{i,i+1} action.
            {
                long exp = 0;
                for (int k = 1; k <= i - 1; ++k) exp -= m_at(m, k, i) - m_at(m, k, i + 1);
                auto tgt = m;
                tgt[basis->slot(i, i + 1)] += 1;
                std::size_t t_idx = basis->index_of(tgt);
                if (t_idx != TupleBasis::npos) Fi.add_entry(t_idx, s, qp(exp));
            }
            for (int j = 1; j <= i - 1; ++j) {
                if (m_at(m, j, i) < 1) continue;
                long exp = 0;
                for (int k = 1; k <= j - 1; ++k) exp -= m_at(m, k, i) - m_at(m, k, i + 1);
                Scalar c = Scalar::qpow(exp) * qnum(m_at(m, j, i));
                auto tgt = m;
                tgt[basis->slot(j, i)] -= 1;
                tgt[basis->slot(j, i + 1)] += 1;
                Fi.add_entry(basis->index_of(tgt), s, ZPoly(c));
            }
        }
        Ei.compute_max_raise_from_entries();
        Fi.set_max_raise(1);  // the m + eps_{i,i+1} branch may leave the truncation
        rep.e_[static_cast<std::size_t>(i)] = std::move(Ei);
        rep.f_[static_cast<std::size_t>(i)] = std::move(Fi);
    }
    return rep;
}

FiniteRep FiniteRep::vector_rep(int l) {
    FiniteRep rep;
    rep.l_ = l;
    rep.is_verma_ = false;
    rep.basis_ = std::make_shared<VectorBasis>(l);
    rep.desc_ = "vector l=" + std::to_string(l);
    const std::size_t dim = rep.basis_->size();
    rep.k_eig_.assign(static_cast<std::size_t>(l) + 1, std::vector<long>(dim, 0));
    for (int i = 1; i <= l + 1; ++i)
        rep.k_eig_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = 1;
    rep.e_.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
    rep.f_.assign(static_cast<std::size_t>(l) + 1, GradedOperator());
    for (int i = 1; i <= l; ++i) {
        GradedOperator Ei(rep.basis_), Fi(rep.basis_);
        // E_i u_{i+1} = u_i, F_i u_i = u_{i+1}, everything else zero.
        Ei.add_entry(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), ZPoly::one());
        Fi.add_entry(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1), ZPoly::one());
        rep.e_[static_cast<std::size_t>(i)] = std::move(Ei);
        rep.f_[static_cast<std::size_t>(i)] = std::move(Fi);
    }
    return rep;
}

const GradedOperator& FiniteRep::E(int i) const {
    if (i < 1 || i > l_) throw std::out_of_range("FiniteRep::E index");
    return e_[static_cast<std::size_t>(i)];
}

const GradedOperator& FiniteRep::F(int i) const {
    if (i < 1 || i > l_) throw std::out_of_range("FiniteRep::F index");
    return f_[static_cast<std::size_t>(i)];
}

GradedOperator FiniteRep::q_K_form(const std::vector<long>& coeff, long cst) const {
    if (coeff.size() != static_cast<std::size_t>(l_) + 2)
        throw std::invalid_argument("q_K_form: coeff indexed 1..l+1");
    GradedOperator op(basis_);
    for (std::size_t s = 0; s < basis_->size(); ++s) {
        long e = cst;
        for (int i = 1; i <= l_ + 1; ++i)
            e += coeff[static_cast<std::size_t>(i)] * k_eig_[static_cast<std::size_t>(i - 1)][s];
        op.add_entry(s, s, qp(e));
    }
    return op;
}

GradedOperator FiniteRep::q_K(int i, long nu) const {
    std::vector<long> coeff(static_cast<std::size_t>(l_) + 2, 0);
    coeff.at(static_cast<std::size_t>(i)) = nu;
    return q_K_form(coeff);
}

const GradedOperator& FiniteRep::E_root(int i, int j) const {
    if (!(1 <= i && i < j && j <= l_ + 1)) throw std::out_of_range("E_root: bad pair");
    auto key = std::make_pair(i, j);
    if (auto it = e_root_cache_.find(key); it != e_root_cache_.end()) return it->second;
    GradedOperator op;
    if (j == i + 1) {
        op = E(i);
    } else {
        // E_ij = E_{i,j-1} E_{j-1,j} - q E_{j-1,j} E_{i,j-1}
        const GradedOperator& a = E_root(i, j - 1);
        const GradedOperator& b = E_root(j - 1, j);
        op = a * b - Scalar::q() * (b * a);
    }
    return e_root_cache_.emplace(key, std::move(op)).first->second;
}

const GradedOperator& FiniteRep::F_root(int i, int j) const {
    if (!(1 <= i && i < j && j <= l_ + 1)) throw std::out_of_range("F_root: bad pair");
    auto key = std::make_pair(i, j);
    if (auto it = f_root_cache_.find(key); it != f_root_cache_.end()) return it->second;
    GradedOperator op;
    if (j == i + 1) {
        op = F(i);
    } else {
        // F_ij = F_{j-1,j} F_{i,j-1} - q^-1 F_{i,j-1} F_{j-1,j}
        const GradedOperator& a = F_root(j - 1, j);
        const GradedOperator& b = F_root(i, j - 1);
        op = a * b - Scalar::qpow(-1) * (b * a);
    }
    return f_root_cache_.emplace(key, std::move(op)).first->second;
}

FiniteRep FiniteRep::with_scaled_E1() const {
    FiniteRep rep = *this;
    rep.e_root_cache_.clear();
    rep.f_root_cache_.clear();
    rep.e_[1] = Scalar::q() * rep.e_[1];
    rep.desc_ += " [corrupt: E_1 scaled by q]";
    return rep;
}

namespace {

// Largest column degree on which a relation built from words with the given
// total raise is exact.
long safe_degree(const BasisPtr& basis, long total_raise) {
    long cap = 0;
    for (std::size_t s = 0; s < basis->size(); ++s) cap = std::max(cap, basis->degree(s));
    return cap - total_raise;
}

void check_zero(CheckReport& rep, const std::string& name, const GradedOperator& op,
                long max_col_degree) {
    Stopwatch sw;
    auto witness = op.nonzero_witness(max_col_degree);
    rep.add(name, !witness.has_value(), witness.value_or(""), sw.millis());
}

}  // namespace

CheckReport check_relations_finite(const FiniteRep& rep) {
    CheckReport out;
    out.suite = "relations-finite";
    out.param("rep", rep.desc());
    const int l = rep.l();
    const auto cm = cartan_matrices(l);

    // Cartan operators: q^{K_i} q^{-K_i} = 1.
    for (int i = 1; i <= l + 1; ++i) {
        Stopwatch sw;
        GradedOperator lhs = rep.q_K(i) * rep.q_K(i, -1) - GradedOperator::identity(rep.basis());
        out.add("qK" + std::to_string(i) + " * qK" + std::to_string(i) + "^-1 = 1", lhs.is_zero(),
                lhs.nonzero_witness(1L << 30).value_or(""), sw.millis());
    }

    // Weight gradation: q^{K_j} X_i q^{-K_j} = q^{+-<alpha_i, K_j>} X_i.
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l + 1; ++j) {
            long cji = cm.c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)];
            GradedOperator diff_e =
                rep.q_K(j) * rep.E(i) - Scalar::qpow(cji) * (rep.E(i) * rep.q_K(j));
            check_zero(out, "gradation qK" + std::to_string(j) + " vs E" + std::to_string(i), diff_e,
                       safe_degree(rep.basis(), 0));
            GradedOperator diff_f =
                rep.q_K(j) * rep.F(i) - Scalar::qpow(-cji) * (rep.F(i) * rep.q_K(j));
            check_zero(out, "gradation qK" + std::to_string(j) + " vs F" + std::to_string(i), diff_f,
                       safe_degree(rep.basis(), 1));
        }
    }

    // [E_i, F_j] = delta_ij (q^{K_i - K_{i+1}} - q^{-K_i + K_{i+1}}) / kappa_q.
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            GradedOperator comm = rep.E(i) * rep.F(j) - rep.F(j) * rep.E(i);
            if (i == j) {
                std::vector<long> coeff(static_cast<std::size_t>(l) + 2, 0);
                coeff[static_cast<std::size_t>(i)] = 1;
                coeff[static_cast<std::size_t>(i + 1)] = -1;
                GradedOperator pos = rep.q_K_form(coeff);
                for (auto& c : coeff) c = -c;
                GradedOperator neg = rep.q_K_form(coeff);
                comm = comm - Scalar::kappa().inverse() * (pos - neg);
            }
            check_zero(out, "commutator [E" + std::to_string(i) + ",F" + std::to_string(j) + "]",
                       comm, safe_degree(rep.basis(), 1));
        }
    }

    // Serre relations, both families.
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) >= 2) {
                GradedOperator de = rep.E(i) * rep.E(j) - rep.E(j) * rep.E(i);
                check_zero(out, "Serre E" + std::to_string(i) + " E" + std::to_string(j) + " commute",
                           de, safe_degree(rep.basis(), 0));
                GradedOperator df = rep.F(i) * rep.F(j) - rep.F(j) * rep.F(i);
                check_zero(out, "Serre F" + std::to_string(i) + " F" + std::to_string(j) + " commute",
                           df, safe_degree(rep.basis(), 2));
            } else {
                const GradedOperator &Ei = rep.E(i), &Ej = rep.E(j);
                GradedOperator se =
                    Ei * Ei * Ej - qnum(2) * (Ei * Ej * Ei) + Ej * Ei * Ei;
                check_zero(out, "Serre E" + std::to_string(i) + "^2 E" + std::to_string(j), se,
                           safe_degree(rep.basis(), 0));
                const GradedOperator &Fi = rep.F(i), &Fj = rep.F(j);
                GradedOperator sf =
                    Fi * Fi * Fj - qnum(2) * (Fi * Fj * Fi) + Fj * Fi * Fi;
                check_zero(out, "Serre F" + std::to_string(i) + "^2 F" + std::to_string(j), sf,
                           safe_degree(rep.basis(), 3));
            }
        }
    }
    return out;
}

}  // namespace qloop
