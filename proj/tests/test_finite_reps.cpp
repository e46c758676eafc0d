#include "doctest.h"
#include "qloop/finite_reps.hpp"

using namespace qloop;

namespace {

const MTupleBasis& mbasis(const FiniteRep& rep) {
    return dynamic_cast<const MTupleBasis&>(*rep.basis());
}

SparseVec basis_vec(std::size_t idx) { return {{idx, ZPoly::one()}}; }

}  // namespace

TEST_CASE("vector representation actions") {
    for (int l = 1; l <= 4; ++l) {
        FiniteRep rep = FiniteRep::vector_rep(l);
        // q^{K_1} u_1 = q u_1 and q^{K_j} u_k = u_k otherwise.
        CHECK(rep.q_K(1).entry(0, 0) == ZPoly(Scalar::q()));
        if (l >= 2) CHECK(rep.q_K(2).entry(0, 0) == ZPoly::one());
        // E_i u_{i+1} = u_i, F_i u_i = u_{i+1}.
        for (int i = 1; i <= l; ++i) {
            CHECK(rep.E(i).entry(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) ==
                  ZPoly::one());
            CHECK(rep.F(i).entry(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) ==
                  ZPoly::one());
        }
    }
}

TEST_CASE("vector representation satisfies all defining relations") {
    for (int l = 1; l <= 4; ++l) {
        CheckReport rep = check_relations_finite(FiniteRep::vector_rep(l));
        INFO(rep.text());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("Verma module relations hold on the safe domain") {
    CheckReport r1 = check_relations_finite(FiniteRep::verma(2, {2, 1, 0}, 4));
    INFO(r1.text());
    CHECK(r1.all_pass());
    CheckReport r2 = check_relations_finite(FiniteRep::verma(1, {1, 0}, 5));
    CHECK(r2.all_pass());
}

TEST_CASE("Verma actions match the module formulas") {
    // l = 1, lambda = (1,0): E_1 v_(1) = [1]_q [1]_q v_0 = v_0.
    FiniteRep rep = FiniteRep::verma(1, {1, 0}, 3);
    const auto& basis = mbasis(rep);
    std::size_t v0 = basis.index_of({0});
    std::size_t v1 = basis.index_of({1});
    CHECK(rep.E(1).entry(v0, v1) == ZPoly::one());
    // F_1 v_0 = v_(1) with coefficient q^0 = 1.
    CHECK(rep.F(1).entry(v1, v0) == ZPoly::one());
    // q^{K_1} v_0 = q^{lambda_1} v_0.
    CHECK(rep.q_K(1).entry(v0, v0) == ZPoly(Scalar::q()));
    // v_0 is annihilated by E_i.
    CHECK(rep.E(1).apply(basis_vec(v0)).empty());
}

TEST_CASE("highest-weight vector eigenvalues at rank 2") {
    FiniteRep rep = FiniteRep::verma(2, {2, 1, 0}, 3);
    const auto& basis = mbasis(rep);
    std::size_t v0 = basis.index_of({0, 0, 0});
    for (int i = 1; i <= 2; ++i) CHECK(rep.E(i).apply(basis_vec(v0)).empty());
    CHECK(rep.q_K(1).entry(v0, v0) == ZPoly(Scalar::qpow(2)));
    CHECK(rep.q_K(2).entry(v0, v0) == ZPoly(Scalar::qpow(1)));
    CHECK(rep.q_K(3).entry(v0, v0) == ZPoly::one());
}

TEST_CASE("Jimbo root vectors on the vector representation") {
    // l = 2: E_13 = E_1 E_2 - q E_2 E_1 sends u_3 to u_1 and nothing else.
    FiniteRep rep = FiniteRep::vector_rep(2);
    const GradedOperator& e13 = rep.E_root(1, 3);
    CHECK(e13.nnz() == 1);
    CHECK(e13.entry(0, 2) == ZPoly::one());
    CHECK(rep.E_root(1, 2) == rep.E(1));
}

TEST_CASE("F_{1,l+1} matches its closed-form action") {
    // Coefficient q^{sum_{i=2}^{l} m_{1i}} on v_{m + eps_{1,l+1}}.
    const int l = 2;
    const long N = 3;
    FiniteRep rep = FiniteRep::verma(l, {2, 1, 0}, N);
    const auto& basis = mbasis(rep);
    const GradedOperator& f = rep.F_root(1, l + 1);
    for (std::size_t s = 0; s < basis.size(); ++s) {
        if (basis.degree(s) + 1 > N) continue;
        auto m = basis.tuple(s);
        long exponent = 0;
        for (int i = 2; i <= l; ++i) exponent += m[basis.slot(1, i)];
        auto target = m;
        target[basis.slot(1, l + 1)] += 1;
        SparseVec got = f.apply(basis_vec(s));
        REQUIRE(got.size() == 1);
        CHECK(got[0].first == basis.index_of(target));
        CHECK(got[0].second == ZPoly(Scalar::qpow(exponent)));
    }
    // F_13 v_0 has a single entry with coefficient 1 at m_13 = 1.
    std::size_t v0 = basis.index_of({0, 0, 0});
    auto got = f.apply(basis_vec(v0));
    std::vector<long> e13 = {0, 1, 0};
    REQUIRE(got.size() == 1);
    CHECK(got[0].first == basis.index_of(e13));
    CHECK(got[0].second == ZPoly::one());
}

TEST_CASE("weight compatibility of composite root vectors") {
    // q^{K_j} X q^{-K_j} = q^{<gamma, K_j>} X for X = E_ij, F_ij.
    const int l = 2;
    FiniteRep rep = FiniteRep::verma(l, {1, 0, 0}, 3);
    auto cm = cartan_matrices(l);
    for (int i = 1; i <= l; ++i) {
        for (int j2 = i + 1; j2 <= l + 1; ++j2) {
            for (int j = 1; j <= l + 1; ++j) {
                long pair = 0;  // <alpha_{i,j2}, K_j> = sum of c_{jk}
                for (int k = i; k < j2; ++k)
                    pair += cm.c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
                GradedOperator lhs = rep.q_K(j) * rep.E_root(i, j2);
                GradedOperator rhs = Scalar::qpow(pair) * (rep.E_root(i, j2) * rep.q_K(j));
                CHECK((lhs - rhs).is_zero());
                GradedOperator lhs_f = rep.q_K(j) * rep.F_root(i, j2);
                GradedOperator rhs_f = Scalar::qpow(-pair) * (rep.F_root(i, j2) * rep.q_K(j));
                CHECK((lhs_f - rhs_f).is_zero());
            }
        }
    }
}

TEST_CASE("corrupted E_1 is flagged with a nonzero witness") {
    FiniteRep rep = FiniteRep::verma(2, {2, 1, 0}, 3).with_scaled_E1();
    CheckReport report = check_relations_finite(rep);
    CHECK_FALSE(report.all_pass());
    bool found = false;
    for (const auto& item : report.items) {
        if (!item.pass && item.name.find("commutator [E") != std::string::npos && !item.witness.empty())
            found = true;
    }
    CHECK(found);
}
