// Acceptance suite: runs every gate criterion at its stated parameters and
// prints one pass/fail line per criterion. Exit code 0 only when all pass.
#include <iostream>
#include <string>
#include <vector>

#include "qloop/finite_reps.hpp"
#include "qloop/funrel.hpp"
#include "qloop/lax.hpp"
#include "qloop/loop_reps.hpp"
#include "qloop/lweights.hpp"
#include "qloop/suites.hpp"

using namespace qloop;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail,
            long millis) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what
              << " (" << millis << " ms)";
    if (!pass && !detail.empty()) std::cout << "\n        " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

std::string first_failure(const CheckReport& r) {
    for (const auto& item : r.items)
        if (!item.pass) return item.name + (item.witness.empty() ? "" : ": " + item.witness);
    return "";
}

std::vector<long> lambda_one(int l) {
    std::vector<long> lam(static_cast<std::size_t>(l) + 1, 0);
    lam[0] = 1;
    return lam;
}

std::vector<long> lambda_two_one(int l) {
    std::vector<long> lam(static_cast<std::size_t>(l) + 1, 0);
    lam[0] = 2;
    if (l >= 2) lam[1] = 1;
    return lam;
}

}  // namespace

int main() {
    // 1. Defining + Serre relations, exact-zero residuals on the safe domain.
    {
        Stopwatch sw;
        CheckReport all;
        for (int l = 1; l <= 3; ++l) {
            const long N = 4;
            RankConfig rc(l);
            all.merge(check_relations_finite(FiniteRep::vector_rep(l)));
            for (const auto& lam : {lambda_one(l), lambda_two_one(l)})
                all.merge(check_relations_finite(FiniteRep::verma(l, lam, N)));
            for (int a = 1; a <= l + 1; ++a)
                for (OscKind kind : {OscKind::Theta, OscKind::ThetaBar})
                    all.merge(check_relations_borel(osc_rep(rc, a, kind, N)));
            for (const auto& lam : {lambda_one(l), lambda_two_one(l)})
                all.merge(check_relations_borel(eval_map(FiniteRep::verma(l, lam, N), rc)));
        }
        report(1, "relations suite, l in {1,2,3}, N = 4 (" + std::to_string(all.items.size()) +
                      " exact identities)",
               all.all_pass(), first_failure(all), sw.millis());
    }

    // 2. l-weight oracle: computed series equal the closed forms exactly,
    //    including zeta-exponents n*s, and the highest-vector annihilation.
    {
        Stopwatch sw;
        bool pass = true;
        std::string detail;
        std::size_t count = 0;
        const SparseVec v0 = {{0, ZPoly::one()}};
        for (int l = 1; l <= 3 && pass; ++l) {
            RankConfig rc(l);
            const long N = 5, n_max = 3;
            for (int a = 1; a <= l + 1 && pass; ++a) {
                for (OscKind kind : {OscKind::Theta, OscKind::ThetaBar}) {
                    GeneratorMap map = osc_rep(rc, a, kind, N);
                    try {
                        LWeightSeries computed = lweight_of_vector(map, v0, n_max);
                        LWeight closed =
                            kind == OscKind::Theta ? closed_theta(rc, a) : closed_theta_bar(rc, a);
                        auto mismatch = lweight_series_mismatch(
                            computed, lweight_expand(closed, static_cast<std::size_t>(n_max)));
                        if (mismatch) {
                            pass = false;
                            detail = "l=" + std::to_string(l) + " a=" + std::to_string(a) + ": " +
                                     *mismatch;
                            break;
                        }
                    } catch (const std::exception& ex) {
                        pass = false;
                        detail = ex.what();
                        break;
                    }
                    CheckReport hv = highest_vector_check(map, v0, n_max);
                    if (!hv.all_pass()) {
                        pass = false;
                        detail = first_failure(hv);
                        break;
                    }
                    ++count;
                }
            }
        }
        report(2, "l-weight oracle (closed vs computed + highest vector), l in {1,2,3}, N = 5, "
                  "n_max = 3 (" + std::to_string(count) + " modules)",
               pass, detail, sw.millis());
    }

    // 3. Barred symmetry on computed l-weights over the same grid.
    {
        Stopwatch sw;
        CheckReport all;
        for (int l = 1; l <= 3; ++l) all.merge(check_barred_symmetry(RankConfig(l), 5, 3));
        report(3, "barred symmetry of computed l-weights, l in {1,2,3}", all.all_pass(),
               first_failure(all), sw.millis());
    }

    // 4. Yang-Baxter for R~: certification grid beyond the degree bound plus
    //    >= 20 seeded sample points, uniform and one non-uniform grading.
    {
        Stopwatch sw;
        CheckReport all;
        for (int l = 1; l <= 3; ++l) all.merge(check_ybe_R(RankConfig(l), 20, 20240817));
        all.merge(check_ybe_R(RankConfig(2, {2, 1, 1}), 20, 20240817));
        report(4, "YBE for R~, l in {1,2,3} uniform s and s = (2,1,1), certified grids",
               all.all_pass(), first_failure(all), sw.millis());
    }

    // 5. RLL exchange for L~ at l in {1,2}, N = 5, 10 seeded points.
    {
        Stopwatch sw;
        CheckReport all;
        for (int l = 1; l <= 2; ++l) all.merge(check_rll(RankConfig(l), 5, 10, 20240817));
        report(5, "RLL exchange for L~, l in {1,2}, N = 5, 10 points", all.all_pass(),
               first_failure(all), sw.millis());
    }

    // 6. Functional relations: decompositions, reverse relations, TQ
    //    factorization (exact rational-function equalities).
    {
        Stopwatch sw;
        CheckReport all;
        for (int l = 1; l <= 4; ++l) {
            RankConfig rc(l);
            for (int a = 1; a <= l + 1; ++a)
                for (OscKind kind : {OscKind::Theta, OscKind::ThetaBar})
                    all.merge(check_osc_prefund(rc, a, kind));
            for (int i = 1; i <= l; ++i)
                for (bool plus : {false, true})
                    for (OscKind kind : {OscKind::Theta, OscKind::ThetaBar})
                        all.merge(check_reverse(rc, i, plus, kind));
        }
        for (int l = 1; l <= 3; ++l) {
            RankConfig rc(l);
            all.merge(check_tq_factorization(
                rc, std::vector<long>(static_cast<std::size_t>(l) + 1, 0)));
            all.merge(check_tq_factorization(rc, lambda_one(l)));
            all.merge(check_tq_factorization(rc, lambda_two_one(l)));
        }
        // Spot value: l = 1, lambda = (1,0) reproduces
        // q^{-2}(1 - zeta^s u)/(1 - q^2 zeta^s u) on both sides.
        bool spot = true;
        {
            RankConfig rc(1);
            LWeight expected;
            expected.lambda = Rat(-2) * fundamental_weight(1, 1);
            UPoly up = UPoly::one() -
                       UPoly::term(ZPoly(Scalar(Rat(1)), ZetaMono::power(0, Rat(2))), 1);
            UPoly dn = UPoly::one() -
                       UPoly::term(ZPoly(Scalar::qpow(2), ZetaMono::power(0, Rat(2))), 1);
            expected.psi.push_back(RationalU{UPoly(ZPoly(Scalar::qpow(-2))) * up, dn});
            LWeight prod =
                lweight_product(lweight_substitute_x(closed_theta(rc, 1), Scalar::qpow(3)),
                                lweight_substitute_x(closed_theta(rc, 2), Scalar::qpow(-1)));
            LWeight verma = lweight_product(closed_onedim(rc, Rat(-3) * fundamental_weight(1, 1)),
                                            closed_verma(rc, {1, 0}));
            spot = !lweight_mismatch(prod, expected) && !lweight_mismatch(verma, expected);
        }
        report(6, "functional relations (osc-prefund + reverse, l in {1..4}; TQ, l in {1,2,3}; "
                  "l=1 spot value)",
               all.all_pass() && spot, spot ? first_failure(all) : "l=1 spot value mismatch",
               sw.millis());
    }

    // 7. Computed tensor modules against closed-form products.
    {
        Stopwatch sw;
        CheckReport all;
        all.merge(check_tensor_computed(RankConfig(1), 4, 2));
        all.merge(check_tensor_computed(RankConfig(2), 3, 1));
        report(7, "computed tensor-product l-weights, (l,N,n_max) = (1,4,2) and (2,3,1)",
               all.all_pass(), first_failure(all), sw.millis());
    }

    // 8. Negative controls: every suite fails under its documented
    //    perturbation with a nonzero witness.
    {
        Stopwatch sw;
        bool pass = true;
        std::string detail;
        auto expect_fail = [&](const CheckReport& r, const std::string& what) {
            bool witnessed = false;
            for (const auto& item : r.items)
                if (!item.pass && !item.witness.empty()) witnessed = true;
            if (!witnessed) {
                pass = false;
                detail = what + " did not fail with a witness";
            }
        };
        SuiteOptions opt;
        opt.l = 2;
        opt.N = 3;
        opt.n_max = 2;
        opt.points = 3;
        opt.corrupt = "e-scale";
        expect_fail(suite_relations(opt), "relations --corrupt e-scale");
        opt.corrupt = "rho-drop-q";
        expect_fail(suite_relations(opt), "relations --corrupt rho-drop-q");
        opt.corrupt = "e-scale";
        expect_fail(suite_lweights(opt), "lweights --corrupt e-scale");
        opt.corrupt = "a-scale";
        expect_fail(suite_ybe(opt), "ybe --corrupt a-scale");
        opt.corrupt = "lax-drop-q";
        opt.N = 4;
        expect_fail(suite_rll(opt), "rll --corrupt lax-drop-q");
        opt.corrupt = "shift-scale";
        expect_fail(suite_funrel(opt), "funrel --corrupt shift-scale");
        report(8, "negative controls: documented perturbations produce failure witnesses", pass,
               detail, sw.millis());
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
