#include "qloop/suites.hpp"

#include <map>
#include <stdexcept>

#include "qloop/finite_reps.hpp"
#include "qloop/funrel.hpp"
#include "qloop/lax.hpp"
#include "qloop/loop_reps.hpp"
#include "qloop/lweights.hpp"

namespace qloop {

namespace {

void validate_corrupt(const std::string& suite, const std::string& name) {
    if (name.empty()) return;
    for (const auto& known : corrupt_names(suite))
        if (known == name) return;
    throw std::invalid_argument("unknown --corrupt '" + name + "' for suite " + suite);
}

std::vector<std::pair<int, OscKind>> osc_grid(const SuiteOptions& opt) {
    std::vector<std::pair<int, OscKind>> grid;
    for (int a = 1; a <= opt.l + 1; ++a) {
        if (opt.a_select != 0 && a != opt.a_select) continue;
        if (opt.kind != "theta-bar") grid.push_back({a, OscKind::Theta});
        if (opt.kind != "theta") grid.push_back({a, OscKind::ThetaBar});
    }
    return grid;
}

}  // namespace

const std::vector<std::string>& corrupt_names(const std::string& suite) {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"relations", {"e-scale", "rho-drop-q"}},
        {"lweights", {"e-scale", "rho-drop-q"}},
        {"ybe", {"a-scale"}},
        {"rll", {"lax-drop-q"}},
        {"funrel", {"shift-scale"}},
    };
    auto it = table.find(suite);
    if (it == table.end()) {
        static const std::vector<std::string> none;
        return none;
    }
    return it->second;
}

CheckReport suite_relations(const SuiteOptions& opt) {
    validate_corrupt("relations", opt.corrupt);
    CheckReport out;
    out.suite = "relations";
    out.param("l", std::to_string(opt.l));
    out.param("N", std::to_string(opt.N));
    if (!opt.corrupt.empty()) out.param("corrupt", opt.corrupt);
    const RankConfig rc = opt.rank();
    const auto lambda = opt.lambda_or_default();

    // Finite relations: vector representation and the Verma module.
    {
        FiniteRep vec = FiniteRep::vector_rep(opt.l);
        if (opt.corrupt == "e-scale") vec = vec.with_scaled_E1();
        out.merge(check_relations_finite(vec));
    }
    {
        FiniteRep verma = FiniteRep::verma(opt.l, lambda, opt.N);
        if (opt.corrupt == "e-scale") verma = verma.with_scaled_E1();
        out.merge(check_relations_finite(verma));
    }

    // Borel relations: all oscillator modules and the evaluation module.
    for (const auto& [a, kind] : osc_grid(opt)) {
        GeneratorMap map = opt.corrupt == "rho-drop-q"
                               ? osc_rep_corrupt(rc, a, kind, opt.N)
                               : osc_rep(rc, a, kind, opt.N);
        if (opt.corrupt == "e-scale") map = map.with_scaled_e(1, Scalar::q());
        out.merge(check_relations_borel(map));
    }
    {
        FiniteRep verma = FiniteRep::verma(opt.l, lambda, opt.N);
        GeneratorMap map = eval_map(verma, rc);
        if (opt.corrupt == "e-scale") map = map.with_scaled_e(1, Scalar::q());
        out.merge(check_relations_borel(map));
    }
    return out;
}

CheckReport suite_lweights(const SuiteOptions& opt) {
    validate_corrupt("lweights", opt.corrupt);
    CheckReport out;
    out.suite = "lweights";
    out.param("l", std::to_string(opt.l));
    out.param("N", std::to_string(opt.N));
    out.param("n_max", std::to_string(opt.n_max));
    if (!opt.corrupt.empty()) out.param("corrupt", opt.corrupt);
    const RankConfig rc = opt.rank();
    const SparseVec v0 = {{0, ZPoly::one()}};

    std::map<std::pair<int, int>, LWeightSeries> computed_cache;
    auto computed_for = [&](int a, OscKind kind) -> const LWeightSeries& {
        auto key = std::make_pair(a, kind == OscKind::Theta ? 0 : 1);
        auto it = computed_cache.find(key);
        if (it != computed_cache.end()) return it->second;
        GeneratorMap map = opt.corrupt == "rho-drop-q"
                               ? osc_rep_corrupt(rc, a, kind, opt.N)
                               : osc_rep(rc, a, kind, opt.N);
        if (opt.corrupt == "e-scale") map = map.with_scaled_e(1, Scalar::q());
        return computed_cache.emplace(key, lweight_of_vector(map, v0, opt.n_max)).first->second;
    };

    for (const auto& [a, kind] : osc_grid(opt)) {
        const bool theta = kind == OscKind::Theta;
        const std::string tag =
            std::string(theta ? "theta_" : "thetabar_") + std::to_string(a);
        {
            Stopwatch sw;
            std::string witness;
            bool pass = true;
            try {
                const LWeightSeries& computed = computed_for(a, kind);
                LWeight closed = theta ? closed_theta(rc, a) : closed_theta_bar(rc, a);
                auto mismatch = lweight_series_mismatch(
                    computed, lweight_expand(closed, static_cast<std::size_t>(opt.n_max)));
                pass = !mismatch.has_value();
                witness = mismatch.value_or("");
            } catch (const std::exception& ex) {
                pass = false;
                witness = ex.what();
            }
            out.add(tag + " closed-vs-computed l-weight", pass, witness, sw.millis());
        }
        {
            GeneratorMap map = opt.corrupt == "rho-drop-q"
                                   ? osc_rep_corrupt(rc, a, kind, opt.N)
                                   : osc_rep(rc, a, kind, opt.N);
            if (opt.corrupt == "e-scale") map = map.with_scaled_e(1, Scalar::q());
            out.merge(highest_vector_check(map, v0, opt.n_max));
        }
    }

    // Evaluation Borel module: computed series against the closed Verma form.
    {
        Stopwatch sw;
        std::string witness;
        bool pass = true;
        try {
            const auto lambda = opt.lambda_or_default();
            FiniteRep verma = FiniteRep::verma(opt.l, lambda, opt.N);
            GeneratorMap map = eval_map(verma, rc);
            if (opt.corrupt == "e-scale") map = map.with_scaled_e(1, Scalar::q());
            LWeightSeries computed = lweight_of_vector(map, v0, opt.n_max);
            auto mismatch = lweight_series_mismatch(
                computed,
                lweight_expand(closed_verma(rc, lambda), static_cast<std::size_t>(opt.n_max)));
            pass = !mismatch.has_value();
            witness = mismatch.value_or("");
        } catch (const std::exception& ex) {
            pass = false;
            witness = ex.what();
        }
        out.add("evaluation module closed-vs-computed l-weight", pass, witness, sw.millis());
    }

    // Barred symmetry on computed l-weights.
    if (opt.kind == "both" && opt.corrupt.empty() && opt.a_select == 0)
        out.merge(check_barred_symmetry(rc, opt.N, opt.n_max));
    return out;
}

CheckReport suite_ybe(const SuiteOptions& opt) {
    validate_corrupt("ybe", opt.corrupt);
    return check_ybe_R(opt.rank(), opt.points, opt.seed, opt.corrupt == "a-scale");
}

CheckReport suite_rll(const SuiteOptions& opt, bool with_rmm) {
    validate_corrupt("rll", opt.corrupt);
    CheckReport out =
        check_rll(opt.rank(), opt.N, opt.points, opt.seed, opt.corrupt == "lax-drop-q");
    if (with_rmm) out.merge(check_rmm(opt.rank(), opt.lambda_or_default(), opt.N, opt.points, opt.seed));
    return out;
}

CheckReport suite_funrel(const SuiteOptions& opt) {
    validate_corrupt("funrel", opt.corrupt);
    CheckReport out;
    out.suite = "funrel";
    out.param("l", std::to_string(opt.l));
    if (!opt.corrupt.empty()) out.param("corrupt", opt.corrupt);
    const RankConfig rc = opt.rank();
    const bool corrupt = opt.corrupt == "shift-scale";

    for (const auto& [a, kind] : osc_grid(opt)) out.merge(check_osc_prefund(rc, a, kind, corrupt));
    for (int i = 1; i <= opt.l; ++i) {
        for (int sign = 0; sign < 2; ++sign) {
            if (opt.kind != "theta-bar")
                out.merge(check_reverse(rc, i, sign == 0, OscKind::Theta, corrupt));
            if (opt.kind != "theta")
                out.merge(check_reverse(rc, i, sign == 0, OscKind::ThetaBar, corrupt));
        }
    }

    std::vector<std::vector<long>> lambdas;
    lambdas.push_back(std::vector<long>(static_cast<std::size_t>(opt.l) + 1, 0));
    {
        std::vector<long> lam(static_cast<std::size_t>(opt.l) + 1, 0);
        lam[0] = 1;
        lambdas.push_back(lam);
        if (opt.l >= 1) {
            std::vector<long> lam2(static_cast<std::size_t>(opt.l) + 1, 0);
            lam2[0] = 2;
            if (lam2.size() > 1) lam2[1] = 1;
            lambdas.push_back(lam2);
        }
    }
    if (!opt.lambda.empty()) lambdas.push_back(opt.lambda);
    for (const auto& lam : lambdas) out.merge(check_tq_factorization(rc, lam, corrupt));

    // Tensor-product computed check at desk-scale sizes.
    if (opt.l <= 2) {
        long N = opt.l == 1 ? 4 : 3;
        long n_max = opt.l == 1 ? 2 : 1;
        out.merge(check_tensor_computed(rc, N, n_max));
    }
    return out;
}

}  // namespace qloop
