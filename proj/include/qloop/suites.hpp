#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/report.hpp"

namespace qloop {

// Shared configuration for the CLI-facing suites.
struct SuiteOptions {
    int l = 2;
    std::vector<long> s;       // empty: uniform s_i = 1
    long N = 4;                // truncation degree
    long n_max = 3;            // series order
    std::vector<long> lambda;  // empty: (1, 0, ..., 0)
    int a_select = 0;          // 0 = all
    std::string kind = "both";  // theta | theta-bar | both
    int points = 20;
    std::uint64_t seed = 0;
    std::string corrupt;  // empty = none; see corrupt_names()

    RankConfig rank() const { return RankConfig(l, s); }

    std::vector<long> lambda_or_default() const {
        if (!lambda.empty()) return lambda;
        std::vector<long> lam(static_cast<std::size_t>(l) + 1, 0);
        lam[0] = 1;
        return lam;
    }
};

// Documented perturbation names per suite (anything else is a config error):
//   relations, lweights: e-scale (scale E_1 / e_1 by q), rho-drop-q
//   ybe:                 a-scale (scale a(z) by q)
//   rll:                 lax-drop-q (drop the q^{...-1} in L~_{i+1,i})
//   funrel:              shift-scale (scale one spectral shift by q)
const std::vector<std::string>& corrupt_names(const std::string& suite);

CheckReport suite_relations(const SuiteOptions& opt);
CheckReport suite_lweights(const SuiteOptions& opt);
CheckReport suite_ybe(const SuiteOptions& opt);
CheckReport suite_rll(const SuiteOptions& opt, bool with_rmm = false);
CheckReport suite_funrel(const SuiteOptions& opt);

}  // namespace qloop
