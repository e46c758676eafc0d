#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qloop/finite_reps.hpp"
#include "qloop/lax.hpp"
#include "qloop/loop_reps.hpp"
#include "qloop/lweights.hpp"
#include "qloop/suites.hpp"

namespace {

using namespace qloop;

std::string zeta_exp_str(const ZetaMono& z) {
    if (z.is_unit()) return "0";
    const auto& terms = z.terms();
    if (terms.size() == 1 && terms[0].first == 0) return rat_str(terms[0].second);
    return z.str();
}

nlohmann::ordered_json dump_operator(const GradedOperator& op) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    op.for_each_entry([&](std::size_t row, std::size_t col, const ZPoly& v) {
        for (const auto& [z, s] : v.terms()) {
            nlohmann::ordered_json e = nlohmann::ordered_json::array();
            e.push_back(row);
            e.push_back(col);
            e.push_back(s.str());
            e.push_back(zeta_exp_str(z));
            rows.push_back(e);
        }
    });
    return rows;
}

nlohmann::ordered_json dump_basis(const BasisPtr& basis) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < basis->size(); ++i) labels.push_back(basis->label(i));
    return labels;
}

nlohmann::ordered_json dump_generator_map(const GeneratorMap& map) {
    nlohmann::ordered_json out;
    out["module"] = map.desc;
    out["basis"] = dump_basis(map.basis);
    nlohmann::ordered_json gens;
    for (int i = 0; i <= map.l(); ++i) {
        gens["e_" + std::to_string(i)] = dump_operator(map.gen_e(i));
        gens["qh_" + std::to_string(i)] = dump_operator(map.gen_qh(i));
    }
    out["generators"] = gens;
    return out;
}

nlohmann::ordered_json dump_lax(const std::vector<std::vector<GradedOperator>>& mat,
                                const BasisPtr& basis, const std::string& name) {
    nlohmann::ordered_json out;
    out["matrix"] = name;
    out["basis"] = dump_basis(basis);
    nlohmann::ordered_json entries;
    for (std::size_t i = 0; i < mat.size(); ++i)
        for (std::size_t j = 0; j < mat[i].size(); ++j) {
            if (mat[i][j].is_zero()) continue;
            entries[std::to_string(i + 1) + "," + std::to_string(j + 1)] =
                dump_operator(mat[i][j]);
        }
    out["entries"] = entries;
    return out;
}

nlohmann::ordered_json dump_rtilde(const RankConfig& rc) {
    nlohmann::ordered_json out;
    out["matrix"] = "R~";
    out["size"] = (rc.l + 1) * (rc.l + 1);
    out["a"] = "q(1 - z)/(1 - q^2 z), z = zeta^s";
    out["b"] = "(1 - q^2)/(1 - q^2 z), z = zeta^s";
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (int i = 1; i <= rc.l + 1; ++i)
        for (int j = 1; j <= rc.l + 1; ++j) {
            if (i == j) {
                terms.push_back({{"op", "E" + std::to_string(i) + std::to_string(i) + "(x)E" +
                                            std::to_string(i) + std::to_string(i)},
                                 {"coeff", "1"},
                                 {"zeta_exp", "0"}});
            } else {
                terms.push_back({{"op", "E" + std::to_string(i) + std::to_string(i) + "(x)E" +
                                            std::to_string(j) + std::to_string(j)},
                                 {"coeff", "a"},
                                 {"zeta_exp", "0"}});
            }
        }
    for (int i = 1; i <= rc.l + 1; ++i)
        for (int j = i + 1; j <= rc.l + 1; ++j) {
            terms.push_back({{"op", "E" + std::to_string(i) + std::to_string(j) + "(x)E" +
                                        std::to_string(j) + std::to_string(i)},
                             {"coeff", "b"},
                             {"zeta_exp", std::to_string(rc.s_partial(i, j))}});
            terms.push_back({{"op", "E" + std::to_string(j) + std::to_string(i) + "(x)E" +
                                        std::to_string(i) + std::to_string(j)},
                             {"coeff", "b"},
                             {"zeta_exp", std::to_string(rc.s_total - rc.s_partial(i, j))}});
        }
    out["terms"] = terms;
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for quantum loop algebra representations"};
    app.require_subcommand(1);

    SuiteOptions opt;
    std::string format = "text";
    std::string out_path;
    bool stable = false;
    bool with_rmm = false;
    std::string dump_what = "osc";
    std::string a_arg = "all";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--l", opt.l, "rank l >= 1")->check(CLI::Range(1, 8));
        cmd->add_option("--trunc", opt.N, "truncation degree N");
        cmd->add_option("--umax", opt.n_max, "series order n_max");
        cmd->add_option("--s", opt.s, "grading integers s_0..s_l (csv)")->delimiter(',');
        cmd->add_option("--lambda", opt.lambda, "highest weight (csv, l+1 integers)")
            ->delimiter(',');
        cmd->add_option("--a", a_arg, "oscillator index a (integer or 'all')");
        cmd->add_option("--kind", opt.kind, "theta | theta-bar | both")
            ->check(CLI::IsMember({"theta", "theta-bar", "both"}));
        cmd->add_option("--seed", opt.seed, "random seed");
        cmd->add_option("--points", opt.points, "sample point count");
        cmd->add_option("--format", format, "json | text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_flag("--stable", stable, "omit timing fields from JSON output");
        cmd->add_option("--corrupt", opt.corrupt, "inject the documented perturbation");
    };

    CLI::App* relations = app.add_subcommand("relations", "defining-relation suites");
    CLI::App* lweights = app.add_subcommand("lweights", "closed-vs-computed l-weight oracle");
    CLI::App* ybe = app.add_subcommand("ybe", "Yang-Baxter equation for R~");
    CLI::App* rll = app.add_subcommand("rll", "RLL exchange relation for L~");
    CLI::App* funrel = app.add_subcommand("funrel", "l-weight functional relations");
    CLI::App* dump = app.add_subcommand("dump", "module and matrix dumps");
    for (auto* cmd : {relations, lweights, ybe, rll, funrel, dump}) add_common(cmd);
    rll->add_flag("--rmm", with_rmm, "also run the monodromy-matrix exchange check");
    dump->add_option("--what", dump_what,
                     "osc | osc-bar | eval | vector | mtilde | ltilde | rtilde | lweight | "
                     "lweight-bar | verma-lweight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (a_arg != "all") opt.a_select = std::stoi(a_arg);

        if (dump->parsed()) {
            const RankConfig rc = opt.rank();
            nlohmann::ordered_json out;
            int a = opt.a_select == 0 ? 1 : opt.a_select;
            if (dump_what == "osc") {
                out = dump_generator_map(osc_rep(rc, a, OscKind::Theta, opt.N));
            } else if (dump_what == "osc-bar") {
                out = dump_generator_map(osc_rep(rc, a, OscKind::ThetaBar, opt.N));
            } else if (dump_what == "eval") {
                FiniteRep verma = FiniteRep::verma(opt.l, opt.lambda_or_default(), opt.N);
                out = dump_generator_map(eval_map(verma, rc));
            } else if (dump_what == "vector") {
                FiniteRep vec = FiniteRep::vector_rep(opt.l);
                out = dump_generator_map(eval_map(vec, rc, true));
            } else if (dump_what == "mtilde") {
                FiniteRep verma = FiniteRep::verma(opt.l, opt.lambda_or_default(), opt.N);
                out = dump_lax(realize_M(build_M_tilde(rc), verma), verma.basis(), "M~");
            } else if (dump_what == "ltilde") {
                auto basis = std::make_shared<FockBasis>(opt.l, opt.N);
                ChiPattern pattern(static_cast<std::size_t>(opt.l), ChiKind::Plus);
                out = dump_lax(realize_L(build_L_tilde(rc), basis, pattern), basis, "L~");
            } else if (dump_what == "rtilde") {
                out = dump_rtilde(rc);
            } else if (dump_what == "lweight") {
                out = nlohmann::ordered_json::parse(lweight_json(closed_theta(rc, a)));
            } else if (dump_what == "lweight-bar") {
                out = nlohmann::ordered_json::parse(lweight_json(closed_theta_bar(rc, a)));
            } else if (dump_what == "verma-lweight") {
                out = nlohmann::ordered_json::parse(
                    lweight_json(closed_verma(rc, opt.lambda_or_default())));
            } else {
                std::cerr << "unknown --what '" << dump_what << "'\n";
                return 2;
            }
            write_output(out.dump(2), out_path);
            return 0;
        }

        CheckReport report;
        if (relations->parsed()) {
            report = suite_relations(opt);
        } else if (lweights->parsed()) {
            report = suite_lweights(opt);
        } else if (ybe->parsed()) {
            report = suite_ybe(opt);
        } else if (rll->parsed()) {
            report = suite_rll(opt, with_rmm);
        } else if (funrel->parsed()) {
            report = suite_funrel(opt);
        }
        write_output(format == "json" ? report.json(stable) : report.text(), out_path);
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
