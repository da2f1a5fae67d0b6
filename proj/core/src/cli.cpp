#include "qmc/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "qmc/characters.hpp"
#include "qmc/exact.hpp"
#include "qmc/lr.hpp"
#include "qmc/moment_sdp.hpp"
#include "qmc/tensor_oracle.hpp"
#include "qmc/verify.hpp"

namespace qmc {

namespace {

using nlohmann::json;

// Floats are serialized as fixed decimal strings so runs diff cleanly.
json number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

json number(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json number(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    if (c.get_den() == 1) return number(Int(c.get_num()));
    return c.get_str();
}

json partition_json(const Partition& p) {
    json arr = json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

json spectrum_json(const IrrepSpectrum& s) {
    json arr = json::array();
    for (long v : s.eigenvalues) arr.push_back(v);
    return arr;
}

json witness_json(const BipartiteWitness& w) {
    return json{{"lambda", partition_json(w.lambda)},
                {"mu", partition_json(w.mu)},
                {"nu", partition_json(w.nu)}};
}

const char* status_name(SdpStatus s) {
    switch (s) {
        case SdpStatus::optimal: return "optimal";
        case SdpStatus::max_iterations: return "max-iterations";
        case SdpStatus::infeasible: return "infeasible";
    }
    return "unknown";
}

struct Caps {
    long dense_cap = OracleLimits{}.dense_cap;
    int projector_cap = OracleLimits{}.projector_cap;
    long solver_cap = SolverLimits{}.solver_cap;
    unsigned seed = 12345;
    std::string out_path;
};

void add_caps(CLI::App* cmd, Caps& caps) {
    cmd->add_option("--dense-cap", caps.dense_cap, "largest dense dimension");
    cmd->add_option("--projector-cap", caps.projector_cap, "largest n for projectors");
    cmd->add_option("--solver-cap", caps.solver_cap, "largest moment matrix for the solver");
    cmd->add_option("--seed", caps.seed, "seed for iterative methods");
    cmd->add_option("--out", caps.out_path, "also write the JSON result to this file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum max d-cut toolkit"};
    app.require_subcommand(1);
    Caps caps;

    std::string partition_str, class_str, lambda_str, mu_str, nu_str, irrep_str;
    std::string graph_path, mode_str = "theorem", method_str = "dense", suite = "relations";
    std::string family, gen_out, emit_path;
    int n = 0, k = 0, d = 0, level = 1, gamma_k = 2;
    double weight = 1.0;
    bool do_solve = false;

    auto* eta_cmd = app.add_subcommand("eta", "clique block eigenvalue of a partition");
    eta_cmd->add_option("--partition", partition_str)->required();
    eta_cmd->add_option("--d", d, "padding depth (default: partition height)");
    add_caps(eta_cmd, caps);

    auto* chr = app.add_subcommand("char", "symmetric group character value");
    chr->add_option("--partition", partition_str)->required();
    chr->add_option("--class", class_str, "cycle type")->required();
    add_caps(chr, caps);

    auto* gam = app.add_subcommand("gamma", "k-cycle-sum eigenvalue on an irrep block");
    gam->add_option("--k", gamma_k)->required();
    gam->add_option("--partition", partition_str)->required();
    add_caps(gam, caps);

    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lr_cmd->add_option("--lambda", lambda_str)->required();
    lr_cmd->add_option("--mu", mu_str)->required();
    lr_cmd->add_option("--nu", nu_str)->required();
    add_caps(lr_cmd, caps);

    auto* clique = app.add_subcommand("clique", "exact d-QMC value for the n-clique");
    clique->add_option("--n", n)->required();
    clique->add_option("--d", d)->required();
    add_caps(clique, caps);

    auto* star = app.add_subcommand("star", "exact d-QMC value for the n-star");
    star->add_option("--n", n)->required();
    star->add_option("--d", d)->required();
    star->add_option("--irrep", irrep_str, "report the block spectrum of this partition");
    add_caps(star, caps);

    auto* bip = app.add_subcommand("bipartite", "exact d-QMC value for K_{n-k,k}");
    bip->add_option("--n", n)->required();
    bip->add_option("--k", k)->required();
    bip->add_option("--d", d)->required();
    bip->add_option("--mode", mode_str)->check(CLI::IsMember({"theorem", "enumerate"}));
    add_caps(bip, caps);

    auto* brute = app.add_subcommand("brute", "tensor-space diagonalization");
    brute->add_option("--graph", graph_path)->required();
    brute->add_option("--d", d)->required();
    brute->add_option("--irrep", irrep_str, "spectrum of one irrep block");
    brute->add_option("--method", method_str)->check(CLI::IsMember({"dense", "iterative"}));
    add_caps(brute, caps);

    auto* npo = app.add_subcommand("npo", "moment relaxation of the d-QMC");
    npo->add_option("--graph", graph_path)->required();
    npo->add_option("--d", d)->required();
    npo->add_option("--level", level)->required();
    npo->add_option("--irrep", irrep_str, "localize to this irrep block");
    npo->add_option("--emit", emit_path, "write SDPA sparse output here");
    npo->add_flag("--solve", do_solve, "run the bundled interior-point solver");
    add_caps(npo, caps);

    auto* ver = app.add_subcommand("verify", "cross-module identity suites");
    ver->add_option("--suite", suite)
        ->check(CLI::IsMember({"relations", "schur-weyl", "characters", "star", "all"}));
    ver->add_option("--d", d, "unused; kept for symmetry with other commands");
    add_caps(ver, caps);

    auto* gen = app.add_subcommand("gen", "emit graph files for standard families");
    gen->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"clique", "star", "bipartite", "path", "cycle"}));
    gen->add_option("--n", n)->required();
    gen->add_option("--k", k, "bipartite part size");
    gen->add_option("--weight", weight);
    gen->add_option("--graph-out", gen_out, "output path")->required();
    add_caps(gen, caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << std::flush;
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    json result;
    json inputs;
    std::string command;
    auto started = std::chrono::steady_clock::now();
    int exit_code = 0;

    try {
        if (*eta_cmd) {
            command = "eta";
            Partition lambda = Partition::parse(partition_str);
            if (d == 0) d = std::max(1, lambda.height());
            inputs = {{"partition", partition_json(lambda)}, {"d", d}};
            result = {{"eta", eta(lambda, d)}};
        } else if (*chr) {
            command = "char";
            Partition lambda = Partition::parse(partition_str);
            Partition cls = Partition::parse(class_str);
            inputs = {{"partition", partition_json(lambda)}, {"class", partition_json(cls)}};
            result = {{"chi", number(chi(lambda, ConjugacyClass{cls}))}};
        } else if (*gam) {
            command = "gamma";
            Partition lambda = Partition::parse(partition_str);
            inputs = {{"k", gamma_k}, {"partition", partition_json(lambda)}};
            result = {{"gamma", number(gamma_cycle(gamma_k, lambda))}};
        } else if (*lr_cmd) {
            command = "lr";
            Partition lambda = Partition::parse(lambda_str);
            Partition mu = Partition::parse(mu_str);
            Partition nu = Partition::parse(nu_str);
            inputs = {{"lambda", partition_json(lambda)},
                      {"mu", partition_json(mu)},
                      {"nu", partition_json(nu)}};
            result = {{"c", number(lr_coefficient(lambda, mu, nu))}};
        } else if (*clique) {
            command = "clique";
            inputs = {{"n", n}, {"d", d}};
            CliqueMax cm = clique_max(n, d);
            result = {{"value", cm.value}, {"argmax", partition_json(cm.argmax)}};
        } else if (*star) {
            command = "star";
            inputs = {{"n", n}, {"d", d}};
            result = {{"value", star_max(n, d)}};
            if (!irrep_str.empty()) {
                Partition lambda = Partition::parse(irrep_str);
                inputs["irrep"] = partition_json(lambda);
                result["spectrum"] = spectrum_json(star_block_spectrum(lambda, n, d));
            }
        } else if (*bip) {
            command = "bipartite";
            BipartiteMode mode =
                mode_str == "theorem" ? BipartiteMode::theorem : BipartiteMode::enumerate;
            inputs = {{"n", n}, {"k", k}, {"d", d}, {"mode", mode_str}};
            BipartiteMax bm = bipartite_max(n, k, d, mode);
            result = {{"value", bm.value}, {"witness", witness_json(bm.witness)}};
            int kk = 2 * k > n ? n - k : k;
            BipartiteParams params = bipartite_params(n, kk, d);
            json fe = json::array();
            for (int e : params.frak_e) fe.push_back(e);
            result["params"] = {{"k", kk},
                                {"e0", params.e0},
                                {"e1", params.e1},
                                {"e_star", number(params.e_star)},
                                {"frak_E", fe},
                                {"balancing", params.balancing}};
            if (mode == BipartiteMode::enumerate) {
                BipartiteMax merged = bipartite_max_uplus(n, k, d);
                result["uplus_value"] = merged.value;
                result["uplus_witness"] = witness_json(merged.witness);
            }
        } else if (*brute) {
            command = "brute";
            GraphSpec g = GraphSpec::load(graph_path);
            inputs = {{"graph", graph_path}, {"d", d}, {"method", method_str}};
            if (!irrep_str.empty()) {
                Partition lambda = Partition::parse(irrep_str);
                inputs["irrep"] = partition_json(lambda);
                Eigen::VectorXd spec = irrep_hamiltonian_spectrum(lambda, g);
                json arr = json::array();
                for (long i = 0; i < spec.size(); ++i) arr.push_back(number(spec(i)));
                result = {{"spectrum", arr}, {"max_eigenvalue", number(spec(spec.size() - 1))}};
            } else {
                HamiltonianOperator h(g, d);
                EigOptions opts;
                opts.method = method_str == "dense" ? EigMethod::dense : EigMethod::iterative;
                opts.dense_cap = caps.dense_cap;
                opts.seed = caps.seed;
                result = {{"max_eigenvalue", number(max_eigenvalue(h, opts))},
                          {"dim", static_cast<long>(h.dim())}};
            }
        } else if (*npo) {
            command = "npo";
            GraphSpec g = GraphSpec::load(graph_path);
            inputs = {{"graph", graph_path}, {"d", d}, {"level", level}};
            std::optional<Partition> loc;
            if (!irrep_str.empty()) {
                loc = Partition::parse(irrep_str);
                inputs["irrep"] = partition_json(*loc);
            }
            MomentSDP sdp = build_relaxation(g, d, level, loc);
            result = {{"basis_size", static_cast<int>(sdp.basis.size())},
                      {"variables", static_cast<int>(sdp.variables.size())},
                      {"constraints", static_cast<int>(sdp.constraints.size())}};
            if (!emit_path.empty()) {
                emit_sdpa_file(sdp, emit_path);
                result["emitted"] = emit_path;
            }
            if (do_solve) {
                SolverLimits limits{caps.solver_cap};
                SDPSolution sol = solve(sdp, {}, limits);
                result["value"] = number(sol.value);
                result["gap"] = number(sol.gap);
                result["status"] = status_name(sol.status);
                if (sol.status != SdpStatus::optimal) exit_code = 3;
            }
        } else if (*ver) {
            command = "verify";
            inputs = {{"suite", suite}};
            auto checks = verify_suite(suite);
            json arr = json::array();
            for (const auto& c : checks) {
                json item = {{"name", c.name}, {"pass", c.pass}};
                if (!c.detail.empty()) item["detail"] = c.detail;
                arr.push_back(item);
            }
            bool ok = all_pass(checks);
            result = {{"checks", arr}, {"all_pass", ok}};
            if (!ok) exit_code = 3;
        } else if (*gen) {
            command = "gen";
            inputs = {{"family", family}, {"n", n}, {"k", k}, {"weight", number(weight)}};
            GraphSpec g(0);
            if (family == "clique") g = GraphSpec::clique(n, weight);
            else if (family == "star") g = GraphSpec::star(n, weight);
            else if (family == "path") g = GraphSpec::path(n, weight);
            else if (family == "cycle") g = GraphSpec::cycle(n, weight);
            else {
                if (k < 1 || k >= n)
                    throw std::invalid_argument("bipartite family needs --k in 1..n-1");
                g = GraphSpec::complete_bipartite(n - k, k, weight);
            }
            g.save(gen_out);
            result = {{"path", gen_out},
                      {"n", g.n()},
                      {"edges", static_cast<int>(g.edges().size())}};
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    json doc = {{"schema", 1},
                {"command", command},
                {"inputs", inputs},
                {"result", result},
                {"runtime_ms", static_cast<long>(elapsed)}};
    out << doc.dump(2) << "\n";
    if (!caps.out_path.empty()) {
        std::ofstream f(caps.out_path);
        if (!f) {
            err << "error: cannot write " << caps.out_path << "\n";
            return 2;
        }
        f << doc.dump(2) << "\n";
    }
    return exit_code;
}

}  // namespace qmc
