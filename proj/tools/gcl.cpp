// gcl command-line driver: reproducible entry points for generation,
// certification, testing, counting, and bound evaluation.
//
// Every run writes one directory containing manifest.json and its results;
// identical invocations reproduce the result files byte for byte.

#include "gcl/containers.hpp"
#include "gcl/counting.hpp"
#include "gcl/generators.hpp"
#include "gcl/io.hpp"
#include "gcl/oracles.hpp"
#include "gcl/serialize.hpp"
#include "gcl/tester.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace gcl;

namespace {

constexpr const char* kVersion = "gcl 0.1.0";

// Exit codes: 0 ok, 2 usage, 3 guard refusal, 4 soundness-check failure, 5 I/O.
enum ExitCode { kOk = 0, kUsage = 2, kGuard = 3, kCheckFailed = 4, kIo = 5 };

struct RunContext {
    std::string subcommand;
    json args = json::object();
    std::string out_dir; // empty: derive from subcommand + argument digest
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::vector<std::string> outputs;

    fs::path dir() {
        if (resolved_.empty()) {
            if (!out_dir.empty()) {
                resolved_ = out_dir;
            } else {
                const char* root = std::getenv("GCL_OUTPUT_ROOT");
                std::hash<std::string> h;
                std::ostringstream tag;
                tag << subcommand << '-' << std::hex << (h(args.dump()) & 0xffffffffu);
                resolved_ = fs::path(root ? root : "runs") / tag.str();
            }
            fs::create_directories(resolved_);
        }
        return resolved_;
    }

    void write(const std::string& name, const std::string& contents) {
        fs::path p = dir() / name;
        std::ofstream out(p);
        if (!out) throw std::runtime_error("cannot write " + p.string());
        out << contents;
        outputs.push_back(name);
    }
    void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        json manifest{{"version", kVersion},
                      {"subcommand", subcommand},
                      {"args", args},
                      {"outputs", outputs},
                      {"duration_ms", ms}};
        write("manifest.json", manifest.dump(2) + "\n");
        outputs.pop_back();
        std::cout << dir().string() << "\n";
    }

private:
    fs::path resolved_;
};

Rat opt_rat(const std::string& s, const char* what) {
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(std::string(what) + ": expected an exact rational like 3/16");
    }
}

json sidecar(const PlantedInstance& inst) {
    json j{{"family", inst.family}, {"params", inst.params}};
    j["planted"] = set_to_json(inst.planted);
    if (inst.boost_insufficient) j["boost_insufficient"] = true;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph containers for sparse subgraphs: generators, certificates, tester, counting"};
    app.set_version_flag("--version", kVersion);
    int threads = 1;
    app.add_option("--threads", threads, "worker cap (runs are sequential and deterministic)")
        ->capture_default_str();

    RunContext ctx;
    int exit_code = kOk;

    // ---------------------------------------------------------------- gen
    auto* gen = app.add_subcommand("gen", "generate an instance family");
    std::string gen_family, gen_out;
    int gen_n = 12, gen_copies = 1, gen_d = 2;
    std::string gen_p = "1/2", gen_rho = "1/2", gen_sparse_p = "0", gen_eps = "1/64";
    uint64_t gen_seed = 1;
    long gen_jsize = -1;
    gen->add_option("--family", gen_family, "gnp | planted | adversarial | kdd")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--p", gen_p, "edge probability p/q");
    gen->add_option("--rho", gen_rho, "rho as p/q");
    gen->add_option("--sparse-p", gen_sparse_p, "planted-set edge probability p/q");
    gen->add_option("--eps", gen_eps, "eps as p/q");
    gen->add_option("--copies", gen_copies, "number of K_{d,d} copies");
    gen->add_option("--d", gen_d, "half size d");
    gen->add_option("--j-size", gen_jsize, "adversarial |J| (default floor(rho*n/100))");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output directory");
    gen->callback([&] {
        ctx.subcommand = "gen";
        ctx.out_dir = gen_out;
        ctx.args = {{"family", gen_family}, {"n", gen_n},         {"p", gen_p},
                    {"rho", gen_rho},       {"sparse_p", gen_sparse_p}, {"eps", gen_eps},
                    {"copies", gen_copies}, {"d", gen_d},         {"j_size", gen_jsize},
                    {"seed", gen_seed}};
        if (gen_family == "gnp") {
            Graph g = gnp(gen_n, opt_rat(gen_p, "--p"), gen_seed);
            ctx.write("graph.txt", edge_list_string(g));
            ctx.write_json("graph.json", json{{"family", "gnp"},
                                              {"params", {{"n", gen_n}, {"p", gen_p}, {"seed", gen_seed}}}});
        } else if (gen_family == "planted") {
            auto inst = planted_close_instance(gen_n, opt_rat(gen_rho, "--rho"),
                                               opt_rat(gen_p, "--p"),
                                               opt_rat(gen_sparse_p, "--sparse-p"), gen_seed);
            ctx.write("graph.txt", edge_list_string(inst.graph));
            ctx.write_json("graph.json", sidecar(inst));
        } else if (gen_family == "adversarial") {
            auto inst = adversarial_log_instance(
                gen_n, opt_rat(gen_rho, "--rho"), opt_rat(gen_eps, "--eps"), gen_seed,
                gen_jsize > 0 ? std::optional<long>(gen_jsize) : std::nullopt);
            ctx.write("graph.txt", edge_list_string(inst.graph));
            ctx.write_json("graph.json", sidecar(inst));
        } else if (gen_family == "kdd") {
            Graph g = kdd_union(gen_copies, gen_d);
            ctx.write("graph.txt", edge_list_string(g));
            ctx.write_json("graph.json",
                           json{{"family", "kdd"},
                                {"params", {{"copies", gen_copies}, {"d", gen_d}}}});
        } else {
            throw CLI::ValidationError("--family must be gnp | planted | adversarial | kdd");
        }
        ctx.finish();
    });

    // ------------------------------------------------------------ certify
    auto* certify = app.add_subcommand("certify", "build container certificates for every sparse J");
    std::string cert_graph, cert_rho = "1/2", cert_eps = "auto", cert_ell = "strict", cert_out;
    bool cert_relaxed = false;
    int cert_guard = 0;
    certify->add_option("--graph", cert_graph, "edge-list file")->required();
    certify->add_option("--rho", cert_rho, "rho as p/q");
    certify->add_option("--eps", cert_eps, "eps as p/q, or 'auto' for the oracle-certified maximum");
    certify->add_option("--ell", cert_ell, "ell as p/q, or 'strict' for the smallest power of two meeting 1024*log^4(1/eps)");
    certify->add_flag("--relaxed", cert_relaxed, "permit parameters outside the lemma hypotheses");
    certify->add_option("--max-n", cert_guard, "override the exact-search guard");
    certify->add_option("--out", cert_out, "output directory");
    certify->callback([&] {
        ctx.subcommand = "certify";
        ctx.out_dir = cert_out;
        ctx.args = {{"graph", cert_graph}, {"rho", cert_rho},       {"eps", cert_eps},
                    {"ell", cert_ell},     {"relaxed", cert_relaxed}, {"max_n", cert_guard}};
        Graph g = load_graph(cert_graph);
        SearchLimits limits;
        if (cert_guard > 0) limits.max_n_search = limits.max_n_enumerate = cert_guard;

        Rat rho = opt_rat(cert_rho, "--rho");
        FarnessCertificate farness = distance_to_indepset(g, rho, limits);
        Rat eps = cert_eps == "auto" ? farness.eps_far_up_to : opt_rat(cert_eps, "--eps");
        bool far = eps > 0 && Rat(farness.min_edges) >= eps * g.vertex_count() * g.vertex_count();

        json summary{{"farness", farness_to_json(farness)}, {"eps", rat_str(eps)}};
        if (!far) {
            summary["result"] = "not eps-far";
            ctx.write_json("summary.json", summary);
            ctx.finish();
            exit_code = kCheckFailed;
            return;
        }

        Rat ell;
        if (cert_ell == "strict") {
            ell = 256;
            while (!GclParams{eps, rho, ell, true}.strict_ell()) ell *= 2;
        } else {
            ell = opt_rat(cert_ell, "--ell");
        }
        GclParams params{eps, rho, ell, cert_relaxed};
        params.validate();

        json certs = json::array();
        long pass_all = 0, fail_any = 0;
        enumerate_sparse_subsets(g, params.sparse_j_predicate(), [&](const VertexSet& j) {
            GclCertificate cert = build_gcl_certificate(g, j, params, true);
            certs.push_back(certificate_to_json(cert));
            (cert.conclusions_pass() ? pass_all : fail_any)++;
        }, limits);

        summary["ell"] = rat_str(ell);
        summary["relaxed"] = cert_relaxed;
        summary["strict_hypotheses"] = GclParams{eps, rho, ell, true}.strict_ell() &&
                                       eps < rho * rho / 2;
        summary["certificates"] = certs.size();
        summary["conclusions_pass"] = pass_all;
        summary["conclusions_fail"] = fail_any;
        ctx.write_json("certificates.json", certs);
        ctx.write_json("summary.json", summary);
        ctx.finish();
        if (fail_any) exit_code = kCheckFailed;
    });

    // ---------------------------------------------------------------- test
    auto* test = app.add_subcommand("test", "run the tolerant tester");
    std::string test_graph, test_rho = "1/2", test_eps = "1/16", test_c1 = "1", test_c2 = "1",
                test_budget = "-1", test_out, test_family;
    long test_s = 0, test_trials = 100;
    uint64_t test_seed = 1;
    bool test_csv = false;
    test->add_option("--graph", test_graph, "edge-list file")->required();
    test->add_option("--rho", test_rho, "rho as p/q");
    test->add_option("--eps", test_eps, "eps as p/q");
    test->add_option("--c1", test_c1, "budget constant c1");
    test->add_option("--c2", test_c2, "sample-size constant c2");
    test->add_option("--s", test_s, "sample size override (0: formula default)");
    test->add_option("--budget", test_budget, "accept budget override (-1: formula default)");
    test->add_option("--trials", test_trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    test->add_option("--seed", test_seed, "base seed");
    test->add_flag("--csv", test_csv, "emit results.csv sweep row");
    test->add_option("--family", test_family, "family label for the CSV row");
    test->add_option("--out", test_out, "output directory");
    test->callback([&] {
        ctx.subcommand = "test";
        ctx.out_dir = test_out;
        ctx.args = {{"graph", test_graph},   {"rho", test_rho}, {"eps", test_eps},
                    {"c1", test_c1},         {"c2", test_c2},   {"s", test_s},
                    {"budget", test_budget}, {"trials", test_trials}, {"seed", test_seed}};
        Graph g = load_graph(test_graph);
        TesterConfig cfg;
        cfg.rho = opt_rat(test_rho, "--rho");
        cfg.eps = opt_rat(test_eps, "--eps");
        cfg.c1 = opt_rat(test_c1, "--c1");
        cfg.c2 = opt_rat(test_c2, "--c2");
        cfg.s = test_s;
        cfg.accept_budget = Int(test_budget);
        cfg.seed = test_seed;
        AcceptanceStats st = monte_carlo(g, cfg, test_trials);
        long s_resolved = cfg.resolved_s();
        json out = stats_to_json(st);
        out["s"] = s_resolved;
        out["budget"] = cfg.resolved_budget(s_resolved).get_str();
        ctx.write_json("results.json", out);
        if (test_csv) {
            std::ostringstream csv;
            csv << "family,n,rho,eps,s,budget,trials,accept_rate,ci_low,ci_high\n"
                << test_family << ',' << g.vertex_count() << ',' << test_rho << ',' << test_eps
                << ',' << s_resolved << ',' << cfg.resolved_budget(s_resolved).get_str() << ','
                << st.trials << ',' << st.rate << ',' << st.ci_low << ',' << st.ci_high << "\n";
            ctx.write("results.csv", csv.str());
        }
        ctx.finish();
    });

    // --------------------------------------------------------------- count
    auto* count = app.add_subcommand("count", "exact sparse-subgraph counting and bounds");
    std::string count_graph, count_family, count_density, count_out;
    int count_copies = 1, count_d = 2;
    long count_edges = -1, count_k = 0;
    bool count_indep = false, count_markov = false, count_lb = false, count_container = false;
    std::string count_csmall = "1", count_clarge = "1", count_c3 = "1";
    int count_guard = 0;
    count->add_option("--graph", count_graph, "edge-list file");
    count->add_option("--family", count_family, "kdd (with --copies/--d) instead of --graph");
    count->add_option("--copies", count_copies, "K_{d,d} copies");
    count->add_option("--d", count_d, "half size d");
    count->add_flag("--independent", count_indep, "count independent sets");
    count->add_option("--density", count_density, "count subsets with density <= p/q");
    count->add_option("--max-edges", count_edges, "count subsets with at most this many edges");
    count->add_flag("--markov", count_markov, "check the >= 2^(n-1) density claim (d-regular)");
    count->add_flag("--container-bound", count_container, "certificate-derived covering bound (needs --k)");
    count->add_flag("--lower-bound", count_lb, "K_{d,d} lower-bound family report (needs --k)");
    count->add_option("--k", count_k, "density divisor k");
    count->add_option("--c-small", count_csmall, "recipe constant for k < d^3");
    count->add_option("--c-large", count_clarge, "recipe constant for k >= d^3");
    count->add_option("--c3", count_c3, "container-lemma constant c3");
    count->add_option("--max-n", count_guard, "override the enumeration guard");
    std::vector<int> sweep_d, sweep_copies;
    std::vector<long> sweep_k;
    count->add_option("--sweep-d", sweep_d, "d values for a CSV sweep")->delimiter(',');
    count->add_option("--sweep-copies", sweep_copies, "copies values for a CSV sweep")
        ->delimiter(',');
    count->add_option("--sweep-k", sweep_k, "k values for a CSV sweep")->delimiter(',');
    count->add_option("--out", count_out, "output directory");
    count->callback([&] {
        ctx.subcommand = "count";
        ctx.out_dir = count_out;
        ctx.args = {{"graph", count_graph},   {"family", count_family}, {"copies", count_copies},
                    {"d", count_d},           {"independent", count_indep},
                    {"density", count_density}, {"max_edges", count_edges},
                    {"markov", count_markov}, {"container_bound", count_container},
                    {"lower_bound", count_lb},  {"k", count_k}};
        SearchLimits limits;
        if (count_guard > 0) limits.max_n_search = limits.max_n_enumerate = count_guard;

        int modes = count_indep + !count_density.empty() + (count_edges >= 0) + count_markov +
                    count_container + count_lb;
        if (modes != 1)
            throw CLI::ValidationError("pick exactly one of --independent | --density | "
                                       "--max-edges | --markov | --container-bound | --lower-bound");

        // CSV sweep over (d, copies, k) for the two kdd-parameterized reports
        if (!sweep_d.empty() || !sweep_copies.empty() || !sweep_k.empty()) {
            if (!count_lb && !count_container)
                throw CLI::ValidationError("--sweep-* applies to --lower-bound or --container-bound");
            if (sweep_d.empty()) sweep_d = {count_d};
            if (sweep_copies.empty()) sweep_copies = {count_copies};
            if (sweep_k.empty()) sweep_k = {count_k < 1 ? 1 : count_k};
            std::ostringstream csv;
            json rows = json::array();
            csv << (count_lb ? "d,copies,k,formula,family_size,sparse_count,members_pass,"
                                "family_ge_formula\n"
                              : "d,copies,k,exact_count,bound,distinct_fingerprints,pass\n");
            for (int d : sweep_d)
                for (int copies : sweep_copies)
                    for (long k : sweep_k) {
                        if (count_lb) {
                            auto rep = kdd_lower_bound_count(d, copies, k, limits);
                            csv << d << ',' << copies << ',' << k << ',' << rep.formula.get_str()
                                << ',' << rep.family_size.get_str() << ','
                                << (rep.sparse_count ? rep.sparse_count->get_str() : "") << ','
                                << rep.members_pass_density << ',' << rep.family_ge_formula
                                << "\n";
                            json row = lower_bound_family_to_json(rep);
                            row["d"] = d;
                            row["copies"] = copies;
                            row["k"] = k;
                            rows.push_back(row);
                        } else {
                            auto rep = container_count_bound(
                                kdd_union(copies, d), k, opt_rat(count_csmall, "--c-small"),
                                opt_rat(count_clarge, "--c-large"), opt_rat(count_c3, "--c3"),
                                limits);
                            csv << d << ',' << copies << ',' << k << ','
                                << rep.exact_count.get_str() << ',' << rep.bound.get_str() << ','
                                << rep.distinct_fingerprints.get_str() << ',' << rep.pass << "\n";
                            json row = count_report_to_json(rep);
                            row["d"] = d;
                            row["copies"] = copies;
                            row["k"] = k;
                            rows.push_back(row);
                        }
                    }
            ctx.write("results.csv", csv.str());
            ctx.write_json("results.json", rows);
            ctx.finish();
            return;
        }

        if (count_lb) {
            if (count_k < 1) throw CLI::ValidationError("--lower-bound needs --k >= 1");
            auto rep = kdd_lower_bound_count(count_d, count_copies, count_k, limits);
            ctx.write_json("results.json", lower_bound_family_to_json(rep));
            ctx.finish();
            if (!(rep.family_ge_formula && rep.members_pass_density && rep.sparse_ge_family))
                exit_code = kCheckFailed;
            return;
        }

        Graph g = !count_graph.empty() ? load_graph(count_graph)
                  : count_family == "kdd"
                      ? kdd_union(count_copies, count_d)
                      : throw CLI::ValidationError("need --graph or --family kdd");

        if (count_indep) {
            Int c = count_independent_exact(g, limits);
            ctx.write_json("results.json", json{{"independent_sets", c.get_str()}});
        } else if (!count_density.empty()) {
            Int c = count_sparse_exact(
                g, SparsityPredicate::density_at_most(opt_rat(count_density, "--density")), limits);
            ctx.write_json("results.json",
                           json{{"count", c.get_str()}, {"threshold", count_density}});
        } else if (count_edges >= 0) {
            Int c = count_sparse_exact(g, SparsityPredicate::edge_budget(Int(count_edges)), limits);
            ctx.write_json("results.json",
                           json{{"count", c.get_str()}, {"max_edges", count_edges}});
        } else if (count_markov) {
            auto rep = markov_density_count(g, g.degree(0), limits);
            ctx.write_json("results.json", markov_to_json(rep));
            if (!rep.pass) exit_code = kCheckFailed;
        } else if (count_container) {
            if (count_k < 1) throw CLI::ValidationError("--container-bound needs --k >= 1");
            auto rep = container_count_bound(g, count_k, opt_rat(count_csmall, "--c-small"),
                                             opt_rat(count_clarge, "--c-large"),
                                             opt_rat(count_c3, "--c3"), limits);
            ctx.write_json("results.json", count_report_to_json(rep));
            if (!rep.pass) exit_code = kCheckFailed;
        }
        ctx.finish();
    });

    // --------------------------------------------------------------- bound
    auto* bound = app.add_subcommand("bound", "evaluate the analytic bounds");
    std::string bound_kind, bound_theta = "0", bound_rho = "1/2", bound_eps = "1/16",
                bound_c1 = "1", bound_c2 = "1", bound_c3 = "1", bound_out;
    long bound_N = 0, bound_K = 0, bound_n = 0, bound_s = 0;
    bound->add_option("--kind", bound_kind, "chernoff | farcase")->required();
    bound->add_option("--N", bound_N, "population size");
    bound->add_option("--K", bound_K, "marked elements");
    bound->add_option("--n", bound_n, "draws");
    bound->add_option("--theta", bound_theta, "tail threshold (rational)");
    bound->add_option("--rho", bound_rho, "rho as p/q");
    bound->add_option("--eps", bound_eps, "eps as p/q");
    bound->add_option("--c1", bound_c1, "constant c1");
    bound->add_option("--c2", bound_c2, "constant c2");
    bound->add_option("--c3", bound_c3, "constant c3");
    bound->add_option("--s", bound_s, "sample size (0: formula default)");
    bound->add_option("--out", bound_out, "output directory");
    bound->callback([&] {
        ctx.subcommand = "bound";
        ctx.out_dir = bound_out;
        ctx.args = {{"kind", bound_kind}, {"N", bound_N},     {"K", bound_K},
                    {"n", bound_n},       {"theta", bound_theta}, {"rho", bound_rho},
                    {"eps", bound_eps},   {"c1", bound_c1},   {"c2", bound_c2},
                    {"c3", bound_c3},     {"s", bound_s}};
        if (bound_kind == "chernoff") {
            Rat theta = opt_rat(bound_theta, "--theta");
            RatInterval b = chernoff_tail(bound_N, bound_K, bound_n, theta);
            json out{{"bound_hi", b.hi.get_d()}, {"bound_hi_exact", rat_str(b.hi)}};
            if (bound_N <= 30) {
                Rat exact = hypergeom_tail_exact(bound_N, bound_K, bound_n, theta);
                out["exact_tail"] = rat_str(exact);
                out["dominates"] = b.lo >= exact;
            }
            ctx.write_json("results.json", out);
        } else if (bound_kind == "farcase") {
            TesterConfig cfg;
            cfg.rho = opt_rat(bound_rho, "--rho");
            cfg.eps = opt_rat(bound_eps, "--eps");
            cfg.c1 = opt_rat(bound_c1, "--c1");
            cfg.c2 = opt_rat(bound_c2, "--c2");
            cfg.s = bound_s;
            ctx.write_json("results.json", farcase_to_json(far_case_bound(cfg, opt_rat(bound_c3, "--c3"))));
        } else {
            throw CLI::ValidationError("--kind must be chernoff | farcase");
        }
        ctx.finish();
    });

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kGuard;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return exit_code;
}
