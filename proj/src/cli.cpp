#include "disect/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "disect/constructions.hpp"
#include "disect/oracle.hpp"
#include "disect/partition_engine.hpp"
#include "disect/result_json.hpp"

namespace disect {

namespace {

Digraph load_digraph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GuardError("cannot read input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_digraph(buf.str());
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw GuardError("cannot write output file: " + path);
    file << text;
}

std::string layout_json(const ExtremalLayout& layout) {
    nlohmann::ordered_json doc;
    doc["d"] = layout.d;
    doc["k"] = layout.k;
    doc["apex"] = layout.apex;
    doc["copies"] = layout.copies;
    doc["bigClique"] = layout.big_clique;
    return doc.dump(2) + "\n";
}

struct EngineFlags {
    EngineConfig cfg;
    long long threshold = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--epsilon", cfg.epsilon, "tolerance in (0, 1/4)");
        cmd->add_option("--trials", cfg.trials, "Monte Carlo samples (0 = auto)");
        cmd->add_option("--seed", cfg.seed, "random seed");
        cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        cmd->add_option("--threshold", threshold,
                        "degree cutoff for the high-degree side (default n^(3/4))");
        cmd->add_option("--dense-constant", cfg.dense_constant,
                        "switch to dense sampling when m >= c (2d+1)^2 n");
    }

    EngineConfig config() const {
        EngineConfig c = cfg;
        if (threshold >= 0) c.threshold = threshold;
        return c;
    }
};

void print_summary(const PartitionResult& res, std::ostream& os) {
    const Certificate& cert = res.certificate;
    os << "mode " << cert.mode << ": n=" << cert.n << " m=" << cert.m_original
       << " d=" << cert.d << "\n"
       << "  cut  e12=" << res.bisection.stats.e12
       << " e21=" << res.bisection.stats.e21
       << " minDir=" << res.bisection.stats.min_dir() << " ratio="
       << std::setprecision(6) << cert.ratio_original << "\n";
    long long bound_num = cert.d, bound_den = 2 * (2 * cert.d + 1);
    os << "  guarantee d/(2(2d+1)) = " << bound_num << "/" << bound_den << " = "
       << static_cast<double>(bound_num) / static_cast<double>(bound_den)
       << " (minus epsilon " << cert.epsilon << ")\n";
    for (const auto& w : cert.warnings) os << "  warning: " << w << "\n";
    os << "  certificate: " << (cert.all_required_pass() ? "all required inequalities hold"
                                                         : "REQUIRED INEQUALITY FAILED")
       << "\n";
}

int run_partition(const std::string& input, const EngineFlags& flags,
                  const std::string& json_path, std::ostream& out,
                  std::ostream& err) {
    Digraph d = load_digraph(input);
    PartitionResult res = optimal_bisect(d, flags.config());

    // Double-entry check: recount the published cut straight from the arcs.
    {
        std::vector<char> side(d.n(), 0);
        for (int v : res.bisection.part2) side[v] = 1;
        long long e12 = 0, e21 = 0;
        for (auto [u, v] : d.arcs()) {
            if (side[u] == 0 && side[v] == 1) ++e12;
            if (side[u] == 1 && side[v] == 0) ++e21;
        }
        if (e12 != res.bisection.stats.e12 || e21 != res.bisection.stats.e21)
            throw Error("partition: emitted cut sizes disagree with a raw recount");
    }

    std::string doc = result_json_text(res);
    if (json_path.empty()) {
        out << doc;
        print_summary(res, err);
    } else {
        write_text(json_path, doc, out);
        print_summary(res, out);
    }
    return res.certificate.all_required_pass() ? 0 : 2;
}

int run_verify(const std::string& input, const EngineFlags& flags,
               long long oracle_max_n, std::ostream& out, std::ostream& err) {
    Digraph d = load_digraph(input);
    if (d.n() > oracle_max_n) {
        err << "verify: n=" << d.n() << " exceeds the oracle guard "
            << oracle_max_n << "; refusing to enumerate\n";
        return 1;
    }
    PartitionResult res = optimal_bisect(d, flags.config());
    OracleResult oracle = exact_best_bisection(d);
    long long engine_val = res.bisection.stats.min_dir();

    nlohmann::ordered_json doc;
    doc["n"] = d.n();
    doc["m"] = d.m();
    doc["engineMinDir"] = engine_val;
    doc["oracleOptimum"] = oracle.value;
    doc["dominance"] = engine_val <= oracle.value;
    doc["matched"] = engine_val == oracle.value;
    doc["explored"] = oracle.explored;
    out << doc.dump(2) << "\n";
    if (engine_val > oracle.value) {
        err << "verify: engine value exceeds the exhaustive optimum\n";
        return 2;
    }
    return 0;
}

int run_bench(const std::vector<long long>& ds, const std::vector<long long>& ks,
              const EngineFlags& flags, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    std::ostringstream csv;
    csv << "d,k,n,m,minDir,ratio,bound,margin\n";
    for (long long d : ds) {
        for (long long k : ks) {
            auto [graph, layout] =
                extremal_family(static_cast<int>(d), static_cast<int>(k));
            PartitionResult res = optimal_bisect(graph, flags.config());
            double ratio = res.certificate.ratio_original;
            double bound = static_cast<double>(d) / (2.0 * (2.0 * d + 1.0));
            csv << d << ',' << k << ',' << graph.n() << ',' << graph.m() << ','
                << res.bisection.stats.min_dir() << ',' << std::setprecision(10)
                << ratio << ',' << bound << ',' << ratio - bound << "\n";
            err << "bench d=" << d << " k=" << k
                << " minDir=" << res.bisection.stats.min_dir() << " ratio=" << ratio
                << " bound=" << bound << "\n";
        }
    }
    write_text(out_path, csv.str(), out);
    return 0;
}

} // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"disect: judicious bisections of directed graphs"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "emit test digraphs");
    generate->require_subcommand(1);

    auto* gen_extremal =
        generate->add_subcommand("extremal", "clique family with apex vertex");
    int ext_d = 1, ext_k = 1;
    std::string ext_out, ext_layout;
    gen_extremal->add_option("--d", ext_d, "semidegree parameter")->required();
    gen_extremal->add_option("--k", ext_k, "number of small cliques")->required();
    gen_extremal->add_option("--out", ext_out, "arc-list output path");
    gen_extremal->add_option("--layout", ext_layout, "JSON layout sidecar path");

    auto* gen_euler =
        generate->add_subcommand("eulerian", "balanced orientation of an odd clique");
    int euler_t = 3;
    std::string euler_out;
    gen_euler->add_option("--t", euler_t, "odd clique order >= 3")->required();
    gen_euler->add_option("--out", euler_out, "arc-list output path");

    auto* gen_random =
        generate->add_subcommand("random", "random digraph with a semidegree floor");
    int rnd_n = 10, rnd_d = 1;
    double rnd_p = 0.0;
    std::uint64_t rnd_seed = 0;
    std::string rnd_out;
    gen_random->add_option("--n", rnd_n, "vertex count")->required();
    gen_random->add_option("--d", rnd_d, "semidegree floor")->required();
    gen_random->add_option("--extra-arc-prob", rnd_p, "extra arc probability");
    gen_random->add_option("--seed", rnd_seed, "random seed");
    gen_random->add_option("--out", rnd_out, "arc-list output path");

    // partition
    auto* partition =
        app.add_subcommand("partition", "bisect a digraph and certify the run");
    std::string part_input, part_json;
    EngineFlags part_flags;
    partition->add_option("input", part_input, "arc-list input file")->required();
    part_flags.attach(partition);
    partition->add_option("--json", part_json,
                          "write the JSON document here instead of stdout");

    // verify
    auto* verify =
        app.add_subcommand("verify", "compare the engine against exhaustive search");
    std::string verify_input;
    long long verify_guard = 12;
    EngineFlags verify_flags;
    verify->add_option("input", verify_input, "arc-list input file")->required();
    verify->add_option("--oracle-max-n", verify_guard, "enumeration guard");
    verify_flags.attach(verify);

    // bench
    auto* bench =
        app.add_subcommand("bench", "ratio sweep over the extremal family (CSV)");
    std::vector<long long> bench_d{1, 2, 3};
    std::vector<long long> bench_k{10, 30, 100};
    std::string bench_out;
    EngineFlags bench_flags;
    bench->add_option("--d", bench_d, "semidegree parameters");
    bench->add_option("--k", bench_k, "clique counts");
    bench->add_option("--out", bench_out, "CSV output path");
    bench_flags.attach(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen_extremal->parsed()) {
            auto [d, layout] = extremal_family(ext_d, ext_k);
            write_text(ext_out, serialize(d), out);
            if (!ext_layout.empty()) write_text(ext_layout, layout_json(layout), out);
            err << "extremal d=" << ext_d << " k=" << ext_k << ": n=" << d.n()
                << " m=" << d.m() << "\n";
            return 0;
        }
        if (gen_euler->parsed()) {
            Digraph d = eulerian_complete_odd(euler_t);
            write_text(euler_out, serialize(d), out);
            err << "eulerian t=" << euler_t << ": m=" << d.m() << "\n";
            return 0;
        }
        if (gen_random->parsed()) {
            Digraph d = random_min_semidegree(rnd_n, rnd_d, rnd_p, rnd_seed);
            write_text(rnd_out, serialize(d), out);
            err << "random n=" << rnd_n << " d=" << rnd_d << ": m=" << d.m() << "\n";
            return 0;
        }
        if (partition->parsed())
            return run_partition(part_input, part_flags, part_json, out, err);
        if (verify->parsed())
            return run_verify(verify_input, verify_flags, verify_guard, out, err);
        if (bench->parsed())
            return run_bench(bench_d, bench_k, bench_flags, bench_out, out, err);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const GuardError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand executed\n";
    return 1;
}

} // namespace disect
