#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "linext/linext.hpp"

using nlohmann::json;
using namespace linext;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

InstanceFile load_instance(const std::string& path, InstanceKind kind) {
    if (path == "-") return parse_instance(std::cin, kind);
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return parse_instance(in, kind);
}

std::string fraction(int num, int den) {
    return std::to_string(num) + "/" + std::to_string(den);
}

json stats_json(const PackingStats& s) {
    return json{{"m", s.m},
                {"t", s.t},
                {"q", s.q},
                {"alpha", fraction(s.m, s.n)},
                {"beta", fraction(s.t, s.n)},
                {"gamma", fraction(s.q, s.n)}};
}

std::string stats_text(const PackingStats& s) {
    return "alpha=" + fraction(s.m, s.n) + " beta=" + fraction(s.t, s.n) +
           " gamma=" + fraction(s.q, s.n);
}

InstanceKind parse_kind(const std::string& kind) {
    if (kind == "perm" || kind == "permutation") return InstanceKind::Permutation;
    if (kind == "edges" || kind == "edgelist") return InstanceKind::EdgeList;
    throw ArgumentError("unknown instance kind: " + kind);
}

int run_count(const std::string& path, const std::string& kind_name, std::string algo,
              std::size_t max_states, bool as_json) {
    InstanceFile inst = load_instance(path, parse_kind(kind_name));
    if (algo == "auto")
        algo = inst.kind == InstanceKind::Permutation ? "2d-star" : "naive";
    if ((algo == "2d" || algo == "2d-star") && inst.kind != InstanceKind::Permutation)
        throw AlgorithmMismatchError(algo + " requires a permutation instance");
    Poset p = inst.to_poset();
    Timer timer;
    CountResult r;
    if (algo == "brute") {
        r.count = brute_force_le(p);
        r.algorithm = CountAlgorithm::BruteForce;
        r.stats.n = p.size();
    } else if (algo == "naive") {
        r = count_le_dp(p, max_states);
    } else if (algo == "2d") {
        r = count_le_2d(p, max_states);
    } else if (algo == "2d-star") {
        r = count_le_2d_star(p, max_states);
    } else {
        throw ArgumentError("unknown algorithm: " + algo);
    }
    double elapsed = timer.ms();
    if (as_json) {
        json out{{"kind", to_string(inst.kind)},
                 {"n", p.size()},
                 {"algorithm", to_string(r.algorithm)},
                 {"count", r.count.str()},
                 {"states_visited", r.states_visited},
                 {"route", to_string(r.route)},
                 {"large_matching", r.large_matching},
                 {"stats", stats_json(r.stats)},
                 {"elapsed_ms", elapsed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "instance:  " << to_string(inst.kind) << ", n=" << p.size() << "\n"
                  << "algorithm: " << to_string(r.algorithm) << "\n"
                  << "route:     " << to_string(r.route) << " (" << stats_text(r.stats) << ")\n"
                  << "count:     " << r.count.str() << "\n"
                  << "states:    " << r.states_visited << "\n"
                  << "elapsed:   " << elapsed << " ms\n";
    }
    return 0;
}

int run_jump(const std::string& path, const std::string& kind_name, std::string algo,
             bool witness, std::size_t max_states, bool as_json) {
    InstanceFile inst = load_instance(path, parse_kind(kind_name));
    if (algo == "auto") algo = "jn";
    Poset p = inst.to_poset();
    Timer timer;
    JumpResult r;
    if (algo == "brute") {
        r.jump_number = brute_force_jump(p);
        r.bump_number = p.size() == 0 ? 0 : p.size() - 1 - r.jump_number;
        r.algorithm = JumpAlgorithm::BruteForce;
        r.stats.n = p.size();
    } else if (algo == "naive") {
        r = jump_number_naive(p, max_states);
    } else if (algo == "jn") {
        r = jump_number_jn(p, max_states);
    } else {
        throw ArgumentError("unknown algorithm: " + algo);
    }
    double elapsed = timer.ms();
    if (as_json) {
        json out{{"kind", to_string(inst.kind)},
                 {"n", p.size()},
                 {"algorithm", to_string(r.algorithm)},
                 {"jump", r.jump_number},
                 {"bump", r.bump_number},
                 {"states_visited", r.states_visited},
                 {"stats", stats_json(r.stats)},
                 {"elapsed_ms", elapsed}};
        if (witness && r.witness) {
            json w = json::array();
            for (int x : *r.witness) w.push_back(x + 1);
            out["witness"] = w;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "instance:  " << to_string(inst.kind) << ", n=" << p.size() << "\n"
                  << "algorithm: " << to_string(r.algorithm) << "\n"
                  << "jump:      " << r.jump_number << "\n"
                  << "bump:      " << r.bump_number << " (" << stats_text(r.stats) << ")\n"
                  << "states:    " << r.states_visited << "\n"
                  << "elapsed:   " << elapsed << " ms\n";
        if (witness && r.witness) {
            std::cout << "witness:  ";
            for (int x : *r.witness) std::cout << " " << x + 1;
            std::cout << "\n";
        }
    }
    return 0;
}

int run_estimate(const std::string& path, bool as_json) {
    InstanceFile inst = load_instance(path, InstanceKind::Permutation);
    Timer timer;
    ResourceEstimate est = estimate_resources(inst.perm);
    double elapsed = timer.ms();
    const char* strategy = est.route == Route::Original ? "original" : "transformed";
    if (as_json) {
        json out{{"kind", "permutation"},
                 {"n", est.n},
                 {"downsets_original", est.downsets_original.str()},
                 {"downsets_transformed", est.downsets_transformed.str()},
                 {"stats", stats_json(est.stats)},
                 {"strategy", strategy},
                 {"large_matching", est.large_matching},
                 {"tau", est.tau},
                 {"pi", est.pi},
                 {"selected_bound", to_string(est.selected)},
                 {"selected_bound_value", est.selected_value},
                 {"elapsed_ms", elapsed}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "instance:       permutation, n=" << est.n << "\n"
                  << "downsets(P):    " << est.downsets_original.str() << "\n"
                  << "downsets(P'):   " << est.downsets_transformed.str() << "\n"
                  << "packing:        " << stats_text(est.stats) << "\n"
                  << "tau:            " << est.tau << "\n"
                  << "pi:             " << est.pi << "\n"
                  << "strategy:       " << strategy
                  << (est.large_matching ? " (large matching)" : "") << "\n"
                  << "bound:          " << to_string(est.selected) << "^n, base "
                  << est.selected_value << "\n"
                  << "elapsed:        " << elapsed << " ms\n";
    }
    return 0;
}

int run_certify(const std::string& target, double threshold, int depth, const std::string& out_path,
                bool as_json) {
    Timer timer;
    Certificate cert = certify_bound(target, threshold, depth);
    double elapsed = timer.ms();
    {
        std::ofstream out(out_path);
        if (!out) throw ArgumentError("cannot write " + out_path);
        write_certificate(out, cert);
    }
    if (as_json) {
        json out{{"expr", cert.target},
                 {"threshold", cert.threshold},
                 {"status", cert.certified() ? "Certified" : "Failed"},
                 {"boxes_processed", cert.boxes_processed},
                 {"leaves", cert.leaves.size()},
                 {"max_corner_bound", cert.max_corner_bound},
                 {"certificate_file", out_path},
                 {"elapsed_ms", elapsed}};
        if (cert.has_witness) {
            out["witness_value"] = cert.witness_value;
            json pt = json::array();
            for (int i = 0; i < 3; ++i) pt.push_back(cert.witness_point[static_cast<std::size_t>(i)]);
            out["witness_point"] = pt;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "expr:        " << cert.target << "\n"
                  << "threshold:   " << cert.threshold << "\n"
                  << "status:      " << (cert.certified() ? "Certified" : "Failed") << "\n"
                  << "boxes:       " << cert.boxes_processed << " processed, "
                  << cert.leaves.size() << " leaves\n"
                  << "max bound:   " << cert.max_corner_bound << "\n"
                  << "certificate: " << out_path << "\n"
                  << "elapsed:     " << elapsed << " ms\n";
        if (cert.has_witness)
            std::cout << "witness:     value " << cert.witness_value << "\n";
    }
    return cert.certified() ? 0 : 4;
}

int run_gen(const std::string& kind, int n, std::uint64_t seed, double density) {
    InstanceFile inst;
    if (kind == "perm" || kind == "permutation") {
        inst.kind = InstanceKind::Permutation;
        inst.perm = generate_permutation(n, seed);
        std::cout << "# linext gen permutation n=" << n << " seed=" << seed << "\n";
    } else if (kind == "dag") {
        inst.kind = InstanceKind::EdgeList;
        inst.n = n;
        inst.pairs = Poset::from_pairs(n, generate_dag_pairs(n, density, seed)).relation_pairs();
        std::cout << "# linext gen dag n=" << n << " seed=" << seed << " density=" << density
                  << "\n";
    } else {
        throw ArgumentError("unknown generator kind: " + kind);
    }
    render_instance(std::cout, inst);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear-extension counting, jump numbers, and certified bounds"};
    app.require_subcommand(1);

    std::string path, kind = "perm", algo = "auto", target, out_path = "certificate.txt";
    std::string gen_kind;
    std::size_t max_states = kDefaultMaxStates;
    bool as_json = false, witness = false;
    double threshold = 0.0, density = 0.3;
    int n = 0, depth = 60;
    std::uint64_t seed = 1;

    CLI::App* count = app.add_subcommand("count", "count linear extensions");
    count->add_option("file", path, "instance file, or - for stdin")->required();
    count->add_option("-k,--kind", kind, "perm or edges (default perm)");
    count->add_option("-a,--algo", algo, "auto, naive, 2d, 2d-star, brute");
    count->add_option("--max-states", max_states, "memoization cap");
    count->add_flag("--json", as_json, "machine-readable output");

    CLI::App* jump = app.add_subcommand("jump", "minimum jump number");
    jump->add_option("file", path, "instance file, or - for stdin")->required();
    jump->add_option("-k,--kind", kind, "perm or edges (default perm)");
    jump->add_option("-a,--algo", algo, "auto, naive, jn, brute");
    jump->add_flag("-w,--witness", witness, "emit an optimal linear extension");
    jump->add_option("--max-states", max_states, "memoization cap");
    jump->add_flag("--json", as_json, "machine-readable output");

    CLI::App* estimate = app.add_subcommand("estimate", "instance-specific cost estimate");
    estimate->add_option("file", path, "permutation file, or - for stdin")->required();
    estimate->add_flag("--json", as_json, "machine-readable output");

    CLI::App* certify = app.add_subcommand("certify", "certify a running-time bound");
    certify
        ->add_option("expr", target,
                     "tau-le, pi-le, partition, canonical, large-matching, gamma0, "
                     "tau-jn-entropy, tau-jn-simple, tau-jn")
        ->required();
    certify->add_option("threshold", threshold, "per-element base to certify against")->required();
    certify->add_option("-o,--out", out_path, "certificate file (default certificate.txt)");
    certify->add_option("--depth", depth, "split depth cap (default 60)");
    certify->add_flag("--json", as_json, "machine-readable output");

    CLI::App* gen = app.add_subcommand("gen", "generate a reproducible instance");
    gen->add_option("kind", gen_kind, "perm or dag")->required();
    gen->add_option("-n,--n", n, "element count")->required();
    gen->add_option("-s,--seed", seed, "PRNG seed (default 1)");
    gen->add_option("-d,--density", density, "edge probability for dag (default 0.3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (count->parsed()) return run_count(path, kind, algo, max_states, as_json);
        if (jump->parsed()) return run_jump(path, kind, algo, witness, max_states, as_json);
        if (estimate->parsed()) return run_estimate(path, as_json);
        if (certify->parsed()) return run_certify(target, threshold, depth, out_path, as_json);
        if (gen->parsed()) return run_gen(gen_kind, n, seed, density);
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const CycleError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const IndexError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const DepthExceededError& e) {
        std::cerr << "depth error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
