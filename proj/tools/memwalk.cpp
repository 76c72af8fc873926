// memwalk: simulate and verify one-dimensional walks with two-step memory.
//
// Exit codes: 0 success, 1 verification/runtime failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "memwalk/analysis.hpp"
#include "memwalk/closed_form.hpp"
#include "memwalk/engine.hpp"
#include "memwalk/io.hpp"

namespace {

using namespace memwalk;

unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MEMWALK_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), hw);
    }
    return hw;
}

ShiftCase parse_case(const std::string& s) {
    if (s == "a") return ShiftCase::a;
    if (s == "b") return ShiftCase::b;
    if (s == "c") return ShiftCase::c;
    if (s == "d") return ShiftCase::d;
    throw CLI::ValidationError("--case", "unknown shift case '" + s + "'");
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    f << content;
    if (!f) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

struct CommonOpts {
    std::string kind = "memory";
    std::string shift_case = "c";
    std::string initial = "default";
    std::string format = "csv";
    std::string output;
    std::vector<double> coin_matrix;  // a b c d (real); empty = Hadamard
    int steps = 10;
};

int cmd_simulate(const CommonOpts& o) {
    WalkSpec spec;
    spec.steps = o.steps;
    spec.shift = parse_case(o.shift_case);
    spec.initial = o.initial == "symmetric" ? InitialCondition::symmetric()
                                            : InitialCondition::standard();
    if (o.kind == "classical") {
        spec.kind = WalkKind::classical_order2;
    } else if (o.kind == "quantum") {
        spec.kind = WalkKind::quantum_order1;
    } else if (o.kind == "memory") {
        spec.kind = WalkKind::quantum_order2;
    } else {
        std::cerr << "error: unknown walk kind '" << o.kind << "'\n";
        return 2;
    }

    if (!o.coin_matrix.empty()) {
        // General coin: float path, order-2 only, CSV only.
        spec.coin = CoinSpec::general(o.coin_matrix[0], o.coin_matrix[1], o.coin_matrix[2],
                                      o.coin_matrix[3]);
        auto dist = measure_positions(run_general(spec));
        std::string out = "position,probability\n";
        for (const auto& [k, p] : dist)
            out += std::to_string(k) + "," + detail::fmt_double(p) + "\n";
        return write_output(o.output, out);
    }

    Distribution dist = run_distribution(spec);
    if (o.format == "json")
        return write_output(o.output, distribution_to_json(dist, o.steps).dump(2) + "\n");
    return write_output(o.output, distribution_to_csv(dist));
}

int cmd_closed_form(const CommonOpts& o) {
    Distribution dist;
    for (long long k = -o.steps; k <= o.steps; ++k) {
        Dyadic p = closed_form_probability(o.steps, k);
        if (p != Dyadic::zero()) dist.add(k, p);
    }
    if (o.format == "json")
        return write_output(o.output, distribution_to_json(dist, o.steps).dump(2) + "\n");
    return write_output(o.output, distribution_to_csv(dist));
}

int cmd_verify(int n_max) {
    unsigned threads = thread_budget();
    long long compared = 0, mismatches = 0;
    for (int n = 1; n <= n_max; ++n) {
        auto oracle = path_sum_table(n, threads);
        WalkState engine_state = run({WalkKind::quantum_order2, CoinSpec::hadamard(),
                                      ShiftCase::c, InitialCondition::standard(), n});
        for (long long k = -n; k <= n; ++k) {
            if ((k - n) % 2 != 0) continue;
            for (Ending e : {Ending::LL, Ending::LR, Ending::RL, Ending::RR}) {
                ++compared;
                auto it = oracle.find({k, e});
                long long oracle_num = it == oracle.end() ? 0 : it->second;
                long long engine_num = engine_state.amplitude(ending_ket(k, e)).numerator;
                long long closed_num = closed_form_amplitude({n, k, e}).numerator;
                if (oracle_num != engine_num || oracle_num != closed_num) {
                    ++mismatches;
                    std::cout << "MISMATCH n=" << n << " k=" << k << " ending="
                              << to_string(e) << ": engine " << engine_num << ", path-sum "
                              << oracle_num << ", closed-form " << closed_num << "\n";
                }
            }
        }
    }
    std::cout << compared << " tuples compared, " << mismatches << " mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_figures(const std::string& dir) {
    struct Fig {
        const char* name;
        int steps;
        bool symmetric;
    };
    for (const Fig& f : {Fig{"fig1.csv", 10, false}, Fig{"fig2.csv", 40, false},
                         Fig{"fig3.csv", 40, true}}) {
        std::string path = dir.empty() ? f.name : dir + "/" + f.name;
        if (int rc = write_output(path, comparison_to_csv(compare_walks(f.steps, f.symmetric))))
            return rc;
    }
    return 0;
}

int cmd_localization(int max_n, const std::string& initial, const std::string& output) {
    auto init = initial == "symmetric" ? InitialCondition::symmetric()
                                       : InitialCondition::standard();
    std::string out = "steps,p_origin,a_LR,a_RL,a_LL,a_RR\n";
    for (const auto& row : localization_series(max_n, init)) {
        out += std::to_string(row.steps) + "," +
               detail::fmt_double(row.origin_probability.to_double()) + "," +
               detail::fmt_double(row.lr.value()) + "," + detail::fmt_double(row.rl.value()) +
               "," + detail::fmt_double(row.ll.value()) + "," +
               detail::fmt_double(row.rr.value()) + "\n";
    }
    return write_output(output, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time walks with two-step memory: simulation, "
                 "closed-form evaluation and cross-verification"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Read options from a key=value file; subcommand options go in a "
                   "[subcommand] section");

    CommonOpts opt;
    int n_max = 12;
    int loc_max = 40;
    std::string fig_dir;

    auto* sim = app.add_subcommand("simulate", "Run a walk and emit its distribution");
    sim->fallthrough();
    sim->add_option("--kind", opt.kind, "classical | quantum | memory")
        ->check(CLI::IsMember({"classical", "quantum", "memory"}));
    sim->add_option("--case", opt.shift_case, "Shift case: a | b | c | d")
        ->check(CLI::IsMember({"a", "b", "c", "d"}));
    sim->add_option("--steps", opt.steps, "Number of steps")->check(CLI::NonNegativeNumber);
    sim->add_option("--initial", opt.initial, "default | symmetric")
        ->check(CLI::IsMember({"default", "symmetric"}));
    sim->add_option("--format", opt.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sim->add_option("--output", opt.output, "Output path (default stdout)");
    sim->add_option("--coin-matrix", opt.coin_matrix,
                    "General coin entries a b c d (float path)")
        ->expected(4);

    auto* cf = app.add_subcommand("closed-form",
                                  "Evaluate the closed-form position probabilities");
    cf->fallthrough();
    cf->add_option("--steps", opt.steps, "Number of steps")->check(CLI::PositiveNumber);
    cf->add_option("--format", opt.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cf->add_option("--output", opt.output, "Output path (default stdout)");

    auto* ver = app.add_subcommand(
        "verify", "Cross-check engine, path-sum and closed-form amplitudes");
    ver->fallthrough();
    ver->add_option("--n-max", n_max, "Largest step count to check (<= 20)")
        ->check(CLI::Range(1, 20));

    auto* fig = app.add_subcommand("figures", "Emit the three comparison tables");
    fig->fallthrough();
    fig->add_option("--output-dir", fig_dir, "Directory for fig1/fig2/fig3 CSV files");

    auto* loc = app.add_subcommand("localization", "Origin amplitude series for even n");
    loc->fallthrough();
    loc->add_option("--max-n", loc_max, "Largest (even) step count")->check(CLI::Range(2, 60));
    loc->add_option("--initial", opt.initial, "default | symmetric")
        ->check(CLI::IsMember({"default", "symmetric"}));
    loc->add_option("--output", opt.output, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(opt);
        if (cf->parsed()) return cmd_closed_form(opt);
        if (ver->parsed()) return cmd_verify(n_max);
        if (fig->parsed()) return cmd_figures(fig_dir);
        if (loc->parsed()) return cmd_localization(loc_max, opt.initial, opt.output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
