// bergesat: generate, verify and count Berge-star-saturated hypergraphs and
// linear nearly-regular hypergraphs from the configuration model.
//
// All subcommands read and write the canonical hypergraph text format
// (`n k m` header plus one sorted edge per line). Exit codes: 0 success /
// verdict true, 1 verdict false, 2 error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergesat/bergesat.hpp"

namespace {

using nlohmann::ordered_json;
using namespace bergesat;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::invalid_params, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(errc::invalid_params, "cannot write " + path);
    out << content;
}

std::string format_rational(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

// integral rationals stay integers in JSON; only genuine halves/quarters
// become floating point
ordered_json json_rational(const Rational& r) {
    if (r.denominator() == 1) return ordered_json(r.numerator());
    return ordered_json(to_double(r));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_edge(const Edge& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(e[i]);
    }
    return s;
}

void print_witness(const Hypergraph& h, const PatternGraph& g, const BergeWitness& w) {
    for (int v = 0; v < g.p; ++v)
        std::cout << "vertex " << v << " -> " << w.vertex_map[static_cast<std::size_t>(v)]
                  << "\n";
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        std::cout << "pattern-edge " << g.edges[i].first << " " << g.edges[i].second
                  << " -> hyperedge " << w.edge_map[i] << ": "
                  << format_edge(h.edges()[w.edge_map[i]]) << "\n";
}

struct TargetArgs {
    int star = -1;
    std::string pattern_file;

    void attach(CLI::App* cmd) {
        auto* star_opt = cmd->add_option("--star", star, "leaf count of the star K_{1,L}");
        auto* pattern_opt =
            cmd->add_option("--pattern", pattern_file, "pattern graph file (`p m` header)");
        star_opt->excludes(pattern_opt);
        pattern_opt->excludes(star_opt);
    }

    bool is_star() const { return star >= 0; }

    void require_one() const {
        if (!is_star() && pattern_file.empty())
            raise(errc::invalid_params, "one of --star or --pattern is required");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Berge-star saturation numbers, constructions and samplers"};
    app.set_version_flag("--version", "bergesat 1.0.0");
    app.require_subcommand(1);

    // gen-regular
    auto* gen = app.add_subcommand(
        "gen-regular", "sample a linear nearly-d-regular k-uniform hypergraph");
    int gen_n = 0, gen_d = 0, gen_k = 0;
    std::uint64_t gen_seed = 0;
    long long gen_max_trials = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--d", gen_d, "target degree")->required();
    gen->add_option("--k", gen_k, "uniformity")->required();
    gen->add_option("--seed", gen_seed, "master seed (default 0)");
    gen->add_option("--max-trials", gen_max_trials, "rejection budget override");
    gen->add_option("--out", gen_out, "output hypergraph file")->required();

    // experiment-poisson
    auto* poisson = app.add_subcommand(
        "experiment-poisson", "empirical loop/overlap statistics of the configuration model");
    int poi_n = 0, poi_d = 0, poi_k = 0;
    long long poi_trials = 0;
    std::uint64_t poi_seed = 0;
    bool poi_json = false;
    poisson->add_option("--n", poi_n, "vertex count")->required();
    poisson->add_option("--d", poi_d, "target degree")->required();
    poisson->add_option("--k", poi_k, "uniformity")->required();
    poisson->add_option("--trials", poi_trials, "number of samples")->required();
    poisson->add_option("--seed", poi_seed, "master seed (default 0)");
    poisson->add_flag("--json", poi_json, "single-line JSON output");

    // check-berge
    auto* check = app.add_subcommand("check-berge", "test Berge containment");
    std::string check_file;
    bool check_witness = false;
    TargetArgs check_target;
    check->add_option("--hypergraph", check_file, "hypergraph file")->required();
    check_target.attach(check);
    check->add_flag("--witness", check_witness, "print a witness when contained");

    // sat-value
    auto* sat = app.add_subcommand("sat-value", "evaluate the Berge-star saturation number");
    long long sat_n = 0, sat_l = 0;
    int sat_k = 0;
    bool sat_json = false;
    sat->add_option("--n", sat_n, "vertex count")->required();
    sat->add_option("--k", sat_k, "uniformity")->required();
    sat->add_option("--l", sat_l, "leaf count")->required();
    sat->add_flag("--json", sat_json, "single-line JSON output");

    // build-saturated
    auto* build = app.add_subcommand("build-saturated",
                                     "construct a Berge-K_{1,l}-saturated hypergraph");
    int build_n = 0, build_k = 0;
    long long build_l = 0, build_max_trials = 0;
    std::uint64_t build_seed = 0;
    std::string build_out;
    build->add_option("--n", build_n, "vertex count")->required();
    build->add_option("--k", build_k, "uniformity")->required();
    build->add_option("--l", build_l, "leaf count")->required();
    build->add_option("--seed", build_seed, "master seed (default 0)");
    build->add_option("--max-trials", build_max_trials, "linear-part budget override");
    build->add_option("--out", build_out, "output hypergraph file")->required();

    // check-saturated
    auto* verify = app.add_subcommand("check-saturated", "verify Berge saturation");
    std::string verify_file;
    bool verify_json = false;
    TargetArgs verify_target;
    verify->add_option("--hypergraph", verify_file, "hypergraph file")->required();
    verify_target.attach(verify);
    verify->add_flag("--json", verify_json, "single-line JSON output");

    // build-clique-sat
    auto* clique = app.add_subcommand("build-clique-sat",
                                      "construct the Berge-K_l-saturated clique hypergraph");
    int clique_n = 0, clique_k = 0;
    long long clique_l = 0;
    std::string clique_out;
    clique->add_option("--n", clique_n, "vertex count")->required();
    clique->add_option("--k", clique_k, "uniformity")->required();
    clique->add_option("--l", clique_l, "clique size")->required();
    clique->add_option("--out", clique_out, "output hypergraph file")->required();

    // brute-min
    auto* brute = app.add_subcommand("brute-min",
                                     "exhaustive minimum saturated edge count (tiny n)");
    int brute_n = 0, brute_k = 0;
    long long brute_l = 0, brute_budget = 10000000;
    std::string brute_out;
    brute->add_option("--n", brute_n, "vertex count")->required();
    brute->add_option("--k", brute_k, "uniformity")->required();
    brute->add_option("--l", brute_l, "leaf count")->required();
    brute->add_option("--budget", brute_budget, "max subsets examined");
    brute->add_option("--out", brute_out, "save the witness hypergraph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (gen->parsed()) {
        const std::optional<long long> budget =
            gen->count("--max-trials") ? std::optional<long long>(gen_max_trials) : std::nullopt;
        const Hypergraph h = sample_linear_nearly_regular(gen_n, gen_d, gen_k, gen_seed, budget);
        write_file(gen_out, serialize_hypergraph(h));
        return 0;
    }

    if (poisson->parsed()) {
        const SamplerStats stats = poisson_experiment(poi_n, poi_d, poi_k, poi_trials, poi_seed);
        if (poi_json) {
            ordered_json j;
            j["trials_run"] = stats.trials_run;
            j["mean_loops"] = to_double(stats.mean_loops);
            j["mean_overlaps"] = to_double(stats.mean_overlaps);
            j["frac_defect_free"] = to_double(stats.frac_defect_free);
            j["lambda"] = json_rational(stats.lambda);
            j["mu"] = json_rational(stats.mu);
            j["predicted_success"] = stats.predicted_success;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "trials_run " << stats.trials_run << "\n"
                      << "mean_loops " << format_rational(stats.mean_loops) << "\n"
                      << "mean_overlaps " << format_rational(stats.mean_overlaps) << "\n"
                      << "frac_defect_free " << format_rational(stats.frac_defect_free) << "\n"
                      << "lambda " << format_rational(stats.lambda) << "\n"
                      << "mu " << format_rational(stats.mu) << "\n"
                      << "predicted_success " << format_double(stats.predicted_success) << "\n";
        }
        return 0;
    }

    if (check->parsed()) {
        check_target.require_one();
        const Hypergraph h = parse_hypergraph(read_file(check_file));
        BergeCheck result;
        PatternGraph pattern = PatternGraph::star(0);
        if (check_target.is_star()) {
            pattern = PatternGraph::star(check_target.star);
            result = contains_berge_star(h, check_target.star);
        } else {
            pattern = parse_pattern(read_file(check_target.pattern_file));
            result = contains_berge(h, pattern);
        }
        std::cout << (result.contained ? "contained" : "not contained") << "\n";
        if (check_witness && result.witness) {
            if (!validate_witness(h, pattern, *result.witness))
                raise(errc::invalid_params, "internal witness failed validation");
            print_witness(h, pattern, *result.witness);
        }
        return result.contained ? 0 : 1;
    }

    if (sat->parsed()) {
        const SatFormulaResult result = sat_star_value(sat_n, sat_k, sat_l);
        if (sat_json) {
            ordered_json j;
            j["n"] = sat_n;
            j["k"] = sat_k;
            j["l"] = sat_l;
            j["value"] = result.value;
            j["minimizers"] = result.minimizers;
            j["chosen_a"] = result.chosen_a ? ordered_json(*result.chosen_a) : ordered_json();
            j["feasible_max"] = result.feasible_max;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "value " << result.value << "\n";
            std::cout << "minimizers";
            for (long long a : result.minimizers) std::cout << " " << a;
            if (result.minimizers.empty()) std::cout << " -";
            std::cout << "\n";
            std::cout << "chosen_a ";
            if (result.chosen_a)
                std::cout << *result.chosen_a << "\n";
            else
                std::cout << "-\n";
            std::cout << "feasible_max " << result.feasible_max << "\n";
        }
        return 0;
    }

    if (build->parsed()) {
        const std::optional<long long> budget =
            build->count("--max-trials") ? std::optional<long long>(build_max_trials)
                                         : std::nullopt;
        const Hypergraph h = build_saturated_star(build_n, build_k, build_l, build_seed, budget);
        write_file(build_out, serialize_hypergraph(h));
        return 0;
    }

    if (verify->parsed()) {
        verify_target.require_one();
        const Hypergraph h = parse_hypergraph(read_file(verify_file));
        SaturationVerdict verdict;
        if (verify_target.is_star())
            verdict = is_berge_saturated(h, verify_target.star);
        else
            verdict = is_berge_saturated(h, parse_pattern(read_file(verify_target.pattern_file)));
        if (verify_json) {
            ordered_json j;
            j["free"] = verdict.is_free;
            j["saturated"] = verdict.saturated();
            j["witness_count"] = verdict.witness_count;
            j["missing_edge"] =
                verdict.missing_edge ? ordered_json(*verdict.missing_edge) : ordered_json();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "free " << (verdict.is_free ? "true" : "false") << "\n"
                      << "saturated " << (verdict.saturated() ? "true" : "false") << "\n"
                      << "witness_count " << verdict.witness_count << "\n"
                      << "missing_edge "
                      << (verdict.missing_edge ? format_edge(*verdict.missing_edge) : "-")
                      << "\n";
        }
        return verdict.saturated() ? 0 : 1;
    }

    if (clique->parsed()) {
        const Hypergraph h = build_saturated_clique(clique_n, clique_k, clique_l);
        write_file(clique_out, serialize_hypergraph(h));
        return 0;
    }

    if (brute->parsed()) {
        const BruteForceResult result =
            brute_force_min_saturated(brute_n, brute_k, brute_l, brute_budget);
        std::cout << "min_edges " << result.min_edges << "\n"
                  << "subsets_examined " << result.subsets_examined << "\n";
        if (brute_k >= 3) {
            const SatFormulaResult formula = sat_star_value(brute_n, brute_k, brute_l);
            std::cout << "formula_value " << formula.value << "\n";
        }
        if (!brute_out.empty()) write_file(brute_out, serialize_hypergraph(result.witness));
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bergesat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
