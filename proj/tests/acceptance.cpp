// Acceptance suite: every shipped guarantee of the library, one line of
// output per criterion. Run with no arguments for all criteria or pass
// criterion numbers (1-9). Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bergesat/bergesat.hpp"
#include "oracles.hpp"

using namespace bergesat;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& message) {
        if (!condition && pass) {
            pass = false;
            detail = message;
        }
    }
    void note(const std::string& message) {
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

// 1. Formula cross-check against sat_k(n, K_{1,k+1}) = n-k+1 for n >= k^2.
Outcome criterion1() {
    Outcome out;
    const auto start = Clock::now();
    for (int k : {3, 4, 5})
        for (long long n = static_cast<long long>(k) * k; n <= 200; ++n) {
            const auto r = sat_star_value(n, k, k + 1);
            if (r.value != n - k + 1) {
                out.require(false, "mismatch at n=" + std::to_string(n) +
                                       " k=" + std::to_string(k) + ": got " +
                                       std::to_string(r.value));
                return out;
            }
        }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    out.require(elapsed < 1.0, "took " + fmt(elapsed) + "s, limit 1s");
    out.note("k in {3,4,5}, n in [k^2,200], " + fmt(elapsed) + "s");
    return out;
}

// 2. Construction round trip: edge counts match the formula and the verifier
// accepts, all within 30 seconds.
Outcome criterion2() {
    Outcome out;
    const auto start = Clock::now();
    const std::vector<std::tuple<int, int, long long>> cases = {
        {40, 3, 4}, {30, 3, 2}, {36, 3, 5}, {40, 4, 5}};
    for (const auto& [n, k, l] : cases) {
        const auto h = build_saturated_star(n, k, l, 1000 + static_cast<std::uint64_t>(n));
        const auto formula = sat_star_value(n, k, l);
        const std::string tag =
            "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
        out.require(static_cast<long long>(h.edge_count()) == formula.value,
                    tag + " edge count " + std::to_string(h.edge_count()) + " != formula " +
                        std::to_string(formula.value));
        if (n == 40 && k == 3) out.require(h.edge_count() == 38, tag + " expected 38 edges");
        const auto verdict = is_berge_saturated(h, static_cast<int>(l));
        out.require(verdict.is_free, tag + " construction is not Berge-free");
        out.require(verdict.saturated(),
                    tag + " verifier rejected the construction" +
                        (verdict.missing_edge ? " (missing edge found)" : ""));
        if (!out.pass) return out;
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    out.require(elapsed < 30.0, "took " + fmt(elapsed) + "s, limit 30s");
    out.note("4 constructions verified in " + fmt(elapsed) + "s");
    return out;
}

// 3. Poisson limit of loop/overlap counts at n=300.
Outcome criterion3() {
    Outcome out;
    const auto a = poisson_experiment(300, 2, 3, 20000, 33);
    const double a_loops = to_double(a.mean_loops);
    const double a_overlaps = to_double(a.mean_overlaps);
    const double a_frac = to_double(a.frac_defect_free);
    const double e2 = std::exp(-2.0);
    out.require(std::abs(a_loops - 1.0) <= 0.05,
                "d=2: mean_loops " + fmt(a_loops) + " not within 0.05 of 1");
    out.require(std::abs(a_overlaps - 1.0) <= 0.10,
                "d=2: mean_overlaps " + fmt(a_overlaps) + " not within 0.10 of 1");
    out.require(std::abs(a_frac - e2) <= 0.02,
                "d=2: frac_defect_free " + fmt(a_frac) + " not within 0.02 of e^-2");

    const auto b = poisson_experiment(300, 3, 3, 20000, 34);
    const double b_loops = to_double(b.mean_loops);
    const double b_overlaps = to_double(b.mean_overlaps);
    out.require(std::abs(b_loops - 2.0) <= 0.10,
                "d=3: mean_loops " + fmt(b_loops) + " not within 0.10 of 2");
    out.require(std::abs(b_overlaps - 4.0) <= 0.25,
                "d=3: mean_overlaps " + fmt(b_overlaps) + " not within 0.25 of 4");
    out.note("d=2: loops " + fmt(a_loops) + ", overlaps " + fmt(a_overlaps) + ", frac " +
             fmt(a_frac) + " (e^-2 = " + fmt(e2) + "); d=3: loops " + fmt(b_loops) +
             ", overlaps " + fmt(b_overlaps));
    return out;
}

// 4. Generator invariants on 100 successful samples per parameter set.
Outcome criterion4() {
    Outcome out;
    const auto check_samples = [&](int n, int d, int k, long long expect_deficient,
                                   std::size_t expect_edges) {
        for (int i = 0; i < 100; ++i) {
            const auto h =
                sample_linear_nearly_regular(n, d, k, 500000 + static_cast<std::uint64_t>(i));
            const std::string tag = "n=" + std::to_string(n) + " sample " + std::to_string(i);
            out.require(is_linear(h), tag + ": not linear");
            out.require(h.edge_count() == expect_edges,
                        tag + ": " + std::to_string(h.edge_count()) + " edges, expected " +
                            std::to_string(expect_edges));
            const auto deg = degree_sequence_of(h).degrees();
            long long deficient = 0;
            for (int x : deg) {
                if (x == d - 1)
                    ++deficient;
                else if (x != d) {
                    out.require(false, tag + ": degree " + std::to_string(x) + " outside {" +
                                           std::to_string(d) + "," + std::to_string(d - 1) + "}");
                    return;
                }
            }
            out.require(deficient == expect_deficient,
                        tag + ": " + std::to_string(deficient) + " deficient vertices, expected " +
                            std::to_string(expect_deficient));
            if (!out.pass) return;
        }
    };
    check_samples(200, 3, 4, 0, 150); // 600 mod 4 = 0
    if (!out.pass) return out;
    check_samples(201, 3, 4, 3, 150); // 603 mod 4 = 3
    out.note("100 samples each at (200,3,4) and (201,3,4)");
    return out;
}

// 5. Exact configuration counts vs brute-force enumeration, plus sampler
// uniformity by chi-square over the ten configurations on six points.
Outcome criterion5() {
    Outcome out;
    const std::pair<int, int> cases[] = {{3, 3}, {6, 3}, {9, 3}, {4, 2},
                                         {6, 2}, {8, 2}, {8, 4}};
    for (const auto& [x, k] : cases) {
        const auto enumerated = oracles::enumerate_matchings(x, k).size();
        if (num_configurations(x, k) != BigInt(enumerated)) {
            out.require(false, "phi(" + std::to_string(x) + "," + std::to_string(k) +
                                   ") != " + std::to_string(enumerated));
            return out;
        }
    }
    out.require(num_configurations(6, 3) == 10, "phi(6,3) != 10");
    out.require(num_configurations(4, 2) == 3, "phi(4,2) != 3");

    const DegreeSequence ds({1, 1, 1, 1, 1, 1}, 3);
    const auto all = oracles::enumerate_matchings(6, 3);
    std::map<std::vector<int>, int> counts;
    const int samples = 10000;
    for (int t = 0; t < samples; ++t) {
        auto rng = stream_rng(606060, static_cast<std::uint64_t>(t));
        ++counts[sample_configuration(ds, rng).points()];
    }
    double statistic = 0.0;
    for (const auto& blocks : all) {
        std::vector<int> flat;
        for (const auto& b : blocks) flat.insert(flat.end(), b.begin(), b.end());
        const auto it = counts.find(flat);
        const double observed = it == counts.end() ? 0.0 : it->second;
        statistic += (observed - 1000.0) * (observed - 1000.0) / 1000.0;
    }
    out.require(counts.size() <= all.size(), "sampler produced an unknown configuration");
    out.require(statistic < 27.88, "chi-square statistic " + fmt(statistic) +
                                       " exceeds the 0.001 critical value 27.88");
    out.note("phi verified on 7 cases; chi-square " + fmt(statistic) + " < 27.88");
    return out;
}

// 6. The general Berge checker agrees with the star specialization, and all
// witnesses survive independent validation.
Outcome criterion6() {
    Outcome out;
    auto rng = stream_rng(123456);
    int witnesses = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 3 + static_cast<int>(uniform_below(rng, 6)); // 3..8
        const auto h = oracles::random_hypergraph(n, 3, 300, rng);
        for (int l = 0; l <= 4; ++l) {
            const auto general = contains_berge(h, PatternGraph::star(l));
            const auto special = contains_berge_star(h, l);
            if (general.contained != special.contained) {
                out.require(false, "disagreement at n=" + std::to_string(n) + " l=" +
                                       std::to_string(l) + " m=" +
                                       std::to_string(h.edge_count()));
                return out;
            }
            for (const auto* check : {&general, &special})
                if (check->witness) {
                    ++witnesses;
                    if (!validate_witness(h, PatternGraph::star(l), *check->witness)) {
                        out.require(false, "witness failed validation at n=" + std::to_string(n) +
                                               " l=" + std::to_string(l));
                        return out;
                    }
                }
        }
    }
    out.note("200 hypergraphs x l in 0..4, " + std::to_string(witnesses) +
             " witnesses validated");
    return out;
}

// 7. Lower-bound structure: in accepted fixtures the low-degree vertex set
// induces a complete k-uniform hypergraph and respects the feasibility bound.
Outcome criterion7() {
    Outcome out;
    std::vector<std::pair<Hypergraph, long long>> fixtures;
    fixtures.emplace_back(build_saturated_star(40, 3, 4, 1040), 4);
    fixtures.emplace_back(build_saturated_star(30, 3, 2, 1030), 2);
    fixtures.emplace_back(build_saturated_star(36, 3, 5, 1036), 5);
    fixtures.emplace_back(build_saturated_star(40, 4, 5, 1044), 5);
    fixtures.emplace_back(
        Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), 4);
    fixtures.emplace_back(brute_force_min_saturated(4, 3, 4).witness, 4);
    fixtures.emplace_back(brute_force_min_saturated(6, 3, 3).witness, 3);

    int accepted = 0;
    for (const auto& [h, l] : fixtures) {
        if (!is_berge_saturated(h, static_cast<int>(l)).saturated()) {
            out.require(false, "fixture unexpectedly rejected by the verifier (l=" +
                                   std::to_string(l) + ")");
            return out;
        }
        ++accepted;
        const auto structure = lower_bound_structure(h, l);
        out.require(structure.induces_complete,
                    "low-degree set does not induce a complete hypergraph (l=" +
                        std::to_string(l) + ", |A|=" +
                        std::to_string(structure.low_degree_vertices.size()) + ")");
        out.require(structure.within_feasibility,
                    "C(|A|-1,k-1) > l-2 (l=" + std::to_string(l) + ")");
        if (!out.pass) return out;
    }
    out.note(std::to_string(accepted) + " accepted fixtures checked");
    return out;
}

// 8. The clique construction: 22 edges at (10,3,5), Berge-K_5-freeness is a
// hard requirement, and the finite-size saturation verdict is recorded.
Outcome criterion8() {
    Outcome out;
    const auto h = build_saturated_clique(10, 3, 5);
    out.require(h.edge_count() == 22,
                "edge count " + std::to_string(h.edge_count()) + " != 22");
    const auto k5 = PatternGraph::complete(5);
    out.require(!contains_berge(h, k5).contained, "construction contains a Berge-K_5");
    const auto verdict = is_berge_saturated(h, k5);
    out.note(std::string("non-edge sweep verdict at n=10: ") +
             (verdict.saturated() ? "saturated" : "not saturated") + ", " +
             std::to_string(verdict.witness_count) + " non-edges certified");
    return out;
}

// 9. Brute-force exploration at tiny sizes.
Outcome criterion9() {
    Outcome out;
    const auto trivial = brute_force_min_saturated(5, 3, 1);
    out.require(trivial.min_edges == 0, "brute(5,3,1) != 0");

    const auto complete = brute_force_min_saturated(4, 3, 4);
    out.require(complete.min_edges == 4, "brute(4,3,4) != 4");
    out.require(complete.subsets_examined == 16, "brute(4,3,4) did not exhaust all 16 subsets");

    const auto recorded = brute_force_min_saturated(6, 3, 3);
    const auto formula = sat_star_value(6, 3, 3);
    out.note("brute(6,3,3) = " + std::to_string(recorded.min_edges) +
             ", formula value (exact only for large n, informational) = " +
             std::to_string(formula.value));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
    if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8, 9};

    const std::vector<std::pair<int, Outcome (*)()>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};

    int failures = 0;
    for (int id : wanted) {
        const auto entry = std::find_if(criteria.begin(), criteria.end(),
                                        [&](const auto& c) { return c.first == id; });
        if (entry == criteria.end()) {
            std::cerr << "unknown criterion " << id << "\n";
            return 2;
        }
        Outcome outcome;
        try {
            outcome = entry->second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << id << ": " << (outcome.pass ? "PASS" : "FAIL");
        if (!outcome.detail.empty()) std::cout << " - " << outcome.detail;
        std::cout << std::endl;
        if (!outcome.pass) ++failures;
    }
    return failures;
}
