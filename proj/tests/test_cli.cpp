// End-to-end test of the bergesat binary: determinism, round trips between
// generators and checkers, exit codes, and output formats. Takes the binary
// path as its only argument (wired up by ctest).

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << "\n";
    } else {
        std::cout << "FAIL: " << what << "\n";
        ++failures;
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: test_cli <path-to-bergesat-binary>\n";
        return 2;
    }
    const std::string bin = std::string("\"") + argv[1] + "\"";
    const auto dir = std::filesystem::temp_directory_path() /
                     ("bergesat-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto path = [&](const std::string& name) { return (dir / name).string(); };

    // version and usage errors
    {
        const auto v = run(bin + " --version");
        check(v.exit_code == 0 && contains(v.out, "bergesat"), "--version prints and exits 0");
        check(run(bin + " no-such-command").exit_code == 2, "unknown subcommand exits 2");
        check(run(bin + " sat-value --n 20").exit_code == 2, "missing required flag exits 2");
        check(run(bin + " check-berge --hypergraph " + path("absent.hg") + " --star 2")
                      .exit_code == 2,
              "unreadable file exits 2");
        check(run(bin + " sat-value --n 20 --k 2 --l 4").exit_code == 2,
              "domain error (k=2) exits 2");
    }

    // sat-value
    {
        const auto r = run(bin + " sat-value --n 20 --k 3 --l 4");
        check(r.exit_code == 0 && contains(r.out, "value 18"), "sat-value prints value 18");
        const auto j = run(bin + " sat-value --n 20 --k 3 --l 9 --json");
        check(j.exit_code == 0 && contains(j.out, "\"value\":47") &&
                  contains(j.out, "\"minimizers\":[3,4]") && contains(j.out, "\"chosen_a\":4"),
              "sat-value --json reports value, minimizers, chosen_a");
        check(j.out.find('\n') == j.out.size() - 1, "json output is a single line");
    }

    // gen-regular: determinism and round trip into the checkers
    {
        const auto f1 = path("a.hg"), f2 = path("b.hg");
        const auto r1 =
            run(bin + " gen-regular --n 60 --d 2 --k 3 --seed 7 --out " + f1);
        const auto r2 =
            run(bin + " gen-regular --n 60 --d 2 --k 3 --seed 7 --out " + f2);
        check(r1.exit_code == 0 && r2.exit_code == 0, "gen-regular succeeds");
        const auto text1 = slurp(f1);
        check(!text1.empty() && text1 == slurp(f2), "same seed gives byte-identical files");
        check(contains(text1, "60 3 40"), "generated header is n k m");

        check(run(bin + " check-berge --hypergraph " + f1 + " --star 2").exit_code == 0,
              "generated hypergraph hosts a 2-star (exit 0)");
        check(run(bin + " check-berge --hypergraph " + f1 + " --star 5").exit_code == 1,
              "degree-2 hypergraph hosts no 5-star (exit 1)");

        const auto w = run(bin + " check-berge --hypergraph " + f1 + " --star 2 --witness");
        check(w.exit_code == 0 && contains(w.out, "contained") &&
                  contains(w.out, "pattern-edge 0 1 -> hyperedge"),
              "witness printing");
    }

    // build-saturated + check-saturated
    {
        const auto f = path("sat.hg");
        check(run(bin + " build-saturated --n 20 --k 3 --l 4 --seed 1 --out " + f).exit_code ==
                  0,
              "build-saturated succeeds");
        const auto r = run(bin + " check-saturated --hypergraph " + f + " --star 4");
        check(r.exit_code == 0 && contains(r.out, "saturated true") &&
                  contains(r.out, "missing_edge -"),
              "construction verifies as saturated");
        const auto j = run(bin + " check-saturated --hypergraph " + f + " --star 4 --json");
        check(j.exit_code == 0 && contains(j.out, "\"saturated\":true") &&
                  contains(j.out, "\"missing_edge\":null"),
              "check-saturated --json");
    }

    // single-edge fixtures: one edge cannot host a 2-star, and with room for
    // a disjoint triple it is not saturated either
    {
        const auto f = path("single.hg");
        std::ofstream(f) << "3 3 1\n0 1 2\n";
        check(run(bin + " check-berge --hypergraph " + f + " --star 2").exit_code == 1,
              "single edge has no 2-star (exit 1)");
        const auto f6 = path("single6.hg");
        std::ofstream(f6) << "6 3 1\n0 1 2\n";
        const auto r = run(bin + " check-saturated --hypergraph " + f6 + " --star 2");
        check(r.exit_code == 1 && contains(r.out, "saturated false") &&
                  contains(r.out, "missing_edge 3 4 5"),
              "single edge on six vertices is not 2-star-saturated (exit 1)");
    }

    // pattern file targets
    {
        const auto hg = path("pat.hg"), pat = path("path.pat");
        std::ofstream(hg) << "6 3 2\n0 1 2\n3 4 5\n";
        std::ofstream(pat) << "3 2\n0 1\n1 2\n";
        check(run(bin + " check-berge --hypergraph " + hg + " --pattern " + pat).exit_code == 1,
              "disjoint edges host no Berge path (exit 1)");
        check(run(bin + " check-saturated --hypergraph " + hg + " --pattern " + pat)
                      .exit_code == 0,
              "two disjoint triples are path-saturated (exit 0)");
        check(run(bin + " check-berge --hypergraph " + hg + " --star 1 --pattern " + pat)
                      .exit_code == 2,
              "--star and --pattern are mutually exclusive");
        check(run(bin + " check-berge --hypergraph " + hg).exit_code == 2,
              "a target is required");
    }

    // experiment-poisson: json shape and determinism
    {
        const auto cmd = bin + " experiment-poisson --n 40 --d 2 --k 3 --trials 400 --seed 5";
        const auto a = run(cmd + " --json");
        const auto b = run(cmd + " --json");
        check(a.exit_code == 0 && a.out == b.out, "poisson json is deterministic");
        for (const char* key : {"\"trials_run\":400", "\"mean_loops\":", "\"mean_overlaps\":",
                                "\"frac_defect_free\":", "\"lambda\":1,", "\"mu\":1,",
                                "\"predicted_success\":"})
            check(contains(a.out, key), std::string("poisson json has ") + key);
        const auto human = run(cmd);
        check(human.exit_code == 0 && contains(human.out, "lambda 1\n"),
              "poisson human output prints exact rationals");
        // d=2, k=4 has the half-integral lambda 3/2
        const auto half = run(bin +
                              " experiment-poisson --n 40 --d 2 --k 4 --trials 50 --json");
        check(half.exit_code == 0 && contains(half.out, "\"lambda\":1.5") &&
                  contains(half.out, "\"mu\":2.25"),
              "half-integral lambda serializes exactly");
    }

    // build-clique-sat, fed back through the pattern checker
    {
        const auto f = path("clique.hg"), k5 = path("k5.pat");
        check(run(bin + " build-clique-sat --n 10 --k 3 --l 5 --out " + f).exit_code == 0,
              "build-clique-sat succeeds");
        check(contains(slurp(f), "10 3 22"), "clique construction has 22 edges");
        std::ofstream(k5) << "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
        check(run(bin + " check-berge --hypergraph " + f + " --pattern " + k5).exit_code == 1,
              "clique construction is Berge-K_5-free (exit 1)");
    }

    // rejection budget override propagates; one block over two vertices
    // always loops, so this can never succeed
    {
        check(run(bin + " gen-regular --n 2 --d 2 --k 3 --seed 0 --max-trials 50 --out " +
                  path("never.hg"))
                      .exit_code == 2,
              "exhausted --max-trials exits 2");
    }

    // brute-min
    {
        const auto r = run(bin + " brute-min --n 4 --k 3 --l 4");
        check(r.exit_code == 0 && contains(r.out, "min_edges 4"), "brute-min finds 4 at (4,3,4)");
        const auto f = path("brute.hg");
        const auto r2 = run(bin + " brute-min --n 5 --k 3 --l 1 --out " + f);
        check(r2.exit_code == 0 && contains(r2.out, "min_edges 0") && contains(slurp(f), "5 3 0"),
              "brute-min saves the empty witness at (5,3,1)");
        check(run(bin + " brute-min --n 6 --k 3 --l 3 --budget 5").exit_code == 2,
              "exhausted budget exits 2");
    }

    std::filesystem::remove_all(dir);
    if (failures == 0) std::cout << "all cli checks passed\n";
    return failures == 0 ? 0 : 1;
}
