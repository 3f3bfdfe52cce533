#ifndef BERGESAT_SATURATION_HPP
#define BERGESAT_SATURATION_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bergesat/berge.hpp"
#include "bergesat/combinatorics.hpp"
#include "bergesat/config_model.hpp"
#include "bergesat/hypergraph.hpp"

namespace bergesat {

namespace detail {

/// Visit `choose`-subsets of {0..count-1} ascending, in lexicographic order;
/// fn returns false to stop.
template <typename Fn>
void for_each_combination(int count, int choose, Fn&& fn) {
    if (choose < 0 || choose > count) return;
    std::vector<int> current(static_cast<std::size_t>(choose));
    std::iota(current.begin(), current.end(), 0);
    for (;;) {
        if (!fn(static_cast<const std::vector<int>&>(current))) return;
        int i = choose - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == count - choose + i) --i;
        if (i < 0) return;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < choose; ++j)
            current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail

/// Exact evaluation of min over feasible a of ceil((l-1)(n-a)/k) + C(a,k),
/// where a is feasible when C(a-1,k-1) <= l-2. The feasible set is the
/// prefix [1, feasible_max]; chosen_a is the largest minimizer, which the
/// saturated construction needs (it guarantees chosen_a >= k-1 for l >= 2).
struct SatFormulaResult {
    long long value = 0;
    std::vector<long long> minimizers;     // ascending
    long long feasible_max = 0;            // 0 means the feasible set is empty
    std::optional<long long> chosen_a;
};

inline SatFormulaResult sat_star_value(long long n, int k, long long l) {
    if (k < 3) raise(errc::invalid_params, "saturation formula needs k >= 3");
    if (n < 1) raise(errc::invalid_params, "need n >= 1");
    if (l < 1) raise(errc::invalid_params, "need l >= 1");
    SatFormulaResult result;
    if (l == 1) return result; // empty hypergraph is Berge-K_{1,1}-saturated

    BigInt best = -1;
    for (long long a = 1; a <= n; ++a) {
        if (binomial(a - 1, k - 1) > l - 2) break;
        result.feasible_max = a;
        const BigInt value = ceil_div(BigInt(l - 1) * (n - a), k) + binomial(a, k);
        if (best < 0 || value < best) {
            best = value;
            result.minimizers.clear();
        }
        if (value == best) result.minimizers.push_back(a);
    }
    if (result.minimizers.empty())
        raise(errc::no_feasible_a, "no feasible a in the minimization"); // impossible for l >= 2
    result.value = to_long_long(best, "saturation value");
    result.chosen_a = result.minimizers.back();
    return result;
}

/// Berge-K_{1,l}-saturated construction: a clique on the last chosen_a
/// vertices, a linear nearly-(l-1)-regular hypergraph on the rest, and, when
/// the linear part leaves r vertices one edge short, a patch edge through
/// those vertices and the lowest-indexed clique vertices. Edge count equals
/// sat_star_value(n,k,l).value.
inline Hypergraph build_saturated_star(int n, int k, long long l, std::uint64_t seed,
                                       std::optional<long long> max_trials = {}) {
    if (k < 3) raise(errc::invalid_params, "construction needs k >= 3");
    if (n < 1) raise(errc::invalid_params, "need n >= 1");
    if (l == 1) return Hypergraph(n, k, {});
    const SatFormulaResult formula = sat_star_value(n, k, l);
    const int c = static_cast<int>(*formula.chosen_a);
    const int part = n - c;
    if (l - 1 > 1000000) raise(errc::invalid_params, "leaf count too large to construct");
    const int d = static_cast<int>(l - 1);

    std::vector<Edge> edges;
    detail::for_each_combination(c, k, [&](const std::vector<int>& subset) {
        Edge e;
        e.reserve(subset.size());
        for (int i : subset) e.push_back(n - c + i);
        edges.push_back(std::move(e));
        return true;
    });

    if (part > 0) {
        const Hypergraph linear = build_linear_nearly_regular(part, d, k, seed, max_trials);
        for (const Edge& e : linear.edges()) edges.push_back(e);
        const long long r = (static_cast<long long>(d) * part) % k;
        if (r > 0) {
            Edge patch;
            for (long long i = part - r; i < part; ++i)
                patch.push_back(static_cast<Vertex>(i)); // D: the degree-(l-2) vertices
            for (long long i = 0; i < k - r; ++i)
                patch.push_back(static_cast<Vertex>(n - c + i));
            edges.push_back(std::move(patch));
        }
    }
    return Hypergraph(n, k, std::move(edges));
}

struct VerifyOptions {
    bool collect_certificates = false;
    long long placement_budget = kDefaultPlacementBudget;
};

/// Outcome of the saturation check: freeness plus a sweep over all non-edges.
/// Saturated means free and no missing edge. missing_edge is the
/// lexicographically first non-edge whose addition creates no Berge copy;
/// witness_count counts the non-edges certified before that point.
struct SaturationVerdict {
    bool is_free = false;
    std::optional<Edge> missing_edge;
    long long witness_count = 0;
    std::map<Edge, BergeWitness> certificates; // filled only on request

    bool saturated() const { return is_free && !missing_edge.has_value(); }
};

inline SaturationVerdict is_berge_saturated(const Hypergraph& h, int star_leaves,
                                            VerifyOptions opts = {}) {
    SaturationVerdict verdict;
    verdict.is_free = !contains_berge_star(h, star_leaves).contained;
    if (!verdict.is_free) return verdict;
    for_each_non_edge(h, [&](const Edge& e) {
        const Hypergraph augmented = h.with_edge(e);
        // H is free, so a new star must use e, and every star edge contains
        // the center: only centers inside e can host one.
        auto check = detail::contains_berge_star_centered(augmented, star_leaves, e);
        if (!check.contained) {
            verdict.missing_edge = e;
            return false;
        }
        ++verdict.witness_count;
        if (opts.collect_certificates) verdict.certificates.emplace(e, std::move(*check.witness));
        return true;
    });
    return verdict;
}

inline SaturationVerdict is_berge_saturated(const Hypergraph& h, const PatternGraph& g,
                                            VerifyOptions opts = {}) {
    SaturationVerdict verdict;
    verdict.is_free = !contains_berge(h, g, opts.placement_budget).contained;
    if (!verdict.is_free) return verdict;
    for_each_non_edge(h, [&](const Edge& e) {
        auto check = contains_berge(h.with_edge(e), g, opts.placement_budget);
        if (!check.contained) {
            verdict.missing_edge = e;
            return false;
        }
        ++verdict.witness_count;
        if (opts.collect_certificates && check.witness)
            verdict.certificates.emplace(e, std::move(*check.witness));
        return true;
    });
    return verdict;
}

/// Berge-K_l-saturated construction for l >= k+2: with A the last l-2
/// vertices, take every k-set meeting the rest in at most one vertex.
/// Edge count: C(l-2,k) + C(l-2,k-1)(n-l+2).
inline Hypergraph build_saturated_clique(int n, int k, long long l) {
    detail::check_uniformity(k);
    if (l < k + 2) raise(errc::invalid_params, "construction needs l >= k+2");
    if (n < l) raise(errc::invalid_params, "need n >= l");
    const int a_size = static_cast<int>(l - 2);
    const int b_size = n - a_size;
    const int a_base = b_size; // A = {b_size..n-1}

    std::vector<Edge> edges;
    detail::for_each_combination(a_size, k, [&](const std::vector<int>& subset) {
        Edge e;
        for (int i : subset) e.push_back(a_base + i);
        edges.push_back(std::move(e));
        return true;
    });
    detail::for_each_combination(a_size, k - 1, [&](const std::vector<int>& subset) {
        for (int b = 0; b < b_size; ++b) {
            Edge e;
            e.push_back(b);
            for (int i : subset) e.push_back(a_base + i);
            edges.push_back(std::move(e));
        }
        return true;
    });
    return Hypergraph(n, k, std::move(edges));
}

struct BruteForceResult {
    long long min_edges = 0;
    Hypergraph witness;
    long long subsets_examined = 0;
};

/// Exhaustive minimum over all edge subsets, by increasing size: the least m
/// such that some m-edge hypergraph on n vertices is Berge-K_{1,l}-saturated.
/// Non-free subsets are skipped before the expensive sweep. The budget bounds
/// the number of subsets examined.
inline BruteForceResult brute_force_min_saturated(int n, int k, long long l,
                                                  long long budget = 10'000'000) {
    if (l < 1) raise(errc::invalid_params, "need l >= 1");
    if (budget < 1) raise(errc::invalid_params, "budget must be >= 1");
    detail::check_vertex_count(n);
    detail::check_uniformity(k);
    if (l > 1000000) raise(errc::invalid_params, "leaf count too large");
    const int leaves = static_cast<int>(l);

    std::vector<Edge> all_edges;
    detail::for_each_combination(n, k, [&](const std::vector<int>& subset) {
        all_edges.emplace_back(subset.begin(), subset.end());
        return true;
    });
    const int total = static_cast<int>(all_edges.size());

    long long examined = 0;
    std::optional<BruteForceResult> found;
    for (int m = 0; m <= total && !found; ++m) {
        detail::for_each_combination(total, m, [&](const std::vector<int>& picked) {
            if (++examined > budget)
                raise(errc::budget_exceeded, "examined " + std::to_string(budget) + " subsets");
            std::vector<Edge> edges;
            edges.reserve(picked.size());
            for (int i : picked) edges.push_back(all_edges[static_cast<std::size_t>(i)]);
            Hypergraph h(n, k, std::move(edges));
            if (contains_berge_star(h, leaves).contained) return true; // not free
            if (is_berge_saturated(h, leaves).saturated()) {
                found = BruteForceResult{m, std::move(h), examined};
                return false;
            }
            return true;
        });
    }
    if (!found)
        raise(errc::invalid_params, "no saturated hypergraph exists for these parameters");
    return *found;
}

/// The lower-bound structure of saturated hypergraphs: A = vertices of degree
/// < l-1 must induce a complete k-uniform hypergraph, forcing
/// C(|A|-1, k-1) <= l-2.
struct LowerBoundStructure {
    std::vector<Vertex> low_degree_vertices;
    bool induces_complete = false;
    bool within_feasibility = false;
};

inline LowerBoundStructure lower_bound_structure(const Hypergraph& h, long long l) {
    LowerBoundStructure out;
    const auto degrees = degree_sequence_of(h).degrees();
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (degrees[static_cast<std::size_t>(v)] < l - 1) out.low_degree_vertices.push_back(v);

    out.induces_complete = true;
    const int a = static_cast<int>(out.low_degree_vertices.size());
    detail::for_each_combination(a, h.uniformity(), [&](const std::vector<int>& subset) {
        Edge e;
        for (int i : subset) e.push_back(out.low_degree_vertices[static_cast<std::size_t>(i)]);
        if (!h.has_edge(e)) {
            out.induces_complete = false;
            return false;
        }
        return true;
    });
    out.within_feasibility = a == 0 || binomial(a - 1, h.uniformity() - 1) <= l - 2;
    return out;
}

} // namespace bergesat

#endif // BERGESAT_SATURATION_HPP
