#ifndef BERGESAT_BERGE_HPP
#define BERGESAT_BERGE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bergesat/hypergraph.hpp"

namespace bergesat {

/// Simple pattern graph on vertices 0..p-1; edges stored as (u,v) with u < v
/// in lexicographic order.
struct PatternGraph {
    int p = 1;
    std::vector<std::pair<int, int>> edges;

    PatternGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : p(vertex_count), edges(std::move(edge_list)) {
        if (p < 1) raise(errc::invalid_params, "pattern needs at least one vertex");
        for (auto& [u, v] : edges) {
            if (u == v) raise(errc::invalid_params, "pattern loops are not allowed");
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= p)
                raise(errc::edge_out_of_range, "pattern edge (" + std::to_string(u) + "," +
                                                   std::to_string(v) + ") outside 0.." +
                                                   std::to_string(p - 1));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            raise(errc::duplicate_edge, "pattern repeats an edge");
    }

    /// K_{1,l}: vertex 0 is the center, 1..l are leaves.
    static PatternGraph star(int leaves) {
        if (leaves < 0) raise(errc::invalid_params, "leaf count must be >= 0");
        std::vector<std::pair<int, int>> e;
        e.reserve(static_cast<std::size_t>(leaves));
        for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
        return PatternGraph(leaves + 1, std::move(e));
    }

    /// Complete graph K_s.
    static PatternGraph complete(int s) {
        if (s < 1) raise(errc::invalid_params, "need at least one vertex");
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v) e.emplace_back(u, v);
        return PatternGraph(s, std::move(e));
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(static_cast<std::size_t>(p), 0);
        for (const auto& [u, v] : edges) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
        }
        return deg;
    }

    bool operator==(const PatternGraph&) const = default;
};

/// Pattern file format: header `p m`, then m lines `u v`; '#' comments and a
/// trailing newline as in the hypergraph format.
inline PatternGraph parse_pattern(std::string_view text) {
    if (text.empty() || text.back() != '\n') detail::parse_fail(1, "missing trailing newline");
    std::optional<long long> p, m;
    std::vector<std::pair<int, int>> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        auto values = detail::parse_int_line(line, line_no);
        if (!p) {
            if (values.size() != 2) detail::parse_fail(line_no, "header must be `p m`");
            p = values[0];
            m = values[1];
            if (*p < 1) detail::parse_fail(line_no, "pattern vertex count must be >= 1");
            if (*m < 0) detail::parse_fail(line_no, "pattern edge count must be >= 0");
            continue;
        }
        if (static_cast<long long>(edges.size()) == *m)
            detail::parse_fail(line_no, "unexpected content after last edge");
        if (values.size() != 2) detail::parse_fail(line_no, "expected `u v`");
        if (values[0] < 0 || values[0] >= *p || values[1] < 0 || values[1] >= *p)
            detail::parse_fail(line_no, "pattern vertex outside 0.." + std::to_string(*p - 1));
        edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    }
    if (!p) detail::parse_fail(line_no + 1, "missing header line");
    if (static_cast<long long>(edges.size()) != *m)
        detail::parse_fail(line_no + 1, "expected " + std::to_string(*m) + " edges, got " +
                                            std::to_string(edges.size()));
    return PatternGraph(static_cast<int>(*p), std::move(edges));
}

/// Certificate that H contains a Berge copy of a pattern: an injective
/// placement of pattern vertices plus an injective assignment of pattern
/// edges to hyperedges, each hyperedge containing its placed pattern edge.
struct BergeWitness {
    std::vector<Vertex> vertex_map;       // pattern vertex -> host vertex
    std::vector<std::size_t> edge_map;    // pattern edge index -> host edge index
};

/// Re-checks a witness against the definition only; shares no logic with the
/// detectors.
inline bool validate_witness(const Hypergraph& h, const PatternGraph& g,
                             const BergeWitness& w) {
    if (static_cast<int>(w.vertex_map.size()) != g.p) return false;
    if (w.edge_map.size() != g.edges.size()) return false;
    std::vector<Vertex> vm = w.vertex_map;
    std::sort(vm.begin(), vm.end());
    if (!vm.empty() && (vm.front() < 0 || vm.back() >= h.vertex_count())) return false;
    if (std::adjacent_find(vm.begin(), vm.end()) != vm.end()) return false;
    std::vector<std::size_t> em = w.edge_map;
    std::sort(em.begin(), em.end());
    if (!em.empty() && em.back() >= h.edge_count()) return false;
    if (std::adjacent_find(em.begin(), em.end()) != em.end()) return false;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& [u, v] = g.edges[i];
        const Edge& host = h.edges()[w.edge_map[i]];
        if (!std::binary_search(host.begin(), host.end(),
                                w.vertex_map[static_cast<std::size_t>(u)]))
            return false;
        if (!std::binary_search(host.begin(), host.end(),
                                w.vertex_map[static_cast<std::size_t>(v)]))
            return false;
    }
    return true;
}

struct MatchingResult {
    int size = 0;
    std::vector<int> left_match;  // left index -> right index or -1
    std::vector<int> right_match; // right index -> left index or -1
};

/// Maximum bipartite matching (Kuhn's augmenting paths). Left vertices are
/// processed in increasing order and neighbours tried in increasing order,
/// so ties break deterministically. `stop_at` ends the search early once
/// that many pairs are matched (-1 = run to maximum).
inline MatchingResult bipartite_max_matching(int left_count, int right_count,
                                             const std::vector<std::vector<int>>& adjacency,
                                             int stop_at = -1) {
    if (left_count < 0 || right_count < 0 ||
        adjacency.size() != static_cast<std::size_t>(left_count))
        raise(errc::invalid_params, "adjacency size mismatch");
    std::vector<std::vector<int>> adj = adjacency;
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        if (!row.empty() && (row.front() < 0 || row.back() >= right_count))
            raise(errc::invalid_params, "adjacency entry out of range");
    }

    MatchingResult result;
    result.left_match.assign(static_cast<std::size_t>(left_count), -1);
    result.right_match.assign(static_cast<std::size_t>(right_count), -1);
    std::vector<char> visited(static_cast<std::size_t>(right_count), 0);

    std::function<bool(int)> augment = [&](int u) -> bool {
        for (int w : adj[static_cast<std::size_t>(u)]) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            if (result.right_match[static_cast<std::size_t>(w)] == -1 ||
                augment(result.right_match[static_cast<std::size_t>(w)])) {
                result.left_match[static_cast<std::size_t>(u)] = w;
                result.right_match[static_cast<std::size_t>(w)] = u;
                return true;
            }
        }
        return false;
    };

    for (int u = 0; u < left_count; ++u) {
        if (result.size == stop_at) break;
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(u)) ++result.size;
    }
    return result;
}

/// The largest l such that v is the center of a Berge-K_{1,l}: the maximum
/// matching between edges containing v and the other vertices they contain.
inline int max_star_at(const Hypergraph& h, Vertex v) {
    if (v < 0 || v >= h.vertex_count())
        raise(errc::invalid_params, "vertex " + std::to_string(v) + " out of range");
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (std::binary_search(h.edges()[i].begin(), h.edges()[i].end(), v))
            incident.push_back(i);
    if (incident.empty()) return 0;

    std::vector<int> leaf_id(static_cast<std::size_t>(h.vertex_count()), -1);
    int leaves = 0;
    std::vector<std::vector<int>> adj(incident.size());
    for (std::size_t row = 0; row < incident.size(); ++row) {
        for (Vertex w : h.edges()[incident[row]]) {
            if (w == v) continue;
            if (leaf_id[static_cast<std::size_t>(w)] == -1)
                leaf_id[static_cast<std::size_t>(w)] = leaves++;
            adj[row].push_back(leaf_id[static_cast<std::size_t>(w)]);
        }
    }
    return bipartite_max_matching(static_cast<int>(incident.size()), leaves, adj).size;
}

struct BergeCheck {
    bool contained = false;
    std::optional<BergeWitness> witness;
};

namespace detail {

/// Star containment restricted to candidate centers (in the given order).
inline BergeCheck contains_berge_star_centered(const Hypergraph& h, int leaves,
                                               std::span<const Vertex> centers) {
    if (leaves == 0) {
        BergeCheck result;
        result.contained = true;
        if (h.vertex_count() >= 1) result.witness = BergeWitness{{0}, {}};
        return result;
    }
    const auto degrees = degree_sequence_of(h).degrees();
    std::vector<std::size_t> incident;
    std::vector<int> leaf_id(static_cast<std::size_t>(h.vertex_count()), -1);
    std::vector<Vertex> leaf_vertex;
    for (Vertex v : centers) {
        if (degrees[static_cast<std::size_t>(v)] < leaves) continue;
        incident.clear();
        for (std::size_t i = 0; i < h.edge_count(); ++i)
            if (std::binary_search(h.edges()[i].begin(), h.edges()[i].end(), v))
                incident.push_back(i);
        std::fill(leaf_id.begin(), leaf_id.end(), -1);
        leaf_vertex.clear();
        std::vector<std::vector<int>> adj(incident.size());
        for (std::size_t row = 0; row < incident.size(); ++row) {
            for (Vertex w : h.edges()[incident[row]]) {
                if (w == v) continue;
                if (leaf_id[static_cast<std::size_t>(w)] == -1) {
                    leaf_id[static_cast<std::size_t>(w)] = static_cast<int>(leaf_vertex.size());
                    leaf_vertex.push_back(w);
                }
                adj[row].push_back(leaf_id[static_cast<std::size_t>(w)]);
            }
        }
        const auto matching =
            bipartite_max_matching(static_cast<int>(incident.size()),
                                   static_cast<int>(leaf_vertex.size()), adj, leaves);
        if (matching.size >= leaves) {
            BergeWitness w;
            w.vertex_map.push_back(v);
            for (std::size_t row = 0; row < incident.size() &&
                                      static_cast<int>(w.edge_map.size()) < leaves;
                 ++row) {
                const int leaf = matching.left_match[row];
                if (leaf == -1) continue;
                w.vertex_map.push_back(leaf_vertex[static_cast<std::size_t>(leaf)]);
                w.edge_map.push_back(incident[row]);
            }
            return {true, std::move(w)};
        }
    }
    return {false, std::nullopt};
}

} // namespace detail

/// Does H contain a Berge-K_{1,leaves}? Centers are tried in degree-descending
/// order with an early exit, which suits verifier workloads dominated by
/// near-miss hypergraphs.
inline BergeCheck contains_berge_star(const Hypergraph& h, int leaves) {
    if (leaves < 0) raise(errc::invalid_params, "leaf count must be >= 0");
    if (leaves == 0) return detail::contains_berge_star_centered(h, 0, {});
    const auto degrees = degree_sequence_of(h).degrees();
    std::vector<Vertex> order(static_cast<std::size_t>(h.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return degrees[static_cast<std::size_t>(a)] > degrees[static_cast<std::size_t>(b)];
    });
    return detail::contains_berge_star_centered(h, leaves, order);
}

inline constexpr long long kDefaultPlacementBudget = 10'000'000;

/// General Berge containment for small patterns: enumerate injective
/// placements of the pattern vertices (host degree must cover pattern
/// degree), then ask for a system of distinct hyperedges via bipartite
/// matching. Throws pattern_too_large when the placement count n...(n-p+1)
/// exceeds the budget.
inline BergeCheck contains_berge(const Hypergraph& h, const PatternGraph& g,
                                 long long placement_budget = kDefaultPlacementBudget) {
    const int n = h.vertex_count();
    const int p = g.p;
    if (p > n) return {false, std::nullopt};

    long long placements = 1;
    for (int i = 0; i < p; ++i) {
        placements *= n - i;
        if (placements > placement_budget)
            raise(errc::pattern_too_large, "about " + std::to_string(placements) +
                                               " vertex placements exceed budget " +
                                               std::to_string(placement_budget));
    }

    if (g.edges.empty()) {
        BergeWitness w;
        w.vertex_map.resize(static_cast<std::size_t>(p));
        std::iota(w.vertex_map.begin(), w.vertex_map.end(), 0);
        return {true, std::move(w)};
    }
    if (g.edges.size() > h.edge_count()) return {false, std::nullopt};

    // host vertex pair -> hyperedges containing both
    std::unordered_map<std::uint64_t, std::vector<int>> pair_edges;
    pair_edges.reserve(h.edge_count() * static_cast<std::size_t>(h.uniformity() *
                                                                 (h.uniformity() - 1) / 2));
    const std::uint64_t n_key = static_cast<std::uint64_t>(n);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edges()[i];
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                pair_edges[static_cast<std::uint64_t>(e[a]) * n_key +
                           static_cast<std::uint64_t>(e[b])]
                    .push_back(static_cast<int>(i));
    }
    const auto candidates = [&](Vertex a, Vertex b) -> const std::vector<int>* {
        const std::uint64_t key = a < b ? static_cast<std::uint64_t>(a) * n_key +
                                              static_cast<std::uint64_t>(b)
                                        : static_cast<std::uint64_t>(b) * n_key +
                                              static_cast<std::uint64_t>(a);
        const auto it = pair_edges.find(key);
        return it == pair_edges.end() ? nullptr : &it->second;
    };

    const auto pattern_deg = g.degrees();
    const auto host_deg = degree_sequence_of(h).degrees();

    // assign high-degree pattern vertices first
    std::vector<int> order(static_cast<std::size_t>(p));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern_deg[static_cast<std::size_t>(a)] > pattern_deg[static_cast<std::size_t>(b)];
    });
    std::vector<int> depth_of(static_cast<std::size_t>(p));
    for (int t = 0; t < p; ++t) depth_of[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = t;
    // pattern edges whose second endpoint is assigned at depth t
    std::vector<std::vector<std::pair<int, int>>> edges_closing_at(static_cast<std::size_t>(p));
    for (const auto& [u, v] : g.edges) {
        const int du = depth_of[static_cast<std::size_t>(u)];
        const int dv = depth_of[static_cast<std::size_t>(v)];
        edges_closing_at[static_cast<std::size_t>(std::max(du, dv))].emplace_back(u, v);
    }

    std::vector<Vertex> host_of(static_cast<std::size_t>(p), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    BergeCheck found;

    std::function<bool(int)> search = [&](int depth) -> bool {
        if (depth == p) {
            std::vector<std::vector<int>> adj(g.edges.size());
            for (std::size_t i = 0; i < g.edges.size(); ++i) {
                const auto* cand = candidates(host_of[static_cast<std::size_t>(g.edges[i].first)],
                                              host_of[static_cast<std::size_t>(g.edges[i].second)]);
                if (!cand) return false;
                adj[i] = *cand;
            }
            const auto matching = bipartite_max_matching(
                static_cast<int>(g.edges.size()), static_cast<int>(h.edge_count()), adj,
                static_cast<int>(g.edges.size()));
            if (matching.size != static_cast<int>(g.edges.size())) return false;
            BergeWitness w;
            w.vertex_map = host_of;
            w.edge_map.resize(g.edges.size());
            for (std::size_t i = 0; i < g.edges.size(); ++i)
                w.edge_map[i] = static_cast<std::size_t>(matching.left_match[i]);
            found = {true, std::move(w)};
            return true;
        }
        const int pv = order[static_cast<std::size_t>(depth)];
        for (Vertex host = 0; host < n; ++host) {
            if (used[static_cast<std::size_t>(host)]) continue;
            if (host_deg[static_cast<std::size_t>(host)] <
                pattern_deg[static_cast<std::size_t>(pv)])
                continue;
            host_of[static_cast<std::size_t>(pv)] = host;
            bool feasible = true;
            for (const auto& [u, v] : edges_closing_at[static_cast<std::size_t>(depth)]) {
                if (!candidates(host_of[static_cast<std::size_t>(u)],
                                host_of[static_cast<std::size_t>(v)])) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                used[static_cast<std::size_t>(host)] = 1;
                if (search(depth + 1)) return true;
                used[static_cast<std::size_t>(host)] = 0;
            }
            host_of[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
    };

    search(0);
    return found;
}

} // namespace bergesat

#endif // BERGESAT_BERGE_HPP
