#ifndef BERGESAT_HYPERGRAPH_HPP
#define BERGESAT_HYPERGRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bergesat/errors.hpp"

namespace bergesat {

using Vertex = int;

/// A hyperedge: vertex indices sorted ascending (strictly for simple
/// hypergraphs, weakly for pseudo-hypergraphs).
using Edge = std::vector<Vertex>;

namespace detail {

inline std::string edge_to_string(const Edge& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    s += '}';
    return s;
}

inline void check_uniformity(int k) {
    if (k < 2) raise(errc::invalid_params, "uniformity k must be >= 2, got " + std::to_string(k));
}

inline void check_vertex_count(int n) {
    if (n < 0) raise(errc::invalid_params, "vertex count must be >= 0, got " + std::to_string(n));
}

} // namespace detail

/// Simple k-uniform hypergraph on vertices 0..n-1. Edges are strictly
/// increasing k-sequences, stored in lexicographic order, so equal
/// hypergraphs compare and serialize identically. Immutable.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int n, int k, std::vector<Edge> edges) : n_(n), k_(k) {
        detail::check_vertex_count(n);
        detail::check_uniformity(k);
        for (Edge& e : edges) {
            if (static_cast<int>(e.size()) != k)
                raise(errc::wrong_arity, "edge " + detail::edge_to_string(e) + " has " +
                                             std::to_string(e.size()) + " vertices, expected " +
                                             std::to_string(k));
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                raise(errc::duplicate_vertex_in_edge,
                      "edge " + detail::edge_to_string(e) + " repeats a vertex");
            if (e.front() < 0 || e.back() >= n)
                raise(errc::edge_out_of_range, "edge " + detail::edge_to_string(e) +
                                                   " has a vertex outside 0.." + std::to_string(n - 1));
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            raise(errc::duplicate_edge, "edge " + detail::edge_to_string(*dup) + " appears twice");
        edges_ = std::move(edges);
    }

    int vertex_count() const { return n_; }
    int uniformity() const { return k_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Membership test; `e` must be sorted ascending.
    bool has_edge(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    /// H plus one edge (canonicalized and validated like the constructor).
    Hypergraph with_edge(Edge e) const {
        std::vector<Edge> all = edges_;
        all.push_back(std::move(e));
        return Hypergraph(n_, k_, std::move(all));
    }

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    int k_ = 2;
    std::vector<Edge> edges_;
};

/// k-uniform hypergraph that may repeat edges and may repeat vertices within
/// an edge; the collapse target of a configuration. Edges are weakly
/// increasing k-multisets in lexicographic order.
class PseudoHypergraph {
public:
    PseudoHypergraph(int n, int k, std::vector<Edge> edges) : n_(n), k_(k) {
        detail::check_vertex_count(n);
        detail::check_uniformity(k);
        for (Edge& e : edges) {
            if (static_cast<int>(e.size()) != k)
                raise(errc::wrong_arity, "pseudo-edge " + detail::edge_to_string(e) + " has " +
                                             std::to_string(e.size()) + " vertices, expected " +
                                             std::to_string(k));
            std::sort(e.begin(), e.end());
            if (!e.empty() && (e.front() < 0 || e.back() >= n))
                raise(errc::edge_out_of_range, "pseudo-edge " + detail::edge_to_string(e) +
                                                   " has a vertex outside 0.." + std::to_string(n - 1));
        }
        std::sort(edges.begin(), edges.end());
        edges_ = std::move(edges);
    }

    int vertex_count() const { return n_; }
    int uniformity() const { return k_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Degree of each vertex counted with multiplicity.
    std::vector<long long> degrees() const {
        std::vector<long long> deg(static_cast<std::size_t>(n_), 0);
        for (const Edge& e : edges_)
            for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
        return deg;
    }

    bool has_repeated_vertex_in_edge() const {
        for (const Edge& e : edges_)
            if (std::adjacent_find(e.begin(), e.end()) != e.end()) return true;
        return false;
    }

    bool has_repeated_edge() const {
        return std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end();
    }

    /// Lossless conversion to a simple hypergraph; fails if any edge repeats a
    /// vertex or any edge appears twice.
    Hypergraph to_hypergraph() const {
        if (has_repeated_vertex_in_edge())
            raise(errc::duplicate_vertex_in_edge,
                  "pseudo-hypergraph repeats a vertex within an edge");
        if (has_repeated_edge())
            raise(errc::duplicate_edge, "pseudo-hypergraph repeats an edge");
        return Hypergraph(n_, k_, edges_);
    }

    bool operator==(const PseudoHypergraph&) const = default;

private:
    int n_;
    int k_;
    std::vector<Edge> edges_;
};

/// Target degrees for the configuration model; k must divide the total.
class DegreeSequence {
public:
    DegreeSequence(std::vector<int> degrees, int k) : degrees_(std::move(degrees)), k_(k) {
        detail::check_uniformity(k);
        long long total = 0;
        for (int d : degrees_) {
            if (d < 0) raise(errc::invalid_params, "degrees must be >= 0");
            total += d;
        }
        if (total % k != 0)
            raise(errc::not_divisible, "degree total " + std::to_string(total) +
                                           " not divisible by k=" + std::to_string(k));
        total_ = total;
    }

    int uniformity() const { return k_; }
    std::size_t size() const { return degrees_.size(); }
    const std::vector<int>& degrees() const { return degrees_; }
    long long total() const { return total_; }

    bool operator==(const DegreeSequence&) const = default;

private:
    std::vector<int> degrees_;
    int k_;
    long long total_ = 0;
};

inline DegreeSequence degree_sequence_of(const Hypergraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const Edge& e : h.edges())
        for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
    return DegreeSequence(std::move(deg), h.uniformity());
}

/// True iff every pair of distinct edges shares at most one vertex. Linear
/// time in total pair slots: an unordered vertex pair occurring in two edges
/// is exactly a violation.
inline bool is_linear(const Hypergraph& h) {
    std::vector<std::uint64_t> pair_keys;
    const int k = h.uniformity();
    pair_keys.reserve(h.edge_count() * static_cast<std::size_t>(k * (k - 1) / 2));
    const std::uint64_t n = static_cast<std::uint64_t>(h.vertex_count());
    for (const Edge& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                pair_keys.push_back(static_cast<std::uint64_t>(e[i]) * n +
                                    static_cast<std::uint64_t>(e[j]));
    std::sort(pair_keys.begin(), pair_keys.end());
    return std::adjacent_find(pair_keys.begin(), pair_keys.end()) == pair_keys.end();
}

/// Visit every k-subset of 0..n-1 that is not an edge of H, in lexicographic
/// order. `fn` returns false to stop early.
template <typename Fn>
void for_each_non_edge(const Hypergraph& h, Fn&& fn) {
    const int n = h.vertex_count();
    const int k = h.uniformity();
    if (k > n) return;
    Edge current(static_cast<std::size_t>(k));
    std::iota(current.begin(), current.end(), 0);
    const auto& edges = h.edges();
    std::size_t next_edge = 0;
    for (;;) {
        while (next_edge < edges.size() && edges[next_edge] < current) ++next_edge;
        const bool present = next_edge < edges.size() && edges[next_edge] == current;
        if (!present && !fn(static_cast<const Edge&>(current))) return;
        // advance to the next k-combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
}

/// All non-edges of H, materialized. Complementary to E(H) within the
/// k-subsets of the vertex set.
inline std::vector<Edge> non_edges(const Hypergraph& h) {
    std::vector<Edge> result;
    for_each_non_edge(h, [&](const Edge& e) {
        result.push_back(e);
        return true;
    });
    return result;
}

// --- canonical text format -------------------------------------------------
//
// First line `n k m`, then m lines of k strictly increasing vertex indices
// separated by single spaces. Lines starting with '#' are comments. A
// trailing newline is required.

inline std::string serialize_hypergraph(const Hypergraph& h) {
    std::string out = std::to_string(h.vertex_count()) + " " + std::to_string(h.uniformity()) +
                      " " + std::to_string(h.edge_count()) + "\n";
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& cause) {
    raise(errc::parse_error, "line " + std::to_string(line_no) + ": " + cause);
}

inline std::vector<long long> parse_int_line(std::string_view line, std::size_t line_no) {
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
        if (line[pos] == ' ') parse_fail(line_no, "malformed spacing (expected single spaces)");
        long long value = 0;
        const char* begin = line.data() + pos;
        const char* end = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc())
            parse_fail(line_no, "expected an integer at column " + std::to_string(pos + 1));
        values.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
        if (pos < line.size()) {
            if (line[pos] != ' ') parse_fail(line_no, "unexpected character after integer");
            ++pos;
            if (pos == line.size()) parse_fail(line_no, "trailing space");
        }
    }
    if (values.empty()) parse_fail(line_no, "empty line");
    return values;
}

} // namespace detail

inline Hypergraph parse_hypergraph(std::string_view text) {
    if (text.empty() || text.back() != '\n')
        detail::parse_fail(text.empty() ? 1 : 1 + static_cast<std::size_t>(std::count(
                                                    text.begin(), text.end(), '\n')),
                           "missing trailing newline");

    long long n = -1, k = -1, m = -1;
    bool header_seen = false;
    std::vector<Edge> edges;
    std::vector<Edge> sorted_seen;
    long long edges_seen = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;

        auto values = detail::parse_int_line(line, line_no);
        if (!header_seen) {
            if (values.size() != 3) detail::parse_fail(line_no, "header must be `n k m`");
            n = values[0];
            k = values[1];
            m = values[2];
            if (n < 0) detail::parse_fail(line_no, "vertex count must be >= 0");
            if (k < 2) detail::parse_fail(line_no, "uniformity must be >= 2");
            if (m < 0) detail::parse_fail(line_no, "edge count must be >= 0");
            header_seen = true;
            continue;
        }
        if (edges_seen == m) detail::parse_fail(line_no, "unexpected content after last edge");
        if (static_cast<long long>(values.size()) != k)
            detail::parse_fail(line_no, "expected " + std::to_string(k) + " vertices, got " +
                                            std::to_string(values.size()));
        Edge e;
        e.reserve(values.size());
        for (long long v : values) {
            if (v < 0 || v >= n)
                detail::parse_fail(line_no, "vertex " + std::to_string(v) + " outside 0.." +
                                                std::to_string(n - 1));
            if (!e.empty() && static_cast<Vertex>(v) <= e.back())
                detail::parse_fail(line_no, "vertices not strictly increasing");
            e.push_back(static_cast<Vertex>(v));
        }
        auto it = std::lower_bound(sorted_seen.begin(), sorted_seen.end(), e);
        if (it != sorted_seen.end() && *it == e) detail::parse_fail(line_no, "duplicate edge");
        sorted_seen.insert(it, e);
        edges.push_back(std::move(e));
        ++edges_seen;
    }
    if (!header_seen) detail::parse_fail(line_no + 1, "missing header line");
    if (edges_seen != m)
        detail::parse_fail(line_no + 1, "expected " + std::to_string(m) + " edges, got " +
                                            std::to_string(edges_seen));
    return Hypergraph(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

} // namespace bergesat

#endif // BERGESAT_HYPERGRAPH_HPP
