#ifndef BERGESAT_CONFIG_MODEL_HPP
#define BERGESAT_CONFIG_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "bergesat/combinatorics.hpp"
#include "bergesat/hypergraph.hpp"
#include "bergesat/rng.hpp"

namespace bergesat {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

/// Poisson parameter for loop counts of a nearly-d-regular degree sequence:
/// (d-1)(k-1)/2. The overlap parameter is its square.
inline Rational loop_poisson_mean(int d, int k) {
    if (d < 1) return Rational(0);
    return Rational(static_cast<long long>(d - 1) * (k - 1), 2);
}

inline Rational overlap_poisson_mean(int d, int k) {
    const Rational lambda = loop_poisson_mean(d, k);
    return lambda * lambda;
}

/// Degree sequence of a nearly-d-regular hypergraph: with r = (d*n) mod k,
/// the r highest-indexed vertices get degree d-1 and the rest degree d.
inline DegreeSequence nearly_regular_degree_sequence(int n, int d, int k) {
    if (n < 1) raise(errc::invalid_params, "need n >= 1");
    if (d < 0) raise(errc::invalid_params, "need d >= 0");
    if (k < 2) raise(errc::invalid_params, "need k >= 2");
    const long long r = (static_cast<long long>(d) * n) % k;
    if (n <= r)
        raise(errc::invalid_params, "n=" + std::to_string(n) + " too small for r=" +
                                        std::to_string(r) + " deficient vertices");
    std::vector<int> degrees(static_cast<std::size_t>(n), d);
    for (long long i = 0; i < r; ++i) degrees[static_cast<std::size_t>(n - 1 - i)] = d - 1;
    return DegreeSequence(std::move(degrees), k);
}

/// A perfect k-matching on the configuration points of a degree sequence.
/// Point p belongs to vertex owner(p); points are numbered 0..T-1 grouping
/// each vertex's points consecutively. Blocks are stored canonically: sorted
/// internally and ordered by smallest point.
class Configuration {
public:
    Configuration(DegreeSequence degrees, std::vector<int> matching)
        : degrees_(std::move(degrees)), matching_(std::move(matching)) {
        const long long t = degrees_.total();
        if (static_cast<long long>(matching_.size()) != t)
            raise(errc::invalid_params, "matching must cover all configuration points");
        std::vector<bool> seen(matching_.size(), false);
        for (int p : matching_) {
            if (p < 0 || p >= t || seen[static_cast<std::size_t>(p)])
                raise(errc::invalid_params, "matching is not a permutation of the points");
            seen[static_cast<std::size_t>(p)] = true;
        }
        owner_.reserve(matching_.size());
        for (std::size_t v = 0; v < degrees_.size(); ++v)
            owner_.insert(owner_.end(), static_cast<std::size_t>(degrees_.degrees()[v]),
                          static_cast<Vertex>(v));
        canonicalize();
    }

    const DegreeSequence& degree_sequence() const { return degrees_; }
    int uniformity() const { return degrees_.uniformity(); }
    std::size_t point_count() const { return matching_.size(); }
    std::size_t block_count() const {
        return matching_.size() / static_cast<std::size_t>(uniformity());
    }
    std::span<const int> block(std::size_t b) const {
        const std::size_t k = static_cast<std::size_t>(uniformity());
        return std::span<const int>(matching_).subspan(b * k, k);
    }
    Vertex owner(int point) const { return owner_[static_cast<std::size_t>(point)]; }
    const std::vector<int>& points() const { return matching_; }
    const std::vector<Vertex>& owners() const { return owner_; }

    bool operator==(const Configuration& other) const {
        return degrees_ == other.degrees_ && matching_ == other.matching_;
    }

private:
    void canonicalize() {
        const std::size_t k = static_cast<std::size_t>(uniformity());
        for (std::size_t b = 0; b * k < matching_.size(); ++b)
            std::sort(matching_.begin() + static_cast<std::ptrdiff_t>(b * k),
                      matching_.begin() + static_cast<std::ptrdiff_t>((b + 1) * k));
        std::vector<std::vector<int>> blocks(block_count());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            auto sp = block(b);
            blocks[b].assign(sp.begin(), sp.end());
        }
        std::sort(blocks.begin(), blocks.end());
        std::size_t out = 0;
        for (const auto& blk : blocks)
            for (int p : blk) matching_[out++] = p;
    }

    DegreeSequence degrees_;
    std::vector<int> matching_;
    std::vector<Vertex> owner_;
};

/// Loop count Z1 and overlap count Z2 of a configuration, with the Poisson
/// parameters lambda = (d-1)(k-1)/2 and mu = lambda^2 when the degree
/// sequence is nearly-d-regular for some d >= 1.
struct DefectReport {
    long long loops = 0;
    long long overlaps = 0;
    std::optional<Rational> lambda;
    std::optional<Rational> mu;

    bool defect_free() const { return loops == 0 && overlaps == 0; }
};

/// Empirical defect statistics over independent configuration samples.
struct SamplerStats {
    long long trials_run = 0;
    Rational mean_loops{0};
    Rational mean_overlaps{0};
    Rational frac_defect_free{0};
    Rational lambda{0};
    Rational mu{0};
    double predicted_success = 1.0;
};

/// The d such that degrees are all d or d-1 with fewer than k of d-1, if any.
inline std::optional<int> nearly_regular_degree(const DegreeSequence& ds) {
    if (ds.size() == 0) return std::nullopt;
    const int d = *std::max_element(ds.degrees().begin(), ds.degrees().end());
    if (d < 1) return std::nullopt;
    long long deficient = 0;
    for (int x : ds.degrees()) {
        if (x == d - 1)
            ++deficient;
        else if (x != d)
            return std::nullopt;
    }
    if (deficient >= ds.uniformity()) return std::nullopt;
    return d;
}

namespace detail {

/// Set of 64-bit keys with O(1) clear via generation stamps; used to detect
/// repeated vertex pairs across blocks.
class PairSet {
public:
    void prepare(std::size_t max_entries) {
        std::size_t want = 16;
        while (want < max_entries * 2) want <<= 1;
        if (slots_.size() < want) {
            slots_.assign(want, Slot{});
            generation_ = 0;
        }
        mask_ = slots_.size() - 1;
        ++generation_;
    }

    bool contains(std::uint64_t key) const {
        std::size_t idx = mix(key) & mask_;
        for (;;) {
            const Slot& s = slots_[idx];
            if (s.generation != generation_) return false;
            if (s.key == key) return true;
            idx = (idx + 1) & mask_;
        }
    }

    /// True if newly inserted; false if the key was already present.
    bool insert(std::uint64_t key) {
        std::size_t idx = mix(key) & mask_;
        for (;;) {
            Slot& s = slots_[idx];
            if (s.generation != generation_) {
                s.generation = generation_;
                s.key = key;
                return true;
            }
            if (s.key == key) return false;
            idx = (idx + 1) & mask_;
        }
    }

private:
    struct Slot {
        std::uint64_t key = 0;
        std::uint64_t generation = 0;
    };
    static std::size_t mix(std::uint64_t key) {
        key *= 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(key ^ (key >> 32));
    }
    std::vector<Slot> slots_;
    std::size_t mask_ = 0;
    std::uint64_t generation_ = 0;
};

/// Count loops and overlaps of a k-matching given as consecutive k-chunks of
/// `perm`. Overlaps use the pair-weight identity: for each unordered vertex
/// pair, sum over blocks of m_e(u)m_e(w) gives S and sum of squares Q, and
/// the pair contributes (S^2 - Q)/2.
inline std::pair<long long, long long> count_matching_defects(
    std::span<const Vertex> owner, int k, std::span<const int> perm,
    std::vector<std::pair<std::uint64_t, std::uint64_t>>& pair_weights,
    std::vector<Vertex>& block_owners) {
    const std::size_t t = perm.size();
    const std::uint64_t n_key = owner.empty() ? 1 : static_cast<std::uint64_t>(owner.size());
    long long loops = 0;
    pair_weights.clear();
    block_owners.resize(static_cast<std::size_t>(k));
    for (std::size_t base = 0; base < t; base += static_cast<std::size_t>(k)) {
        for (int j = 0; j < k; ++j)
            block_owners[static_cast<std::size_t>(j)] =
                owner[static_cast<std::size_t>(perm[base + static_cast<std::size_t>(j)])];
        std::sort(block_owners.begin(), block_owners.end());
        // walk multiplicity runs of the sorted owners in place
        std::size_t i = 0;
        while (i < block_owners.size()) {
            std::size_t j = i;
            while (j < block_owners.size() && block_owners[j] == block_owners[i]) ++j;
            const long long m1 = static_cast<long long>(j - i);
            loops += m1 * (m1 - 1) / 2;
            std::size_t a = j;
            while (a < block_owners.size()) {
                std::size_t b = a;
                while (b < block_owners.size() && block_owners[b] == block_owners[a]) ++b;
                const long long m2 = static_cast<long long>(b - a);
                pair_weights.emplace_back(
                    static_cast<std::uint64_t>(block_owners[i]) * n_key +
                        static_cast<std::uint64_t>(block_owners[a]),
                    static_cast<std::uint64_t>(m1 * m2));
                a = b;
            }
            i = j;
        }
    }
    std::sort(pair_weights.begin(), pair_weights.end());
    long long overlaps = 0;
    std::size_t i = 0;
    while (i < pair_weights.size()) {
        std::size_t j = i;
        long long sum = 0, sum_sq = 0;
        while (j < pair_weights.size() && pair_weights[j].first == pair_weights[i].first) {
            const long long w = static_cast<long long>(pair_weights[j].second);
            sum += w;
            sum_sq += w * w;
            ++j;
        }
        overlaps += (sum * sum - sum_sq) / 2;
        i = j;
    }
    return {loops, overlaps};
}

/// Draw a uniform k-matching block by block (Fisher-Yates from the tail),
/// aborting as soon as a loop or overlap appears. Returns true when `perm`
/// holds a defect-free matching in consecutive k-chunks.
inline bool sample_defect_free_matching(std::span<const Vertex> owner, int k,
                                        Rng& rng, std::vector<int>& perm,
                                        PairSet& pairs, std::vector<Vertex>& block_owners) {
    const std::size_t t = owner.size();
    perm.resize(t);
    std::iota(perm.begin(), perm.end(), 0);
    pairs.prepare(t * static_cast<std::size_t>(k - 1) / 2 + 1);
    block_owners.resize(static_cast<std::size_t>(k));
    const std::uint64_t n_key = owner.empty() ? 1 : static_cast<std::uint64_t>(owner.size());
    for (std::size_t filled = 0; filled < t; filled += static_cast<std::size_t>(k)) {
        for (int j = 0; j < k; ++j) {
            const std::size_t i = t - filled - 1 - static_cast<std::size_t>(j);
            const std::size_t r = static_cast<std::size_t>(uniform_below(rng, i + 1));
            std::swap(perm[i], perm[r]);
        }
        const std::size_t base = t - filled - static_cast<std::size_t>(k);
        for (int j = 0; j < k; ++j)
            block_owners[static_cast<std::size_t>(j)] =
                owner[static_cast<std::size_t>(perm[base + static_cast<std::size_t>(j)])];
        std::sort(block_owners.begin(), block_owners.end());
        for (int j = 0; j + 1 < k; ++j)
            if (block_owners[static_cast<std::size_t>(j)] ==
                block_owners[static_cast<std::size_t>(j + 1)])
                return false; // loop
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                const std::uint64_t key =
                    static_cast<std::uint64_t>(block_owners[static_cast<std::size_t>(a)]) * n_key +
                    static_cast<std::uint64_t>(block_owners[static_cast<std::size_t>(b)]);
                if (!pairs.insert(key)) return false; // overlap
            }
    }
    return true;
}

inline std::vector<Vertex> owner_of_points(const DegreeSequence& ds) {
    std::vector<Vertex> owner;
    owner.reserve(static_cast<std::size_t>(ds.total()));
    for (std::size_t v = 0; v < ds.size(); ++v)
        owner.insert(owner.end(), static_cast<std::size_t>(ds.degrees()[v]),
                     static_cast<Vertex>(v));
    return owner;
}

inline unsigned trial_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

} // namespace detail

/// Uniform draw over all phi(T) configurations of the degree sequence: a
/// uniform shuffle of the T points chunked into consecutive k-blocks. Every
/// configuration corresponds to exactly (T/k)! (k!)^{T/k} orderings.
inline Configuration sample_configuration(const DegreeSequence& ds, Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(ds.total()));
    std::iota(perm.begin(), perm.end(), 0);
    shuffle_vec(perm, rng);
    return Configuration(ds, std::move(perm));
}

/// Collapse each block to the multiset of owning vertices.
inline PseudoHypergraph collapse(const Configuration& c) {
    std::vector<Edge> edges;
    edges.reserve(c.block_count());
    for (std::size_t b = 0; b < c.block_count(); ++b) {
        const auto blk = c.block(b);
        Edge e;
        e.reserve(blk.size());
        for (int p : blk) e.push_back(c.owner(p));
        edges.push_back(std::move(e));
    }
    return PseudoHypergraph(static_cast<int>(c.degree_sequence().size()), c.uniformity(),
                            std::move(edges));
}

inline DefectReport count_defects(const Configuration& c) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_weights;
    std::vector<Vertex> block_owners;
    const auto [loops, overlaps] = detail::count_matching_defects(
        c.owners(), c.uniformity(), c.points(), pair_weights, block_owners);
    DefectReport report;
    report.loops = loops;
    report.overlaps = overlaps;
    if (const auto d = nearly_regular_degree(c.degree_sequence())) {
        report.lambda = loop_poisson_mean(*d, c.uniformity());
        report.mu = overlap_poisson_mean(*d, c.uniformity());
    }
    return report;
}

/// Default rejection budget: 100 x the inverse asymptotic success rate
/// e^{-(lambda+mu)}, capped at 10^7 trials.
inline long long default_rejection_budget(const Rational& lambda_plus_mu) {
    const double v = std::ceil(100.0 * std::exp(to_double(lambda_plus_mu)));
    if (!(v < 1e7)) return 10000000LL;
    return std::max(1LL, static_cast<long long>(v));
}

/// Rejection-sample a simple linear nearly-d-regular k-uniform hypergraph:
/// draw uniform configurations until one has no loops and no overlaps, then
/// collapse it. Trial t depends only on (seed, t) and the first defect-free
/// trial index wins, so the result is identical whether trials run on one
/// thread or several. Throws trials_exhausted when the budget runs out,
/// which for small n may mean the parameters make success too unlikely
/// rather than that no such hypergraph exists.
inline Hypergraph sample_linear_nearly_regular(int n, int d, int k, std::uint64_t seed,
                                               std::optional<long long> max_trials = {},
                                               unsigned workers = 0) {
    if (d == 0) {
        detail::check_vertex_count(n);
        detail::check_uniformity(k);
        return Hypergraph(n, k, {});
    }
    const DegreeSequence ds = nearly_regular_degree_sequence(n, d, k);
    const Rational total_mean = loop_poisson_mean(d, k) + overlap_poisson_mean(d, k);
    const long long budget = max_trials ? *max_trials : default_rejection_budget(total_mean);
    if (budget < 1) raise(errc::invalid_params, "max_trials must be >= 1");
    const std::vector<Vertex> owner = detail::owner_of_points(ds);
    const unsigned lanes = detail::trial_workers(workers);

    // scan [begin, end) for the first defect-free trial
    const auto scan = [&](long long begin, long long end)
        -> std::optional<std::pair<long long, std::vector<int>>> {
        std::vector<int> perm;
        detail::PairSet pairs;
        std::vector<Vertex> block_owners;
        for (long long t = begin; t < end; ++t) {
            auto rng = stream_rng(seed, static_cast<std::uint64_t>(t));
            if (detail::sample_defect_free_matching(owner, k, rng, perm, pairs, block_owners))
                return std::make_pair(t, std::move(perm));
        }
        return std::nullopt;
    };

    std::optional<std::pair<long long, std::vector<int>>> best;
    constexpr long long kBatch = 4096;
    for (long long base = 0; base < budget && !best; base += kBatch * lanes) {
        if (lanes == 1) {
            best = scan(base, std::min(budget, base + kBatch));
        } else {
            std::vector<std::future<std::optional<std::pair<long long, std::vector<int>>>>> jobs;
            for (unsigned w = 0; w < lanes; ++w) {
                const long long begin = base + static_cast<long long>(w) * kBatch;
                const long long end = std::min(budget, begin + kBatch);
                if (begin >= end) break;
                jobs.push_back(std::async(std::launch::async, scan, begin, end));
            }
            for (auto& job : jobs) {
                auto hit = job.get();
                if (hit && (!best || hit->first < best->first)) best = std::move(hit);
            }
        }
    }
    if (!best)
        raise(errc::trials_exhausted, "no defect-free configuration in " +
                                          std::to_string(budget) + " trials (n=" +
                                          std::to_string(n) + ", d=" + std::to_string(d) +
                                          ", k=" + std::to_string(k) + ")");
    Configuration c(ds, std::move(best->second));
    return collapse(c).to_hypergraph();
}

/// Run `trials` independent configuration samples and report defect
/// statistics next to the Poisson prediction. Trial t depends only on
/// (seed, t) and per-trial counts merge by integer sums, so the stats are
/// identical at any worker count.
inline SamplerStats poisson_experiment(int n, int d, int k, long long trials,
                                       std::uint64_t seed, unsigned workers = 0) {
    if (trials < 1) raise(errc::invalid_params, "trials must be >= 1");
    const DegreeSequence ds = nearly_regular_degree_sequence(n, d, k);
    const std::vector<Vertex> owner = detail::owner_of_points(ds);

    struct Sums {
        long long loops = 0, overlaps = 0, defect_free = 0;
    };
    const auto scan = [&](long long begin, long long end) {
        Sums sums;
        std::vector<int> perm(owner.size());
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_weights;
        std::vector<Vertex> block_owners;
        for (long long t = begin; t < end; ++t) {
            auto rng = stream_rng(seed, static_cast<std::uint64_t>(t));
            std::iota(perm.begin(), perm.end(), 0);
            shuffle_vec(perm, rng);
            const auto [loops, overlaps] =
                detail::count_matching_defects(owner, k, perm, pair_weights, block_owners);
            sums.loops += loops;
            sums.overlaps += overlaps;
            if (loops == 0 && overlaps == 0) ++sums.defect_free;
        }
        return sums;
    };

    const unsigned lanes = detail::trial_workers(workers);
    Sums total;
    if (lanes == 1) {
        total = scan(0, trials);
    } else {
        const long long chunk = (trials + lanes - 1) / lanes;
        std::vector<std::future<Sums>> jobs;
        for (unsigned w = 0; w < lanes; ++w) {
            const long long begin = static_cast<long long>(w) * chunk;
            const long long end = std::min(trials, begin + chunk);
            if (begin >= end) break;
            jobs.push_back(std::async(std::launch::async, scan, begin, end));
        }
        for (auto& job : jobs) {
            const Sums sums = job.get();
            total.loops += sums.loops;
            total.overlaps += sums.overlaps;
            total.defect_free += sums.defect_free;
        }
    }

    SamplerStats stats;
    stats.trials_run = trials;
    stats.mean_loops = Rational(total.loops, trials);
    stats.mean_overlaps = Rational(total.overlaps, trials);
    stats.frac_defect_free = Rational(total.defect_free, trials);
    stats.lambda = loop_poisson_mean(d, k);
    stats.mu = overlap_poisson_mean(d, k);
    stats.predicted_success = std::exp(-to_double(stats.lambda + stats.mu));
    return stats;
}

/// Construct (rather than uniformly sample) a linear nearly-d-regular
/// hypergraph: place blocks sequentially, drawing capacity-weighted vertices
/// and rejecting any pick that would repeat a vertex pair, with bounded
/// retries and full restarts. Much faster than rejection sampling when
/// e^{lambda+mu} is large; the output distribution is not uniform, which the
/// saturated constructions do not need.
inline Hypergraph build_linear_nearly_regular(int n, int d, int k, std::uint64_t seed,
                                              std::optional<long long> max_attempts = {}) {
    if (d == 0) {
        detail::check_vertex_count(n);
        detail::check_uniformity(k);
        return Hypergraph(n, k, {});
    }
    const DegreeSequence ds = nearly_regular_degree_sequence(n, d, k);
    const long long blocks = ds.total() / k;
    const long long attempts = max_attempts.value_or(100000);
    if (attempts < 1) raise(errc::invalid_params, "max_attempts must be >= 1");

    constexpr int kBlockRetries = 64;
    constexpr int kPickRetries = 48;

    std::vector<int> pool;
    std::vector<Vertex> chosen;
    std::vector<Edge> edges;
    detail::PairSet pairs;
    const std::uint64_t n_key = static_cast<std::uint64_t>(n);

    for (long long attempt = 0; attempt < attempts; ++attempt) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(attempt));
        pool.clear();
        for (std::size_t v = 0; v < ds.size(); ++v)
            pool.insert(pool.end(), static_cast<std::size_t>(ds.degrees()[v]),
                        static_cast<int>(v));
        pairs.prepare(static_cast<std::size_t>(blocks) *
                          static_cast<std::size_t>(k * (k - 1) / 2) +
                      1);
        edges.clear();
        bool attempt_ok = true;
        for (long long b = 0; b < blocks && attempt_ok; ++b) {
            bool block_done = false;
            for (int retry = 0; retry < kBlockRetries && !block_done; ++retry) {
                chosen.clear();
                while (static_cast<int>(chosen.size()) < k) {
                    bool picked = false;
                    for (int tries = 0; tries < kPickRetries && !picked; ++tries) {
                        const std::size_t idx =
                            static_cast<std::size_t>(uniform_below(rng, pool.size()));
                        const Vertex v = pool[idx];
                        bool compatible = true;
                        for (Vertex u : chosen) {
                            if (u == v) {
                                compatible = false;
                                break;
                            }
                            const std::uint64_t key =
                                u < v ? static_cast<std::uint64_t>(u) * n_key +
                                            static_cast<std::uint64_t>(v)
                                      : static_cast<std::uint64_t>(v) * n_key +
                                            static_cast<std::uint64_t>(u);
                            if (pairs.contains(key)) {
                                compatible = false;
                                break;
                            }
                        }
                        if (compatible) {
                            pool[idx] = pool.back();
                            pool.pop_back();
                            chosen.push_back(v);
                            picked = true;
                        }
                    }
                    if (!picked) break;
                }
                if (static_cast<int>(chosen.size()) == k) {
                    for (std::size_t a = 0; a < chosen.size(); ++a)
                        for (std::size_t c2 = a + 1; c2 < chosen.size(); ++c2) {
                            const Vertex u = std::min(chosen[a], chosen[c2]);
                            const Vertex w = std::max(chosen[a], chosen[c2]);
                            pairs.insert(static_cast<std::uint64_t>(u) * n_key +
                                         static_cast<std::uint64_t>(w));
                        }
                    Edge e(chosen.begin(), chosen.end());
                    std::sort(e.begin(), e.end());
                    edges.push_back(std::move(e));
                    block_done = true;
                } else {
                    for (Vertex v : chosen) pool.push_back(v); // undo partial block
                }
            }
            if (!block_done) attempt_ok = false;
        }
        if (attempt_ok) return Hypergraph(n, k, std::move(edges));
    }
    raise(errc::trials_exhausted, "no linear placement found in " + std::to_string(attempts) +
                                      " attempts (n=" + std::to_string(n) + ", d=" +
                                      std::to_string(d) + ", k=" + std::to_string(k) + ")");
}

} // namespace bergesat

#endif // BERGESAT_CONFIG_MODEL_HPP
