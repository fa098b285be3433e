#include "rcx/arrow.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

namespace rcx {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int8_t kUnset = -1;
constexpr std::int8_t kRed = 0;
constexpr std::int8_t kBlue = 1;

bool exact_through_edge_kind(PatternKind k) {
    return k == PatternKind::Star || k == PatternKind::Matching || k == PatternKind::Clique ||
           k == PatternKind::UnionCliques;
}

std::vector<EdgeId> sorted_copy(std::vector<EdgeId> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TwoColoring::TwoColoring(Graph host_in, std::vector<EdgeId> red_in, std::vector<EdgeId> blue_in)
    : host(std::move(host_in)), red(sorted_copy(std::move(red_in))),
      blue(sorted_copy(std::move(blue_in))) {
    const auto host_edges = host.edges();
    std::vector<EdgeId> merged;
    merged.reserve(red.size() + blue.size());
    std::merge(red.begin(), red.end(), blue.begin(), blue.end(), std::back_inserter(merged));
    if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        throw std::invalid_argument("coloring assigns an edge twice");
    if (merged != host_edges)
        throw std::invalid_argument("red and blue must partition the host edge set exactly");
}

Graph TwoColoring::red_graph() const { return Graph(host.order(), red); }
Graph TwoColoring::blue_graph() const { return Graph(host.order(), blue); }

Graph make_host(const HostShape& shape) {
    switch (shape.kind) {
        case HostShape::Kind::Complete: return complete(shape.r);
        case HostShape::Kind::MinusStar:
            return delete_class_member(complete(shape.r), {DeletionClass::Star}, shape.k);
        case HostShape::Kind::MinusMatching:
            return delete_class_member(complete(shape.r), {DeletionClass::Matching}, shape.k);
        case HostShape::Kind::MinusPath:
            return delete_class_member(complete(shape.r), {DeletionClass::Path}, shape.k);
        case HostShape::Kind::MinusClique:
            return delete_class_member(complete(shape.r), {DeletionClass::Complete}, shape.k);
        case HostShape::Kind::BookJoin: return book_join(shape.r, shape.k);
    }
    throw std::invalid_argument("unknown host shape");
}

namespace {

std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

void add_transpositions(std::vector<std::vector<int>>& gens, int n, int lo, int hi) {
    for (int i = lo; i + 1 <= hi; ++i) {
        auto p = identity_perm(n);
        std::swap(p[i], p[i + 1]);
        gens.push_back(std::move(p));
    }
}

}  // namespace

std::vector<std::vector<int>> shape_automorphism_generators(const HostShape& shape) {
    std::vector<std::vector<int>> gens;
    const int r = shape.r;
    const int k = shape.k;
    switch (shape.kind) {
        case HostShape::Kind::Complete:
            add_transpositions(gens, r, 0, r - 1);
            break;
        case HostShape::Kind::MinusStar:
            // Center 0 fixed; leaves and untouched vertices permute freely
            // within their blocks.
            add_transpositions(gens, r, 1, k);
            add_transpositions(gens, r, k + 1, r - 1);
            break;
        case HostShape::Kind::MinusMatching: {
            if (k >= 1) {
                auto p = identity_perm(r);
                std::swap(p[0], p[1]);
                gens.push_back(std::move(p));
            }
            for (int i = 0; i + 1 < k; ++i) {
                auto p = identity_perm(r);
                std::swap(p[2 * i], p[2 * i + 2]);
                std::swap(p[2 * i + 1], p[2 * i + 3]);
                gens.push_back(std::move(p));
            }
            add_transpositions(gens, r, 2 * k, r - 1);
            break;
        }
        case HostShape::Kind::MinusPath: {
            auto p = identity_perm(r);
            for (int i = 0; i < k; ++i) p[i] = k - 1 - i;
            gens.push_back(std::move(p));
            add_transpositions(gens, r, k, r - 1);
            break;
        }
        case HostShape::Kind::MinusClique:
            add_transpositions(gens, r, 0, k - 1);
            add_transpositions(gens, r, k, r - 1);
            break;
        case HostShape::Kind::BookJoin:
            // Pendant vertex r stays put.
            add_transpositions(gens, r + 1, 0, k - 1);
            add_transpositions(gens, r + 1, k, r - 1);
            break;
    }
    return gens;
}

std::vector<std::vector<EdgeId>> edge_orbits(const Graph& g,
                                             const std::vector<std::vector<int>>& generators) {
    const auto edges = g.edges();
    auto index_of = [&edges](EdgeId e) {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        return static_cast<int>(it - edges.begin());
    };
    std::vector<int> parent(edges.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& perm : generators) {
        if (apply_permutation(g, perm) != g)
            throw std::invalid_argument("permutation is not an automorphism of the host");
        for (size_t i = 0; i < edges.size(); ++i) {
            const EdgeId image = make_edge(perm[edges[i].u], perm[edges[i].v]);
            const int a = find(static_cast<int>(i));
            const int b = find(index_of(image));
            if (a != b) parent[a] = b;
        }
    }
    std::vector<std::vector<EdgeId>> buckets(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) buckets[find(static_cast<int>(i))].push_back(edges[i]);
    std::vector<std::vector<EdgeId>> orbits;
    for (auto& b : buckets)
        if (!b.empty()) orbits.push_back(std::move(b));
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return orbits;
}

namespace {

// One forced (edge index, color) prefix defining an independent subtree.
using ForcedSet = std::vector<std::pair<int, std::int8_t>>;

class Searcher {
public:
    Searcher(const Graph& host, const Pattern& f, const Pattern& h, const SearchOptions& opts,
             const std::vector<EdgeId>& edges, std::atomic<bool>* stop, Clock::time_point deadline,
             bool has_deadline)
        : host_(host), f_(f), h_(h), opts_(opts), edges_(edges), red_(host.order()),
          blue_(host.order()), stop_(stop), deadline_(deadline), has_deadline_(has_deadline) {
        red_leaf_check_ = !exact_through_edge_kind(f.kind) && opts.deferred_full_checks;
        blue_leaf_check_ = !exact_through_edge_kind(h.kind) && opts.deferred_full_checks;
    }

    std::optional<TwoColoring> run(const ForcedSet& forced) {
        forced_.assign(edges_.size(), kUnset);
        for (auto [idx, color] : forced) forced_[idx] = color;
        witness_.reset();
        dfs(0);
        return witness_;
    }

    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    bool timed_out = false;

private:
    // Returns true to unwind the whole search: witness captured, abort
    // requested, or deadline passed.
    bool dfs(size_t idx) {
        if (stop_ && stop_->load(std::memory_order_relaxed)) return true;
        if (has_deadline_ && (nodes & 0xFFF) == 0 && Clock::now() > deadline_) {
            timed_out = true;
            return true;
        }
        if (idx == edges_.size()) {
            if (red_leaf_check_ && contains(red_.view(), f_)) return false;
            if (blue_leaf_check_ && contains(blue_.view(), h_)) return false;
            witness_.emplace(host_, red_.view().edges(), blue_.view().edges());
            return true;
        }
        const EdgeId e = edges_[idx];
        for (std::int8_t color : {kRed, kBlue}) {
            if (forced_[idx] != kUnset && forced_[idx] != color) continue;
            ++nodes;
            assign(e, color);
            bool unwind = false;
            if (pattern_completed(e, color)) {
                ++prunes;
            } else {
                unwind = dfs(idx + 1);
            }
            unassign(e, color);
            if (unwind) return true;
        }
        return false;
    }

    void assign(EdgeId e, std::int8_t color) {
        if (color == kRed) {
            red_.add_edge(e.u, e.v);
            ++red_count_;
        } else {
            blue_.add_edge(e.u, e.v);
            ++blue_count_;
        }
    }

    void unassign(EdgeId e, std::int8_t color) {
        if (color == kRed) {
            red_.remove_edge(e.u, e.v);
            --red_count_;
        } else {
            blue_.remove_edge(e.u, e.v);
            --blue_count_;
        }
    }

    // True iff this side's pattern is certainly present in the partial
    // coloring after adding e. Exact for star/matching/clique/union
    // kinds on every assignment; path/cycle detectors run deferred and
    // the leaf check covers what they miss.
    bool pattern_completed(EdgeId e, std::int8_t color) {
        const bool red_side = color == kRed;
        const Pattern& p = red_side ? f_ : h_;
        const Graph& side = red_side ? red_.view() : blue_.view();
        if (opts_.use_hints && incremental_hint(p, side, e)) return true;
        if (exact_through_edge_kind(p.kind)) return contains_through_edge(side, p, e);
        const int count = red_side ? red_count_ : blue_count_;
        if (!opts_.deferred_full_checks || count % 4 == 0) return contains(side, p).has_value();
        return false;
    }

    const Graph& host_;
    Pattern f_, h_;
    const SearchOptions& opts_;
    const std::vector<EdgeId>& edges_;
    GraphBuilder red_, blue_;
    int red_count_ = 0;
    int blue_count_ = 0;
    std::vector<std::int8_t> forced_;
    std::optional<TwoColoring> witness_;
    std::atomic<bool>* stop_;
    Clock::time_point deadline_;
    bool has_deadline_;
    bool red_leaf_check_;
    bool blue_leaf_check_;
};

void expand_prefixes(const std::vector<std::int8_t>& base, int depth, int idx, ForcedSet& current,
                     std::vector<ForcedSet>& out) {
    if (idx == depth) {
        out.push_back(current);
        return;
    }
    for (std::int8_t color : {kRed, kBlue}) {
        if (idx < static_cast<int>(base.size()) && base[idx] != kUnset && base[idx] != color)
            continue;
        current.emplace_back(idx, color);
        expand_prefixes(base, depth, idx + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

ArrowResult arrows(const Graph& host, const Pattern& f, const Pattern& h,
                   const SearchOptions& opts) {
    const auto edges = host.edges();
    if (static_cast<int>(edges.size()) > opts.edge_cap)
        throw std::invalid_argument("host has " + std::to_string(edges.size()) +
                                    " edges, above the cap of " + std::to_string(opts.edge_cap));

    const auto start = Clock::now();
    const bool has_deadline = opts.timeout_seconds > 0;
    const auto deadline =
        start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(opts.timeout_seconds));

    ArrowResult result;
    auto finish = [&](std::optional<TwoColoring> witness) {
        result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (witness) {
            const auto check = verify_free(*witness, f, h);
            if (!check.free)
                throw std::logic_error("internal error: counterexample failed verification");
            result.verdict = Verdict::NotArrows;
            result.witness = std::move(witness);
            result.canonical_witness = opts.deterministic;
        } else {
            result.verdict = Verdict::Arrows;
        }
        return result;
    };

    const bool deterministic = opts.deterministic;
    const bool use_orbits = opts.orbit_symmetry && !deterministic && opts.shape.has_value() &&
                            !edges.empty() && make_host(*opts.shape) == host;

    auto index_of = [&edges](EdgeId e) {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        return static_cast<int>(it - edges.begin());
    };

    std::vector<ForcedSet> tasks;
    if (use_orbits) {
        // A free coloring with any red edge maps, under a host
        // automorphism, to one whose first red orbit is O_j with the
        // orbit representative itself red; the all-blue coloring is the
        // one case left over.
        if (!contains(host, h)) {
            return finish(TwoColoring(host, {}, edges));
        }
        const auto orbits = edge_orbits(host, shape_automorphism_generators(*opts.shape));
        ForcedSet prefix;
        for (const auto& orbit : orbits) {
            ForcedSet task = prefix;
            task.emplace_back(index_of(orbit.front()), kRed);
            tasks.push_back(std::move(task));
            for (const auto& e : orbit) prefix.emplace_back(index_of(e), kBlue);
        }
    } else if (f == h && opts.color_swap_symmetry && !edges.empty()) {
        // Swapping colors fixes the pattern pair, so some free coloring
        // has the first edge red whenever any exists.
        tasks.push_back({{0, kRed}});
    } else {
        tasks.push_back({});
    }

    const int threads = deterministic ? 1 : std::max(1, opts.threads);
    std::atomic<bool> stop{false};
    std::atomic<bool> any_timeout{false};

    if (threads == 1) {
        Searcher searcher(host, f, h, opts, edges, nullptr, deadline, has_deadline);
        for (const auto& task : tasks) {
            auto witness = searcher.run(task);
            result.stats.nodes = searcher.nodes;
            result.stats.prunes = searcher.prunes;
            if (searcher.timed_out) throw TimeoutError("arrowing search timed out");
            if (witness) return finish(std::move(witness));
        }
        return finish(std::nullopt);
    }

    // Split every root task along its first undecided edges so the pool
    // has enough independent subtrees to chew on.
    int split_depth = 0;
    while ((1 << split_depth) < 8 * threads && split_depth < static_cast<int>(edges.size()) &&
           split_depth < 12)
        ++split_depth;
    std::vector<ForcedSet> subtasks;
    for (const auto& task : tasks) {
        std::vector<std::int8_t> base(edges.size(), kUnset);
        for (auto [idx, color] : task) base[idx] = color;
        ForcedSet current = task;
        expand_prefixes(base, split_depth, 0, current, subtasks);
    }

    std::atomic<size_t> next{0};
    std::mutex result_mutex;
    std::optional<TwoColoring> found;
    std::atomic<std::uint64_t> total_nodes{0}, total_prunes{0};

    auto worker = [&]() {
        Searcher searcher(host, f, h, opts, edges, &stop, deadline, has_deadline);
        for (;;) {
            const size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= subtasks.size() || stop.load(std::memory_order_relaxed)) break;
            auto witness = searcher.run(subtasks[i]);
            if (searcher.timed_out) {
                any_timeout = true;
                stop = true;
                break;
            }
            if (witness) {
                std::lock_guard<std::mutex> lock(result_mutex);
                if (!found) found = std::move(witness);
                stop = true;
                break;
            }
        }
        total_nodes += searcher.nodes;
        total_prunes += searcher.prunes;
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    result.stats.nodes = total_nodes.load();
    result.stats.prunes = total_prunes.load();
    if (any_timeout && !found) throw TimeoutError("arrowing search timed out");
    return finish(std::move(found));
}

std::optional<TwoColoring> find_free_coloring(const Graph& host, const Pattern& f,
                                              const Pattern& h, const SearchOptions& opts) {
    return arrows(host, f, h, opts).witness;
}

FreeCheckResult verify_free(const TwoColoring& c, const Pattern& f, const Pattern& h) {
    FreeCheckResult out;
    if (auto w = contains(c.red_graph(), f)) {
        out.free = false;
        out.violation_in_red = true;
        out.violation = std::move(w);
        return out;
    }
    if (auto w = contains(c.blue_graph(), h)) {
        out.free = false;
        out.violation_in_red = false;
        out.violation = std::move(w);
        return out;
    }
    out.free = true;
    return out;
}

}  // namespace rcx
