#pragma once

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace slec {

/// Simple undirected graph with stable 0-based vertex and edge ids.
/// Edge ids are positions in the edge list; endpoints keep their given order.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : n_(vertex_count), edges_(std::move(edge_list)) {
        if (n_ < 0) throw input_error("graph: negative vertex count");
        std::set<std::pair<int, int>> seen;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw input_error("graph: edge " + std::to_string(i) + " has endpoint out of range");
            if (u == v)
                throw input_error("graph: edge " + std::to_string(i) + " is a loop");
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second)
                throw input_error("graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            adj_[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(i)});
            adj_[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(i)});
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::pair<int, int> edge(int e) const {
        check_edge_id(e);
        return edges_[static_cast<std::size_t>(e)];
    }

    /// Incident list of v as (neighbor, edge id) pairs.
    const std::vector<std::pair<int, int>>& incident(int v) const {
        check_vertex_id(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(incident(v).size()); }

    bool adjacent(int u, int v) const {
        check_vertex_id(u);
        check_vertex_id(v);
        for (auto [w, e] : adj_[static_cast<std::size_t>(u)])
            if (w == v) return true;
        return false;
    }

    std::optional<int> find_edge(int u, int v) const {
        check_vertex_id(u);
        check_vertex_id(v);
        for (auto [w, e] : adj_[static_cast<std::size_t>(u)])
            if (w == v) return e;
        return std::nullopt;
    }

    void check_vertex_id(int v) const {
        if (v < 0 || v >= n_) throw input_error("graph: vertex id " + std::to_string(v) + " out of range");
    }
    void check_edge_id(int e) const {
        if (e < 0 || e >= edge_count()) throw input_error("graph: edge id " + std::to_string(e) + " out of range");
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

inline Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
    return Graph(vertex_count, edge_list);
}

/// Maximum over edges of deg(u) + deg(v).
inline int edge_weight(const Graph& g) {
    if (g.edge_count() == 0) throw input_error("edge_weight: graph has no edges");
    int best = 0;
    for (auto [u, v] : g.edges())
        best = std::max(best, g.degree(u) + g.degree(v));
    return best;
}

/// Length of a shortest cycle, or nothing for a forest.
/// BFS from every vertex; a non-tree edge seen from root s gives the candidate
/// dist[u] + dist[v] + 1, which is the length of a closed walk through s and
/// therefore never smaller than the girth; roots on a shortest cycle attain it.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent_edge(static_cast<std::size_t>(n));
    for (int s = 0; s < n && best > 3; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::deque<int> q{s};
        dist[static_cast<std::size_t>(s)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [v, e] : g.incident(u)) {
                if (e == parent_edge[static_cast<std::size_t>(u)]) continue;
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent_edge[static_cast<std::size_t>(v)] = e;
                    q.push_back(v);
                } else {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

/// Vertices of one shortest cycle in cycle order, or nothing for a forest.
/// Independent route from girth(): for every edge uv, shortest u-v path avoiding
/// that edge closes a shortest cycle through it.
inline std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> best_cycle;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{a};
        dist[static_cast<std::size_t>(a)] = 0;
        while (!q.empty() && dist[static_cast<std::size_t>(b)] < 0) {
            int u = q.front();
            q.pop_front();
            for (auto [v, f] : g.incident(u)) {
                if (f == e || dist[static_cast<std::size_t>(v)] >= 0) continue;
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                parent[static_cast<std::size_t>(v)] = u;
                q.push_back(v);
            }
        }
        if (dist[static_cast<std::size_t>(b)] < 0) continue;
        int len = dist[static_cast<std::size_t>(b)] + 1;
        if (len < best) {
            best = len;
            best_cycle.clear();
            for (int v = b; v != -1; v = parent[static_cast<std::size_t>(v)])
                best_cycle.push_back(v);
        }
    }
    if (best_cycle.empty()) return std::nullopt;
    return best_cycle;
}

/// True when distinct edges e and f share an endpoint or some edge joins them.
inline bool sees(const Graph& g, int e, int f) {
    g.check_edge_id(e);
    g.check_edge_id(f);
    if (e == f) throw input_error("sees: edges must be distinct");
    auto [a, b] = g.edge(e);
    auto [c, d] = g.edge(f);
    if (a == c || a == d || b == c || b == d) return true;
    return g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, c) || g.adjacent(b, d);
}

/// Conflict structure over a set of edges: positions index into edge_ids.
struct ConflictGraph {
    std::vector<int> edge_ids;                   // ascending host edge ids
    std::vector<std::pair<int, int>> conflicts;  // position pairs, first < second, sorted

    int size() const { return static_cast<int>(edge_ids.size()); }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> nbr(edge_ids.size());
        for (auto [i, j] : conflicts) {
            nbr[static_cast<std::size_t>(i)].push_back(j);
            nbr[static_cast<std::size_t>(j)].push_back(i);
        }
        return nbr;
    }
};

/// Conflicts among `subset` edges, witnessed inside the subgraph they span:
/// two subset edges conflict when they share an endpoint or some subset edge
/// joins an endpoint of one to an endpoint of the other.
inline ConflictGraph conflict_graph(const Graph& g, const std::vector<int>& subset) {
    ConflictGraph cg;
    std::vector<char> in_subset(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e : subset) {
        g.check_edge_id(e);
        if (in_subset[static_cast<std::size_t>(e)])
            throw input_error("conflict_graph: duplicate edge id " + std::to_string(e));
        in_subset[static_cast<std::size_t>(e)] = 1;
    }
    cg.edge_ids = subset;
    std::sort(cg.edge_ids.begin(), cg.edge_ids.end());

    auto joined_within = [&](std::pair<int, int> a, std::pair<int, int> b) {
        for (int p : {a.first, a.second})
            for (int q : {b.first, b.second})
                if (auto h = g.find_edge(p, q); h && in_subset[static_cast<std::size_t>(*h)])
                    return true;
        return false;
    };

    const int t = cg.size();
    for (int i = 0; i < t; ++i) {
        auto ea = g.edge(cg.edge_ids[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < t; ++j) {
            auto eb = g.edge(cg.edge_ids[static_cast<std::size_t>(j)]);
            bool share = ea.first == eb.first || ea.first == eb.second ||
                         ea.second == eb.first || ea.second == eb.second;
            if (share || joined_within(ea, eb))
                cg.conflicts.push_back({i, j});
        }
    }
    return cg;
}

inline ConflictGraph conflict_graph(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) all[static_cast<std::size_t>(e)] = e;
    return conflict_graph(g, all);
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw input_error("gen_cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

/// Cycle on vertices 0..n-1 plus a pendant vertex n+i hung off each cycle vertex i.
/// Edge ids: 0..n-1 the cycle edges (i, i+1 mod n), n..2n-1 the pendants (i, n+i).
inline Graph gen_cnplus(int n) {
    if (n < 3) throw input_error("gen_cnplus: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
    return Graph(2 * n, edges);
}

inline Graph gen_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
    return Graph(10, edges);
}

/// Random 3-regular simple graph via the pairing model with rejection.
/// Deterministic for a fixed seed; throws generation_error after 10000 failed attempts.
inline Graph gen_random_cubic(int n, int min_girth, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw input_error("gen_random_cubic: need even n >= 4");
    if (min_girth < 3) min_girth = 3;
    std::mt19937_64 rng(seed);
    const int retries = 10000;
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(3 * n));
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < 3; ++c) stubs.push_back(v);
        shuffle_vec(stubs, rng);
        std::set<std::pair<int, int>> used;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) { simple = false; break; }
            auto key = std::minmax(u, v);
            if (!used.insert({key.first, key.second}).second) simple = false;
        }
        if (!simple) continue;
        std::vector<std::pair<int, int>> edges(used.begin(), used.end());
        Graph g(n, edges);
        if (min_girth > 3) {
            auto gi = girth(g);
            if (!gi || *gi < min_girth) continue;
        }
        return g;
    }
    throw generation_error("gen_random_cubic: no graph with n=" + std::to_string(n) +
                           " girth>=" + std::to_string(min_girth) + " within retry budget");
}

/// Random simple graph with every edge weight deg(u)+deg(v) <= 6: greedy over a
/// shuffled pair list, accepting an edge only if all weights stay within bound.
inline Graph gen_random_weight6(int n, std::uint64_t seed) {
    if (n < 2) throw input_error("gen_random_weight6: need n >= 2");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pool.push_back({u, v});
    shuffle_vec(pool, rng);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pool) {
        int du = deg[static_cast<std::size_t>(u)] + 1;
        int dv = deg[static_cast<std::size_t>(v)] + 1;
        if (du + dv > 6) continue;
        bool ok = true;
        for (int w : nbrs[static_cast<std::size_t>(u)])
            if (du + deg[static_cast<std::size_t>(w)] > 6) { ok = false; break; }
        if (ok)
            for (int w : nbrs[static_cast<std::size_t>(v)])
                if (dv + deg[static_cast<std::size_t>(w)] > 6) { ok = false; break; }
        if (!ok) continue;
        edges.push_back({u, v});
        deg[static_cast<std::size_t>(u)] = du;
        deg[static_cast<std::size_t>(v)] = dv;
        nbrs[static_cast<std::size_t>(u)].push_back(v);
        nbrs[static_cast<std::size_t>(v)].push_back(u);
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
}

/// A subgraph H of a host graph, the edge set E0 touching it, and the conflict
/// data a precoloring of the rest must respect.
struct Configuration {
    Graph host;
    std::vector<int> deleted_vertices;                  // V(H), sorted
    ConflictGraph e0;                                   // conflicts inside G[E0]
    std::vector<std::vector<int>> external_neighbors;   // per E0 position: outside edges within distance 2
    std::vector<std::pair<int, int>> extra_conflicts;   // E0 position pairs seeing each other only via outside edges
    std::optional<bool> pure_cycle_pattern;             // when H induces a cycle: e0 matches the pendant-cycle pattern
};

inline Configuration induced_config(const Graph& g, const std::vector<int>& h_vertices) {
    if (h_vertices.empty()) throw input_error("induced_config: empty vertex set");
    std::vector<char> in_h(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : h_vertices) {
        g.check_vertex_id(v);
        if (in_h[static_cast<std::size_t>(v)])
            throw input_error("induced_config: duplicate vertex id " + std::to_string(v));
        in_h[static_cast<std::size_t>(v)] = 1;
    }

    Configuration cfg;
    cfg.host = g;
    cfg.deleted_vertices = h_vertices;
    std::sort(cfg.deleted_vertices.begin(), cfg.deleted_vertices.end());

    std::vector<int> e0_ids, outside_ids;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (in_h[static_cast<std::size_t>(u)] || in_h[static_cast<std::size_t>(v)])
            e0_ids.push_back(e);
        else
            outside_ids.push_back(e);
    }
    cfg.e0 = conflict_graph(g, e0_ids);

    const int t = cfg.e0.size();
    cfg.external_neighbors.assign(static_cast<std::size_t>(t), {});
    for (int i = 0; i < t; ++i)
        for (int f : outside_ids)
            if (sees(g, cfg.e0.edge_ids[static_cast<std::size_t>(i)], f))
                cfg.external_neighbors[static_cast<std::size_t>(i)].push_back(f);

    std::set<std::pair<int, int>> internal(cfg.e0.conflicts.begin(), cfg.e0.conflicts.end());
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (!internal.count({i, j}) &&
                sees(g, cfg.e0.edge_ids[static_cast<std::size_t>(i)], cfg.e0.edge_ids[static_cast<std::size_t>(j)]))
                cfg.extra_conflicts.push_back({i, j});

    // Pattern check: does H induce a cycle whose E0 conflicts match gen_cnplus?
    const int h = static_cast<int>(cfg.deleted_vertices.size());
    bool is_cycle = h >= 3;
    std::vector<std::vector<int>> h_nbrs;
    if (is_cycle) {
        for (int v : cfg.deleted_vertices) {
            std::vector<int> local;
            for (auto [w, e] : g.incident(v))
                if (in_h[static_cast<std::size_t>(w)]) local.push_back(w);
            if (local.size() != 2) { is_cycle = false; break; }
            std::sort(local.begin(), local.end());
            h_nbrs.push_back(local);
        }
    }
    if (is_cycle) {
        // walk from the smallest vertex toward its smaller neighbor
        std::vector<int> cyc{cfg.deleted_vertices.front()};
        std::set<int> visited{cyc.front()};
        auto nbrs_of = [&](int v) -> const std::vector<int>& {
            auto it = std::lower_bound(cfg.deleted_vertices.begin(), cfg.deleted_vertices.end(), v);
            return h_nbrs[static_cast<std::size_t>(it - cfg.deleted_vertices.begin())];
        };
        int cur = nbrs_of(cyc.front())[0], prev = cyc.front();
        while (cur != cyc.front() && !visited.count(cur)) {
            visited.insert(cur);
            cyc.push_back(cur);
            auto& nb = nbrs_of(cur);
            int nxt = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        }
        is_cycle = (cur == cyc.front() && static_cast<int>(cyc.size()) == h);
        if (is_cycle) {
            // map E0 positions onto the canonical pendant-cycle edge ids
            std::vector<int> pos_of(static_cast<std::size_t>(g.edge_count()), -1);
            for (int i = 0; i < t; ++i)
                pos_of[static_cast<std::size_t>(cfg.e0.edge_ids[static_cast<std::size_t>(i)])] = i;
            std::vector<int> canon(static_cast<std::size_t>(t), -1);  // position -> cnplus edge id
            bool pure = t == 2 * h;
            for (int i = 0; i < h && pure; ++i) {
                int u = cyc[static_cast<std::size_t>(i)], v = cyc[static_cast<std::size_t>((i + 1) % h)];
                auto ce = g.find_edge(u, v);
                canon[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(*ce)])] = i;
                std::vector<int> pendants;
                for (auto [w, e] : g.incident(u))
                    if (!in_h[static_cast<std::size_t>(w)]) pendants.push_back(e);
                if (pendants.size() != 1) { pure = false; break; }
                canon[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(pendants[0])])] = h + i;
            }
            if (pure) {
                ConflictGraph model = conflict_graph(gen_cnplus(h));
                std::set<std::pair<int, int>> expected(model.conflicts.begin(), model.conflicts.end());
                std::set<std::pair<int, int>> got;
                for (auto [i, j] : cfg.e0.conflicts) {
                    auto key = std::minmax(canon[static_cast<std::size_t>(i)], canon[static_cast<std::size_t>(j)]);
                    got.insert({key.first, key.second});
                }
                pure = (got == expected);
            }
            cfg.pure_cycle_pattern = pure;
        }
    }
    return cfg;
}

// --- text format ---------------------------------------------------------
// '#' lines are comments; header "p <n> <m>"; then m lines "e <u> <v>".

inline Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0, n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "p") {
            if (n >= 0) throw input_error("graph line " + std::to_string(lineno) + ": duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw input_error("graph line " + std::to_string(lineno) + ": bad header");
        } else if (tag == "e") {
            if (n < 0) throw input_error("graph line " + std::to_string(lineno) + ": edge before header");
            int u, v;
            if (!(ls >> u >> v))
                throw input_error("graph line " + std::to_string(lineno) + ": bad edge line");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw input_error("graph line " + std::to_string(lineno) + ": endpoint out of range");
            if (u == v)
                throw input_error("graph line " + std::to_string(lineno) + ": loop");
            edges.push_back({u, v});
        } else {
            throw input_error("graph line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        }
    }
    if (n < 0) throw input_error("graph: missing 'p' header");
    if (static_cast<int>(edges.size()) != m)
        throw input_error("graph: header declares " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
    return Graph(n, edges);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

} // namespace slec
