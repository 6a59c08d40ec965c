#pragma once

// Test-side oracles and fixtures. Each oracle takes an independent route from
// the library implementation it checks.

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "slec/coloring.hpp"
#include "slec/graph.hpp"
#include "slec/polynomial.hpp"

namespace support {

// 24-vertex cubic graph of girth 7 (LCF notation [12, 7, -7]^8).
inline slec::Graph mcgee() {
    const int jumps[3] = {12, 7, -7};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 24; ++i) edges.push_back({i, (i + 1) % 24});
    for (int i = 0; i < 24; ++i) {
        int j = ((i + jumps[i % 3]) % 24 + 24) % 24;
        if (i < j) edges.push_back({i, j});
    }
    return slec::build_graph(24, edges);
}

// Line graph: one vertex per edge of g, joined when the edges share an endpoint.
inline slec::Graph line_graph(const slec::Graph& g) {
    std::vector<std::pair<int, int>> edges;
    const int m = g.edge_count();
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [a, b] = g.edge(e);
            auto [c, d] = g.edge(f);
            if (a == c || a == d || b == c || b == d) edges.push_back({e, f});
        }
    return slec::build_graph(m, edges);
}

inline std::vector<int> bfs_dist(const slec::Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> q{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto [v, e] : g.incident(u))
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

// Distance-two test via the line graph, the defining formulation.
inline bool sees_oracle(const slec::Graph& g, int e, int f) {
    slec::Graph lg = line_graph(g);
    auto dist = bfs_dist(lg, e);
    int d = dist[static_cast<std::size_t>(f)];
    return d == 1 || d == 2;
}

// Girth by cycle-space enumeration over edges: shortest closed walk through
// each edge, taking the path in g minus that edge.
inline std::optional<int> girth_oracle(const slec::Graph& g) {
    int best = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
        std::deque<int> q{a};
        dist[static_cast<std::size_t>(a)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [v, f] : g.incident(u)) {
                if (f == e || dist[static_cast<std::size_t>(v)] >= 0) continue;
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push_back(v);
            }
        }
        int d = dist[static_cast<std::size_t>(b)];
        if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

// Exhaustive decision of strong k-colorability: tries all k^m assignments.
inline bool exhaustive_strong_k(const slec::Graph& g, int k) {
    const int m = g.edge_count();
    if (m == 0) return true;
    if (k == 0) return false;
    slec::ConflictGraph cg = slec::conflict_graph(g);
    std::vector<int> colors(static_cast<std::size_t>(m), 1);
    while (true) {
        bool ok = true;
        for (auto [i, j] : cg.conflicts)
            if (colors[static_cast<std::size_t>(cg.edge_ids[static_cast<std::size_t>(i)])] ==
                colors[static_cast<std::size_t>(cg.edge_ids[static_cast<std::size_t>(j)])]) {
                ok = false;
                break;
            }
        if (ok) return true;
        int pos = m - 1;
        while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == k) {
            colors[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) return false;
        ++colors[static_cast<std::size_t>(pos)];
    }
}

// Random simple graph on n vertices with m edges (exactly, if possible).
inline slec::Graph random_graph(int n, int m, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pool.push_back({u, v});
    slec::shuffle_vec(pool, rng);
    if (static_cast<int>(pool.size()) > m) pool.resize(static_cast<std::size_t>(m));
    return slec::build_graph(n, pool);
}

// Naive expansion: generic polynomial multiplication, no caps, no ordering.
inline slec::Polynomial brute_expand(const slec::FactorProduct& fp) {
    slec::Polynomial acc = slec::Polynomial::constant(fp.num_vars, 1);
    for (auto [a, b] : fp.factors)
        acc = acc * (slec::Polynomial::variable(fp.num_vars, a) - slec::Polynomial::variable(fp.num_vars, b));
    return acc;
}

inline slec::FactorProduct random_product(int nv, int nf, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> fs;
    for (int i = 0; i < nf; ++i) {
        int a = slec::rand_below(rng, nv), b;
        do { b = slec::rand_below(rng, nv); } while (b == a);
        fs.push_back({a, b});
    }
    return slec::make_factor_product(nv, fs);
}

} // namespace support
