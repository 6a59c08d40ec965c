#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace slec {

/// One color list per edge id. Lists are kept sorted and duplicate free.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    static ListAssignment uniform(int edge_count, int k) {
        ListAssignment l;
        l.lists.assign(static_cast<std::size_t>(edge_count), {});
        for (auto& lst : l.lists)
            for (int c = 1; c <= k; ++c) lst.push_back(c);
        return l;
    }

    void normalize() {
        for (auto& lst : lists) {
            std::sort(lst.begin(), lst.end());
            lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        }
    }
};

/// Per-edge colors; disengaged entries are uncolored.
struct StrongColoring {
    std::vector<std::optional<int>> colors;

    static StrongColoring blank(int edge_count) {
        StrongColoring c;
        c.colors.assign(static_cast<std::size_t>(edge_count), std::nullopt);
        return c;
    }

    bool total() const {
        for (const auto& c : colors)
            if (!c) return false;
        return true;
    }
};

struct Violation {
    enum class Kind { conflict, list };
    Kind kind;
    int edge_a;
    int edge_b;  // -1 for list violations
    int color;
};

/// All strong-coloring violations of a total coloring: pairs of edges within
/// distance two sharing a color, plus (if lists given) colors outside lists.
inline std::vector<Violation> verify(const Graph& g, const StrongColoring& c,
                                     const ListAssignment* l = nullptr) {
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw input_error("verify: coloring size does not match edge count");
    if (!c.total()) throw input_error("verify: coloring is not total");
    if (l && static_cast<int>(l->lists.size()) != g.edge_count())
        throw input_error("verify: list assignment size does not match edge count");

    std::vector<Violation> out;
    ConflictGraph cg = conflict_graph(g);
    for (auto [i, j] : cg.conflicts) {
        int e = cg.edge_ids[static_cast<std::size_t>(i)];
        int f = cg.edge_ids[static_cast<std::size_t>(j)];
        if (*c.colors[static_cast<std::size_t>(e)] == *c.colors[static_cast<std::size_t>(f)])
            out.push_back({Violation::Kind::conflict, e, f, *c.colors[static_cast<std::size_t>(e)]});
    }
    if (l) {
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& lst = l->lists[static_cast<std::size_t>(e)];
            if (!std::count(lst.begin(), lst.end(), *c.colors[static_cast<std::size_t>(e)]))
                out.push_back({Violation::Kind::list, e, -1, *c.colors[static_cast<std::size_t>(e)]});
        }
    }
    return out;
}

inline std::vector<Violation> verify(const Graph& g, const StrongColoring& c, const ListAssignment& l) {
    return verify(g, c, &l);
}

/// Complete backtracking list coloring of an abstract conflict structure.
/// Deterministic: picks the item with fewest remaining colors (lowest index on
/// ties) and tries its colors in ascending order.
inline std::optional<std::vector<int>> color_conflicts(int item_count,
                                                       const std::vector<std::vector<int>>& neighbors,
                                                       const std::vector<std::vector<int>>& lists) {
    std::vector<int> assigned(static_cast<std::size_t>(item_count), 0);
    std::vector<char> done(static_cast<std::size_t>(item_count), 0);

    auto options = [&](int i) {
        std::vector<int> out;
        for (int c : lists[static_cast<std::size_t>(i)]) {
            bool blocked = false;
            for (int j : neighbors[static_cast<std::size_t>(i)])
                if (done[static_cast<std::size_t>(j)] && assigned[static_cast<std::size_t>(j)] == c) {
                    blocked = true;
                    break;
                }
            if (!blocked) out.push_back(c);
        }
        return out;
    };

    auto solve = [&](auto&& self, int remaining) -> bool {
        if (remaining == 0) return true;
        int pick = -1;
        std::size_t best = SIZE_MAX;
        std::vector<int> pick_options;
        for (int i = 0; i < item_count; ++i) {
            if (done[static_cast<std::size_t>(i)]) continue;
            auto opts = options(i);
            if (opts.size() < best) {
                best = opts.size();
                pick = i;
                pick_options = std::move(opts);
                if (best == 0) break;
            }
        }
        for (int c : pick_options) {
            assigned[static_cast<std::size_t>(pick)] = c;
            done[static_cast<std::size_t>(pick)] = 1;
            if (self(self, remaining - 1)) return true;
            done[static_cast<std::size_t>(pick)] = 0;
        }
        return false;
    };

    if (!solve(solve, item_count)) return std::nullopt;
    return assigned;
}

/// Strong coloring from the uniform palette {1..k}, or nothing if none exists.
inline std::optional<StrongColoring> solve_strong_k(const Graph& g, int k) {
    if (k < 0) throw input_error("solve_strong_k: negative palette size");
    const int m = g.edge_count();
    if (m == 0) return StrongColoring::blank(0);
    ListAssignment l = ListAssignment::uniform(m, k);
    if (k >= 1) l.lists[0] = {1};  // any solution can be recolored so edge 0 gets color 1
    ConflictGraph cg = conflict_graph(g);
    auto sol = color_conflicts(m, cg.adjacency(), l.lists);
    if (!sol) return std::nullopt;
    StrongColoring c = StrongColoring::blank(m);
    for (int e = 0; e < m; ++e) c.colors[static_cast<std::size_t>(e)] = (*sol)[static_cast<std::size_t>(e)];
    return c;
}

inline std::optional<StrongColoring> solve_strong_list(const Graph& g, const ListAssignment& l) {
    const int m = g.edge_count();
    if (static_cast<int>(l.lists.size()) != m)
        throw input_error("solve_strong_list: list assignment must cover every edge");
    ListAssignment norm = l;
    norm.normalize();
    ConflictGraph cg = conflict_graph(g);
    auto sol = color_conflicts(m, cg.adjacency(), norm.lists);
    if (!sol) return std::nullopt;
    StrongColoring c = StrongColoring::blank(m);
    for (int e = 0; e < m; ++e) c.colors[static_cast<std::size_t>(e)] = (*sol)[static_cast<std::size_t>(e)];
    return c;
}

/// Smallest k admitting a strong coloring; at most the edge count.
inline int strong_chromatic_index(const Graph& g) {
    for (int k = 0;; ++k)
        if (solve_strong_k(g, k)) return k;
}

/// Per-E0-edge color availability under a partial coloring of the outside edges.
struct AvailabilityReport {
    std::vector<std::vector<int>> forbidden;  // colors on outside edges within distance 2
    std::vector<std::vector<int>> available;  // list minus forbidden
    std::vector<int> size_exact;              // |available|
    std::vector<int> size_bound;              // |list| - |forbidden|, the a-priori lower bound
};

namespace detail {
inline void check_partial_shape(const Graph& g, const Configuration& cfg,
                                const StrongColoring& partial, const ListAssignment& l) {
    const int m = g.edge_count();
    if (static_cast<int>(partial.colors.size()) != m)
        throw input_error("partial coloring size does not match edge count");
    if (static_cast<int>(l.lists.size()) != m)
        throw input_error("list assignment size does not match edge count");
    std::vector<char> in_e0(static_cast<std::size_t>(m), 0);
    for (int e : cfg.e0.edge_ids) in_e0[static_cast<std::size_t>(e)] = 1;
    for (int e = 0; e < m; ++e) {
        bool colored = partial.colors[static_cast<std::size_t>(e)].has_value();
        if (in_e0[static_cast<std::size_t>(e)] && colored)
            throw input_error("partial coloring assigns E0 edge " + std::to_string(e));
        if (!in_e0[static_cast<std::size_t>(e)] && !colored)
            throw input_error("partial coloring misses outside edge " + std::to_string(e));
    }
}
} // namespace detail

inline AvailabilityReport availability(const Graph& g, const Configuration& cfg,
                                       const StrongColoring& partial, const ListAssignment& l) {
    detail::check_partial_shape(g, cfg, partial, l);
    ListAssignment norm = l;
    norm.normalize();
    const int t = cfg.e0.size();
    AvailabilityReport rep;
    rep.forbidden.resize(static_cast<std::size_t>(t));
    rep.available.resize(static_cast<std::size_t>(t));
    rep.size_exact.resize(static_cast<std::size_t>(t));
    rep.size_bound.resize(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        std::set<int> forb;
        for (int f : cfg.external_neighbors[static_cast<std::size_t>(i)])
            forb.insert(*partial.colors[static_cast<std::size_t>(f)]);
        const auto& lst = norm.lists[static_cast<std::size_t>(cfg.e0.edge_ids[static_cast<std::size_t>(i)])];
        std::vector<int> avail;
        for (int c : lst)
            if (!forb.count(c)) avail.push_back(c);
        rep.forbidden[static_cast<std::size_t>(i)] = {forb.begin(), forb.end()};
        rep.available[static_cast<std::size_t>(i)] = avail;
        rep.size_exact[static_cast<std::size_t>(i)] = static_cast<int>(avail.size());
        rep.size_bound[static_cast<std::size_t>(i)] = static_cast<int>(lst.size()) - static_cast<int>(forb.size());
    }
    return rep;
}

/// Completes a partial coloring of the outside edges over E0, or nothing if no
/// completion exists. The completion respects both in-G[E0] conflicts and the
/// E0 pairs seeing each other only through outside edges, so any returned
/// coloring passes verify on the whole graph.
inline std::optional<StrongColoring> extend_partial(const Graph& g, const Configuration& cfg,
                                                    const StrongColoring& partial,
                                                    const ListAssignment& l) {
    AvailabilityReport rep = availability(g, cfg, partial, l);

    // a partial already in conflict on the outside cannot be completed
    const int m = g.edge_count();
    std::vector<char> in_e0(static_cast<std::size_t>(m), 0);
    for (int e : cfg.e0.edge_ids) in_e0[static_cast<std::size_t>(e)] = 1;
    std::vector<int> outside;
    for (int e = 0; e < m; ++e)
        if (!in_e0[static_cast<std::size_t>(e)]) outside.push_back(e);
    for (std::size_t a = 0; a < outside.size(); ++a)
        for (std::size_t b = a + 1; b < outside.size(); ++b)
            if (*partial.colors[static_cast<std::size_t>(outside[a])] ==
                    *partial.colors[static_cast<std::size_t>(outside[b])] &&
                sees(g, outside[a], outside[b]))
                return std::nullopt;

    const int t = cfg.e0.size();
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(t));
    auto link = [&](std::pair<int, int> pr) {
        nbr[static_cast<std::size_t>(pr.first)].push_back(pr.second);
        nbr[static_cast<std::size_t>(pr.second)].push_back(pr.first);
    };
    for (auto pr : cfg.e0.conflicts) link(pr);
    for (auto pr : cfg.extra_conflicts) link(pr);

    auto sol = color_conflicts(t, nbr, rep.available);
    if (!sol) return std::nullopt;
    StrongColoring full = partial;
    for (int i = 0; i < t; ++i)
        full.colors[static_cast<std::size_t>(cfg.e0.edge_ids[static_cast<std::size_t>(i)])] =
            (*sol)[static_cast<std::size_t>(i)];
    return full;
}

// --- text formats ---------------------------------------------------------
// lists:    "l <edge_id> <c1> <c2> ..." with every edge appearing exactly once
// coloring: "c <edge_id> <color>"

inline ListAssignment read_lists(std::istream& in, int edge_count) {
    ListAssignment l;
    l.lists.assign(static_cast<std::size_t>(edge_count), {});
    std::vector<char> seen(static_cast<std::size_t>(edge_count), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag != "l")
            throw input_error("lists line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        int e;
        if (!(ls >> e) || e < 0 || e >= edge_count)
            throw input_error("lists line " + std::to_string(lineno) + ": bad edge id");
        if (seen[static_cast<std::size_t>(e)])
            throw input_error("lists line " + std::to_string(lineno) + ": duplicate edge id " + std::to_string(e));
        seen[static_cast<std::size_t>(e)] = 1;
        int c;
        while (ls >> c) l.lists[static_cast<std::size_t>(e)].push_back(c);
        if (!ls.eof())
            throw input_error("lists line " + std::to_string(lineno) + ": bad color token");
    }
    for (int e = 0; e < edge_count; ++e)
        if (!seen[static_cast<std::size_t>(e)])
            throw input_error("lists: no list for edge " + std::to_string(e));
    l.normalize();
    return l;
}

inline void write_lists(std::ostream& out, const ListAssignment& l) {
    for (std::size_t e = 0; e < l.lists.size(); ++e) {
        out << "l " << e;
        for (int c : l.lists[e]) out << " " << c;
        out << "\n";
    }
}

inline StrongColoring read_coloring(std::istream& in, int edge_count) {
    StrongColoring c = StrongColoring::blank(edge_count);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag != "c")
            throw input_error("coloring line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
        int e, col;
        if (!(ls >> e >> col) || e < 0 || e >= edge_count)
            throw input_error("coloring line " + std::to_string(lineno) + ": bad entry");
        if (c.colors[static_cast<std::size_t>(e)])
            throw input_error("coloring line " + std::to_string(lineno) + ": duplicate edge id");
        c.colors[static_cast<std::size_t>(e)] = col;
    }
    return c;
}

inline void write_coloring(std::ostream& out, const StrongColoring& c) {
    for (std::size_t e = 0; e < c.colors.size(); ++e)
        if (c.colors[e]) out << "c " << e << " " << *c.colors[e] << "\n";
}

} // namespace slec
