#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace slec {

enum class CampaignKind { cubic, weight6 };

struct CampaignResult {
    int count = 0;
    int successes = 0;
    std::vector<int> failed;               // instance indices
    std::vector<std::string> reproducers;  // files written for failed instances
};

struct CampaignOptions {
    CampaignKind kind = CampaignKind::cubic;
    int count = 0;
    int size = 0;          // vertex count per instance
    int min_girth = 3;     // cubic instances only
    std::uint64_t seed = 0;
    int palette = 30;      // colors drawn from 1..palette
    int list_size = 10;
    std::string reproducer_prefix = "campaign_failure";
};

/// Seeded batch: generate a graph per instance, draw random lists of the given
/// size, solve, and verify. Failures are written out as graph + list files.
inline CampaignResult run_campaign(const CampaignOptions& opt) {
    if (opt.count < 1) throw input_error("campaign: instance count must be positive");
    if (opt.list_size < 1) throw input_error("campaign: list size must be positive");
    if (opt.palette < opt.list_size) throw input_error("campaign: palette smaller than list size");
    if (opt.kind == CampaignKind::cubic && (opt.size < 4 || opt.size % 2 != 0))
        throw input_error("campaign: cubic instances need even size >= 4");
    if (opt.kind == CampaignKind::weight6 && opt.size < 2)
        throw input_error("campaign: weight6 instances need size >= 2");

    CampaignResult res;
    res.count = opt.count;
    for (int i = 0; i < opt.count; ++i) {
        std::uint64_t iseed = mix_seed(opt.seed, static_cast<std::uint64_t>(i));
        Graph g = (opt.kind == CampaignKind::cubic)
                      ? gen_random_cubic(opt.size, opt.min_girth, iseed)
                      : gen_random_weight6(opt.size, iseed);
        std::mt19937_64 rng(mix_seed(iseed, 0x11575ULL));
        ListAssignment lists;
        lists.lists.resize(static_cast<std::size_t>(g.edge_count()));
        for (int e = 0; e < g.edge_count(); ++e)
            lists.lists[static_cast<std::size_t>(e)] = sample_distinct(rng, opt.list_size, 1, opt.palette);

        auto sol = solve_strong_list(g, lists);
        bool ok = sol.has_value() && verify(g, *sol, lists).empty();
        if (ok) {
            ++res.successes;
            continue;
        }
        res.failed.push_back(i);
        std::string gpath = opt.reproducer_prefix + "_" + std::to_string(i) + ".graph";
        std::string lpath = opt.reproducer_prefix + "_" + std::to_string(i) + ".lists";
        std::ofstream gout(gpath), lout(lpath);
        write_graph(gout, g);
        write_lists(lout, lists);
        res.reproducers.push_back(gpath);
        res.reproducers.push_back(lpath);
    }
    return res;
}

} // namespace slec
