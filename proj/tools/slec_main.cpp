#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slec/campaign.hpp"
#include "slec/certifier.hpp"
#include "slec/coloring.hpp"
#include "slec/graph.hpp"
#include "slec/polynomial.hpp"

namespace {

constexpr int kOk = 0;        // command succeeded / property holds
constexpr int kNegative = 1;  // well-formed run with a negative answer
constexpr int kBadInput = 2;  // malformed input or parameters

slec::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw slec::input_error("cannot open graph file: " + path);
    return slec::read_graph(in);
}

void emit(std::ostream& out, const std::string& name, const std::string& value) {
    out << "RESULT " << name << " " << value << "\n";
}

void print_claim_report(const slec::ClaimReport& r) {
    for (const auto& [name, ok] : r.checks)
        std::cout << "CHECK " << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    emit(std::cout, "claim", std::to_string(r.claim));
    if (r.claim == 2) emit(std::cout, "n", std::to_string(r.n));
    emit(std::cout, "method", r.method);
    emit(std::cout, "eta", r.value.str());
    emit(std::cout, "expected", r.expected.str());
    emit(std::cout, "elapsed_s", std::to_string(r.seconds));
    emit(std::cout, "verdict", r.passed ? "PASS" : "FAIL");
}

int cmd_gen(const std::string& kind, int n, int girth, std::uint64_t seed, const std::string& out_path) {
    slec::Graph g;
    if (kind == "cnplus") g = slec::gen_cnplus(n);
    else if (kind == "cycle") g = slec::gen_cycle(n);
    else if (kind == "petersen") g = slec::gen_petersen();
    else if (kind == "cubic") g = slec::gen_random_cubic(n, girth, seed);
    else if (kind == "weight6") g = slec::gen_random_weight6(n, seed);
    else throw slec::input_error("gen: unknown kind '" + kind + "'");
    if (out_path.empty()) {
        slec::write_graph(std::cout, g);
    } else {
        std::ofstream out(out_path);
        if (!out) throw slec::input_error("cannot open output file: " + out_path);
        slec::write_graph(out, g);
    }
    return kOk;
}

int cmd_color(const std::string& graph_path, int k, const std::string& lists_path,
              const std::string& out_path) {
    slec::Graph g = load_graph(graph_path);
    std::optional<slec::StrongColoring> sol;
    if (!lists_path.empty()) {
        std::ifstream in(lists_path);
        if (!in) throw slec::input_error("cannot open lists file: " + lists_path);
        slec::ListAssignment l = slec::read_lists(in, g.edge_count());
        sol = slec::solve_strong_list(g, l);
    } else if (k >= 0) {
        sol = slec::solve_strong_k(g, k);
    } else {
        throw slec::input_error("color: need --k or --lists");
    }
    if (!sol) {
        std::cout << "NONE\n";
        return kNegative;
    }
    if (out_path.empty()) {
        slec::write_coloring(std::cout, *sol);
    } else {
        std::ofstream out(out_path);
        if (!out) throw slec::input_error("cannot open output file: " + out_path);
        slec::write_coloring(out, *sol);
    }
    return kOk;
}

int cmd_index(const std::string& graph_path) {
    slec::Graph g = load_graph(graph_path);
    emit(std::cout, "strong_chromatic_index", std::to_string(slec::strong_chromatic_index(g)));
    return kOk;
}

int cmd_certify(const std::string& cert_path, int soundness, std::uint64_t seed, int palette) {
    std::ifstream in(cert_path);
    if (!in) throw slec::input_error("cannot open certificate file: " + cert_path);
    slec::Certificate cert = slec::read_certificate(in);
    slec::CertificateCheck chk = slec::check_certificate(cert);
    emit(std::cout, "certificate_ok", chk.ok ? "true" : "false");
    if (!chk.ok) {
        std::cout << "REASON " << chk.message << "\n";
        emit(std::cout, "verdict", "FAIL");
        return kNegative;
    }
    emit(std::cout, "eta", chk.recomputed.str());
    emit(std::cout, "max_form_satisfied", chk.max_form_ok ? "true" : "false");
    bool ok = true;
    if (soundness > 0) {
        int pal = palette > 0 ? palette : cert.palette;
        slec::SoundnessReport rep = slec::soundness_trial(cert, seed, soundness, pal);
        emit(std::cout, "trials", std::to_string(rep.trials));
        emit(std::cout, "successes", std::to_string(rep.successes));
        emit(std::cout, "failures", std::to_string(rep.failures));
        ok = rep.failures == 0;
    }
    emit(std::cout, "verdict", ok ? "PASS" : "FAIL");
    return ok ? kOk : kNegative;
}

int cmd_verify_paper(int claim, int n, const std::string& method, const std::string& cert_out) {
    auto write_cert = [&](const slec::Certificate& c) {
        std::ofstream out(cert_out);
        if (!out) throw slec::input_error("cannot open output file: " + cert_out);
        slec::write_certificate(out, c);
    };
    if (claim == 1) {
        slec::ClaimReport r = slec::verify_claim1();
        print_claim_report(r);
        if (!cert_out.empty()) write_cert(slec::claim1_certificate());
        return r.passed ? kOk : kNegative;
    }
    if (claim != 2) throw slec::input_error("verify-paper: claim must be 1 or 2");

    if (n == 0) {
        // full sweep over the staged range
        if (method == "direct") throw slec::input_error("verify-paper: direct method needs --n");
        bool all = true;
        for (int i = 8; i <= 20; ++i) {
            slec::ClaimReport r = slec::verify_claim2_staged(i);
            print_claim_report(r);
            all = all && r.passed;
        }
        emit(std::cout, "verdict", all ? "PASS" : "FAIL");
        if (!cert_out.empty()) throw slec::input_error("verify-paper: certificate output needs --n");
        return all ? kOk : kNegative;
    }

    std::string m = method;
    if (m.empty()) m = (n == 7) ? "direct" : "staged";
    slec::ClaimReport r;
    if (m == "direct") r = slec::verify_claim2_direct(n);
    else if (m == "staged") r = slec::verify_claim2_staged(n);
    else throw slec::input_error("verify-paper: method must be direct or staged");
    print_claim_report(r);
    if (!cert_out.empty()) write_cert(slec::claim2_certificate(n));
    return r.passed ? kOk : kNegative;
}

int cmd_campaign(const std::string& kind, int count, int size, int girth, std::uint64_t seed,
                 int palette, int list_size, const std::string& prefix) {
    slec::CampaignOptions opt;
    if (kind == "cubic") opt.kind = slec::CampaignKind::cubic;
    else if (kind == "weight6") opt.kind = slec::CampaignKind::weight6;
    else throw slec::input_error("campaign: kind must be cubic or weight6");
    opt.count = count;
    opt.size = size;
    opt.min_girth = girth;
    opt.seed = seed;
    opt.palette = palette;
    opt.list_size = list_size;
    opt.reproducer_prefix = prefix;

    slec::CampaignResult res = slec::run_campaign(opt);
    emit(std::cout, "instances", std::to_string(res.count));
    emit(std::cout, "successes", std::to_string(res.successes));
    emit(std::cout, "ratio", std::to_string(res.successes) + "/" + std::to_string(res.count));
    for (std::size_t i = 0; i < res.failed.size(); ++i) {
        std::cout << "FAILURE instance " << res.failed[i] << " reproducer "
                  << res.reproducers[2 * i] << " " << res.reproducers[2 * i + 1] << "\n";
    }
    bool all = res.successes == res.count;
    emit(std::cout, "verdict", all ? "PASS" : "FAIL");
    return all ? kOk : kNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong list edge coloring toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph");
    std::string gen_kind;
    int gen_n = 0, gen_girth = 3;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "cnplus|cycle|petersen|cubic|weight6")->required();
    gen->add_option("--n", gen_n, "vertex or cycle-length parameter");
    gen->add_option("--girth", gen_girth, "minimum girth (cubic)");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");

    // color
    auto* color = app.add_subcommand("color", "strong edge coloring of a graph");
    std::string color_graph, color_lists, color_out;
    int color_k = -1;
    color->add_option("graph", color_graph, "graph file")->required();
    color->add_option("--k", color_k, "uniform palette 1..k");
    color->add_option("--lists", color_lists, "per-edge list file");
    color->add_option("-o,--out", color_out, "output file (default stdout)");

    // index
    auto* index = app.add_subcommand("index", "strong chromatic index of a graph");
    std::string index_graph;
    index->add_option("graph", index_graph, "graph file")->required();

    // certify
    auto* certify = app.add_subcommand("certify", "check a colorability certificate");
    std::string cert_path;
    int cert_soundness = 0, cert_palette = 0;
    std::uint64_t cert_seed = 0;
    certify->add_option("certificate", cert_path, "certificate file")->required();
    certify->add_option("--soundness", cert_soundness, "number of random list trials");
    certify->add_option("--seed", cert_seed, "trial seed");
    certify->add_option("--palette", cert_palette, "trial palette size (default: certificate k)");

    // verify-paper
    auto* vp = app.add_subcommand("verify-paper", "recompute the certified coefficients");
    int vp_claim = 0, vp_n = 0;
    std::string vp_method, vp_cert_out;
    vp->add_option("--claim", vp_claim, "1 or 2")->required();
    vp->add_option("--n", vp_n, "cycle length (claim 2; omit to sweep 8..20)");
    vp->add_option("--method", vp_method, "direct|staged (claim 2)");
    vp->add_option("--write-certificate", vp_cert_out, "also write the certificate file");

    // campaign
    auto* camp = app.add_subcommand("campaign", "batch random list-coloring runs");
    std::string camp_kind, camp_prefix = "campaign_failure";
    int camp_count = 0, camp_size = 0, camp_girth = 3, camp_palette = 30, camp_list = 10;
    std::uint64_t camp_seed = 0;
    camp->add_option("kind", camp_kind, "cubic|weight6")->required();
    camp->add_option("--count", camp_count, "instance count")->required();
    camp->add_option("--size", camp_size, "vertices per instance")->required();
    camp->add_option("--girth", camp_girth, "minimum girth (cubic)");
    camp->add_option("--seed", camp_seed, "master seed");
    camp->add_option("--palette", camp_palette, "colors drawn from 1..palette");
    camp->add_option("--list-size", camp_list, "list size per edge");
    camp->add_option("--prefix", camp_prefix, "reproducer file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_n, gen_girth, gen_seed, gen_out);
        if (color->parsed()) return cmd_color(color_graph, color_k, color_lists, color_out);
        if (index->parsed()) return cmd_index(index_graph);
        if (certify->parsed()) return cmd_certify(cert_path, cert_soundness, cert_seed, cert_palette);
        if (vp->parsed()) return cmd_verify_paper(vp_claim, vp_n, vp_method, vp_cert_out);
        if (camp->parsed())
            return cmd_campaign(camp_kind, camp_count, camp_size, camp_girth, camp_seed,
                                camp_palette, camp_list, camp_prefix);
    } catch (const slec::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const slec::generation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
