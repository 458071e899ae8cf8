#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "profile_parse.hpp"

namespace {

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("params", "expected key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("SPS_NODE_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            // fall through to the built-in default
        }
    }
    return sps::SearchLimits{}.node_budget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"set pair system toolkit"};
    app.require_subcommand(1);
    app.footer(std::string(sps::tools::kProfileHelp) +
               "\nenvironment: SPS_NODE_BUDGET overrides the default search node budget");

    // construct
    std::string c_name, c_out = "out.json";
    std::vector<std::string> c_params;
    auto* construct = app.add_subcommand("construct", "generate a named system");
    construct->add_option("name", c_name,
                          "standard | cyclic | product | w22_power | star_extremal_2n | "
                          "double_star | c1 | c2 | c3 | final1 | final2 | final3 | "
                          "catalog:<entry>")
        ->required();
    construct->add_option("params", c_params, "key=value construction parameters");
    construct->add_option("-o,--out", c_out, "output path")->capture_default_str();

    // verify
    std::string v_in, v_profile = "*,*,*,*,*";
    auto* verify = app.add_subcommand("verify", "check a document against a profile");
    verify->add_option("input", v_in, "system document")->required();
    verify->add_option("-p,--profile", v_profile, sps::tools::kProfileHelp)
        ->capture_default_str();

    // dualize
    std::string d_in, d_kind = "biclique", d_out = "partition.json";
    auto* dualize = app.add_subcommand("dualize", "emit the edge-partition dual");
    dualize->add_option("input", d_in, "system document")->required();
    dualize->add_option("-k,--kind", d_kind, "biclique | clique")->capture_default_str();
    dualize->add_option("-o,--out", d_out, "output path")->capture_default_str();

    // bounds
    std::string b_profile;
    unsigned b_n = 0;
    auto* bounds = app.add_subcommand("bounds", "report the best known bound");
    bounds->add_option("-p,--profile", b_profile, sps::tools::kProfileHelp)->required();
    bounds->add_option("-n", b_n, "uniformity parameter")->required();

    // search
    sps::tools::SearchArgs s_args;
    s_args.limits.node_budget = default_node_budget();
    std::size_t s_m = 0;
    std::uint64_t s_time_ms = 0;
    bool s_expect_sat = false, s_expect_unsat = false, s_single = false;
    auto* search = app.add_subcommand("search", "exhaustive search over a profile");
    search->add_option("-p,--profile", s_args.profile_text, sps::tools::kProfileHelp)
        ->required();
    auto* m_opt = search->add_option("-m", s_m, "decide this size instead of maximizing");
    search->add_option("--max-vertices", s_args.limits.max_vertices, "ground set cap")
        ->capture_default_str();
    search->add_option("--node-budget", s_args.limits.node_budget, "search node budget")
        ->capture_default_str();
    auto* t_opt = search->add_option("--time-budget-ms", s_time_ms, "wall clock budget");
    search->add_flag("--expect-sat", s_expect_sat, "exit 1 unless SAT");
    search->add_flag("--expect-unsat", s_expect_unsat, "exit 1 unless UNSAT");
    search->add_flag("--single-thread", s_single,
                     "force deterministic single-threaded exploration (the default)");
    search->add_option("--witness-out", s_args.witness_out, "write the SAT witness here");
    search->add_flag("!--no-degree-prune", s_args.options.degree_prune,
                     "disable the linear-side degree cutoff");
    search->add_flag("!--no-binomial-cap", s_args.options.bollobas_cap,
                     "disable the binomial size cap");
    search->add_flag("!--no-ground-cap", s_args.options.ground_cap,
                     "disable the 1-cross minimum-ground cutoff");

    CLI11_PARSE(app, argc, argv);

    if (construct->parsed()) {
        try {
            return sps::tools::cmd_construct(c_name, parse_params(c_params), c_out);
        } catch (const CLI::ValidationError& e) {
            std::cerr << "construct: " << e.what() << "\n";
            return sps::tools::kExitUsage;
        }
    }
    if (verify->parsed()) return sps::tools::cmd_verify(v_in, v_profile);
    if (dualize->parsed()) return sps::tools::cmd_dualize(d_in, d_kind, d_out);
    if (bounds->parsed()) return sps::tools::cmd_bounds(b_profile, b_n);
    if (search->parsed()) {
        if (*m_opt) s_args.m = s_m;
        if (*t_opt) s_args.limits.time_budget = std::chrono::milliseconds(s_time_ms);
        if (s_expect_sat) s_args.expect_sat = true;
        if (s_expect_unsat) s_args.expect_sat = false;
        (void)s_single;   // exploration is single-threaded already
        return sps::tools::cmd_search(s_args);
    }
    return sps::tools::kExitUsage;
}
