// unitary: conjugacy classes and character tables of U(n, F_{q^2}).

#include <iostream>

#include "CLI11.hpp"
#include "unitary/cli.hpp"

namespace {

void add_common(CLI::App* sub, unitary::cli::RunConfig& cfg, std::string& format) {
    sub->add_option("--n", cfg.n, "matrix size")->capture_default_str();
    sub->add_option("--q", cfg.q, "field parameter (prime power)")->capture_default_str();
    sub->add_option("--m", cfg.m, "size for decompositions and sums (default: n)");
    sub->add_option("--r", cfg.r, "symplectic rank for sp-induction (default: m/2)");
    sub->add_option("--format", format, "json, csv or pretty")->capture_default_str();
    sub->add_flag("--allow-even-q", cfg.allow_even_q, "compute the conjectural even-q symplectic decomposition");
    sub->add_option("--max-group-order", cfg.max_group_order, "brute-force budget")->capture_default_str();
    sub->add_option("--parallel", cfg.parallel, "worker threads for tables")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace unitary::cli;
    RunConfig cfg;
    std::string format = "json";
    CLI::App app{"Exact conjugacy classes and character tables of finite unitary groups"};
    app.require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const auto& name : commands()) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, cfg, format);
        if (name == "decompose" || name == "verify") sub->add_option("target", cfg.target, "what to decompose or verify")->required();
        subs.emplace_back(name, sub);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        detail::error_json(std::cerr, "invalid_config", e.what());
        return 2;
    }
    for (const auto& [name, sub] : subs)
        if (sub->parsed()) cfg.command = name;
    try {
        cfg.format = parse_format(format);
    } catch (const ConfigError& e) {
        detail::error_json(std::cerr, "invalid_config", e.what());
        return 2;
    }
    return run(cfg, std::cout, std::cerr);
}
