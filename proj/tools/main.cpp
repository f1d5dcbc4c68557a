// Command-line front end: solve the disclosure-game equilibrium, dump the
// interim welfare-gain curves, sweep the sender bias, or run the Monte Carlo
// cross-check. Exit codes: 0 ok, 1 usage/config error, 2 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>

#include "pubcomm/commands.hpp"
#include "pubcomm/errors.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::optional<long long> seed;
    std::optional<int> threads;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "run configuration file")->required();
    cmd->add_option("--out", flags.out_path, "output path (overrides [output] path)");
    cmd->add_option("--seed", flags.seed, "RNG seed (overrides [simulate] seed)");
    cmd->add_option("--threads", flags.threads, "worker threads for simulation");
}

int dispatch(const CommonFlags& flags, int (*command)(const pubcomm::RunConfig&)) {
    pubcomm::RunConfig cfg = pubcomm::load_run_config(flags.config_path);
    if (!flags.out_path.empty()) cfg.output_path = flags.out_path;
    if (flags.seed) cfg.simulate.seed = static_cast<std::uint64_t>(*flags.seed);
    if (flags.threads) cfg.threads = *flags.threads;
    return command(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"communication-equilibrium solver for a sender/receivers disclosure game"};
    app.require_subcommand(1);

    CommonFlags flags;
    int (*command)(const pubcomm::RunConfig&) = nullptr;

    auto* solve = app.add_subcommand("solve", "solve the equilibrium triple");
    add_common(solve, flags);
    solve->callback([&] { command = pubcomm::cmd_solve; });

    auto* figure = app.add_subcommand("figure", "CSV of interim welfare-gain curves over y");
    add_common(figure, flags);
    figure->callback([&] { command = pubcomm::cmd_figure; });

    auto* sweep = app.add_subcommand("sweep", "CSV of equilibrium and welfare over a bias grid");
    add_common(sweep, flags);
    sweep->callback([&] { command = pubcomm::cmd_sweep; });

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo cross-check of the analytics");
    add_common(simulate, flags);
    simulate->callback([&] { command = pubcomm::cmd_simulate; });

    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(flags, command);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    }
}
