// rtsrl: train and evaluate tabular RL agents on BattleCity and S3.
//
//   rtsrl run     --map maps/bridge-26x18.map --opponent ai-random --episodes 2000 --out-dir out
//   rtsrl compare --config experiments/s3_table.cfg --out-dir out
//   rtsrl check-map maps/gow.map

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rtsrl/errors.hpp"
#include "rtsrl/harness.hpp"
#include "rtsrl/map_io.hpp"

namespace fs = std::filesystem;
using namespace rtsrl;

namespace {

struct CommonFlags {
    std::string config;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> algorithm;
    std::optional<std::string> map;
    std::optional<std::string> opponent;
    std::optional<int> episodes;
    std::optional<int> eval_episodes;
    std::vector<std::string> set;
    bool no_wall_clock = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config, "key=value experiment file");
    cmd->add_option("--out-dir", f.out_dir, "directory for CSV and summary files");
    cmd->add_option("--seed", f.seed, "root RNG seed");
    cmd->add_option("--algorithm", f.algorithm, "qlearning | sarsa");
    cmd->add_option("--map", f.map, "map file");
    cmd->add_option("--opponent", f.opponent, "ai-random | ai-follower | static | ai-rush | ai-catapult-rush");
    cmd->add_option("--episodes", f.episodes, "training episodes");
    cmd->add_option("--eval-episodes", f.eval_episodes, "greedy evaluation episodes");
    cmd->add_option("--set", f.set, "extra key=value overrides (repeatable)");
    cmd->add_flag("--no-wall-clock", f.no_wall_clock, "record duration_ms as 0 for reproducible bytes");
}

std::vector<harness::ExperimentConfig> resolve_configs(const CommonFlags& f) {
    std::vector<harness::ExperimentConfig> configs =
        f.config.empty() ? std::vector<harness::ExperimentConfig>{harness::ExperimentConfig{}}
                         : harness::load_config(f.config);
    for (auto& c : configs) {
        if (f.map) {
            harness::apply_setting(c, "map", *f.map);
            c.game = maps::peek_game(maps::read_text_file(c.map_path));
        }
        if (f.opponent) harness::apply_setting(c, "opponent", *f.opponent);
        if (f.algorithm) harness::apply_setting(c, "algorithm", *f.algorithm);
        if (f.seed) harness::apply_setting(c, "seed", std::to_string(*f.seed));
        if (f.episodes) harness::apply_setting(c, "train_episodes", std::to_string(*f.episodes));
        if (f.eval_episodes) harness::apply_setting(c, "eval_episodes", std::to_string(*f.eval_episodes));
        for (const auto& kv : f.set) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
            harness::apply_setting(c, kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (f.no_wall_clock) c.wall_clock = false;
        c.validate();
    }
    return configs;
}

int cmd_run(const CommonFlags& f, const std::string& qtable_in, const std::string& qtable_out) {
    const auto configs = resolve_configs(f);
    fs::create_directories(f.out_dir);
    for (const auto& c : configs) {
        std::optional<rl::QTable> initial;
        const std::string env_id(maps::game_name(c.game));
        if (!qtable_in.empty()) {
            std::ifstream in(qtable_in);
            if (!in) throw ConfigError("cannot open " + qtable_in);
            initial = rl::load_qtable(in, env_id);
        }
        const auto result = harness::run_experiment(c, std::move(initial));
        const fs::path base = fs::path(f.out_dir) / c.label();
        harness::emit_csv(result.records, base.string() + ".csv");
        std::ofstream summary(base.string() + ".summary.txt");
        harness::write_summary(summary, result);
        if (!qtable_out.empty()) {
            const fs::path qpath = configs.size() == 1 ? fs::path(qtable_out) : fs::path(base.string() + ".qtable");
            std::ofstream q(qpath);
            rl::save_qtable(q, result.qtable, env_id);
        }
        std::cout << c.label() << ": train win rate " << result.train.win_rate << ", eval win rate "
                  << result.eval.win_rate << " (" << result.eval.wins << "/" << result.eval.episodes
                  << "), mean steps to win " << result.eval.mean_steps_to_win << '\n';
    }
    return 0;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto end = s.find(',', start);
        out.push_back(s.substr(start, end == std::string::npos ? std::string::npos : end - start));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

int cmd_compare(const CommonFlags& f, const std::string& eval_maps, const std::string& eval_opponents,
                bool shared) {
    auto configs = resolve_configs(f);
    harness::ComparisonGrid grid;
    grid.base = configs.front();
    grid.shared_training = shared;
    if (!eval_maps.empty()) {
        for (const auto& m : split_list(eval_maps)) grid.maps.emplace_back(m);
    }
    if (!eval_opponents.empty()) {
        for (const auto& o : split_list(eval_opponents)) grid.opponents.push_back(parse_opponent(o));
    }
    const auto rows = harness::compare_algorithms(grid);
    fs::create_directories(f.out_dir);
    const fs::path base = fs::path(f.out_dir) / ("compare_" + grid.base.label());
    std::ofstream csv(base.string() + ".csv");
    harness::write_comparison_csv(csv, rows);
    harness::write_comparison_table(std::cout, rows);
    return 0;
}

int cmd_check_map(const std::string& path) {
    const std::string text = maps::read_text_file(path);
    const std::string canonical = maps::peek_game(text) == maps::Game::BattleCity
                                      ? maps::serialize_map(maps::parse_battlecity_map(text))
                                      : maps::serialize_map(maps::parse_s3_map(text));
    std::cout << canonical;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tabular Q-learning / SARSA workbench for BattleCity and S3"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    std::string qtable_in, qtable_out;
    auto* run = app.add_subcommand("run", "train then evaluate; writes <label>.csv and <label>.summary.txt");
    add_common(run, run_flags);
    run->add_option("--qtable-in", qtable_in, "start from a saved Q-table");
    run->add_option("--qtable-out", qtable_out, "save the trained Q-table");

    CommonFlags cmp_flags;
    std::string eval_maps, eval_opponents;
    bool shared = false;
    auto* compare = app.add_subcommand("compare", "SARSA vs Q-learning over a (map, opponent) grid");
    add_common(compare, cmp_flags);
    compare->add_option("--eval-maps", eval_maps, "comma-separated maps for the grid");
    compare->add_option("--eval-opponents", eval_opponents, "comma-separated opponents for the grid");
    compare->add_flag("--shared-training", shared, "train once on --map/--opponent, evaluate on every cell");

    std::string map_path;
    auto* check = app.add_subcommand("check-map", "parse a map and print its canonical form");
    check->add_option("file", map_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(run_flags, qtable_in, qtable_out);
        if (*compare) return cmd_compare(cmp_flags, eval_maps, eval_opponents, shared);
        if (*check) return cmd_check_map(map_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
