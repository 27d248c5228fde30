#pragma once

// Experiment harness: train, evaluate greedily, and record one row per
// episode. Everything an experiment does is determined by its config and
// seed; each episode draws from its own derived RNG streams.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rtsrl/map_io.hpp"
#include "rtsrl/opponents.hpp"
#include "rtsrl/rewards.hpp"
#include "rtsrl/rl_core.hpp"

namespace rtsrl::harness {

struct ExperimentConfig {
    std::string name;  // label for output files; defaults to map stem + opponent + algorithm
    maps::Game game = maps::Game::BattleCity;
    std::filesystem::path map_path;
    OpponentKind opponent = OpponentKind::BcRandom;
    rl::Algorithm algorithm = rl::Algorithm::Sarsa;
    rl::SelectionPolicy policy = rl::EpsilonGreedy{0.2};
    rl::Hyperparameters hyper;     // alpha, gamma, epsilon, max_steps_per_episode
    double epsilon_final = 0.05;   // linear decay target over the training episodes
    int train_episodes = 100;
    int eval_episodes = 20;
    RewardConfig reward;
    Shaping shaping = Shaping::Generalized;
    std::uint64_t seed = 1;
    bool wall_clock = true;        // false records duration_ms as 0 for byte-stable output
    maps::S3MapConstants s3_constants;
    s3::S3Rules s3_rules;

    std::string label() const;
    // Throws ConfigError (or MapParseError) before anything runs.
    void validate() const;
};

enum class Phase { Train, Eval };
std::string_view phase_name(Phase p);

struct EpisodeRecord {
    int episode_index = 0;  // 1-based across the whole run
    Phase phase = Phase::Train;
    rl::Outcome outcome = rl::Outcome::Timeout;
    int steps = 0;
    double duration_ms = 0.0;
    int cumulative_wins = 0;
    double total_reward = 0.0;
};

struct PhaseSummary {
    int episodes = 0;
    int wins = 0;
    int losses = 0;
    int draws = 0;
    int timeouts = 0;
    double win_rate = 0.0;
    double mean_steps_to_win = 0.0;  // 0 when no wins
    double mean_duration_ms = 0.0;
};

PhaseSummary summarize(const std::vector<EpisodeRecord>& records, Phase phase);

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<EpisodeRecord> records;
    PhaseSummary train;
    PhaseSummary eval;
    rl::QTable qtable{1};
};

// Builds the environment the config describes.
std::unique_ptr<rl::Environment> make_environment(const ExperimentConfig& config);

// Epsilon used for training episode `index` of `total`.
double scheduled_epsilon(const ExperimentConfig& config, int index, int total);

// Trains for train_episodes, then evaluates eval_episodes with epsilon 0 and
// no table updates. A pre-seeded table may be supplied.
ExperimentResult run_experiment(const ExperimentConfig& config, std::optional<rl::QTable> initial = std::nullopt);

// Greedy evaluation of a fixed table on `env`, episodes numbered from `first_index`.
std::vector<EpisodeRecord> evaluate(rl::Environment& env, const rl::QTable& q, const ExperimentConfig& config,
                                    int episodes, int first_index = 1, int wins_so_far = 0);

inline constexpr const char* kCsvHeader = "episode,phase,outcome,steps,duration_ms,cumulative_wins,total_reward";

void write_csv(std::ostream& out, const std::vector<EpisodeRecord>& records);
// Throws std::runtime_error when the path cannot be written.
void emit_csv(const std::vector<EpisodeRecord>& records, const std::filesystem::path& out);

// Resolved configuration plus phase summaries, as key=value lines.
void write_summary(std::ostream& out, const ExperimentResult& result);

// ---------------------------------------------------------------- config files

// key=value lines; '#' starts a comment. Relative map paths resolve against
// `base_dir`. Values containing commas for map/opponent/algorithm/seed
// enumerate a sweep, expanded as a cartesian product.
std::vector<ExperimentConfig> parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
std::vector<ExperimentConfig> load_config(const std::filesystem::path& path);

// Applies one key=value to a config; throws ConfigError on unknown keys or bad values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir = {});

// ---------------------------------------------------------------- comparisons

struct ComparisonGrid {
    ExperimentConfig base;
    std::vector<std::filesystem::path> maps;   // empty: base.map_path only
    std::vector<OpponentKind> opponents;       // empty: base.opponent only
    std::vector<rl::Algorithm> algorithms = {rl::Algorithm::Sarsa, rl::Algorithm::QLearning};
    // When set, each algorithm trains once on the base map/opponent and the
    // learned table is evaluated on every (map, opponent) cell. Otherwise
    // every cell trains its own agent.
    bool shared_training = false;
};

struct ComparisonRow {
    std::string map;
    OpponentKind opponent;
    rl::Algorithm algorithm;
    std::vector<rl::Outcome> eval_outcomes;
    PhaseSummary eval;
};

std::vector<ComparisonRow> compare_algorithms(const ComparisonGrid& grid);

// won / lost / draw; a step-cap timeout has no winner and reads as draw.
std::string_view table_cell(rl::Outcome o);

// Fixed-width table: map, approach, one column per eval epoch.
void write_comparison_table(std::ostream& out, const std::vector<ComparisonRow>& rows);
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

}  // namespace rtsrl::harness
