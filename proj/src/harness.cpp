#include "rtsrl/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rtsrl/environments.hpp"
#include "rtsrl/errors.hpp"
#include "rtsrl/rng.hpp"

namespace rtsrl::harness {

namespace {

constexpr std::uint64_t kTrainStream = 0;
constexpr std::uint64_t kEvalStream = 1;
constexpr std::uint64_t kAgentRole = 0;
constexpr std::uint64_t kEnvRole = 1;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto end = s.find(sep, start);
        parts.push_back(trim(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return parts;
}

double to_double(std::string_view key, std::string_view v) {
    const std::string text(v);
    char* end = nullptr;
    const double d = std::strtod(text.c_str(), &end);
    if (text.empty() || *end != '\0' || !std::isfinite(d)) {
        throw ConfigError("'" + std::string(key) + "' expects a number, got '" + text + "'");
    }
    return d;
}

template <class Int>
Int to_integer(std::string_view key, std::string_view v) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("'" + std::string(key) + "' expects an integer, got '" + std::string(v) + "'");
    }
    return value;
}

bool to_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("'" + std::string(key) + "' expects true/false, got '" + std::string(v) + "'");
}

std::filesystem::path resolve_path(std::string_view value, const std::filesystem::path& base_dir) {
    std::filesystem::path p{std::string(value)};
    if (p.is_relative() && !base_dir.empty() && !std::filesystem::exists(p)) p = base_dir / p;
    return p;
}

std::string format_reward(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string map_stem(const std::filesystem::path& p) { return p.stem().string(); }

}  // namespace

std::string ExperimentConfig::label() const {
    if (!name.empty()) return name;
    return map_stem(map_path) + "_" + std::string(opponent_name(opponent)) + "_" +
           std::string(rl::algorithm_name(algorithm)) + "_seed" + std::to_string(seed);
}

void ExperimentConfig::validate() const {
    hyper.validate();
    rl::validate(policy);
    reward.validate();
    s3_rules.validate();
    if (!(std::isfinite(epsilon_final) && epsilon_final >= 0.0 && epsilon_final <= 1.0)) {
        throw ConfigError("epsilon_final must lie in [0, 1]");
    }
    if (train_episodes < 0) throw ConfigError("train_episodes must be >= 0");
    if (eval_episodes < 0) throw ConfigError("eval_episodes must be >= 0");
    if (map_path.empty()) throw ConfigError("no map given");
    const bool bc_opponent = is_battlecity_opponent(opponent);
    if (bc_opponent != (game == maps::Game::BattleCity)) {
        throw ConfigError("opponent '" + std::string(opponent_name(opponent)) + "' does not play " +
                          std::string(maps::game_name(game)));
    }
    // Parsing the map here surfaces format errors before any episode runs.
    if (game == maps::Game::BattleCity) {
        maps::load_battlecity_map(map_path);
    } else {
        maps::load_s3_map(map_path);
    }
}

std::string_view phase_name(Phase p) { return p == Phase::Train ? "train" : "eval"; }

PhaseSummary summarize(const std::vector<EpisodeRecord>& records, Phase phase) {
    PhaseSummary s;
    long long win_steps = 0;
    double duration = 0.0;
    for (const auto& r : records) {
        if (r.phase != phase) continue;
        ++s.episodes;
        duration += r.duration_ms;
        switch (r.outcome) {
            case rl::Outcome::Win:
                ++s.wins;
                win_steps += r.steps;
                break;
            case rl::Outcome::Loss: ++s.losses; break;
            case rl::Outcome::Draw: ++s.draws; break;
            case rl::Outcome::Timeout: ++s.timeouts; break;
        }
    }
    if (s.episodes > 0) {
        s.win_rate = static_cast<double>(s.wins) / s.episodes;
        s.mean_duration_ms = duration / s.episodes;
    }
    if (s.wins > 0) s.mean_steps_to_win = static_cast<double>(win_steps) / s.wins;
    return s;
}

std::unique_ptr<rl::Environment> make_environment(const ExperimentConfig& config) {
    if (config.game == maps::Game::BattleCity) {
        return std::make_unique<BattleCityEnv>(maps::load_battlecity_map(config.map_path), config.opponent,
                                               config.reward, config.shaping);
    }
    const auto map = maps::load_s3_map(config.map_path);
    return std::make_unique<S3Env>(map.summary(config.s3_constants), config.opponent, config.reward,
                                   config.s3_rules);
}

double scheduled_epsilon(const ExperimentConfig& config, int index, int total) {
    const double start = config.hyper.epsilon;
    if (total <= 1) return start;
    const double t = static_cast<double>(index) / (total - 1);
    return start + (config.epsilon_final - start) * t;
}

namespace {

EpisodeRecord play(rl::Environment& env, rl::QTable& q, const ExperimentConfig& config, Phase phase, int i,
                   const rl::SelectionPolicy& policy, bool learn) {
    const std::uint64_t stream = phase == Phase::Train ? kTrainStream : kEvalStream;
    const auto ordinal = static_cast<std::uint64_t>(i);
    env.reset(derive_seed(config.seed, {stream, ordinal, kEnvRole}));
    Rng agent_rng(derive_seed(config.seed, {stream, ordinal, kAgentRole}));
    const rl::EpisodeResult ep = rl::run_episode(env, q, policy, config.algorithm, config.hyper, agent_rng, learn);

    EpisodeRecord rec;
    rec.phase = phase;
    rec.outcome = ep.outcome;
    rec.steps = ep.steps;
    rec.duration_ms = config.wall_clock ? ep.duration_ms : 0.0;
    rec.total_reward = ep.total_reward;
    return rec;
}

}  // namespace

std::vector<EpisodeRecord> evaluate(rl::Environment& env, const rl::QTable& q, const ExperimentConfig& config,
                                    int episodes, int first_index, int wins_so_far) {
    std::vector<EpisodeRecord> out;
    out.reserve(static_cast<std::size_t>(episodes));
    rl::QTable table = q;  // learn == false never writes, but run_episode takes a mutable table
    const rl::SelectionPolicy greedy = rl::EpsilonGreedy{0.0};
    for (int i = 0; i < episodes; ++i) {
        EpisodeRecord rec = play(env, table, config, Phase::Eval, i, greedy, false);
        rec.episode_index = first_index + i;
        if (rec.outcome == rl::Outcome::Win) ++wins_so_far;
        rec.cumulative_wins = wins_so_far;
        out.push_back(rec);
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config, std::optional<rl::QTable> initial) {
    config.validate();
    auto env = make_environment(config);

    ExperimentResult result;
    result.config = config;
    result.qtable = initial ? std::move(*initial) : rl::QTable(env->action_count());
    if (result.qtable.action_count() != env->action_count()) {
        throw ConfigError("initial Q-table action count does not match the environment");
    }

    int wins = 0;
    for (int i = 0; i < config.train_episodes; ++i) {
        const auto policy = rl::with_epsilon(config.policy, scheduled_epsilon(config, i, config.train_episodes));
        EpisodeRecord rec = play(*env, result.qtable, config, Phase::Train, i, policy, true);
        rec.episode_index = i + 1;
        if (rec.outcome == rl::Outcome::Win) ++wins;
        rec.cumulative_wins = wins;
        result.records.push_back(rec);
    }
    auto eval = evaluate(*env, result.qtable, config, config.eval_episodes, config.train_episodes + 1, wins);
    result.records.insert(result.records.end(), eval.begin(), eval.end());

    result.train = summarize(result.records, Phase::Train);
    result.eval = summarize(result.records, Phase::Eval);
    return result;
}

void write_csv(std::ostream& out, const std::vector<EpisodeRecord>& records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.episode_index << ',' << phase_name(r.phase) << ',' << rl::outcome_name(r.outcome) << ','
            << r.steps << ',' << std::llround(r.duration_ms) << ',' << r.cumulative_wins << ','
            << format_reward(r.total_reward) << '\n';
    }
}

void emit_csv(const std::vector<EpisodeRecord>& records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_csv(out, records);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_summary(std::ostream& out, const ExperimentResult& r) {
    const auto& c = r.config;
    out << "name=" << c.label() << '\n'
        << "game=" << maps::game_name(c.game) << '\n'
        << "map=" << c.map_path.generic_string() << '\n'
        << "opponent=" << opponent_name(c.opponent) << '\n'
        << "algorithm=" << rl::algorithm_name(c.algorithm) << '\n'
        << "policy=" << rl::policy_name(c.policy) << '\n';
    if (const auto* sm = std::get_if<rl::Softmax>(&c.policy)) out << "temperature=" << sm->temperature << '\n';
    out << "alpha=" << c.hyper.alpha << '\n'
        << "gamma=" << c.hyper.gamma << '\n'
        << "epsilon=" << c.hyper.epsilon << '\n'
        << "epsilon_final=" << c.epsilon_final << '\n'
        << "max_steps=" << c.hyper.max_steps_per_episode << '\n'
        << "train_episodes=" << c.train_episodes << '\n'
        << "eval_episodes=" << c.eval_episodes << '\n'
        << "reward=" << c.reward.reward << '\n'
        << "penalty=" << c.reward.penalty << '\n'
        << "shaping=" << shaping_name(c.shaping) << '\n'
        << "seed=" << c.seed << '\n';
    if (c.opponent == OpponentKind::S3CatapultRush) out << "opponent_note=simplified\n";
    const auto phase = [&](std::string_view tag, const PhaseSummary& s) {
        out << tag << ".episodes=" << s.episodes << '\n'
            << tag << ".wins=" << s.wins << '\n'
            << tag << ".losses=" << s.losses << '\n'
            << tag << ".draws=" << s.draws << '\n'
            << tag << ".timeouts=" << s.timeouts << '\n'
            << tag << ".win_rate=" << format_reward(s.win_rate) << '\n'
            << tag << ".mean_steps_to_win=" << format_reward(s.mean_steps_to_win) << '\n';
    };
    phase("train", r.train);
    phase("eval", r.eval);
}

// ---------------------------------------------------------------- config files

void apply_setting(ExperimentConfig& c, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir) {
    if (key == "name") {
        c.name = std::string(value);
    } else if (key == "game") {
        c.game = maps::parse_game(value);
    } else if (key == "map") {
        c.map_path = resolve_path(value, base_dir);
    } else if (key == "opponent") {
        c.opponent = parse_opponent(value);
    } else if (key == "algorithm") {
        c.algorithm = rl::parse_algorithm(value);
    } else if (key == "policy") {
        if (value == "epsilon-greedy") {
            c.policy = rl::EpsilonGreedy{c.hyper.epsilon};
        } else if (value == "epsilon-soft") {
            c.policy = rl::EpsilonSoft{c.hyper.epsilon};
        } else if (value == "softmax") {
            c.policy = rl::Softmax{1.0};
        } else {
            throw ConfigError("unknown policy '" + std::string(value) + "'");
        }
    } else if (key == "temperature") {
        const double t = to_double(key, value);
        if (!std::holds_alternative<rl::Softmax>(c.policy)) throw ConfigError("temperature needs policy=softmax");
        c.policy = rl::Softmax{t};
    } else if (key == "alpha") {
        c.hyper.alpha = to_double(key, value);
    } else if (key == "gamma") {
        c.hyper.gamma = to_double(key, value);
    } else if (key == "epsilon") {
        c.hyper.epsilon = to_double(key, value);
        c.policy = rl::with_epsilon(c.policy, c.hyper.epsilon);
    } else if (key == "epsilon_final") {
        c.epsilon_final = to_double(key, value);
    } else if (key == "max_steps") {
        c.hyper.max_steps_per_episode = to_integer<int>(key, value);
    } else if (key == "train_episodes" || key == "episodes") {
        c.train_episodes = to_integer<int>(key, value);
        c.hyper.episodes = std::max(1, c.train_episodes);
    } else if (key == "eval_episodes") {
        c.eval_episodes = to_integer<int>(key, value);
    } else if (key == "reward") {
        c.reward.reward = to_double(key, value);
    } else if (key == "penalty") {
        c.reward.penalty = to_double(key, value);
    } else if (key == "shaping") {
        c.shaping = parse_shaping(value);
    } else if (key == "seed") {
        c.seed = to_integer<std::uint64_t>(key, value);
        c.hyper.seed = c.seed;
    } else if (key == "wall_clock") {
        c.wall_clock = to_bool(key, value);
    } else if (key == "gold_per_mine_cell") {
        c.s3_constants.gold_per_mine_cell = to_integer<int>(key, value);
    } else if (key == "wood_per_tree_cell") {
        c.s3_constants.wood_per_tree_cell = to_integer<int>(key, value);
    } else if (key == "gold_per_peasant") {
        c.s3_rules.gold_per_peasant = to_integer<int>(key, value);
    } else if (key == "wood_per_peasant") {
        c.s3_rules.wood_per_peasant = to_integer<int>(key, value);
    } else if (key == "barrack_gold") {
        c.s3_rules.barrack_gold = to_integer<int>(key, value);
    } else if (key == "barrack_wood") {
        c.s3_rules.barrack_wood = to_integer<int>(key, value);
    } else if (key == "footman_gold") {
        c.s3_rules.footman_gold = to_integer<int>(key, value);
    } else if (key == "initial_peasants") {
        c.s3_rules.initial_peasants = to_integer<int>(key, value);
    } else if (key == "initial_gold") {
        c.s3_rules.initial_gold = to_integer<int>(key, value);
    } else if (key == "initial_wood") {
        c.s3_rules.initial_wood = to_integer<int>(key, value);
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

std::vector<ExperimentConfig> parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    std::vector<std::pair<std::string, std::string>> settings;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + " is not key=value");
        }
        settings.emplace_back(trim(std::string_view(body).substr(0, eq)), trim(std::string_view(body).substr(eq + 1)));
    }

    // Sweep keys are applied last so that single-valued keys (e.g. epsilon)
    // are in place before configs are cloned.
    static constexpr std::string_view kSweepKeys[] = {"map", "opponent", "algorithm", "seed"};
    const auto is_sweep_key = [](std::string_view k) {
        for (auto s : kSweepKeys) {
            if (s == k) return true;
        }
        return false;
    };

    ExperimentConfig base;
    std::vector<std::pair<std::string, std::vector<std::string>>> sweeps;
    for (const auto& [key, value] : settings) {
        if (is_sweep_key(key)) {
            sweeps.emplace_back(key, split(value, ','));
        } else {
            apply_setting(base, key, value, base_dir);
        }
    }
    std::vector<ExperimentConfig> configs{base};
    for (const auto& [key, values] : sweeps) {
        std::vector<ExperimentConfig> expanded;
        for (const auto& c : configs) {
            for (const auto& v : values) {
                ExperimentConfig copy = c;
                apply_setting(copy, key, v, base_dir);
                expanded.push_back(std::move(copy));
            }
        }
        configs = std::move(expanded);
    }
    if (configs.size() > 1) {
        for (auto& c : configs) {
            if (!c.name.empty()) c.name.clear();  // per-config labels keep output files distinct
        }
    }
    return configs;
}

std::vector<ExperimentConfig> load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path.parent_path());
}

// ---------------------------------------------------------------- comparisons

std::vector<ComparisonRow> compare_algorithms(const ComparisonGrid& grid) {
    const std::vector<std::filesystem::path> maps =
        grid.maps.empty() ? std::vector<std::filesystem::path>{grid.base.map_path} : grid.maps;
    const std::vector<OpponentKind> opponents =
        grid.opponents.empty() ? std::vector<OpponentKind>{grid.base.opponent} : grid.opponents;

    // Validate every cell up front so a bad map fails before training.
    for (const auto& m : maps) {
        for (auto o : opponents) {
            ExperimentConfig cell = grid.base;
            cell.map_path = m;
            cell.opponent = o;
            cell.validate();
        }
    }
    grid.base.validate();

    std::vector<ComparisonRow> rows;
    std::map<rl::Algorithm, rl::QTable> trained;
    if (grid.shared_training) {
        for (auto algorithm : grid.algorithms) {
            ExperimentConfig train = grid.base;
            train.algorithm = algorithm;
            train.eval_episodes = 0;
            trained.emplace(algorithm, run_experiment(train).qtable);
        }
    }

    for (const auto& m : maps) {
        for (auto o : opponents) {
            for (auto algorithm : grid.algorithms) {
                ExperimentConfig cell = grid.base;
                cell.map_path = m;
                cell.opponent = o;
                cell.algorithm = algorithm;

                std::vector<EpisodeRecord> eval;
                if (grid.shared_training) {
                    auto env = make_environment(cell);
                    eval = evaluate(*env, trained.at(algorithm), cell, cell.eval_episodes);
                } else {
                    const auto result = run_experiment(cell);
                    for (const auto& r : result.records) {
                        if (r.phase == Phase::Eval) eval.push_back(r);
                    }
                }
                ComparisonRow row{map_stem(m), o, algorithm, {}, summarize(eval, Phase::Eval)};
                for (const auto& r : eval) row.eval_outcomes.push_back(r.outcome);
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string_view table_cell(rl::Outcome o) {
    switch (o) {
        case rl::Outcome::Win: return "won";
        case rl::Outcome::Loss: return "lost";
        case rl::Outcome::Draw:
        case rl::Outcome::Timeout: return "draw";
    }
    return "?";
}

void write_comparison_table(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    std::size_t epochs = 0;
    for (const auto& r : rows) epochs = std::max(epochs, r.eval_outcomes.size());
    std::vector<OpponentKind> order;
    for (const auto& r : rows) {
        if (std::find(order.begin(), order.end(), r.opponent) == order.end()) order.push_back(r.opponent);
    }
    for (auto opponent : order) {
        out << "against " << opponent_name(opponent) << '\n';
        out << std::left << std::setw(16) << "map" << std::setw(12) << "approach";
        for (std::size_t e = 0; e < epochs; ++e) out << std::setw(9) << ("epoch" + std::to_string(e + 1));
        out << '\n';
        for (const auto& r : rows) {
            if (r.opponent != opponent) continue;
            out << std::left << std::setw(16) << r.map << std::setw(12) << rl::algorithm_name(r.algorithm);
            for (auto o : r.eval_outcomes) out << std::setw(9) << table_cell(o);
            out << '\n';
        }
    }
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
    out << "map,opponent,algorithm,epoch,outcome,cell\n";
    for (const auto& r : rows) {
        for (std::size_t e = 0; e < r.eval_outcomes.size(); ++e) {
            out << r.map << ',' << opponent_name(r.opponent) << ',' << rl::algorithm_name(r.algorithm) << ','
                << e + 1 << ',' << rl::outcome_name(r.eval_outcomes[e]) << ',' << table_cell(r.eval_outcomes[e])
                << '\n';
        }
    }
}

}  // namespace rtsrl::harness
