#include "rtsrl/rl_core.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "rtsrl/errors.hpp"

namespace rtsrl::rl {

namespace {

bool in_unit_interval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw ContractError(std::string(what) + " must be finite");
    }
}

void require_action(const QTable& q, ActionId a) {
    if (a >= q.action_count()) {
        throw ContractError("action id " + std::to_string(a) + " out of range [0, " +
                            std::to_string(q.action_count()) + ")");
    }
}

}  // namespace

void Hyperparameters::validate() const {
    if (!in_unit_interval(alpha)) throw ConfigError("alpha must lie in [0, 1]");
    if (!in_unit_interval(gamma)) throw ConfigError("gamma must lie in [0, 1]");
    if (!in_unit_interval(epsilon)) throw ConfigError("epsilon must lie in [0, 1]");
    if (episodes < 1) throw ConfigError("episodes must be >= 1");
    if (max_steps_per_episode < 1) throw ConfigError("max_steps_per_episode must be >= 1");
}

Hyperparameters Hyperparameters::create(double alpha, double gamma, double epsilon, int episodes,
                                        int max_steps_per_episode, std::uint64_t seed) {
    Hyperparameters h{alpha, gamma, epsilon, episodes, max_steps_per_episode, seed};
    h.validate();
    return h;
}

// ---------------------------------------------------------------- QTable

QTable::QTable(std::size_t action_count, double init_value)
    : action_count_(action_count), init_value_(init_value) {
    if (action_count == 0) throw ConfigError("QTable needs at least one action");
    if (!std::isfinite(init_value)) throw ConfigError("QTable init value must be finite");
}

double QTable::value(StateKey s, ActionId a) const {
    require_action(*this, a);
    auto it = rows_.find(s);
    return it == rows_.end() ? init_value_ : it->second[a];
}

void QTable::set(StateKey s, ActionId a, double v) {
    require_action(*this, a);
    require_finite(v, "Q value");
    auto [it, inserted] = rows_.try_emplace(s);
    if (inserted) it->second.assign(action_count_, init_value_);
    it->second[a] = v;
}

const std::vector<double>* QTable::find_row(StateKey s) const {
    auto it = rows_.find(s);
    return it == rows_.end() ? nullptr : &it->second;
}

ActionId QTable::greedy_action(StateKey s) const {
    const auto* row = find_row(s);
    if (row == nullptr) return 0;
    // max_element returns the first maximum, i.e. the lowest id on ties.
    return static_cast<ActionId>(std::max_element(row->begin(), row->end()) - row->begin());
}

double QTable::max_value(StateKey s) const {
    const auto* row = find_row(s);
    if (row == nullptr) return init_value_;
    return *std::max_element(row->begin(), row->end());
}

void QTable::for_each_row(const std::function<void(StateKey, std::span<const double>)>& fn) const {
    std::vector<StateKey> keys;
    keys.reserve(rows_.size());
    for (const auto& [k, _] : rows_) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (StateKey k : keys) fn(k, rows_.at(k));
}

bool operator==(const QTable& a, const QTable& b) {
    return a.action_count_ == b.action_count_ && a.init_value_ == b.init_value_ &&
           a.rows_ == b.rows_;
}

// ---------------------------------------------------------------- VTable

double VTable::value(StateKey s) const {
    auto it = values_.find(s);
    return it == values_.end() ? init_value_ : it->second;
}

void VTable::set(StateKey s, double v) {
    require_finite(v, "V value");
    values_[s] = v;
}

// ---------------------------------------------------------------- policies

void validate(const SelectionPolicy& policy) {
    std::visit(
        [](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, Softmax>) {
                if (!(std::isfinite(p.temperature) && p.temperature > 0.0)) {
                    throw ConfigError("softmax temperature must be > 0");
                }
            } else {
                if (!in_unit_interval(p.epsilon)) throw ConfigError("epsilon must lie in [0, 1]");
            }
        },
        policy);
}

std::string policy_name(const SelectionPolicy& policy) {
    struct Namer {
        std::string operator()(const EpsilonGreedy&) const { return "epsilon-greedy"; }
        std::string operator()(const EpsilonSoft&) const { return "epsilon-soft"; }
        std::string operator()(const Softmax&) const { return "softmax"; }
    };
    return std::visit(Namer{}, policy);
}

SelectionPolicy with_epsilon(const SelectionPolicy& policy, double epsilon) {
    if (std::holds_alternative<EpsilonGreedy>(policy)) return EpsilonGreedy{epsilon};
    if (std::holds_alternative<EpsilonSoft>(policy)) return EpsilonSoft{epsilon};
    return policy;
}

std::vector<double> softmax_probabilities(std::span<const double> q, double temperature) {
    if (q.empty()) throw ConfigError("softmax over an empty action set");
    if (!(temperature > 0.0)) throw ConfigError("softmax temperature must be > 0");
    const double peak = *std::max_element(q.begin(), q.end());
    std::vector<double> p(q.size());
    double total = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        p[i] = std::exp((q[i] - peak) / temperature);
        total += p[i];
    }
    for (double& x : p) x /= total;
    return p;
}

namespace {

ActionId explore_or_exploit(const QTable& q, StateKey s, double epsilon, Rng& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(rng) < epsilon) {
        std::uniform_int_distribution<ActionId> any(0, q.action_count() - 1);
        return any(rng);
    }
    return q.greedy_action(s);
}

}  // namespace

ActionId select_action(const QTable& q, StateKey s, const SelectionPolicy& policy, Rng& rng) {
    if (q.action_count() == 0) throw ConfigError("empty action set");
    if (const auto* g = std::get_if<EpsilonGreedy>(&policy)) {
        return explore_or_exploit(q, s, g->epsilon, rng);
    }
    if (const auto* soft = std::get_if<EpsilonSoft>(&policy)) {
        return explore_or_exploit(q, s, soft->epsilon, rng);
    }
    const auto& sm = std::get<Softmax>(policy);
    std::vector<double> row(q.action_count(), q.init_value());
    if (const auto* stored = q.find_row(s)) row = *stored;
    const auto probs = softmax_probabilities(row, sm.temperature);
    std::discrete_distribution<ActionId> pick(probs.begin(), probs.end());
    return pick(rng);
}

// ---------------------------------------------------------------- updates

std::string_view algorithm_name(Algorithm a) {
    return a == Algorithm::QLearning ? "qlearning" : "sarsa";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "qlearning" || name == "q-learning") return Algorithm::QLearning;
    if (name == "sarsa") return Algorithm::Sarsa;
    throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

namespace {

double move_toward(QTable& q, const Transition& t, double target, const Hyperparameters& h) {
    const double old = q.value(t.state, t.action);
    const double updated = old + h.alpha * (target - old);
    if (updated != old) q.set(t.state, t.action, updated);
    return updated;
}

void check_transition(const QTable& q, const Transition& t, const Hyperparameters& h) {
    require_finite(t.reward, "reward");
    require_action(q, t.action);
    h.validate();
}

}  // namespace

double q_learning_update(QTable& q, const Transition& t, const Hyperparameters& h) {
    check_transition(q, t, h);
    const double bootstrap = t.terminal ? 0.0 : q.max_value(t.next_state);
    return move_toward(q, t, t.reward + h.gamma * bootstrap, h);
}

double sarsa_update(QTable& q, const Transition& t, const Hyperparameters& h) {
    check_transition(q, t, h);
    double bootstrap = 0.0;
    if (!t.terminal) {
        if (!t.next_action) throw ContractError("SARSA needs next_action on a non-terminal transition");
        bootstrap = q.value(t.next_state, *t.next_action);
    }
    return move_toward(q, t, t.reward + h.gamma * bootstrap, h);
}

double apply_update(Algorithm algorithm, QTable& q, const Transition& t, const Hyperparameters& h) {
    return algorithm == Algorithm::QLearning ? q_learning_update(q, t, h) : sarsa_update(q, t, h);
}

double mc_value_update(VTable& v, StateKey s, double final_return, const Hyperparameters& h) {
    require_finite(final_return, "return");
    h.validate();
    const double old = v.value(s);
    const double updated = old + h.alpha * (final_return - old);
    v.set(s, updated);
    return updated;
}

double td_value_update(VTable& v, StateKey s, StateKey next, double reward, const Hyperparameters& h) {
    require_finite(reward, "reward");
    h.validate();
    const double old = v.value(s);
    const double updated = old + h.alpha * (reward + h.gamma * v.value(next) - old);
    v.set(s, updated);
    return updated;
}

// ---------------------------------------------------------------- episodes

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Win: return "win";
        case Outcome::Loss: return "loss";
        case Outcome::Draw: return "draw";
        case Outcome::Timeout: return "timeout";
    }
    return "?";
}

EpisodeResult run_episode(Environment& env, QTable& q, const SelectionPolicy& policy,
                          Algorithm algorithm, const Hyperparameters& h, Rng& rng, bool learn) {
    h.validate();
    validate(policy);
    if (q.action_count() != env.action_count()) {
        throw ConfigError("Q-table has " + std::to_string(q.action_count()) +
                          " actions but environment '" + std::string(env.id()) + "' has " +
                          std::to_string(env.action_count()));
    }
    if (env.is_terminal()) throw ContractError("run_episode needs a freshly reset environment");

    const auto start = std::chrono::steady_clock::now();
    EpisodeResult result;
    StateKey state = env.current_key();
    ActionId action = select_action(q, state, policy, rng);

    while (result.steps < h.max_steps_per_episode) {
        const StepResult step = env.step(action);
        ++result.steps;
        result.total_reward += step.reward;
        result.actions.push_back(action);

        Transition t{state, action, step.reward, step.next_state, std::nullopt, step.terminal};
        if (step.terminal) {
            if (learn) apply_update(algorithm, q, t, h);
            result.outcome = step.outcome;
            break;
        }

        ActionId next_action = 0;
        if (algorithm == Algorithm::Sarsa) {
            next_action = select_action(q, step.next_state, policy, rng);
            t.next_action = next_action;
            if (learn) sarsa_update(q, t, h);
        } else {
            if (learn) q_learning_update(q, t, h);
            next_action = select_action(q, step.next_state, policy, rng);
        }
        state = step.next_state;
        action = next_action;
    }

    result.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

// ---------------------------------------------------------------- persistence

void save_qtable(std::ostream& out, const QTable& q, std::string_view env_id) {
    out << "qtable\t" << env_id << '\t' << q.action_count() << '\n';
    char buf[64];
    q.for_each_row([&](StateKey s, std::span<const double> row) {
        for (std::size_t a = 0; a < row.size(); ++a) {
            std::snprintf(buf, sizeof buf, "%.17g", row[a]);
            out << s.value << '\t' << a << '\t' << buf << '\n';
        }
    });
}

QTable load_qtable(std::istream& in, std::string_view expected_env_id) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("Q-table file is empty");
    std::istringstream header(line);
    std::string tag, env_id;
    std::size_t actions = 0;
    if (!(header >> tag >> env_id >> actions) || tag != "qtable") {
        throw ConfigError("malformed Q-table header: '" + line + "'");
    }
    if (env_id != expected_env_id) {
        throw ConfigError("Q-table belongs to environment '" + env_id + "', expected '" +
                          std::string(expected_env_id) + "'");
    }
    QTable q(actions);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream rec(line);
        std::uint64_t key = 0;
        std::size_t action = 0;
        std::string value_text;
        if (!(rec >> key >> action >> value_text)) {
            throw ConfigError("malformed Q-table record at line " + std::to_string(line_no));
        }
        char* end = nullptr;
        const double v = std::strtod(value_text.c_str(), &end);
        if (end == value_text.c_str() || *end != '\0' || !std::isfinite(v) || action >= actions) {
            throw ConfigError("invalid Q-table record at line " + std::to_string(line_no));
        }
        q.set(StateKey{key}, action, v);
    }
    return q;
}

}  // namespace rtsrl::rl
