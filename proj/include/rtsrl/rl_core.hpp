#pragma once

// Environment-agnostic tabular reinforcement learning: value tables,
// action-selection policies, the Q-learning / SARSA / Monte Carlo / TD update
// rules, and the per-episode learning loop.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rtsrl/rng.hpp"

namespace rtsrl::rl {

struct Hyperparameters {
    double alpha = 0.3;
    double gamma = 0.9;
    double epsilon = 0.2;
    int episodes = 1;
    int max_steps_per_episode = 2000;
    std::uint64_t seed = 0;

    // Throws ConfigError when a field is outside its allowed range.
    void validate() const;

    static Hyperparameters create(double alpha, double gamma, double epsilon, int episodes = 1,
                                  int max_steps_per_episode = 2000, std::uint64_t seed = 0);
};

// Opaque canonical encoding of an environment state. Environments pack their
// discretized state into the 64-bit value.
struct StateKey {
    std::uint64_t value = 0;
    friend bool operator==(StateKey, StateKey) = default;
    friend auto operator<=>(StateKey, StateKey) = default;
};

using ActionId = std::size_t;

struct StateKeyHash {
    std::size_t operator()(StateKey k) const noexcept {
        return static_cast<std::size_t>(splitmix64(k.value));
    }
};

// Q(s, a) estimates. Absent pairs read as the initialization value (0.0)
// without growing the table.
class QTable {
public:
    explicit QTable(std::size_t action_count, double init_value = 0.0);

    std::size_t action_count() const { return action_count_; }
    double init_value() const { return init_value_; }

    double value(StateKey s, ActionId a) const;
    void set(StateKey s, ActionId a, double v);

    // Stored row for s, or nullptr when the state has never been written.
    const std::vector<double>* find_row(StateKey s) const;

    // argmax_a Q(s, a); ties resolve to the lowest ActionId.
    ActionId greedy_action(StateKey s) const;
    double max_value(StateKey s) const;

    std::size_t state_count() const { return rows_.size(); }

    // Visits stored rows in ascending StateKey order.
    void for_each_row(const std::function<void(StateKey, std::span<const double>)>& fn) const;

    friend bool operator==(const QTable& a, const QTable& b);

private:
    std::size_t action_count_;
    double init_value_;
    std::unordered_map<StateKey, std::vector<double>, StateKeyHash> rows_;
};

// V(s) estimates with the same lazy-initialization contract as QTable.
class VTable {
public:
    explicit VTable(double init_value = 0.0) : init_value_(init_value) {}

    double value(StateKey s) const;
    void set(StateKey s, double v);
    std::size_t size() const { return values_.size(); }

private:
    double init_value_;
    std::unordered_map<StateKey, double, StateKeyHash> values_;
};

struct EpsilonGreedy {
    double epsilon = 0.0;
};
struct EpsilonSoft {
    double epsilon = 0.0;
};
struct Softmax {
    double temperature = 1.0;
};

using SelectionPolicy = std::variant<EpsilonGreedy, EpsilonSoft, Softmax>;

void validate(const SelectionPolicy& policy);
std::string policy_name(const SelectionPolicy& policy);

// Same policy with its exploration rate replaced; Softmax is returned as-is.
SelectionPolicy with_epsilon(const SelectionPolicy& policy, double epsilon);

// Boltzmann distribution over q / temperature, computed after subtracting the
// maximum so large values do not overflow.
std::vector<double> softmax_probabilities(std::span<const double> q, double temperature);

ActionId select_action(const QTable& q, StateKey s, const SelectionPolicy& policy, Rng& rng);

struct Transition {
    StateKey state;
    ActionId action = 0;
    double reward = 0.0;
    StateKey next_state;
    std::optional<ActionId> next_action;
    bool terminal = false;
};

enum class Algorithm { QLearning, Sarsa };

std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

// Q(s,a) += alpha * (r + gamma * max_b Q(s',b) - Q(s,a)); zero bootstrap when
// terminal. Returns the new Q(s,a).
double q_learning_update(QTable& q, const Transition& t, const Hyperparameters& h);

// Q(s,a) += alpha * (r + gamma * Q(s',a') - Q(s,a)); zero bootstrap when
// terminal. Returns the new Q(s,a).
double sarsa_update(QTable& q, const Transition& t, const Hyperparameters& h);

double apply_update(Algorithm algorithm, QTable& q, const Transition& t, const Hyperparameters& h);

// Monte Carlo: V(s) += alpha * (R - V(s)).
double mc_value_update(VTable& v, StateKey s, double final_return, const Hyperparameters& h);

// TD(0): V(s) += alpha * (r + gamma * V(s') - V(s)).
double td_value_update(VTable& v, StateKey s, StateKey next, double reward, const Hyperparameters& h);

enum class Outcome { Win, Loss, Draw, Timeout };

std::string_view outcome_name(Outcome o);

struct StepResult {
    StateKey next_state;
    double reward = 0.0;
    bool terminal = false;
    Outcome outcome = Outcome::Draw;  // meaningful only when terminal
};

// The surface run_episode drives. Concrete environments bundle the game
// rules, the scripted opponent, and the reward function.
class Environment {
public:
    virtual ~Environment() = default;

    virtual std::string_view id() const = 0;
    virtual std::size_t action_count() const = 0;

    // Restores the initial state; seed drives any opponent randomness.
    virtual void reset(std::uint64_t seed) = 0;
    virtual StateKey current_key() const = 0;
    virtual bool is_terminal() const = 0;
    virtual StepResult step(ActionId action) = 0;
};

struct EpisodeResult {
    Outcome outcome = Outcome::Timeout;
    double total_reward = 0.0;
    int steps = 0;
    double duration_ms = 0.0;
    std::vector<ActionId> actions;
};

// Plays one episode from the environment's current (reset) state. With
// learn == false the table is only read.
EpisodeResult run_episode(Environment& env, QTable& q, const SelectionPolicy& policy,
                          Algorithm algorithm, const Hyperparameters& h, Rng& rng,
                          bool learn = true);

// Line-oriented persistence:
//   qtable<TAB>env_id<TAB>action_count
//   state_key<TAB>action_id<TAB>value        (one line per entry, %.17g)
void save_qtable(std::ostream& out, const QTable& q, std::string_view env_id);
QTable load_qtable(std::istream& in, std::string_view expected_env_id);

}  // namespace rtsrl::rl
