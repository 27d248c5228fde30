#pragma once

#include <stdexcept>
#include <string>

namespace rtsrl {

// Raised for invalid user-supplied configuration (hyperparameters, policies,
// experiment files). Always reported before any episode runs.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a caller violates an operation's precondition, e.g. stepping a
// finished game or feeding SARSA a transition without a next action.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rtsrl
