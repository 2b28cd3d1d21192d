#ifndef CEQ_COMMANDS_HPP
#define CEQ_COMMANDS_HPP

#include <string>
#include <vector>

#include "workspace.hpp"

namespace ceq::cmd {

struct RunResult {
    int exit_code = 0;  // 0 true/success, 1 predicate false, 2 invalid input, 3 work limit
    std::string output;
};

/// Dispatches one command with its arguments and flags against a loaded
/// bundle. Never throws; failures are reported through the exit code.
RunResult run(const ws::Bundle& bundle, const std::vector<std::string>& args);

}  // namespace ceq::cmd

#endif
