#ifndef TMAT_CLI_HPP
#define TMAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tmat/graph.hpp"

namespace tmat {

/// Dispatch one CLI invocation (argv without the program name).
/// Exit codes: 0 success, 1 input error, 2 budget exceeded,
/// 3 internal consistency failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json graph_to_json(const FourRegularGraph& g);
FourRegularGraph graph_from_json(const nlohmann::json& j);

} // namespace tmat

#endif
