#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace revolve::cli {

/// Runs the revolve CLI on the given arguments (without argv[0]).
/// Results go to out, diagnostics to err. Returns the process exit code:
/// 0 success, 2 spec/parse error, 3 numerical failure, 4 I/O failure,
/// 5 quadrature-vs-mesh check failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace revolve::cli
