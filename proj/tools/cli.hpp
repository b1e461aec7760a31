#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <banach2d/ext_real.hpp>
#include <banach2d/norm_space.hpp>

namespace banach2d::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics and the run header to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `builtin:<id>` | `<id>` | `pnorm:<p|inf>` | `file:<path>`.
NormSpace parse_space(const std::string& arg);

/// "a:b:step" or a comma list; t lists accept -inf/+inf.
std::vector<double> parse_values(const std::string& arg, const std::string& name);
std::vector<ExtReal> parse_t_values(const std::string& arg);

}  // namespace banach2d::cli
