#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oml::cli {

inline constexpr int kExitOk = 0;
/// A mathematical negative: no state, not isomorphic, cap exceeded, ...
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace oml::cli
