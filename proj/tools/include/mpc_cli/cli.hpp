#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (without the program name). Reports and artifacts
/// go to `out` unless --out names a file; streaming commands read `in` unless
/// --in names a file. Diagnostics go to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mpc::cli
