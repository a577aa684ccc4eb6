#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bosent/mode_system.hpp"

namespace bosent::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kPhysics = 2 };

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SystemFile {
  ModeSpectrum spectrum;
  TransformRows rows;
};

/// Parses {"omegas": [...], "rows": [{"S": [[re, im], ...], "T": [...]}, {...}]}.
/// Throws ParseError on malformed input or inconsistent lengths.
SystemFile parse_system(const std::string& text);
std::string serialize_system(const ModeSpectrum& spectrum, const TransformRows& rows);

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Fixed 17-significant-digit rendering used by every numeric output.
std::string format_real(double v);

} // namespace bosent::cli
