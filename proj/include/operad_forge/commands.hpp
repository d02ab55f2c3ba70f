#pragma once

// The operad-forge command line, callable in-process.

#include "operad_forge/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace operad_forge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// OPERAD_FORGE_SEED if set and numeric, else 0.
std::uint64_t default_seed();

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

Report paper_tables_report(std::uint64_t seed);

} // namespace operad_forge
