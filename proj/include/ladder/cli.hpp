#pragma once

#include "ladder/lattice_paths.hpp"
#include "ladder/problem.hpp"
#include "ladder/region.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ladder {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid_input = 1;
inline constexpr int assumption = 2;
inline constexpr int too_large = 3;
inline constexpr int verify_mismatch = 4;
} // namespace exit_code

struct RunOptions {
  bool verify = false;
  bool json = false;
  /// Hilbert-function values to print.
  int coeffs = 10;
  /// Oracle step budget.
  int budget = 26;
};

struct RunResult {
  int exit_code = exit_code::ok;
  std::string out;
  std::string err;
};

/// Subcommands: a-invariant, max-turns, slalom, oracle, hilbert, validate,
/// render.
RunResult run(std::string_view command, const Problem &problem,
              const RunOptions &options);

/// Parses `text` and runs; parse failures come back as exit code 1.
RunResult run_text(std::string_view command, std::string_view text,
                   const RunOptions &options);

struct Marks {
  std::vector<Point> se;
  std::vector<Point> nw;
};

/// ASCII picture with the origin at the bottom left: '.' for ladder points,
/// path k drawn with the digit k, '*' on counted NE-turns, 'S' and 'T' on
/// gates not covered by a path. Outside the ladder stays blank.
std::string render_ascii(const LadderRegion &region,
                         std::span<const LatticePath> paths,
                         const Marks &marks = {});

} // namespace ladder
