#pragma once

#include "ladder/lattice_paths.hpp"
#include "ladder/region.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ladder {

/// A ladder with a minor.
struct Instance {
  LadderRegion region;
  Minor minor;
};

/// A stand-alone single-path gate problem.
struct SlalomSpec {
  Point start{};
  Point end{};
  std::vector<Point> se;
  std::vector<Point> nw;
};

/// A decoded problem file. At least one of the two parts is present.
struct Problem {
  std::optional<Instance> instance;
  std::optional<SlalomSpec> slalom;
};

/// Decodes the JSON problem format:
///
///   {"schema": 1, "A": 15, "B": 13, "u": [3,5,6], "v": [1,2,4],
///    "region": "full" | {"upper_corners": [[x,y],...]}
///            | {"corners": {"upper": [...], "lower": [...]}}
///            | {"rows": [[lo,hi],...]}
///            | {"corners": ..., "rows": ...},
///    "slalom": {"start": [x,y], "end": [x,y], "se": [...], "nw": [...]}}
///
/// "schema" is optional but must be 1 when given. A region given both by
/// corners and by rows must describe the same ladder. Unknown keys are
/// rejected. Throws InvalidInput with the offending field in the message.
Problem parse_problem(std::string_view text);

} // namespace ladder
