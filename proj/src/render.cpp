#include "ladder/cli.hpp"

#include <algorithm>

namespace ladder {

std::string render_ascii(const LadderRegion &region,
                         std::span<const LatticePath> paths,
                         const Marks &marks) {
  const int A = region.max_y(), B = region.max_x();
  std::vector<std::string> grid(static_cast<std::size_t>(A) + 1,
                                std::string(static_cast<std::size_t>(B) + 1,
                                            ' '));
  auto cell = [&](Point p) -> char * {
    if (p.x < 0 || p.x > B || p.y < 0 || p.y > A)
      return nullptr;
    return &grid[static_cast<std::size_t>(p.y)][static_cast<std::size_t>(p.x)];
  };
  for (Point p : region.points())
    *cell(p) = '.';
  for (Point s : marks.se)
    if (char *c = cell(s))
      *c = 'S';
  for (Point t : marks.nw)
    if (char *c = cell(t))
      *c = 'T';
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const char digit = static_cast<char>('1' + std::min<std::size_t>(k, 8));
    for (Point p : paths[k].points())
      if (char *c = cell(p))
        *c = digit;
    for (Point p : ne_turns(paths[k]))
      if (std::find(marks.nw.begin(), marks.nw.end(), p) == marks.nw.end())
        if (char *c = cell(p))
          *c = '*';
  }
  std::string out;
  for (int y = A; y >= 0; --y) {
    std::string line = grid[static_cast<std::size_t>(y)];
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

} // namespace ladder
