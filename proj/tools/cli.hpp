#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tempered/error.hpp"
#include "tempered/group.hpp"
#include "tempered/matching.hpp"

namespace tempered::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kTheoremViolation = 3,
  kAmbiguousMatch = 4,
  kRangeError = 5,
};

int exit_code_for(Errc code);

struct IntRange {
  long lo = 0;
  long hi = 0;
};

/// "a:b" with a <= b.
IntRange parse_range(const std::string& text);

/// One position of the minimal K-type grid of a rank-two group.
struct GridCell {
  enum class Kind { Empty, Bullet, Component };
  long m = 0;
  long n = 0;
  Kind kind = Kind::Empty;
  std::string id;  // "N<k>-<kappa>" for components with N >= 1
  Weight kappa;
};

struct LegendEntry {
  std::string id;
  Weight kappa;
  std::size_t levi_rank = 0;
  std::vector<Weight> cells;
};

/// Rows run over n from the top of the range downward, columns over m
/// left to right. Only dominant positions appear in `cells`.
struct Grid {
  IntRange m_range;
  IntRange n_range;
  Rational radius;
  std::vector<GridCell> cells;
  std::vector<LegendEntry> legend;

  const GridCell* at(long m, long n) const;
};

Grid build_grid(const RealFormDescriptor& d, IntRange m_range, IntRange n_range);
std::string render_grid_text(const Grid& g);
std::string render_grid_csv(const Grid& g);

/// Runs the command line; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tempered::cli
