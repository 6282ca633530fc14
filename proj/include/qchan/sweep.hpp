#pragma once

#include <string>
#include <vector>

#include "qchan/coherent_info.hpp"

namespace qchan {

enum class SweepModel { amplitude, dephrasure };
enum class SweepQuantity { q1B, q1C, delta2, delta2star, boundaries, asym_compare };

SweepModel parse_model(const std::string& text);
SweepQuantity parse_quantity(const std::string& text);

// Inclusive numeric grid.  parse accepts "lo:hi:step" (step > 0, hi included
// when it lies on the step lattice) or a comma-separated value list.
struct GridSpec {
  std::vector<double> values;
  static GridSpec parse(const std::string& text);
};

struct SweepRequest {
  SweepModel model = SweepModel::amplitude;
  SweepQuantity quantity = SweepQuantity::q1B;
  GridSpec p_grid;
  // Lambda values for q1B/q1C; distance below the positivity boundary for
  // delta2 / delta2star / asym_compare (delta2star additionally accepts an
  // empty grid, meaning "evaluate on the curve where the axis maximum moves").
  GridSpec lambda_grid;
  std::string output_path;
  int parallelism = 0;  // 0 = all available cores
  OptimizerConfig optimizer;
};

struct SweepOutcome {
  int exit_code = 0;  // 0 ok, 1 rows failed, 2 usage error
  int rows = 0;
  int failed = 0;
  std::string message;  // set on usage errors
};

// Evaluates every grid point (worker pool, deterministic output order),
// writes the CSV atomically to output_path, and reports the exit code.
SweepOutcome run_sweep(const SweepRequest& req);

}  // namespace qchan
