#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hilbfam/theorems.hpp"

namespace hilbfam {

struct BatchOptions {
  std::uint32_t p_max = 3;
  unsigned n_max = 9;   // ground-set sizes for the MAIN/MAIN2 sweep
  unsigned grid_n_max = 3;
  unsigned jobs = 1;
};

// Fixed-order list of checks: for each prime p <= p_max, HRUBES and HLEMMA;
// MAIN2 and MAIN for every q = p^a <= p_max^2, n <= n_max and
// q-1 <= d <= n-q+1; GRID_REMARK for every grid with n <= grid_n_max and
// coordinate sets of size >= 2, every w.
std::vector<std::function<VerificationReport()>> batch_checks(const BatchOptions& opts);

// Runs the checks on opts.jobs threads; results are in check order.
std::vector<VerificationReport> run_batch(const BatchOptions& opts);

}  // namespace hilbfam
