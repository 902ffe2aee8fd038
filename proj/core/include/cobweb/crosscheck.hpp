#pragma once

// The full equivalence suite: every module's invariants checked against
// independent routes at configurable bounds.

#include <cstdint>
#include <string>
#include <vector>

#include "cobweb/matrix.hpp"

namespace cobweb {

// Deliberate corruptions used to show the harness can fail.
enum class Fault {
  None,
  // Adds one to every interior fibonomial_def value seen by the harness.
  FibonomialOffByOne,
  // Flips one above-diagonal zeta entry seen by the harness.
  ZetaFlip,
};

struct CrosscheckConfig {
  std::uint32_t max_n = 10;
  std::uint32_t oracle_max_n = 7;
  unsigned jobs = 1;
  Fault fault = Fault::None;
};

// Throws std::invalid_argument on an inconsistent configuration.
void validate(const CrosscheckConfig& cfg);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<std::string> crosscheck_names();

// Runs every check (in parallel when cfg.jobs > 1) and returns results in
// registration order regardless of completion order. A check that throws
// is reported as failed.
std::vector<CheckResult> run_crosscheck(const CrosscheckConfig& cfg);

std::string format_table(const std::vector<CheckResult>& results);

// The top-left 16x16 block of the zeta matrix in its usual printed form,
// rows as strings of '0'/'1'.
const std::vector<std::string>& published_zeta_block();

// The single cell where that printing disagrees with the order:
// row 10 (<3,5>) and column 13 (<1,6>), printed as 0.
inline constexpr std::size_t kPrintedTypoRow = 10;
inline constexpr std::size_t kPrintedTypoCol = 13;

}  // namespace cobweb
