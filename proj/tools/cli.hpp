#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "burau_lab/moduli.hpp"

namespace burau_lab::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,         // unexpected error, or a check that came out false
  kParseError = 2,      // malformed word, polynomial, flag or list
  kInvalidInput = 3,    // inadmissible (n, d, m)
  kFixtureMismatch = 4  // built-in kernel table disagrees with the published rows
};

// One row of `moduli kernel-table`.
struct KernelRow {
  int n = 0;
  int d = 0;
  bool admissible = true;
  std::optional<KernelAnalysis> analysis;
};

// The fixed-width table (rows n, d, j, l) followed by one detail line per row.
std::string render_kernel_table(const std::vector<KernelRow>& rows);

// "5", "5,6,7", "7..12" and mixtures such as "3,7..9".
std::vector<int> parse_int_list(const std::string& text);

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burau_lab::cli
