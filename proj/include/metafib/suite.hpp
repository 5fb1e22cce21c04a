#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metafib/bigint.hpp"

namespace metafib {

struct CheckResult {
  std::string id;
  std::string params;
  bool pass = false;
  double elapsed_ms = 0.0;
  std::string detail;  // empty on success
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id

  bool all_pass() const;
};

// Every default depth is multiplied by 2^depth.
struct SuiteOptions {
  int depth = 0;
  std::optional<Index> nmax;         // oracle grid / automata range / classifier table
  std::optional<std::size_t> order;  // series truncation order
  unsigned threads = 0;              // 0 selects the hardware concurrency
};

const std::vector<std::string>& suite_names();  // closed-forms ... classifier, all

// Reads METAFIB_DEPTH; nullopt when unset. Throws std::invalid_argument on
// anything but an integer in [0, 4].
std::optional<int> depth_from_env();

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace metafib
