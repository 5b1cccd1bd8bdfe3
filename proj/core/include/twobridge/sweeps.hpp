#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/conway.hpp"

namespace twobridge {

/// Calls `f` on every word whose entries sum to exactly `total`.
void for_each_word(int total, const std::function<void(const ConwayWord&)>& f);

struct Table1Row {
  std::vector<int> pattern;  // 0 marks a free entry
  int value = 1;
  bool exact = true;  // value is the exact invariant rather than an upper bound
  std::string str() const;
};
const std::vector<Table1Row>& table1_rows();
/// All instantiations with free entries in 1..param_max.
std::vector<ConwayWord> instantiate(const Table1Row& row, int param_max);

struct SweepParams {
  std::optional<int> max_crossings;
  std::optional<int> param_max;
};

struct SweepReport {
  std::string suite;
  std::int64_t checked = 0;
  std::vector<std::string> failures;
  /// A search hit its size or crossing budget.
  bool budget_exhausted = false;
  bool passed() const { return failures.empty() && !budget_exhausted; }
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for unknown suites.
SweepReport run_suite(const std::string& name, const SweepParams& params = {});

SweepReport sweep_cmn_exact(int max_crossings = 12);
SweepReport sweep_certificates(int max_crossings = 16);
SweepReport sweep_arf_knots(int max_crossings = 14);
SweepReport sweep_arf_welldef(int max_crossings = 10, int max_selection = 4);
SweepReport sweep_table1(int param_max = 4);
SweepReport sweep_euler(int max_crossings = 20);

}  // namespace twobridge
