#pragma once

#include <functional>
#include <string>
#include <vector>

namespace atlas {

struct VerifyOutcome {
  bool pass = false;
  std::string detail;
};

/// One independent check of the acceptance suite.
struct VerifyItem {
  std::string id;
  int criterion = 0;
  std::vector<std::string> tags;
  std::function<VerifyOutcome()> run;
};

struct VerifyCriterion {
  int number = 0;
  std::string title;
  double budget_seconds = 0;
};

struct ItemResult {
  std::string id;
  int criterion = 0;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::size_t items = 0;
  std::size_t passed = 0;
  double seconds = 0;  ///< sum of item times
  double budget_seconds = 0;
  bool pass = false;   ///< every item passed within the budget
};

struct SuiteReport {
  std::vector<ItemResult> items;          ///< canonical item order
  std::vector<CriterionResult> criteria;  ///< criteria with at least one selected item
  bool pass() const;
};

const std::vector<VerifyCriterion>& verify_criteria();
/// The full suite in canonical order.
std::vector<VerifyItem> verify_items();

/// An item is selected when the filter is empty, "all", equal to a tag, a prefix of its id,
/// or "c<N>" for its criterion number.
bool item_selected(const VerifyItem& item, const std::string& filter);

/// Runs the selected items on `jobs` threads; results do not depend on scheduling.
SuiteReport run_suite(const std::string& filter = "", unsigned jobs = 1);

/// `timing` adds per-item and per-criterion seconds, which vary between runs.
std::string suite_to_text(const SuiteReport& report, bool timing = true);
/// Schema "sector-atlas/verify/1".
std::string suite_to_json(const SuiteReport& report, bool timing = true);

}  // namespace atlas
