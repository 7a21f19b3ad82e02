#include <set>

#include "atlas/error.hpp"
#include "atlas/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace atlas;

TEST_CASE("suite items are unique and cover every criterion") {
  std::set<std::string> ids;
  std::set<int> criteria;
  for (const auto& item : verify_items()) {
    CHECK(ids.insert(item.id).second);
    criteria.insert(item.criterion);
  }
  CHECK(criteria.size() == verify_criteria().size());
}

TEST_CASE("filters") {
  for (const auto& item : verify_items()) {
    CHECK(item_selected(item, ""));
    CHECK(item_selected(item, "all"));
    CHECK(item_selected(item, "c" + std::to_string(item.criterion)));
    CHECK(item_selected(item, "figures") == (item.id.rfind("figure-", 0) == 0 || item.id == "coincidence-d8"));
  }
  CHECK_THROWS_AS(run_suite("no-such-item"), Error);
}

TEST_CASE("suite outcome") {
  const auto report = run_suite("", 4);
  std::set<std::string> failing;
  for (const auto& item : report.items)
    if (!item.pass) failing.insert(item.id);
  // Three displayed rules fail as printed; see the fusion fixture notes.
  CHECK(failing == std::set<std::string>{"fusion-A-series", "fusion-M-series", "fusion-sigma2-series"});
  for (const auto& c : report.criteria) CHECK(c.pass == (c.number != 8));
  CHECK_FALSE(report.pass());
}

TEST_CASE("suite output does not depend on scheduling") {
  const auto serial = run_suite("frobenius", 1);
  const auto parallel = run_suite("frobenius", 8);
  CHECK(suite_to_text(serial, false) == suite_to_text(parallel, false));
  CHECK(suite_to_json(serial, false) == suite_to_json(parallel, false));
  const auto j = nlohmann::json::parse(suite_to_json(serial));
  CHECK(j["schema"] == "sector-atlas/verify/1");
  CHECK(j["pass"] == true);
  CHECK(j["items"][0].contains("seconds"));
}
