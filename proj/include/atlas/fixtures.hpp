#pragma once

#include <string_view>
#include <vector>

namespace atlas {

/// Text of an embedded data file (data/fixtures/NAME.txt). Throws if absent.
std::string_view fixture_text(std::string_view name);
/// Names of all embedded data files, sorted.
std::vector<std::string_view> fixture_names();

namespace detail {
struct FixtureEntry {
  std::string_view name;
  std::string_view text;
};
const std::vector<FixtureEntry>& fixture_table();
}  // namespace detail

}  // namespace atlas
