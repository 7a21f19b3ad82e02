#include "atlas/fixtures.hpp"

#include <string>

#include "atlas/error.hpp"

namespace atlas {

std::string_view fixture_text(std::string_view name) {
  for (const auto& entry : detail::fixture_table())
    if (entry.name == name) return entry.text;
  fail(ErrorKind::InvalidArgument, "unknown fixture: " + std::string(name));
}

std::vector<std::string_view> fixture_names() {
  std::vector<std::string_view> names;
  for (const auto& entry : detail::fixture_table()) names.push_back(entry.name);
  return names;
}

}  // namespace atlas
