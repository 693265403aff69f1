#include "gallai/fixtures.hpp"

#include <stdexcept>

#include "gallai/fixture_data.hpp"
#include "gallai/graph_io.hpp"

namespace gallai {

Graph fixture(std::string_view name) {
  for (const auto& [key, text] : detail::kFixtureData)
    if (key == name) return parse_edge_list(text);
  throw std::out_of_range("unknown fixture \"" + std::string(name) + "\"");
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::kFixtureData) out.emplace_back(entry.first);
  return out;
}

}  // namespace gallai
