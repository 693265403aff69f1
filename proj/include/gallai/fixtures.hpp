#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Named literature graphs shipped as data files under data/fixtures.
/// Throws std::out_of_range for an unknown name.
Graph fixture(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace gallai
