#pragma once

#include <string>

#include "json.hpp"

namespace lq::cli {

using Report = nlohmann::ordered_json;

// Human-readable rendering: nested keys become indented lines and integer matrices
// become aligned tables.
std::string render_pretty(const Report& r);

}  // namespace lq::cli
