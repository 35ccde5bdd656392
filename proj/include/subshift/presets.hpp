// presets.hpp -- built-in example subshifts
#pragma once

#include <string>
#include <vector>

#include "subshift/io.hpp"

namespace subshift {

/// Names of the shipped presets, in canonical order.  Each one also exists as
/// presets/<name>.json in the repository; the built-in table is the authority
/// and a test keeps the files in sync.
const std::vector<std::string>& preset_names();

bool is_preset(const std::string& name);

/// Throws InvalidInput for unknown names.
SourceSpec preset_source(const std::string& name);

}  // namespace subshift
