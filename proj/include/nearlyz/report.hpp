#pragma once

#include <string>
#include <vector>

#include "nearlyz/extremal.hpp"

namespace nearlyz {

/// Versioned JSON ("schema": 1). Counts are decimal strings. Timing is left
/// out unless asked for, so equal inputs give byte-identical output.
std::string report_json(const ExtremalReport &report, bool with_elapsed = false);
std::string result_json(const std::vector<VerificationResult> &results);

/// Aligned plain-text tables.
std::string report_text(const ExtremalReport &report);
std::string result_text(const VerificationResult &result);

} // namespace nearlyz
