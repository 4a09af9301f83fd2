#pragma once

#include <string>
#include <vector>

#include "bimult/symbols.hpp"

namespace bimult {

/// Resolve a symbol id as used in CLI configs. Base ids: one, bht, tent,
/// box, fejer2, trig, tentcell, boxmoll, bhtcell. A "-periodized" suffix
/// wraps a cell-supported symbol with periodize_symbol. Unknown ids raise
/// ConfigError naming the offending id.
Symbol2D symbol_by_id(const std::string& id);

/// All ids symbol_by_id accepts, with one-line descriptions.
std::vector<std::pair<std::string, std::string>> symbol_catalogue();

}  // namespace bimult
