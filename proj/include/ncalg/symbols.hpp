#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ncalg {

/// Interned parameter symbol. Ids are assigned in first-use order and that
/// order is the canonical variable order for printing (first interned is the
/// largest variable under grevlex).
using SymbolId = std::uint32_t;

SymbolId intern_symbol(std::string_view name);
const std::string& symbol_name(SymbolId id);

/// Returns a symbol whose name starts with `prefix` and has never been handed
/// out before. Used for Rabinowitsch saturation variables.
SymbolId fresh_symbol(std::string_view prefix);

bool symbol_exists(std::string_view name);

}  // namespace ncalg
