#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rbl {

/// Upper bound on the number of distinct formal parameters in one process.
inline constexpr std::size_t kMaxVariables = 48;

using VarId = std::uint8_t;

/// Global, append-only registry of formal parameters. The registration order
/// is the lexicographic variable order used for every canonical form; the
/// first entries are fixed: a, b, k, x1, x2, x3, y1, y2, y3, sa, sb, then the
/// operator unknowns r11 .. r33.
VarId variable(std::string_view name);
std::optional<VarId> find_variable(std::string_view name);
const std::string& variable_name(VarId id);
std::size_t variable_count();

bool is_valid_variable_name(std::string_view name);

}  // namespace rbl
