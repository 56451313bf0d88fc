#pragma once

#include <optional>
#include <vector>

namespace asgl {

/// Solves M y = b over F_p by Gaussian elimination. M is given row by row with
/// entries in [0, p). Returns one solution (free variables set to 0), or
/// nothing if the system is inconsistent.
std::optional<std::vector<int>> solve_mod_p(std::vector<std::vector<int>> M, std::vector<int> b, int p);

}  // namespace asgl
