#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dwork/matrix.hpp"

namespace dwork {

/// Solves M x = rhs over ℚ(λ). Each row is first cleared of denominators,
/// then eliminated fraction-free over ℚ[λ] (rows are kept primitive by
/// dividing out their polynomial content). Free variables are set to 0.
/// Returns nullopt when the system is inconsistent.
std::optional<std::vector<RationalFunction>> linsolve_ratfun(const RatFunMatrix& m,
                                                             const std::vector<RationalFunction>& rhs);

/// Columns chosen as pivots when eliminating column by column in order;
/// these index a basis of the column space, greedily from the left.
std::vector<std::size_t> pivot_columns(const RatFunMatrix& m);

}  // namespace dwork
