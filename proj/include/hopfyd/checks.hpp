/// @file checks.hpp
/// @brief Small helpers shared by all law checkers.

#pragma once

#include <string>

#include "hopfyd/report.hpp"
#include "hopfyd/tensor.hpp"

namespace hopfyd {

/// Basis label of a multi-index, e.g. "g1⊗x^" ("1" for the empty index).
std::string basisLabel(const LegList& legs, const MultiIndex& idx);

/// Compare two maps column against column in lexicographic domain order; on
/// failure the witness is the smallest basis tensor where they differ.
CheckResult checkMapEqual(const std::string& id, const StructureMap& lhs,
                          const StructureMap& rhs);

}  // namespace hopfyd
