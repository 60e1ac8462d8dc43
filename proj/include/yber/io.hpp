#pragma once

#include <string>

#include "yber/solution.hpp"

namespace yber {

/// Text formats. All labels are 1-based. Canonical serializations round-trip
/// byte-identically through the parsers.
///
///   yber-solution v1        yber-reflection v1
///   n=<int>                 n=<int>
///   lambda=                 k=
///   <n rows of n ints>      <one row of n ints>
///   rho=
///   <n rows of n ints>

FiniteSolution parse_solution(const std::string& text);
std::string format_solution(const FiniteSolution& sol);

PointMap parse_reflection(const std::string& text);
std::string format_reflection(const PointMap& k);

}  // namespace yber
