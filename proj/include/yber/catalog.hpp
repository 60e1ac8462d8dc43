#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yber/solution.hpp"

namespace yber {

/// Permutation of {0..n-1} from 1-based disjoint-cycle notation, e.g.
/// "(132)", "(1 10 2)(3 4)", "()" for the identity. Single-character points
/// may be run together; multi-digit points need spaces or commas.
PointMap perm_from_cycles(int n, const std::string& cycles);

struct CatalogEntry {
    std::string name;
    std::string description;
    FiniteSolution solution;
};

/// Resolves a built-in name:
///   flip<n>            trivial solution (a,b) -> (b,a)
///   ex14               n=3, lambda_3 = rho_3 = (12), rest identity
///   ex15               n=4, lambda_a = (132), rho = (13),(12),(23),(123)
///   ex14-star          star extension of ex14 (element 4 is *)
///   perm<n>:<cycles>   permutation solution (a,b) -> (f(b), f^{-1}(a))
/// Returns nullopt when the name matches no catalog pattern.
std::optional<CatalogEntry> catalog_lookup(const std::string& name);

/// The fixed instance list the verification suites sweep over.
std::vector<CatalogEntry> catalog_standard_entries();

}  // namespace yber
