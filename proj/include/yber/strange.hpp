#pragma once

#include <cstdint>
#include <vector>

#include "yber/derive.hpp"
#include "yber/solution.hpp"

namespace yber {

/// (a*b)*a = b*a on all pairs, for a raw row-major table t[a*n+b] = a*b.
bool is_strange_table(int n, const std::vector<int>& table);
bool is_strange(const BinaryOp& op);

/// The operation b * a = lambda_b k lambda_b^{-1}(a) attached to a candidate
/// reflection of an involutive LND solution; table entry (b,a). The
/// assignment k -> op is injective (k = lambda_b^{-1} l_b lambda_b for any b)
/// and k satisfies the reflection equation iff the result is strange.
BinaryOp reflection_to_strange(const FiniteSolution& sol, const PointMap& k);

/// The lambda-only one-relation reflection test for involutive LND
/// solutions: strangeness of reflection_to_strange(sol, k).
bool strange_criterion(const FiniteSolution& sol, const PointMap& k);

/// b ⇀ a = lambda_b k lambda_b^{-1}(a); table entry (b,a). Requires LND.
BinaryOp harpoon_up(const FiniteSolution& sol, const PointMap& k);

/// b ⇁ a = rho^{-1}_{lambda_a^{-1}(b)} k rho_{lambda_a^{-1}(b)}(a); table
/// entry (b,a). Requires LND plus every rho_c bijective.
BinaryOp harpoon_down(const FiniteSolution& sol, const PointMap& k);

/// Reflection test for invertible LND solutions via the left-shelf system
///   (b ⇀ a) |>_k b = a |>_k b
///   (a |>_k b) ⇁ a = b ⇀ a
/// Agrees with the reflection equation; on involutive solutions both lines
/// collapse to the strange axiom.
bool general_re_criterion(const FiniteSolution& sol, const PointMap& k);

/// Number of strange operations on an n-set up to isomorphism (simultaneous
/// relabeling of both arguments and values). Burnside over the conjugacy
/// classes of S_n; each fixed-table count runs the backtracking counter.
/// threads <= 0 picks a default. Refuses n outside 1..5.
std::uint64_t count_strange(int n, int threads = 0);

/// Raw number of strange tables on an n-set (no identification).
std::uint64_t count_strange_tables(int n, int threads = 0);

/// Number of strange tables fixed by the relabeling sigma,
/// t(sigma a, sigma b) = sigma(t(a,b)). Exposed for the Burnside cross-checks.
std::uint64_t count_strange_fixed(int n, const PointMap& sigma, int threads = 0);

/// Canonical (lexicographically least in its isomorphism orbit)
/// representative of every strange-operation class, in row-major
/// lexicographic order. Naive filter; refuses n > 3.
std::vector<BinaryOp> list_strange(int n);

}  // namespace yber
