#pragma once

#include <optional>
#include <vector>

#include "yber/solution.hpp"

namespace yber {

/// t(a,b) = lambda_{lambda_a(b)} k rho_b(a).
int t_map(const FiniteSolution& sol, const PointMap& k, int a, int b);
/// u(a,b) = rho_{k rho_b(a)} lambda_a(b).
int u_map(const FiniteSolution& sol, const PointMap& k, int a, int b);

/// First-coordinate reflection criterion t(a,k(b)) = t(a,b); valid (agrees
/// with the full reflection equation) exactly on involutive LND solutions,
/// which is enforced.
bool is_reflection_involutive_left(const FiniteSolution& sol, const PointMap& k);

/// Second-coordinate criterion u(a,k(b)) = k(u(a,b)); involutive RND only.
bool is_reflection_involutive_right(const FiniteSolution& sol, const PointMap& k);

enum class ReflectionCriterion { Auto, Brute, Left, Right };

struct ReflectionSet {
    int n = 0;
    std::vector<PointMap> reflections;               // lexicographic by image
    ReflectionCriterion used = ReflectionCriterion::Brute;
    int size() const { return (int)reflections.size(); }
};

/// Every k in X^X satisfying the reflection equation, in lexicographic order.
/// Auto picks the one-coordinate criterion for involutive LND/RND solutions
/// (cross-checked against the full equation on a sample) and brute force
/// otherwise. Refuses n > 8.
ReflectionSet enumerate_reflections(const FiniteSolution& sol,
                                    ReflectionCriterion criterion = ReflectionCriterion::Auto);

struct SufficientReflections {
    std::vector<PointMap> lambda_commuting;  // k lambda_a = lambda_a k for all a
    std::vector<PointMap> rho_fixing;        // rho_{k(a)} = rho_a for all a
};

/// The two sufficient families for an involutive solution (LND needed for the
/// first list, RND for the second). Every returned map passes the reflection
/// equation; this is asserted.
SufficientReflections sufficient_reflections(const FiniteSolution& sol);

/// Maps phi with lambda_a phi = phi lambda_a and rho_{phi(a)} = rho_a for all
/// a (equivalently r phi_2 = phi_1 r). Requires involutive.
std::vector<PointMap> twist_maps(const FiniteSolution& sol);

/// Finest partition of the reflection list closed under k -> phi k psi for
/// all twist maps phi, psi. Twist maps need not be invertible, so the
/// generated (symmetric-transitive) closure is taken. Returns index lists
/// into refls.reflections, each sorted, ordered by smallest member.
std::vector<std::vector<int>> equivalence_classes(const FiniteSolution& sol,
                                                  const ReflectionSet& refls);

/// r^(k) (psi x psi) = (psi x psi) r^(phi k psi) on all of X^2.
bool verify_equivalence_conjugation(const FiniteSolution& sol, const PointMap& k,
                                    const PointMap& phi, const PointMap& psi);

struct DerivedClass {
    FiniteSolution representative;   // from the lexicographically first reflection
    std::vector<PointMap> reflections;
};

/// Groups the derived solutions of all given reflections into isomorphism
/// classes, in order of first appearance.
std::vector<DerivedClass> classify_derived(const FiniteSolution& sol,
                                           const ReflectionSet& refls);

}  // namespace yber
