#pragma once

#include <cstdint>
#include <vector>

#include "yber/garside.hpp"
#include "yber/solution.hpp"

namespace yber {

/// Degree-d component of the structure monoid: the partition of X^d generated
/// by w ~ r_i(w) for 1 <= i < d. Words are handled through their ranks
/// (row-major base-n encoding, so numeric order = lexicographic order and the
/// smallest rank in a class is its canonical representative).
class GradedQuotient {
public:
    GradedQuotient(int n, int degree, std::vector<int> class_of, int class_count);

    int n() const { return n_; }
    int degree() const { return degree_; }
    std::uint64_t word_count() const { return (std::uint64_t)class_of_.size(); }
    int class_count() const { return class_count_; }

    int class_of_rank(std::uint64_t rank) const { return class_of_[rank]; }
    int class_of(const Word& w) const { return class_of_[rank_of(w)]; }

    /// Class members as sorted ranks; classes are indexed by increasing
    /// canonical representative.
    const std::vector<std::vector<std::uint64_t>>& classes() const { return classes_; }

    std::uint64_t rank_of(const Word& w) const;
    Word unrank(std::uint64_t rank) const;

private:
    int n_, degree_, class_count_;
    std::vector<int> class_of_;
    std::vector<std::vector<std::uint64_t>> classes_;
};

/// Union-find closure of {w ~ r_i(w)} over X^d. Refuses when n^d exceeds the
/// 10^7-word materialization budget.
GradedQuotient graded_component(const FiniteSolution& sol, int degree);

/// True iff the guitar map sends every degree-d class of r into a single
/// class of r^(k) and induces a bijection between the two class sets.
bool verify_graded_bijection(const FiniteSolution& sol, const PointMap& k, int degree);

/// Left action of degree-d words on X through right <|_k translations,
/// act(w, a) = (..((a <|_k w_d) <|_k w_{d-1}) .. <|_k w_1), checked to be
/// constant on every class of the degree-d component of r^(k).
bool verify_monoid_action(const FiniteSolution& sol, const PointMap& k, int degree);

}  // namespace yber
