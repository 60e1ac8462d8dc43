#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "yber/errors.hpp"

namespace yber {

/// A map X -> X on X = {0..n-1}, stored as its image vector.
/// External interfaces use 1-based labels; everything in here is 0-based.
class PointMap {
public:
    PointMap(int n, std::vector<int> image);

    static PointMap identity(int n);
    static PointMap constant(int n, int value);

    int size() const { return n_; }
    int operator()(int a) const { return image_[a]; }
    bool is_bijective() const { return bijective_; }
    const std::vector<int>& image() const { return image_; }

    /// Inverse map; requires bijectivity.
    PointMap inverse() const;
    /// this ∘ other (apply other first).
    PointMap compose(const PointMap& other) const;

    friend bool operator==(const PointMap&, const PointMap&) = default;
    friend auto operator<=>(const PointMap& a, const PointMap& b) {
        return a.image_ <=> b.image_;
    }

private:
    int n_;
    std::vector<int> image_;
    bool bijective_;
};

/// A candidate set-theoretic Yang-Baxter map on X = {0..n-1}, encoded by its
/// lookup tables:  r(a,b) = (lambda_a(b), rho_b(a)).
///
/// Construction only validates table ranges; whether the map actually
/// satisfies the Yang-Baxter equation (or anything else) is the business of
/// the predicate functions below, so non-solutions are representable as
/// search candidates and negative test cases.
class FiniteSolution {
public:
    /// Tables are flat row-major, 0-based: lambda[a*n+b] = lambda_a(b),
    /// rho[b*n+a] = rho_b(a).
    FiniteSolution(int n, std::vector<int> lambda, std::vector<int> rho);

    int size() const { return n_; }

    int lambda(int a, int b) const { return lam_[a * n_ + b]; }
    int rho(int b, int a) const { return rho_[b * n_ + a]; }

    /// lambda_a^{-1}(x); requires LND.
    int lambda_inv(int a, int x) const;
    /// rho_b^{-1}(x); requires RND.
    int rho_inv(int b, int x) const;

    bool rnd() const { return rnd_; }  // all rho_b bijective
    bool lnd() const { return lnd_; }  // all lambda_a bijective

    /// r(a,b); validates the element range.
    std::pair<int, int> apply(int a, int b) const;

    std::span<const int> lambda_row(int a) const { return {lam_.data() + a * n_, (size_t)n_}; }
    std::span<const int> rho_row(int b) const { return {rho_.data() + b * n_, (size_t)n_}; }
    const std::vector<int>& lambda_table() const { return lam_; }
    const std::vector<int>& rho_table() const { return rho_; }

    friend bool operator==(const FiniteSolution&, const FiniteSolution&) = default;

private:
    int n_;
    std::vector<int> lam_, rho_;       // n*n each
    std::vector<int> lam_inv_, rho_inv_;  // filled iff lnd_/rnd_
    bool rnd_, lnd_;
};

/// Outcome of the predicate battery. When ybe is false the remaining fields
/// are still computed from the tables but carry no structural meaning.
struct PredicateReport {
    bool ybe = false;
    bool rnd = false;
    bool lnd = false;
    bool involutive = false;
    bool invertible = false;
    // Minimal (s,t), s > t >= 0, with r^s = r^t as maps on X^2.
    std::pair<std::uint64_t, std::uint64_t> power_pair{0, 0};
};

/// r_1 r_2 r_1 = r_2 r_1 r_2 on all of X^3.
bool check_ybe(const FiniteSolution& sol);

/// r k_2 r k_2 = k_2 r k_2 r on all of X^2 (rightmost factor applied first).
bool check_re(const FiniteSolution& sol, const PointMap& k);

/// (rnd, lnd): every rho_b / lambda_a bijective.
std::pair<bool, bool> check_degeneracy(const FiniteSolution& sol);

struct PowerProfile {
    bool involutive;
    bool invertible;
    std::pair<std::uint64_t, std::uint64_t> power_pair;
};

/// Involutivity, invertibility, and the minimal power relation r^s = r^t,
/// found with Floyd cycle detection on the iterates of r in map space.
PowerProfile check_involutive_invertible(const FiniteSolution& sol);

PredicateReport predicate_report(const FiniteSolution& sol);

/// First bijection sigma (lexicographic by image vector) with
/// (sigma x sigma) . r1 = r2 . (sigma x sigma), or nullopt. Brute force over
/// S_n; refuses n > 8.
std::optional<PointMap> solutions_isomorphic(const FiniteSolution& s1,
                                             const FiniteSolution& s2);

}  // namespace yber
