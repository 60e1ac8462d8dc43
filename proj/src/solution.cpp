#include "yber/solution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace yber {

namespace {

bool is_permutation_0based(std::span<const int> v) {
    std::vector<char> seen(v.size(), 0);
    for (int x : v) {
        if (x < 0 || x >= (int)v.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

void check_table_range(int n, const std::vector<int>& t, const char* name) {
    if ((int)t.size() != n * n)
        throw SizeError(std::string(name) + " table must have n*n entries");
    for (int x : t)
        if (x < 0 || x >= n)
            throw RangeError(std::string(name) + " table entry out of range");
}

}  // namespace

PointMap::PointMap(int n, std::vector<int> image) : n_(n), image_(std::move(image)) {
    if (n_ <= 0) throw RangeError("point map needs n >= 1");
    if ((int)image_.size() != n_) throw SizeError("point map image must have n entries");
    for (int x : image_)
        if (x < 0 || x >= n_) throw RangeError("point map entry out of range");
    bijective_ = is_permutation_0based(image_);
}

PointMap PointMap::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return PointMap(n, std::move(v));
}

PointMap PointMap::constant(int n, int value) {
    return PointMap(n, std::vector<int>(n, value));
}

PointMap PointMap::inverse() const {
    if (!bijective_) throw PreconditionError("point map is not bijective");
    std::vector<int> inv(n_);
    for (int i = 0; i < n_; i++) inv[image_[i]] = i;
    return PointMap(n_, std::move(inv));
}

PointMap PointMap::compose(const PointMap& other) const {
    if (other.n_ != n_) throw SizeError("composing point maps of different order");
    std::vector<int> v(n_);
    for (int i = 0; i < n_; i++) v[i] = image_[other.image_[i]];
    return PointMap(n_, std::move(v));
}

FiniteSolution::FiniteSolution(int n, std::vector<int> lambda, std::vector<int> rho)
    : n_(n), lam_(std::move(lambda)), rho_(std::move(rho)) {
    if (n_ <= 0) throw RangeError("solution needs n >= 1");
    check_table_range(n_, lam_, "lambda");
    check_table_range(n_, rho_, "rho");
    lnd_ = true;
    for (int a = 0; a < n_ && lnd_; a++) lnd_ = is_permutation_0based(lambda_row(a));
    rnd_ = true;
    for (int b = 0; b < n_ && rnd_; b++) rnd_ = is_permutation_0based(rho_row(b));
    if (lnd_) {
        lam_inv_.resize(lam_.size());
        for (int a = 0; a < n_; a++)
            for (int b = 0; b < n_; b++) lam_inv_[a * n_ + lam_[a * n_ + b]] = b;
    }
    if (rnd_) {
        rho_inv_.resize(rho_.size());
        for (int b = 0; b < n_; b++)
            for (int a = 0; a < n_; a++) rho_inv_[b * n_ + rho_[b * n_ + a]] = a;
    }
}

int FiniteSolution::lambda_inv(int a, int x) const {
    if (!lnd_) throw PreconditionError("lambda_a is not bijective (solution not LND)");
    return lam_inv_[a * n_ + x];
}

int FiniteSolution::rho_inv(int b, int x) const {
    if (!rnd_) throw PreconditionError("rho_b is not bijective (solution not RND)");
    return rho_inv_[b * n_ + x];
}

std::pair<int, int> FiniteSolution::apply(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw RangeError("element out of range in apply");
    return {lambda(a, b), rho(b, a)};
}

bool check_ybe(const FiniteSolution& sol) {
    const int n = sol.size();
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++) {
                // r_1 r_2 r_1
                auto [x1, y1] = sol.apply(a, b);
                auto [y2, z2] = sol.apply(y1, c);
                auto [x3, y3] = sol.apply(x1, y2);
                // r_2 r_1 r_2
                auto [p1, q1] = sol.apply(b, c);
                auto [u2, p2] = sol.apply(a, p1);
                auto [q3, v3] = sol.apply(p2, q1);
                if (x3 != u2 || y3 != q3 || z2 != v3) return false;
            }
    return true;
}

bool check_re(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    if (k.size() != n) throw SizeError("reflection candidate has wrong order");
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            // r k_2 r k_2
            auto [x, y] = sol.apply(a, k(b));
            auto lhs = sol.apply(x, k(y));
            // k_2 r k_2 r
            auto [u, v] = sol.apply(a, b);
            auto [p, q] = sol.apply(u, k(v));
            if (lhs.first != p || lhs.second != k(q)) return false;
        }
    return true;
}

std::pair<bool, bool> check_degeneracy(const FiniteSolution& sol) {
    return {sol.rnd(), sol.lnd()};
}

namespace {

// One application of "compose with r" on a tabulated map X^2 -> X^2.
std::vector<int> step_power(const FiniteSolution& sol, const std::vector<int>& f) {
    const int n = sol.size();
    std::vector<int> g(f.size());
    for (size_t i = 0; i < f.size(); i++) {
        int a = f[i] / n, b = f[i] % n;
        auto [x, y] = sol.apply(a, b);
        g[i] = x * n + y;
    }
    return g;
}

}  // namespace

PowerProfile check_involutive_invertible(const FiniteSolution& sol) {
    const int n = sol.size();
    std::vector<int> r0(n * n);
    std::iota(r0.begin(), r0.end(), 0);
    std::vector<int> r1 = step_power(sol, r0);

    bool invertible = is_permutation_0based(r1);
    bool involutive = step_power(sol, r1) == r0;

    PowerProfile out{involutive, invertible, {0, 0}};
    if (involutive) {
        out.power_pair = (r1 == r0) ? std::pair<std::uint64_t, std::uint64_t>{1, 0}
                                    : std::pair<std::uint64_t, std::uint64_t>{2, 0};
        return out;
    }

    // Floyd cycle detection on the sequence r^0, r^1, r^2, ... in map space.
    std::vector<int> slow = r0, fast = r0;
    do {
        slow = step_power(sol, slow);
        fast = step_power(sol, step_power(sol, fast));
    } while (slow != fast);
    // tail length t: restart one pointer from r^0
    std::uint64_t t = 0;
    slow = r0;
    while (slow != fast) {
        slow = step_power(sol, slow);
        fast = step_power(sol, fast);
        t++;
    }
    // cycle length c
    std::uint64_t c = 1;
    fast = step_power(sol, slow);
    while (fast != slow) {
        fast = step_power(sol, fast);
        c++;
    }
    out.power_pair = {t + c, t};
    return out;
}

PredicateReport predicate_report(const FiniteSolution& sol) {
    PredicateReport rep;
    rep.ybe = check_ybe(sol);
    std::tie(rep.rnd, rep.lnd) = check_degeneracy(sol);
    auto pp = check_involutive_invertible(sol);
    rep.involutive = pp.involutive;
    rep.invertible = pp.invertible;
    rep.power_pair = pp.power_pair;
    return rep;
}

std::optional<PointMap> solutions_isomorphic(const FiniteSolution& s1,
                                             const FiniteSolution& s2) {
    const int n = s1.size();
    if (s2.size() != n) throw SizeError("isomorphism test needs equal orders");
    if (n > 8) throw ResourceError("isomorphism search limited to n <= 8");
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; a++)
            for (int b = 0; b < n; b++) {
                auto [x, y] = s1.apply(a, b);
                auto [u, v] = s2.apply(sigma[a], sigma[b]);
                if (sigma[x] != u || sigma[y] != v) {
                    ok = false;
                    break;
                }
            }
        if (ok) return PointMap(n, sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

}  // namespace yber
