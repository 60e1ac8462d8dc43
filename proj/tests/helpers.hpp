#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "yber/catalog.hpp"
#include "yber/solution.hpp"

namespace ytest {

// Rows of 1-based images: lambda row a = lambda_a(1..n), rho row b = rho_b(1..n).
inline yber::FiniteSolution make_sol(std::initializer_list<std::vector<int>> lambda,
                                     std::initializer_list<std::vector<int>> rho) {
    const int n = (int)lambda.size();
    std::vector<int> lam, rh;
    for (const auto& row : lambda)
        for (int x : row) lam.push_back(x - 1);
    for (const auto& row : rho)
        for (int x : row) rh.push_back(x - 1);
    return yber::FiniteSolution(n, std::move(lam), std::move(rh));
}

// 1-based image vector.
inline yber::PointMap pm(std::initializer_list<int> image) {
    std::vector<int> img;
    for (int x : image) img.push_back(x - 1);
    const int n = (int)img.size();
    return yber::PointMap(n, std::move(img));
}

inline yber::FiniteSolution cat(const std::string& name) {
    return yber::catalog_lookup(name)->solution;
}

// "213" style 1-based digit string for a point map, for terse assertions.
inline std::string digits(const yber::PointMap& k) {
    std::string s;
    for (int x : k.image()) s += (char)('1' + x);
    return s;
}

// Constant non-RND YBE solution r(a,b) = (1,1) on two elements.
inline yber::FiniteSolution const_one() {
    return make_sol({{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
}

}  // namespace ytest
