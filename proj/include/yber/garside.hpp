#pragma once

#include <vector>

#include "yber/solution.hpp"

namespace yber {

/// An element of X^d; the empty word is the degree-0 identity.
using Word = std::vector<int>;

/// Delta^{n;k} on X^n, the product
///   k_n (r_{n-1}...r_1) k_n ... k_n (r_{n-1}r_{n-2}) k_n r_{n-1} k_n
/// read right to left (the rightmost k_n acts first). Conventions at the
/// bottom of the ladder: Delta^{0;k} = id on the empty word, Delta^{1;k} = k;
/// these are exactly what the degree-1 factors of the guitar map and the
/// p=0/q=0 cases of the product formulas need. The orientation is pinned by
/// Delta^{2;k} = k_2 r k_2.
Word garside_map(const FiniteSolution& sol, const PointMap& k, const Word& w);

/// J^{n;k}: i-th output is rho_{Delta^{n-i;k}(a_{i+1},...,a_n)}(a_i) for
/// i < n, last output a_n, where rho_{(b_1,...,b_m)} = rho_{b_m}...rho_{b_1}.
/// Requires RND. J^0 and J^1 are identities.
Word guitar_map(const FiniteSolution& sol, const PointMap& k, const Word& w);

/// Inverse of guitar_map, reconstructed suffix-first. Requires RND.
Word guitar_inverse(const FiniteSolution& sol, const PointMap& k, const Word& w);

/// lambda_u(v): the length-|v| left output of sliding the block u through the
/// block v with |u|*|v| crossings of r.
Word word_lambda(const FiniteSolution& sol, const Word& u, const Word& v);

/// rho_v(u): the length-|u| right output of the same block crossing.
Word word_rho(const FiniteSolution& sol, const Word& u, const Word& v);

struct EntwiningCheck {
    bool guitar_applicable;  // false when sol is not RND (r^(k) undefined)
    bool guitar_ok;          // J^{d;k} r_i = r^(k)_i J^{d;k}
    bool garside_ok;         // Delta^{d;k} r_i = r_{d-i} Delta^{d;k}
    bool ok() const { return garside_ok && (!guitar_applicable || guitar_ok); }
};

/// Checks both identities over all words in X^d and all 1 <= i < d. The
/// garside identity is checked even for non-RND solutions; the guitar one is
/// skipped there. k may be any candidate map; a non-reflection typically
/// produces a witness and a false verdict.
EntwiningCheck verify_entwining_detail(const FiniteSolution& sol, const PointMap& k, int degree);
bool verify_entwining(const FiniteSolution& sol, const PointMap& k, int degree);

struct ProductCheck {
    bool guitar_ok;   // J^{p+q;k}(uv) = J^{p;k}(rho_{Delta^{q;k}(v)}(u)) . J^{q;k}(v)
    bool garside_ok;  // Delta^{p+q;k}(uv) = lambda_u(Delta^{q;k}(v)) . Delta^{p;k}(rho_{...}(u))
    bool ok() const { return guitar_ok && garside_ok; }
};

/// Checks both product formulas over all (u,v) in X^p x X^q. Requires RND.
ProductCheck verify_product_formulas_detail(const FiniteSolution& sol, const PointMap& k,
                                            int p, int q);
bool verify_product_formulas(const FiniteSolution& sol, const PointMap& k, int p, int q);

}  // namespace yber
