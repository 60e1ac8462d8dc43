#include "yber/derive.hpp"

namespace yber {

BinaryOp::BinaryOp(int n, std::vector<int> table, OpKind kind)
    : n_(n), table_(std::move(table)), kind_(kind) {
    if (n_ <= 0) throw RangeError("binary operation needs n >= 1");
    if ((int)table_.size() != n_ * n_) throw SizeError("operation table must have n*n entries");
    for (int x : table_)
        if (x < 0 || x >= n_) throw RangeError("operation table entry out of range");
}

bool BinaryOp::same_table(const BinaryOp& other) const {
    if (other.n_ != n_) throw SizeError("comparing operation tables of different order");
    return table_ == other.table_;
}

bool operator==(const BinaryOp& a, const BinaryOp& b) {
    if (a.kind_ != b.kind_)
        throw PreconditionError("comparing operation tables of different kinds");
    return a.same_table(b);
}

FiniteSolution derived_solution_unchecked(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    if (k.size() != n) throw SizeError("reflection has wrong order");
    if (!sol.rnd()) throw PreconditionError("derived solution requires an RND solution");
    std::vector<int> lam(n * n), rho(n * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            int c = sol.rho_inv(k(b), a);
            int a2 = sol.rho(b, c);
            int b2 = sol.rho(k(a2), sol.lambda(c, b));
            lam[a * n + b] = b2;
            rho[b * n + a] = a2;
        }
    return FiniteSolution(n, std::move(lam), std::move(rho));
}

FiniteSolution derived_solution(const FiniteSolution& sol, const PointMap& k) {
    if (!sol.rnd()) throw PreconditionError("derived solution requires an RND solution");
    if (!check_ybe(sol)) throw PreconditionError("derived solution requires a YBE solution");
    if (!check_re(sol, k)) throw PreconditionError("k does not satisfy the reflection equation");
    return derived_solution_unchecked(sol, k);
}

FiniteSolution classical_derived(const FiniteSolution& sol) {
    return derived_solution(sol, PointMap::identity(sol.size()));
}

std::pair<FiniteSolution, PointMap> star_extension(const FiniteSolution& sol) {
    const int n = sol.size();
    const int m = n + 1;
    std::vector<int> lam(m * m), rho(m * m);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            lam[a * m + b] = sol.lambda(a, b);
            rho[a * m + b] = sol.rho(a, b);
        }
    for (int a = 0; a < n; a++) {
        lam[a * m + n] = n;  // lambda_a(*) = *
        rho[a * m + n] = n;  // rho_a(*) = *
    }
    for (int b = 0; b < m; b++) {
        lam[n * m + b] = b;  // lambda_* = id
        rho[n * m + b] = b;  // rho_* = id
    }
    return {FiniteSolution(m, std::move(lam), std::move(rho)), PointMap::constant(m, n)};
}

BinaryOp structure_shelf(const FiniteSolution& sol) {
    const int n = sol.size();
    if (!sol.rnd()) throw PreconditionError("structure shelf requires an RND solution");
    std::vector<int> t(n * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            t[a * n + b] = sol.rho(b, sol.lambda(sol.rho_inv(a, b), a));
    return BinaryOp(n, std::move(t), OpKind::RightShelf);
}

BinaryOp left_structure_shelf(const FiniteSolution& sol) {
    const int n = sol.size();
    if (!sol.lnd()) throw PreconditionError("left structure shelf requires an LND solution");
    std::vector<int> t(n * n);
    for (int b = 0; b < n; b++)
        for (int a = 0; a < n; a++)
            t[b * n + a] = sol.lambda(b, sol.rho(sol.lambda_inv(a, b), a));
    return BinaryOp(n, std::move(t), OpKind::LeftShelf);
}

BinaryOp k_shelf_right(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    if (k.size() != n) throw SizeError("point map has wrong order");
    if (!sol.rnd()) throw PreconditionError("k-shelf requires an RND solution");
    std::vector<int> t(n * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            t[a * n + b] = sol.rho(k(b), sol.lambda(sol.rho_inv(a, b), a));
    return BinaryOp(n, std::move(t), OpKind::KRightShelf);
}

BinaryOp k_shelf_left(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    if (k.size() != n) throw SizeError("point map has wrong order");
    if (!sol.lnd()) throw PreconditionError("left k-shelf requires an LND solution");
    std::vector<int> t(n * n);
    for (int b = 0; b < n; b++)
        for (int a = 0; a < n; a++)
            t[b * n + a] = sol.lambda(b, k(sol.rho(sol.lambda_inv(a, b), a)));
    return BinaryOp(n, std::move(t), OpKind::KLeftShelf);
}

ShelfCoincidence verify_shelf_coincidence(const FiniteSolution& sol, const PointMap& k) {
    ShelfCoincidence out;
    FiniteSolution rk = derived_solution(sol, k);
    out.shelves_equal = structure_shelf(sol).same_table(structure_shelf(rk));

    bool r_invertible = check_involutive_invertible(sol).invertible;
    if (!k.is_bijective() || !r_invertible) return out;

    // k(b |>'_k a) = k(a) <| k(b), with |>'_k the left structure shelf of r^(k)
    const int n = sol.size();
    if (!rk.lnd()) {
        out.second_identity = ShelfCoincidence::Second::Failed;
        return out;
    }
    BinaryOp lshelf = left_structure_shelf(rk);
    BinaryOp shelf = structure_shelf(sol);
    bool ok = true;
    for (int a = 0; a < n && ok; a++)
        for (int b = 0; b < n; b++)
            if (k(lshelf.at(b, a)) != shelf.at(k(a), k(b))) {
                ok = false;
                break;
            }
    out.second_identity = ok ? ShelfCoincidence::Second::Passed
                             : ShelfCoincidence::Second::Failed;
    return out;
}

}  // namespace yber
