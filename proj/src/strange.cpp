#include "yber/strange.hpp"

#include "yber/threads.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace yber {

bool is_strange_table(int n, const std::vector<int>& table) {
    if ((int)table.size() != n * n) throw SizeError("operation table must have n*n entries");
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            int ab = table[a * n + b];
            if (ab < 0 || ab >= n) throw RangeError("operation table entry out of range");
            if (table[ab * n + a] != table[b * n + a]) return false;
        }
    return true;
}

bool is_strange(const BinaryOp& op) { return is_strange_table(op.size(), op.table()); }

BinaryOp reflection_to_strange(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    if (k.size() != n) throw SizeError("point map has wrong order");
    if (!sol.lnd()) throw PreconditionError("strange operation requires an LND solution");
    if (!check_involutive_invertible(sol).involutive)
        throw PreconditionError("strange operation requires an involutive solution");
    std::vector<int> t(n * n);
    for (int b = 0; b < n; b++)
        for (int a = 0; a < n; a++)
            t[b * n + a] = sol.lambda(b, k(sol.lambda_inv(b, a)));
    return BinaryOp(n, std::move(t), OpKind::Strange);
}

bool strange_criterion(const FiniteSolution& sol, const PointMap& k) {
    return is_strange_table(sol.size(), reflection_to_strange(sol, k).table());
}

BinaryOp harpoon_up(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    if (k.size() != n) throw SizeError("point map has wrong order");
    if (!sol.lnd()) throw PreconditionError("harpoon-up requires an LND solution");
    std::vector<int> t(n * n);
    for (int b = 0; b < n; b++)
        for (int a = 0; a < n; a++)
            t[b * n + a] = sol.lambda(b, k(sol.lambda_inv(b, a)));
    return BinaryOp(n, std::move(t), OpKind::HarpoonUp);
}

BinaryOp harpoon_down(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    if (k.size() != n) throw SizeError("point map has wrong order");
    if (!sol.lnd()) throw PreconditionError("harpoon-down requires an LND solution");
    if (!sol.rnd())
        throw PreconditionError("harpoon-down needs every rho_c bijective");
    std::vector<int> t(n * n);
    for (int b = 0; b < n; b++)
        for (int a = 0; a < n; a++) {
            int c = sol.lambda_inv(a, b);
            t[b * n + a] = sol.rho_inv(c, k(sol.rho(c, a)));
        }
    return BinaryOp(n, std::move(t), OpKind::HarpoonDown);
}

bool general_re_criterion(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    if (!sol.lnd()) throw PreconditionError("criterion requires an LND solution");
    if (!check_involutive_invertible(sol).invertible)
        throw PreconditionError("criterion requires an invertible solution");
    BinaryOp klop = k_shelf_left(sol, k);
    BinaryOp up = harpoon_up(sol, k);
    BinaryOp dn = harpoon_down(sol, k);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            if (klop.at(up.at(b, a), b) != klop.at(a, b)) return false;
            if (dn.at(klop.at(a, b), a) != up.at(b, a)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Exact counting of strange tables fixed by a relabeling sigma.
//
// Cells of the n x n table are variables. Two derivation rules drive a
// union-find with sigma-power shifts (value(cell) = sigma^W(val[root])):
//   * equivariance: value(sigma a, sigma b) = sigma(value(a, b));
//   * strangeness:  once value(a,b) = v is known, value(v,a) == value(b,a).
// Branching assigns a value to the root of an undetermined cell class and
// propagates; a trail undoes unions/values on backtrack (no path compression,
// union by size). Roots carry a stabilizer exponent g: every imposed
// self-relation sigma^d(val) = val lowers g to gcd(g, d), restricting the
// admissible values to those fixed by sigma^g.
// ---------------------------------------------------------------------------
namespace {

struct FixEngine {
    int n, m, N;
    std::vector<int> sig, sigpow;  // sigpow[e*n+i] = sigma^e(i), e in 0..m
    std::vector<int> parent, shift, size_, stab, val;
    std::vector<std::vector<int>> members;
    std::vector<int> fixcnt;  // per divisor g of m: #values fixed by sigma^g
    std::uint64_t solutions = 0;
    bool seed_failed = false;

    struct UnionRec { int r2, r1, old_stab1, old_members1; };
    std::vector<UnionRec> trail_union;
    std::vector<int> trail_val;
    std::vector<std::pair<int, int>> trail_stab;
    struct Mark { size_t u, v, s; };
    std::vector<std::pair<int, int>> pending;  // (cell, concrete value)

    FixEngine(int n_in, const std::vector<int>& sigma) : n(n_in), sig(sigma) {
        std::vector<int> idp(n);
        std::iota(idp.begin(), idp.end(), 0);
        std::vector<int> q = idp;
        m = 0;
        do {
            for (int i = 0; i < n; i++) q[i] = sig[q[i]];
            m++;
        } while (q != idp);
        sigpow.assign((size_t)(m + 1) * n, 0);
        for (int i = 0; i < n; i++) sigpow[i] = i;
        for (int e = 1; e <= m; e++)
            for (int i = 0; i < n; i++)
                sigpow[(size_t)e * n + i] = sig[sigpow[(size_t)(e - 1) * n + i]];
        N = n * n;
        parent.resize(N);
        std::iota(parent.begin(), parent.end(), 0);
        shift.assign(N, 0);
        size_.assign(N, 1);
        stab.assign(N, m);
        val.assign(N, -1);
        members.resize(N);
        for (int c = 0; c < N; c++) members[c] = {c};
        fixcnt.assign(m + 1, 0);
        for (int g = 1; g <= m; g++) {
            if (m % g) continue;
            int cnt = 0;
            for (int v = 0; v < n; v++)
                if (sigpow[(size_t)g * n + v] == v) cnt++;
            fixcnt[g] = cnt;
        }
        if (m > 1) {
            for (int a = 0; a < n; a++)
                for (int b = 0; b < n; b++)
                    if (!unite(sig[a] * n + sig[b], a * n + b, 1)) {
                        seed_failed = true;
                        return;
                    }
            if (!propagate()) seed_failed = true;
        }
    }

    int ap(int e, int x) const { return sigpow[(size_t)(e % m) * n + x]; }

    int find(int c, int& w) const {
        w = 0;
        while (parent[c] != c) {
            w += shift[c];
            c = parent[c];
        }
        w %= m;
        return c;
    }

    void set_root_val(int r, int v) {
        val[r] = v;
        trail_val.push_back(r);
        for (int c : members[r]) {
            int w;
            find(c, w);
            pending.push_back({c, ap(w, v)});
        }
    }

    // require value(c1) = sigma^t(value(c2))
    bool unite(int c1, int c2, int t) {
        int w1, w2;
        int r1 = find(c1, w1), r2 = find(c2, w2);
        if (r1 == r2) {
            int d = ((w1 - w2 - t) % m + m) % m;
            if (d == 0) return true;
            int g = std::gcd(stab[r1], d);
            if (g != stab[r1]) {
                if (val[r1] >= 0) {
                    if (ap(g, val[r1]) != val[r1]) return false;
                } else if (fixcnt[g] == 0) {
                    return false;
                }
                trail_stab.push_back({r1, stab[r1]});
                stab[r1] = g;
            }
            return true;
        }
        int s = ((w1 - w2 - t) % m + m) % m;  // val(r2) = sigma^s(val(r1))
        if (size_[r1] < size_[r2]) {
            std::swap(r1, r2);
            s = (m - s) % m;
        }
        int g = std::gcd(stab[r1], stab[r2]);
        trail_union.push_back({r2, r1, stab[r1], (int)members[r1].size()});
        parent[r2] = r1;
        shift[r2] = s;
        size_[r1] += size_[r2];
        stab[r1] = g;
        if (val[r1] >= 0 && val[r2] >= 0) {
            if (ap(s, val[r1]) != val[r2]) return false;
        } else if (val[r2] >= 0) {
            int v = ap((m - s) % m, val[r2]);
            if (ap(g, v) != v) return false;
            val[r1] = v;
            trail_val.push_back(r1);
            for (int i = 0; i < trail_union.back().old_members1; i++) {
                int c = members[r1][i];
                int w;
                find(c, w);
                pending.push_back({c, ap(w, v)});
            }
        } else if (val[r1] >= 0) {
            if (ap(g, val[r1]) != val[r1]) return false;
            for (int c : members[r2]) {
                int w;
                find(c, w);
                pending.push_back({c, ap(w, val[r1])});
            }
        } else if (fixcnt[g] == 0) {
            return false;
        }
        members[r1].insert(members[r1].end(), members[r2].begin(), members[r2].end());
        return true;
    }

    bool propagate() {
        while (!pending.empty()) {
            auto [c, v] = pending.back();
            pending.pop_back();
            int a = c / n, b = c % n;
            if (!unite(v * n + a, b * n + a, 0)) return false;
        }
        return true;
    }

    Mark mark() const { return {trail_union.size(), trail_val.size(), trail_stab.size()}; }

    void rewind(const Mark& mk) {
        pending.clear();
        while (trail_stab.size() > mk.s) {
            auto [r, old] = trail_stab.back();
            trail_stab.pop_back();
            stab[r] = old;
        }
        while (trail_val.size() > mk.v) {
            val[trail_val.back()] = -1;
            trail_val.pop_back();
        }
        while (trail_union.size() > mk.u) {
            auto rec = trail_union.back();
            trail_union.pop_back();
            members[rec.r1].resize(rec.old_members1);
            size_[rec.r1] -= size_[rec.r2];
            stab[rec.r1] = rec.old_stab1;
            parent[rec.r2] = rec.r2;
        }
    }

    // next cell (static row-major order) whose class is still undetermined
    int next_cell(int cell, int& root) const {
        while (cell < N) {
            int w;
            root = find(cell, w);
            if (val[root] < 0) return cell;
            cell++;
        }
        return N;
    }

    void dfs(int cell) {
        int root;
        cell = next_cell(cell, root);
        if (cell == N) {
            solutions++;
            return;
        }
        for (int v = 0; v < n; v++) {
            if (ap(stab[root], v) != v) continue;
            Mark mk = mark();
            set_root_val(root, v);
            if (propagate()) dfs(cell + 1);
            rewind(mk);
        }
    }

    // Copies of this engine frozen `depth` branch decisions below the current
    // state; each task finishes its subtree independently.
    void split_from(int cell, int depth, std::vector<FixEngine>& tasks) {
        int root;
        cell = next_cell(cell, root);
        if (cell == N) {
            solutions++;  // fully determined before the split depth
            return;
        }
        if (depth == 0) {
            tasks.push_back(*this);
            tasks.back().solutions = 0;
            tasks.back().start_cell = cell;
            return;
        }
        for (int v = 0; v < n; v++) {
            if (ap(stab[root], v) != v) continue;
            Mark mk = mark();
            set_root_val(root, v);
            if (propagate()) split_from(cell + 1, depth - 1, tasks);
            rewind(mk);
        }
    }

    int start_cell = 0;
};

std::uint64_t run_fixed_count(int n, const std::vector<int>& sigma, int threads) {
    FixEngine engine(n, sigma);
    if (engine.seed_failed) return 0;

    if (threads <= 1) {
        engine.dfs(0);
        return engine.solutions;
    }

    // Split so the task count is at least 4x the thread count.
    int depth = 0;
    std::uint64_t width = 1;
    while (width < 4ull * threads && depth < engine.N) {
        width *= n;
        depth++;
    }
    std::vector<FixEngine> tasks;
    std::uint64_t base = 0;
    {
        FixEngine splitter = engine;
        splitter.solutions = 0;
        splitter.split_from(0, depth, tasks);
        base = splitter.solutions;
    }
    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> total{base};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            tasks[i].dfs(tasks[i].start_cell);
            total.fetch_add(tasks[i].solutions);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; i++) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return total.load();
}

// Conjugacy classes of S_n as (representative, class size), via cycle types.
struct ConjClass {
    std::vector<int> rep;
    std::uint64_t size;
};

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; i++) f *= i;
    return f;
}

void cycle_types(int n, int max_part, std::vector<int>& parts, std::vector<ConjClass>& out) {
    if (n == 0) {
        std::vector<int> rep;
        int start = 0;
        for (int len : parts) {
            for (int i = 0; i < len; i++) rep.push_back(start + (i + 1) % len);
            start += len;
        }
        int total = start;
        // |class| = n! / (prod part * prod mult!)
        std::uint64_t denom = 1;
        int run = 1;
        for (size_t i = 0; i < parts.size(); i++) {
            denom *= parts[i];
            if (i > 0 && parts[i] == parts[i - 1]) denom *= ++run;
            else run = 1;
        }
        out.push_back({std::move(rep), factorial(total) / denom});
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; p--) {
        parts.push_back(p);
        cycle_types(n - p, p, parts, out);
        parts.pop_back();
    }
}

void check_count_range(int n) {
    if (n < 1) throw RangeError("strange counting needs n >= 1");
    if (n > 5) throw ResourceError("strange counting beyond n = 5 exceeds the budget");
}

}  // namespace

int default_thread_count() {
    if (const char* env = std::getenv("YBER_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return std::clamp((int)hc, 1, 64);
}

std::uint64_t count_strange_fixed(int n, const PointMap& sigma, int threads) {
    if (n < 1) throw RangeError("strange counting needs n >= 1");
    if (sigma.size() != n) throw SizeError("relabeling has wrong order");
    if (!sigma.is_bijective()) throw PreconditionError("relabeling must be a permutation");
    if (threads <= 0) threads = default_thread_count();
    return run_fixed_count(n, sigma.image(), threads);
}

std::uint64_t count_strange_tables(int n, int threads) {
    check_count_range(n);
    if (threads <= 0) threads = default_thread_count();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return run_fixed_count(n, id, threads);
}

std::uint64_t count_strange(int n, int threads) {
    check_count_range(n);
    if (threads <= 0) threads = default_thread_count();
    std::vector<ConjClass> classes;
    std::vector<int> parts;
    cycle_types(n, n, parts, classes);
    std::uint64_t sum = 0;
    for (const auto& cls : classes) sum += cls.size * run_fixed_count(n, cls.rep, threads);
    return sum / factorial(n);
}

std::vector<BinaryOp> list_strange(int n) {
    if (n < 1) throw RangeError("strange listing needs n >= 1");
    if (n > 3) throw ResourceError("strange listing limited to n <= 3");
    const int cells = n * n;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<BinaryOp> out;
    std::vector<int> t(cells, 0);
    for (;;) {
        if (is_strange_table(n, t)) {
            // canonical iff lexicographically least in its relabeling orbit
            bool canonical = true;
            std::vector<int> img(cells);
            for (const auto& s : perms) {
                for (int a = 0; a < n && canonical; a++)
                    for (int b = 0; b < n; b++) img[s[a] * n + s[b]] = s[t[a * n + b]];
                if (img < t) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) out.emplace_back(n, t, OpKind::Strange);
        }
        int i = cells - 1;
        while (i >= 0 && t[i] == n - 1) t[i--] = 0;
        if (i < 0) break;
        t[i]++;
    }
    return out;
}

}  // namespace yber
