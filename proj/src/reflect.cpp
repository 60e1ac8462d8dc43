#include "yber/reflect.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "yber/derive.hpp"
#include "yber/threads.hpp"

namespace yber {

namespace {

bool next_map(std::vector<int>& v, int n) {
    for (int i = (int)v.size() - 1; i >= 0; i--) {
        if (++v[i] < n) return true;
        v[i] = 0;
    }
    return false;
}

void require_involutive(const FiniteSolution& sol, const char* who) {
    if (!check_involutive_invertible(sol).involutive)
        throw PreconditionError(std::string(who) + " requires an involutive solution");
}

bool left_criterion_holds(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            if (t_map(sol, k, a, k(b)) != t_map(sol, k, a, b)) return false;
    return true;
}

bool right_criterion_holds(const FiniteSolution& sol, const PointMap& k) {
    const int n = sol.size();
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            if (u_map(sol, k, a, k(b)) != k(u_map(sol, k, a, b))) return false;
    return true;
}

}  // namespace

int t_map(const FiniteSolution& sol, const PointMap& k, int a, int b) {
    return sol.lambda(sol.lambda(a, b), k(sol.rho(b, a)));
}

int u_map(const FiniteSolution& sol, const PointMap& k, int a, int b) {
    return sol.rho(k(sol.rho(b, a)), sol.lambda(a, b));
}

bool is_reflection_involutive_left(const FiniteSolution& sol, const PointMap& k) {
    if (!sol.lnd()) throw PreconditionError("left criterion requires an LND solution");
    require_involutive(sol, "left criterion");
    return left_criterion_holds(sol, k);
}

bool is_reflection_involutive_right(const FiniteSolution& sol, const PointMap& k) {
    if (!sol.rnd()) throw PreconditionError("right criterion requires an RND solution");
    require_involutive(sol, "right criterion");
    return right_criterion_holds(sol, k);
}

ReflectionSet enumerate_reflections(const FiniteSolution& sol, ReflectionCriterion criterion) {
    const int n = sol.size();
    if (n > 8) throw ResourceError("reflection enumeration limited to n <= 8");

    bool involutive = check_involutive_invertible(sol).involutive;
    ReflectionCriterion used = criterion;
    if (criterion == ReflectionCriterion::Auto) {
        if (involutive && sol.lnd()) used = ReflectionCriterion::Left;
        else if (involutive && sol.rnd()) used = ReflectionCriterion::Right;
        else used = ReflectionCriterion::Brute;
    } else if (criterion == ReflectionCriterion::Left) {
        if (!involutive || !sol.lnd())
            throw PreconditionError("left criterion requires an involutive LND solution");
    } else if (criterion == ReflectionCriterion::Right) {
        if (!involutive || !sol.rnd())
            throw PreconditionError("right criterion requires an involutive RND solution");
    }

    // The candidate space X^X is partitioned by k(1); partitions are scanned
    // independently (in parallel for large n) and concatenated in order, so
    // the output is lexicographic regardless of scheduling.
    auto scan_partition = [&](int first) {
        std::vector<PointMap> found;
        std::vector<int> img(n, 0);
        img[0] = first;
        std::uint64_t index = 0;
        do {
            PointMap k(n, img);
            bool accept;
            switch (used) {
                case ReflectionCriterion::Left: accept = left_criterion_holds(sol, k); break;
                case ReflectionCriterion::Right: accept = right_criterion_holds(sol, k); break;
                default: accept = check_re(sol, k); break;
            }
            // Cross-check the fast criterion against the full equation on
            // every accepted map and a thin sample of rejected ones.
            if (used != ReflectionCriterion::Brute && (accept || index % 7 == 0)) {
                if (accept != check_re(sol, k))
                    throw PreconditionError("criterion disagrees with the reflection equation");
            }
            if (accept) found.push_back(std::move(k));
            index++;
        } while (next_map(img, n) && img[0] == first);
        return found;
    };

    std::vector<std::vector<PointMap>> partitions(n);
    if (n >= 6) {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(n);
        auto worker = [&]() {
            for (;;) {
                int v = next.fetch_add(1);
                if (v >= n) break;
                try {
                    partitions[v] = scan_partition(v);
                } catch (...) {
                    errors[v] = std::current_exception();
                }
            }
        };
        int nthreads = std::min(n, default_thread_count());
        for (int t = 0; t < nthreads; t++) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        for (int v = 0; v < n; v++) partitions[v] = scan_partition(v);
    }

    ReflectionSet out;
    out.n = n;
    out.used = used;
    for (auto& part : partitions)
        for (auto& k : part) out.reflections.push_back(std::move(k));
    return out;
}

SufficientReflections sufficient_reflections(const FiniteSolution& sol) {
    require_involutive(sol, "sufficient reflection families");
    const int n = sol.size();
    SufficientReflections out;
    std::vector<int> img(n, 0);
    do {
        if (sol.lnd()) {
            bool comm = true;
            for (int a = 0; a < n && comm; a++)
                for (int x = 0; x < n; x++)
                    if (img[sol.lambda(a, x)] != sol.lambda(a, img[x])) {
                        comm = false;
                        break;
                    }
            if (comm) out.lambda_commuting.emplace_back(n, img);
        }
        if (sol.rnd()) {
            bool fix = true;
            for (int a = 0; a < n && fix; a++)
                for (int x = 0; x < n; x++)
                    if (sol.rho(img[a], x) != sol.rho(a, x)) {
                        fix = false;
                        break;
                    }
            if (fix) out.rho_fixing.emplace_back(n, img);
        }
    } while (next_map(img, n));
    if (!sol.lnd() && !sol.rnd())
        throw PreconditionError("sufficient reflection families need LND or RND");
    for (const auto& k : out.lambda_commuting)
        if (!check_re(sol, k)) throw PreconditionError("lambda-commuting map fails the reflection equation");
    for (const auto& k : out.rho_fixing)
        if (!check_re(sol, k)) throw PreconditionError("rho-fixing map fails the reflection equation");
    return out;
}

std::vector<PointMap> twist_maps(const FiniteSolution& sol) {
    require_involutive(sol, "twist maps");
    const int n = sol.size();
    std::vector<PointMap> out;
    std::vector<int> img(n, 0);
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; a++)
            for (int x = 0; x < n; x++)
                if (img[sol.lambda(a, x)] != sol.lambda(a, img[x]) ||
                    sol.rho(img[a], x) != sol.rho(a, x)) {
                    ok = false;
                    break;
                }
        if (ok) out.emplace_back(n, img);
    } while (next_map(img, n));
    return out;
}

std::vector<std::vector<int>> equivalence_classes(const FiniteSolution& sol,
                                                  const ReflectionSet& refls) {
    const int n = sol.size();
    if (refls.n != n) throw SizeError("reflection set has wrong order");
    std::vector<PointMap> twists = twist_maps(sol);

    std::vector<int> parent(refls.size());
    for (int i = 0; i < refls.size(); i++) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < refls.size(); i++) index[refls.reflections[i].image()] = i;

    for (int i = 0; i < refls.size(); i++) {
        const PointMap& k = refls.reflections[i];
        for (const auto& phi : twists)
            for (const auto& psi : twists) {
                std::vector<int> img(n);
                for (int x = 0; x < n; x++) img[x] = phi(k(psi(x)));
                auto it = index.find(img);
                if (it == index.end())
                    throw PreconditionError("phi k psi left the reflection set");
                unite(i, it->second);
            }
    }

    std::vector<std::vector<int>> classes;
    std::vector<int> class_id(refls.size(), -1);
    for (int i = 0; i < refls.size(); i++) {
        int root = find(i);
        if (class_id[root] == -1) {
            class_id[root] = (int)classes.size();
            classes.emplace_back();
        }
        classes[class_id[root]].push_back(i);
    }
    return classes;
}

bool verify_equivalence_conjugation(const FiniteSolution& sol, const PointMap& k,
                                    const PointMap& phi, const PointMap& psi) {
    const int n = sol.size();
    std::vector<int> img(n);
    for (int x = 0; x < n; x++) img[x] = phi(k(psi(x)));
    FiniteSolution rk = derived_solution_unchecked(sol, k);
    FiniteSolution rk2 = derived_solution_unchecked(sol, PointMap(n, std::move(img)));
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            auto [x, y] = rk2.apply(a, b);
            if (rk.apply(psi(a), psi(b)) != std::pair{psi(x), psi(y)}) return false;
        }
    return true;
}

std::vector<DerivedClass> classify_derived(const FiniteSolution& sol,
                                           const ReflectionSet& refls) {
    if (!sol.rnd()) throw PreconditionError("classification requires an RND solution");
    std::vector<DerivedClass> classes;
    for (const auto& k : refls.reflections) {
        FiniteSolution rk = derived_solution(sol, k);
        bool placed = false;
        for (auto& cls : classes)
            if (solutions_isomorphic(cls.representative, rk)) {
                cls.reflections.push_back(k);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({std::move(rk), {k}});
    }
    return classes;
}

}  // namespace yber
