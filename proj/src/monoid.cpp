#include "yber/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "yber/derive.hpp"

namespace yber {

namespace {

constexpr std::uint64_t kWordBudget = 10'000'000;

std::uint64_t pow_u64(int n, int d) {
    std::uint64_t r = 1;
    while (d-- > 0) {
        if (r > kWordBudget * 2) return kWordBudget * 2;  // saturate, caller checks
        r *= (std::uint64_t)n;
    }
    return r;
}

struct DenseUnionFind {
    std::vector<std::uint32_t> parent;
    explicit DenseUnionFind(std::uint64_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[b] = a;  // keep the smaller rank as root: canonical rep
        else parent[a] = b;
    }
};

}  // namespace

GradedQuotient::GradedQuotient(int n, int degree, std::vector<int> class_of, int class_count)
    : n_(n), degree_(degree), class_count_(class_count), class_of_(std::move(class_of)) {
    classes_.resize(class_count_);
    for (std::uint64_t r = 0; r < class_of_.size(); r++)
        classes_[class_of_[r]].push_back(r);
}

std::uint64_t GradedQuotient::rank_of(const Word& w) const {
    if ((int)w.size() != degree_) throw SizeError("word degree mismatch");
    std::uint64_t r = 0;
    for (int x : w) {
        if (x < 0 || x >= n_) throw RangeError("word entry out of range");
        r = r * n_ + x;
    }
    return r;
}

Word GradedQuotient::unrank(std::uint64_t rank) const {
    Word w(degree_);
    for (int i = degree_ - 1; i >= 0; i--) {
        w[i] = (int)(rank % n_);
        rank /= n_;
    }
    return w;
}

GradedQuotient graded_component(const FiniteSolution& sol, int degree) {
    if (degree < 0) throw RangeError("degree must be >= 0");
    const int n = sol.size();
    std::uint64_t total = pow_u64(n, degree);
    if (total > kWordBudget)
        throw ResourceError("graded component needs n^d <= 10^7 words (n^" +
                            std::to_string(degree) + " requested)");

    std::vector<std::int64_t> scale(degree + 1, 1);  // scale[i] = n^(degree-1-i)
    for (int i = degree - 2; i >= 0; i--) scale[i] = scale[i + 1] * n;

    DenseUnionFind uf(total);
    Word w(degree, 0);
    std::uint64_t rank = 0;
    bool more = true;
    while (more) {
        for (int i = 0; i + 1 < degree; i++) {
            auto [x, y] = sol.apply(w[i], w[i + 1]);
            // neighbor rank differs from rank only in digits i, i+1
            std::int64_t diff = ((std::int64_t)x - w[i]) * scale[i] +
                                ((std::int64_t)y - w[i + 1]) * scale[i + 1];
            std::uint64_t nb = (std::uint64_t)((std::int64_t)rank + diff);
            uf.unite((std::uint32_t)rank, (std::uint32_t)nb);
        }
        // advance
        more = false;
        for (int i = degree - 1; i >= 0; i--) {
            if (++w[i] < n) {
                more = true;
                break;
            }
            w[i] = 0;
        }
        rank++;
    }

    std::vector<int> class_of(total);
    std::map<std::uint32_t, int> ids;  // ordered: class ids by smallest representative
    for (std::uint64_t r = 0; r < total; r++) {
        std::uint32_t root = uf.find((std::uint32_t)r);
        auto [it, inserted] = ids.try_emplace(root, (int)ids.size());
        class_of[r] = it->second;
    }
    return GradedQuotient(n, degree, std::move(class_of), (int)ids.size());
}

bool verify_graded_bijection(const FiniteSolution& sol, const PointMap& k, int degree) {
    FiniteSolution rk = derived_solution_unchecked(sol, k);
    GradedQuotient q1 = graded_component(sol, degree);
    GradedQuotient q2 = graded_component(rk, degree);
    if (q1.class_count() != q2.class_count()) return false;

    std::vector<int> image(q1.class_count(), -1);
    std::vector<char> hit(q2.class_count(), 0);
    for (std::uint64_t r = 0; r < q1.word_count(); r++) {
        int c1 = q1.class_of_rank(r);
        int c2 = q2.class_of(guitar_map(sol, k, q1.unrank(r)));
        if (image[c1] == -1) {
            if (hit[c2]) return false;  // not injective on classes
            image[c1] = c2;
            hit[c2] = 1;
        } else if (image[c1] != c2) {
            return false;  // not constant on a class
        }
    }
    return true;
}

bool verify_monoid_action(const FiniteSolution& sol, const PointMap& k, int degree) {
    const int n = sol.size();
    FiniteSolution rk = derived_solution_unchecked(sol, k);
    BinaryOp kop = k_shelf_right(sol, k);
    GradedQuotient q = graded_component(rk, degree);

    // act(w, a): last letter acts first, so the two-letter case is the
    // exchange-law compatibility (a <|_k w_2) <|_k w_1.
    auto act = [&](const Word& w, int a) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) a = kop.at(a, *it);
        return a;
    };

    for (const auto& cls : q.classes()) {
        for (int a = 0; a < n; a++) {
            int expect = -1;
            for (std::uint64_t r : cls) {
                int got = act(q.unrank(r), a);
                if (expect == -1) expect = got;
                else if (got != expect) return false;
            }
        }
    }
    return true;
}

}  // namespace yber
