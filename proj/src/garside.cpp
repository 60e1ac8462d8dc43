#include "yber/garside.hpp"

#include "yber/derive.hpp"

namespace yber {

namespace {

void check_word(const FiniteSolution& sol, const Word& w) {
    for (int x : w)
        if (x < 0 || x >= sol.size()) throw RangeError("word entry out of range");
}

// r at positions (i, i+1), 0-based.
inline void apply_r_at(const FiniteSolution& sol, Word& w, int i) {
    auto [x, y] = sol.apply(w[i], w[i + 1]);
    w[i] = x;
    w[i + 1] = y;
}

// Enumerate X^d words in place; returns false after the last one.
bool next_word(Word& w, int n) {
    for (int i = (int)w.size() - 1; i >= 0; i--) {
        if (++w[i] < n) return true;
        w[i] = 0;
    }
    return false;
}

}  // namespace

Word garside_map(const FiniteSolution& sol, const PointMap& k, const Word& w) {
    if (k.size() != sol.size()) throw SizeError("point map has wrong order");
    check_word(sol, w);
    const int d = (int)w.size();
    Word out = w;
    if (d == 0) return out;
    out[d - 1] = k(out[d - 1]);
    for (int run = 1; run < d; run++) {
        for (int i = d - run; i <= d - 1; i++) apply_r_at(sol, out, i - 1);
        out[d - 1] = k(out[d - 1]);
    }
    return out;
}

Word guitar_map(const FiniteSolution& sol, const PointMap& k, const Word& w) {
    if (!sol.rnd()) throw PreconditionError("guitar map requires an RND solution");
    if (k.size() != sol.size()) throw SizeError("point map has wrong order");
    check_word(sol, w);
    const int d = (int)w.size();
    Word out(d);
    for (int i = 0; i + 1 < d; i++) {
        Word delta = garside_map(sol, k, Word(w.begin() + i + 1, w.end()));
        int x = w[i];
        for (int b : delta) x = sol.rho(b, x);
        out[i] = x;
    }
    if (d > 0) out[d - 1] = w[d - 1];
    return out;
}

Word guitar_inverse(const FiniteSolution& sol, const PointMap& k, const Word& w) {
    if (!sol.rnd()) throw PreconditionError("guitar inverse requires an RND solution");
    if (k.size() != sol.size()) throw SizeError("point map has wrong order");
    check_word(sol, w);
    const int d = (int)w.size();
    Word out(d);
    if (d == 0) return out;
    out[d - 1] = w[d - 1];
    for (int i = d - 2; i >= 0; i--) {
        Word delta = garside_map(sol, k, Word(out.begin() + i + 1, out.end()));
        int x = w[i];
        for (auto it = delta.rbegin(); it != delta.rend(); ++it) x = sol.rho_inv(*it, x);
        out[i] = x;
    }
    return out;
}

namespace {

// Slides the block u of length p rightwards through v of length q, one
// strand at a time, rightmost strand of u first. The YBE makes the crossing
// order immaterial for actual solutions.
Word block_cross(const FiniteSolution& sol, const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    const int p = (int)u.size(), q = (int)v.size();
    for (int i = p; i >= 1; i--)
        for (int j = i; j <= i + q - 1; j++) apply_r_at(sol, w, j - 1);
    return w;
}

}  // namespace

Word word_lambda(const FiniteSolution& sol, const Word& u, const Word& v) {
    check_word(sol, u);
    check_word(sol, v);
    Word w = block_cross(sol, u, v);
    return Word(w.begin(), w.begin() + (int)v.size());
}

Word word_rho(const FiniteSolution& sol, const Word& u, const Word& v) {
    check_word(sol, u);
    check_word(sol, v);
    Word w = block_cross(sol, u, v);
    return Word(w.begin() + (int)v.size(), w.end());
}

EntwiningCheck verify_entwining_detail(const FiniteSolution& sol, const PointMap& k, int degree) {
    const int n = sol.size();
    EntwiningCheck out{sol.rnd(), true, true};
    std::optional<FiniteSolution> rk;
    if (out.guitar_applicable) rk = derived_solution_unchecked(sol, k);

    if (degree <= 1) return out;
    Word w(degree, 0);
    do {
        for (int i = 0; i + 1 < degree; i++) {
            Word rw = w;
            apply_r_at(sol, rw, i);
            if (out.guitar_applicable && out.guitar_ok) {
                Word lhs = guitar_map(sol, k, rw);
                Word rhs = guitar_map(sol, k, w);
                apply_r_at(*rk, rhs, i);
                if (lhs != rhs) out.guitar_ok = false;
            }
            if (out.garside_ok) {
                // Delta r_i = r_{d-i} Delta, with i 1-based = i+1 here.
                Word lhs = garside_map(sol, k, rw);
                Word rhs = garside_map(sol, k, w);
                apply_r_at(sol, rhs, degree - (i + 1) - 1);
                if (lhs != rhs) out.garside_ok = false;
            }
            if (!out.garside_ok && (!out.guitar_applicable || !out.guitar_ok)) return out;
        }
    } while (next_word(w, n));
    return out;
}

bool verify_entwining(const FiniteSolution& sol, const PointMap& k, int degree) {
    return verify_entwining_detail(sol, k, degree).ok();
}

ProductCheck verify_product_formulas_detail(const FiniteSolution& sol, const PointMap& k,
                                            int p, int q) {
    if (!sol.rnd()) throw PreconditionError("product formulas require an RND solution");
    const int n = sol.size();
    ProductCheck out{true, true};
    Word u(p, 0);
    do {
        Word v(q, 0);
        do {
            Word dv = garside_map(sol, k, v);
            Word ru = word_rho(sol, u, dv);  // rho_{Delta(v)}(u)

            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());

            if (out.guitar_ok) {
                Word lhs = guitar_map(sol, k, uv);
                Word rhs = guitar_map(sol, k, ru);
                Word jv = guitar_map(sol, k, v);
                rhs.insert(rhs.end(), jv.begin(), jv.end());
                if (lhs != rhs) out.guitar_ok = false;
            }
            if (out.garside_ok) {
                Word lhs = garside_map(sol, k, uv);
                Word rhs = word_lambda(sol, u, dv);
                Word dr = garside_map(sol, k, ru);
                rhs.insert(rhs.end(), dr.begin(), dr.end());
                if (lhs != rhs) out.garside_ok = false;
            }
            if (!out.guitar_ok && !out.garside_ok) return out;
        } while (next_word(v, n));
    } while (next_word(u, n));
    return out;
}

bool verify_product_formulas(const FiniteSolution& sol, const PointMap& k, int p, int q) {
    return verify_product_formulas_detail(sol, k, p, q).ok();
}

}  // namespace yber
