#include "yber.h"

#include <cstring>
#include <new>
#include <string>

#include "yber/catalog.hpp"
#include "yber/derive.hpp"
#include "yber/garside.hpp"
#include "yber/io.hpp"
#include "yber/monoid.hpp"
#include "yber/reflect.hpp"
#include "yber/solution.hpp"
#include "yber/strange.hpp"

using namespace yber;

struct yber_solution {
    FiniteSolution sol;
};

struct yber_reflections {
    ReflectionSet set;
    std::vector<std::vector<int>> classes;  // empty unless requested
};

struct yber_derived_classes {
    std::vector<DerivedClass> classes;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(YBER_E_PARSE, e.what());
    } catch (const RangeError& e) {
        return fail(YBER_E_RANGE, e.what());
    } catch (const SizeError& e) {
        return fail(YBER_E_SIZE, e.what());
    } catch (const PreconditionError& e) {
        return fail(YBER_E_PRECONDITION, e.what());
    } catch (const ResourceError& e) {
        return fail(YBER_E_RESOURCE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(YBER_E_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(YBER_E_ARGUMENT, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = (char*)::malloc(s.size() + 1);
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// 1-based caller table -> 0-based internal
std::vector<int> table_in(int n, const int* t) {
    std::vector<int> out((size_t)n * n);
    for (size_t i = 0; i < out.size(); i++) out[i] = t[i] - 1;
    return out;
}

PointMap map_in(int n, const int* k) {
    std::vector<int> img(n);
    for (int i = 0; i < n; i++) img[i] = k[i] - 1;
    return PointMap(n, std::move(img));
}

int require(bool ok, const char* what) {
    if (!ok) return fail(YBER_E_ARGUMENT, what);
    return YBER_OK;
}

}  // namespace

extern "C" {

const char* yber_last_error(void) { return g_last_error.c_str(); }

void yber_free(void* p) { ::free(p); }

int yber_solution_create(int n, const int* lambda, const int* rho, yber_solution** out) {
    if (int rc = require(lambda && rho && out, "null argument")) return rc;
    return guarded([&]() -> int {
        if (n < 1) throw RangeError("solution needs n >= 1");
        *out = new yber_solution{FiniteSolution(n, table_in(n, lambda), table_in(n, rho))};
        return YBER_OK;
    });
}

int yber_solution_parse(const char* text, yber_solution** out) {
    if (int rc = require(text && out, "null argument")) return rc;
    return guarded([&]() -> int {
        *out = new yber_solution{parse_solution(text)};
        return YBER_OK;
    });
}

int yber_solution_from_catalog(const char* name, yber_solution** out) {
    if (int rc = require(name && out, "null argument")) return rc;
    return guarded([&]() -> int {
        auto entry = catalog_lookup(name);
        if (!entry) return fail(YBER_E_ARGUMENT, "unknown catalog name '" + std::string(name) + "'");
        *out = new yber_solution{std::move(entry->solution)};
        return YBER_OK;
    });
}

int yber_solution_format(const yber_solution* s, char** text_out) {
    if (int rc = require(s && text_out, "null argument")) return rc;
    return guarded([&]() -> int {
        *text_out = dup_string(format_solution(s->sol));
        return *text_out ? YBER_OK : fail(YBER_E_RESOURCE, "out of memory");
    });
}

int yber_solution_order(const yber_solution* s, int* n_out) {
    if (int rc = require(s && n_out, "null argument")) return rc;
    *n_out = s->sol.size();
    return YBER_OK;
}

int yber_solution_tables(const yber_solution* s, int* lambda_out, int* rho_out) {
    if (int rc = require(s && lambda_out && rho_out, "null argument")) return rc;
    const auto& lam = s->sol.lambda_table();
    const auto& rho = s->sol.rho_table();
    for (size_t i = 0; i < lam.size(); i++) {
        lambda_out[i] = lam[i] + 1;
        rho_out[i] = rho[i] + 1;
    }
    return YBER_OK;
}

void yber_solution_free(yber_solution* s) { delete s; }

int yber_apply(const yber_solution* s, int a, int b, int* left_out, int* right_out) {
    if (int rc = require(s && left_out && right_out, "null argument")) return rc;
    return guarded([&]() -> int {
        auto [x, y] = s->sol.apply(a - 1, b - 1);
        *left_out = x + 1;
        *right_out = y + 1;
        return YBER_OK;
    });
}

int yber_check(const yber_solution* s, yber_report* out) {
    if (int rc = require(s && out, "null argument")) return rc;
    return guarded([&]() -> int {
        PredicateReport rep = predicate_report(s->sol);
        out->ybe = rep.ybe;
        out->rnd = rep.rnd;
        out->lnd = rep.lnd;
        out->involutive = rep.involutive;
        out->invertible = rep.invertible;
        out->power_s = rep.power_pair.first;
        out->power_t = rep.power_pair.second;
        return YBER_OK;
    });
}

int yber_reflection_parse(const char* text, int** k_out, int* n_out) {
    if (int rc = require(text && k_out && n_out, "null argument")) return rc;
    return guarded([&]() -> int {
        PointMap k = parse_reflection(text);
        int* buf = (int*)::malloc(sizeof(int) * k.size());
        if (!buf) return fail(YBER_E_RESOURCE, "out of memory");
        for (int i = 0; i < k.size(); i++) buf[i] = k(i) + 1;
        *k_out = buf;
        *n_out = k.size();
        return YBER_OK;
    });
}

int yber_reflection_format(int n, const int* k, char** text_out) {
    if (int rc = require(k && text_out, "null argument")) return rc;
    return guarded([&]() -> int {
        *text_out = dup_string(format_reflection(map_in(n, k)));
        return *text_out ? YBER_OK : fail(YBER_E_RESOURCE, "out of memory");
    });
}

int yber_is_reflection(const yber_solution* s, const int* k, int* result_out) {
    if (int rc = require(s && k && result_out, "null argument")) return rc;
    return guarded([&]() -> int {
        *result_out = check_re(s->sol, map_in(s->sol.size(), k)) ? 1 : 0;
        return YBER_OK;
    });
}

int yber_reflections_enumerate(const yber_solution* s, int criterion, int with_classes,
                               yber_reflections** out) {
    if (int rc = require(s && out, "null argument")) return rc;
    if (criterion < 0 || criterion > 3) return fail(YBER_E_ARGUMENT, "bad criterion value");
    return guarded([&]() -> int {
        auto crit = static_cast<ReflectionCriterion>(criterion);
        auto set = enumerate_reflections(s->sol, crit);
        auto* r = new yber_reflections{std::move(set), {}};
        if (with_classes) {
            try {
                r->classes = equivalence_classes(s->sol, r->set);
            } catch (...) {
                delete r;
                throw;
            }
        }
        *out = r;
        return YBER_OK;
    });
}

int yber_reflections_count(const yber_reflections* r, int* count_out) {
    if (int rc = require(r && count_out, "null argument")) return rc;
    *count_out = r->set.size();
    return YBER_OK;
}

int yber_reflections_get(const yber_reflections* r, int index, int* k_out) {
    if (int rc = require(r && k_out, "null argument")) return rc;
    if (index < 0 || index >= r->set.size()) return fail(YBER_E_RANGE, "reflection index out of range");
    const PointMap& k = r->set.reflections[index];
    for (int i = 0; i < k.size(); i++) k_out[i] = k(i) + 1;
    return YBER_OK;
}

int yber_reflections_class_count(const yber_reflections* r, int* count_out) {
    if (int rc = require(r && count_out, "null argument")) return rc;
    if (r->classes.empty() && r->set.size() > 0)
        return fail(YBER_E_ARGUMENT, "reflections were enumerated without classes");
    *count_out = (int)r->classes.size();
    return YBER_OK;
}

int yber_reflections_class_size(const yber_reflections* r, int class_index, int* size_out) {
    if (int rc = require(r && size_out, "null argument")) return rc;
    if (class_index < 0 || class_index >= (int)r->classes.size())
        return fail(YBER_E_RANGE, "class index out of range");
    *size_out = (int)r->classes[class_index].size();
    return YBER_OK;
}

int yber_reflections_class_member(const yber_reflections* r, int class_index, int member,
                                  int* index_out) {
    if (int rc = require(r && index_out, "null argument")) return rc;
    if (class_index < 0 || class_index >= (int)r->classes.size())
        return fail(YBER_E_RANGE, "class index out of range");
    const auto& cls = r->classes[class_index];
    if (member < 0 || member >= (int)cls.size())
        return fail(YBER_E_RANGE, "class member index out of range");
    *index_out = cls[member];
    return YBER_OK;
}

void yber_reflections_free(yber_reflections* r) { delete r; }

int yber_derive(const yber_solution* s, const int* k, yber_solution** out) {
    if (int rc = require(s && k && out, "null argument")) return rc;
    return guarded([&]() -> int {
        *out = new yber_solution{derived_solution(s->sol, map_in(s->sol.size(), k))};
        return YBER_OK;
    });
}

int yber_classify_derived(const yber_solution* s, yber_derived_classes** out) {
    if (int rc = require(s && out, "null argument")) return rc;
    return guarded([&]() -> int {
        auto refls = enumerate_reflections(s->sol);
        *out = new yber_derived_classes{classify_derived(s->sol, refls)};
        return YBER_OK;
    });
}

int yber_derived_classes_count(const yber_derived_classes* c, int* count_out) {
    if (int rc = require(c && count_out, "null argument")) return rc;
    *count_out = (int)c->classes.size();
    return YBER_OK;
}

int yber_derived_classes_solution(const yber_derived_classes* c, int index, yber_solution** out) {
    if (int rc = require(c && out, "null argument")) return rc;
    if (index < 0 || index >= (int)c->classes.size())
        return fail(YBER_E_RANGE, "class index out of range");
    return guarded([&]() -> int {
        *out = new yber_solution{c->classes[index].representative};
        return YBER_OK;
    });
}

int yber_derived_classes_size(const yber_derived_classes* c, int index, int* size_out) {
    if (int rc = require(c && size_out, "null argument")) return rc;
    if (index < 0 || index >= (int)c->classes.size())
        return fail(YBER_E_RANGE, "class index out of range");
    *size_out = (int)c->classes[index].reflections.size();
    return YBER_OK;
}

int yber_derived_classes_reflection(const yber_derived_classes* c, int index, int member,
                                    int* k_out) {
    if (int rc = require(c && k_out, "null argument")) return rc;
    if (index < 0 || index >= (int)c->classes.size())
        return fail(YBER_E_RANGE, "class index out of range");
    const auto& refl = c->classes[index].reflections;
    if (member < 0 || member >= (int)refl.size())
        return fail(YBER_E_RANGE, "class member index out of range");
    for (int i = 0; i < refl[member].size(); i++) k_out[i] = refl[member](i) + 1;
    return YBER_OK;
}

void yber_derived_classes_free(yber_derived_classes* c) { delete c; }

int yber_verify(const yber_solution* s, const int* k, int degree, yber_verify_report* out) {
    if (int rc = require(s && k && out, "null argument")) return rc;
    if (degree <= 0) degree = 4;
    return guarded([&]() -> int {
        const FiniteSolution& sol = s->sol;
        PointMap km = map_in(sol.size(), k);
        if (!check_ybe(sol))
            throw PreconditionError("verification requires a YBE solution");
        if (!check_re(sol, km))
            throw PreconditionError("k does not satisfy the reflection equation");

        const bool rnd = sol.rnd();
        out->entwine_guitar = rnd ? 1 : -1;
        out->entwine_garside = 1;
        for (int d = 2; d <= degree; d++) {
            EntwiningCheck ec = verify_entwining_detail(sol, km, d);
            if (ec.guitar_applicable && !ec.guitar_ok) out->entwine_guitar = 0;
            if (!ec.garside_ok) out->entwine_garside = 0;
        }

        out->product_guitar = out->product_garside = rnd ? 1 : -1;
        if (rnd) {
            for (int p = 0; p <= degree; p++)
                for (int q = 0; p + q <= degree; q++) {
                    ProductCheck pc = verify_product_formulas_detail(sol, km, p, q);
                    if (!pc.guitar_ok) out->product_guitar = 0;
                    if (!pc.garside_ok) out->product_garside = 0;
                }
        }

        out->graded_bijection = rnd ? 1 : -1;
        out->monoid_action = rnd ? 1 : -1;
        if (rnd) {
            for (int d = 0; d <= degree; d++) {
                if (out->graded_bijection == 1 && !verify_graded_bijection(sol, km, d))
                    out->graded_bijection = 0;
                if (out->monoid_action == 1 && !verify_monoid_action(sol, km, d))
                    out->monoid_action = 0;
            }
        }

        if (rnd) {
            ShelfCoincidence sc = verify_shelf_coincidence(sol, km);
            out->shelf_coincide = sc.shelves_equal ? 1 : 0;
            switch (sc.second_identity) {
                case ShelfCoincidence::Second::Passed: out->shelf_second = 1; break;
                case ShelfCoincidence::Second::Failed: out->shelf_second = 0; break;
                default: out->shelf_second = -1; break;
            }
        } else {
            out->shelf_coincide = -1;
            out->shelf_second = -1;
        }
        return YBER_OK;
    });
}

int yber_strange_count(int n, int threads, uint64_t* count_out) {
    if (int rc = require(count_out != nullptr, "null argument")) return rc;
    return guarded([&]() -> int {
        *count_out = count_strange(n, threads);
        return YBER_OK;
    });
}

int yber_strange_table_count(int n, int threads, uint64_t* count_out) {
    if (int rc = require(count_out != nullptr, "null argument")) return rc;
    return guarded([&]() -> int {
        *count_out = count_strange_tables(n, threads);
        return YBER_OK;
    });
}

int yber_strange_list(int n, int** tables_out, int* count_out) {
    if (int rc = require(tables_out && count_out, "null argument")) return rc;
    return guarded([&]() -> int {
        auto ops = list_strange(n);
        int* buf = (int*)::malloc(sizeof(int) * ops.size() * (size_t)n * n);
        if (!buf && !ops.empty()) return fail(YBER_E_RESOURCE, "out of memory");
        size_t pos = 0;
        for (const auto& op : ops)
            for (int v : op.table()) buf[pos++] = v + 1;
        *tables_out = buf;
        *count_out = (int)ops.size();
        return YBER_OK;
    });
}

int yber_is_strange(int n, const int* table, int* result_out) {
    if (int rc = require(table && result_out, "null argument")) return rc;
    return guarded([&]() -> int {
        if (n < 1) throw RangeError("operation table needs n >= 1");
        *result_out = is_strange_table(n, table_in(n, table)) ? 1 : 0;
        return YBER_OK;
    });
}

}  // extern "C"
