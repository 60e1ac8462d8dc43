/* yber — finite Yang-Baxter solutions, reflections, and derived structures.
 *
 * C interface to the yber core. All handles are opaque; every function
 * returns a status code (YBER_OK on success) and reports results through out
 * parameters. Element labels are 1-based on this surface. On failure,
 * yber_last_error() returns a human-readable message for the calling thread.
 * Buffers allocated by the library are released with yber_free().
 */
#ifndef YBER_H
#define YBER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    YBER_OK = 0,
    YBER_E_PARSE = 1,        /* malformed text input; message has line/column */
    YBER_E_PREDICATE = 2,    /* a required predicate (e.g. YBE) does not hold */
    YBER_E_PRECONDITION = 3, /* mathematical precondition violated */
    YBER_E_RESOURCE = 4,     /* memory or search budget exceeded */
    YBER_E_RANGE = 5,        /* element or index out of range */
    YBER_E_SIZE = 6,         /* mismatched orders */
    YBER_E_ARGUMENT = 7      /* null pointer or invalid flag value */
};

typedef struct yber_solution yber_solution;
typedef struct yber_reflections yber_reflections;
typedef struct yber_derived_classes yber_derived_classes;

/* Message for the most recent failing call on this thread. */
const char* yber_last_error(void);

void yber_free(void* p);

/* --- solutions ---------------------------------------------------------- */

/* Tables are n*n row-major, 1-based: lambda[(a-1)*n + (b-1)] = lambda_a(b),
 * rho[(b-1)*n + (a-1)] = rho_b(a). The map need not satisfy the YBE. */
int yber_solution_create(int n, const int* lambda, const int* rho, yber_solution** out);
int yber_solution_parse(const char* text, yber_solution** out);
int yber_solution_from_catalog(const char* name, yber_solution** out);
int yber_solution_format(const yber_solution* s, char** text_out);
int yber_solution_order(const yber_solution* s, int* n_out);
int yber_solution_tables(const yber_solution* s, int* lambda_out, int* rho_out);
void yber_solution_free(yber_solution* s);

/* r(a,b) = (lambda_a(b), rho_b(a)) */
int yber_apply(const yber_solution* s, int a, int b, int* left_out, int* right_out);

typedef struct {
    int ybe, rnd, lnd, involutive, invertible;
    uint64_t power_s, power_t; /* minimal r^s = r^t, s > t >= 0 */
} yber_report;

int yber_check(const yber_solution* s, yber_report* out);

/* --- reflections --------------------------------------------------------- */

int yber_reflection_parse(const char* text, int** k_out, int* n_out);
int yber_reflection_format(int n, const int* k, char** text_out);

/* k has n entries in 1..n. */
int yber_is_reflection(const yber_solution* s, const int* k, int* result_out);

/* criterion: 0 auto, 1 brute, 2 left (involutive LND), 3 right (involutive
 * RND). with_classes additionally partitions the reflections under
 * k -> phi k psi over all twist maps phi, psi. */
int yber_reflections_enumerate(const yber_solution* s, int criterion, int with_classes,
                               yber_reflections** out);
int yber_reflections_count(const yber_reflections* r, int* count_out);
int yber_reflections_get(const yber_reflections* r, int index, int* k_out);
int yber_reflections_class_count(const yber_reflections* r, int* count_out);
int yber_reflections_class_size(const yber_reflections* r, int class_index, int* size_out);
/* member_out receives the reflection's index in enumeration order. */
int yber_reflections_class_member(const yber_reflections* r, int class_index, int member,
                                  int* index_out);
void yber_reflections_free(yber_reflections* r);

/* --- derived solutions ---------------------------------------------------- */

/* r^(k); requires s RND + YBE and k a reflection (else YBER_E_PRECONDITION). */
int yber_derive(const yber_solution* s, const int* k, yber_solution** out);

/* Derived solutions of every reflection, grouped up to isomorphism. */
int yber_classify_derived(const yber_solution* s, yber_derived_classes** out);
int yber_derived_classes_count(const yber_derived_classes* c, int* count_out);
int yber_derived_classes_solution(const yber_derived_classes* c, int index, yber_solution** out);
int yber_derived_classes_size(const yber_derived_classes* c, int index, int* size_out);
int yber_derived_classes_reflection(const yber_derived_classes* c, int index, int member,
                                    int* k_out);
void yber_derived_classes_free(yber_derived_classes* c);

/* --- verification bundle -------------------------------------------------- */

/* Each field: 1 pass, 0 fail, -1 not applicable. */
typedef struct {
    int entwine_guitar;    /* J^{d;k} r_i = r^(k)_i J^{d;k} */
    int entwine_garside;   /* Delta^{d;k} r_i = r_{d-i} Delta^{d;k} */
    int product_guitar;    /* guitar product formula, all p+q <= d */
    int product_garside;   /* garside product formula, all p+q <= d */
    int graded_bijection;  /* class counts & induced bijection at degrees <= d */
    int monoid_action;     /* <|_k action constant on degree-<=d classes */
    int shelf_coincide;    /* shelf(r) == shelf(r^(k)) */
    int shelf_second;      /* k(b |>'_k a) = k(a) <| k(b), bijective k only */
} yber_verify_report;

/* Requires k to satisfy the reflection equation (YBER_E_PRECONDITION
 * otherwise). degree <= 0 selects the default bound 4. */
int yber_verify(const yber_solution* s, const int* k, int degree, yber_verify_report* out);

/* --- strange operations ---------------------------------------------------- */

/* Count of strange operations ((a*b)*a = b*a) on an n-set up to isomorphism;
 * 1 <= n <= 5. threads <= 0 picks YBER_THREADS or the hardware default. */
int yber_strange_count(int n, int threads, uint64_t* count_out);

/* Raw count with no isomorphism identification. */
int yber_strange_table_count(int n, int threads, uint64_t* count_out);

/* Canonical representative tables (n <= 3), row-major 1-based, count*n*n
 * entries in *tables_out. */
int yber_strange_list(int n, int** tables_out, int* count_out);

int yber_is_strange(int n, const int* table, int* result_out);

#ifdef __cplusplus
}
#endif

#endif /* YBER_H */
