/*
 * gws — generalized Weierstrass semigroups at several points of curves with
 * a plane model f(y) = g(x).
 *
 * C interface to the computation core. Handles are opaque; every fallible
 * call returns a gws_status and writes results through out-parameters. All
 * arithmetic is exact 64-bit with overflow detection. On failure a
 * thread-local message is available via gws_last_error().
 *
 * Conventions:
 *   - alpha arrays have length m and give divisor coefficients for the
 *     distinguished points P_1..P_m (index 0 is P_1, the common pole).
 *   - point/coordinate arguments are 1-based.
 *   - cap arguments bound enumeration sizes; 0 selects the default
 *     (10^7 results for enumerations, 10^6 points for box scans).
 */
#ifndef GWS_H
#define GWS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gws_status {
    GWS_OK = 0,
    GWS_ERROR_INVALID_ARGUMENT = 1, /* precondition violated */
    GWS_ERROR_DOMAIN = 2,           /* e.g. floor of a divisor with l = 0 */
    GWS_ERROR_OVERFLOW = 3,         /* 64-bit overflow detected */
    GWS_ERROR_CAP_EXCEEDED = 4,     /* enumeration or scan budget exhausted */
    GWS_ERROR_INTERNAL = 5
} gws_status;

typedef struct gws_curve gws_curve;
typedef struct gws_vec_list gws_vec_list;
typedef struct gws_monomial_list gws_monomial_list;

const char* gws_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* gws_last_error(void);

/* ---- curve handles ------------------------------------------------------ */

/* Curve with deg f = a, deg g = b, gcd(a,b) = 1, tracking m points,
 * 2 <= m <= a+1. Pass q = 0 when the field size is unspecified. */
gws_status gws_curve_new(int64_t a, int64_t b, int64_t m, int64_t q, gws_curve** out);

/* Preset x^{ell^r+1} = y^ell + y (r odd): a = ell, b = ell^r+1, q = ell^{2r}. */
gws_status gws_curve_hermitian(int64_t ell, int64_t r, int64_t m, gws_curve** out);

void gws_curve_free(gws_curve* c);

int64_t gws_curve_a(const gws_curve* c);
int64_t gws_curve_b(const gws_curve* c);
int64_t gws_curve_m(const gws_curve* c);
int64_t gws_curve_q(const gws_curve* c); /* 0 when unspecified */
int64_t gws_curve_genus(const gws_curve* c);
/* 1 when q was given but q < a+1 (below the point count the geometric
 * interpretation needs), else 0. */
int gws_curve_q_warning(const gws_curve* c);

/* ---- result containers --------------------------------------------------- */

size_t gws_vec_list_size(const gws_vec_list* l);
size_t gws_vec_list_dim(const gws_vec_list* l);
gws_status gws_vec_list_get(const gws_vec_list* l, size_t index,
                            int64_t* coords, size_t len);
void gws_vec_list_free(gws_vec_list* l);

size_t gws_monomial_list_size(const gws_monomial_list* l);
size_t gws_monomial_list_g_len(const gws_monomial_list* l); /* m-1 */
gws_status gws_monomial_list_get(const gws_monomial_list* l, size_t index,
                                 int64_t* h_exp, int64_t* g_exp, size_t g_len);
void gws_monomial_list_free(gws_monomial_list* l);

/* ---- semigroup and Riemann-Roch operations ------------------------------ */

/* Finite generating data: the b window elements (lexicographically sorted)
 * and the m-1 translation generators. Both lists are owned by the caller. */
gws_status gws_generators(const gws_curve* c, gws_vec_list** s_m, gws_vec_list** etas);

/* Pole vector of h^{h_exp} * prod g_j^{g_exp[j]}; g_len must be m-1 and
 * out_len must be m. */
gws_status gws_pole_vector(const gws_curve* c, int64_t h_exp, const int64_t* g_exp,
                           size_t g_len, int64_t* out, size_t out_len);

gws_status gws_dimension(const gws_curve* c, const int64_t* alpha, size_t len,
                         int64_t* total);

/* Per-index summands of the dimension formula; terms_len must equal b. */
gws_status gws_dimension_breakdown(const gws_curve* c, const int64_t* alpha, size_t len,
                                   int64_t* terms, size_t terms_len, int64_t* total);

/* Simplified full-support formula; requires m = a+1. */
gws_status gws_dimension_full_support(const gws_curve* c, const int64_t* alpha,
                                      size_t len, int64_t* total);

/* Monomial basis of L(D_alpha); size always equals the dimension. */
gws_status gws_basis(const gws_curve* c, const int64_t* alpha, size_t len,
                     gws_monomial_list** out);

gws_status gws_is_member(const gws_curve* c, const int64_t* alpha, size_t len, int* out);

gws_status gws_is_absolute_maximal(const gws_curve* c, const int64_t* alpha, size_t len,
                                   int* out);

/* Whether D_alpha is a discrepancy with respect to (P_i, P_j), i != j. */
gws_status gws_is_discrepancy(const gws_curve* c, const int64_t* alpha, size_t len,
                              int64_t point_i, int64_t point_j, int* out);

/* Supported floor; requires l(D_alpha) > 0. out_len must be m. */
gws_status gws_supported_floor(const gws_curve* c, const int64_t* alpha, size_t len,
                               int64_t* out, size_t out_len);

/* Divisor floor for m = a+1; requires l(D_alpha) > 0. */
gws_status gws_full_floor(const gws_curve* c, const int64_t* alpha, size_t len,
                          int64_t* out, size_t out_len);

/* All generating-set elements <= alpha, lexicographically sorted. */
gws_status gws_gamma_below(const gws_curve* c, const int64_t* alpha, size_t len,
                           uint64_t cap, gws_vec_list** out);

/* ---- brute-force validators ---------------------------------------------
 * Independent recomputation paths used by verification modes. */

/* Same set as gws_gamma_below via an unpruned box scan. */
gws_status gws_oracle_gamma_below(const gws_curve* c, const int64_t* alpha, size_t len,
                                  uint64_t cap, gws_vec_list** out);

/* Dimension as the count of distinct coord-th coordinates (1-based) among
 * the elements below alpha. */
gws_status gws_oracle_dimension(const gws_curve* c, const int64_t* alpha, size_t len,
                                int64_t coord, uint64_t cap, int64_t* out);

/* Membership via least upper bounds of the enumerated elements. */
gws_status gws_oracle_is_member(const gws_curve* c, const int64_t* alpha, size_t len,
                                uint64_t cap, int* out);

/* Absolute maximality from the definition, by per-index-set enumeration. */
gws_status gws_oracle_is_absolute_maximal(const gws_curve* c, const int64_t* alpha,
                                          size_t len, uint64_t cap, int* out);

/* Supported floor by exhaustive minimum-norm search over a box around
 * alpha, widened automatically when needed. point_cap bounds the box size. */
gws_status gws_oracle_floor(const gws_curve* c, const int64_t* alpha, size_t len,
                            uint64_t point_cap, int64_t* out, size_t out_len);

#ifdef __cplusplus
}
#endif

#endif /* GWS_H */
