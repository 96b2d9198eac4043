#include "gws.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "gws/curve.hpp"
#include "gws/errors.hpp"
#include "gws/oracle.hpp"
#include "gws/riemann_roch.hpp"
#include "gws/semigroup.hpp"

struct gws_curve {
    gws::CurveFamily impl;
};

struct gws_vec_list {
    std::vector<gws::IntVec> vecs;
};

struct gws_monomial_list {
    std::vector<gws::Monomial> monos;
};

namespace {

thread_local std::string g_last_error = "no error";

gws_status fail(gws_status s, const char* what) {
    g_last_error = what;
    return s;
}

// Runs fn, mapping the library's exception taxonomy onto status codes.
template <typename Fn>
gws_status guarded(Fn&& fn) {
    try {
        fn();
        return GWS_OK;
    } catch (const gws::CapExceededError& e) {
        return fail(GWS_ERROR_CAP_EXCEEDED, e.what());
    } catch (const std::overflow_error& e) {
        return fail(GWS_ERROR_OVERFLOW, e.what());
    } catch (const std::domain_error& e) {
        return fail(GWS_ERROR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GWS_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(GWS_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(GWS_ERROR_INTERNAL, e.what());
    }
}

gws::IntVec to_vec(const int64_t* alpha, size_t len) {
    if (alpha == nullptr)
        throw std::invalid_argument("alpha must not be NULL");
    return gws::IntVec(std::vector<gws::Int>(alpha, alpha + len));
}

void check_handle(const void* p, const char* what) {
    if (p == nullptr) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

void write_vec(const gws::IntVec& v, int64_t* out, size_t out_len) {
    check_handle(out, "out");
    if (out_len != v.size())
        throw std::invalid_argument("output buffer has wrong length");
    std::memcpy(out, v.coords().data(), v.size() * sizeof(int64_t));
}

gws::EnumerationLimits limits_from(uint64_t cap) {
    gws::EnumerationLimits lim;
    if (cap != 0) lim.max_results = cap;
    return lim;
}

}  // namespace

extern "C" {

const char* gws_version(void) { return "0.1.0"; }

const char* gws_last_error(void) { return g_last_error.c_str(); }

gws_status gws_curve_new(int64_t a, int64_t b, int64_t m, int64_t q, gws_curve** out) {
    return guarded([&] {
        check_handle(out, "out");
        std::optional<gws::Int> qv;
        if (q != 0) qv = q;
        *out = new gws_curve{gws::CurveFamily::create(a, b, m, qv)};
    });
}

gws_status gws_curve_hermitian(int64_t ell, int64_t r, int64_t m, gws_curve** out) {
    return guarded([&] {
        check_handle(out, "out");
        *out = new gws_curve{gws::CurveFamily::hermitian(ell, r, m)};
    });
}

void gws_curve_free(gws_curve* c) { delete c; }

int64_t gws_curve_a(const gws_curve* c) { return c ? c->impl.a() : 0; }
int64_t gws_curve_b(const gws_curve* c) { return c ? c->impl.b() : 0; }
int64_t gws_curve_m(const gws_curve* c) { return c ? c->impl.m() : 0; }
int64_t gws_curve_q(const gws_curve* c) { return c ? c->impl.q().value_or(0) : 0; }
int64_t gws_curve_genus(const gws_curve* c) { return c ? c->impl.genus() : 0; }
int gws_curve_q_warning(const gws_curve* c) {
    return c && c->impl.q_below_point_count() ? 1 : 0;
}

size_t gws_vec_list_size(const gws_vec_list* l) { return l ? l->vecs.size() : 0; }

size_t gws_vec_list_dim(const gws_vec_list* l) {
    return l == nullptr || l->vecs.empty() ? 0 : l->vecs.front().size();
}

gws_status gws_vec_list_get(const gws_vec_list* l, size_t index, int64_t* coords,
                            size_t len) {
    return guarded([&] {
        check_handle(l, "list");
        if (index >= l->vecs.size())
            throw std::invalid_argument("vector index out of range");
        write_vec(l->vecs[index], coords, len);
    });
}

void gws_vec_list_free(gws_vec_list* l) { delete l; }

size_t gws_monomial_list_size(const gws_monomial_list* l) { return l ? l->monos.size() : 0; }

size_t gws_monomial_list_g_len(const gws_monomial_list* l) {
    return l == nullptr || l->monos.empty() ? 0 : l->monos.front().g_exp.size();
}

gws_status gws_monomial_list_get(const gws_monomial_list* l, size_t index,
                                 int64_t* h_exp, int64_t* g_exp, size_t g_len) {
    return guarded([&] {
        check_handle(l, "list");
        check_handle(h_exp, "h_exp");
        check_handle(g_exp, "g_exp");
        if (index >= l->monos.size())
            throw std::invalid_argument("monomial index out of range");
        const gws::Monomial& mono = l->monos[index];
        if (g_len != mono.g_exp.size())
            throw std::invalid_argument("output buffer has wrong length");
        *h_exp = mono.h_exp;
        std::memcpy(g_exp, mono.g_exp.data(), g_len * sizeof(int64_t));
    });
}

void gws_monomial_list_free(gws_monomial_list* l) { delete l; }

gws_status gws_generators(const gws_curve* c, gws_vec_list** s_m, gws_vec_list** etas) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(s_m, "s_m");
        check_handle(etas, "etas");
        gws::GeneratorData data = gws::generating_data(c->impl);
        *s_m = new gws_vec_list{std::move(data.s_m)};
        *etas = new gws_vec_list{std::move(data.etas)};
    });
}

gws_status gws_pole_vector(const gws_curve* c, int64_t h_exp, const int64_t* g_exp,
                           size_t g_len, int64_t* out, size_t out_len) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(g_exp, "g_exp");
        gws::Monomial mono{h_exp, std::vector<gws::Int>(g_exp, g_exp + g_len)};
        write_vec(gws::pole_vector(c->impl, mono), out, out_len);
    });
}

gws_status gws_dimension(const gws_curve* c, const int64_t* alpha, size_t len,
                         int64_t* total) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(total, "total");
        *total = gws::dimension(c->impl, to_vec(alpha, len)).total;
    });
}

gws_status gws_dimension_breakdown(const gws_curve* c, const int64_t* alpha, size_t len,
                                   int64_t* terms, size_t terms_len, int64_t* total) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(terms, "terms");
        check_handle(total, "total");
        gws::DimensionBreakdown d = gws::dimension(c->impl, to_vec(alpha, len));
        if (terms_len != d.terms.size())
            throw std::invalid_argument("terms buffer must have length b");
        std::memcpy(terms, d.terms.data(), d.terms.size() * sizeof(int64_t));
        *total = d.total;
    });
}

gws_status gws_dimension_full_support(const gws_curve* c, const int64_t* alpha,
                                      size_t len, int64_t* total) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(total, "total");
        *total = gws::dimension_full_support(c->impl, to_vec(alpha, len)).total;
    });
}

gws_status gws_basis(const gws_curve* c, const int64_t* alpha, size_t len,
                     gws_monomial_list** out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = new gws_monomial_list{gws::basis(c->impl, to_vec(alpha, len))};
    });
}

gws_status gws_is_member(const gws_curve* c, const int64_t* alpha, size_t len, int* out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = gws::is_member(c->impl, to_vec(alpha, len)) ? 1 : 0;
    });
}

gws_status gws_is_absolute_maximal(const gws_curve* c, const int64_t* alpha, size_t len,
                                   int* out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = gws::is_absolute_maximal(c->impl, to_vec(alpha, len)) ? 1 : 0;
    });
}

gws_status gws_is_discrepancy(const gws_curve* c, const int64_t* alpha, size_t len,
                              int64_t point_i, int64_t point_j, int* out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = gws::is_discrepancy(c->impl, to_vec(alpha, len), point_i, point_j) ? 1 : 0;
    });
}

gws_status gws_supported_floor(const gws_curve* c, const int64_t* alpha, size_t len,
                               int64_t* out, size_t out_len) {
    return guarded([&] {
        check_handle(c, "curve");
        write_vec(gws::supported_floor(c->impl, to_vec(alpha, len)), out, out_len);
    });
}

gws_status gws_full_floor(const gws_curve* c, const int64_t* alpha, size_t len,
                          int64_t* out, size_t out_len) {
    return guarded([&] {
        check_handle(c, "curve");
        write_vec(gws::full_floor(c->impl, to_vec(alpha, len)), out, out_len);
    });
}

gws_status gws_gamma_below(const gws_curve* c, const int64_t* alpha, size_t len,
                           uint64_t cap, gws_vec_list** out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = new gws_vec_list{
            gws::gamma_below(c->impl, to_vec(alpha, len), limits_from(cap))};
    });
}

gws_status gws_oracle_gamma_below(const gws_curve* c, const int64_t* alpha, size_t len,
                                  uint64_t cap, gws_vec_list** out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = new gws_vec_list{
            gws::oracle::gamma_below_by_scan(c->impl, to_vec(alpha, len), limits_from(cap))};
    });
}

gws_status gws_oracle_dimension(const gws_curve* c, const int64_t* alpha, size_t len,
                                int64_t coord, uint64_t cap, int64_t* out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = gws::oracle::dim_by_class_counting(c->impl, to_vec(alpha, len), coord,
                                                  limits_from(cap));
    });
}

gws_status gws_oracle_is_member(const gws_curve* c, const int64_t* alpha, size_t len,
                                uint64_t cap, int* out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = gws::oracle::member_by_lub(c->impl, to_vec(alpha, len), limits_from(cap))
                   ? 1
                   : 0;
    });
}

gws_status gws_oracle_is_absolute_maximal(const gws_curve* c, const int64_t* alpha,
                                          size_t len, uint64_t cap, int* out) {
    return guarded([&] {
        check_handle(c, "curve");
        check_handle(out, "out");
        *out = gws::oracle::absolute_maximal_by_definition(c->impl, to_vec(alpha, len),
                                                           limits_from(cap))
                   ? 1
                   : 0;
    });
}

gws_status gws_oracle_floor(const gws_curve* c, const int64_t* alpha, size_t len,
                            uint64_t point_cap, int64_t* out, size_t out_len) {
    return guarded([&] {
        check_handle(c, "curve");
        uint64_t cap = point_cap == 0 ? gws::oracle::BoxSpec::kDefaultMaxPoints : point_cap;
        write_vec(gws::oracle::floor_by_exhaustion(c->impl, to_vec(alpha, len), cap), out,
                  out_len);
    });
}

}  // extern "C"
