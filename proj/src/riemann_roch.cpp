#include "gws/riemann_roch.hpp"

#include <algorithm>
#include <stdexcept>

namespace gws {

namespace {

void require_length(const CurveFamily& c, const IntVec& alpha, const char* op) {
    if (alpha.size() != static_cast<std::size_t>(c.m()))
        throw std::invalid_argument(std::string(op) + ": alpha length must equal m");
}

// Signed count, before clamping at zero, of attainable pole orders at P_1
// among elements below alpha with index i (i = 0 selects the g-only kind).
Int raw_term(const CurveFamily& c, const IntVec& alpha, Int i) {
    const Int b = c.b();
    Int t;
    if (i == 0) {
        t = checked_add(floor_div(alpha[0], b), 1);
        for (std::size_t j = 1; j < alpha.size(); ++j)
            t = checked_add(t, floor_div(alpha[j], b));
    } else {
        // alpha_1 + i*a - b*(a+1-m)
        Int num = checked_add(alpha[0], checked_mul(i, c.a()));
        num = checked_sub(num, checked_mul(b, c.a() + 1 - c.m()));
        t = checked_add(floor_div(num, b), 1);
        for (std::size_t j = 1; j < alpha.size(); ++j)
            t = checked_add(t, floor_div(checked_sub(alpha[j], i), b));
    }
    return t;
}

DimensionBreakdown breakdown_from(const CurveFamily& c, const IntVec& alpha,
                                  Int (*term)(const CurveFamily&, const IntVec&, Int)) {
    DimensionBreakdown out;
    out.terms.resize(static_cast<std::size_t>(c.b()));
    for (Int i = 0; i < c.b(); ++i) {
        Int n = std::max<Int>(term(c, alpha, i), 0);
        out.terms[static_cast<std::size_t>(i)] = n;
        out.total = checked_add(out.total, n);
    }
    return out;
}

Int raw_term_full_support(const CurveFamily& c, const IntVec& alpha, Int i) {
    const Int b = c.b();
    Int num = checked_add(alpha[0], checked_mul(i, c.a()));
    Int t = checked_add(floor_div(num, b), 1);
    for (std::size_t j = 1; j < alpha.size(); ++j)
        t = checked_add(t, floor_div(checked_sub(alpha[j], i), b));
    return t;
}

// Bounds of the admissible exponent-sum interval for index i: the basis holds
// one representative per sum in [lo, hi], and N_i = max(hi - lo + 1, 0).
struct SumInterval {
    Int lo, hi;
};

SumInterval sum_interval(const CurveFamily& c, const IntVec& alpha, Int i) {
    const Int b = c.b();
    Int hi = 0;
    for (std::size_t j = 1; j < alpha.size(); ++j)
        hi = checked_add(hi, floor_div(checked_sub(alpha[j], i), b));
    Int num;
    if (i == 0) {
        num = alpha[0];
    } else {
        num = checked_add(alpha[0], checked_mul(i, c.a()));
        num = checked_sub(num, checked_mul(b, c.a() + 1 - c.m()));
    }
    return {checked_sub(0, floor_div(num, b)), hi};
}

}  // namespace

DimensionBreakdown dimension(const CurveFamily& c, const IntVec& alpha) {
    require_length(c, alpha, "dimension");
    return breakdown_from(c, alpha, raw_term);
}

DimensionBreakdown dimension_full_support(const CurveFamily& c, const IntVec& alpha) {
    if (c.m() != c.a() + 1)
        throw std::invalid_argument("dimension_full_support: requires m = a+1");
    require_length(c, alpha, "dimension_full_support");
    return breakdown_from(c, alpha, raw_term_full_support);
}

std::vector<Monomial> basis(const CurveFamily& c, const IntVec& alpha) {
    require_length(c, alpha, "basis");
    const Int b = c.b();
    const std::size_t ng = alpha.size() - 1;
    std::vector<Monomial> out;

    for (Int i = 0; i < b; ++i) {
        auto [lo, hi] = sum_interval(c, alpha, i);
        if (lo > hi) continue;
        // Representative choice: cap every exponent but the first, then let
        // d_2 absorb the remaining sum. d_2 <= its own cap holds because the
        // sum never exceeds the sum of caps.
        Int tail_caps = 0;
        std::vector<Int> d(ng, 0);
        for (std::size_t j = 1; j < ng; ++j) {
            d[j] = floor_div(checked_sub(alpha[j + 1], i), b);
            tail_caps = checked_add(tail_caps, d[j]);
        }
        for (Int s = lo; s <= hi; ++s) {
            d[0] = checked_sub(s, tail_caps);
            Monomial mono;
            mono.g_exp.resize(ng);
            if (i == 0) {
                mono.h_exp = 0;
                for (std::size_t j = 0; j < ng; ++j) mono.g_exp[j] = -d[j];
            } else {
                mono.h_exp = b - i;
                for (std::size_t j = 0; j < ng; ++j) mono.g_exp[j] = checked_sub(-1, d[j]);
            }
            out.push_back(std::move(mono));
        }
    }
    return out;
}

IntVec supported_floor(const CurveFamily& c, const IntVec& alpha) {
    require_length(c, alpha, "supported_floor");
    const Int b = c.b();
    DimensionBreakdown dim = dimension(c, alpha);
    if (dim.total == 0)
        throw std::domain_error("supported_floor: undefined for l(D_alpha) = 0");

    std::vector<Int> out(alpha.size());
    bool first_set = false;
    for (Int i = 0; i < b; ++i) {
        if (dim.terms[static_cast<std::size_t>(i)] == 0) continue;
        Int cand1;
        if (i == 0) {
            cand1 = checked_mul(b, floor_div(alpha[0], b));
        } else {
            Int num = checked_add(alpha[0], checked_mul(i, c.a()));
            num = checked_sub(num, checked_mul(b, c.a() + 1 - c.m()));
            cand1 = checked_mul(b, checked_add(c.a() + 1 - c.m(), floor_div(num, b)));
            cand1 = checked_sub(cand1, checked_mul(c.a(), i));
        }
        if (!first_set || cand1 > out[0]) out[0] = cand1;
        for (std::size_t j = 1; j < alpha.size(); ++j) {
            Int cand = checked_add(i, checked_mul(b, floor_div(checked_sub(alpha[j], i), b)));
            if (!first_set || cand > out[j]) out[j] = cand;
        }
        first_set = true;
    }
    return IntVec(std::move(out));
}

IntVec full_floor(const CurveFamily& c, const IntVec& alpha) {
    if (c.m() != c.a() + 1)
        throw std::invalid_argument("full_floor: requires m = a+1");
    require_length(c, alpha, "full_floor");
    const Int b = c.b();
    DimensionBreakdown dim = dimension_full_support(c, alpha);
    if (dim.total == 0)
        throw std::domain_error("full_floor: undefined for l(D_alpha) = 0");

    std::vector<Int> out(alpha.size());
    bool first_set = false;
    for (Int i = 0; i < b; ++i) {
        if (dim.terms[static_cast<std::size_t>(i)] == 0) continue;
        Int num = checked_add(alpha[0], checked_mul(i, c.a()));
        Int cand1 = checked_sub(checked_mul(b, floor_div(num, b)), checked_mul(c.a(), i));
        if (!first_set || cand1 > out[0]) out[0] = cand1;
        for (std::size_t j = 1; j < alpha.size(); ++j) {
            Int cand = checked_add(i, checked_mul(b, floor_div(checked_sub(alpha[j], i), b)));
            if (!first_set || cand > out[j]) out[j] = cand;
        }
        first_set = true;
    }
    return IntVec(std::move(out));
}

}  // namespace gws
