#pragma once

#include "gws/curve.hpp"

namespace gws {

// Per-index summands of the dimension formula. terms[i] holds N_i for
// i = 0..b-1: N_0 counts functions built from the g_j alone, N_i (i >= 1)
// those with h-exponent b-i. total is the Riemann-Roch dimension l(D_alpha).
struct DimensionBreakdown {
    std::vector<Int> terms;
    Int total = 0;
};

// Closed-form l(D_alpha) for D_alpha = alpha_1 P_1 + ... + alpha_m P_m.
DimensionBreakdown dimension(const CurveFamily& c, const IntVec& alpha);

// Full-support specialization, valid only when m = a+1; terms are the
// simplified summands. Always agrees with dimension() on total and terms.
DimensionBreakdown dimension_full_support(const CurveFamily& c, const IntVec& alpha);

// Monomial basis of L(D_alpha): one representative per attainable pole order
// at P_1, dimension(c, alpha).total elements in all. Empty when l = 0.
std::vector<Monomial> basis(const CurveFamily& c, const IntVec& alpha);

// Supported floor: the unique minimum-norm beta <= alpha with support in
// {P_1..P_m} and l(D_beta) = l(D_alpha). Requires l(D_alpha) > 0.
IntVec supported_floor(const CurveFamily& c, const IntVec& alpha);

// Divisor floor for full support (m = a+1); coincides with the supported
// floor there. Requires m = a+1 and l(D_alpha) > 0.
IntVec full_floor(const CurveFamily& c, const IntVec& alpha);

}  // namespace gws
