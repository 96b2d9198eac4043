#pragma once

#include <cstdint>

#include "gws/curve.hpp"

namespace gws {

// Finite data determining the full generating set: the window elements s_m
// (b vectors: zero plus one per i = 1..b-1, coordinates 2..m in [0, b)) and
// the translation-lattice generators eta^2..eta^m.
struct GeneratorData {
    std::vector<IntVec> s_m;   // lexicographically sorted
    std::vector<IntVec> etas;  // eta^i has -b at position i-1, b at position i
};

GeneratorData generating_data(const CurveFamily& c);

// Parametrized generating-set element. i = 0 selects the pure g-monomial
// kind, i in 1..b-1 the kind with h-exponent b-i; d holds (d_2, ..., d_m).
struct TypedElement {
    Int i = 0;
    std::vector<Int> d;
};

// Realizes the element as a vector in Z^m. Equals the pole vector of
// monomial_of(c, te) by construction; the two routes are kept independent.
IntVec element_of(const CurveFamily& c, const TypedElement& te);

// The monomial whose pole vector realizes te.
Monomial monomial_of(const CurveFamily& c, const TypedElement& te);

struct EnumerationLimits {
    std::uint64_t max_results = 10'000'000;
};

// Complete finite set of generating-set elements <= alpha, lexicographically
// sorted and deduplicated. Throws CapExceededError past the result cap.
std::vector<IntVec> gamma_below(const CurveFamily& c, const IntVec& alpha,
                                const EnumerationLimits& limits = {});

// Semigroup membership: l(D_alpha) drops by exactly one at every point.
bool is_member(const CurveFamily& c, const IntVec& alpha);

// Absolute maximality: member and l drops by exactly one when all m points
// are removed together.
bool is_absolute_maximal(const CurveFamily& c, const IntVec& alpha);

// Whether D_alpha is a discrepancy with respect to (P_i, P_j). Point indices
// are 1-based and must differ.
bool is_discrepancy(const CurveFamily& c, const IntVec& alpha, Int point_i, Int point_j);

}  // namespace gws
