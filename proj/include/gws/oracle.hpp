#pragma once

#include "gws/semigroup.hpp"

// Brute-force validators. Each recomputes a closed-form result from first
// principles at desk scale: enumeration, box scans and extremum searches
// instead of the formulas they are meant to check.
namespace gws::oracle {

// Inclusive coordinate-wise box for exhaustive scans.
struct BoxSpec {
    BoxSpec(IntVec lo, IntVec hi, std::uint64_t max_points = kDefaultMaxPoints);

    static constexpr std::uint64_t kDefaultMaxPoints = 1'000'000;

    std::uint64_t volume() const;

    IntVec lo, hi;
    std::uint64_t max_points;
};

// Same set as gamma_below, computed the dumb way: full box scan over the
// element parameters with a final <= alpha filter, no pruning.
std::vector<IntVec> gamma_below_by_scan(const CurveFamily& c, const IntVec& alpha,
                                        const EnumerationLimits& limits = {});

// Dimension as the number of distinct coord-th coordinates (1-based) among
// the generating-set elements below alpha.
Int dim_by_class_counting(const CurveFamily& c, const IntVec& alpha, Int coord,
                          const EnumerationLimits& limits = {});

// Membership without the dimension formula: alpha belongs to the semigroup
// exactly when the elements below it are nonempty and their least upper
// bound is alpha itself.
bool member_by_lub(const CurveFamily& c, const IntVec& alpha,
                   const EnumerationLimits& limits = {});

// Absolute maximality from the definition: no member may agree with alpha on
// a nonempty proper index set J while sitting strictly below it elsewhere.
// Checked for every J by enumeration, independent of the dimension formula.
bool absolute_maximal_by_definition(const CurveFamily& c, const IntVec& alpha,
                                    const EnumerationLimits& limits = {});

// Minimum-norm beta <= alpha with l(D_beta) = l(D_alpha), found by scanning
// the box. Errors when l = 0, when the minimizer is not unique (which would
// contradict the theory), or when it touches the lower box boundary.
IntVec floor_by_exhaustion(const CurveFamily& c, const IntVec& alpha, const BoxSpec& box);

// Same, with an automatic box [alpha - 2b, alpha], widened and retried up to
// three times if the minimizer lands on the boundary.
IntVec floor_by_exhaustion(const CurveFamily& c, const IntVec& alpha,
                           std::uint64_t max_points = BoxSpec::kDefaultMaxPoints);

}  // namespace gws::oracle
