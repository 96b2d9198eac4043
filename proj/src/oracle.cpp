#include "gws/oracle.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "gws/errors.hpp"
#include "gws/riemann_roch.hpp"

namespace gws::oracle {

namespace {

void require_length(const CurveFamily& c, const IntVec& alpha, const char* op) {
    if (alpha.size() != static_cast<std::size_t>(c.m()))
        throw std::invalid_argument(std::string(op) + ": alpha length must equal m");
}

}  // namespace

BoxSpec::BoxSpec(IntVec lo_, IntVec hi_, std::uint64_t max_points_)
    : lo(std::move(lo_)), hi(std::move(hi_)), max_points(max_points_) {
    if (lo.size() != hi.size() || !leq(lo, hi))
        throw std::invalid_argument("BoxSpec: requires lo <= hi coordinate-wise");
}

std::uint64_t BoxSpec::volume() const {
    std::uint64_t vol = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) {
        std::uint64_t side = static_cast<std::uint64_t>(checked_sub(hi[j], lo[j])) + 1;
        if (vol > UINT64_MAX / side) return UINT64_MAX;
        vol *= side;
    }
    return vol;
}

std::vector<IntVec> gamma_below_by_scan(const CurveFamily& c, const IntVec& alpha,
                                        const EnumerationLimits& limits) {
    require_length(c, alpha, "gamma_below_by_scan");
    const Int b = c.b();
    const std::size_t nd = alpha.size() - 1;

    std::vector<IntVec> found;
    std::uint64_t scanned = 0;
    for (Int i = 0; i < b; ++i) {
        std::vector<Int> caps(nd);
        Int caps_sum = 0;
        for (std::size_t j = 0; j < nd; ++j) {
            caps[j] = floor_div(checked_sub(alpha[j + 1], i), b);
            caps_sum = checked_add(caps_sum, caps[j]);
        }
        Int num;
        if (i == 0) {
            num = alpha[0];
        } else {
            num = checked_add(alpha[0], checked_mul(i, c.a()));
            num = checked_sub(num, checked_mul(b, c.a() + 1 - c.m()));
        }
        Int sum_lo = checked_sub(0, floor_div(num, b));
        if (caps_sum < sum_lo) continue;

        // Per-coordinate lower bound: the rest can contribute at most the sum
        // of the other caps toward sum_lo.
        std::vector<Int> lo(nd);
        for (std::size_t j = 0; j < nd; ++j)
            lo[j] = checked_sub(sum_lo, checked_sub(caps_sum, caps[j]));

        std::vector<Int> d = lo;
        for (;;) {
            if (++scanned > limits.max_results)
                throw CapExceededError("gamma_below_by_scan: scan cap exceeded");
            IntVec beta = element_of(c, TypedElement{i, d});
            if (leq(beta, alpha)) found.push_back(std::move(beta));
            std::size_t pos = 0;
            while (pos < nd && d[pos] == caps[pos]) {
                d[pos] = lo[pos];
                ++pos;
            }
            if (pos == nd) break;
            ++d[pos];
        }
    }

    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

Int dim_by_class_counting(const CurveFamily& c, const IntVec& alpha, Int coord,
                          const EnumerationLimits& limits) {
    require_length(c, alpha, "dim_by_class_counting");
    if (coord < 1 || coord > c.m())
        throw std::invalid_argument("dim_by_class_counting: coordinate out of range");
    std::set<Int> values;
    for (const IntVec& beta : gamma_below(c, alpha, limits))
        values.insert(beta[static_cast<std::size_t>(coord - 1)]);
    return static_cast<Int>(values.size());
}

bool member_by_lub(const CurveFamily& c, const IntVec& alpha,
                   const EnumerationLimits& limits) {
    require_length(c, alpha, "member_by_lub");
    std::vector<IntVec> below = gamma_below(c, alpha, limits);
    return !below.empty() && lub(below) == alpha;
}

bool absolute_maximal_by_definition(const CurveFamily& c, const IntVec& alpha,
                                    const EnumerationLimits& limits) {
    require_length(c, alpha, "absolute_maximal_by_definition");
    const std::size_t m = alpha.size();
    if (m >= 24)
        throw CapExceededError("absolute_maximal_by_definition: too many index subsets");
    if (!member_by_lub(c, alpha, limits)) return false;

    for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        // J = the set bits; drop alpha by one off J and see whether any
        // member still reaches alpha on all of J.
        std::vector<Int> shifted(alpha.coords().begin(), alpha.coords().end());
        for (std::size_t j = 0; j < m; ++j)
            if (!(mask & (1u << j))) shifted[j] = checked_sub(shifted[j], 1);
        std::vector<IntVec> below = gamma_below(c, IntVec(shifted), limits);
        if (below.empty()) continue;
        IntVec top = lub(below);
        bool reaches = true;
        for (std::size_t j = 0; j < m && reaches; ++j)
            if ((mask & (1u << j)) && top[j] != alpha[j]) reaches = false;
        if (reaches) return false;
    }
    return true;
}

namespace {

// Scans the box for the minimum-norm divisor of the target dimension.
// Reports a minimizer on the lower boundary through on_boundary so the
// caller can widen and retry.
IntVec scan_floor(const CurveFamily& c, const IntVec& alpha, const BoxSpec& box,
                  bool& on_boundary) {
    const Int target = dimension(c, alpha).total;
    if (target == 0)
        throw std::domain_error("floor_by_exhaustion: undefined for l(D_alpha) = 0");
    if (box.volume() > box.max_points)
        throw CapExceededError("floor_by_exhaustion: box volume exceeds point cap");

    std::optional<IntVec> best;
    Int best_norm = 0;
    bool tie = false;

    std::vector<Int> p(box.lo.coords().begin(), box.lo.coords().end());
    for (;;) {
        IntVec beta{std::vector<Int>(p)};
        if (leq(beta, alpha) && dimension(c, beta).total == target) {
            Int n = beta.norm();
            if (!best || n < best_norm) {
                best = beta;
                best_norm = n;
                tie = false;
            } else if (n == best_norm) {
                tie = true;
            }
        }
        std::size_t pos = 0;
        while (pos < p.size() && p[pos] == box.hi[pos]) {
            p[pos] = box.lo[pos];
            ++pos;
        }
        if (pos == p.size()) break;
        ++p[pos];
    }

    if (!best)
        throw std::runtime_error("floor_by_exhaustion: box contains no divisor of equal dimension");
    if (tie)
        throw std::runtime_error("floor_by_exhaustion: minimum-norm divisor is not unique");
    on_boundary = false;
    for (std::size_t j = 0; j < best->size(); ++j)
        if ((*best)[j] == box.lo[j]) on_boundary = true;
    return *best;
}

}  // namespace

IntVec floor_by_exhaustion(const CurveFamily& c, const IntVec& alpha, const BoxSpec& box) {
    require_length(c, alpha, "floor_by_exhaustion");
    if (box.lo.size() != alpha.size())
        throw std::invalid_argument("floor_by_exhaustion: box length must equal m");
    bool on_boundary = false;
    IntVec best = scan_floor(c, alpha, box, on_boundary);
    if (on_boundary)
        throw std::runtime_error("floor_by_exhaustion: minimizer on box boundary; box too small");
    return best;
}

IntVec floor_by_exhaustion(const CurveFamily& c, const IntVec& alpha,
                           std::uint64_t max_points) {
    require_length(c, alpha, "floor_by_exhaustion");
    Int margin = checked_mul(2, c.b());
    for (int widenings = 0;; ++widenings) {
        std::vector<Int> lo(alpha.size());
        for (std::size_t j = 0; j < alpha.size(); ++j)
            lo[j] = checked_sub(alpha[j], margin);
        bool on_boundary = false;
        IntVec best = scan_floor(c, alpha, BoxSpec(IntVec(std::move(lo)), alpha, max_points),
                                 on_boundary);
        if (!on_boundary) return best;
        if (widenings == 3)
            throw std::runtime_error(
                "floor_by_exhaustion: minimizer still on box boundary after widening");
        margin = checked_mul(margin, 2);
    }
}

}  // namespace gws::oracle
