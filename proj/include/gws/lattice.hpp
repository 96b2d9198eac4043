#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace gws {

using Int = std::int64_t;

// Checked 64-bit arithmetic. Overflow throws std::overflow_error; results are
// never silently wrapped.
Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_mul(Int x, Int y);

// Mathematical floor division: rounds toward -infinity, so floor_div(-1, 28)
// is -1. Requires d > 0.
Int floor_div(Int n, Int d);

// Element of Z^m, m >= 2. Coordinate j (0-based j-1) corresponds to the
// distinguished point P_j. Immutable value type.
class IntVec {
public:
    explicit IntVec(std::vector<Int> coords);

    static IntVec zeros(std::size_t m);
    static IntVec ones(std::size_t m);
    // Unit vector e_point; point is 1-based.
    static IntVec unit(std::size_t m, std::size_t point);

    std::size_t size() const { return coords_.size(); }
    Int operator[](std::size_t idx) const { return coords_[idx]; }
    std::span<const Int> coords() const { return coords_; }

    // Coordinate sum; equals deg(D_v) for the divisor with these coefficients.
    Int norm() const;

    friend bool operator==(const IntVec&, const IntVec&) = default;

private:
    std::vector<Int> coords_;
};

IntVec operator+(const IntVec& u, const IntVec& v);
IntVec operator-(const IntVec& u, const IntVec& v);
IntVec scaled(Int k, const IntVec& v);

// Coordinate-wise partial order: u_j <= v_j for all j.
bool leq(const IntVec& u, const IntVec& v);

// Coordinate-wise maximum of a nonempty set of equal-length vectors.
IntVec lub(std::span<const IntVec> set);

// Strict lexicographic order; the deterministic output order used throughout.
bool lex_less(const IntVec& u, const IntVec& v);

// Prints "(a, b, c)".
std::ostream& operator<<(std::ostream& os, const IntVec& v);

}  // namespace gws
