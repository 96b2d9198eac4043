#pragma once

#include <optional>

#include "gws/lattice.hpp"

namespace gws {

// Curve with a plane model f(y) = g(x), deg f = a, deg g = b, gcd(a, b) = 1,
// genus (a-1)(b-1)/2, carrying a+1 distinguished rational points P_1..P_{a+1}
// with a*P_1 ~ P_2 + ... + P_{a+1} and b*P_1 ~ b*P_j. Only the first m points
// are tracked; points are referenced by index, never by coordinates.
class CurveFamily {
public:
    // Validates a, b >= 1, gcd(a, b) = 1 and 2 <= m <= a+1. q is informational
    // (field size); values below a+1 set a warning flag rather than failing.
    static CurveFamily create(Int a, Int b, Int m, std::optional<Int> q = std::nullopt);

    // Preset for x^{ell^r + 1} = y^ell + y over F_{ell^{2r}} with r odd:
    // a = ell, b = ell^r + 1, q = ell^{2r}.
    static CurveFamily hermitian(Int ell, Int r, Int m);

    Int a() const { return a_; }
    Int b() const { return b_; }
    Int m() const { return m_; }
    std::optional<Int> q() const { return q_; }
    Int genus() const { return genus_; }

    // True when q was supplied but is smaller than a+1, the point count the
    // geometric interpretation requires.
    bool q_below_point_count() const { return q_warning_; }

private:
    CurveFamily(Int a, Int b, Int m, std::optional<Int> q, Int genus, bool warn)
        : a_(a), b_(b), m_(m), q_(q), genus_(genus), q_warning_(warn) {}

    Int a_, b_, m_;
    std::optional<Int> q_;
    Int genus_;
    bool q_warning_;
};

// Formal product h^{h_exp} * prod_{j=2..m} g_j^{g_exp[j-2]}, where
// div(h) = P_2 + ... + P_{a+1} - a*P_1 and div(g_j) = b*P_j - b*P_1.
struct Monomial {
    Int h_exp = 0;           // >= 0
    std::vector<Int> g_exp;  // size m-1, signed

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Pole orders (-v_{P_1}, ..., -v_{P_m}) of the monomial, linear in the
// exponents: h contributes (a, -1, ..., -1) and g_j contributes b at P_1
// and -b at P_j.
IntVec pole_vector(const CurveFamily& c, const Monomial& mono);

}  // namespace gws
