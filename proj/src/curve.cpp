#include "gws/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace gws {

CurveFamily CurveFamily::create(Int a, Int b, Int m, std::optional<Int> q) {
    if (a <= 0) throw std::invalid_argument("CurveFamily: a must be positive");
    if (b <= 0) throw std::invalid_argument("CurveFamily: b must be positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("CurveFamily: a and b must be coprime");
    if (m < 2) throw std::invalid_argument("CurveFamily: m must be at least 2");
    if (m > checked_add(a, 1))
        throw std::invalid_argument("CurveFamily: m must be at most a+1");
    if (q && *q < 2)
        throw std::invalid_argument("CurveFamily: q must be at least 2");
    // gcd(a,b)=1 makes one of a-1, b-1 even, so the division is exact.
    Int genus = checked_mul(a - 1, b - 1) / 2;
    bool warn = q && *q < a + 1;
    return CurveFamily(a, b, m, q, genus, warn);
}

CurveFamily CurveFamily::hermitian(Int ell, Int r, Int m) {
    if (ell < 2) throw std::invalid_argument("hermitian: ell must be at least 2");
    if (r < 1 || r % 2 == 0)
        throw std::invalid_argument("hermitian: r must be a positive odd integer");
    Int ell_r = 1;
    for (Int k = 0; k < r; ++k) ell_r = checked_mul(ell_r, ell);
    Int b = checked_add(ell_r, 1);
    Int q = checked_mul(ell_r, ell_r);
    return create(ell, b, m, q);
}

IntVec pole_vector(const CurveFamily& c, const Monomial& mono) {
    const std::size_t m = static_cast<std::size_t>(c.m());
    if (mono.g_exp.size() != m - 1)
        throw std::invalid_argument("pole_vector: monomial has wrong number of g exponents");
    if (mono.h_exp < 0)
        throw std::invalid_argument("pole_vector: h exponent must be nonnegative");

    std::vector<Int> out(m, 0);
    out[0] = checked_mul(mono.h_exp, c.a());
    for (std::size_t j = 1; j < m; ++j) {
        Int e = mono.g_exp[j - 1];
        out[0] = checked_add(out[0], checked_mul(e, c.b()));
        out[j] = checked_sub(checked_mul(e, -c.b()), mono.h_exp);
    }
    return IntVec(std::move(out));
}

}  // namespace gws
