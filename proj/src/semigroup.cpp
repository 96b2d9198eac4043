#include "gws/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

#include "gws/errors.hpp"
#include "gws/riemann_roch.hpp"

namespace gws {

namespace {

void require_length(const CurveFamily& c, const IntVec& alpha, const char* op) {
    if (alpha.size() != static_cast<std::size_t>(c.m()))
        throw std::invalid_argument(std::string(op) + ": alpha length must equal m");
}

}  // namespace

GeneratorData generating_data(const CurveFamily& c) {
    const Int a = c.a(), b = c.b(), m = c.m();
    GeneratorData out;
    out.s_m.reserve(static_cast<std::size_t>(b));
    out.s_m.push_back(IntVec::zeros(static_cast<std::size_t>(m)));
    for (Int i = 1; i < b; ++i) {
        std::vector<Int> v(static_cast<std::size_t>(m), i);
        v[0] = checked_sub(checked_mul(a, b - i), checked_mul(b, m - 1));
        out.s_m.emplace_back(std::move(v));
    }
    std::sort(out.s_m.begin(), out.s_m.end(), lex_less);

    out.etas.reserve(static_cast<std::size_t>(m - 1));
    for (Int i = 2; i <= m; ++i) {
        std::vector<Int> v(static_cast<std::size_t>(m), 0);
        v[static_cast<std::size_t>(i - 2)] = -b;
        v[static_cast<std::size_t>(i - 1)] = b;
        out.etas.emplace_back(std::move(v));
    }
    return out;
}

IntVec element_of(const CurveFamily& c, const TypedElement& te) {
    const Int b = c.b();
    const std::size_t m = static_cast<std::size_t>(c.m());
    if (te.i < 0 || te.i >= b)
        throw std::invalid_argument("element_of: index i out of range");
    if (te.d.size() != m - 1)
        throw std::invalid_argument("element_of: d must have m-1 entries");

    Int sum_d = 0;
    for (Int dj : te.d) sum_d = checked_add(sum_d, dj);

    std::vector<Int> out(m);
    if (te.i == 0) {
        out[0] = checked_mul(-b, sum_d);
        for (std::size_t j = 1; j < m; ++j) out[j] = checked_mul(b, te.d[j - 1]);
    } else {
        Int k = checked_sub(c.a() + 1 - c.m(), sum_d);
        out[0] = checked_sub(checked_mul(b, k), checked_mul(c.a(), te.i));
        for (std::size_t j = 1; j < m; ++j)
            out[j] = checked_add(te.i, checked_mul(b, te.d[j - 1]));
    }
    return IntVec(std::move(out));
}

Monomial monomial_of(const CurveFamily& c, const TypedElement& te) {
    if (te.i < 0 || te.i >= c.b())
        throw std::invalid_argument("monomial_of: index i out of range");
    if (te.d.size() != static_cast<std::size_t>(c.m()) - 1)
        throw std::invalid_argument("monomial_of: d must have m-1 entries");
    Monomial mono;
    mono.g_exp.resize(te.d.size());
    if (te.i == 0) {
        mono.h_exp = 0;
        for (std::size_t j = 0; j < te.d.size(); ++j) mono.g_exp[j] = -te.d[j];
    } else {
        mono.h_exp = c.b() - te.i;
        for (std::size_t j = 0; j < te.d.size(); ++j)
            mono.g_exp[j] = checked_sub(-1, te.d[j]);
    }
    return mono;
}

namespace {

struct Enumerator {
    const CurveFamily& c;
    std::uint64_t cap;
    std::vector<IntVec> found;

    // Emits every tuple (d_2..d_m) with d_j <= caps[j] and sum >= sum_lo for
    // the given index i, in ascending coordinate order.
    void emit_family(Int i, const std::vector<Int>& caps, Int sum_lo) {
        // suffix_caps[k] = sum of caps[k..end); bounds the attainable tail sum.
        std::vector<Int> suffix_caps(caps.size() + 1, 0);
        for (std::size_t k = caps.size(); k-- > 0;)
            suffix_caps[k] = checked_add(suffix_caps[k + 1], caps[k]);
        if (suffix_caps[0] < sum_lo) return;  // family empty below alpha

        std::vector<Int> d(caps.size());
        descend(i, caps, suffix_caps, sum_lo, d, 0, 0);
    }

    void descend(Int i, const std::vector<Int>& caps, const std::vector<Int>& suffix_caps,
                 Int sum_lo, std::vector<Int>& d, std::size_t pos, Int partial) {
        if (pos == d.size()) {
            if (found.size() >= cap)
                throw CapExceededError("gamma_below: result cap exceeded");
            found.push_back(element_of(c, TypedElement{i, d}));
            return;
        }
        Int lo = checked_sub(checked_sub(sum_lo, partial), suffix_caps[pos + 1]);
        for (Int v = lo; v <= caps[pos]; ++v) {
            d[pos] = v;
            descend(i, caps, suffix_caps, sum_lo, d, pos + 1, checked_add(partial, v));
        }
    }
};

}  // namespace

std::vector<IntVec> gamma_below(const CurveFamily& c, const IntVec& alpha,
                                const EnumerationLimits& limits) {
    require_length(c, alpha, "gamma_below");
    const Int b = c.b();
    const std::size_t m = alpha.size();

    Enumerator en{c, limits.max_results, {}};
    for (Int i = 0; i < b; ++i) {
        std::vector<Int> caps(m - 1);
        for (std::size_t j = 1; j < m; ++j)
            caps[j - 1] = floor_div(checked_sub(alpha[j], i), b);
        Int num;
        if (i == 0) {
            num = alpha[0];
        } else {
            num = checked_add(alpha[0], checked_mul(i, c.a()));
            num = checked_sub(num, checked_mul(b, c.a() + 1 - c.m()));
        }
        en.emit_family(i, caps, checked_sub(0, floor_div(num, b)));
    }

    std::sort(en.found.begin(), en.found.end(), lex_less);
    en.found.erase(std::unique(en.found.begin(), en.found.end()), en.found.end());
    return en.found;
}

bool is_member(const CurveFamily& c, const IntVec& alpha) {
    require_length(c, alpha, "is_member");
    Int l = dimension(c, alpha).total;
    for (std::size_t j = 1; j <= alpha.size(); ++j) {
        if (dimension(c, alpha - IntVec::unit(alpha.size(), j)).total != l - 1)
            return false;
    }
    return true;
}

bool is_absolute_maximal(const CurveFamily& c, const IntVec& alpha) {
    require_length(c, alpha, "is_absolute_maximal");
    Int l = dimension(c, alpha).total;
    if (dimension(c, alpha - IntVec::ones(alpha.size())).total != l - 1)
        return false;
    return is_member(c, alpha);
}

bool is_discrepancy(const CurveFamily& c, const IntVec& alpha, Int point_i, Int point_j) {
    require_length(c, alpha, "is_discrepancy");
    const Int m = c.m();
    if (point_i < 1 || point_i > m || point_j < 1 || point_j > m)
        throw std::invalid_argument("is_discrepancy: point index out of range");
    if (point_i == point_j)
        throw std::invalid_argument("is_discrepancy: points must be distinct");

    IntVec ei = IntVec::unit(alpha.size(), static_cast<std::size_t>(point_i));
    IntVec ej = IntVec::unit(alpha.size(), static_cast<std::size_t>(point_j));
    if (dimension(c, alpha).total == dimension(c, alpha - ej).total) return false;
    return dimension(c, alpha - ei).total == dimension(c, alpha - ei - ej).total;
}

}  // namespace gws
