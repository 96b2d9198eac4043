#include "gws/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace gws {

Int checked_add(Int x, Int y) {
    Int out;
    if (__builtin_add_overflow(x, y, &out))
        throw std::overflow_error("integer overflow in addition");
    return out;
}

Int checked_sub(Int x, Int y) {
    Int out;
    if (__builtin_sub_overflow(x, y, &out))
        throw std::overflow_error("integer overflow in subtraction");
    return out;
}

Int checked_mul(Int x, Int y) {
    Int out;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::overflow_error("integer overflow in multiplication");
    return out;
}

Int floor_div(Int n, Int d) {
    if (d <= 0)
        throw std::invalid_argument("floor_div: divisor must be positive");
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

IntVec::IntVec(std::vector<Int> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw std::invalid_argument("IntVec: length must be at least 2");
}

IntVec IntVec::zeros(std::size_t m) {
    return IntVec(std::vector<Int>(m, 0));
}

IntVec IntVec::ones(std::size_t m) {
    return IntVec(std::vector<Int>(m, 1));
}

IntVec IntVec::unit(std::size_t m, std::size_t point) {
    if (point < 1 || point > m)
        throw std::invalid_argument("IntVec::unit: point index out of range");
    std::vector<Int> c(m, 0);
    c[point - 1] = 1;
    return IntVec(std::move(c));
}

Int IntVec::norm() const {
    Int sum = 0;
    for (Int c : coords_) sum = checked_add(sum, c);
    return sum;
}

namespace {

void require_same_size(const IntVec& u, const IntVec& v, const char* op) {
    if (u.size() != v.size())
        throw std::invalid_argument(std::string(op) + ": length mismatch");
}

}  // namespace

IntVec operator+(const IntVec& u, const IntVec& v) {
    require_same_size(u, v, "IntVec addition");
    std::vector<Int> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) out[j] = checked_add(u[j], v[j]);
    return IntVec(std::move(out));
}

IntVec operator-(const IntVec& u, const IntVec& v) {
    require_same_size(u, v, "IntVec subtraction");
    std::vector<Int> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) out[j] = checked_sub(u[j], v[j]);
    return IntVec(std::move(out));
}

IntVec scaled(Int k, const IntVec& v) {
    std::vector<Int> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = checked_mul(k, v[j]);
    return IntVec(std::move(out));
}

bool leq(const IntVec& u, const IntVec& v) {
    require_same_size(u, v, "leq");
    for (std::size_t j = 0; j < u.size(); ++j)
        if (u[j] > v[j]) return false;
    return true;
}

IntVec lub(std::span<const IntVec> set) {
    if (set.empty())
        throw std::invalid_argument("lub: set must be nonempty");
    std::vector<Int> out(set.front().coords().begin(), set.front().coords().end());
    for (const IntVec& v : set.subspan(1)) {
        if (v.size() != out.size())
            throw std::invalid_argument("lub: length mismatch");
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(out[j], v[j]);
    }
    return IntVec(std::move(out));
}

bool lex_less(const IntVec& u, const IntVec& v) {
    return std::lexicographical_compare(u.coords().begin(), u.coords().end(),
                                        v.coords().begin(), v.coords().end());
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
    os << '(';
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) os << ", ";
        os << v[j];
    }
    return os << ')';
}

}  // namespace gws
