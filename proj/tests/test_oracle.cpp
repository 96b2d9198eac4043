#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "gws/errors.hpp"
#include "gws/oracle.hpp"
#include "gws/riemann_roch.hpp"
#include "test_util.hpp"

using namespace gws;
using namespace gws::oracle;
using gws::test::V;

namespace {

// Absolute maximality straight off the definition, checking every candidate
// below alpha. Only usable for tiny vectors; validates the faster oracle.
bool naive_absolute_maximal(const CurveFamily& c, const IntVec& alpha) {
    if (!member_by_lub(c, alpha)) return false;
    const std::size_t m = alpha.size();
    for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        // Scan members agreeing with alpha on the mask and strictly below it
        // elsewhere; member norms are nonnegative, bounding the scan.
        Int bound = 0;
        for (std::size_t j = 0; j < m; ++j) bound += std::max<Int>(alpha[j], 0) + 1;
        bool empty = false;
        std::vector<Int> p(m);
        for (std::size_t j = 0; j < m; ++j) {
            p[j] = (mask & (1u << j)) ? alpha[j] : -bound;
            if (p[j] > alpha[j] - ((mask & (1u << j)) ? 0 : 1)) empty = true;
        }
        if (empty) continue;
        for (;;) {
            IntVec beta{std::vector<Int>(p)};
            if (beta != alpha && member_by_lub(c, beta)) return false;
            std::size_t pos = 0;
            while (pos < m) {
                if (mask & (1u << pos)) {
                    ++pos;
                    continue;
                }
                if (p[pos] < alpha[pos] - 1) break;
                p[pos] = -bound;
                ++pos;
            }
            if (pos == m) break;
            ++p[pos];
        }
    }
    return true;
}

}  // namespace

TEST_CASE("class counting reproduces the worked dimensions") {
    CurveFamily c3 = CurveFamily::create(3, 28, 3);
    CHECK(dim_by_class_counting(c3, V({8, 7, -1}), 1) == 2);
    CHECK(dim_by_class_counting(c3, V({8, 7, -1}), 2) == 2);
    CHECK(dim_by_class_counting(c3, V({0, 0, 0}), 1) == 1);
    CHECK(dim_by_class_counting(c3, V({0, 0, 0}), 3) == 1);

    CurveFamily c5 = CurveFamily::create(5, 6, 3);
    CHECK(dim_by_class_counting(c5, V({30, 0, 0}), 2) == 21);
    CHECK_THROWS_AS(dim_by_class_counting(c5, V({30, 0, 0}), 4), std::invalid_argument);
}

TEST_CASE("class counting agrees with the dimension formula at every coordinate") {
    std::mt19937_64 rng(73);
    for (auto [a, b, m] : {std::tuple<Int, Int, Int>{5, 6, 3}, {5, 6, 2}, {3, 28, 3}, {4, 5, 5}}) {
        CurveFamily c = CurveFamily::create(a, b, m);
        for (int t = 0; t < 60; ++t) {
            IntVec alpha = test::rand_vec(rng, static_cast<std::size_t>(m), -2 * b, 2 * b);
            Int total = dimension(c, alpha).total;
            for (Int j = 1; j <= m; ++j) CHECK(dim_by_class_counting(c, alpha, j) == total);
        }
    }
}

TEST_CASE("scan enumeration equals the pruned enumeration") {
    std::mt19937_64 rng(79);
    for (auto [a, b, m] : {std::tuple<Int, Int, Int>{5, 6, 3}, {3, 28, 3}, {4, 5, 5}}) {
        CurveFamily c = CurveFamily::create(a, b, m);
        for (int t = 0; t < 40; ++t) {
            IntVec alpha = test::rand_vec(rng, static_cast<std::size_t>(m), -b, 2 * b);
            CHECK(gamma_below_by_scan(c, alpha) == gamma_below(c, alpha));
        }
    }
}

TEST_CASE("scan enumeration respects its cap") {
    CurveFamily c = CurveFamily::create(5, 6, 3);
    CHECK_THROWS_AS(gamma_below_by_scan(c, V({30, 12, 12}), EnumerationLimits{10}),
                    CapExceededError);
}

TEST_CASE("membership via least upper bounds") {
    CurveFamily c = CurveFamily::create(5, 6, 3);
    CHECK(member_by_lub(c, V({13, 1, 1})));
    CHECK(member_by_lub(c, V({0, 0, 0})));
    CHECK(member_by_lub(c, V({13, 2, 2})));
    CHECK_FALSE(member_by_lub(c, V({1, 0, 0})));
    CHECK_FALSE(member_by_lub(c, V({-1, 0, 0})));
}

TEST_CASE("lub membership agrees with the formula membership") {
    std::mt19937_64 rng(83);
    for (auto [a, b, m] : {std::tuple<Int, Int, Int>{5, 6, 3}, {5, 6, 2}, {3, 28, 3}, {4, 5, 5}}) {
        CurveFamily c = CurveFamily::create(a, b, m);
        for (int t = 0; t < 150; ++t) {
            IntVec alpha = test::rand_vec(rng, static_cast<std::size_t>(m), -b, b);
            CHECK(member_by_lub(c, alpha) == is_member(c, alpha));
        }
    }
}

TEST_CASE("definitional absolute maximality on the worked elements") {
    CurveFamily c = CurveFamily::create(5, 6, 3);
    CHECK(absolute_maximal_by_definition(c, V({13, 1, 1})));
    CHECK(absolute_maximal_by_definition(c, V({0, 0, 0})));
    CHECK_FALSE(absolute_maximal_by_definition(c, V({13, 2, 2})));
}

TEST_CASE("definitional absolute maximality agrees with the formula") {
    std::mt19937_64 rng(89);
    for (auto [a, b, m] : {std::tuple<Int, Int, Int>{5, 6, 3}, {5, 6, 2}, {3, 28, 3}, {4, 5, 5}}) {
        CurveFamily c = CurveFamily::create(a, b, m);
        for (int t = 0; t < 80; ++t) {
            IntVec alpha = test::rand_vec(rng, static_cast<std::size_t>(m), -b, b);
            CHECK(absolute_maximal_by_definition(c, alpha) == is_absolute_maximal(c, alpha));
        }
    }
}

TEST_CASE("definitional oracle agrees with a naive candidate scan") {
    std::mt19937_64 rng(97);
    CurveFamily c = CurveFamily::create(5, 6, 2);
    for (int t = 0; t < 25; ++t) {
        IntVec alpha = test::rand_vec(rng, 2, -3, 8);
        CHECK(absolute_maximal_by_definition(c, alpha) == naive_absolute_maximal(c, alpha));
    }
    CurveFamily c3 = CurveFamily::create(2, 5, 3);
    for (int t = 0; t < 8; ++t) {
        IntVec alpha = test::rand_vec(rng, 3, -2, 5);
        CHECK(absolute_maximal_by_definition(c3, alpha) == naive_absolute_maximal(c3, alpha));
    }
}

TEST_CASE("exhaustive floor search on the worked examples") {
    CurveFamily c3 = CurveFamily::create(3, 28, 3);
    CHECK(floor_by_exhaustion(c3, V({8, 7, -1})) == V({6, -1, -1}));

    CurveFamily c5 = CurveFamily::create(5, 6, 3);
    CHECK(floor_by_exhaustion(c5, V({0, 0, 0})) == V({0, 0, 0}));
    CHECK(floor_by_exhaustion(c5, V({7, 7, 1})) == V({7, 7, 1}));  // member, own floor

    CHECK_THROWS_AS(floor_by_exhaustion(c5, V({-1, 0, 0})), std::domain_error);
}

TEST_CASE("exhaustive floor agrees with the closed form") {
    std::mt19937_64 rng(101);
    for (auto [a, b, m] : {std::tuple<Int, Int, Int>{5, 6, 3}, {5, 6, 2}, {4, 5, 5}}) {
        CurveFamily c = CurveFamily::create(a, b, m);
        int done = 0;
        while (done < 15) {
            IntVec alpha = test::rand_vec(rng, static_cast<std::size_t>(m), -b, b);
            if (dimension(c, alpha).total == 0) continue;
            CHECK(floor_by_exhaustion(c, alpha) == supported_floor(c, alpha));
            ++done;
        }
    }
}

TEST_CASE("box validation and volume caps") {
    CHECK_THROWS_AS(BoxSpec(V({0, 0}), V({-1, 0})), std::invalid_argument);
    BoxSpec box(V({0, 0}), V({99, 99}), 100);
    CHECK(box.volume() == 10000);
    CurveFamily c = CurveFamily::create(5, 6, 2);
    CHECK_THROWS_AS(floor_by_exhaustion(c, V({99, 99}), box), CapExceededError);
    CHECK_THROWS_AS(floor_by_exhaustion(c, V({6, 6}), 10), CapExceededError);
}

TEST_CASE("explicit boxes reject minimizers on the boundary") {
    CurveFamily c = CurveFamily::create(5, 6, 2);
    // (19, 1) is its own floor; a box whose lower corner sits on it fails.
    BoxSpec box(V({19, 1}), V({19, 1}), 100);
    CHECK_THROWS_AS(floor_by_exhaustion(c, V({19, 1}), box), std::runtime_error);
}
