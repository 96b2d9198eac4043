#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <limits>
#include <sstream>

#include "gws/lattice.hpp"
#include "test_util.hpp"

using namespace gws;
using gws::test::V;

TEST_CASE("floor_div rounds toward minus infinity") {
    CHECK(floor_div(7, 28) == 0);
    CHECK(floor_div(-1, 28) == -1);
    CHECK(floor_div(-28, 28) == -1);
    CHECK(floor_div(28, 28) == 1);
    CHECK(floor_div(-29, 28) == -2);
    CHECK(floor_div(0, 5) == 0);
}

TEST_CASE("floor_div rejects nonpositive divisors") {
    CHECK_THROWS_AS(floor_div(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(floor_div(1, -3), std::invalid_argument);
}

TEST_CASE("floor_div division law on random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        Int n = test::rand_int(rng, -1000, 1000);
        Int d = test::rand_int(rng, 1, 50);
        Int q = floor_div(n, d);
        CHECK(q * d <= n);
        CHECK(n < q * d + d);
    }
}

TEST_CASE("checked arithmetic reports overflow") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
    CHECK(checked_add(big - 1, 1) == big);
}

TEST_CASE("IntVec requires length at least 2 and equal lengths") {
    CHECK_THROWS_AS(IntVec({std::vector<Int>{1}}), std::invalid_argument);
    CHECK_THROWS_AS(V({1, 2}) + V({1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(leq(V({1, 2}), V({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("IntVec arithmetic and norm") {
    CHECK(V({1, 2}) + V({3, -4}) == V({4, -2}));
    CHECK(V({1, 2}) - V({3, -4}) == V({-2, 6}));
    CHECK(scaled(-2, V({1, 2, 3})) == V({-2, -4, -6}));
    CHECK(V({8, 7, -1}).norm() == 14);
    CHECK(V({0, 0, 0}).norm() == 0);
    CHECK(V({13, 1, 1}).norm() == 15);
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS((V({big, big}).norm()), std::overflow_error);
}

TEST_CASE("leq is the coordinate-wise partial order") {
    CHECK(leq(V({0, 0}), V({1, 1})));
    CHECK_FALSE(leq(V({1, 0}), V({0, 1})));
    CHECK_FALSE(leq(V({0, 1}), V({1, 0})));
    CHECK(leq(V({13, 1, 1}), V({13, 1, 1})));
}

TEST_CASE("leq partial-order laws on random triples") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        IntVec u = test::rand_vec(rng, 3, -5, 5);
        IntVec v = test::rand_vec(rng, 3, -5, 5);
        IntVec w = test::rand_vec(rng, 3, -5, 5);
        CHECK(leq(u, u));
        if (leq(u, v) && leq(v, u)) CHECK(u == v);
        if (leq(u, v) && leq(v, w)) CHECK(leq(u, w));
    }
}

TEST_CASE("lub examples") {
    std::vector<IntVec> s1{V({1, 5}), V({4, 2})};
    CHECK(lub(s1) == V({4, 5}));
    std::vector<IntVec> s2{V({7, -3, 0})};
    CHECK(lub(s2) == V({7, -3, 0}));
    std::vector<IntVec> s3{V({6, -1, -1}), V({3, -2, -2})};
    CHECK(lub(s3) == V({6, -1, -1}));
    std::vector<IntVec> empty;
    CHECK_THROWS_AS(lub(empty), std::invalid_argument);
}

TEST_CASE("lub is the least upper bound") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 500; ++t) {
        std::vector<IntVec> set;
        int n = static_cast<int>(test::rand_int(rng, 1, 5));
        for (int k = 0; k < n; ++k) set.push_back(test::rand_vec(rng, 3, -9, 9));
        IntVec top = lub(set);
        for (const IntVec& s : set) CHECK(leq(s, top));
        // Any other upper bound dominates it.
        IntVec other = top + test::rand_vec(rng, 3, 0, 4);
        CHECK(leq(top, other));
        // Permutation invariance and idempotence.
        std::shuffle(set.begin(), set.end(), rng);
        set.push_back(top);
        CHECK(lub(set) == top);
    }
}

TEST_CASE("IntVec prints as a tuple") {
    std::ostringstream os;
    os << V({13, 1, 1});
    CHECK(os.str() == "(13, 1, 1)");
}
