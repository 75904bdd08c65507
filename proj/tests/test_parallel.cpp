#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dirac/parallel.hpp"

using dirac::parallel_for;

TEST_SUITE("parallel") {

TEST_CASE("chunks cover the range exactly once") {
    for (int threads : {1, 2, 3, 7}) {
        const std::int64_t n = 1000;
        std::vector<int> hits(static_cast<std::size_t>(n), 0);
        parallel_for(
            n,
            [&](std::int64_t lo, std::int64_t hi) {
                for (std::int64_t i = lo; i < hi; ++i) ++hits[static_cast<std::size_t>(i)];
            },
            threads);
        CHECK(std::accumulate(hits.begin(), hits.end(), 0) == n);
        CHECK(*std::min_element(hits.begin(), hits.end()) == 1);
        CHECK(*std::max_element(hits.begin(), hits.end()) == 1);
    }
}

TEST_CASE("disjoint writes give identical results for any thread count") {
    const std::int64_t n = 4096;
    auto fill = [n](int threads) {
        std::vector<double> out(static_cast<std::size_t>(n));
        parallel_for(
            n,
            [&](std::int64_t lo, std::int64_t hi) {
                for (std::int64_t i = lo; i < hi; ++i)
                    out[static_cast<std::size_t>(i)] = std::sin(0.001 * i) * i;
            },
            threads);
        return out;
    };
    const auto ref = fill(1);
    for (int threads : {2, 5, 16}) CHECK(fill(threads) == ref);
}

TEST_CASE("empty range is a no-op") {
    bool called = false;
    parallel_for(0, [&](std::int64_t lo, std::int64_t hi) { called = lo != hi; }, 4);
    CHECK_FALSE(called);
}

}  // TEST_SUITE
