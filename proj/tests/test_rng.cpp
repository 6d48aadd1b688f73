#include "doctest.h"

#include <algorithm>
#include <vector>

#include "core/rng.hpp"

using beliefnet::Rng;

TEST_CASE("identical seeds give identical streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("different seeds diverge") {
    Rng a(1), b(2);
    int same = 0;
    for (int i = 0; i < 64; ++i)
        if (a.next() == b.next()) ++same;
    CHECK(same == 0);
}

TEST_CASE("uniform01 stays in [0, 1) and covers the range") {
    Rng rng(7);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    CHECK(lo < 0.01);
    CHECK(hi > 0.99);
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("uniform_below is unbiased across small ranges") {
    Rng rng(99);
    std::vector<int> counts(5, 0);
    const int n = 100000;
    for (int i = 0; i < n; ++i) ++counts[rng.uniform_below(5)];
    for (int c : counts) CHECK(c == doctest::Approx(n / 5.0).epsilon(0.05));
}

TEST_CASE("pick_weighted follows the weights") {
    Rng rng(3);
    const std::vector<double> w = {1.0, 2.0, 1.0};
    std::vector<int> counts(3, 0);
    const int n = 100000;
    for (int i = 0; i < n; ++i) ++counts[rng.pick_weighted(w, 4.0)];
    CHECK(counts[0] / double(n) == doctest::Approx(0.25).epsilon(0.05));
    CHECK(counts[1] / double(n) == doctest::Approx(0.50).epsilon(0.05));
    CHECK(counts[2] / double(n) == doctest::Approx(0.25).epsilon(0.05));
}
