#include "doctest.h"

#include "qsparith/targets.hpp"
#include "support/oracle.hpp"

#include <cmath>

using namespace qsparith;

TEST_CASE("p2a anchor values and cosine linearization") {
    CHECK(p2a(1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(p2a(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(p2a(1.0 + 1e-9), std::domain_error);

    // p2a(cos t) = (2/pi) t - 1 on t in [0, pi]; checked at the rotation
    // angle of register value 17 with N = 6, delta = 0, alpha = 2.
    double t = 2.0 * M_PI * 17.0 / (2.0 * 64.0);
    CHECK(p2a(std::cos(t)) == doctest::Approx(2.0 / M_PI * t - 1.0).epsilon(1e-13));
}

TEST_CASE("a2p anchors and the mutual inverse pair") {
    CHECK(a2p(1.0) == doctest::Approx(1.0));
    CHECK(a2p(-1.0) == doctest::Approx(-1.0));
    CHECK(a2p(0.0) == doctest::Approx(0.0));
    // both compositions equal minus the identity
    for (int k = 0; k <= 1000; ++k) {
        double x = -1.0 + 2.0 * k / 1000.0;
        CHECK(std::abs(a2p(p2a(x)) + x) < 1e-12);
        CHECK(std::abs(p2a(a2p(x)) + x) < 1e-12);
    }
}

TEST_CASE("sgn and step conventions") {
    CHECK(sgn(0.5) == 1.0);
    CHECK(sgn(-1e-9) == -1.0);
    CHECK(sgn(0.0) == 1.0);  // declared total at zero

    CHECK(step(0.04, 1.0 / 20) == -1.0);
    CHECK(step(0.05, 1.0 / 20) == 1.0);  // strict boundary
    CHECK(step(-0.3, 1.0 / 10) == 1.0);
    CHECK_THROWS_AS(step(0.1, 0.0), std::domain_error);
}

TEST_CASE("prepared example function") {
    CHECK(example_f(0.0) == doctest::Approx(0.0));
    CHECK(example_f(-1.0) == doctest::Approx(-std::sin(30.0)).epsilon(1e-15));
    CHECK(example_f(-1.0) == doctest::Approx(0.98803162409286183).epsilon(1e-12));
    CHECK(example_f(1.0) == doctest::Approx(std::sin(30.0) * std::exp(-2.0)).epsilon(1e-15));
    for (int k = 0; k <= 2000; ++k) {
        double x = -1.0 + 2.0 * k / 2000.0;
        CHECK(std::abs(example_f(x)) <= 1.0);
    }
    // the original, unprepared form exceeds the unit range
    CHECK(std::abs(example_f_original(-1.0)) > 1.0);
}

TEST_CASE("window map: anchors, monotonicity, subspace images") {
    SubspaceWindow half{0.0, 2.0};
    CHECK(window_map(0, 6, half) == doctest::Approx(-1.0));

    struct Row { SubspaceWindow w; double lo, hi; };
    // shift/scale rows and the x-subspaces they select
    const Row rows[] = {
        {{0.0, 1.0}, -1.0, 1.0},
        {{0.0, 2.0}, -1.0, 0.0},
        {{1.0, 2.0}, 0.0, 1.0},
        {{0.5, 2.0}, -0.5, 0.5},
    };
    const int n = 6;
    for (const Row& r : rows) {
        double prev = -10.0;
        for (long long a = 0; a < (1LL << n); ++a) {
            double x = window_map(a, n, r.w);
            CHECK(x > prev);             // strictly increasing
            CHECK(x >= r.lo - 1e-12);    // image inside the row's subspace
            CHECK(x < r.hi);
            prev = x;
        }
        // affine: equal spacing
        double d0 = window_map(1, n, r.w) - window_map(0, n, r.w);
        double d1 = window_map(33, n, r.w) - window_map(32, n, r.w);
        CHECK(d0 == doctest::Approx(d1).epsilon(1e-12));
    }
}

TEST_CASE("window rotation and signal are consistent with the linearization") {
    SubspaceWindow half{0.0, 2.0};
    CHECK(window_rotation(5, 3, half) == doctest::Approx(2.0 * M_PI * 5.0 / 16.0));
    for (long long a : {0LL, 1LL, 7LL, 31LL, 63LL}) {
        double sig = window_signal(a, 6, half);
        CHECK(p2a(sig) == doctest::Approx(window_map(a, 6, half)).epsilon(1e-12));
    }
    // shifted window: delta = 1, alpha = 2 starts the subspace at zero
    SubspaceWindow shifted{1.0, 2.0};
    CHECK(window_map(0, 6, shifted) == doctest::Approx(0.0));
    CHECK(window_signal(0, 6, shifted) == doctest::Approx(std::cos(M_PI / 2.0)));
}
