#include "doctest.h"

#include "qsparith/golden_angles.hpp"
#include "qsparith/qsp.hpp"
#include "support/oracle.hpp"

#include <cmath>
#include <random>

using namespace qsparith;

namespace {

std::vector<long double> oracle_angles(const PhaseSchedule& s) {
    return oracle::eval_angles(s.angles, s.end_offset);
}

PhaseSchedule random_antisymmetric(std::mt19937_64& rng, int degree, bool offsets) {
    std::uniform_real_distribution<double> uni(-M_PI, M_PI);
    std::vector<double> a(degree + 1, 0.0);
    for (int j = 0; j < (degree + 1) / 2; ++j) {
        a[j] = uni(rng);
        a[degree - j] = -a[j];
    }
    return make_schedule(std::move(a), offsets);
}

}  // namespace

TEST_CASE("signal operators at the anchor points") {
    Unitary2 w1 = signal_operator(1.0, QspConvention::wx());
    CHECK(std::abs(w1.u00 - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(w1.u01) < 1e-15);
    CHECK(std::abs(w1.u10) < 1e-15);

    Unitary2 w0 = signal_operator(0.0, QspConvention::wx());
    CHECK(std::abs(w0.u00) < 1e-15);
    CHECK(std::abs(w0.u01 - cplx(0, 1)) < 1e-15);
    CHECK(std::abs(w0.u10 - cplx(0, 1)) < 1e-15);

    // twisted operator: diagonal 0.6, off-diagonal 0.8 at phases +-pi/3 from i
    Unitary2 wt = signal_operator(0.6, QspConvention::wx_twisted(M_PI / 3));
    CHECK(wt.u00.real() == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(std::abs(wt.u01) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(std::arg(wt.u01 / cplx(0, 0.8)) == doctest::Approx(M_PI / 3).epsilon(1e-12));
    CHECK(std::arg(wt.u10 / cplx(0, 0.8)) == doctest::Approx(-M_PI / 3).epsilon(1e-12));

    CHECK_THROWS_AS(signal_operator(1.0 + 1e-9, QspConvention::wx()), std::domain_error);
}

TEST_CASE("zero-phase QSP realizes Chebyshev polynomials") {
    for (int m : {0, 1, 2, 5, 13, 32}) {
        PhaseSchedule z = zero_schedule(m);
        for (int k = 0; k <= 100; ++k) {
            double a = -1.0 + 2.0 * k / 100.0;
            double expect = std::cos(m * std::acos(a));
            CHECK(std::abs(qsp_response(z, a) - expect) < 1e-9);
        }
    }
    // degree 0: the product is a single signal-processor rotation
    PhaseSchedule s = make_schedule({0.37}, false);
    Unitary2 u = qsp_evaluate(s, 0.123);
    CHECK(std::abs(u.u00 - std::polar(1.0, 0.37)) < 1e-15);
    CHECK(std::abs(u.u01) < 1e-15);

    CHECK(qsp_response(zero_schedule(2), 0.5) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("bundled schedules match the extended-precision oracle") {
    for (const GoldenEntry* e : golden_function_entries()) {
        auto eval = oracle_angles(e->schedule);
        for (int k = 0; k <= 100; ++k) {
            double a = -1.0 + 2.0 * k / 100.0;
            double lib = qsp_response(e->schedule, a);
            double ref = static_cast<double>(oracle::response(eval, a));
            CHECK_MESSAGE(std::abs(lib - ref) < 1e-9, e->name, " at a=", a);
        }
    }
}

TEST_CASE("p2a schedule boundary behaviour") {
    const PhaseSchedule& p2a23 = golden("p2a_2x3").schedule;
    // odd antisymmetric schedule: P(0) = 0 exactly
    CHECK(std::abs(qsp_response(p2a23, 0.0)) < 1e-12);
    // response at 0 agrees with the oracle route as well
    CHECK(std::abs(qsp_response(p2a23, 0.0) -
                   static_cast<double>(oracle::response(oracle_angles(p2a23), 0.0L))) < 1e-9);

    // a2p 2x3 has no end offsets: P(1) = 1 exactly
    CHECK(qsp_response(golden("a2p_2x3").schedule, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // sgn 2x8 plateau near +1 at a = 0.8, pinned against the oracle
    const PhaseSchedule& sgn28 = golden("sgn_2x8").schedule;
    double lib = qsp_response(sgn28, 0.8);
    double ref = static_cast<double>(oracle::response(oracle_angles(sgn28), 0.8L));
    CHECK(std::abs(lib - ref) < 1e-9);
    CHECK(std::abs(lib - 1.0) < 0.3);
}

TEST_CASE("merge_phases: identity, length arithmetic, nested equivalence") {
    const PhaseSchedule& p2a24 = golden("p2a_2x4").schedule;

    SUBCASE("merging with the trivial outer (0,0) reproduces the inner list") {
        PhaseSchedule merged = merge_phases(zero_schedule(1), p2a24);
        REQUIRE(merged.degree == p2a24.degree);
        CHECK(merged.end_offset == p2a24.end_offset);
        for (std::size_t j = 0; j < merged.angles.size(); ++j)
            CHECK(merged.angles[j] == doctest::Approx(p2a24.angles[j]).epsilon(1e-15));
    }

    SUBCASE("degrees multiply") {
        PhaseSchedule merged = merge_phases(zero_schedule(8), zero_schedule(6));
        CHECK(merged.degree == 48);
        CHECK(merged.angles.size() == 49);
    }

    SUBCASE("merged evaluation equals nested evaluation") {
        const PhaseSchedule& a2p23 = golden("a2p_2x3").schedule;
        PhaseSchedule merged = merge_phases(p2a24, a2p23);  // p2a after a2p
        for (int k = 0; k <= 100; ++k) {
            double a = -1.0 + 2.0 * k / 100.0;
            Unitary2 inner = qsp_evaluate(a2p23, a);
            Unitary2 nested = qsp_evaluate_operator(p2a24, inner);
            Unitary2 direct = qsp_evaluate(merged, a);
            CHECK(direct.distance(nested) < 1e-9);
        }
    }

    SUBCASE("non-antisymmetric inputs are rejected") {
        PhaseSchedule bad = make_schedule({0.1, 0.2, 0.3}, false);
        CHECK_FALSE(bad.antisymmetric);
        CHECK_THROWS_AS(merge_phases(bad, zero_schedule(2)), std::invalid_argument);
        CHECK_THROWS_AS(merge_phases(zero_schedule(2), bad), std::invalid_argument);
    }
}

TEST_CASE("validate_embeddable diagnostics") {
    EmbedReport ok = validate_embeddable(golden("p2a_2x10").schedule);
    CHECK(ok.all_pass);

    PhaseSchedule bad = make_schedule({0.1, 0.2, 0.3}, false);
    EmbedReport rep = validate_embeddable(bad);
    CHECK_FALSE(rep.all_pass);
    CHECK_FALSE(rep.checks[0].pass);  // antisymmetry

    EmbedReport zero = validate_embeddable(zero_schedule(4));
    CHECK(zero.all_pass);  // P(1) = T_4(1) = 1

    for (const GoldenEntry& e : golden_table())
        CHECK_MESSAGE(validate_embeddable(e.schedule).all_pass, e.name);
}

TEST_CASE("phase_from_amplitude and the quarter-turn law") {
    CHECK(phase_from_amplitude(1.0) == doctest::Approx(0.0));
    CHECK(phase_from_amplitude(0.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(phase_from_amplitude(1.1), std::domain_error);
    for (int k = 0; k <= 1000; ++k) {
        double x = -1.0 + 2.0 * k / 1000.0;
        double lhs = phase_from_amplitude(std::sin(M_PI / 2 * x));
        CHECK(std::abs(lhs - (1.0 - x) / 4.0) < 1e-12);
    }
}

TEST_CASE("grover square identity on twisted signal operators") {
    CHECK(grover_square_check(1.0, 0.0));
    CHECK(grover_square_check(0.3, 0.0));
    CHECK(grover_square_check(-0.7, 1.1));
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ua(-1.0, 1.0), up(-M_PI, M_PI);
    for (int i = 0; i < 50; ++i) CHECK(grover_square_check(ua(rng), up(rng)));
}

TEST_CASE("every product is unitary") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(-1.0, 1.0), up(-M_PI, M_PI);
    for (int i = 0; i < 40; ++i) {
        int m = 1 + static_cast<int>(rng() % 20);
        std::vector<double> angles(m + 1);
        for (double& v : angles) v = up(rng);
        PhaseSchedule s = make_schedule(std::move(angles), rng() % 2 == 0);
        CHECK(qsp_evaluate(s, ua(rng)).unitarity_defect() < 1e-10);
    }
}

TEST_CASE("embedding closure: antisymmetric QSP of a twisted operator keeps its shape") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(-1.0, 1.0), up(-M_PI, M_PI);
    for (int i = 0; i < 100; ++i) {
        int degree = 1 + static_cast<int>(rng() % 12);
        PhaseSchedule s = random_antisymmetric(rng, degree, rng() % 2 == 0);
        double a = ua(rng);
        double twist = up(rng);
        Unitary2 u = qsp_evaluate_operator(
            s, signal_operator(a, QspConvention::wx_twisted(twist)));
        CHECK(std::abs(u.u00.imag()) < 1e-9);
        CHECK(std::abs(u.u11.imag()) < 1e-9);
        CHECK(std::abs(u.u00.real() - u.u11.real()) < 1e-9);
        double p = u.u00.real();
        double expect = std::sqrt(std::max(0.0, 1.0 - p * p));
        CHECK(std::abs(std::abs(u.u01) - expect) < 1e-9);
        CHECK(std::abs(std::abs(u.u10) - expect) < 1e-9);
    }
}

TEST_CASE("antisymmetric products are fixed by S0-conjugated reversal") {
    const Unitary2 s0{-1.0, 0.0, 0.0, 1.0};
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ua(-1.0, 1.0);
    for (int i = 0; i < 60; ++i) {
        PhaseSchedule s = random_antisymmetric(rng, 1 + static_cast<int>(rng() % 16),
                                               rng() % 2 == 0);
        Unitary2 u = qsp_evaluate(s, ua(rng));
        Unitary2 lhs = s0 * u.dagger() * s0;
        CHECK(lhs.distance(u) < 1e-10);
    }
}

TEST_CASE("all conventions realize the same response") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ua(-1.0, 1.0), up(-M_PI, M_PI);
    for (int i = 0; i < 30; ++i) {
        int m = 1 + static_cast<int>(rng() % 10);
        std::vector<double> angles(m + 1);
        for (double& v : angles) v = up(rng);
        PhaseSchedule s = make_schedule(std::move(angles), rng() % 2 == 0);
        double a = ua(rng);
        double ref = qsp_response(s, a, QspConvention::wx());
        CHECK(qsp_response(s, a, QspConvention::wy()) == doctest::Approx(ref).epsilon(1e-12));
        CHECK(qsp_response(s, a, QspConvention::wz()) == doctest::Approx(ref).epsilon(1e-12));
        CHECK(qsp_response(s, a, QspConvention::reflection()) ==
              doctest::Approx(ref).epsilon(1e-12));
        CHECK(qsp_response(s, a, QspConvention::wx_twisted(up(rng))) ==
              doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("strict and up-to-phase comparators") {
    Unitary2 u = signal_operator(0.4, QspConvention::wx());
    Unitary2 v = u;
    cplx ph = std::polar(1.0, 0.9);
    v.u00 *= ph; v.u01 *= ph; v.u10 *= ph; v.u11 *= ph;
    CHECK(u.distance(v) > 0.1);
    CHECK(u.distance_up_to_phase(v) < 1e-12);
}
