#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bidea/elliptic.hpp"
#include "support/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace bidea;
namespace ts = testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("ellip_f trivial values") {
    CHECK(ellip_f({0.0, 1.3}) == doctest::Approx(1.3).epsilon(1e-14));
    CHECK(ellip_f({0.0, -0.7}) == doctest::Approx(-0.7).epsilon(1e-14));
    CHECK(ellip_f({0.5, 0.0}) == 0.0);
}

TEST_CASE("ellip_e trivial values") {
    CHECK(ellip_e({0.0, 0.9}) == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(ellip_e({1.0, kPi / 2.0}) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("complete integral of the first kind against quadrature") {
    const double expected = ts::ellip_f_quadrature(0.5, kPi / 2.0);
    CHECK(ellip_f({0.5, kPi / 2.0}) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(ellip_k_complete(0.5) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("incomplete second kind against quadrature") {
    const double expected = ts::ellip_e_quadrature(0.5, 1.0);
    CHECK(ellip_e({0.5, 1.0}) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("quasi-periodic extension identity") {
    const double k = 0.7;
    const double direct = ellip_f({k, kPi + 0.4});
    const double composed = 2.0 * ellip_f({k, kPi / 2.0}) + ellip_f({k, 0.4});
    CHECK(direct == doctest::Approx(composed).epsilon(1e-13));
}

TEST_CASE("extension consistency for both kinds over a modulus/amplitude grid") {
    for (double k : {0.0, 0.2, 0.55, 0.9, 0.99}) {
        for (double phi : {-2.0, -0.3, 0.4, 1.1, 2.6, 4.0, 7.9}) {
            const double fk = ellip_f({k, phi + kPi}) - ellip_f({k, phi});
            CHECK(fk == doctest::Approx(2.0 * ellip_k_complete(k)).epsilon(1e-11));
            const double ek = ellip_e({k, phi + kPi}) - ellip_e({k, phi});
            CHECK(ek == doctest::Approx(2.0 * ellip_e_complete(k)).epsilon(1e-11));
        }
    }
}

TEST_CASE("agreement with adaptive quadrature over random arguments") {
    std::mt19937 rng(20240917);
    std::uniform_real_distribution<double> kd(0.0, 0.995);
    std::uniform_real_distribution<double> pd(-3.0 * kPi, 3.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        const double k = kd(rng);
        const double phi = pd(rng);
        const double f_ref = ts::ellip_f_quadrature(k, phi);
        const double e_ref = ts::ellip_e_quadrature(k, phi);
        CHECK(ellip_f({k, phi}) == doctest::Approx(f_ref).epsilon(1e-10));
        CHECK(ellip_e({k, phi}) == doctest::Approx(e_ref).epsilon(1e-10));
    }
}

TEST_CASE("oddness and monotonicity in phi") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> kd(0.0, 0.99);
    std::uniform_real_distribution<double> pd(0.0, kPi / 2.0);
    for (int i = 0; i < 100; ++i) {
        const double k = kd(rng);
        const double p = pd(rng);
        CHECK(ellip_f({k, -p}) == doctest::Approx(-ellip_f({k, p})).epsilon(1e-13));
        CHECK(ellip_e({k, -p}) == doctest::Approx(-ellip_e({k, p})).epsilon(1e-13));
        const double dp = 1e-3;
        CHECK(ellip_f({k, p + dp}) > ellip_f({k, p}));
        CHECK(ellip_e({k, p + dp}) > ellip_e({k, p}));
    }
}

TEST_CASE("F >= phi >= E on the principal quadrant") {
    for (double k : {0.1, 0.5, 0.9, 0.999}) {
        for (double phi : {0.1, 0.6, 1.2, kPi / 2.0}) {
            CHECK(ellip_f({k, phi}) >= phi - 1e-15);
            CHECK(ellip_e({k, phi}) <= phi + 1e-15);
        }
    }
}

TEST_CASE("domain rejections") {
    CHECK_THROWS_AS(ellip_f({-0.1, 0.5}), DomainError);
    CHECK_THROWS_AS(ellip_f({1.2, 0.5}), DomainError);
    CHECK_THROWS_AS(ellip_f({1.0, kPi / 2.0}), DomainError);
    CHECK_THROWS_AS(ellip_f({1.0, 2.0}), DomainError);
    // No divergence for E at k = 1: integral of |cos t|.
    CHECK(ellip_e({1.0, 2.0}) == doctest::Approx(2.0 - std::sin(2.0)).epsilon(1e-13));
    CHECK_NOTHROW(ellip_e({1.0, 5.0}));
    // k = 1 below pi/2 is finite for F.
    CHECK_NOTHROW(ellip_f({1.0, 1.0}));
}
