#include <doctest.h>

#include <random>

#include "rfkit/core.hpp"
#include "support.hpp"

using namespace rfkit;

TEST_SUITE_BEGIN("core");

TEST_CASE("polar to rectangular conversion") {
    CHECK(std::abs(polar_to_complex({1.0, 0.0}) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(polar_to_complex({2.0, 90.0}) - Complex{0.0, 2.0}) < 1e-15);
    // Direct trigonometric evaluation: 0.499*cos(151.5 deg), 0.499*sin(151.5 deg).
    const Complex s11 = polar_to_complex({0.499, 151.5});
    CHECK(std::abs(s11.real() - (-0.43853)) < 1e-4);
    CHECK(std::abs(s11.imag() - 0.23810) < 1e-4);
}

TEST_CASE("polar round trip preserves magnitude and angle") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> mag(0.0, 10.0);
    std::uniform_real_distribution<double> ang(-720.0, 720.0);
    double worst_mag = 0.0, worst_ang = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const PolarForm p{mag(rng), ang(rng)};
        const PolarForm back = complex_to_polar(polar_to_complex(p));
        worst_mag = std::max(worst_mag, std::abs(back.magnitude - p.magnitude));
        if (p.magnitude > 1e-9) {
            double diff = std::fmod(back.angle_deg - p.angle_deg, 360.0);
            if (diff > 180.0) diff -= 360.0;
            if (diff < -180.0) diff += 360.0;
            worst_ang = std::max(worst_ang, std::abs(diff));
        }
    }
    CHECK(worst_mag < 1e-12);
    CHECK(worst_ang < 1e-9);
}

TEST_CASE("angle normalization lands in (-180, 180]") {
    CHECK(normalize_angle_deg(181.0) == doctest::Approx(-179.0));
    CHECK(normalize_angle_deg(-180.0) == doctest::Approx(180.0));
    CHECK(normalize_angle_deg(540.0) == doctest::Approx(180.0));
    CHECK(normalize_angle_deg(360.0) == doctest::Approx(0.0));
    CHECK(normalize_angle_deg(-543.0) == doctest::Approx(177.0));
}

TEST_CASE("gamma to normalized impedance") {
    CHECK(std::abs(gamma_to_normalized_impedance({0.0, 0.0}) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(gamma_to_normalized_impedance({-1.0, 0.0}) - Complex{0.0, 0.0}) < 1e-15);
    CHECK(std::abs(gamma_to_normalized_impedance({1.0 / 3.0, 0.0}) - Complex{2.0, 0.0}) < 1e-12);
    CHECK_THROWS_AS(gamma_to_normalized_impedance({1.0, 0.0}), Error);
    try {
        gamma_to_normalized_impedance({1.0, 0.0});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularPoint);
    }
}

TEST_CASE("normalized admittance") {
    CHECK(std::abs(normalized_admittance({0.0, 0.0}) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(normalized_admittance({1.0, 0.0}) - Complex{0.0, 0.0}) < 1e-15);
    CHECK(std::abs(normalized_admittance({0.0, 1.0}) - Complex{0.0, -1.0}) < 1e-12);
    CHECK_THROWS_AS(normalized_admittance({-1.0, 0.0}), Error);
}

TEST_CASE("admittance is the reciprocal of impedance away from singular points") {
    std::mt19937 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const Complex g = testsupport::random_complex(rng, 0.95);
        if (std::abs(g - 1.0) < 1e-3 || std::abs(g + 1.0) < 1e-3) continue;
        const Complex prod = normalized_admittance(g) * gamma_to_normalized_impedance(g);
        CHECK(std::abs(prod - 1.0) < 1e-10);
        // The inverse map recovers the reflection coefficient.
        const Complex z = gamma_to_normalized_impedance(g);
        CHECK(std::abs((z - 1.0) / (z + 1.0) - g) < 1e-12);
    }
}

TEST_CASE("smith circle boundary membership") {
    const SmithCircle circle{Complex{0.3, -0.4}, 0.75};
    for (int i = 0; i < 360; ++i) {
        const Complex p = circle.point_at(static_cast<double>(i));
        CHECK(std::abs(std::abs(p - circle.center) - circle.radius) < 1e-12);
    }
    CHECK(circle.contains(circle.center));
    CHECK(!circle.contains(circle.center + Complex{0.76, 0.0}));
}

TEST_CASE("gamma literal parsing") {
    CHECK(std::abs(parse_gamma_literal("0.697<-157") - testsupport::from_polar_deg(0.697, -157.0)) < 1e-12);
    CHECK(std::abs(parse_gamma_literal(" 0.5 < 30 ") - testsupport::from_polar_deg(0.5, 30.0)) < 1e-12);
    CHECK(std::abs(parse_gamma_literal("1<0") - Complex{1.0, 0.0}) < 1e-15);
    CHECK_THROWS_AS(parse_gamma_literal("0.5"), Error);
    CHECK_THROWS_AS(parse_gamma_literal("abc<30"), Error);
    CHECK_THROWS_AS(parse_gamma_literal("-0.5<30"), Error);
}

TEST_CASE("gamma literal formatting uses four significant digits") {
    CHECK(format_gamma_literal(testsupport::from_polar_deg(0.33592, -79.624)) == "0.3359<-79.62");
    CHECK(format_gamma_literal(Complex{0.0, 0.0}) == "0<0");
    const Complex g = testsupport::from_polar_deg(0.697, -157.0);
    const Complex back = parse_gamma_literal(format_gamma_literal(g, 12));
    CHECK(std::abs(g - back) < 1e-9);
}

TEST_SUITE_END();
