#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here recomputes results from first principles so the checks do not share
// code paths with the library implementation.

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>

#include "rfkit/matching.hpp"
#include "rfkit/noise.hpp"
#include "rfkit/touchstone.hpp"

namespace testsupport {

using rfkit::Complex;

inline constexpr double kPi = 3.14159265358979323846;

inline Complex from_polar_deg(double mag, double deg) { return std::polar(mag, deg * kPi / 180.0); }

// Measured two-port used throughout: S11 0.499<151.5, S21 4.426<51.4,
// S12 0.084<37.3, S22 0.161<-120.6 at 3.0 GHz, 50 ohm reference.
inline rfkit::TwoPortS n420() {
    rfkit::TwoPortS s;
    s.s11 = from_polar_deg(0.499, 151.5);
    s.s21 = from_polar_deg(4.426, 51.4);
    s.s12 = from_polar_deg(0.084, 37.3);
    s.s22 = from_polar_deg(0.161, -120.6);
    s.z0 = 50.0;
    return s;
}

inline Complex random_complex(std::mt19937& rng, double max_mag) {
    std::uniform_real_distribution<double> mag(0.0, max_mag);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    return std::polar(mag(rng), ang(rng));
}

inline rfkit::TwoPortS random_device(std::mt19937& rng, double max_mag = 1.5) {
    rfkit::TwoPortS s;
    s.s11 = random_complex(rng, max_mag);
    s.s12 = random_complex(rng, max_mag);
    s.s21 = random_complex(rng, max_mag);
    s.s22 = random_complex(rng, max_mag);
    return s;
}

// Rejection-samples passive-looking devices until K > 1 and |delta| < 1.
inline rfkit::TwoPortS random_stable_device(std::mt19937& rng) {
    std::uniform_real_distribution<double> refl(0.05, 0.7);
    std::uniform_real_distribution<double> fwd(0.8, 5.0);
    std::uniform_real_distribution<double> rev(0.01, 0.12);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (;;) {
        rfkit::TwoPortS s;
        s.s11 = std::polar(refl(rng), ang(rng));
        s.s22 = std::polar(refl(rng), ang(rng));
        s.s21 = std::polar(fwd(rng), ang(rng));
        s.s12 = std::polar(rev(rng), ang(rng));
        const Complex delta = s.s11 * s.s22 - s.s12 * s.s21;
        const double k =
            (1.0 - std::norm(s.s11) - std::norm(s.s22) + std::norm(delta)) / (2.0 * std::abs(s.s12 * s.s21));
        if (k > 1.02 && std::abs(delta) < 0.98) return s;
    }
}

inline rfkit::NoiseParameters random_noise_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> fmin(1.05, 3.0);
    std::uniform_real_distribution<double> rn(0.02, 1.0);
    std::uniform_real_distribution<double> gmag(0.05, 0.7);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    return {fmin(rng), rn(rng), std::polar(gmag(rng), ang(rng))};
}

// Chain-matrix re-derivation of the reflection a matching network presents,
// written against the physical element equations rather than the library's
// ABCD type.
inline Complex oracle_network_gamma(const rfkit::MatchingNetwork& net, double system_z0) {
    using rfkit::StubKind;
    using rfkit::Topology;
    if (net.topology == Topology::Identity) return {0.0, 0.0};

    const auto line = [](double deg, double z0) {
        const double bl = deg * kPi / 180.0;
        return std::array<Complex, 4>{Complex{std::cos(bl), 0.0}, Complex{0.0, z0 * std::sin(bl)},
                                      Complex{0.0, std::sin(bl) / z0}, Complex{std::cos(bl), 0.0}};
    };

    std::array<Complex, 4> m = line(net.series_line_deg, net.line_z0);
    double z_load = system_z0;
    if (net.topology == Topology::SeriesLineShuntStub) {
        const double t = std::tan(net.stub_deg * kPi / 180.0);
        const Complex y = net.stub_kind == StubKind::Open ? Complex{0.0, t / net.line_z0}
                                                          : Complex{0.0, -1.0 / (net.line_z0 * t)};
        const std::array<Complex, 4> stub{Complex{1.0, 0.0}, Complex{0.0, 0.0}, y, Complex{1.0, 0.0}};
        m = {m[0] * stub[0] + m[1] * stub[2], m[0] * stub[1] + m[1] * stub[3], m[2] * stub[0] + m[3] * stub[2],
             m[2] * stub[1] + m[3] * stub[3]};
    }
    const Complex zin = (m[0] * z_load + m[1]) / (m[2] * z_load + m[3]);
    return (zin - system_z0) / (zin + system_z0);
}

// Quasi-static microstrip analysis used as the round-trip oracle for the
// closed-form synthesis.
inline double oracle_microstrip_z0(double width_mm, double eps_r, double h_mm) {
    const double w_h = width_mm / h_mm;
    double ee = (eps_r + 1.0) / 2.0 + (eps_r - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 / w_h);
    if (w_h < 1.0) {
        ee += (eps_r - 1.0) / 2.0 * 0.04 * (1.0 - w_h) * (1.0 - w_h);
        return 60.0 / std::sqrt(ee) * std::log(8.0 / w_h + w_h / 4.0);
    }
    return 120.0 * kPi / (std::sqrt(ee) * (w_h + 1.393 + 0.667 * std::log(w_h + 1.444)));
}

inline bool polar_close(const Complex& value, double mag, double deg, double mag_tol, double deg_tol) {
    const double value_mag = std::abs(value);
    double value_deg = std::arg(value) * 180.0 / kPi;
    double diff = std::fmod(value_deg - deg, 360.0);
    if (diff > 180.0) diff -= 360.0;
    if (diff < -180.0) diff += 360.0;
    return std::abs(value_mag - mag) <= mag_tol && std::abs(diff) <= deg_tol;
}

}  // namespace testsupport
