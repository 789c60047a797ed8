#include "rfkit/stability.hpp"

#include <cmath>
#include <limits>

namespace rfkit {

namespace {

double norm_sq(const Complex& z) { return std::norm(z); }

}  // namespace

Complex determinant(const TwoPortS& s) { return s.s11 * s.s22 - s.s12 * s.s21; }

bool unconditionally_stable(const TwoPortS& s) {
    return rollett_k(s) > 1.0 && std::abs(determinant(s)) < 1.0 && std::abs(s.s11) < 1.0 && std::abs(s.s22) < 1.0;
}

double rollett_k(const TwoPortS& s) {
    const double denom = 2.0 * std::abs(s.s12 * s.s21);
    if (std::abs(s.s12 * s.s21) < 1e-15) return std::numeric_limits<double>::infinity();
    const Complex delta = determinant(s);
    return (1.0 - norm_sq(s.s11) - norm_sq(s.s22) + norm_sq(delta)) / denom;
}

double mu_factor(const TwoPortS& s) {
    const Complex delta = determinant(s);
    const double term1 = std::abs(s.s22 - delta * std::conj(s.s11));
    const double term2 = std::abs(s.s12 * s.s21);
    if (term1 < 1e-15 && term2 < 1e-15)
        throw Error(ErrorCode::DegenerateDenominator, "mu-test denominator vanishes for this S-matrix");
    return (1.0 - norm_sq(s.s11)) / (term1 + term2);
}

double mu_prime_factor(const TwoPortS& s) {
    const Complex delta = determinant(s);
    const double term1 = std::abs(s.s11 - delta * std::conj(s.s22));
    const double term2 = std::abs(s.s12 * s.s21);
    if (term1 < 1e-15 && term2 < 1e-15)
        throw Error(ErrorCode::DegenerateDenominator, "mu'-test denominator vanishes for this S-matrix");
    return (1.0 - norm_sq(s.s22)) / (term1 + term2);
}

SmithCircle stability_circle(const TwoPortS& s, Port port) {
    const Complex delta = determinant(s);
    const Complex sii = port == Port::Load ? s.s22 : s.s11;
    const Complex sjj = port == Port::Load ? s.s11 : s.s22;
    const double denom = norm_sq(sii) - norm_sq(delta);
    if (std::abs(denom) <= 1e-12)
        throw Error(ErrorCode::DegenerateCircle,
                    port == Port::Load ? "|S22|^2 - |delta|^2 vanishes; load stability boundary is a line"
                                       : "|S11|^2 - |delta|^2 vanishes; source stability boundary is a line");
    SmithCircle circle;
    circle.center = std::conj(sii - delta * std::conj(sjj)) / denom;
    circle.radius = std::abs(s.s12 * s.s21) / std::abs(denom);
    return circle;
}

Region stable_region(const TwoPortS& s, Port port) {
    const SmithCircle circle = stability_circle(s, port);
    const bool origin_inside = std::abs(circle.center) < circle.radius;
    const double other_mag = std::abs(port == Port::Load ? s.s11 : s.s22);
    const bool origin_stable = other_mag < 1.0;
    if (origin_stable) return origin_inside ? Region::Inside : Region::Outside;
    return origin_inside ? Region::Outside : Region::Inside;
}

StabilityReport stability_report(const TwoPortS& s) {
    StabilityReport r;
    r.delta = determinant(s);
    r.k = rollett_k(s);
    try {
        r.mu = mu_factor(s);
    } catch (const Error&) {
        r.mu = std::numeric_limits<double>::infinity();
    }
    try {
        r.mu_prime = mu_prime_factor(s);
    } catch (const Error&) {
        r.mu_prime = std::numeric_limits<double>::infinity();
    }
    r.unconditional = unconditionally_stable(s);
    try {
        r.load_circle = stability_circle(s, Port::Load);
        r.load_stable_region = stable_region(s, Port::Load);
    } catch (const Error&) {
    }
    try {
        r.source_circle = stability_circle(s, Port::Source);
        r.source_stable_region = stable_region(s, Port::Source);
    } catch (const Error&) {
    }
    return r;
}

}  // namespace rfkit
