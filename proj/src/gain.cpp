#include "rfkit/gain.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "rfkit/stability.hpp"

namespace rfkit {

namespace {

void require_passive_termination(const Complex& gamma, const char* name) {
    if (!(std::abs(gamma) < 1.0)) {
        char msg[96];
        std::snprintf(msg, sizeof msg, "|%s| = %.6g is not inside the unit disc", name, std::abs(gamma));
        throw Error(ErrorCode::SingularTermination, msg);
    }
}

}  // namespace

Complex gamma_in(const TwoPortS& s, const Complex& gamma_l) {
    const Complex denom = 1.0 - s.s22 * gamma_l;
    if (std::abs(denom) <= 1e-12)
        throw Error(ErrorCode::SingularTermination, "1 - S22*Gamma_L vanishes for this load");
    return s.s11 + s.s12 * s.s21 * gamma_l / denom;
}

Complex gamma_out(const TwoPortS& s, const Complex& gamma_s) {
    const Complex denom = 1.0 - s.s11 * gamma_s;
    if (std::abs(denom) <= 1e-12)
        throw Error(ErrorCode::SingularTermination, "1 - S11*Gamma_S vanishes for this source");
    return s.s22 + s.s12 * s.s21 * gamma_s / denom;
}

double transducer_gain(const TwoPortS& s, const Complex& gamma_s, const Complex& gamma_l) {
    require_passive_termination(gamma_s, "Gamma_S");
    require_passive_termination(gamma_l, "Gamma_L");
    const Complex denom = (1.0 - s.s11 * gamma_s) * (1.0 - s.s22 * gamma_l) - s.s12 * s.s21 * gamma_s * gamma_l;
    if (std::abs(denom) <= 1e-12)
        throw Error(ErrorCode::SingularTermination, "transducer-gain denominator vanishes for these terminations");
    return (1.0 - std::norm(gamma_s)) * std::norm(s.s21) * (1.0 - std::norm(gamma_l)) / std::norm(denom);
}

UnilateralAssessment unilateral_assessment(const TwoPortS& s) {
    const double m11 = std::abs(s.s11), m22 = std::abs(s.s22);
    if (m11 >= 1.0 || m22 >= 1.0)
        throw Error(ErrorCode::ActiveMismatch, "|S11| or |S22| is not below 1; U is undefined");
    UnilateralAssessment a;
    a.u = (m11 * std::abs(s.s12) * std::abs(s.s21) * m22) / ((1.0 - m11 * m11) * (1.0 - m22 * m22));
    a.lower_bound = 1.0 / ((1.0 + a.u) * (1.0 + a.u));
    a.upper_bound = a.u < 1.0 ? 1.0 / ((1.0 - a.u) * (1.0 - a.u)) : std::numeric_limits<double>::infinity();
    a.lower_db = to_db(a.lower_bound);
    a.upper_db = to_db(a.upper_bound);
    return a;
}

double available_gain(const TwoPortS& s, const Complex& gamma_s) {
    require_passive_termination(gamma_s, "Gamma_S");
    const Complex delta = determinant(s);
    const Complex denom = 1.0 - s.s11 * gamma_s;
    if (std::abs(denom) <= 1e-12)
        throw Error(ErrorCode::SingularTermination, "1 - S11*Gamma_S vanishes for this source");
    const Complex gout = (s.s22 - delta * gamma_s) / denom;
    const double mismatch = 1.0 - std::norm(gout);
    if (mismatch <= 1e-15)
        throw Error(ErrorCode::SingularTermination, "source termination drives |Gamma_out| to 1 or beyond");
    return std::norm(s.s21) * (1.0 - std::norm(gamma_s)) / (mismatch * std::norm(denom));
}

SmithCircle available_gain_circle(const TwoPortS& s, double g_target) {
    if (!(g_target > 0.0))
        throw Error(ErrorCode::UnreachableGain, "gain-circle target must be a positive linear ratio");
    const double s21_sq = std::norm(s.s21);
    if (s21_sq < 1e-30) throw Error(ErrorCode::UnreachableGain, "S21 is zero; the device has no forward gain");
    const Complex delta = determinant(s);
    const double ga = g_target / s21_sq;
    const Complex c1 = s.s11 - delta * std::conj(s.s22);
    const double denom = 1.0 + ga * (std::norm(s.s11) - std::norm(delta));
    if (std::abs(denom) <= 1e-12)
        throw Error(ErrorCode::DegenerateCircle, "gain-circle denominator vanishes at this gain level");
    // K*|S12*S21| written out so the unilateral limit stays finite.
    const double k_times_s12s21 = (1.0 - std::norm(s.s11) - std::norm(s.s22) + std::norm(delta)) / 2.0;
    const double s12s21 = std::abs(s.s12 * s.s21);
    double disc = 1.0 - 2.0 * k_times_s12s21 * ga + s12s21 * s12s21 * ga * ga;
    if (disc < 0.0) {
        if (disc < -1e-9)
            throw Error(ErrorCode::UnreachableGain, "requested available gain exceeds the reachable maximum");
        disc = 0.0;
    }
    SmithCircle circle;
    circle.center = ga * std::conj(c1) / denom;
    circle.radius = std::sqrt(disc) / std::abs(denom);
    return circle;
}

double max_available_gain(const TwoPortS& s) {
    if (std::abs(s.s12) < 1e-15)
        throw Error(ErrorCode::UnilateralDevice, "S12 is zero; MAG is unbounded, report the unilateral gain instead");
    const double k = rollett_k(s);
    const double delta_mag = std::abs(determinant(s));
    if (k < 1.0 || delta_mag > 1.0) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "K = %.6g, |delta| = %.6g; only MSG = %.6g is defined", k, delta_mag,
                      max_stable_gain(s));
        throw Error(ErrorCode::ConditionallyStable, msg);
    }
    // Reciprocal form of K - sqrt(K^2 - 1); stable for large K.
    return std::abs(s.s21 / s.s12) / (k + std::sqrt(k * k - 1.0));
}

double max_stable_gain(const TwoPortS& s) {
    if (std::abs(s.s12) < 1e-15)
        throw Error(ErrorCode::UnilateralDevice, "S12 is zero; MSG is unbounded");
    return std::abs(s.s21 / s.s12);
}

double unilateral_max_gain(const TwoPortS& s) {
    const double m11 = std::abs(s.s11), m22 = std::abs(s.s22);
    if (m11 >= 1.0 || m22 >= 1.0)
        throw Error(ErrorCode::ActiveMismatch, "|S11| or |S22| is not below 1; unilateral gain is undefined");
    return std::norm(s.s21) / ((1.0 - m11 * m11) * (1.0 - m22 * m22));
}

}  // namespace rfkit
