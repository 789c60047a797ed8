#include "rfkit/core.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace rfkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_double(std::string_view s, std::string_view whole) {
    const std::string token(trim(s));
    if (token.empty())
        throw Error(ErrorCode::SyntaxError, "empty number in gamma literal \"" + std::string(whole) + "\"");
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v))
        throw Error(ErrorCode::SyntaxError, "bad number \"" + token + "\" in gamma literal \"" + std::string(whole) + "\"");
    return v;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::NonMonotonicFrequency: return "NonMonotonicFrequency";
        case ErrorCode::EmptySweep: return "EmptySweep";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::SingularPoint: return "SingularPoint";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::DegenerateCircle: return "DegenerateCircle";
        case ErrorCode::SingularTermination: return "SingularTermination";
        case ErrorCode::ActiveMismatch: return "ActiveMismatch";
        case ErrorCode::UnreachableGain: return "UnreachableGain";
        case ErrorCode::ConditionallyStable: return "ConditionallyStable";
        case ErrorCode::UnilateralDevice: return "UnilateralDevice";
        case ErrorCode::InvalidSource: return "InvalidSource";
        case ErrorCode::BelowMinimum: return "BelowMinimum";
        case ErrorCode::UndefinedParameter: return "UndefinedParameter";
        case ErrorCode::EmptyCascade: return "EmptyCascade";
        case ErrorCode::NotUnconditionallyStable: return "NotUnconditionallyStable";
        case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
        case ErrorCode::NoStableLoad: return "NoStableLoad";
        case ErrorCode::UnreachableTarget: return "UnreachableTarget";
        case ErrorCode::ComplexTarget: return "ComplexTarget";
        case ErrorCode::OutOfModelRange: return "OutOfModelRange";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    }
    return "Error";
}

Complex SmithCircle::point_at(double angle_deg) const {
    const double rad = deg_to_rad(angle_deg);
    return center + radius * Complex{std::cos(rad), std::sin(rad)};
}

bool SmithCircle::contains(const Complex& p) const { return std::abs(p - center) < radius; }

double normalize_angle_deg(double angle_deg) {
    double a = std::fmod(angle_deg, 360.0);
    if (a <= -180.0)
        a += 360.0;
    else if (a > 180.0)
        a -= 360.0;
    return a;
}

Complex polar_to_complex(const PolarForm& p) {
    const double rad = deg_to_rad(p.angle_deg);
    return {p.magnitude * std::cos(rad), p.magnitude * std::sin(rad)};
}

PolarForm complex_to_polar(const Complex& z) { return {std::abs(z), rad_to_deg(std::arg(z))}; }

Complex gamma_to_normalized_impedance(const Complex& gamma) {
    if (std::abs(gamma - 1.0) <= kSingularTol)
        throw Error(ErrorCode::SingularPoint, "gamma at the open-circuit point 1+j0 has no finite impedance");
    return (1.0 + gamma) / (1.0 - gamma);
}

Complex normalized_admittance(const Complex& gamma) {
    if (std::abs(gamma + 1.0) <= kSingularTol)
        throw Error(ErrorCode::SingularPoint, "gamma at the short-circuit point -1+j0 has no finite admittance");
    return (1.0 - gamma) / (1.0 + gamma);
}

Complex parse_gamma_literal(std::string_view text) {
    const auto sep = text.find('<');
    if (sep == std::string_view::npos)
        throw Error(ErrorCode::SyntaxError, "gamma literal \"" + std::string(text) + "\" is missing the '<' separator");
    const double mag = parse_double(text.substr(0, sep), text);
    const double ang = parse_double(text.substr(sep + 1), text);
    if (mag < 0.0)
        throw Error(ErrorCode::SyntaxError, "gamma literal \"" + std::string(text) + "\" has a negative magnitude");
    return polar_to_complex({mag, ang});
}

std::string format_gamma_literal(const Complex& gamma, int significant_digits) {
    PolarForm p = complex_to_polar(gamma);
    if (p.magnitude == 0.0) p.angle_deg = 0.0;
    if (p.angle_deg == 0.0) p.angle_deg = 0.0;  // fold -0 into +0 for a unique text form
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g<%.*g", significant_digits, p.magnitude, significant_digits, p.angle_deg);
    return buf;
}

}  // namespace rfkit
