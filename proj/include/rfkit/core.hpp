#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "rfkit/error.hpp"

namespace rfkit {

using Complex = std::complex<double>;

// Tolerance on |gamma -/+ 1| below which the impedance/admittance maps are
// treated as singular. Far below the precision of any measured S-parameter.
inline constexpr double kSingularTol = 1e-9;

// Magnitude / angle pair. Every public interface takes and returns angles in
// degrees; radians appear only inside implementations.
struct PolarForm {
    double magnitude = 0.0;
    double angle_deg = 0.0;
};

// Circle in the reflection-coefficient plane.
struct SmithCircle {
    Complex center{0.0, 0.0};
    double radius = 0.0;

    Complex point_at(double angle_deg) const;
    bool contains(const Complex& p) const;  // open interior
};

// Wraps an angle into (-180, 180].
double normalize_angle_deg(double angle_deg);

Complex polar_to_complex(const PolarForm& p);
PolarForm complex_to_polar(const Complex& z);

// z = (1 + gamma) / (1 - gamma). Throws SingularPoint at the open-circuit
// point gamma = 1.
Complex gamma_to_normalized_impedance(const Complex& gamma);

// y = (1 - gamma) / (1 + gamma). Throws SingularPoint at the short-circuit
// point gamma = -1.
Complex normalized_admittance(const Complex& gamma);

// Reflection-coefficient text literal "MAG<ANGLE", e.g. "0.697<-157".
// Whitespace around '<' is accepted.
Complex parse_gamma_literal(std::string_view text);
std::string format_gamma_literal(const Complex& gamma, int significant_digits = 4);

}  // namespace rfkit
