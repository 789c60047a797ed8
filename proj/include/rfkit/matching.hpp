#pragma once

#include "rfkit/core.hpp"

namespace rfkit {

enum class Topology { Identity, SeriesLineShuntStub, QuarterWave };
enum class StubKind { Open, Short };

// Chain (ABCD) matrix of a lossless two-port.
struct AbcdMatrix {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    Complex c{0.0, 0.0};
    Complex d{1.0, 0.0};

    AbcdMatrix cascade(const AbcdMatrix& next) const;
};

AbcdMatrix series_line_abcd(double electrical_deg, double line_z0);
AbcdMatrix shunt_stub_abcd(double electrical_deg, double line_z0, StubKind kind);

// Reflection coefficient looking into the two-port terminated in z_load,
// referenced to system_z0.
Complex abcd_input_gamma(const AbcdMatrix& m, double z_load, double system_z0);

// Transmission-line matching network: a series line toward the termination
// with a shunt stub at the termination end. Line and stub share line_z0.
struct MatchingNetwork {
    Topology topology = Topology::Identity;
    double series_line_deg = 0.0;  // [0, 360)
    double stub_deg = 0.0;         // [0, 180)
    StubKind stub_kind = StubKind::Open;
    double line_z0 = 50.0;
    Complex achieved_gamma{0.0, 0.0};
};

// Reflection presented by the network when terminated in system_z0.
Complex network_input_gamma(const MatchingNetwork& n, double system_z0);

// Finds the shortest series-line + shunt-stub pair presenting gamma_target
// (referenced to z0) when the far side is terminated in z0. The result is
// re-checked through the ABCD cascade before it is returned.
// Throws UnreachableTarget when |gamma_target| >= 1 - 1e-9.
MatchingNetwork single_stub_match(const Complex& gamma_target, double z0, StubKind stub_kind);

// 90-degree line with characteristic impedance sqrt(r_in * r_out).
// Throws ComplexTarget for nonpositive or nonfinite resistances.
MatchingNetwork quarter_wave_transformer(double r_in, double r_out);

struct MicrostripGeometry {
    double width_mm = 0.0;
    double eps_eff = 1.0;
};

struct MicrostripLine {
    double width_mm = 0.0;
    double length_mm = 0.0;
    double eps_r = 1.0;
    double substrate_height_mm = 0.0;
    double eps_eff = 1.0;
    double z0 = 50.0;
};

// Hammerstad-Jenkins closed-form synthesis: strip width and quasi-static
// effective permittivity for a target characteristic impedance. Valid for
// z0 in [10, 200] ohm, eps_r >= 1, h_mm > 0; otherwise throws OutOfModelRange.
MicrostripGeometry microstrip_synthesis(double z0, double eps_r, double h_mm);

// Physical length of an electrical length at frequency f on a line with
// effective permittivity eps_eff.
double electrical_to_physical_mm(double length_deg, double f_hz, double eps_eff);

}  // namespace rfkit
