#pragma once

#include <optional>

#include "rfkit/touchstone.hpp"

namespace rfkit {

enum class Port { Load, Source };
enum class Region { Inside, Outside };

struct StabilityReport {
    Complex delta{0.0, 0.0};
    double k = 0.0;         // +inf when |S12*S21| vanishes
    double mu = 0.0;        // +inf when the mu denominator vanishes
    double mu_prime = 0.0;  // dual (load-side) single-parameter criterion
    bool unconditional = false;
    // Circles are absent when the defining denominator vanishes and the
    // boundary degenerates to a line (or the whole plane, for a zero matrix).
    std::optional<SmithCircle> load_circle;
    std::optional<SmithCircle> source_circle;
    std::optional<Region> load_stable_region;
    std::optional<Region> source_stable_region;
};

// delta = S11*S22 - S12*S21
Complex determinant(const TwoPortS& s);

// K > 1 and |delta| < 1, plus |S11| < 1 and |S22| < 1. The reflection
// conditions are implied by the first two whenever S12*S21 is nonzero; they
// only bite for the unilateral K = +inf sentinel, where the pair alone would
// mislabel an active device.
bool unconditionally_stable(const TwoPortS& s);

// Rollett stability factor K = (1 - |S11|^2 - |S22|^2 + |delta|^2) / (2|S12*S21|).
// Returns +inf for a unilateral device (|S12*S21| < 1e-15).
double rollett_k(const TwoPortS& s);

// Single-parameter criterion mu = (1 - |S11|^2) / (|S22 - delta*conj(S11)| + |S12*S21|).
// mu > 1 iff unconditionally stable; larger mu means larger margin.
// Throws DegenerateDenominator when both denominator terms are below 1e-15.
double mu_factor(const TwoPortS& s);

// Dual form mu' = (1 - |S22|^2) / (|S11 - delta*conj(S22)| + |S12*S21|).
double mu_prime_factor(const TwoPortS& s);

// Load-plane circle |Gamma_in| = 1, or source-plane circle |Gamma_out| = 1.
// Throws DegenerateCircle when | |Sii|^2 - |delta|^2 | <= 1e-12.
SmithCircle stability_circle(const TwoPortS& s, Port port);

// Which side of the stability circle is stable: the side containing the
// origin is stable iff |S11| < 1 (Load) / |S22| < 1 (Source).
Region stable_region(const TwoPortS& s, Port port);

StabilityReport stability_report(const TwoPortS& s);

}  // namespace rfkit
