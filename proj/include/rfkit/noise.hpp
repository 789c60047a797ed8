#pragma once

#include <span>

#include "rfkit/core.hpp"

namespace rfkit {

// Device noise parameters. f_min is the minimum noise factor (linear, >= 1),
// r_n the noise resistance normalized to the system impedance, gamma_opt the
// source reflection coefficient that attains f_min (|gamma_opt| < 1).
struct NoiseParameters {
    double f_min = 1.0;
    double r_n = 0.0;
    Complex gamma_opt{0.0, 0.0};
};

struct CascadeStage {
    double f = 1.0;  // linear noise factor, >= 1
    double g = 1.0;  // linear available gain, > 0
};

// Noise factor (linear) of a stage driven from source reflection gamma_s.
// Throws InvalidSource when |gamma_s| >= 1.
double noise_figure(const NoiseParameters& np, const Complex& gamma_s);

// Same quantity computed through normalized source/optimum admittances;
// agrees with noise_figure to within rounding. Throws SingularPoint when
// gamma_s or gamma_opt sits at the short-circuit point.
double noise_figure_admittance_form(const NoiseParameters& np, const Complex& gamma_s);

// Locus of source reflection coefficients with noise factor f_i (linear).
// Throws BelowMinimum when f_i < f_min and UndefinedParameter when r_n = 0
// with f_i > f_min (every point then has F = f_min; no finite circle).
SmithCircle noise_circle(const NoiseParameters& np, double f_i);

// Total noise factor of a cascade: F1 + sum_i (Fi - 1) / prod_{j<i} Gj.
// Throws EmptyCascade for an empty stage list.
double friis_cascade(std::span<const CascadeStage> stages);

}  // namespace rfkit
