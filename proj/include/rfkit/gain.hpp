#pragma once

#include <cmath>

#include "rfkit/touchstone.hpp"

namespace rfkit {

inline double to_db(double ratio) { return 10.0 * std::log10(ratio); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

// Figure of merit U bounding the error of the unilateral (S12 = 0)
// approximation: 1/(1+U)^2 < GT/GTU < 1/(1-U)^2.
struct UnilateralAssessment {
    double u = 0.0;
    double lower_bound = 1.0;  // linear ratio
    double upper_bound = 1.0;
    double lower_db = 0.0;
    double upper_db = 0.0;
};

// Input reflection coefficient for a terminated output port.
Complex gamma_in(const TwoPortS& s, const Complex& gamma_l);

// Output reflection coefficient for a terminated input port.
Complex gamma_out(const TwoPortS& s, const Complex& gamma_s);

// Transducer gain (linear ratio) for the given terminations.
double transducer_gain(const TwoPortS& s, const Complex& gamma_s, const Complex& gamma_l);

// Throws ActiveMismatch when |S11| >= 1 or |S22| >= 1.
UnilateralAssessment unilateral_assessment(const TwoPortS& s);

// Available gain (linear ratio); depends on the source termination only.
double available_gain(const TwoPortS& s, const Complex& gamma_s);

// Locus of source reflection coefficients with available gain equal to
// g_target (linear ratio). Throws UnreachableGain when no such circle exists.
SmithCircle available_gain_circle(const TwoPortS& s, double g_target);

// MAG = |S21/S12| / (K + sqrt(K^2 - 1)). Throws ConditionallyStable when
// K < 1 (use max_stable_gain then) and UnilateralDevice when S12 = 0 (use
// unilateral_max_gain).
double max_available_gain(const TwoPortS& s);

// MSG = |S21/S12|.
double max_stable_gain(const TwoPortS& s);

// GTU at the unilateral match point: |S21|^2 / ((1-|S11|^2)(1-|S22|^2)).
double unilateral_max_gain(const TwoPortS& s);

}  // namespace rfkit
