#include "rfkit/noise.hpp"

#include <cmath>

namespace rfkit {

double noise_figure(const NoiseParameters& np, const Complex& gamma_s) {
    if (!(std::abs(gamma_s) < 1.0))
        throw Error(ErrorCode::InvalidSource, "source reflection magnitude must be below 1");
    const double num = 4.0 * np.r_n * std::norm(gamma_s - np.gamma_opt);
    const double den = (1.0 - std::norm(gamma_s)) * std::norm(1.0 + np.gamma_opt);
    return np.f_min + num / den;
}

double noise_figure_admittance_form(const NoiseParameters& np, const Complex& gamma_s) {
    if (!(std::abs(gamma_s) < 1.0))
        throw Error(ErrorCode::InvalidSource, "source reflection magnitude must be below 1");
    const Complex y_s = normalized_admittance(gamma_s);
    const Complex y_opt = normalized_admittance(np.gamma_opt);
    const double g_s = y_s.real();
    return np.f_min + np.r_n / g_s * std::norm(y_s - y_opt);
}

SmithCircle noise_circle(const NoiseParameters& np, double f_i) {
    if (f_i < np.f_min)
        throw Error(ErrorCode::BelowMinimum, "requested noise factor is below the device minimum");
    if (f_i == np.f_min) return {np.gamma_opt, 0.0};
    if (np.r_n <= 0.0)
        throw Error(ErrorCode::UndefinedParameter,
                    "r_n = 0 makes every source reflection attain f_min; no finite circle exists");
    const double n_i = (f_i - np.f_min) * std::norm(1.0 + np.gamma_opt) / (4.0 * np.r_n);
    SmithCircle circle;
    circle.center = np.gamma_opt / (1.0 + n_i);
    circle.radius = std::sqrt(n_i * n_i + n_i * (1.0 - std::norm(np.gamma_opt))) / (1.0 + n_i);
    return circle;
}

double friis_cascade(std::span<const CascadeStage> stages) {
    if (stages.empty()) throw Error(ErrorCode::EmptyCascade, "cascade has no stages");
    double total = stages[0].f;
    double gain_product = stages[0].g;
    for (std::size_t i = 1; i < stages.size(); ++i) {
        total += (stages[i].f - 1.0) / gain_product;
        gain_product *= stages[i].g;
    }
    return total;
}

}  // namespace rfkit
