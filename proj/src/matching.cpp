#include "rfkit/matching.hpp"

#include <array>
#include <cmath>

namespace rfkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSpeedOfLight = 299792458.0;  // m/s

double deg_to_rad(double deg) { return deg * (kPi / 180.0); }

double wrap_deg(double deg, double period) {
    double w = std::fmod(deg, period);
    if (w < 0.0) w += period;
    return w;
}

AbcdMatrix network_abcd(const MatchingNetwork& n) {
    switch (n.topology) {
        case Topology::Identity: return {};
        case Topology::QuarterWave: return series_line_abcd(n.series_line_deg, n.line_z0);
        case Topology::SeriesLineShuntStub:
            return series_line_abcd(n.series_line_deg, n.line_z0)
                .cascade(shunt_stub_abcd(n.stub_deg, n.line_z0, n.stub_kind));
    }
    return {};
}

}  // namespace

AbcdMatrix AbcdMatrix::cascade(const AbcdMatrix& next) const {
    return {a * next.a + b * next.c, a * next.b + b * next.d, c * next.a + d * next.c, c * next.b + d * next.d};
}

AbcdMatrix series_line_abcd(double electrical_deg, double line_z0) {
    const double bl = deg_to_rad(electrical_deg);
    const double cs = std::cos(bl), sn = std::sin(bl);
    return {Complex{cs, 0.0}, Complex{0.0, line_z0 * sn}, Complex{0.0, sn / line_z0}, Complex{cs, 0.0}};
}

AbcdMatrix shunt_stub_abcd(double electrical_deg, double line_z0, StubKind kind) {
    const double t = std::tan(deg_to_rad(electrical_deg));
    Complex y;
    if (kind == StubKind::Open) {
        y = Complex{0.0, t / line_z0};
    } else {
        if (std::abs(t) < 1e-12)
            throw Error(ErrorCode::SingularPoint, "zero-length short-circuit stub shorts the line");
        y = Complex{0.0, -1.0 / (line_z0 * t)};
    }
    return {Complex{1.0, 0.0}, Complex{0.0, 0.0}, y, Complex{1.0, 0.0}};
}

Complex abcd_input_gamma(const AbcdMatrix& m, double z_load, double system_z0) {
    // (Zin - z0) / (Zin + z0) with Zin = (A*ZL + B) / (C*ZL + D), arranged so
    // a vanishing C*ZL + D stays finite.
    const Complex num = m.a * z_load + m.b;
    const Complex den = m.c * z_load + m.d;
    return (num - system_z0 * den) / (num + system_z0 * den);
}

Complex network_input_gamma(const MatchingNetwork& n, double system_z0) {
    return abcd_input_gamma(network_abcd(n), system_z0, system_z0);
}

MatchingNetwork single_stub_match(const Complex& gamma_target, double z0, StubKind stub_kind) {
    if (!(std::abs(gamma_target) < 1.0 - 1e-9))
        throw Error(ErrorCode::UnreachableTarget, "target reflection magnitude must be below 1");
    if (!(z0 > 0.0) || !std::isfinite(z0))
        throw Error(ErrorCode::UnreachableTarget, "line impedance must be positive and finite");

    MatchingNetwork net;
    net.line_z0 = z0;
    net.stub_kind = stub_kind;
    const double rho = std::abs(gamma_target);
    if (rho == 0.0) {
        net.topology = Topology::Identity;
        net.achieved_gamma = {0.0, 0.0};
        return net;
    }

    // A shunt susceptance b across the matched termination reflects
    // -jb/(2+jb); the series line then rotates that onto the target. Both
    // signs of b solve it; keep the shorter series line, then shorter stub.
    const double b_mag = 2.0 * rho / std::sqrt(1.0 - rho * rho);
    const double target_arg_deg = complex_to_polar(gamma_target).angle_deg;
    double best_line = 0.0, best_stub = 0.0;
    bool have_best = false;
    for (const double b : std::array{b_mag, -b_mag}) {
        const Complex reflected = Complex{0.0, -b} / Complex{2.0, b};
        const double line_deg = wrap_deg((complex_to_polar(reflected).angle_deg - target_arg_deg) / 2.0, 180.0);
        const double stub_deg = stub_kind == StubKind::Open
                                    ? wrap_deg(std::atan(b) * 180.0 / kPi, 180.0)
                                    : wrap_deg(std::atan2(1.0, -b) * 180.0 / kPi, 180.0);
        const bool better = !have_best || line_deg < best_line - 1e-12 ||
                            (std::abs(line_deg - best_line) <= 1e-12 && stub_deg < best_stub);
        if (better) {
            best_line = line_deg;
            best_stub = stub_deg;
            have_best = true;
        }
    }
    net.topology = Topology::SeriesLineShuntStub;
    net.series_line_deg = best_line;
    net.stub_deg = best_stub;
    net.achieved_gamma = network_input_gamma(net, z0);
    if (std::abs(net.achieved_gamma - gamma_target) >= 1e-6)
        throw Error(ErrorCode::UnreachableTarget, "synthesized network failed the ABCD verification");
    return net;
}

MatchingNetwork quarter_wave_transformer(double r_in, double r_out) {
    if (!(r_in > 0.0) || !(r_out > 0.0) || !std::isfinite(r_in) || !std::isfinite(r_out))
        throw Error(ErrorCode::ComplexTarget, "quarter-wave transformer needs positive real resistances");
    MatchingNetwork net;
    net.topology = Topology::QuarterWave;
    net.series_line_deg = 90.0;
    net.line_z0 = std::sqrt(r_in * r_out);
    net.achieved_gamma = abcd_input_gamma(series_line_abcd(90.0, net.line_z0), r_out, r_in);
    return net;
}

MicrostripGeometry microstrip_synthesis(double z0, double eps_r, double h_mm) {
    if (!(z0 >= 10.0 && z0 <= 200.0))
        throw Error(ErrorCode::OutOfModelRange, "characteristic impedance outside the modeled 10-200 ohm range");
    if (!(eps_r >= 1.0)) throw Error(ErrorCode::OutOfModelRange, "relative permittivity must be at least 1");
    if (!(h_mm > 0.0)) throw Error(ErrorCode::OutOfModelRange, "substrate height must be positive");

    // Hammerstad-Jenkins two-branch synthesis for w/h.
    const double a = z0 / 60.0 * std::sqrt((eps_r + 1.0) / 2.0) +
                     (eps_r - 1.0) / (eps_r + 1.0) * (0.23 + 0.11 / eps_r);
    double w_h = 8.0 * std::exp(a) / (std::exp(2.0 * a) - 2.0);
    if (w_h > 2.0) {
        const double b = 377.0 * kPi / (2.0 * z0 * std::sqrt(eps_r));
        w_h = 2.0 / kPi *
              (b - 1.0 - std::log(2.0 * b - 1.0) +
               (eps_r - 1.0) / (2.0 * eps_r) * (std::log(b - 1.0) + 0.39 - 0.61 / eps_r));
    }

    // Quasi-static fill factor.
    double eps_eff = (eps_r + 1.0) / 2.0 + (eps_r - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 / w_h);
    if (w_h < 1.0) eps_eff += (eps_r - 1.0) / 2.0 * 0.04 * (1.0 - w_h) * (1.0 - w_h);

    return {w_h * h_mm, eps_eff};
}

double electrical_to_physical_mm(double length_deg, double f_hz, double eps_eff) {
    return length_deg / 360.0 * kSpeedOfLight / (f_hz * std::sqrt(eps_eff)) * 1000.0;
}

}  // namespace rfkit
