#include "rfkit/design.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace rfkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex conjugate_match_root(double b, const Complex& c) {
    if (std::abs(c) < 1e-30) return {0.0, 0.0};
    const double disc = std::max(b * b - 4.0 * std::norm(c), 0.0);
    const Complex r1 = (b - std::sqrt(disc)) / (2.0 * c);
    if (std::abs(r1) < 1.0) return r1;
    const Complex r2 = (b + std::sqrt(disc)) / (2.0 * c);
    if (std::abs(r2) < 1.0) return r2;
    throw Error(ErrorCode::NotUnconditionallyStable, "conjugate-match quadratic has no root inside the unit disc");
}

// Membership in the stable region of the given port's reflection plane.
// For an unconditionally stable device the whole unit disc qualifies.
bool in_stable_region(const TwoPortS& s, Port port, const Complex& gamma, bool unconditional) {
    if (unconditional) return true;
    const SmithCircle circle = stability_circle(s, port);
    const Region stable = stable_region(s, port);
    const bool inside = std::abs(gamma - circle.center) < circle.radius;
    return stable == Region::Inside ? inside : !inside;
}

double available_gain_or_zero(const TwoPortS& s, const Complex& gamma) {
    try {
        return available_gain(s, gamma);
    } catch (const Error&) {
        return 0.0;
    }
}

template <typename Fn>
auto run_stage(const char* stage, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(e.code(), std::string("stage '") + stage + "': " + e.what());
    }
}

}  // namespace

MatchPair simultaneous_conjugate_match(const TwoPortS& s) {
    const Complex delta = determinant(s);
    if (!unconditionally_stable(s)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "device is not unconditionally stable (K = %.6g, |delta| = %.6g)",
                      rollett_k(s), std::abs(delta));
        throw Error(ErrorCode::NotUnconditionallyStable, msg);
    }
    const double b1 = 1.0 + std::norm(s.s11) - std::norm(s.s22) - std::norm(delta);
    const double b2 = 1.0 + std::norm(s.s22) - std::norm(s.s11) - std::norm(delta);
    const Complex c1 = s.s11 - delta * std::conj(s.s22);
    const Complex c2 = s.s22 - delta * std::conj(s.s11);
    return {conjugate_match_root(b1, c1), conjugate_match_root(b2, c2)};
}

Complex select_source_gamma(const TwoPortS& s, const std::optional<NoiseParameters>& np, const DesignSpec& spec,
                            const ScanConfig& scan) {
    switch (spec.objective) {
        case Objective::MinNoise:
            if (!np) throw Error(ErrorCode::InfeasibleSpec, "noise parameters required for the min-noise objective");
            return np->gamma_opt;
        case Objective::MaxGain:
            return simultaneous_conjugate_match(s).gamma_ms;
        case Objective::GainAtNfCap:
            break;
    }
    if (!np) throw Error(ErrorCode::InfeasibleSpec, "noise parameters required for the gain-at-NF-cap objective");
    if (!spec.nf_max) throw Error(ErrorCode::InfeasibleSpec, "nf_max required for the gain-at-NF-cap objective");
    const double cap = *spec.nf_max;
    if (cap < np->f_min)
        throw Error(ErrorCode::InfeasibleSpec, "the requested NF cap is below the device F_min; the noise circle is empty");

    const bool unconditional = unconditionally_stable(s);
    if (unconditional) {
        const Complex gamma_ms = simultaneous_conjugate_match(s).gamma_ms;
        if (noise_figure(*np, gamma_ms) <= cap) return gamma_ms;  // cap inactive
    }

    // The constrained optimum sits on the F = cap circle: available gain
    // rises monotonically toward Gamma_MS across the nested gain circles,
    // and the cap excludes Gamma_MS. Dense scan, then golden-section refine.
    const SmithCircle boundary = noise_circle(*np, cap);
    if (boundary.radius == 0.0) {
        if (!in_stable_region(s, Port::Source, boundary.center, unconditional))
            throw Error(ErrorCode::InfeasibleSpec, "the NF-cap point lies in the unstable source region");
        return boundary.center;
    }
    const auto gain_at = [&](double angle_deg) {
        const Complex gamma = boundary.point_at(angle_deg);
        if (!(std::abs(gamma) < 1.0 - 1e-9)) return 0.0;
        if (!in_stable_region(s, Port::Source, gamma, unconditional)) return 0.0;
        return available_gain_or_zero(s, gamma);
    };
    double best_angle = 0.0, best_gain = 0.0;
    const double step = 360.0 / scan.angular_points;
    for (int i = 0; i < scan.angular_points; ++i) {
        const double angle = i * step;
        const double g = gain_at(angle);
        if (g > best_gain) {
            best_gain = g;
            best_angle = angle;
        }
    }
    if (best_gain <= 0.0)
        throw Error(ErrorCode::InfeasibleSpec, "no feasible point on the NF-cap circle lies in the stable region");

    // Golden-section search on the bracketing arc.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_angle - step, hi = best_angle + step;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = gain_at(x1), f2 = gain_at(x2);
    while (hi - lo > 1e-7) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = gain_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = gain_at(x1);
        }
    }
    const double refined = (lo + hi) / 2.0;
    return boundary.point_at(gain_at(refined) >= best_gain ? refined : best_angle);
}

Complex conjugate_load(const TwoPortS& s, const Complex& gamma_s, const ScanConfig& scan) {
    if (!(std::abs(gamma_s) < 1.0))
        throw Error(ErrorCode::InvalidSource, "source reflection magnitude must be below 1");
    const bool unconditional = unconditionally_stable(s);
    const Complex candidate = std::conj(gamma_out(s, gamma_s));
    if (std::abs(candidate) < 1.0 && in_stable_region(s, Port::Load, candidate, unconditional)) return candidate;

    // Conjugate point unstable or active: scan the stable part of the disc
    // for the highest transducer gain. Strict comparison keeps the first
    // point scanned on exact ties, so the result is deterministic.
    double best_gt = -1.0;
    Complex best{0.0, 0.0};
    for (int j = scan.radial_points; j >= 1; --j) {
        const double rho = 0.98 * j / scan.radial_points;
        for (int i = 0; i < scan.angular_points; ++i) {
            const double angle = i * 360.0 / scan.angular_points;
            const Complex gamma = std::polar(rho, angle * kPi / 180.0);
            if (!in_stable_region(s, Port::Load, gamma, unconditional)) continue;
            double gt;
            try {
                gt = transducer_gain(s, gamma_s, gamma);
            } catch (const Error&) {
                continue;
            }
            if (gt > best_gt) {
                best_gt = gt;
                best = gamma;
            }
        }
    }
    if (best_gt < 0.0) throw Error(ErrorCode::NoStableLoad, "no load inside the unit disc is stable for this device");
    return best;
}

DesignReport design_amplifier(const SweepTable& sweep, const std::optional<NoiseParameters>& np,
                              const DesignSpec& spec, StubKind stub_kind, const ScanConfig& scan) {
    DesignReport report;
    const TwoPortS s = run_stage("sampling", [&] { return sample_at(sweep, spec.frequency_hz); });
    report.stability = run_stage("stability", [&] { return stability_report(s); });
    report.gamma_s = run_stage("source selection", [&] { return select_source_gamma(s, np, spec, scan); });
    report.gamma_l = run_stage("load selection", [&] { return conjugate_load(s, report.gamma_s, scan); });
    report.gt = run_stage("gain", [&] { return transducer_gain(s, report.gamma_s, report.gamma_l); });
    report.ga = run_stage("gain", [&] { return available_gain(s, report.gamma_s); });
    if (np) report.nf = run_stage("noise", [&] { return noise_figure(*np, report.gamma_s); });
    report.meets_gain_min = !spec.gain_min || report.gt >= *spec.gain_min;
    report.source_network =
        run_stage("source matching", [&] { return single_stub_match(report.gamma_s, spec.z0, stub_kind); });
    report.load_network =
        run_stage("load matching", [&] { return single_stub_match(report.gamma_l, spec.z0, stub_kind); });
    return report;
}

}  // namespace rfkit
