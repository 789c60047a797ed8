#pragma once

#include <optional>

#include "rfkit/gain.hpp"
#include "rfkit/matching.hpp"
#include "rfkit/noise.hpp"
#include "rfkit/stability.hpp"
#include "rfkit/touchstone.hpp"

namespace rfkit {

enum class Objective { MaxGain, MinNoise, GainAtNfCap };

struct DesignSpec {
    double frequency_hz = 0.0;
    Objective objective = Objective::MaxGain;
    std::optional<double> nf_max;    // linear noise factor
    std::optional<double> gain_min;  // linear power ratio
    double z0 = 50.0;
};

// Resolution of the fallback load scan and of the constrained source scan.
struct ScanConfig {
    int angular_points = 720;
    int radial_points = 50;
};

struct MatchPair {
    Complex gamma_ms{0.0, 0.0};
    Complex gamma_ml{0.0, 0.0};
};

// Simultaneous conjugate match (Gamma_MS, Gamma_ML), both strictly inside
// the unit disc. Throws NotUnconditionallyStable when K <= 1 or |delta| >= 1.
MatchPair simultaneous_conjugate_match(const TwoPortS& s);

// Source reflection coefficient for the requested objective:
//   MinNoise     -> gamma_opt
//   MaxGain      -> Gamma_MS
//   GainAtNfCap  -> available-gain maximizer subject to F(gamma) <= nf_max
//                   and membership in the stable source region; when the cap
//                   is inactive this is Gamma_MS, otherwise the optimum lies
//                   on the nf_max noise-circle boundary and is located by a
//                   dense angular scan refined with golden-section search.
Complex select_source_gamma(const TwoPortS& s, const std::optional<NoiseParameters>& np,
                            const DesignSpec& spec, const ScanConfig& scan = {});

// conj(gamma_out(s, gamma_s)) when that point is a stable load; otherwise a
// transducer-gain-maximizing scan over the stable part of the unit disc.
Complex conjugate_load(const TwoPortS& s, const Complex& gamma_s, const ScanConfig& scan = {});

struct DesignReport {
    Complex gamma_s{0.0, 0.0};
    Complex gamma_l{0.0, 0.0};
    double gt = 0.0;  // linear
    double ga = 0.0;  // linear
    std::optional<double> nf;  // linear; absent without noise parameters
    bool meets_gain_min = true;
    StabilityReport stability;
    MatchingNetwork source_network;
    MatchingNetwork load_network;
};

// Full design pass at spec.frequency_hz: sample, stability, termination
// selection, gains/NF, and matching-network synthesis for both ports.
// Upstream errors are rethrown with the failing stage named.
DesignReport design_amplifier(const SweepTable& sweep, const std::optional<NoiseParameters>& np,
                              const DesignSpec& spec, StubKind stub_kind = StubKind::Open,
                              const ScanConfig& scan = {});

}  // namespace rfkit
