#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rfkit/core.hpp"

namespace rfkit {

// One frequency point's 2x2 scattering matrix, referenced to z0 ohms.
struct TwoPortS {
    Complex s11{0.0, 0.0};
    Complex s12{0.0, 0.0};
    Complex s21{0.0, 0.0};
    Complex s22{0.0, 0.0};
    double z0 = 50.0;
};

struct SweepPoint {
    double frequency_hz = 0.0;
    TwoPortS s;
};

enum class TouchstoneFormat { MA, RI, DB };

// Frequency-ordered S-parameter sweep. Immutable after construction; the
// constructor enforces a non-empty, strictly increasing frequency grid.
class SweepTable {
public:
    SweepTable(std::vector<SweepPoint> points, double z0);

    std::span<const SweepPoint> points() const { return points_; }
    double z0() const { return z0_; }
    std::size_t size() const { return points_.size(); }
    double min_frequency_hz() const { return points_.front().frequency_hz; }
    double max_frequency_hz() const { return points_.back().frequency_hz; }

private:
    std::vector<SweepPoint> points_;
    double z0_;
};

// Touchstone v1 two-port parser. Option line "# <unit> S <format> R <z0>"
// with unit in {Hz, kHz, MHz, GHz} and format in {MA, RI, DB}; "!" comments
// stripped; each data row carries f, S11, S21, S12, S22. Defaults (GHz, MA,
// 50 ohm) apply to omitted option-line fields.
SweepTable parse_touchstone(std::istream& in);
SweepTable parse_touchstone(const std::string& text);
SweepTable load_touchstone(const std::filesystem::path& path);

std::string serialize_touchstone(const SweepTable& table, TouchstoneFormat format);

// Returns the grid point when f is within 1 Hz of one; otherwise linear
// interpolation in (magnitude, unwrapped phase) per parameter. Unwrapping
// picks the nearest branch between adjacent points, which assumes less than
// a half turn of phase change per sweep step.
TwoPortS sample_at(const SweepTable& table, double frequency_hz);

}  // namespace rfkit
