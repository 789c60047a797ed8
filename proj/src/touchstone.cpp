#include "rfkit/touchstone.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

namespace rfkit {

namespace {

struct OptionLine {
    double freq_scale = 1e9;  // GHz default
    TouchstoneFormat format = TouchstoneFormat::MA;
    double z0 = 50.0;
};

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

double to_double(const std::string& tok, int line_no) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v))
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": bad number \"" + tok + "\"");
    return v;
}

OptionLine parse_option_line(const std::vector<std::string>& tokens, int line_no) {
    OptionLine opt;
    std::size_t i = 1;  // tokens[0] == "#"
    while (i < tokens.size()) {
        const std::string t = upper(tokens[i]);
        if (t == "HZ" || t == "KHZ" || t == "MHZ" || t == "GHZ") {
            opt.freq_scale = t == "HZ" ? 1.0 : t == "KHZ" ? 1e3 : t == "MHZ" ? 1e6 : 1e9;
            ++i;
        } else if (t == "S") {
            ++i;
        } else if (t == "Y" || t == "Z" || t == "H" || t == "G") {
            throw Error(ErrorCode::UnsupportedFormat,
                        "line " + std::to_string(line_no) + ": only S-parameters are supported, got \"" + tokens[i] + "\"");
        } else if (t == "MA" || t == "RI" || t == "DB") {
            opt.format = t == "MA" ? TouchstoneFormat::MA : t == "RI" ? TouchstoneFormat::RI : TouchstoneFormat::DB;
            ++i;
        } else if (t == "R") {
            if (i + 1 >= tokens.size())
                throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": option line R without a value");
            opt.z0 = to_double(tokens[i + 1], line_no);
            if (opt.z0 <= 0.0)
                throw Error(ErrorCode::SyntaxError,
                            "line " + std::to_string(line_no) + ": reference impedance must be positive");
            i += 2;
        } else {
            throw Error(ErrorCode::SyntaxError,
                        "line " + std::to_string(line_no) + ": unknown option-line token \"" + tokens[i] + "\"");
        }
    }
    return opt;
}

Complex pair_to_complex(double first, double second, TouchstoneFormat fmt) {
    switch (fmt) {
        case TouchstoneFormat::RI: return {first, second};
        case TouchstoneFormat::MA: return polar_to_complex({first, second});
        case TouchstoneFormat::DB: return polar_to_complex({std::pow(10.0, first / 20.0), second});
    }
    return {};
}

void append_pair(std::string& out, const Complex& v, TouchstoneFormat fmt) {
    char buf[80];
    switch (fmt) {
        case TouchstoneFormat::RI:
            std::snprintf(buf, sizeof buf, " %.12g %.12g", v.real(), v.imag());
            break;
        case TouchstoneFormat::MA: {
            const PolarForm p = complex_to_polar(v);
            std::snprintf(buf, sizeof buf, " %.12g %.12g", p.magnitude, p.magnitude == 0.0 ? 0.0 : p.angle_deg);
            break;
        }
        case TouchstoneFormat::DB: {
            const PolarForm p = complex_to_polar(v);
            const double db = 20.0 * std::log10(std::max(p.magnitude, 1e-30));
            std::snprintf(buf, sizeof buf, " %.12g %.12g", db, p.magnitude == 0.0 ? 0.0 : p.angle_deg);
            break;
        }
    }
    out += buf;
}

double lerp(double a, double b, double t) { return a + (b - a) * t; }

Complex interp_polar(const Complex& a, const Complex& b, double t) {
    const PolarForm pa = complex_to_polar(a);
    PolarForm pb = complex_to_polar(b);
    // Nearest-branch unwrap: assumes < 180 degrees of change per step.
    while (pb.angle_deg - pa.angle_deg > 180.0) pb.angle_deg -= 360.0;
    while (pb.angle_deg - pa.angle_deg < -180.0) pb.angle_deg += 360.0;
    return polar_to_complex({lerp(pa.magnitude, pb.magnitude, t), lerp(pa.angle_deg, pb.angle_deg, t)});
}

}  // namespace

SweepTable::SweepTable(std::vector<SweepPoint> points, double z0) : points_(std::move(points)), z0_(z0) {
    if (points_.empty()) throw Error(ErrorCode::EmptySweep, "sweep table has no frequency points");
    if (z0_ <= 0.0 || !std::isfinite(z0_))
        throw Error(ErrorCode::SyntaxError, "reference impedance must be positive and finite");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (!(p.frequency_hz > 0.0) || !std::isfinite(p.frequency_hz))
            throw Error(ErrorCode::SyntaxError, "frequencies must be positive and finite");
        for (const Complex* v : {&p.s.s11, &p.s.s12, &p.s.s21, &p.s.s22})
            if (!std::isfinite(v->real()) || !std::isfinite(v->imag()))
                throw Error(ErrorCode::SyntaxError, "S-parameter entries must be finite");
        if (i > 0 && points_[i - 1].frequency_hz >= p.frequency_hz)
            throw Error(ErrorCode::NonMonotonicFrequency,
                        "frequencies must be strictly increasing (violated at point " + std::to_string(i + 1) + ")");
    }
}

SweepTable parse_touchstone(std::istream& in) {
    std::vector<SweepPoint> points;
    OptionLine opt;
    bool option_seen = false;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (const auto bang = raw.find('!'); bang != std::string::npos) raw.erase(bang);
        const auto tokens = split_tokens(raw);
        if (tokens.empty()) continue;
        if (tokens[0].front() == '[')
            throw Error(ErrorCode::UnsupportedFormat,
                        "line " + std::to_string(line_no) + ": Touchstone v2 keyword \"" + tokens[0] +
                            "\"; only v1 two-port files are supported");
        if (tokens[0] == "#") {
            if (option_seen)
                throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": repeated option line");
            opt = parse_option_line(tokens, line_no);
            option_seen = true;
            continue;
        }
        if (tokens[0].front() == '#') {  // "#GHz" style without a space
            auto fixed = tokens;
            fixed[0].erase(fixed[0].begin());
            fixed.insert(fixed.begin(), "#");
            if (option_seen)
                throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": repeated option line");
            opt = parse_option_line(fixed, line_no);
            option_seen = true;
            continue;
        }
        if (tokens.size() == 3 || tokens.size() == 7)
            throw Error(ErrorCode::UnsupportedFormat,
                        "line " + std::to_string(line_no) + ": row with " + std::to_string(tokens.size()) +
                            " columns looks like data for a port count other than 2");
        if (tokens.size() != 9)
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": expected 9 columns, got " +
                                                    std::to_string(tokens.size()));
        double v[9];
        for (int i = 0; i < 9; ++i) v[i] = to_double(tokens[i], line_no);
        SweepPoint p;
        p.frequency_hz = v[0] * opt.freq_scale;
        // v1 two-port column order: f, S11, S21, S12, S22.
        p.s.s11 = pair_to_complex(v[1], v[2], opt.format);
        p.s.s21 = pair_to_complex(v[3], v[4], opt.format);
        p.s.s12 = pair_to_complex(v[5], v[6], opt.format);
        p.s.s22 = pair_to_complex(v[7], v[8], opt.format);
        p.s.z0 = opt.z0;
        if (!points.empty() && points.back().frequency_hz >= p.frequency_hz)
            throw Error(ErrorCode::NonMonotonicFrequency,
                        "line " + std::to_string(line_no) + ": frequency does not increase");
        points.push_back(p);
    }
    return SweepTable(std::move(points), opt.z0);
}

SweepTable parse_touchstone(const std::string& text) {
    std::istringstream in(text);
    return parse_touchstone(in);
}

SweepTable load_touchstone(const std::filesystem::path& path) {
    const std::string ext = upper(path.extension().string());
    if (ext == ".TS")
        throw Error(ErrorCode::UnsupportedFormat, "\"" + path.string() + "\": Touchstone v2 (.ts) is not supported");
    if (ext.size() > 2 && ext.front() == '.' && ext[1] == 'S' && ext.back() == 'P' && ext != ".S2P")
        throw Error(ErrorCode::UnsupportedFormat, "\"" + path.string() + "\": only two-port (.s2p) files are supported");
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open \"" + path.string() + "\"");
    return parse_touchstone(in);
}

std::string serialize_touchstone(const SweepTable& table, TouchstoneFormat format) {
    const char* fmt_name = format == TouchstoneFormat::MA ? "MA" : format == TouchstoneFormat::RI ? "RI" : "DB";
    std::string out = "! 2-port S-parameter data\n";
    char header[64];
    std::snprintf(header, sizeof header, "# Hz S %s R %.12g\n", fmt_name, table.z0());
    out += header;
    for (const auto& p : table.points()) {
        char freq[40];
        std::snprintf(freq, sizeof freq, "%.12g", p.frequency_hz);
        out += freq;
        append_pair(out, p.s.s11, format);
        append_pair(out, p.s.s21, format);
        append_pair(out, p.s.s12, format);
        append_pair(out, p.s.s22, format);
        out += '\n';
    }
    return out;
}

TwoPortS sample_at(const SweepTable& table, double frequency_hz) {
    const auto pts = table.points();
    if (frequency_hz < table.min_frequency_hz() - 1.0 || frequency_hz > table.max_frequency_hz() + 1.0) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "frequency %.6g Hz outside the sweep range [%.6g, %.6g] Hz", frequency_hz,
                      table.min_frequency_hz(), table.max_frequency_hz());
        throw Error(ErrorCode::OutOfRange, msg);
    }
    for (const auto& p : pts)
        if (std::abs(p.frequency_hz - frequency_hz) <= 1.0) return p.s;
    auto upper_it = std::lower_bound(pts.begin(), pts.end(), frequency_hz,
                                     [](const SweepPoint& p, double f) { return p.frequency_hz < f; });
    const auto& hi = *upper_it;
    const auto& lo = *(upper_it - 1);
    const double t = (frequency_hz - lo.frequency_hz) / (hi.frequency_hz - lo.frequency_hz);
    TwoPortS s;
    s.z0 = table.z0();
    s.s11 = interp_polar(lo.s.s11, hi.s.s11, t);
    s.s21 = interp_polar(lo.s.s21, hi.s.s21, t);
    s.s12 = interp_polar(lo.s.s12, hi.s.s12, t);
    s.s22 = interp_polar(lo.s.s22, hi.s.s22, t);
    return s;
}

}  // namespace rfkit
