#include "rfkit/smith_svg.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

namespace rfkit {

namespace {

// Fixed affine map: unit disc -> 500x500 px, center (250, 250), radius
// 240 px, positive imaginary axis pointing up.
constexpr double kSize = 500.0;
constexpr double kCx = 250.0;
constexpr double kCy = 250.0;
constexpr double kScale = 240.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // fold -0.00 into 0.00
    if (buf[0] == '-' && std::strtod(buf, nullptr) == 0.0) return buf + 1;
    return buf;
}

double px_x(const Complex& gamma) { return kCx + kScale * gamma.real(); }
double px_y(const Complex& gamma) { return kCy - kScale * gamma.imag(); }

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

void append_circle(std::string& out, double cx, double cy, double r, const std::string& attrs) {
    out += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" " + attrs + "/>\n";
}

void append_text(std::string& out, double x, double y, const std::string& fill, const std::string& text) {
    out += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"monospace\" font-size=\"12\" fill=\"" +
           fill + "\">" + escape(text) + "</text>\n";
}

// Two-arc path tracing the full circle, usable as an evenodd subpath.
std::string circle_path(double cx, double cy, double r) {
    const std::string rr = num(r);
    return "M " + num(cx + r) + " " + num(cy) + " A " + rr + " " + rr + " 0 1 0 " + num(cx - r) + " " + num(cy) +
           " A " + rr + " " + rr + " 0 1 0 " + num(cx + r) + " " + num(cy) + " Z";
}

void append_guides(std::string& out) {
    out += "<g clip-path=\"url(#disc)\" stroke=\"#cccccc\" fill=\"none\" stroke-width=\"0.75\">\n";
    for (const double r : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        // Constant normalized resistance r: center r/(1+r), radius 1/(1+r).
        append_circle(out, px_x(Complex{r / (1.0 + r), 0.0}), kCy, kScale / (1.0 + r), "");
    }
    for (const double x : {0.2, 0.5, 1.0, 2.0, 5.0}) {
        // Constant normalized reactance +/-x: centers (1, 1/x), radius 1/x.
        append_circle(out, px_x(Complex{1.0, 0.0}), kCy - kScale / x, kScale / x, "");
        append_circle(out, px_x(Complex{1.0, 0.0}), kCy + kScale / x, kScale / x, "");
    }
    out += "<line x1=\"" + num(kCx - kScale) + "\" y1=\"" + num(kCy) + "\" x2=\"" + num(kCx + kScale) + "\" y2=\"" +
           num(kCy) + "\"/>\n";
    out += "</g>\n";
}

}  // namespace

std::string render_smith_svg(const SmithPlotSpec& plot) {
    std::set<std::string> labels;
    for (const auto& c : plot.circles)
        if (!labels.insert(c.label).second)
            throw Error(ErrorCode::DuplicateLabel, "plot label \"" + c.label + "\" is used more than once");
    for (const auto& p : plot.points)
        if (!labels.insert(p.label).second)
            throw Error(ErrorCode::DuplicateLabel, "plot label \"" + p.label + "\" is used more than once");

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n";
    out += "<defs>\n";
    out += "<clipPath id=\"viewport\"><rect x=\"0\" y=\"0\" width=\"500\" height=\"500\"/></clipPath>\n";
    out += "<clipPath id=\"disc\"><circle cx=\"" + num(kCx) + "\" cy=\"" + num(kCy) + "\" r=\"" + num(kScale) +
           "\"/></clipPath>\n";
    out += "</defs>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"500\" height=\"500\" fill=\"#ffffff\"/>\n";
    out += "<g clip-path=\"url(#viewport)\">\n";

    if (plot.show_unit_chart) {
        append_guides(out);
        append_circle(out, kCx, kCy, kScale, "stroke=\"#333333\" fill=\"none\" stroke-width=\"1.5\"");
    }

    for (std::size_t i = 0; i < plot.circles.size(); ++i) {
        const auto& entry = plot.circles[i];
        const std::string color = kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
        const double cx = px_x(entry.circle.center);
        const double cy = px_y(entry.circle.center);
        const double r = kScale * entry.circle.radius;
        if (entry.stable_side) {
            if (*entry.stable_side == Region::Inside) {
                append_circle(out, cx, cy, r, "fill=\"" + color + "\" fill-opacity=\"0.2\" stroke=\"none\"");
            } else {
                // Everything in the viewport except the circle interior.
                out += "<path fill-rule=\"evenodd\" fill=\"" + color + "\" fill-opacity=\"0.2\" stroke=\"none\" d=\"";
                out += "M 0 0 H 500 V 500 H 0 Z ";
                out += circle_path(cx, cy, r);
                out += "\"/>\n";
            }
        }
        append_circle(out, cx, cy, r, "stroke=\"" + color + "\" fill=\"none\" stroke-width=\"1.5\"");
        // Label at the circle's nearest approach to the chart center.
        Complex anchor = entry.circle.center;
        const double mag = std::abs(anchor);
        if (mag > 1e-12) anchor -= entry.circle.radius * anchor / mag;
        append_text(out, px_x(anchor) + 4.0, px_y(anchor) - 4.0, color, entry.label);
    }

    for (std::size_t i = 0; i < plot.points.size(); ++i) {
        const auto& entry = plot.points[i];
        const std::string color = kPalette[(plot.circles.size() + i) % (sizeof kPalette / sizeof kPalette[0])];
        const double cx = px_x(entry.value);
        const double cy = px_y(entry.value);
        append_circle(out, cx, cy, 4.0, "class=\"marker\" fill=\"" + color + "\" stroke=\"none\"");
        append_text(out, cx + 7.0, cy - 7.0, color, entry.label);
    }

    out += "</g>\n</svg>\n";
    return out;
}

void write_smith_svg(const SmithPlotSpec& plot, const std::filesystem::path& out_path) {
    const std::string svg = render_smith_svg(plot);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open \"" + out_path.string() + "\" for writing");
    out.write(svg.data(), static_cast<std::streamsize>(svg.size()));
    if (!out) throw Error(ErrorCode::IoError, "failed writing \"" + out_path.string() + "\"");
}

}  // namespace rfkit
