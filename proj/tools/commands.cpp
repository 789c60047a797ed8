#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "rfkit/design.hpp"
#include "rfkit/gain.hpp"
#include "rfkit/matching.hpp"
#include "rfkit/noise.hpp"
#include "rfkit/smith_svg.hpp"
#include "rfkit/stability.hpp"
#include "rfkit/touchstone.hpp"

namespace rfkit::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::UnsupportedFormat:
        case ErrorCode::NonMonotonicFrequency:
        case ErrorCode::EmptySweep:
        case ErrorCode::IoError:
            return 2;
        case ErrorCode::NotUnconditionallyStable:
        case ErrorCode::InfeasibleSpec:
        case ErrorCode::NoStableLoad:
        case ErrorCode::UnreachableTarget:
        case ErrorCode::ComplexTarget:
        case ErrorCode::OutOfModelRange:
            return 4;
        default:
            return 3;
    }
}

std::string g4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const std::string t = trim(text);
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v))
        throw Error(ErrorCode::SyntaxError, "bad " + what + " \"" + text + "\"");
    return v;
}

// "3GHz", "2400MHz", "1e9", "1e9Hz" -> hertz
double parse_frequency(const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || !std::isfinite(v))
        throw Error(ErrorCode::SyntaxError, "bad frequency \"" + text + "\"");
    const std::string suffix = lower(trim(t.substr(end - t.c_str())));
    if (suffix.empty() || suffix == "hz") return v;
    if (suffix == "khz") return v * 1e3;
    if (suffix == "mhz") return v * 1e6;
    if (suffix == "ghz") return v * 1e9;
    throw Error(ErrorCode::SyntaxError, "bad frequency unit \"" + suffix + "\" in \"" + text + "\"");
}

std::vector<std::pair<std::string, std::string>> parse_kv_list(const std::string& text, char sep) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (item.empty() || item.front() == '#') continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::SyntaxError, "expected key=value, got \"" + item + "\"");
        out.emplace_back(lower(trim(item.substr(0, eq))), trim(item.substr(eq + 1)));
    }
    return out;
}

NoiseParameters parse_noise_string(const std::string& text, double z0) {
    NoiseParameters np;
    bool have_fmin = false, have_rn = false, have_gopt = false;
    for (const auto& [key, value] : parse_kv_list(text, ',')) {
        if (key == "fmin_db") {
            np.f_min = from_db(parse_number(value, "fmin_db"));
            have_fmin = true;
        } else if (key == "rn") {
            std::string v = value;
            const std::string lv = lower(v);
            if (lv.size() > 3 && lv.substr(lv.size() - 3) == "ohm") {
                np.r_n = parse_number(v.substr(0, v.size() - 3), "rn") / z0;
            } else {
                np.r_n = parse_number(v, "rn");
            }
            have_rn = true;
        } else if (key == "gopt") {
            np.gamma_opt = parse_gamma_literal(value);
            have_gopt = true;
        } else {
            throw Error(ErrorCode::SyntaxError, "unknown noise-parameter key \"" + key + "\"");
        }
    }
    if (!have_fmin || !have_rn || !have_gopt)
        throw Error(ErrorCode::SyntaxError, "noise parameters need fmin_db=, rn= and gopt= entries");
    if (np.f_min < 1.0) throw Error(ErrorCode::SyntaxError, "fmin_db must be nonnegative");
    if (np.r_n < 0.0) throw Error(ErrorCode::SyntaxError, "rn must be nonnegative");
    if (!(std::abs(np.gamma_opt) < 1.0)) throw Error(ErrorCode::SyntaxError, "|gopt| must be below 1");
    return np;
}

json number_or_inf(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

json gamma_block(const Complex& g) {
    const PolarForm p = complex_to_polar(g);
    return json{{"literal", format_gamma_literal(g)}, {"mag", p.magnitude}, {"deg", p.magnitude == 0.0 ? 0.0 : p.angle_deg}};
}

const char* region_name(Region r) { return r == Region::Inside ? "inside" : "outside"; }

json circle_json(const std::optional<SmithCircle>& c, const std::optional<Region>& stable) {
    if (!c) return nullptr;
    const PolarForm p = complex_to_polar(c->center);
    json j{{"center", format_gamma_literal(c->center)},
           {"center_mag", p.magnitude},
           {"center_deg", p.magnitude == 0.0 ? 0.0 : p.angle_deg},
           {"radius", c->radius}};
    j["stable_region"] = stable ? json(region_name(*stable)) : json(nullptr);
    return j;
}

json stability_json(const StabilityReport& r) {
    const PolarForm d = complex_to_polar(r.delta);
    json j;
    j["delta"] = format_gamma_literal(r.delta);
    j["delta_mag"] = d.magnitude;
    j["delta_deg"] = d.magnitude == 0.0 ? 0.0 : d.angle_deg;
    j["k"] = number_or_inf(r.k);
    j["mu"] = number_or_inf(r.mu);
    j["mu_prime"] = number_or_inf(r.mu_prime);
    j["unconditional"] = r.unconditional;
    j["load_circle"] = circle_json(r.load_circle, r.load_stable_region);
    j["source_circle"] = circle_json(r.source_circle, r.source_stable_region);
    return j;
}

json gain_summary_json(const TwoPortS& s) {
    json j;
    j["conditionally_stable"] = false;
    j["unilateral"] = false;
    j["mag"] = nullptr;
    j["mag_db"] = nullptr;
    j["msg"] = nullptr;
    j["msg_db"] = nullptr;
    j["unilateral_max_gain_db"] = nullptr;
    try {
        const double mag = max_available_gain(s);
        j["mag"] = mag;
        j["mag_db"] = to_db(mag);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ConditionallyStable) {
            j["conditionally_stable"] = true;
            const double msg = max_stable_gain(s);
            j["msg"] = msg;
            j["msg_db"] = to_db(msg);
        } else if (e.code() == ErrorCode::UnilateralDevice) {
            j["unilateral"] = true;
            try {
                j["unilateral_max_gain_db"] = to_db(unilateral_max_gain(s));
            } catch (const Error&) {
            }
        } else {
            throw;
        }
    }
    try {
        const UnilateralAssessment u = unilateral_assessment(s);
        j["u"] = u.u;
        j["bound_low_db"] = u.lower_db;
        j["bound_high_db"] = number_or_inf(u.upper_db);
    } catch (const Error&) {
        j["u"] = nullptr;
        j["bound_low_db"] = nullptr;
        j["bound_high_db"] = nullptr;
    }
    return j;
}

void print_stability_text(std::ostream& out, const StabilityReport& r) {
    out << "delta:     " << format_gamma_literal(r.delta) << "\n";
    out << "K:         " << (std::isinf(r.k) ? std::string("inf") : g4(r.k)) << "\n";
    out << "mu:        " << (std::isinf(r.mu) ? std::string("inf") : g4(r.mu)) << "  (mu' "
        << (std::isinf(r.mu_prime) ? std::string("inf") : g4(r.mu_prime)) << ")\n";
    out << "verdict:   " << (r.unconditional ? "unconditionally stable" : "conditionally stable") << "\n";
    const auto circle_line = [&](const char* name, const std::optional<SmithCircle>& c,
                                 const std::optional<Region>& reg) {
        out << name;
        if (!c) {
            out << "degenerate (boundary is not a circle)\n";
            return;
        }
        out << "center " << format_gamma_literal(c->center) << "  radius " << g4(c->radius);
        if (reg) out << "  stable side: " << region_name(*reg);
        out << "\n";
    };
    circle_line("load circle:   ", r.load_circle, r.load_stable_region);
    circle_line("source circle: ", r.source_circle, r.source_stable_region);
}

void emit_svg_if_requested(const CommonOptions& common, const SmithPlotSpec& plot) {
    if (common.svg_path.empty()) return;
    write_smith_svg(plot, common.svg_path);
}

SmithPlotSpec stability_plot(const StabilityReport& r) {
    SmithPlotSpec plot;
    if (r.load_circle) plot.circles.push_back({*r.load_circle, "load stability", r.load_stable_region});
    if (r.source_circle) plot.circles.push_back({*r.source_circle, "source stability", r.source_stable_region});
    return plot;
}

struct NetworkPhysical {
    double eps_eff = 1.0;
    double width_mm = 0.0;
    double frequency_hz = 0.0;
    bool present = false;
};

json network_json(const MatchingNetwork& n, const NetworkPhysical& phys) {
    json j;
    j["topology"] = n.topology == Topology::Identity          ? "identity"
                    : n.topology == Topology::QuarterWave     ? "quarter_wave"
                                                              : "series_line_shunt_stub";
    j["achieved_gamma"] = gamma_block(n.achieved_gamma);
    json elements = json::array();
    const auto add_element = [&](const char* type, double deg) {
        json e{{"type", type}, {"z0", n.line_z0}, {"deg", deg}};
        if (phys.present) {
            e["mm"] = electrical_to_physical_mm(deg, phys.frequency_hz, phys.eps_eff);
            e["width_mm"] = phys.width_mm;
        }
        elements.push_back(e);
    };
    if (n.topology == Topology::SeriesLineShuntStub) {
        add_element("series_line", n.series_line_deg);
        add_element(n.stub_kind == StubKind::Open ? "shunt_stub_open" : "shunt_stub_short", n.stub_deg);
    } else if (n.topology == Topology::QuarterWave) {
        add_element("series_line", n.series_line_deg);
    }
    j["elements"] = elements;
    return j;
}

void print_network_text(std::ostream& out, const char* name, const MatchingNetwork& n) {
    out << name;
    switch (n.topology) {
        case Topology::Identity:
            out << "identity (already matched)\n";
            break;
        case Topology::QuarterWave:
            out << "quarter-wave line, z0 " << g4(n.line_z0) << " ohm\n";
            break;
        case Topology::SeriesLineShuntStub:
            out << "series line " << g4(n.series_line_deg) << " deg + "
                << (n.stub_kind == StubKind::Open ? "open" : "short") << " stub " << g4(n.stub_deg) << " deg @ "
                << g4(n.line_z0) << " ohm\n";
            break;
    }
}

StubKind parse_stub_kind(const std::string& text) {
    const std::string t = lower(trim(text));
    if (t == "open") return StubKind::Open;
    if (t == "short") return StubKind::Short;
    throw Error(ErrorCode::SyntaxError, "stub kind must be open or short, got \"" + text + "\"");
}

struct DesignConfig {
    DesignSpec spec;
    ScanConfig scan;
};

DesignConfig parse_design_config(const std::string& path, double default_z0) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open \"" + path + "\"");
    std::stringstream buffer;
    buffer << in.rdbuf();
    DesignConfig cfg;
    cfg.spec.z0 = default_z0;
    bool have_freq = false, have_objective = false;
    for (const auto& [key, value] : parse_kv_list(buffer.str(), '\n')) {
        if (key == "freq") {
            cfg.spec.frequency_hz = parse_frequency(value);
            have_freq = true;
        } else if (key == "objective") {
            const std::string v = lower(value);
            if (v == "max_gain")
                cfg.spec.objective = Objective::MaxGain;
            else if (v == "min_noise")
                cfg.spec.objective = Objective::MinNoise;
            else if (v == "gain_at_nf_cap")
                cfg.spec.objective = Objective::GainAtNfCap;
            else
                throw Error(ErrorCode::SyntaxError, "unknown objective \"" + value + "\"");
            have_objective = true;
        } else if (key == "nf_max_db") {
            cfg.spec.nf_max = from_db(parse_number(value, "nf_max_db"));
        } else if (key == "gain_min_db") {
            cfg.spec.gain_min = from_db(parse_number(value, "gain_min_db"));
        } else if (key == "z0") {
            cfg.spec.z0 = parse_number(value, "z0");
        } else if (key == "scan_angular") {
            cfg.scan.angular_points = static_cast<int>(parse_number(value, "scan_angular"));
        } else if (key == "scan_radial") {
            cfg.scan.radial_points = static_cast<int>(parse_number(value, "scan_radial"));
        } else {
            throw Error(ErrorCode::SyntaxError, "unknown design config key \"" + key + "\"");
        }
    }
    if (!have_freq) throw Error(ErrorCode::SyntaxError, "design config needs freq=");
    if (!have_objective) throw Error(ErrorCode::SyntaxError, "design config needs objective=");
    if (cfg.spec.z0 <= 0.0) throw Error(ErrorCode::SyntaxError, "z0 must be positive");
    return cfg;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open \"" + path + "\" for writing");
    out << content;
    if (!out) throw Error(ErrorCode::IoError, "failed writing \"" + path + "\"");
}

}  // namespace

int cmd_analyze(const AnalyzeArgs& args) {
    try {
        const SweepTable sweep = load_touchstone(args.s2p_path);
        const double f = parse_frequency(args.frequency);
        const TwoPortS s = sample_at(sweep, f);
        const StabilityReport stab = stability_report(s);

        if (args.common.json) {
            json j;
            j["command"] = "analyze";
            j["file"] = args.s2p_path;
            j["frequency_hz"] = f;
            j["z0"] = sweep.z0();
            j["s_parameters"] = json{{"s11", format_gamma_literal(s.s11)},
                                     {"s21", format_gamma_literal(s.s21)},
                                     {"s12", format_gamma_literal(s.s12)},
                                     {"s22", format_gamma_literal(s.s22)}};
            j["stability"] = stability_json(stab);
            j["gain"] = gain_summary_json(s);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "file:      " << args.s2p_path << "\n";
            std::cout << "frequency: " << g4(f) << " Hz\n";
            std::cout << "z0:        " << g4(sweep.z0()) << " ohm\n";
            std::cout << "S11 " << format_gamma_literal(s.s11) << "  S21 " << format_gamma_literal(s.s21) << "  S12 "
                      << format_gamma_literal(s.s12) << "  S22 " << format_gamma_literal(s.s22) << "\n";
            print_stability_text(std::cout, stab);
            const json g = gain_summary_json(s);
            if (!g["mag_db"].is_null())
                std::cout << "MAG:       " << g4(g["mag_db"].get<double>()) << " dB\n";
            else if (!g["msg_db"].is_null())
                std::cout << "MSG:       " << g4(g["msg_db"].get<double>()) << " dB (conditionally stable)\n";
            else if (!g["unilateral_max_gain_db"].is_null())
                std::cout << "GTU,max:   " << g4(g["unilateral_max_gain_db"].get<double>()) << " dB (unilateral)\n";
            if (!g["u"].is_null()) {
                std::cout << "U:         " << g4(g["u"].get<double>()) << "\n";
                std::cout << "GT/GTU:    [" << g4(g["bound_low_db"].get<double>()) << ", "
                          << (g["bound_high_db"].is_string() ? g["bound_high_db"].get<std::string>()
                                                             : g4(g["bound_high_db"].get<double>()))
                          << "] dB\n";
            }
        }
        emit_svg_if_requested(args.common, stability_plot(stab));
        return 0;
    } catch (const Error& e) {
        std::cerr << "analyze: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

int cmd_design(const DesignArgs& args) {
    try {
        const SweepTable sweep = load_touchstone(args.s2p_path);
        const DesignConfig cfg = parse_design_config(args.config_path, args.common.z0);
        std::optional<NoiseParameters> np;
        if (!args.noise.empty()) np = parse_noise_string(args.noise, cfg.spec.z0);
        const StubKind stub = parse_stub_kind(args.stub);

        const DesignReport report = design_amplifier(sweep, np, cfg.spec, stub, cfg.scan);

        NetworkPhysical phys;
        if (args.eps_r && args.height_mm) {
            const MicrostripGeometry geo = microstrip_synthesis(cfg.spec.z0, *args.eps_r, *args.height_mm);
            phys = {geo.eps_eff, geo.width_mm, cfg.spec.frequency_hz, true};
        }

        const json source_net = network_json(report.source_network, phys);
        const json load_net = network_json(report.load_network, phys);
        json bias{{"electrical_deg", 90.0}, {"termination", "radial_stub_placeholder"}};
        bias["length_mm"] =
            phys.present ? json(electrical_to_physical_mm(90.0, phys.frequency_hz, phys.eps_eff)) : json(nullptr);

        if (args.common.json) {
            json j;
            j["command"] = "design";
            j["file"] = args.s2p_path;
            j["frequency_hz"] = cfg.spec.frequency_hz;
            j["z0"] = cfg.spec.z0;
            j["objective"] = cfg.spec.objective == Objective::MaxGain    ? "max_gain"
                             : cfg.spec.objective == Objective::MinNoise ? "min_noise"
                                                                         : "gain_at_nf_cap";
            j["gamma_s"] = format_gamma_literal(report.gamma_s);
            j["gamma_s_mag"] = std::abs(report.gamma_s);
            j["gamma_s_deg"] = complex_to_polar(report.gamma_s).angle_deg;
            j["gamma_l"] = format_gamma_literal(report.gamma_l);
            j["gamma_l_mag"] = std::abs(report.gamma_l);
            j["gamma_l_deg"] = complex_to_polar(report.gamma_l).angle_deg;
            j["gt"] = report.gt;
            j["gt_db"] = to_db(report.gt);
            j["ga"] = report.ga;
            j["ga_db"] = to_db(report.ga);
            j["nf"] = report.nf ? json(*report.nf) : json(nullptr);
            j["nf_db"] = report.nf ? json(to_db(*report.nf)) : json(nullptr);
            j["meets_gain_min"] = report.meets_gain_min;
            j["stability"] = stability_json(report.stability);
            j["source_network"] = source_net;
            j["load_network"] = load_net;
            j["bias_line"] = bias;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "Gamma_S:   " << format_gamma_literal(report.gamma_s) << "\n";
            std::cout << "Gamma_L:   " << format_gamma_literal(report.gamma_l) << "\n";
            std::cout << "GT:        " << g4(to_db(report.gt)) << " dB (" << g4(report.gt) << ")\n";
            std::cout << "GA:        " << g4(to_db(report.ga)) << " dB (" << g4(report.ga) << ")\n";
            if (report.nf) std::cout << "NF:        " << g4(to_db(*report.nf)) << " dB\n";
            if (!report.meets_gain_min) std::cout << "warning:   transducer gain is below gain_min\n";
            print_stability_text(std::cout, report.stability);
            print_network_text(std::cout, "source network: ", report.source_network);
            print_network_text(std::cout, "load network:   ", report.load_network);
            std::cout << "bias line: 90 deg quarter-wave, radial-stub termination placeholder\n";
        }

        if (!args.networks_prefix.empty()) {
            write_text_file(args.networks_prefix + "_source.json", source_net.dump(2) + "\n");
            write_text_file(args.networks_prefix + "_load.json", load_net.dump(2) + "\n");
        }

        SmithPlotSpec plot = stability_plot(report.stability);
        plot.points.push_back({report.gamma_s, "Gamma_S"});
        plot.points.push_back({report.gamma_l, "Gamma_L"});
        if (np) plot.points.push_back({np->gamma_opt, "Gamma_opt"});
        emit_svg_if_requested(args.common, plot);
        return 0;
    } catch (const Error& e) {
        std::cerr << "design: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

int cmd_circles(const CirclesArgs& args) {
    try {
        const SweepTable sweep = load_touchstone(args.s2p_path);
        const double f = parse_frequency(args.frequency);
        const TwoPortS s = sample_at(sweep, f);

        SmithPlotSpec plot;
        if (args.stability) plot = stability_plot(stability_report(s));
        for (const double g_db : args.gain_db)
            plot.circles.push_back({available_gain_circle(s, from_db(g_db)), "GA " + g4(g_db) + " dB", std::nullopt});
        if (!args.nf_db.empty()) {
            if (args.noise.empty())
                throw Error(ErrorCode::InfeasibleSpec, "noise parameters required for noise circles");
            const NoiseParameters np = parse_noise_string(args.noise, sweep.z0());
            for (const double nf_db : args.nf_db)
                plot.circles.push_back({noise_circle(np, from_db(nf_db)), "NF " + g4(nf_db) + " dB", std::nullopt});
        }
        for (const auto& spec : args.points) {
            const auto eq = spec.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorCode::SyntaxError, "point must be LABEL=MAG<ANGLE, got \"" + spec + "\"");
            plot.points.push_back({parse_gamma_literal(spec.substr(eq + 1)), trim(spec.substr(0, eq))});
        }

        if (args.common.json) {
            json j;
            j["command"] = "circles";
            j["file"] = args.s2p_path;
            j["frequency_hz"] = f;
            json circles = json::array();
            for (const auto& c : plot.circles) {
                json e = circle_json(c.circle, c.stable_side);
                e["label"] = c.label;
                circles.push_back(e);
            }
            j["circles"] = circles;
            json points = json::array();
            for (const auto& p : plot.points) {
                json e = gamma_block(p.value);
                e["label"] = p.label;
                points.push_back(e);
            }
            j["points"] = points;
            std::cout << j.dump(2) << "\n";
        } else if (args.common.csv) {
            std::cout << "label,center_mag,center_deg,radius\n";
            for (const auto& c : plot.circles) {
                const PolarForm p = complex_to_polar(c.circle.center);
                std::cout << c.label << "," << g4(p.magnitude) << "," << g4(p.magnitude == 0.0 ? 0.0 : p.angle_deg)
                          << "," << g4(c.circle.radius) << "\n";
            }
        } else {
            for (const auto& c : plot.circles)
                std::cout << c.label << ": center " << format_gamma_literal(c.circle.center) << "  radius "
                          << g4(c.circle.radius) << "\n";
        }
        emit_svg_if_requested(args.common, plot);
        return 0;
    } catch (const Error& e) {
        std::cerr << "circles: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

int cmd_cascade(const CascadeArgs& args) {
    try {
        if (args.stages.empty()) throw Error(ErrorCode::SyntaxError, "at least one --stage nf_db=X,gain_db=Y is required");
        std::vector<CascadeStage> stages;
        std::vector<std::pair<double, double>> db_values;
        for (const auto& text : args.stages) {
            std::optional<double> nf_db, gain_db;
            for (const auto& [key, value] : parse_kv_list(text, ',')) {
                if (key == "nf_db")
                    nf_db = parse_number(value, "nf_db");
                else if (key == "gain_db")
                    gain_db = parse_number(value, "gain_db");
                else
                    throw Error(ErrorCode::SyntaxError, "unknown stage key \"" + key + "\" in \"" + text + "\"");
            }
            if (!nf_db || !gain_db)
                throw Error(ErrorCode::SyntaxError, "stage \"" + text + "\" needs nf_db= and gain_db=");
            if (*nf_db < 0.0) throw Error(ErrorCode::SyntaxError, "stage NF must be nonnegative dB");
            stages.push_back({from_db(*nf_db), from_db(*gain_db)});
            db_values.emplace_back(*nf_db, *gain_db);
        }
        const double total = friis_cascade(stages);

        std::vector<double> contributions(stages.size());
        double gain_product = 1.0;
        for (std::size_t i = 0; i < stages.size(); ++i) {
            contributions[i] = i == 0 ? stages[0].f : (stages[i].f - 1.0) / gain_product;
            gain_product *= stages[i].g;
        }

        if (args.common.json) {
            json j;
            j["command"] = "cascade";
            json stage_list = json::array();
            for (std::size_t i = 0; i < stages.size(); ++i) {
                stage_list.push_back(json{{"index", i + 1},
                                          {"nf_db", db_values[i].first},
                                          {"gain_db", db_values[i].second},
                                          {"f", stages[i].f},
                                          {"g", stages[i].g},
                                          {"contribution", contributions[i]}});
            }
            j["stages"] = stage_list;
            j["total_f"] = total;
            j["total_nf_db"] = to_db(total);
            std::cout << j.dump(2) << "\n";
        } else if (args.common.csv) {
            std::cout << "stage,nf_db,gain_db,f,g,contribution\n";
            for (std::size_t i = 0; i < stages.size(); ++i)
                std::cout << i + 1 << "," << g4(db_values[i].first) << "," << g4(db_values[i].second) << ","
                          << g4(stages[i].f) << "," << g4(stages[i].g) << "," << g4(contributions[i]) << "\n";
            std::cout << "total," << g4(to_db(total)) << ",," << g4(total) << ",,\n";
        } else {
            std::cout << "stage  nf_db   gain_db  F       contribution\n";
            for (std::size_t i = 0; i < stages.size(); ++i) {
                char line[120];
                std::snprintf(line, sizeof line, "%-6zu %-7s %-8s %-7s %s\n", i + 1, g4(db_values[i].first).c_str(),
                              g4(db_values[i].second).c_str(), g4(stages[i].f).c_str(), g4(contributions[i]).c_str());
                std::cout << line;
            }
            std::cout << "total noise factor: " << g4(total) << "  (NF " << g4(to_db(total)) << " dB)\n";
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "cascade: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

int cmd_match(const MatchArgs& args) {
    try {
        MatchingNetwork net;
        if (!args.quarter_wave.empty()) {
            if (args.quarter_wave.size() != 2)
                throw Error(ErrorCode::SyntaxError, "--quarter-wave needs exactly two resistances");
            net = quarter_wave_transformer(args.quarter_wave[0], args.quarter_wave[1]);
        } else if (!args.gamma.empty()) {
            net = single_stub_match(parse_gamma_literal(args.gamma), args.common.z0, parse_stub_kind(args.stub));
        } else {
            throw Error(ErrorCode::SyntaxError, "either --gamma or --quarter-wave is required");
        }

        NetworkPhysical phys;
        if (args.eps_r && args.height_mm) {
            if (args.frequency.empty())
                throw Error(ErrorCode::SyntaxError, "--freq is required for a microstrip realization");
            const MicrostripGeometry geo = microstrip_synthesis(net.line_z0, *args.eps_r, *args.height_mm);
            phys = {geo.eps_eff, geo.width_mm, parse_frequency(args.frequency), true};
        }

        if (args.common.json) {
            json j;
            j["command"] = "match";
            j["z0"] = args.common.z0;
            j["network"] = network_json(net, phys);
            if (phys.present)
                j["microstrip"] = json{{"eps_r", *args.eps_r},
                                       {"substrate_height_mm", *args.height_mm},
                                       {"eps_eff", phys.eps_eff},
                                       {"width_mm", phys.width_mm}};
            else
                j["microstrip"] = nullptr;
            std::cout << j.dump(2) << "\n";
        } else {
            print_network_text(std::cout, "network: ", net);
            std::cout << "achieved gamma: " << format_gamma_literal(net.achieved_gamma) << "\n";
            if (phys.present) {
                std::cout << "microstrip: width " << g4(phys.width_mm) << " mm, eps_eff " << g4(phys.eps_eff) << "\n";
                if (net.topology == Topology::SeriesLineShuntStub) {
                    std::cout << "  series line "
                              << g4(electrical_to_physical_mm(net.series_line_deg, phys.frequency_hz, phys.eps_eff))
                              << " mm, stub "
                              << g4(electrical_to_physical_mm(net.stub_deg, phys.frequency_hz, phys.eps_eff))
                              << " mm\n";
                } else if (net.topology == Topology::QuarterWave) {
                    std::cout << "  line " << g4(electrical_to_physical_mm(90.0, phys.frequency_hz, phys.eps_eff))
                              << " mm\n";
                }
            }
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "match: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace rfkit::cli
