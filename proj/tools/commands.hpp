#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rfkit::cli {

struct CommonOptions {
    double z0 = 50.0;
    bool json = false;
    bool csv = false;
    std::string svg_path;  // empty -> no SVG output
};

struct AnalyzeArgs {
    std::string s2p_path;
    std::string frequency;
    CommonOptions common;
};

struct DesignArgs {
    std::string s2p_path;
    std::string config_path;
    std::string noise;          // "fmin_db=..., rn=..., gopt=..." or empty
    std::string stub = "open";  // open | short
    std::string networks_prefix;
    std::optional<double> eps_r;
    std::optional<double> height_mm;
    CommonOptions common;
};

struct CirclesArgs {
    std::string s2p_path;
    std::string frequency;
    bool stability = false;
    std::vector<double> gain_db;
    std::vector<double> nf_db;
    std::string noise;
    std::vector<std::string> points;  // "LABEL=MAG<ANGLE"
    CommonOptions common;
};

struct CascadeArgs {
    std::vector<std::string> stages;  // "nf_db=X,gain_db=Y"
    CommonOptions common;
};

struct MatchArgs {
    std::string gamma;               // "MAG<ANGLE"
    std::vector<double> quarter_wave;  // [r_in, r_out] when sized 2
    std::string stub = "open";
    std::string frequency;
    std::optional<double> eps_r;
    std::optional<double> height_mm;
    CommonOptions common;
};

int cmd_analyze(const AnalyzeArgs& args);
int cmd_design(const DesignArgs& args);
int cmd_circles(const CirclesArgs& args);
int cmd_cascade(const CascadeArgs& args);
int cmd_match(const MatchArgs& args);

}  // namespace rfkit::cli
