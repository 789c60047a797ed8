#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, rfkit::cli::CommonOptions* common, bool with_csv = false) {
    cmd->add_option("--z0", common->z0, "System reference impedance in ohms")->capture_default_str();
    cmd->add_flag("--json", common->json, "Emit a machine-readable JSON report");
    cmd->add_option("--svg", common->svg_path, "Write a Smith-chart SVG to this path");
    if (with_csv) cmd->add_flag("--csv", common->csv, "Emit CSV instead of the text table");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Small-signal amplifier design toolkit: S-parameter analysis, stability and "
                 "gain/noise circles, termination selection, and matching-network synthesis"};
    app.require_subcommand(1);

    rfkit::cli::AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Stability and gain figures at one frequency");
    analyze_cmd->add_option("s2p", analyze.s2p_path, "Touchstone .s2p file")->required();
    analyze_cmd->add_option("--freq", analyze.frequency, "Analysis frequency, e.g. 3GHz")->required();
    add_common(analyze_cmd, &analyze.common);

    rfkit::cli::DesignArgs design;
    auto* design_cmd = app.add_subcommand("design", "Full amplifier design pass from a config file");
    design_cmd->add_option("s2p", design.s2p_path, "Touchstone .s2p file")->required();
    design_cmd->add_option("--config", design.config_path, "key=value design config")->required();
    design_cmd->add_option("--noise", design.noise, "Noise parameters: fmin_db=, rn=, gopt=");
    design_cmd->add_option("--stub", design.stub, "Stub kind for matching networks: open|short")
        ->capture_default_str();
    design_cmd->add_option("--networks", design.networks_prefix, "Write matching networks to PREFIX_{source,load}.json");
    design_cmd->add_option("--eps-r", design.eps_r, "Substrate relative permittivity (enables microstrip lengths)");
    design_cmd->add_option("--height-mm", design.height_mm, "Substrate height in mm");
    add_common(design_cmd, &design.common);

    rfkit::cli::CirclesArgs circles;
    auto* circles_cmd = app.add_subcommand("circles", "Stability / gain / noise circle families");
    circles_cmd->add_option("s2p", circles.s2p_path, "Touchstone .s2p file")->required();
    circles_cmd->add_option("--freq", circles.frequency, "Frequency, e.g. 3GHz")->required();
    circles_cmd->add_flag("--stability", circles.stability, "Include the stability circles");
    circles_cmd->add_option("--ga-db", circles.gain_db, "Available-gain circle levels in dB");
    circles_cmd->add_option("--nf-db", circles.nf_db, "Noise circle levels in dB (needs --noise)");
    circles_cmd->add_option("--noise", circles.noise, "Noise parameters: fmin_db=, rn=, gopt=");
    circles_cmd->add_option("--point", circles.points, "Extra marker, LABEL=MAG<ANGLE");
    add_common(circles_cmd, &circles.common, true);

    rfkit::cli::CascadeArgs cascade;
    auto* cascade_cmd = app.add_subcommand("cascade", "Cascaded noise-figure budget");
    cascade_cmd->add_option("--stage", cascade.stages, "Stage spec nf_db=X,gain_db=Y (repeatable)")->required();
    add_common(cascade_cmd, &cascade.common, true);

    rfkit::cli::MatchArgs match;
    auto* match_cmd = app.add_subcommand("match", "Synthesize a matching network");
    match_cmd->add_option("--gamma", match.gamma, "Target reflection coefficient MAG<ANGLE");
    match_cmd->add_option("--quarter-wave", match.quarter_wave, "Real-to-real transformer: R_IN R_OUT")
        ->expected(2);
    match_cmd->add_option("--stub", match.stub, "Stub kind: open|short")->capture_default_str();
    match_cmd->add_option("--freq", match.frequency, "Design frequency (for microstrip lengths)");
    match_cmd->add_option("--eps-r", match.eps_r, "Substrate relative permittivity");
    match_cmd->add_option("--height-mm", match.height_mm, "Substrate height in mm");
    add_common(match_cmd, &match.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (analyze_cmd->parsed()) return rfkit::cli::cmd_analyze(analyze);
    if (design_cmd->parsed()) return rfkit::cli::cmd_design(design);
    if (circles_cmd->parsed()) return rfkit::cli::cmd_circles(circles);
    if (cascade_cmd->parsed()) return rfkit::cli::cmd_cascade(cascade);
    if (match_cmd->parsed()) return rfkit::cli::cmd_match(match);
    return 2;
}
