// Command-line surface: sample / verify / asymptotics / preset.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "ngss/ngss.hpp"

namespace {

using nlohmann::json;

ngss::GridSpec parse_grid(const std::string& s) {
    ngss::GridSpec g;
    char comma;
    std::istringstream in(s);
    in >> g.x_min >> comma >> g.x_max >> comma >> g.nx >> comma >> g.t_min >> comma >> g.t_max >>
        comma >> g.nt;
    if (!in) throw ngss::error("SchemaViolation", "grid must be X0,X1,NX,T0,T1,NT");
    ngss::validate_grid(g);
    return g;
}

int run_sample(const std::string& spec_path, const std::string& grid_str, const std::string& out,
               const std::string& format, const std::string& svg_path) {
    const ngss::SpectralConfiguration raw = ngss::load_spec_file(spec_path);
    const ngss::ValidatedConfiguration cfg = ngss::validate_config(raw);
    const ngss::GridSpec grid = parse_grid(grid_str);
    const ngss::GridSample sample = ngss::sample_grid(cfg, grid, ngss::digest_file(spec_path));

    std::ofstream os(out, std::ios::binary);
    if (!os) throw ngss::error("IoFailure", "cannot open output file: " + out);
    if (format == "csv")
        ngss::export_csv(os, sample);
    else if (format == "json")
        ngss::export_json(os, sample);
    else
        throw ngss::error("SchemaViolation", "format must be csv or json");

    if (!svg_path.empty()) {
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw ngss::error("IoFailure", "cannot open SVG file: " + svg_path);
        ngss::export_svg(svg, sample);
    }
    return 0;
}

int run_verify(const std::string& spec_path, int points, double h, unsigned long seed) {
    const ngss::SpectralConfiguration raw = ngss::load_spec_file(spec_path);
    const ngss::ValidatedConfiguration cfg = ngss::validate_config(raw);
    const ngss::FieldFn field = ngss::make_field_fn(cfg);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-10.0, 10.0), ut(-5.0, 5.0);
    std::vector<std::pair<double, double>> pts;
    while (static_cast<int>(pts.size()) < points) {
        const double x = ux(rng), t = ut(rng);
        if (!field(x, t).singular_flag) pts.emplace_back(x, t);
    }

    json suites;
    bool all_pass = true;

    {  // residual suite
        const double tol = cfg.all_orders_one() ? 1e-5 : 1e-4;
        json detail = json::array();
        double worst = 0.0;
        for (auto [x, t] : pts) {
            const ngss::ResidualReport r = ngss::pde_residual(field, x, t, h);
            worst = std::max(worst, r.relative_residual);
            detail.push_back(ngss::to_json(r));
        }
        const ngss::ConvergenceReport conv =
            ngss::residual_convergence(field, {pts.begin(), pts.begin() + std::min<std::size_t>(5, pts.size())},
                                       {4e-3, 2e-3, 1e-3});
        const bool pass = worst <= tol && std::abs(conv.estimated_order - 4.0) <= 0.5;
        all_pass &= pass;
        suites["residual"] = {{"pass", pass},
                              {"tolerance", tol},
                              {"worst_relative", worst},
                              {"convergence", ngss::to_json(conv)},
                              {"points", detail}};
    }

    if (cfg.all_orders_one()) {  // consistency suite
        bool pass = true;
        double worst = 0.0;
        for (auto [x, t] : pts) {
            const ngss::ConsistencyReport r = ngss::check_reconstruction_consistency(cfg, x, t, 1e-9);
            pass &= r.pass;
            for (double d : r.defects) worst = std::max(worst, d);
        }
        all_pass &= pass;
        suites["consistency"] = {{"pass", pass}, {"tolerance", 1e-9}, {"worst_defect", worst}};
    }

    if (cfg.all_orders_one()) {  // dressing suite
        std::vector<ngss::cx> ks;
        std::uniform_real_distribution<double> uk(0.2, 2.0);
        for (int i = 0; i < 10; ++i) ks.emplace_back(uk(rng), uk(rng));
        const ngss::DressingReport r = ngss::check_dressing(cfg, 0.7, 0.3, ks, 1e-9);
        all_pass &= r.pass;
        suites["dressing"] = ngss::to_json(r);
    }

    if (cfg.all_orders_one()) {  // reduction suite
        const ngss::ReductionReport r = ngss::check_reduction_highorder(cfg, pts, 1e-9);
        all_pass &= r.pass;
        suites["reduction"] = ngss::to_json(r);
    }

    const json report = {{"spec", spec_path},
                         {"config_digest", ngss::digest_file(spec_path)},
                         {"seed", seed},
                         {"h", h},
                         {"points", points},
                         {"suites", suites},
                         {"pass", all_pass}};
    std::cout << report.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

int run_asymptotics(const std::string& spec_path) {
    const ngss::SpectralConfiguration raw = ngss::load_spec_file(spec_path);
    const ngss::ValidatedConfiguration cfg = ngss::validate_config(raw);

    const ngss::AsymptoticProfile past = ngss::asymptotic_profile(cfg, ngss::TimeDirection::Past);
    const ngss::AsymptoticProfile fut = ngss::asymptotic_profile(cfg, ngss::TimeDirection::Future);
    const ngss::CollisionReport col = ngss::collision_amplitudes(cfg);
    const ngss::SechFitResult fit_m = ngss::fit_frame_peak(cfg, -30.0);
    const ngss::SechFitResult fit_p = ngss::fit_frame_peak(cfg, +30.0);

    auto prof = [](const ngss::AsymptoticProfile& p) {
        return json{{"amplitude", p.amplitude},
                    {"velocity", p.velocity},
                    {"width_rate", p.width_rate},
                    {"position_offset", p.position_offset}};
    };
    auto fit = [](const ngss::SechFitResult& f) {
        return json{{"amplitude", f.amplitude}, {"peak_x", f.peak_x}, {"delta", f.delta}};
    };
    const json out = {{"profile_past", prof(past)},
                      {"profile_future", prof(fut)},
                      {"collision",
                       {{"B", col.B},
                        {"A", col.A},
                        {"equal", col.equal},
                        {"re_a1c1", col.re_a1c1},
                        {"criterion_left", {col.criterion_left.real(), col.criterion_left.imag()}},
                        {"criterion_right", {col.criterion_right.real(), col.criterion_right.imag()}}}},
                      {"position_shift", ngss::position_shift(cfg)},
                      {"fit_t_minus_30", fit(fit_m)},
                      {"fit_t_plus_30", fit(fit_p)}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_preset(const std::string& name, bool emit_spec) {
    const ngss::Preset p = ngss::figure_preset(name);
    if (emit_spec) {
        std::cout << ngss::config_to_json(p.config).dump(2) << '\n';
        return 0;
    }
    const json out = {{"name", p.name},
                      {"note", p.note},
                      {"window",
                       {{"x_min", p.window.x_min},
                        {"x_max", p.window.x_max},
                        {"t_min", p.window.t_min},
                        {"t_max", p.window.t_max},
                        {"nx", p.window.nx},
                        {"nt", p.window.nt}}},
                      {"spec", ngss::config_to_json(p.config)}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlocal generalized Sasa-Satsuma soliton toolkit"};
    app.require_subcommand(1);

    std::string spec_path, grid_str, out_path, format = "csv", svg_path, preset_name;
    int points = 20;
    double h = 1e-3;
    unsigned long seed = 12345;
    bool emit_spec = false;

    CLI::App* sample = app.add_subcommand("sample", "evaluate q on a space-time grid");
    sample->add_option("--spec", spec_path, "spec JSON file")->required();
    sample->add_option("--grid", grid_str, "X0,X1,NX,T0,T1,NT")->required();
    sample->add_option("--out", out_path, "output file")->required();
    sample->add_option("--format", format, "csv|json");
    sample->add_option("--svg", svg_path, "also write an SVG heatmap of |q|");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->set_help_flag("--help", "print help");  // frees -h for the step option
    verify->add_option("--spec", spec_path, "spec JSON file")->required();
    verify->add_option("--points", points, "number of sample points");
    verify->add_option("-h,--h", h, "finite-difference step");
    verify->add_option("--seed", seed, "random seed");

    CLI::App* asym = app.add_subcommand("asymptotics", "1-soliton long-time analysis");
    asym->add_option("--spec", spec_path, "spec JSON file")->required();

    CLI::App* preset = app.add_subcommand("preset", "named figure parameter sets");
    preset->add_option("--name", preset_name, "fig1..fig15")->required();
    preset->add_flag("--emit-spec", emit_spec, "print only the loadable spec JSON");

    try {
        app.parse(argc, argv);
        if (sample->parsed()) return run_sample(spec_path, grid_str, out_path, format, svg_path);
        if (verify->parsed()) return run_verify(spec_path, points, h, seed);
        if (asym->parsed()) return run_asymptotics(spec_path);
        if (preset->parsed()) return run_preset(preset_name, emit_spec);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ngss::error& e) {
        std::cerr << nlohmann::json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 2;
    }
    return 2;
}
