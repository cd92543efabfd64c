#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ngss/presets.hpp"
#include "ngss/verification.hpp"

using namespace ngss;

namespace {

// Constant-modulus plane waves A e^{i(alpha x + omega t)} solve the equation
// exactly when omega = alpha^3 - 12 A^2 alpha (the nonlocal density is the
// constant 2A^2 and its derivative vanishes). Independent manufactured oracle.
FieldFn plane_wave(double amp, double alpha, double omega) {
    return [=](double x, double t) {
        FieldSample s;
        s.x = x;
        s.t = t;
        s.q = amp * std::exp(cx(0.0, alpha * x + omega * t));
        s.abs_det_M = 1.0;
        return s;
    };
}

}  // namespace

TEST_CASE("stencil weights differentiate polynomials exactly") {
    // x^3 through the 7-point third-derivative stencil
    double d3 = 0.0;
    for (int o = -3; o <= 3; ++o) d3 += stencil::kD3[o + 3] * std::pow(static_cast<double>(o), 3);
    CHECK(d3 == Catch::Approx(6.0).margin(1e-12));
    // x^5 is still exact for a 4th-order stencil's error term? no - but x^4 must vanish
    double d3x4 = 0.0;
    for (int o = -3; o <= 3; ++o) d3x4 += stencil::kD3[o + 3] * std::pow(static_cast<double>(o), 4);
    CHECK(d3x4 == Catch::Approx(0.0).margin(1e-12));
    double d1 = 0.0;
    for (int o = -2; o <= 2; ++o) d1 += stencil::kD1[o + 2] * o;
    CHECK(d1 == Catch::Approx(1.0).margin(1e-14));
    double d1x3 = 0.0;
    for (int o = -2; o <= 2; ++o) d1x3 += stencil::kD1[o + 2] * std::pow(static_cast<double>(o), 3);
    CHECK(d1x3 == Catch::Approx(0.0).margin(1e-14));
}

TEST_CASE("residual of the zero field vanishes") {
    const FieldFn zero = [](double x, double t) {
        FieldSample s;
        s.x = x;
        s.t = t;
        s.q = 0.0;
        return s;
    };
    const ResidualReport r = pde_residual(zero, 0.3, 0.7, 1e-3);
    CHECK(std::abs(r.residual) == 0.0);
}

TEST_CASE("residual vanishes on an exact plane-wave solution") {
    const double amp = 0.8, alpha = 1.3;
    const double omega = alpha * alpha * alpha - 12.0 * amp * amp * alpha;
    const FieldFn f = plane_wave(amp, alpha, omega);
    // the third-derivative stencil has a roundoff floor eps/h^3 ~ 1e-7 at h = 1e-3
    for (auto [x, t] : {std::pair{0.4, 0.2}, {-1.0, 0.9}}) {
        const ResidualReport r = pde_residual(f, x, t, 1e-3);
        CHECK(r.relative_residual < 2e-6);
    }
}

TEST_CASE("residual flags a manufactured non-solution at O(1)") {
    const double amp = 0.8, alpha = 1.3;
    const double omega = alpha * alpha * alpha;  // wrong dispersion: misses the nonlinear shift
    const FieldFn f = plane_wave(amp, alpha, omega);
    const ResidualReport r = pde_residual(f, 0.4, 0.2, 1e-3);
    CHECK(r.relative_residual > 1e-1);
}

TEST_CASE("convergence order is 4 on an exact manufactured solution") {
    const double amp = 0.6, alpha = 1.1;
    const double omega = alpha * alpha * alpha - 12.0 * amp * amp * alpha;
    // perturb with a second exact mode? sums of plane waves are not solutions;
    // instead check the operator error order against a slowly-varying envelope:
    // use the plane wave and verify |R_h| ~ h^4 before the roundoff floor.
    // With an exact solution R_h is pure truncation error of the stencils.
    // The truncation error of a plane wave is O(h^4) with known constant.
    const FieldFn f = plane_wave(amp, alpha, omega);
    const ConvergenceReport r =
        residual_convergence(f, {{0.4, 0.2}, {-0.7, 0.5}}, {4e-2, 2e-2, 1e-2});
    CHECK(std::abs(r.estimated_order - 4.0) < 0.5);
}

TEST_CASE("roundoff floor is flagged when refinement stops helping") {
    const double amp = 0.6, alpha = 1.1;
    const double omega = alpha * alpha * alpha - 12.0 * amp * amp * alpha;
    const FieldFn f = plane_wave(amp, alpha, omega);
    const ConvergenceReport r =
        residual_convergence(f, {{0.4, 0.2}}, {1e-3, 1e-4, 1e-5, 1e-6});
    CHECK(r.roundoff_floor);
}

TEST_CASE("singular stencil samples raise SingularOnStencil") {
    const FieldFn f = [](double x, double t) {
        FieldSample s;
        s.x = x;
        s.t = t;
        s.q = 1.0;
        s.singular_flag = (x > 0.5);
        return s;
    };
    CHECK_THROWS_MATCHES(pde_residual(f, 0.499, 0.0, 1e-3), error,
                         Catch::Matchers::Predicate<error>(
                             [](const error& e) { return e.code() == "SingularOnStencil"; }));
}

TEST_CASE("reconstruction relations: parity rows hold, conjugation rows are reported") {
    const auto cfg = validate_config(figure_preset("fig4").config);
    const ConsistencyReport r = check_reconstruction_consistency(cfg, 0.7, 0.4, 1e-9);
    // parity / anti-Hermitian pairs hold at machine precision
    CHECK(r.defects[0] < 1e-12);  // q itself
    CHECK(r.defects[2] < 1e-12);  // q(-x)
    CHECK(r.defects[4] < 1e-12);
    CHECK(r.defects[6] < 1e-12);
    // the conjugation rows of this construction genuinely violate the
    // relations (see ledger); the checker must report them, not mask them
    CHECK(r.defects[1] > 1e-3);
    CHECK(r.defects[3] > 1e-3);
    CHECK_FALSE(r.pass);
}

TEST_CASE("high-order reduction check passes on order-1 presets") {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) pts.emplace_back(-2.0 + i, -1.0 + 0.5 * j);
    for (const char* name : {"fig5", "fig9"}) {
        const auto cfg = validate_config(figure_preset(name).config);
        const ReductionReport r = check_reduction_highorder(cfg, pts, 1e-9);
        INFO(name);
        CHECK(r.pass);
    }
}

TEST_CASE("an order-2 configuration is a genuinely different solution") {
    const auto high = validate_config(figure_preset("fig11").config);
    SpectralConfiguration trunc_raw = figure_preset("fig11").config;
    trunc_raw.poles[0].order = 1;
    const auto trunc = validate_config(trunc_raw);
    double diff = 0.0;
    for (auto [x, t] : {std::pair{0.3, 0.2}, {1.0, 0.5}})
        diff = std::max(diff, std::abs(q_highorder(high, x, t).q - q_simple(trunc, x, t).q));
    CHECK(diff > 1e-3);
}

TEST_CASE("dressing suite passes on fig3") {
    const auto cfg = validate_config(figure_preset("fig3").config);
    const DressingReport r =
        check_dressing(cfg, 1.0, 0.5, {cx(0.8, 0.6), cx(1.4, 0.3), cx(0.5, 1.7)}, 1e-9);
    for (double n : r.kernel_norms) CHECK(n < 1e-9);
    for (double d : r.inverse_defects) CHECK(d < 1e-9);
    CHECK(r.parity_defect < 1e-9);
    CHECK(r.hermitian_defect < 1e-9);
    CHECK(r.decay_ratio == Catch::Approx(10.0).margin(1.0));
    CHECK(r.pass);
}

TEST_CASE("report JSON serialization carries the pass flags") {
    const auto cfg = validate_config(figure_preset("fig5").config);
    const ReductionReport r = check_reduction_highorder(cfg, {{0.3, 0.2}}, 1e-9);
    const nlohmann::json j = to_json(r);
    CHECK(j["pass"].get<bool>() == r.pass);
    CHECK(j.contains("max_relative"));
}
