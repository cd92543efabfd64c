#pragma once

// Independent oracles: the finite-difference residual of the nonlocal equation
//   q_t + q_xxx + 6 sigma (|q(x,t)|^2 + |q(-x,t)|^2) q_x
//             + 3 sigma q (|q(x,t)|^2 + |q(-x,t)|^2)_x = 0,   sigma = 1,
// convergence-order estimation, and the structural cross-checks (dressing
// identities, reconstruction relations, high-order reduction).
//
// Stencils are 4th-order centered differences: 5 points for d/dx and d/dt,
// 7 points for d^3/dx^3. The nonlocal density is always sampled at the
// reflected stencil, never assumed even.

#include <json.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "ngss/asymptotics.hpp"
#include "ngss/soliton_engine.hpp"

namespace ngss {

using FieldFn = std::function<FieldSample(double, double)>;

inline FieldFn make_field_fn(const ValidatedConfiguration& cfg) {
    return [&cfg](double x, double t) { return evaluate_field(cfg, x, t); };
}

namespace stencil {

// 4th-order first derivative, offsets -2..2
inline constexpr double kD1[5] = {1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0};
// 4th-order third derivative, offsets -3..3
inline constexpr double kD3[7] = {1.0 / 8.0, -1.0, 13.0 / 8.0, 0.0, -13.0 / 8.0, 1.0, -1.0 / 8.0};

}  // namespace stencil

struct ResidualReport {
    double x = 0.0, t = 0.0, h = 0.0;
    cx residual{};
    double relative_residual = 0.0;
};

inline ResidualReport pde_residual(const FieldFn& field, double x, double t, double h) {
    auto q = [&](double xx, double tt) {
        const FieldSample s = field(xx, tt);
        if (s.singular_flag) throw error("SingularOnStencil", "singular sample on residual stencil");
        return s.q;
    };

    cx qx_st[7];
    for (int o = -3; o <= 3; ++o) qx_st[o + 3] = q(x + o * h, t);

    cx qx = 0.0, qxxx = 0.0, qt = 0.0;
    for (int o = -2; o <= 2; ++o) qx += stencil::kD1[o + 2] * qx_st[o + 3];
    qx /= h;
    for (int o = -3; o <= 3; ++o) qxxx += stencil::kD3[o + 3] * qx_st[o + 3];
    qxxx /= h * h * h;
    for (int o = -2; o <= 2; ++o) qt += stencil::kD1[o + 2] * (o == 0 ? qx_st[3] : q(x, t + o * h));
    qt /= h;

    auto density = [&](double xx) { return std::norm(q(xx, t)) + std::norm(q(-xx, t)); };
    double dens_x = 0.0;
    for (int o = -2; o <= 2; ++o) dens_x += stencil::kD1[o + 2] * density(x + o * h);
    dens_x /= h;
    const double dens0 = std::norm(qx_st[3]) + std::norm(q(-x, t));

    ResidualReport r;
    r.x = x;
    r.t = t;
    r.h = h;
    r.residual = qt + qxxx + 6.0 * dens0 * qx + 3.0 * qx_st[3] * dens_x;
    double scale = 0.0;
    for (const cx& v : qx_st) scale = std::max(scale, std::abs(v));
    scale += std::abs(qx) + std::abs(qxxx);
    r.relative_residual = std::abs(r.residual) / std::max(scale, 1e-300);
    return r;
}

struct ConvergenceReport {
    std::vector<double> steps;
    std::vector<double> residual_norms;  // rms of |residual| over the points
    double estimated_order = 0.0;        // least-squares slope in log-log
    bool roundoff_floor = false;
};

inline ConvergenceReport residual_convergence(const FieldFn& field,
                                              const std::vector<std::pair<double, double>>& points,
                                              const std::vector<double>& h_list) {
    if (h_list.size() < 3) throw error("SchemaViolation", "convergence study needs >= 3 steps");
    ConvergenceReport r;
    r.steps = h_list;
    for (double h : h_list) {
        double acc = 0.0;
        for (auto [x, t] : points) {
            const cx res = pde_residual(field, x, t, h).residual;
            acc += std::norm(res);
        }
        r.residual_norms.push_back(std::sqrt(acc / points.size()));
    }
    // least-squares slope of log(res) vs log(h)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(h_list.size());
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(h_list[i]), ly = std::log(std::max(r.residual_norms[i], 1e-300));
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    r.estimated_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    // flag when refinement stopped helping (roundoff floor)
    for (std::size_t i = 1; i < r.residual_norms.size(); ++i)
        if (r.residual_norms[i] > 0.9 * r.residual_norms[i - 1]) r.roundoff_floor = true;
    return r;
}

// ---------------------------------------------------------------------------
// Reconstruction consistency (the eight P1-coefficient relations)
// ---------------------------------------------------------------------------

struct ConsistencyReport {
    std::array<double, 8> defects{};  // relative defect per relation
    std::array<const char*, 8> names{};
    double tolerance = 0.0;
    bool pass = false;
};

inline ConsistencyReport check_reconstruction_consistency(const ValidatedConfiguration& cfg, double x,
                                                          double t, double tol) {
    const Mat5 p1 = dressing_P1_first(cfg, x, t);
    const cx q = q_simple(cfg, x, t).q;
    const cx qm = q_simple(cfg, -x, t).q;
    const cx m2i(0.0, -2.0), p2i(0.0, 2.0);

    const cx lhs[8] = {m2i * p1(0, 4), m2i * p1(1, 4), m2i * p1(2, 4), m2i * p1(3, 4),
                       p2i * p1(4, 0), p2i * p1(4, 1), p2i * p1(4, 2), p2i * p1(4, 3)};
    const cx rhs[8] = {q, std::conj(q), qm, std::conj(qm),
                       -std::conj(q), -q, -std::conj(qm), -qm};
    ConsistencyReport r;
    r.names = {"-2i P15 = q",        "-2i P25 = conj q",        "-2i P35 = q(-x)",
               "-2i P45 = conj q(-x)", "2i P51 = -conj q",      "2i P52 = -q",
               "2i P53 = -conj q(-x)", "2i P54 = -q(-x)"};
    r.tolerance = tol;
    r.pass = true;
    for (int i = 0; i < 8; ++i) {
        r.defects[i] = std::abs(lhs[i] - rhs[i]) / std::max(1.0, std::abs(rhs[i]));
        if (r.defects[i] > tol) r.pass = false;
    }
    return r;
}

// ---------------------------------------------------------------------------
// High-order reduction (orders-1 configuration through both paths)
// ---------------------------------------------------------------------------

struct ReductionReport {
    double max_relative = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline ReductionReport check_reduction_highorder(const ValidatedConfiguration& cfg,
                                                 const std::vector<std::pair<double, double>>& points,
                                                 double tol) {
    if (!cfg.all_orders_one())
        throw error("OrderUnsupported", "reduction check compares order-1 data through both paths");
    ReductionReport r;
    r.tolerance = tol;
    for (auto [x, t] : points) {
        const FieldSample a = q_simple(cfg, x, t);
        const FieldSample b = q_highorder(cfg, x, t);
        if (a.singular_flag || b.singular_flag) continue;
        r.max_relative =
            std::max(r.max_relative, std::abs(b.q - a.q) / std::max(1.0, std::abs(a.q)));
    }
    r.pass = r.max_relative <= tol;
    return r;
}

// ---------------------------------------------------------------------------
// Dressing identities
// ---------------------------------------------------------------------------

struct DressingReport {
    std::vector<double> kernel_norms;   // |P1(k_l) u_l| / |u_l| per pole
    std::vector<double> inverse_defects;  // |P1 P2 - I| at the sample points
    double parity_defect = 0.0;         // P1(x,t,k) vs Lambda P1(-x,t,-k) Lambda
    double hermitian_defect = 0.0;      // P2(x,t,k) vs P1(x,t,k*)^dagger
    double decay_ratio = 0.0;           // |P1-I| at |k| = 1e3 over |k| = 1e4
    double tolerance = 0.0;
    bool pass = false;
};

inline DressingReport check_dressing(const ValidatedConfiguration& cfg, double x, double t,
                                     const std::vector<cx>& k_samples, double tol) {
    DressingReport r;
    r.tolerance = tol;
    r.pass = true;

    const auto fam = detail::families(cfg);
    const FullPoleSet ps = derive_full_pole_set(cfg);
    for (std::size_t l = 0; l < fam.size(); ++l) {
        const cx th = phase(fam[l].xsign * x, t, fam[l].base_k);
        const double s = detail::pow2_shift(th.real());
        Eigen::Matrix<cx, 5, 1> u;
        for (int c = 0; c < 4; ++c) u(c) = detail::amp0(fam[l], c) * std::exp(th - s);
        u(4) = fam[l].sign5 * std::exp(-th - s);
        const double norm = (dressing_P1(cfg, x, t, ps.upper[l]) * u).norm() / u.norm();
        r.kernel_norms.push_back(norm);
        if (norm > tol) r.pass = false;
    }

    for (cx k : k_samples) {
        const double defect =
            (dressing_P1(cfg, x, t, k) * dressing_P2(cfg, x, t, k) - Mat5::Identity()).norm();
        r.inverse_defects.push_back(defect);
        if (defect > tol) r.pass = false;
    }

    const Mat5 lam = lambda_matrix();
    const cx ksym = k_samples.empty() ? cx(0.8, 0.6) : k_samples.front();
    const Mat5 p1 = dressing_P1(cfg, x, t, ksym);
    r.parity_defect = (p1 - lam * dressing_P1(cfg, -x, t, -ksym) * lam).norm() / p1.norm();
    const cx kneg = std::conj(ksym);  // in D-
    r.hermitian_defect =
        (dressing_P2(cfg, x, t, kneg) - dressing_P1(cfg, x, t, std::conj(kneg)).adjoint().eval())
            .norm();
    if (r.parity_defect > tol || r.hermitian_defect > tol) r.pass = false;

    const cx dir = std::polar(1.0, 0.25 * M_PI);  // ray inside D+
    const double n3 = (dressing_P1(cfg, x, t, 1e3 * dir) - Mat5::Identity()).norm();
    const double n4 = (dressing_P1(cfg, x, t, 1e4 * dir) - Mat5::Identity()).norm();
    r.decay_ratio = n3 / n4;
    if (std::abs(r.decay_ratio - 10.0) > 1.0) r.pass = false;
    return r;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const ResidualReport& r) {
    return {{"x", r.x},
            {"t", r.t},
            {"h", r.h},
            {"residual", {r.residual.real(), r.residual.imag()}},
            {"relative_residual", r.relative_residual}};
}

inline nlohmann::json to_json(const ConvergenceReport& r) {
    return {{"steps", r.steps},
            {"residual_norms", r.residual_norms},
            {"estimated_order", r.estimated_order},
            {"roundoff_floor", r.roundoff_floor}};
}

inline nlohmann::json to_json(const ConsistencyReport& r) {
    nlohmann::json d = nlohmann::json::array();
    for (int i = 0; i < 8; ++i) d.push_back({{"relation", r.names[i]}, {"defect", r.defects[i]}});
    return {{"relations", d}, {"tolerance", r.tolerance}, {"pass", r.pass}};
}

inline nlohmann::json to_json(const ReductionReport& r) {
    return {{"max_relative", r.max_relative}, {"tolerance", r.tolerance}, {"pass", r.pass}};
}

inline nlohmann::json to_json(const DressingReport& r) {
    return {{"kernel_norms", r.kernel_norms},
            {"inverse_defects", r.inverse_defects},
            {"parity_defect", r.parity_defect},
            {"hermitian_defect", r.hermitian_defect},
            {"decay_ratio", r.decay_ratio},
            {"tolerance", r.tolerance},
            {"pass", r.pass}};
}

}  // namespace ngss
