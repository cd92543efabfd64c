#pragma once

// Soliton evaluation core: phases, eigenvector families, the kernel matrix M
// and its high-order block analogue, bordered-determinant field values, and
// the explicit dressing matrices of the reflectionless problem.
//
// Numerical range control: every exponential e^{±theta} is materialized only
// after subtracting a per-family power-of-two shift (row/column equilibration
// in log space). The field value is a ratio of consistently scaled quantities
// and is invariant under the shifts; the shifts themselves are recorded on the
// assembly for diagnostics and for tests that want unscaled entries.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "ngss/bivariate_series.hpp"
#include "ngss/linalg.hpp"
#include "ngss/spectral_config.hpp"

namespace ngss {

inline constexpr double kSingularDetThreshold = 1e-30;  // on the equilibrated |det M|
inline constexpr double kLn2 = 0.6931471805599453;

// theta(x,t,k) = i k x + 4 i k^3 t
inline cx phase(double x, double t, cx k) {
    return cx(0.0, 1.0) * (k * x + 4.0 * k * k * k * t);
}

// Expansion of theta(x,t,k+eps) in eps: {theta, ix+12ik^2 t, 12ikt, 4it}.
inline BivariateSeries phase_series(double x, double t, cx k, int max_eps) {
    BivariateSeries s(max_eps, 0);
    const cx i(0.0, 1.0);
    const cx co[4] = {phase(x, t, k), i * (x + 12.0 * k * k * t), i * (12.0 * k * t), i * (4.0 * t)};
    for (int m = 0; m <= std::min(max_eps, 3); ++m) s.at(m, 0) = co[m];
    return s;
}

namespace detail {

// One of the 2N eigenvector families. Mirrored families (index >= N) carry the
// negated pole, the reflected phase argument, the component swap a<->c, b<->d,
// and the sign flip on the fifth component.
struct Family {
    cx pole;       // full pole k_j (negated for mirrored families)
    cx base_k;     // underlying k_l
    double xsign;  // phase argument is xsign * x
    double sign5;
    int order;
    bool raw;
    std::array<const std::vector<cx>*, 4> seq;  // coefficient sequences, component order
};

inline std::vector<Family> families(const ValidatedConfiguration& cfg) {
    const int n = cfg.pole_count();
    std::vector<Family> out(2 * n);
    for (int l = 0; l < n; ++l) {
        const PoleDatum& p = cfg.poles()[l];
        out[l] = Family{p.k, p.k, +1.0, +1.0, p.order, cfg.raw_amplitudes(), {&p.a, &p.b, &p.c, &p.d}};
        out[n + l] =
            Family{-p.k, p.k, -1.0, -1.0, p.order, cfg.raw_amplitudes(), {&p.c, &p.d, &p.a, &p.b}};
    }
    return out;
}

inline cx amp0(const Family& f, int comp) {
    const cx lead = (*f.seq[comp])[0];
    return f.raw ? lead : std::exp(lead);
}

// Power-of-two shift (natural-log units) matched to |Re theta| of the family.
inline double pow2_shift(double re_theta) { return std::round(std::abs(re_theta) / kLn2) * kLn2; }

}  // namespace detail

struct EigenvectorPair {
    std::vector<Eigen::Matrix<cx, 5, 1>> U;     // 2N column 5-vectors
    std::vector<Eigen::Matrix<cx, 1, 5>> Uhat;  // 2N row 5-vectors
};

// Unscaled eigenvectors of the simple (order-1) problem. Overflows for extreme
// phases; evaluation paths use the equilibrated assembly instead.
inline EigenvectorPair eigenvectors_simple(const ValidatedConfiguration& cfg, double x, double t) {
    if (!cfg.all_orders_one()) throw error("OrderUnsupported", "eigenvectors_simple needs order-1 data");
    EigenvectorPair out;
    for (const auto& f : detail::families(cfg)) {
        const cx th = phase(f.xsign * x, t, f.base_k);
        Eigen::Matrix<cx, 5, 1> u;
        for (int c = 0; c < 4; ++c) u(c) = detail::amp0(f, c) * std::exp(th);
        u(4) = f.sign5 * std::exp(-th);
        out.U.push_back(u);
        out.Uhat.push_back(u.adjoint());
    }
    return out;
}

struct SolitonAssembly {
    Mat M;            // equilibrated kernel matrix
    Vec border_row;   // first components of the U-family (column-scaled)
    Vec border_col;   // fifth components of the hat family (row-scaled)
    Eigen::VectorXd row_shift, col_shift;  // natural-log equilibration shifts
    cx det_M = 0.0;   // determinant of the equilibrated matrix
    double log_det_scale = 0.0;  // ln|det unscaled| = ln|det_M| + log_det_scale
    double cond_estimate = 0.0;
    bool singular = false;
};

struct FieldSample {
    double x = 0.0, t = 0.0;
    cx q{};
    double abs_det_M = 0.0;  // |det| of the equilibrated matrix (threshold quantity)
    bool singular_flag = false;
};

// Kernel matrix of the order-1 problem, m_il = Uhat_i U_l / (k_l - khat_i),
// assembled in the equilibrated two-exponential form.
inline SolitonAssembly assemble_M_simple(const ValidatedConfiguration& cfg, double x, double t) {
    if (!cfg.all_orders_one()) throw error("OrderUnsupported", "assemble_M_simple needs order-1 data");
    const auto fam = detail::families(cfg);
    const int n = static_cast<int>(fam.size());

    std::vector<cx> p(n);
    std::vector<double> shift(n);
    std::vector<std::array<cx, 4>> amp(n);
    for (int j = 0; j < n; ++j) {
        p[j] = phase(fam[j].xsign * x, t, fam[j].base_k);
        shift[j] = detail::pow2_shift(p[j].real());
        for (int c = 0; c < 4; ++c) amp[j][c] = detail::amp0(fam[j], c);
    }

    SolitonAssembly a;
    a.M.resize(n, n);
    a.border_row.resize(n);
    a.border_col.resize(n);
    a.row_shift.resize(n);
    a.col_shift.resize(n);
    for (int i = 0; i < n; ++i) {
        a.row_shift(i) = shift[i];
        a.col_shift(i) = shift[i];
    }
    for (int i = 0; i < n; ++i) {
        const cx ph = std::conj(p[i]);
        for (int l = 0; l < n; ++l) {
            cx dot = 0.0;
            for (int c = 0; c < 4; ++c) dot += std::conj(amp[i][c]) * amp[l][c];
            const double s = shift[i] + shift[l];
            const cx grow = dot * std::exp(ph + p[l] - s);
            const cx decay = fam[i].sign5 * fam[l].sign5 * std::exp(-(ph + p[l]) - s);
            a.M(i, l) = (grow + decay) / (fam[l].pole - std::conj(fam[i].pole));
        }
        a.border_row(i) = amp[i][0] * std::exp(p[i] - shift[i]);
        a.border_col(i) = fam[i].sign5 * std::exp(-ph - shift[i]);
    }

    const LuResult lu = lu_factor(a.M);
    a.det_M = lu.det;
    a.cond_estimate = lu.cond_estimate;
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale += a.row_shift(i) + a.col_shift(i);
    a.log_det_scale = scale;
    a.singular = std::abs(a.det_M) < kSingularDetThreshold;
    return a;
}

namespace detail {

inline FieldSample sample_from(const Mat& m, const Vec& row, const Vec& col, double x, double t) {
    FieldSample s;
    s.x = x;
    s.t = t;
    const LuResult lu = lu_factor(m);
    s.abs_det_M = std::abs(lu.det);
    s.singular_flag = s.abs_det_M < kSingularDetThreshold;
    if (s.singular_flag) {
        s.q = cx(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
        return s;
    }
    s.q = cx(0.0, 2.0) * (row.transpose() * lu.lu.solve(col)).value();
    return s;
}

}  // namespace detail

// q(x,t) of the general order-1 N-soliton, inner-product form 2i chi^T M^{-1} omega
// (equal to the bordered-determinant expression, see q_simple_det).
inline FieldSample q_simple(const ValidatedConfiguration& cfg, double x, double t) {
    const SolitonAssembly a = assemble_M_simple(cfg, x, t);
    FieldSample s;
    s.x = x;
    s.t = t;
    s.abs_det_M = std::abs(a.det_M);
    s.singular_flag = a.singular;
    if (a.singular) {
        s.q = cx(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN());
        return s;
    }
    Eigen::PartialPivLU<Mat> lu(a.M);
    s.q = cx(0.0, 2.0) * (a.border_row.transpose() * lu.solve(a.border_col)).value();
    return s;
}

// Bordered-determinant route: q = -2i det[[0, chi^T],[omega, M]] / det M.
// Cross-check path for the inner-product form.
inline cx q_simple_det(const ValidatedConfiguration& cfg, double x, double t) {
    const SolitonAssembly a = assemble_M_simple(cfg, x, t);
    const int n = static_cast<int>(a.M.rows());
    Mat h = Mat::Zero(n + 1, n + 1);
    h(0, 0) = 0.0;
    h.block(0, 1, 1, n) = a.border_row.transpose();
    h.block(1, 0, n, 1) = a.border_col;
    h.block(1, 1, n, n) = a.M;
    const cx det_h = Eigen::PartialPivLU<Mat>(h).determinant();
    return cx(0.0, -2.0) * det_h / a.det_M;
}

// Closed-form 1-soliton (2x2 determinant evaluated directly, no linear algebra),
// valid under the convention b1 = conj(a1), d1 = conj(c1).
inline cx q_one_soliton_closed(const ValidatedConfiguration& cfg, double x, double t) {
    if (cfg.pole_count() != 1 || !cfg.all_orders_one())
        throw error("ConventionViolation", "closed form needs N=1, order 1");
    const PoleDatum& p = cfg.poles()[0];
    const cx a1 = cfg.raw_amplitudes() ? p.a[0] : std::exp(p.a[0]);
    const cx b1 = cfg.raw_amplitudes() ? p.b[0] : std::exp(p.b[0]);
    const cx c1 = cfg.raw_amplitudes() ? p.c[0] : std::exp(p.c[0]);
    const cx d1 = cfg.raw_amplitudes() ? p.d[0] : std::exp(p.d[0]);
    const double tol = 1e-12;
    if (std::abs(b1 - std::conj(a1)) > tol * (1.0 + std::abs(a1)) ||
        std::abs(d1 - std::conj(c1)) > tol * (1.0 + std::abs(c1)))
        throw error("ConventionViolation", "closed form needs b1 = conj(a1), d1 = conj(c1)");

    const cx k = p.k;
    const cx th = phase(x, t, k), thm = phase(-x, t, k);
    const double d1_ = std::norm(a1) + std::norm(c1);            // |a|^2 + |c|^2
    const cx d2_ = std::conj(a1) * c1 + std::conj(c1) * a1;      // real-valued

    const double s1 = detail::pow2_shift(th.real());
    const double s2 = detail::pow2_shift(thm.real());

    // scaled entries: m~_il = m_il e^{-(s_i + s_l)}
    const cx m11 = (2.0 * d1_ * std::exp(std::conj(th) + th - 2.0 * s1) +
                    std::exp(-(std::conj(th) + th) - 2.0 * s1)) /
                   (k - std::conj(k));
    const cx m12 = (2.0 * d2_ * std::exp(std::conj(th) + thm - s1 - s2) -
                    std::exp(-(std::conj(th) + thm) - s1 - s2)) /
                   (-k - std::conj(k));
    const cx m21 = (2.0 * d2_ * std::exp(std::conj(thm) + th - s1 - s2) -
                    std::exp(-(std::conj(thm) + th) - s1 - s2)) /
                   (k + std::conj(k));
    const cx m22 = (2.0 * d1_ * std::exp(std::conj(thm) + thm - 2.0 * s2) +
                    std::exp(-(std::conj(thm) + thm) - 2.0 * s2)) /
                   (-k + std::conj(k));
    const cx det = m11 * m22 - m12 * m21;

    // scaled borders: chi~ = (a e^{th - s1}, c e^{thm - s2}), omega~ = (e^{-th* - s1}, -e^{-thm* - s2})
    const cx chi1 = a1 * std::exp(th - s1), chi2 = c1 * std::exp(thm - s2);
    const cx om1 = std::exp(-std::conj(th) - s1), om2 = -std::exp(-std::conj(thm) - s2);
    // 2i chi^T adj(m) omega / det
    const cx num = chi1 * (m22 * om1 - m12 * om2) + chi2 * (-m21 * om1 + m11 * om2);
    return cx(0.0, 2.0) * num / det;
}

// ---------------------------------------------------------------------------
// High-order path
// ---------------------------------------------------------------------------

namespace detail {

// Series in eps of one component of U_j(eps); `shift` is subtracted from the
// exponent (equilibration). Component 4 carries e^{-theta} and the family sign.
inline BivariateSeries u_component_series(const Family& f, int comp, double x, double t, int max_eps,
                                          double shift) {
    const BivariateSeries th = phase_series(f.xsign * x, t, f.base_k, max_eps);
    if (comp == 4) return series_scale(f.sign5, series_exp_shifted(series_scale(-1.0, th), shift));
    if (f.raw) return series_scale((*f.seq[comp])[0], series_exp_shifted(th, shift));
    BivariateSeries expo = th;
    const auto& seq = *f.seq[comp];
    for (int m = 0; m <= std::min<int>(max_eps, static_cast<int>(seq.size()) - 1); ++m)
        expo.at(m, 0) += seq[m];
    return series_exp_shifted(expo, shift);
}

// Hat-side component series in ehat: coefficientwise conjugate structure.
inline BivariateSeries uhat_component_series(const Family& f, int comp, double x, double t,
                                             int max_hat, double shift) {
    const BivariateSeries th = series_conj_coeffs(phase_series(f.xsign * x, t, f.base_k, max_hat));
    if (comp == 4) return series_scale(f.sign5, series_exp_shifted(series_scale(-1.0, th), shift));
    if (f.raw) return series_scale(std::conj((*f.seq[comp])[0]), series_exp_shifted(th, shift));
    BivariateSeries expo = th;
    const auto& seq = *f.seq[comp];
    for (int m = 0; m <= std::min<int>(max_hat, static_cast<int>(seq.size()) - 1); ++m)
        expo.at(m, 0) += std::conj(seq[m]);
    return series_exp_shifted(expo, shift);
}

// Outer product of an eps-only series and an ehat-only series.
inline BivariateSeries bivariate_outer(const BivariateSeries& ue, const BivariateSeries& uh) {
    BivariateSeries out(ue.max_eps(), uh.max_eps());
    for (int i = 0; i <= ue.max_eps(); ++i)
        for (int j = 0; j <= uh.max_eps(); ++j) out.at(i, j) = ue.at(i, 0) * uh.at(j, 0);
    return out;
}

inline BivariateSeries kernel_series_impl(const std::vector<Family>& fam, int i, int j, double x,
                                          double t, int max_eps, int max_hat, double row_shift,
                                          double col_shift) {
    BivariateSeries dot(max_eps, max_hat);
    for (int comp = 0; comp < 5; ++comp) {
        const BivariateSeries ue = u_component_series(fam[j], comp, x, t, max_eps, col_shift);
        const BivariateSeries uh = uhat_component_series(fam[i], comp, x, t, max_hat, row_shift);
        dot = series_add(dot, bivariate_outer(ue, uh));
    }
    // perturbed pole difference: (k_j + s_j eps) - (khat_i + shat_i ehat),
    // s = +1 primary / -1 mirrored (the mirrored perturbed pole is -(k_l + eps))
    const cx den0 = fam[j].pole - std::conj(fam[i].pole);
    const double sj = fam[j].xsign, si = fam[i].xsign;
    return series_mul(dot, series_recip_affine_general(den0, sj, -si, max_eps, max_hat));
}

}  // namespace detail

// Bivariate expansion of Uhat_i(ehat) . U_j(eps) / (pole_j(eps) - hatpole_i(ehat)).
// Indices are 0-based over the 2N families; truncation defaults to the pole orders.
inline BivariateSeries kernel_series(const ValidatedConfiguration& cfg, int i, int j, double x,
                                     double t, int max_eps, int max_hat) {
    const auto fam = detail::families(cfg);
    if (i < 0 || j < 0 || i >= static_cast<int>(fam.size()) || j >= static_cast<int>(fam.size()))
        throw error("OrderOutOfRange", "family index out of range");
    return detail::kernel_series_impl(fam, i, j, x, t, max_eps, max_hat, 0.0, 0.0);
}

inline BivariateSeries kernel_series(const ValidatedConfiguration& cfg, int i, int j, double x,
                                     double t) {
    const auto fam = detail::families(cfg);
    if (i < 0 || j < 0 || i >= static_cast<int>(fam.size()) || j >= static_cast<int>(fam.size()))
        throw error("OrderOutOfRange", "family index out of range");
    return detail::kernel_series_impl(fam, i, j, x, t, fam[j].order, fam[i].order, 0.0, 0.0);
}

// Block kernel matrix of Theorem-4.1 type: rows indexed by (hat family i, ehat
// derivative l1), columns by (family j, eps derivative l2), entry = coefficient
// of eps^{l2} ehat^{l1} in the kernel expansion. Orders 1 reduce it to M.
inline SolitonAssembly assemble_M_highorder(const ValidatedConfiguration& cfg, double x, double t) {
    const auto fam = detail::families(cfg);
    const int nf = static_cast<int>(fam.size());

    std::vector<double> shift(nf);
    for (int j = 0; j < nf; ++j)
        shift[j] = detail::pow2_shift(phase(fam[j].xsign * x, t, fam[j].base_k).real());

    std::vector<std::pair<int, int>> idx;  // (family, derivative order)
    for (int j = 0; j < nf; ++j)
        for (int m = 0; m < fam[j].order; ++m) idx.emplace_back(j, m);
    const int n0 = static_cast<int>(idx.size());

    SolitonAssembly a;
    a.M.resize(n0, n0);
    a.border_row.resize(n0);
    a.border_col.resize(n0);
    a.row_shift.resize(n0);
    a.col_shift.resize(n0);

    for (int bi = 0; bi < nf; ++bi) {
        for (int bj = 0; bj < nf; ++bj) {
            const BivariateSeries k = detail::kernel_series_impl(
                fam, bi, bj, x, t, fam[bj].order - 1, fam[bi].order - 1, shift[bi], shift[bj]);
            int r0 = 0;
            for (int m = 0; m < bi; ++m) r0 += fam[m].order;
            int c0 = 0;
            for (int m = 0; m < bj; ++m) c0 += fam[m].order;
            for (int l1 = 0; l1 < fam[bi].order; ++l1)
                for (int l2 = 0; l2 < fam[bj].order; ++l2) a.M(r0 + l1, c0 + l2) = k.at(l2, l1);
        }
    }
    for (int p = 0; p < n0; ++p) {
        const auto [j, m] = idx[p];
        a.col_shift(p) = shift[j];
        a.row_shift(p) = shift[j];
        a.border_row(p) = detail::u_component_series(fam[j], 0, x, t, fam[j].order - 1, shift[j]).at(m, 0);
        a.border_col(p) =
            detail::uhat_component_series(fam[j], 4, x, t, fam[j].order - 1, shift[j]).at(m, 0);
    }

    const LuResult lu = lu_factor(a.M);
    a.det_M = lu.det;
    a.cond_estimate = lu.cond_estimate;
    double scale = 0.0;
    for (int p = 0; p < n0; ++p) scale += a.row_shift(p) + a.col_shift(p);
    a.log_det_scale = scale;
    a.singular = std::abs(a.det_M) < kSingularDetThreshold;
    return a;
}

// High-order field value, q = 2i chi1 . Mblock^{-1} . chihat5. With all orders 1
// this is exactly q_simple.
inline FieldSample q_highorder(const ValidatedConfiguration& cfg, double x, double t) {
    const SolitonAssembly a = assemble_M_highorder(cfg, x, t);
    return detail::sample_from(a.M, a.border_row, a.border_col, x, t);
}

// Bordered-determinant route for the block system:
// q = -2i det[[Mblock, chihat5],[chi1, 0]] / det Mblock.
inline cx q_highorder_det(const ValidatedConfiguration& cfg, double x, double t) {
    const SolitonAssembly a = assemble_M_highorder(cfg, x, t);
    const int n = static_cast<int>(a.M.rows());
    Mat h = Mat::Zero(n + 1, n + 1);
    h.block(0, 0, n, n) = a.M;
    h.block(0, n, n, 1) = a.border_col;
    h.block(n, 0, 1, n) = a.border_row.transpose();
    const cx det_h = Eigen::PartialPivLU<Mat>(h).determinant();
    return cx(0.0, -2.0) * det_h / a.det_M;
}

// Dispatch by pole orders.
inline FieldSample evaluate_field(const ValidatedConfiguration& cfg, double x, double t) {
    return cfg.all_orders_one() ? q_simple(cfg, x, t) : q_highorder(cfg, x, t);
}

// ---------------------------------------------------------------------------
// Dressing matrices (order-1 only)
// ---------------------------------------------------------------------------

using Mat5 = Eigen::Matrix<cx, 5, 5>;

namespace detail {

struct DressingParts {
    Eigen::Matrix<cx, 5, Eigen::Dynamic> Us;   // scaled U_i columns
    Eigen::Matrix<cx, Eigen::Dynamic, 5> Vh;   // scaled Uhat_l rows
    Mat Minv;                                  // inverse of the equilibrated M
    std::vector<cx> poles, hat_poles;
};

inline DressingParts dressing_parts(const ValidatedConfiguration& cfg, double x, double t) {
    if (!cfg.all_orders_one()) throw error("OrderUnsupported", "dressing needs order-1 data");
    const auto fam = families(cfg);
    const int n = static_cast<int>(fam.size());
    DressingParts d;
    d.Us.resize(5, n);
    d.Vh.resize(n, 5);
    d.poles.resize(n);
    d.hat_poles.resize(n);
    for (int j = 0; j < n; ++j) {
        const cx th = phase(fam[j].xsign * x, t, fam[j].base_k);
        const double s = pow2_shift(th.real());
        Eigen::Matrix<cx, 5, 1> u;
        for (int c = 0; c < 4; ++c) u(c) = amp0(fam[j], c) * std::exp(th - s);
        u(4) = fam[j].sign5 * std::exp(-th - s);
        d.Us.col(j) = u;
        d.Vh.row(j) = u.adjoint();
        d.poles[j] = fam[j].pole;
        d.hat_poles[j] = std::conj(fam[j].pole);
    }
    const SolitonAssembly a = assemble_M_simple(cfg, x, t);
    d.Minv = Eigen::PartialPivLU<Mat>(a.M).inverse();
    return d;
}

}  // namespace detail

// P1(k) = I - sum_{i,l} U_i Uhat_l (M^{-1})_{il} / (k - khat_l), analytic in D+.
inline Mat5 dressing_P1(const ValidatedConfiguration& cfg, double x, double t, cx k) {
    const auto d = detail::dressing_parts(cfg, x, t);
    const int n = static_cast<int>(d.poles.size());
    for (cx kh : d.hat_poles)
        if (std::abs(k - kh) < 1e-12)
            throw error("PoleEvaluation", "P1 evaluated at one of its poles");
    Mat dk = Mat::Zero(n, n);
    for (int l = 0; l < n; ++l) dk(l, l) = 1.0 / (k - d.hat_poles[l]);
    Mat5 out = Mat5::Identity();
    out -= d.Us * (d.Minv * dk) * d.Vh;
    return out;
}

// P2(k) = I + sum_{i,l} U_i Uhat_l (M^{-1})_{il} / (k - k_i), analytic in D-.
inline Mat5 dressing_P2(const ValidatedConfiguration& cfg, double x, double t, cx k) {
    const auto d = detail::dressing_parts(cfg, x, t);
    const int n = static_cast<int>(d.poles.size());
    for (cx kp : d.poles)
        if (std::abs(k - kp) < 1e-12)
            throw error("PoleEvaluation", "P2 evaluated at one of its poles");
    Mat dk = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) dk(i, i) = 1.0 / (k - d.poles[i]);
    Mat5 out = Mat5::Identity();
    out += d.Us * (dk * d.Minv) * d.Vh;
    return out;
}

// The 1/k coefficient of P1 as the pole-free residue sum - sum U_i Uhat_l (M^{-1})_{il}.
inline Mat5 dressing_P1_first(const ValidatedConfiguration& cfg, double x, double t) {
    const auto d = detail::dressing_parts(cfg, x, t);
    return -(d.Us * d.Minv * d.Vh);
}

// sigma_3 and the parity involution of the 5x5 problem.
inline Mat5 sigma3_matrix() {
    Mat5 s = Mat5::Zero();
    for (int i = 0; i < 4; ++i) s(i, i) = 1.0;
    s(4, 4) = -1.0;
    return s;
}

inline Mat5 lambda_matrix() {
    Mat5 l = Mat5::Zero();
    l(0, 2) = l(1, 3) = l(2, 0) = l(3, 1) = 1.0;
    l(4, 4) = -1.0;
    return l;
}

}  // namespace ngss
