#pragma once

// Truncated complex Taylor series in two independent perturbation parameters
// (eps, ehat). Coefficients are stored densely; truncation orders propagate as
// the componentwise minimum of the operands.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "ngss/spectral_config.hpp"

namespace ngss {

class BivariateSeries {
public:
    BivariateSeries(int max_eps, int max_hat)
        : me_(max_eps), mh_(max_hat), c_((max_eps + 1) * (max_hat + 1), cx(0.0)) {}

    static BivariateSeries constant(cx value, int max_eps, int max_hat) {
        BivariateSeries s(max_eps, max_hat);
        s.at(0, 0) = value;
        return s;
    }

    int max_eps() const noexcept { return me_; }
    int max_hat() const noexcept { return mh_; }

    cx& at(int i, int j) { return c_[static_cast<std::size_t>(i) * (mh_ + 1) + j]; }
    const cx& at(int i, int j) const { return c_[static_cast<std::size_t>(i) * (mh_ + 1) + j]; }

    // Checked coefficient extraction (the M_{j,i}^{[l2,l1]} accessor).
    cx coeff(int i, int j) const {
        if (i < 0 || j < 0 || i > me_ || j > mh_)
            throw error("OrderOutOfRange",
                        "coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside truncation orders (" + std::to_string(me_) + "," +
                            std::to_string(mh_) + ")");
        return at(i, j);
    }

private:
    int me_, mh_;
    std::vector<cx> c_;
};

inline BivariateSeries series_add(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out(std::min(a.max_eps(), b.max_eps()), std::min(a.max_hat(), b.max_hat()));
    for (int i = 0; i <= out.max_eps(); ++i)
        for (int j = 0; j <= out.max_hat(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

inline BivariateSeries series_sub(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out(std::min(a.max_eps(), b.max_eps()), std::min(a.max_hat(), b.max_hat()));
    for (int i = 0; i <= out.max_eps(); ++i)
        for (int j = 0; j <= out.max_hat(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

inline BivariateSeries series_scale(cx s, const BivariateSeries& a) {
    BivariateSeries out(a.max_eps(), a.max_hat());
    for (int i = 0; i <= out.max_eps(); ++i)
        for (int j = 0; j <= out.max_hat(); ++j) out.at(i, j) = s * a.at(i, j);
    return out;
}

// Cauchy product truncated to the minimum orders.
inline BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out(std::min(a.max_eps(), b.max_eps()), std::min(a.max_hat(), b.max_hat()));
    for (int i = 0; i <= out.max_eps(); ++i)
        for (int j = 0; j <= out.max_hat(); ++j) {
            cx s = 0.0;
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q) s += a.at(p, q) * b.at(i - p, j - q);
            out.at(i, j) = s;
        }
    return out;
}

// exp(a - shift). The constant term is split off so the nilpotent factorial sum
// stays O(1); `shift` lets callers keep exp(a00 - shift) representable when a00
// itself would overflow (the engine's row/column equilibration).
inline BivariateSeries series_exp_shifted(const BivariateSeries& a, double shift) {
    const int me = a.max_eps(), mh = a.max_hat();
    BivariateSeries nil = a;
    nil.at(0, 0) = 0.0;
    BivariateSeries out = BivariateSeries::constant(1.0, me, mh);
    BivariateSeries term = out;
    for (int m = 1; m <= me + mh; ++m) {
        term = series_scale(1.0 / m, series_mul(term, nil));
        out = series_add(out, term);
    }
    return series_scale(std::exp(a.at(0, 0) - shift), out);
}

inline BivariateSeries series_exp(const BivariateSeries& a) { return series_exp_shifted(a, 0.0); }

// Taylor coefficients of 1/(c + alpha*eps + beta*ehat):
//   coeff(i,j) = (-1)^{i+j} C(i+j,i) alpha^i beta^j / c^{i+j+1}.
inline BivariateSeries series_recip_affine_general(cx c, cx alpha, cx beta, int max_eps, int max_hat) {
    if (c == cx(0.0)) throw error("ZeroDenominator", "affine reciprocal with zero constant term");
    BivariateSeries out(max_eps, max_hat);
    for (int i = 0; i <= max_eps; ++i)
        for (int j = 0; j <= max_hat; ++j) {
            double binom = 1.0;
            for (int m = 1; m <= i; ++m) binom *= static_cast<double>(i + j - m + 1) / m;
            cx val = binom * (((i + j) % 2) ? -1.0 : 1.0);
            for (int m = 0; m < i; ++m) val *= alpha;
            for (int m = 0; m < j; ++m) val *= beta;
            cx cp = c;
            for (int m = 0; m < i + j; ++m) cp *= c;
            out.at(i, j) = val / cp;
        }
    return out;
}

// The kernel denominator expansion 1/(c + eps - ehat).
inline BivariateSeries series_recip_affine(cx c, int max_eps, int max_hat) {
    return series_recip_affine_general(c, 1.0, -1.0, max_eps, max_hat);
}

inline cx series_coeff(const BivariateSeries& a, int i, int j) { return a.coeff(i, j); }

// Coefficientwise conjugation; turns a series in eps into the hat-side series
// in ehat (and vice versa).
inline BivariateSeries series_conj_coeffs(const BivariateSeries& a) {
    BivariateSeries out(a.max_eps(), a.max_hat());
    for (int i = 0; i <= a.max_eps(); ++i)
        for (int j = 0; j <= a.max_hat(); ++j) out.at(i, j) = std::conj(a.at(i, j));
    return out;
}

}  // namespace ngss
