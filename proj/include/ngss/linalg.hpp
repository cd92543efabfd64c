#pragma once

// Thin wrapper over Eigen's dense complex LU for the determinant/solve needs of
// the engine. Matrices arrive pre-equilibrated (powers of two, tracked in log2
// units by the assembler), so determinants and solves stay in range.

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace ngss {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct LuResult {
    Eigen::PartialPivLU<Mat> lu;
    std::complex<double> det;
    double cond_estimate = 0.0;  // 1-norm condition of the equilibrated matrix
};

inline LuResult lu_factor(const Mat& m) {
    LuResult r{Eigen::PartialPivLU<Mat>(m), 0.0, 0.0};
    r.det = r.lu.determinant();
    double norm1 = 0.0, inv_norm1 = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) norm1 = std::max(norm1, m.col(j).cwiseAbs().sum());
    if (r.det != std::complex<double>(0.0)) {
        Mat inv = r.lu.inverse();
        for (Eigen::Index j = 0; j < inv.cols(); ++j)
            inv_norm1 = std::max(inv_norm1, inv.col(j).cwiseAbs().sum());
        r.cond_estimate = norm1 * inv_norm1;
    } else {
        r.cond_estimate = std::numeric_limits<double>::infinity();
    }
    return r;
}

}  // namespace ngss
