#pragma once

#include <Eigen/Dense>

#include "dqg/exactlin.hpp"

namespace dqg {

using CMat = Eigen::MatrixXcd;

CMat to_numeric(const GMatrix& m);

struct SqrtResult {
  CMat root;
  double residual = 0.0;
  bool ok = false;
};

// Hermitian square root of a PSD matrix; ok iff max|R^2 - G| <= tol.
SqrtResult numeric_psd_sqrt(const GMatrix& g, double tol);
SqrtResult numeric_psd_sqrt(const CMat& g, double tol);

double min_eigenvalue(const GMatrix& g);
double max_abs(const CMat& m);

}  // namespace dqg
