#include "dqg/numeric.hpp"

#include <Eigen/Eigenvalues>

namespace dqg {

CMat to_numeric(const GMatrix& m) {
  CMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_complex();
  return out;
}

double max_abs(const CMat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

SqrtResult numeric_psd_sqrt(const CMat& g, double tol) {
  SqrtResult r;
  Eigen::SelfAdjointEigenSolver<CMat> es(g);
  if (es.info() != Eigen::Success) {
    r.residual = -1.0;
    return r;
  }
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  r.root = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  r.residual = max_abs(r.root * r.root - g);
  r.ok = r.residual <= tol;
  return r;
}

SqrtResult numeric_psd_sqrt(const GMatrix& g, double tol) { return numeric_psd_sqrt(to_numeric(g), tol); }

double min_eigenvalue(const GMatrix& g) {
  if (g.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(to_numeric(g), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace dqg
