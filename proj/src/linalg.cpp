#include "resgrass/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

namespace resgrass {

Eigen::VectorXd skew_spectrum(const Matrix& a) {
  const Matrix h = Complex(0, -1) * a;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

BlockOperator expm(const BlockOperator& a, const Tolerances& tol) {
  const Matrix& m = a.entries();
  if (skew_defect(m) <= tol.herm) {
    // exact unitary route: a = V diag(i theta) V*
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Complex(0, -1) * m));
    const Eigen::VectorXd theta = es.eigenvalues();
    Eigen::VectorXcd phases(theta.size());
    for (Eigen::Index j = 0; j < theta.size(); ++j)
      phases(j) = std::polar(1.0, theta(j));
    return BlockOperator(a.space(),
                         es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
  }
  return BlockOperator(a.space(), m.exp());
}

UnitaryElement exp_offdiagonal(const Matrix& a_block, SplitSpace space, const Tolerances& tol) {
  if (a_block.rows() != space.n_plus || a_block.cols() != space.n_minus)
    throw ShapeMismatch("exp_offdiagonal: block must be n+ x n-");

  Eigen::JacobiSVD<Matrix> svd(a_block, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const int np = space.n_plus, nm = space.n_minus;
  const int r = static_cast<int>(sv.size());  // = min(np, nm)

  Eigen::VectorXd cos_plus = Eigen::VectorXd::Ones(np);   // spectrum of cos|a*|
  Eigen::VectorXd cos_minus = Eigen::VectorXd::Ones(nm);  // spectrum of cos|a|
  Eigen::VectorXd sin_sv = Eigen::VectorXd::Zero(r);
  for (int i = 0; i < r; ++i) {
    cos_plus(i) = std::cos(sv(i));
    cos_minus(i) = std::cos(sv(i));
    sin_sv(i) = std::sin(sv(i));
  }

  const Matrix& u = svd.matrixU();
  const Matrix& v = svd.matrixV();
  Matrix sin_rect = Matrix::Zero(np, nm);
  sin_rect.topLeftCorner(r, r) = sin_sv.asDiagonal();

  Matrix out(space.dim(), space.dim());
  out.topLeftCorner(np, np) = u * cos_plus.asDiagonal() * u.adjoint();
  out.topRightCorner(np, nm) = u * sin_rect * v.adjoint();
  out.bottomLeftCorner(nm, np) = -v * sin_rect.adjoint() * u.adjoint();
  out.bottomRightCorner(nm, nm) = v * cos_minus.asDiagonal() * v.adjoint();
  return UnitaryElement(BlockOperator(space, out), tol);
}

PolarDecomposition polar(const BlockOperator& g, const Tolerances& tol) {
  Eigen::JacobiSVD<Matrix> svd(g.entries(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= tol.sing)
    throw SingularInput("polar: smallest singular value below threshold");
  Matrix u = svd.matrixU() * svd.matrixV().adjoint();
  Matrix s = svd.matrixV() * sv.asDiagonal() * svd.matrixV().adjoint();
  return PolarDecomposition{UnitaryElement(BlockOperator(g.space(), std::move(u)), tol),
                            BlockOperator(g.space(), std::move(s))};
}

}  // namespace resgrass
