#include "resgrass/grassmann.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>

#include "resgrass/linalg.hpp"

namespace resgrass {

GrassmannPoint grassmann_from_basis(const Matrix& columns, SplitSpace space,
                                    const Tolerances& tol) {
  if (columns.rows() != space.dim() || columns.cols() < 1 || columns.cols() > space.dim())
    throw ShapeMismatch("grassmann_from_basis: column shape does not fit the space");
  Eigen::JacobiSVD<Matrix> svd(columns);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= tol.sing)
    throw RankDeficient("grassmann_from_basis: columns are rank deficient");
  Eigen::HouseholderQR<Matrix> qr(columns);
  Matrix q = qr.householderQ() * Matrix::Identity(columns.rows(), columns.cols());
  return GrassmannPoint(BlockOperator(space, q * q.adjoint()), tol);
}

int component_index(const GrassmannPoint& W) { return W.dim_w() - W.space().n_plus; }

ExtendedElement phi_gamma(const GrassmannPoint& W, double gamma, const Tolerances& tol) {
  if (gamma == 0.0) throw ZeroGamma("phi_gamma: gamma must be nonzero");
  const SplitSpace space = W.space();
  Matrix p_plus = Matrix::Zero(space.dim(), space.dim());
  p_plus.topLeftCorner(space.n_plus, space.n_plus).setIdentity();
  Matrix mu = Complex(0, 2.0 * gamma) * (W.projector().entries() - p_plus);
  return ExtendedElement(PredualElement(BlockOperator(space, std::move(mu)), tol), gamma);
}

GrassmannPoint act(const UnitaryElement& g, const GrassmannPoint& W, const Tolerances& tol) {
  if (g.space() != W.space()) throw SpaceMismatch("act");
  const Matrix& gm = g.op().entries();
  return GrassmannPoint(
      BlockOperator(W.space(), gm * W.projector().entries() * gm.adjoint()), tol);
}

double omega_gr(const TangentAtBase& X, const TangentAtBase& Y) {
  if (X.x.rows() != Y.x.rows() || X.x.cols() != Y.x.cols())
    throw ShapeMismatch("omega_gr: tangent blocks differ in shape");
  return 2.0 * (X.x.adjoint() * Y.x).trace().imag();
}

double omega_gr_hom(const RestrictedElement& A, const RestrictedElement& B) {
  return -2.0 * cocycle_s(A, B);
}

RestrictedElement tangent_lift(const TangentAtBase& X, SplitSpace space) {
  if (X.x.rows() != space.n_minus || X.x.cols() != space.n_plus)
    throw ShapeMismatch("tangent_lift: block must be n- x n+");
  return RestrictedElement(
      BlockOperator::off_diagonal(space, Matrix(-0.5 * X.x.adjoint()), Matrix(0.5 * X.x)));
}

TangentAtBase tangent_part(const RestrictedElement& A) {
  return TangentAtBase{Matrix(2.0 * A.op().mp())};
}

GrassmannPoint geodesic(const GrassmannPoint& W, const RestrictedElement& X, double t,
                        const Tolerances& tol) {
  if (W.space() != X.space()) throw SpaceMismatch("geodesic");
  const Matrix& p = W.projector().entries();
  const Matrix& xm = X.op().entries();
  const Matrix q = Matrix::Identity(p.rows(), p.cols()) - p;
  if ((p * xm * p).norm() > tol.herm || (q * xm * q).norm() > tol.herm)
    throw NotTransverse("geodesic: direction is not transverse to W");
  return act(UnitaryElement(expm(t * BlockOperator(X.space(), xm), tol), tol), W, tol);
}

RestrictedElement grassmann_log(const GrassmannPoint& W1, const GrassmannPoint& W2,
                                const Tolerances& tol) {
  if (W1.space() != W2.space()) throw SpaceMismatch("grassmann_log");
  if (W1.dim_w() != W2.dim_w())
    throw DimensionMismatch("grassmann_log: subspace dimensions differ");
  const int n = W1.space().dim();
  const int k = W1.dim_w();
  if (k == 0 || k == n) return RestrictedElement(BlockOperator::zero(W1.space()));

  // orthonormal bases from the projector eigenspaces (eigenvalues near 1 come
  // last in the ascending order)
  Eigen::SelfAdjointEigenSolver<Matrix> es1(W1.projector().entries());
  Eigen::SelfAdjointEigenSolver<Matrix> es2(W2.projector().entries());
  const Matrix q1 = es1.eigenvectors().rightCols(k);
  const Matrix q2 = es2.eigenvectors().rightCols(k);

  Eigen::JacobiSVD<Matrix> svd(q1.adjoint() * q2, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& c = svd.singularValues();  // cos(theta), descending

  // A cosine at 0 is the cut locus: the rotation plane is determined but the
  // phase pairing is not canonical. The direction returned still satisfies
  // exp(X).W1 = W2 (then w = v below), matching the round-trip contract.
  Matrix x = Matrix::Zero(n, n);
  for (int i = 0; i < k; ++i) {
    const double ci = std::min(1.0, std::max(0.0, c(i)));
    const double theta = ci <= 1e-8 ? M_PI / 2.0 : std::acos(ci);
    const double s = std::sin(theta);
    if (s < 1e-12) continue;  // aligned direction contributes nothing
    const Eigen::VectorXcd u = q1 * svd.matrixU().col(i);
    const Eigen::VectorXcd v = q2 * svd.matrixV().col(i);
    const Eigen::VectorXcd w = (v - ci * u) / s;
    x += theta * (w * u.adjoint() - u * w.adjoint());
  }
  // clean projection onto m_{W1}
  const Matrix& p = W1.projector().entries();
  const Matrix q = Matrix::Identity(n, n) - p;
  x = p * x * q + q * x * p;
  return RestrictedElement(BlockOperator(W1.space(), std::move(x)), tol);
}

PullbackSides pullback_check(double gamma, const RestrictedElement& A,
                             const RestrictedElement& B) {
  if (A.space() != B.space()) throw SpaceMismatch("pullback_check");
  const double off = std::max(
      std::max(A.op().pp().cwiseAbs().maxCoeff(), A.op().mm().cwiseAbs().maxCoeff()),
      std::max(B.op().pp().cwiseAbs().maxCoeff(), B.op().mm().cwiseAbs().maxCoeff()));
  if (off > 1e-12) throw NotTransverse("pullback_check: arguments must be off-diagonal");
  PullbackSides out;
  out.lhs = -gamma * cocycle_s(A, B);
  out.rhs = 0.5 * gamma * omega_gr_hom(A, B);
  return out;
}

}  // namespace resgrass
