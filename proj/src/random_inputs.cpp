#include "resgrass/random_inputs.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

namespace resgrass {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix random_complex(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> gauss;
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

Matrix random_skew(Rng& rng, int n) {
  const Matrix m = random_complex(rng, n, n);
  return 0.5 * (m - m.adjoint().eval());
}

Matrix random_hermitian(Rng& rng, int n) {
  const Matrix m = random_complex(rng, n, n);
  return 0.5 * (m + m.adjoint().eval());
}

Matrix random_unitary_matrix(Rng& rng, int n) {
  const Matrix m = random_complex(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= (std::abs(rjj) > 0) ? rjj / std::abs(rjj) : 1.0;
  }
  return q;
}

UnitaryElement random_unitary(Rng& rng, SplitSpace space) {
  return UnitaryElement(BlockOperator(space, random_unitary_matrix(rng, space.dim())));
}

UnitaryElement random_diag_unitary(Rng& rng, SplitSpace space) {
  const Matrix up = random_unitary_matrix(rng, space.n_plus);
  const Matrix um = random_unitary_matrix(rng, space.n_minus);
  return UnitaryElement(BlockOperator::block_diagonal(space, up, um));
}

RestrictedElement random_restricted(Rng& rng, SplitSpace space) {
  return RestrictedElement(BlockOperator(space, random_skew(rng, space.dim())));
}

PredualElement random_predual(Rng& rng, SplitSpace space) {
  return PredualElement(BlockOperator(space, random_skew(rng, space.dim())));
}

RestrictedElement random_off_diagonal(Rng& rng, SplitSpace space) {
  const Matrix x = random_complex(rng, space.n_minus, space.n_plus);
  return RestrictedElement(
      BlockOperator::off_diagonal(space, Matrix(-x.adjoint()), x));
}

GrassmannPoint random_grassmann(Rng& rng, SplitSpace space, int dim_w) {
  if (dim_w < 0 || dim_w > space.dim())
    throw BadParameters("random_grassmann: bad subspace dimension");
  if (dim_w == 0) return GrassmannPoint(BlockOperator::zero(space));
  const Matrix cols = random_complex(rng, space.dim(), dim_w);
  Eigen::HouseholderQR<Matrix> qr(cols);
  const Matrix q = qr.householderQ() * Matrix::Identity(space.dim(), dim_w);
  return GrassmannPoint(BlockOperator(space, q * q.adjoint()));
}

PredualElement random_cone_element(Rng& rng, SplitSpace space) {
  const Matrix b = random_complex(rng, space.dim(), space.dim());
  const Matrix psd = b.adjoint() * b;
  return PredualElement(BlockOperator(space, Complex(0, -1) * psd));
}

namespace {

// Skew block with prescribed purely imaginary spectrum i * theta.
Matrix skew_with_spectrum(Rng& rng, int n, const Eigen::VectorXd& theta) {
  const Matrix v = random_unitary_matrix(rng, n);
  Eigen::VectorXcd d(n);
  for (int i = 0; i < n; ++i) d(i) = Complex(0, theta(i));
  return v * d.asDiagonal() * v.adjoint();
}

Eigen::VectorXd uniform_vector(Rng& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = u(rng);
  return v;
}

}  // namespace

RestrictedElement random_gapped(Rng& rng, SplitSpace space, double gap, double off_norm) {
  const double spread = 0.5;
  const Eigen::VectorXd tp = uniform_vector(rng, space.n_plus, gap / 2, gap / 2 + spread);
  const Eigen::VectorXd tm = uniform_vector(rng, space.n_minus, -gap / 2 - spread, -gap / 2);
  const Matrix app = skew_with_spectrum(rng, space.n_plus, tp);
  const Matrix amm = skew_with_spectrum(rng, space.n_minus, tm);

  Matrix apm = random_complex(rng, space.n_plus, space.n_minus);
  apm *= off_norm / apm.norm();

  Matrix m = Matrix::Zero(space.dim(), space.dim());
  m.topLeftCorner(space.n_plus, space.n_plus) = app;
  m.bottomRightCorner(space.n_minus, space.n_minus) = amm;
  m.topRightCorner(space.n_plus, space.n_minus) = apm;
  m.bottomLeftCorner(space.n_minus, space.n_plus) = -apm.adjoint();
  return RestrictedElement(BlockOperator(space, std::move(m)));
}

RestrictedElement random_v0(Rng& rng, SplitSpace space, double radius, double off_norm) {
  const Eigen::VectorXd tp = uniform_vector(rng, space.n_plus, 1.0 - radius, 1.0 + radius);
  const Eigen::VectorXd tm = uniform_vector(rng, space.n_minus, -1.0 - radius, -1.0 + radius);
  const Matrix app = skew_with_spectrum(rng, space.n_plus, tp);
  const Matrix amm = skew_with_spectrum(rng, space.n_minus, tm);

  std::uniform_real_distribution<double> u(0.1, off_norm);
  Matrix apm = random_complex(rng, space.n_plus, space.n_minus);
  apm *= u(rng) / apm.norm();

  Matrix m = Matrix::Zero(space.dim(), space.dim());
  m.topLeftCorner(space.n_plus, space.n_plus) = app;
  m.bottomRightCorner(space.n_minus, space.n_minus) = amm;
  m.topRightCorner(space.n_plus, space.n_minus) = apm;
  m.bottomLeftCorner(space.n_minus, space.n_plus) = -apm.adjoint();
  return RestrictedElement(BlockOperator(space, std::move(m)));
}

}  // namespace resgrass
