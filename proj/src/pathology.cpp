#include "resgrass/pathology.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "resgrass/norms.hpp"
#include "resgrass/random_inputs.hpp"

namespace resgrass {

UnboundedFamily build_unbounded_family(int n, SplitSpace space) {
  if (n < 1 || n > std::min(space.n_plus, space.n_minus))
    throw RankTooLarge("build_unbounded_family: rank exceeds the truncation");

  Matrix v = Matrix::Zero(space.n_plus, space.n_minus);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;
  const Matrix a = (M_PI / 2.0) * v;

  RestrictedElement rho(BlockOperator::off_diagonal(space, a, Matrix(-a.adjoint())));
  UnitaryElement u = exp_offdiagonal(a, space);

  UnboundedReport report;
  report.n = n;
  report.res_norm = restricted_norm(u.op());
  report.lower_bound = std::sqrt(static_cast<double>(n));
  if (report.res_norm < report.lower_bound)
    throw Error("build_unbounded_family: norm bound violated");
  return UnboundedFamily{std::move(rho), std::move(u), report};
}

ConeSpanResult cone_span_demo(int samples, SplitSpace space, std::uint64_t seed, Exec exec) {
  if (samples < 1) throw BadParameters("cone_span_demo: samples must be >= 1");

  std::vector<double> ratios(samples);
  parallel_for(
      static_cast<std::size_t>(samples),
      [&](std::size_t i) {
        Rng rng = trial_rng(seed, i);
        const PredualElement rho = random_cone_element(rng, space);
        ratios[i] = predual_norm(rho.op()) / schatten_norm(rho.op(), Schatten::one);
      },
      exec);
  double max_ratio = ratios[0];
  for (double r : ratios) max_ratio = std::max(max_ratio, r);

  // Balanced rank-one element: the off-diagonal block carries as much of the
  // predual norm as positivity allows.
  Matrix ones = Matrix::Ones(space.dim(), space.dim());
  PredualElement witness(BlockOperator(space, Complex(0, -1) * ones));
  const double witness_ratio =
      predual_norm(witness.op()) / schatten_norm(witness.op(), Schatten::one);

  return ConeSpanResult{max_ratio, std::move(witness), witness_ratio};
}

PairedIndexMap PairedIndexMap::standard(int n) {
  PairedIndexMap map;
  map.plus_pos.resize(n);
  map.minus_pos.resize(n);
  for (int k = 0; k < n; ++k) {
    map.plus_pos[k] = k;
    map.minus_pos[k] = k;
  }
  return map;
}

namespace {

// Reads the pair coefficients c_k from J and validates the anti-diagonal
// structure J e_k = c_k e_{-k}, J e_{-k} = -c_k e_k.
Eigen::VectorXd paired_coefficients(const RestrictedElement& J, const PairedIndexMap& order) {
  const SplitSpace space = J.space();
  const int n = space.n_plus;
  if (space.n_minus != n || static_cast<int>(order.plus_pos.size()) != n ||
      static_cast<int>(order.minus_pos.size()) != n)
    throw BadStructure("centralizer_of_J: paired space requires n+ = n- = N");

  const Matrix& m = J.op().entries();
  if (m.topLeftCorner(n, n).cwiseAbs().maxCoeff() > 1e-12 ||
      m.bottomRightCorner(n, n).cwiseAbs().maxCoeff() > 1e-12)
    throw BadStructure("centralizer_of_J: diagonal blocks must vanish");

  Eigen::VectorXd c(n);
  Matrix pm = m.topRightCorner(n, n);
  for (int k = 0; k < n; ++k) {
    const Complex entry = pm(order.plus_pos[k], order.minus_pos[k]);
    if (std::abs(entry.imag()) > 1e-12)
      throw BadStructure("centralizer_of_J: coefficients must be real");
    c(k) = entry.real();
    if (c(k) == 0.0) throw BadStructure("centralizer_of_J: zero coefficient");
    pm(order.plus_pos[k], order.minus_pos[k]) = 0.0;
  }
  if (pm.cwiseAbs().maxCoeff() > 1e-12)
    throw BadStructure("centralizer_of_J: off-pair coefficients must vanish");
  return c;
}

}  // namespace

std::vector<RestrictedElement> centralizer_of_J(const RestrictedElement& J,
                                                const PairedIndexMap& order,
                                                const Tolerances& tol) {
  paired_coefficients(J, order);

  // kernel of ad(J) on u, solved in the eigenbasis of J: the matrix unit
  // E_jl has ad-eigenvalue i(theta_j - theta_l)
  const int n = J.space().dim();
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Complex(0, -1) * J.op().entries()));
  const Eigen::VectorXd theta = es.eigenvalues();
  const Matrix v = es.eigenvectors();
  const double eps = tol.rank * std::max(1.0, theta.cwiseAbs().maxCoeff());

  std::vector<RestrictedElement> basis;
  const Complex i1(0, 1);
  const double r2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < n; ++j) {
    Matrix e = Matrix::Zero(n, n);
    e(j, j) = i1;
    basis.emplace_back(BlockOperator(J.space(), v * e * v.adjoint()), tol);
  }
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l)
      if (std::abs(theta(j) - theta(l)) <= eps) {
        Matrix e = Matrix::Zero(n, n);
        e(j, l) = r2;
        e(l, j) = -r2;
        basis.emplace_back(BlockOperator(J.space(), v * e * v.adjoint()), tol);
        e(j, l) = i1 * r2;
        e(l, j) = i1 * r2;
        basis.emplace_back(BlockOperator(J.space(), v * e * v.adjoint()), tol);
      }
  return basis;
}

CartanReport cartan_witness(int N, const std::function<double(int)>& coeff) {
  if (N < 1) throw BadParameters("cartan_witness: N must be >= 1");
  const SplitSpace space(N, N);

  Matrix j = Matrix::Zero(2 * N, 2 * N);
  for (int k = 0; k < N; ++k) {
    const double c = coeff(k + 1);
    if (c == 0.0) throw BadParameters("cartan_witness: zero coefficient");
    j(k, N + k) = c;    // J e_k = c_k e_{-k}
    j(N + k, k) = -c;   // J e_{-k} = -c_k e_k
  }
  const BlockOperator J(space, j);

  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Complex(0, -1) * j));
  const Matrix g = es.eigenvectors().adjoint();  // g J g* is diagonal
  const Matrix diag = g * j * g.adjoint();

  CartanReport report;
  report.N = N;
  report.j_s2 = schatten_norm(J, Schatten::two);
  report.j_s1 = schatten_norm(J, Schatten::one);
  report.diag_s1 = schatten_norm(diag, Schatten::one);
  report.offblock_s2 = g.topRightCorner(N, N).norm() + g.bottomLeftCorner(N, N).norm();
  report.bound_ok =
      report.diag_s1 <= 2.0 * report.j_s2 * report.offblock_s2 * (1.0 + 1e-10);
  return report;
}

}  // namespace resgrass
