#include "resgrass/diagonalize.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "resgrass/norms.hpp"
#include "resgrass/random_inputs.hpp"

namespace resgrass {

double spectral_gap(const RestrictedElement& rho) {
  const Eigen::VectorXd a = skew_spectrum(Matrix(rho.op().pp()));
  const Eigen::VectorXd b = skew_spectrum(Matrix(rho.op().mm()));
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j)
      gap = std::min(gap, std::abs(a(i) - b(j)));
  return gap;
}

RiccatiReport riccati_solve(const RestrictedElement& rho, double tol, int max_iter, bool force) {
  if (tol <= 0 || max_iter < 1) throw BadParameters("riccati_solve: bad tol or max_iter");
  const Matrix rpp = rho.op().pp();
  const Matrix rpm = rho.op().pm();
  const Matrix rmp = rho.op().mp();
  const Matrix rmm = rho.op().mm();

  const double gap = spectral_gap(rho);
  const double off = schatten_norm(rpm, Schatten::two);
  if (!force && !(gap > 0 && off < 0.5 * gap))
    throw GapViolation("riccati_solve: ||rho(+-)||_2 >= gap/2");

  // Eigenbases of the normal diagonal blocks; the Sylvester step is an
  // entrywise division by i(alpha_j - beta_i) there.
  Eigen::SelfAdjointEigenSolver<Matrix> esp(Matrix(Complex(0, -1) * rpp));
  Eigen::SelfAdjointEigenSolver<Matrix> esm(Matrix(Complex(0, -1) * rmm));
  const Eigen::VectorXd alpha = esp.eigenvalues();
  const Eigen::VectorXd beta = esm.eigenvalues();
  const Matrix vp = esp.eigenvectors();
  const Matrix vm = esm.eigenvectors();

  const int np = rho.space().n_plus, nm = rho.space().n_minus;
  Matrix k = Matrix::Zero(nm, np);
  RiccatiReport report;
  report.gap = gap;

  auto residual_of = [&](const Matrix& kk) {
    return (kk * rpm * kk + kk * rpp - rmm * kk - rmp).norm();
  };

  for (int it = 1; it <= max_iter; ++it) {
    const Matrix rhs = rmp - k * rpm * k;
    Matrix rhs_t = vm.adjoint() * rhs * vp;
    for (int i = 0; i < nm; ++i)
      for (int j = 0; j < np; ++j) rhs_t(i, j) /= Complex(0, alpha(j) - beta(i));
    k = vm * rhs_t * vp.adjoint();
    report.k = k;
    report.residual = residual_of(k);
    report.residual_history.push_back(report.residual);
    report.iterations = it;
    if (report.residual < tol) return report;
  }
  throw NoConvergence(report);
}

BlockDiagonalization block_diagonalize(const RestrictedElement& rho, double tol, int max_iter,
                                       const Tolerances& tols) {
  RiccatiReport report = riccati_solve(rho, tol, max_iter);
  const SplitSpace space = rho.space();
  const int np = space.n_plus, nm = space.n_minus;

  Matrix g = Matrix::Zero(space.dim(), space.dim());
  g.topLeftCorner(np, np).setIdentity();
  g.topRightCorner(np, nm) = report.k.adjoint();
  g.bottomLeftCorner(nm, np) = report.k;
  g.bottomRightCorner(nm, nm) = -Matrix::Identity(nm, nm);
  const BlockOperator gop(space, g);

  if (commutator_with_d(gop * gop).entries().norm() > 1e-10)
    throw Error("block_diagonalize: [d, g^2] != 0");
  PolarDecomposition pd = polar(gop, tols);
  if (commutator_with_d(pd.s).entries().norm() > 1e-10)
    throw Error("block_diagonalize: [d, s] != 0");

  const Matrix& um = pd.u.op().entries();
  RestrictedElement diag(BlockOperator(space, um.adjoint() * rho.op().entries() * um), tols);
  if (schatten_norm(commutator_with_d(diag.op()), Schatten::two) > 1e-8)
    throw Error("block_diagonalize: conjugated element does not commute with d");
  return BlockDiagonalization{std::move(pd.u), std::move(diag), report.k, std::move(report)};
}

bool in_neighborhood_v0(const RestrictedElement& rho) {
  const Eigen::VectorXd a = skew_spectrum(Matrix(rho.op().pp()));
  const Eigen::VectorXd b = skew_spectrum(Matrix(rho.op().mm()));
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (std::abs(a(i) - 1.0) >= 1.0 / 3.0) return false;
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (std::abs(b(i) + 1.0) >= 1.0 / 3.0) return false;
  return schatten_norm(Matrix(rho.op().pm()), Schatten::two) < 2.0 / 3.0 &&
         schatten_norm(Matrix(rho.op().mp()), Schatten::two) < 2.0 / 3.0;
}

HinkkanenResult hinkkanen_check(const PredualElement& rho, const std::vector<int>& order,
                                double t, double s) {
  if (!(t > 0 && t < 1) || !(s > 0 && s <= 3.0 * (1.0 - t) / 100.0))
    throw BadParameters("hinkkanen_check: need 0 < t < 1 and 0 < s <= 3(1-t)/100");
  const int n = rho.space().dim();
  if (static_cast<int>(order.size()) != n)
    throw BadParameters("hinkkanen_check: order must permute all basis indices");

  const Matrix& m = rho.op().entries();
  auto coeff = [&](int i, int j) { return std::abs(m(order[i - 1], order[j - 1])); };

  HinkkanenResult out;
  for (int i = 1; i <= n && out.ok; ++i) {
    for (int j = 1; j <= n; ++j) {
      const bool decay_ok =
          (i == n || j == n) || coeff(i + 1, j + 1) <= t * coeff(i, j) + 1e-15;
      const bool size_ok =
          (i == j) ||
          coeff(i, j) * coeff(i, j) <=
              s * s / (double(i) * j * i * j) * coeff(i, i) * coeff(j, j) + 1e-15;
      if (!decay_ok || !size_ok) {
        out.ok = false;
        out.first_violation = {i, j};
        break;
      }
    }
  }
  return out;
}

CareyConditions carey_conditions(const RestrictedElement& rho, const GrassmannPoint& W) {
  if (rho.space() != W.space()) throw SpaceMismatch("carey_conditions");
  const Matrix& p = W.projector().entries();
  const Matrix& r = rho.op().entries();
  const Matrix q = Matrix::Identity(p.rows(), p.cols()) - p;
  CareyConditions out;
  out.commutes = (p * r - r * p).norm() < 1e-10;
  out.invariant = (q * r * p).norm() < 1e-10;
  return out;
}

namespace {

// Groups of (sorted) eigenvalue indices closer than tol, chained.
std::vector<std::pair<int, int>> cluster_ranges(const Eigen::VectorXd& theta, double tol) {
  std::vector<std::pair<int, int>> ranges;
  int start = 0;
  for (int i = 1; i <= theta.size(); ++i) {
    if (i == theta.size() || theta(i) - theta(i - 1) > tol) {
      ranges.emplace_back(start, i);
      start = i;
    }
  }
  return ranges;
}

}  // namespace

SubalgebraReport spectral_subalgebra(const RestrictedElement& a, const Tolerances& tol) {
  const int n = a.space().dim();
  Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Complex(0, -1) * a.op().entries()));
  const Eigen::VectorXd theta = es.eigenvalues();
  const Matrix v = es.eigenvectors();

  const double scale = std::max(1.0, theta.size() ? theta.cwiseAbs().maxCoeff() : 0.0);
  const double eps = tol.rank * scale;

  SubalgebraReport out;
  std::vector<std::pair<int, int>> in_k;  // (j, l) with theta_j - theta_l >= -eps
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l)
      if (theta(j) - theta(l) >= -eps) {
        in_k.emplace_back(j, l);
        Matrix e = Matrix::Zero(n, n);
        e(j, l) = 1.0;
        out.k_basis.push_back(v * e * v.adjoint());
      }

  // centralizer of a: skew directions inside the eigenvalue clusters
  const auto ranges = cluster_ranges(theta, eps);
  const Complex i1(0, 1);
  const double r2 = 1.0 / std::sqrt(2.0);
  for (const auto& [lo, hi] : ranges) {
    for (int j = lo; j < hi; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(j, j) = i1;
      out.h0_basis.push_back(v * e * v.adjoint());
    }
    for (int j = lo; j < hi; ++j)
      for (int l = j + 1; l < hi; ++l) {
        Matrix e = Matrix::Zero(n, n);
        e(j, l) = r2;
        e(l, j) = -r2;
        out.h0_basis.push_back(v * e * v.adjoint());
        e(j, l) = i1 * r2;
        e(l, j) = i1 * r2;
        out.h0_basis.push_back(v * e * v.adjoint());
      }
  }

  // membership of x in span(k), tested in the conjugated basis
  auto in_span_k = [&](const Matrix& x) {
    const Matrix xt = v.adjoint() * x * v;
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (theta(j) - theta(l) < -eps && std::abs(xt(j, l)) > 1e-10) return false;
    return true;
  };

  // [k, k] subset k on random pairs
  Rng rng = trial_rng(0x5eba5ULL, static_cast<std::uint64_t>(n));
  out.checks.bracket_closed = true;
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 50 && out.checks.bracket_closed; ++trial) {
    Matrix x = Matrix::Zero(n, n), y = Matrix::Zero(n, n);
    for (const auto& km : out.k_basis) {
      x += Complex(gauss(rng), gauss(rng)) * km;
      y += Complex(gauss(rng), gauss(rng)) * km;
    }
    const double nx = std::max(1.0, x.norm()) * std::max(1.0, y.norm());
    Matrix br = (x * y - y * x) / nx;
    out.checks.bracket_closed = in_span_k(br);
  }

  // k meet conj(k) = h0 + i h0 and k + conj(k) = gl(n), via the index sets
  int dim_intersection = 0, dim_union = 0;
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      const bool kj = theta(j) - theta(l) >= -eps;
      const bool kc = theta(l) - theta(j) >= -eps;  // conj(k) = transpose pattern
      if (kj && kc) ++dim_intersection;
      if (kj || kc) ++dim_union;
    }
  out.checks.intersection_ok = dim_intersection == static_cast<int>(out.h0_basis.size());
  out.checks.sum_ok = dim_union == n * n;

  // every centralizer element and its conjugate must sit inside k
  for (const auto& h : out.h0_basis) {
    if (!in_span_k(h) || !in_span_k(Matrix(-h.adjoint()))) {
      out.checks.intersection_ok = false;
      break;
    }
  }

  if (!out.checks.bracket_closed || !out.checks.intersection_ok || !out.checks.sum_ok)
    throw Error("spectral_subalgebra: structural checks failed");
  return out;
}

}  // namespace resgrass
