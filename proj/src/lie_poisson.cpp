#include "resgrass/lie_poisson.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "resgrass/norms.hpp"

namespace resgrass {

namespace {

constexpr double kRealityTol = 1e-12;

double real_trace_checked(const Matrix& product, const char* what) {
  const Complex tr = product.trace();
  if (std::abs(tr.imag()) > kRealityTol)
    throw Error(std::string(what) + ": trace has a nonreal part beyond tolerance");
  return tr.real();
}

}  // namespace

double pairing(const PredualElement& rho, const RestrictedElement& a) {
  if (rho.space() != a.space()) throw SpaceMismatch("pairing");
  return real_trace_checked(rho.op().entries() * a.op().entries(), "pairing");
}

double cocycle_s(const RestrictedElement& A, const RestrictedElement& B) {
  if (A.space() != B.space()) throw SpaceMismatch("cocycle_s");
  return real_trace_checked(A.op().entries() * commutator_with_d(B.op()).entries(), "cocycle_s");
}

ExtendedAlgebraElement extended_bracket(const ExtendedAlgebraElement& x,
                                        const ExtendedAlgebraElement& y) {
  if (x.space() != y.space()) throw SpaceMismatch("extended_bracket");
  return ExtendedAlgebraElement(RestrictedElement(commutator(x.a.op(), y.a.op())),
                                -cocycle_s(x.a, y.a));
}

ExtendedElement coad(const RestrictedElement& A, const ExtendedElement& x) {
  if (A.space() != x.space()) throw SpaceMismatch("coad");
  BlockOperator out =
      commutator(A.op(), x.mu.op()) + x.gamma * commutator_with_d(A.op());
  return ExtendedElement(PredualElement(std::move(out)), 0.0);
}

PredualElement sigma(const UnitaryElement& g, const Tolerances& tol) {
  const Matrix& gm = g.op().entries();
  const Matrix d = d_matrix(g.space());
  PredualElement out(BlockOperator(g.space(), gm * d * gm.adjoint() - d), tol);
  if (!std::isfinite(predual_norm(out.op())))
    throw Error("sigma: predual norm is not finite");
  return out;
}

ExtendedElement affine_action(const UnitaryElement& g, const ExtendedElement& x,
                              const Tolerances& tol) {
  if (g.space() != x.space()) throw SpaceMismatch("affine_action");
  const Matrix& gm = g.op().entries();
  Matrix out = gm * x.mu.op().entries() * gm.adjoint() +
               x.gamma * sigma(g, tol).op().entries();
  return ExtendedElement(PredualElement(BlockOperator(g.space(), std::move(out)), tol), x.gamma);
}

int skew_basis_size(int n) { return n * n; }

Matrix skew_basis_element(int n, int idx) {
  const Complex i1(0, 1);
  Matrix e = Matrix::Zero(n, n);
  if (idx < n) {
    e(idx, idx) = i1;
    return e;
  }
  int rem = idx - n;
  const int pair = rem / 2;
  const bool imag_part = rem % 2;
  // enumerate (k, l), k < l, row major
  int k = 0, count = n - 1;
  int p = pair;
  while (p >= count) {
    p -= count;
    ++k;
    --count;
  }
  const int l = k + 1 + p;
  const double r = 1.0 / std::sqrt(2.0);
  if (!imag_part) {
    e(k, l) = r;
    e(l, k) = -r;
  } else {
    e(k, l) = i1 * r;
    e(l, k) = i1 * r;
  }
  return e;
}

Eigen::VectorXd skew_to_coords(const Matrix& x) {
  const int n = static_cast<int>(x.rows());
  Eigen::VectorXd v(n * n);
  for (int k = 0; k < n; ++k) v(k) = x(k, k).imag();
  int idx = n;
  const double s2 = std::sqrt(2.0);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      v(idx++) = s2 * x(k, l).real();
      v(idx++) = s2 * x(k, l).imag();
    }
  return v;
}

Matrix coords_to_skew(int n, const Eigen::VectorXd& v) {
  Matrix x = Matrix::Zero(n, n);
  const Complex i1(0, 1);
  for (int k = 0; k < n; ++k) x(k, k) = i1 * v(k);
  int idx = n;
  const double r = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      const double re = v(idx++) * r;
      const double im = v(idx++) * r;
      x(k, l) = Complex(re, im);
      x(l, k) = Complex(-re, im);
    }
  return x;
}

RestrictedElement fd_gradient(const ScalarField& h, const ExtendedElement& x, Exec exec) {
  const SplitSpace space = x.space();
  const int n = space.dim();
  const double step = h.fd_step;
  const int m = skew_basis_size(n);

  // Directional derivatives along the canonical predual basis; each entry of
  // the gradient is read off from one pairing.
  std::vector<double> deriv(m);
  parallel_for(
      static_cast<std::size_t>(m),
      [&](std::size_t idx) {
        const Matrix delta = skew_basis_element(n, static_cast<int>(idx));
        const Matrix& mu = x.mu.op().entries();
        ExtendedElement plus(PredualElement(BlockOperator(space, mu + step * delta)), x.gamma);
        ExtendedElement minus(PredualElement(BlockOperator(space, mu - step * delta)), x.gamma);
        const double fp = h.eval(plus);
        const double fm = h.eval(minus);
        if (!std::isfinite(fp) || !std::isfinite(fm))
          throw NonFiniteEvaluation("fd_gradient: field evaluation is not finite");
        deriv[idx] = (fp - fm) / (2.0 * step);
      },
      exec);

  // Pairings against the basis pin down every entry:
  // <i E_kk, G> = -Im G_kk, <(E_kl - E_lk)/sqrt2, G> = -sqrt2 Re G_kl,
  // <i(E_kl + E_lk)/sqrt2, G> = -sqrt2 Im G_kl.
  Matrix g = Matrix::Zero(n, n);
  const double s2 = std::sqrt(2.0);
  for (int k = 0; k < n; ++k) g(k, k) = Complex(0, -deriv[k]);
  int idx = n;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      const double re = -deriv[idx++] / s2;
      const double im = -deriv[idx++] / s2;
      g(k, l) = Complex(re, im);
      g(l, k) = Complex(-re, im);
    }
  return RestrictedElement(BlockOperator(space, std::move(g)));
}

double poisson_bracket(const ScalarField& f, const ScalarField& g, const ExtendedElement& x,
                       Exec exec) {
  const RestrictedElement gf = fd_gradient(f, x, exec);
  const RestrictedElement gg = fd_gradient(g, x, exec);
  return pairing(x.mu, RestrictedElement(commutator(gf.op(), gg.op()))) -
         x.gamma * cocycle_s(gf, gg);
}

ExtendedElement hamiltonian_field(const ScalarField& h, const ExtendedElement& x, Exec exec) {
  const RestrictedElement g = fd_gradient(h, x, exec);
  BlockOperator out = commutator(g.op(), x.mu.op()) -
                      x.gamma * commutator(g.op(), d_operator(x.space()));
  return ExtendedElement(PredualElement(std::move(out)), 0.0);
}

namespace {

// Real matrix of X -> [X, mu] - gamma [X, d] on u(N) in the canonical basis.
Eigen::MatrixXd orbit_map_matrix(const ExtendedElement& x, Exec exec) {
  const int n = x.space().dim();
  const int m = skew_basis_size(n);
  const Matrix& mu = x.mu.op().entries();
  const Matrix d = d_matrix(x.space());
  const Matrix op = mu - x.gamma * d;  // [X, mu] - gamma [X, d] = [X, op]
  Eigen::MatrixXd t(m, m);
  parallel_for(
      static_cast<std::size_t>(m),
      [&](std::size_t j) {
        const Matrix e = skew_basis_element(n, static_cast<int>(j));
        t.col(static_cast<Eigen::Index>(j)) = skew_to_coords(e * op - op * e);
      },
      exec);
  return t;
}

}  // namespace

std::vector<RestrictedElement> isotropy_algebra(const ExtendedElement& x, const Tolerances& tol,
                                                Exec exec) {
  const int n = x.space().dim();
  const Eigen::MatrixXd t = orbit_map_matrix(x, exec);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(t, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = (sv.size() ? sv(0) : 0.0) * tol.rank;
  std::vector<RestrictedElement> basis;
  for (Eigen::Index j = 0; j < sv.size(); ++j) {
    if (sv(j) <= cutoff)
      basis.emplace_back(BlockOperator(x.space(), coords_to_skew(n, svd.matrixV().col(j))));
  }
  return basis;
}

std::vector<PredualElement> characteristic_subspace(const ExtendedElement& x,
                                                    const Tolerances& tol, Exec exec) {
  const int n = x.space().dim();
  const Eigen::MatrixXd t = orbit_map_matrix(x, exec);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(t, Eigen::ComputeFullU);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = (sv.size() ? sv(0) : 0.0) * tol.rank;
  std::vector<PredualElement> basis;
  for (Eigen::Index j = 0; j < sv.size(); ++j) {
    if (sv(j) > cutoff)
      basis.emplace_back(BlockOperator(x.space(), coords_to_skew(n, svd.matrixU().col(j))));
  }
  return basis;
}

}  // namespace resgrass
