#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "resgrass/block_operator.hpp"

namespace resgrass {

namespace detail {
// Skew inputs with a defect below tol are symmetrized to (x - x*)/2;
// larger defects are rejected.
inline BlockOperator skewify(BlockOperator op, double tol, const char* what) {
  if (skew_defect(op.entries()) > tol)
    throw NotHermitian(std::string(what) + ": input is not skew-Hermitian within tolerance");
  op.entries() = 0.5 * (op.entries() - op.entries().adjoint().eval());
  return op;
}
}  // namespace detail

// Element of the (truncated) restricted algebra: skew-Hermitian, carrying
// the norm ||a|| + ||[d,a]||_2.
class RestrictedElement {
 public:
  explicit RestrictedElement(BlockOperator op, const Tolerances& tol = {})
      : op_(detail::skewify(std::move(op), tol.herm, "RestrictedElement")) {}

  const BlockOperator& op() const { return op_; }
  const SplitSpace& space() const { return op_.space(); }

 private:
  BlockOperator op_;
};

// Element of the predual: skew-Hermitian, carrying the norm
// ||rho(++)||_1 + ||rho(--)||_1 + 2 ||rho(-+)||_2.
class PredualElement {
 public:
  explicit PredualElement(BlockOperator op, const Tolerances& tol = {})
      : op_(detail::skewify(std::move(op), tol.herm, "PredualElement")) {}

  const BlockOperator& op() const { return op_; }
  const SplitSpace& space() const { return op_.space(); }

 private:
  BlockOperator op_;
};

class UnitaryElement {
 public:
  explicit UnitaryElement(BlockOperator op, const Tolerances& tol = {}) : op_(std::move(op)) {
    const auto& m = op_.entries();
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    const double defect = std::max((m.adjoint() * m - id).cwiseAbs().maxCoeff(),
                                   (m * m.adjoint() - id).cwiseAbs().maxCoeff());
    if (defect > tol.unit) throw NotUnitary("UnitaryElement: unitarity defect too large");
  }

  const BlockOperator& op() const { return op_; }
  const SplitSpace& space() const { return op_.space(); }

 private:
  BlockOperator op_;
};

// Point of the centrally extended predual (mu, gamma).
struct ExtendedElement {
  PredualElement mu;
  double gamma = 0.0;

  ExtendedElement(PredualElement m, double g) : mu(std::move(m)), gamma(g) {}
  static ExtendedElement origin(SplitSpace space, double gamma) {
    return ExtendedElement(PredualElement(BlockOperator::zero(space)), gamma);
  }
  const SplitSpace& space() const { return mu.space(); }
};

// Element (a, t) of the centrally extended algebra.
struct ExtendedAlgebraElement {
  RestrictedElement a;
  double t = 0.0;

  ExtendedAlgebraElement(RestrictedElement x, double s) : a(std::move(x)), t(s) {}
  const SplitSpace& space() const { return a.space(); }
};

// Smooth function on the extended predual, given by an evaluator; derivatives
// are taken by central differences with step fd_step.
struct ScalarField {
  std::function<double(const ExtendedElement&)> eval;
  double fd_step = 1e-6;
};

// Orthogonal projection p_W onto a subspace W, with dim W carried alongside.
class GrassmannPoint {
 public:
  explicit GrassmannPoint(BlockOperator projector, const Tolerances& tol = {})
      : p_(std::move(projector)) {
    const auto& m = p_.entries();
    if (hermitian_defect(m) > tol.unit || (m * m - m).cwiseAbs().maxCoeff() > tol.unit)
      throw NotHermitian("GrassmannPoint: not an orthogonal projection");
    const double tr = m.trace().real();
    dim_w_ = static_cast<int>(std::lround(tr));
    if (std::abs(tr - dim_w_) > tol.unit)
      throw NotHermitian("GrassmannPoint: trace is not an integer");
  }

  static GrassmannPoint h_plus(SplitSpace space) {
    Matrix p = Matrix::Zero(space.dim(), space.dim());
    p.topLeftCorner(space.n_plus, space.n_plus).setIdentity();
    return GrassmannPoint(BlockOperator(space, p));
  }

  const BlockOperator& projector() const { return p_; }
  const SplitSpace& space() const { return p_.space(); }
  int dim_w() const { return dim_w_; }

 private:
  BlockOperator p_;
  int dim_w_ = 0;
};

// Tangent vector at the base point H+, identified with a block in S2(H+, H-).
struct TangentAtBase {
  Matrix x;  // n- x n+
};

}  // namespace resgrass
