#include "resgrass/positivity.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "resgrass/norms.hpp"

namespace resgrass {

PositivityBound positivity_bound_check(const BlockOperator& a, const Tolerances& tol) {
  if (hermitian_defect(a.entries()) > tol.herm)
    throw NotHermitian("positivity_bound_check: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.entries(), Eigen::EigenvaluesOnly);
  PositivityBound out;
  out.is_positive = es.eigenvalues()(0) >= -tol.pos;
  out.t_norm = schatten_norm(Matrix(a.pm()), Schatten::two);
  out.bound = a.trace().real() / std::sqrt(2.0);
  return out;
}

ConePair cone_pair_check(const PredualElement& rho, const Tolerances& tol) {
  const Matrix i_rho = Complex(0, 1) * rho.op().entries();
  Eigen::SelfAdjointEigenSolver<Matrix> es(i_rho, Eigen::EigenvaluesOnly);
  ConePair out;
  out.i_rho_positive = es.eigenvalues()(0) >= -tol.pos;
  out.s1 = schatten_norm(rho.op(), Schatten::one);
  out.pd = predual_norm(rho.op());
  return out;
}

}  // namespace resgrass
