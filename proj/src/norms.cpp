#include "resgrass/norms.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace resgrass {

double schatten_norm(const Matrix& x, Schatten p) {
  if (x.size() == 0) return 0.0;
  switch (p) {
    case Schatten::two:
      return x.norm();
    case Schatten::one: {
      Eigen::BDCSVD<Matrix> svd(x);
      return svd.singularValues().sum();
    }
    case Schatten::inf: {
      Eigen::BDCSVD<Matrix> svd(x);
      return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    }
  }
  return 0.0;
}

double restricted_norm(const BlockOperator& a) {
  return schatten_norm(a, Schatten::inf) + schatten_norm(commutator_with_d(a), Schatten::two);
}

double predual_norm(const BlockOperator& rho) {
  return schatten_norm(Matrix(rho.pp()), Schatten::one) +
         schatten_norm(Matrix(rho.mm()), Schatten::one) +
         2.0 * schatten_norm(Matrix(rho.mp()), Schatten::two);
}

double extended_norm(const BlockOperator& mu, double gamma) {
  return predual_norm(mu) + std::abs(gamma);
}

}  // namespace resgrass
