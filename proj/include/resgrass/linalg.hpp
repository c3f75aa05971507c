#pragma once

#include <utility>

#include "resgrass/elements.hpp"

namespace resgrass {

// Matrix exponential. Skew-Hermitian inputs go through a unitary
// eigendecomposition of -i a (the result is then unitary); everything else
// falls back to scaling-and-squaring.
BlockOperator expm(const BlockOperator& a, const Tolerances& tol = {});

// Closed-form exponential of rho = (0, a; -a*, 0) built from the polar data
// of the off-diagonal block a : H- -> H+. Returns
// (cos|a*|, v sin|a|; -w sin|a*|, cos|a|), the partial isometries v, w acting
// as 0 on the kernels.
UnitaryElement exp_offdiagonal(const Matrix& a_block, SplitSpace space,
                               const Tolerances& tol = {});

struct PolarDecomposition {
  UnitaryElement u;
  BlockOperator s;  // (g* g)^{1/2}, Hermitian positive-definite
};

// g = u s; throws SingularInput when the smallest singular value of g is
// at or below tol.sing.
PolarDecomposition polar(const BlockOperator& g, const Tolerances& tol = {});

// Eigenvalues of the Hermitian matrix -i a for skew-Hermitian a, ascending.
Eigen::VectorXd skew_spectrum(const Matrix& a);

}  // namespace resgrass
