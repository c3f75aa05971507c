#pragma once

#include "resgrass/elements.hpp"

namespace resgrass {

struct PositivityBound {
  bool is_positive = false;
  double t_norm = 0.0;  // ||a(+-)||_2
  double bound = 0.0;   // Tr(a)/sqrt(2)
};

// For Hermitian a >= 0 with trace-class diagonal data, the off-diagonal block
// obeys ||t||_2 <= Tr(a)/sqrt(2).
PositivityBound positivity_bound_check(const BlockOperator& a, const Tolerances& tol = {});

struct ConePair {
  bool i_rho_positive = false;
  double s1 = 0.0;  // ||rho||_1
  double pd = 0.0;  // predual norm
};

// On the positive cone {i rho >= 0} the predual norm is equivalent to the
// trace norm: s1 <= pd <= (1 + sqrt(2)) s1.
ConePair cone_pair_check(const PredualElement& rho, const Tolerances& tol = {});

}  // namespace resgrass
