#pragma once

#include "resgrass/block_operator.hpp"

namespace resgrass {

enum class Schatten { one, two, inf };

double schatten_norm(const Matrix& x, Schatten p);

inline double schatten_norm(const BlockOperator& x, Schatten p) {
  return schatten_norm(x.entries(), p);
}

// ||a|| + ||[d,a]||_2
double restricted_norm(const BlockOperator& a);

// ||rho(++)||_1 + ||rho(--)||_1 + 2 ||rho(-+)||_2
double predual_norm(const BlockOperator& rho);

// Sum norm on the extended predual; the choice of combining the two parts is
// a convention of this library.
double extended_norm(const BlockOperator& mu, double gamma);

}  // namespace resgrass
