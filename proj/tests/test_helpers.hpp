#pragma once

#include <initializer_list>

#include "resgrass/block_operator.hpp"

namespace resgrass::testing {

// Small literal matrix helper: make_matrix({{1, 2}, {3, 4}}).
inline Matrix make_matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  Matrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline BlockOperator make_op(SplitSpace space,
                             std::initializer_list<std::initializer_list<Complex>> rows) {
  return BlockOperator(space, make_matrix(rows));
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline constexpr Complex I{0, 1};

}  // namespace resgrass::testing
