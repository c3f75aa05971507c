#pragma once

#include <Eigen/Dense>

#include "resgrass/common.hpp"

namespace resgrass {

using Matrix = Eigen::MatrixXcd;

// A complex (n+ + n-) x (n+ + n-) matrix together with the split it acts on.
// The four named block views follow the H+ (+) H- decomposition.
class BlockOperator {
 public:
  BlockOperator(SplitSpace space, Matrix entries)
      : space_(space), m_(std::move(entries)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim())
      throw ShapeMismatch("BlockOperator: entries do not match the split dimensions");
  }

  static BlockOperator zero(SplitSpace space) {
    return BlockOperator(space, Matrix::Zero(space.dim(), space.dim()));
  }
  static BlockOperator identity(SplitSpace space) {
    return BlockOperator(space, Matrix::Identity(space.dim(), space.dim()));
  }
  // a(+-) etc. given; missing blocks are zero.
  static BlockOperator off_diagonal(SplitSpace space, const Matrix& pm, const Matrix& mp) {
    if (pm.rows() != space.n_plus || pm.cols() != space.n_minus ||
        mp.rows() != space.n_minus || mp.cols() != space.n_plus)
      throw ShapeMismatch("off_diagonal: block shapes do not match the split");
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    m.topRightCorner(space.n_plus, space.n_minus) = pm;
    m.bottomLeftCorner(space.n_minus, space.n_plus) = mp;
    return BlockOperator(space, m);
  }
  static BlockOperator block_diagonal(SplitSpace space, const Matrix& pp, const Matrix& mm) {
    if (pp.rows() != space.n_plus || pp.cols() != space.n_plus ||
        mm.rows() != space.n_minus || mm.cols() != space.n_minus)
      throw ShapeMismatch("block_diagonal: block shapes do not match the split");
    Matrix m = Matrix::Zero(space.dim(), space.dim());
    m.topLeftCorner(space.n_plus, space.n_plus) = pp;
    m.bottomRightCorner(space.n_minus, space.n_minus) = mm;
    return BlockOperator(space, m);
  }

  const SplitSpace& space() const { return space_; }
  const Matrix& entries() const { return m_; }
  Matrix& entries() { return m_; }

  auto pp() const { return m_.topLeftCorner(space_.n_plus, space_.n_plus); }
  auto pm() const { return m_.topRightCorner(space_.n_plus, space_.n_minus); }
  auto mp() const { return m_.bottomLeftCorner(space_.n_minus, space_.n_plus); }
  auto mm() const { return m_.bottomRightCorner(space_.n_minus, space_.n_minus); }

  BlockOperator adjoint() const { return BlockOperator(space_, m_.adjoint()); }
  Complex trace() const { return m_.trace(); }

  friend BlockOperator operator+(const BlockOperator& a, const BlockOperator& b) {
    check_space(a, b);
    return BlockOperator(a.space_, a.m_ + b.m_);
  }
  friend BlockOperator operator-(const BlockOperator& a, const BlockOperator& b) {
    check_space(a, b);
    return BlockOperator(a.space_, a.m_ - b.m_);
  }
  friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
    check_space(a, b);
    return BlockOperator(a.space_, a.m_ * b.m_);
  }
  friend BlockOperator operator*(Complex c, const BlockOperator& a) {
    return BlockOperator(a.space_, c * a.m_);
  }
  friend BlockOperator operator*(double c, const BlockOperator& a) {
    return BlockOperator(a.space_, c * a.m_);
  }
  friend BlockOperator operator-(const BlockOperator& a) {
    return BlockOperator(a.space_, -a.m_);
  }

  static void check_space(const BlockOperator& a, const BlockOperator& b) {
    if (a.space_ != b.space_) throw SpaceMismatch();
  }

 private:
  SplitSpace space_;
  Matrix m_;
};

inline BlockOperator commutator(const BlockOperator& a, const BlockOperator& b) {
  BlockOperator::check_space(a, b);
  return BlockOperator(a.space(), a.entries() * b.entries() - b.entries() * a.entries());
}

// d = i(p+ - p-), the distinguished element of the split.
inline Matrix d_matrix(SplitSpace space) {
  Eigen::VectorXcd diag(space.dim());
  diag.head(space.n_plus).setConstant(Complex(0, 1));
  diag.tail(space.n_minus).setConstant(Complex(0, -1));
  return diag.asDiagonal();
}

inline BlockOperator d_operator(SplitSpace space) {
  return BlockOperator(space, d_matrix(space));
}

// [d, a] has blocks (0, 2i a(+-); -2i a(-+), 0); computed in closed form.
inline BlockOperator commutator_with_d(const BlockOperator& a) {
  const Complex two_i(0, 2);
  return BlockOperator::off_diagonal(a.space(), two_i * a.pm(), -two_i * a.mp());
}

inline double skew_defect(const Matrix& m) {
  return (m + m.adjoint()).cwiseAbs().maxCoeff();
}

inline double hermitian_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace resgrass
