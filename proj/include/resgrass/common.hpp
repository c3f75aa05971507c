#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace resgrass {

using Complex = std::complex<double>;

// Truncation of the polarized space H = H+ (+) H-.
struct SplitSpace {
  int n_plus = 1;
  int n_minus = 1;

  SplitSpace() = default;
  SplitSpace(int np, int nm) : n_plus(np), n_minus(nm) {
    if (np < 1 || nm < 1)
      throw std::invalid_argument("SplitSpace: dimensions must be >= 1");
  }

  int dim() const { return n_plus + n_minus; }

  friend bool operator==(const SplitSpace& a, const SplitSpace& b) {
    return a.n_plus == b.n_plus && a.n_minus == b.n_minus;
  }
  friend bool operator!=(const SplitSpace& a, const SplitSpace& b) { return !(a == b); }
};

// Numerical thresholds used across the library. Every operation that takes a
// tolerance accepts an override of this record.
struct Tolerances {
  double herm = 1e-12;   // skew/Hermitian symmetry defect (entrywise)
  double unit = 1e-10;   // unitarity / projector defect
  double exp = 1e-10;    // exponential, polar reconstruction
  double pos = 1e-10;    // positivity slack
  double sing = 1e-12;   // invertibility threshold on singular values
  double rank = 1e-9;    // relative SVD cutoff for kernel/range decisions
};

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RESGRASS_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                              \
    explicit Name(const std::string& msg = #Name) : Error(msg) {}    \
  }

RESGRASS_DEFINE_ERROR(SpaceMismatch);
RESGRASS_DEFINE_ERROR(ShapeMismatch);
RESGRASS_DEFINE_ERROR(NotHermitian);
RESGRASS_DEFINE_ERROR(NotUnitary);
RESGRASS_DEFINE_ERROR(SingularInput);
RESGRASS_DEFINE_ERROR(ZeroGamma);
RESGRASS_DEFINE_ERROR(RankDeficient);
RESGRASS_DEFINE_ERROR(DimensionMismatch);
RESGRASS_DEFINE_ERROR(NotReachable);
RESGRASS_DEFINE_ERROR(NotTransverse);
RESGRASS_DEFINE_ERROR(GapViolation);
RESGRASS_DEFINE_ERROR(RankTooLarge);
RESGRASS_DEFINE_ERROR(BadStructure);
RESGRASS_DEFINE_ERROR(BadParameters);
RESGRASS_DEFINE_ERROR(NonFiniteEvaluation);
RESGRASS_DEFINE_ERROR(ParseError);

#undef RESGRASS_DEFINE_ERROR

}  // namespace resgrass
