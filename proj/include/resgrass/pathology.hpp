#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "resgrass/linalg.hpp"
#include "resgrass/parallel.hpp"

namespace resgrass {

struct UnboundedReport {
  int n = 0;
  double res_norm = 0;     // restricted norm of exp(rho_n); equals 1 + 2 sqrt(2n)
  double lower_bound = 0;  // sqrt(n)
};

struct UnboundedFamily {
  RestrictedElement rho_n;
  UnitaryElement u_n;
  UnboundedReport report;
};

// rho_n = (0, (pi/2) v_n; -(pi/2) v_n*, 0) with v_n a rank-n partial isometry
// H- -> H+. The exponentials have restricted norm 1 + 2 sqrt(2n), growing
// without bound in n.
UnboundedFamily build_unbounded_family(int n, SplitSpace space);

struct ConeSpanResult {
  double max_ratio = 0;  // max over samples of predual_norm / ||.||_1 on the cone
  PredualElement witness;
  double witness_ratio = 0;
};

// Samples skew rho with i rho = b* b >= 0 and records the worst ratio of the
// predual norm to the trace norm; a balanced rank-one witness attains the
// off-diagonal-heavy extreme.
ConeSpanResult cone_span_demo(int samples, SplitSpace space, std::uint64_t seed,
                              Exec exec = default_exec());

struct PairedIndexMap {
  // Position of e_{-k} in H+ and of e_k in H- for each pair k = 0..N-1.
  std::vector<int> plus_pos;
  std::vector<int> minus_pos;

  static PairedIndexMap standard(int n);
};

// Real basis of {B in u | [B, J] = 0} for an anti-diagonal J on the paired
// space (J e_k in R e_{-k}, all coefficients nonzero). Computed as a kernel
// solve in the eigenbasis of J. For pairwise distinct coefficients the
// dimension is 2N: the J-span plus the paired diagonals.
std::vector<RestrictedElement> centralizer_of_J(const RestrictedElement& J,
                                                const PairedIndexMap& order,
                                                const Tolerances& tol = {});

struct CartanReport {
  int N = 0;
  double j_s2 = 0;         // ||J||_2
  double j_s1 = 0;         // ||J||_1
  double diag_s1 = 0;      // ||g J g*||_1 for the diagonalizer g
  double offblock_s2 = 0;  // ||g(+-)||_2 + ||g(-+)||_2
  bool bound_ok = false;   // diag_s1 <= 2 j_s2 offblock_s2 (+ slack)
};

// Quantitative obstruction behind the failure of Cartan conjugacy: any
// unitary that diagonalizes J must carry off-diagonal mass at least
// j_s1 / (2 j_s2), which diverges with N for coeff(k) = 1/k.
CartanReport cartan_witness(int N, const std::function<double(int)>& coeff);

inline double default_cartan_coeff(int k) { return 1.0 / k; }

}  // namespace resgrass
