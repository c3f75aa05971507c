#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "resgrass/elements.hpp"
#include "resgrass/linalg.hpp"

namespace resgrass {

struct RiccatiReport {
  Matrix k;             // n- x n+
  double residual = 0;  // ||k rho(+-) k + k rho(++) - rho(--) k - rho(-+)||_2
  int iterations = 0;
  double gap = 0;  // dist(spec rho(++), spec rho(--))
  std::vector<double> residual_history;
};

// NoConvergence carries the state reached when the iteration cap is hit.
struct NoConvergence : Error {
  RiccatiReport report;
  explicit NoConvergence(RiccatiReport r)
      : Error("riccati_solve: no convergence within the iteration cap"),
        report(std::move(r)) {}
};

// Distance between the (purely imaginary) spectra of the diagonal blocks.
double spectral_gap(const RestrictedElement& rho);

// Fixed-point iteration for k rho(+-) k + k rho(++) - rho(--) k = rho(-+),
// each step solving the Sylvester part exactly in the eigenbases of the
// normal diagonal blocks. Requires ||rho(+-)||_2 < gap/2 unless forced.
RiccatiReport riccati_solve(const RestrictedElement& rho, double tol = 1e-12,
                            int max_iter = 200, bool force = false);

struct BlockDiagonalization {
  UnitaryElement u;
  RestrictedElement diag;  // u* rho u, commutes with d
  Matrix k;
  RiccatiReport report;
};

// Riccati solve, then the polar decomposition of g = (id, k*; k, -id); the
// unitary factor conjugates rho into the commutant of d.
BlockDiagonalization block_diagonalize(const RestrictedElement& rho, double tol = 1e-12,
                                       int max_iter = 200, const Tolerances& tols = {});

// Membership in the neighborhood V0 of d: both block spectra within 1/3 of
// +-i and off-diagonal S2 norms below 2/3. Implies the Riccati hypotheses.
bool in_neighborhood_v0(const RestrictedElement& rho);

struct HinkkanenResult {
  bool ok = true;
  std::optional<std::pair<int, int>> first_violation;  // 1-based (m, n)
};

// Matrix-coefficient decay conditions in the reordered basis:
// |rho_{m+1,n+1}| <= t |rho_{m,n}| and, off the diagonal,
// |rho_{m,n}|^2 <= s^2/(mn)^2 |rho_mm rho_nn|. Requires 0 < t < 1 and
// 0 < s <= 3(1-t)/100.
HinkkanenResult hinkkanen_check(const PredualElement& rho, const std::vector<int>& order,
                                double t, double s);

struct CareyConditions {
  bool commutes = false;   // ||[p_W, rho]||_2 < 1e-10
  bool invariant = false;  // ||(1 - p_W) rho p_W||_2 < 1e-10
};

CareyConditions carey_conditions(const RestrictedElement& rho, const GrassmannPoint& W);

struct SubalgebraChecks {
  bool bracket_closed = false;
  bool intersection_ok = false;
  bool sum_ok = false;
};

struct SubalgebraReport {
  std::vector<Matrix> h0_basis;  // skew-Hermitian real basis of the centralizer
  std::vector<Matrix> k_basis;   // complex basis of Ran E([0, inf)) for -i ad(a)
  SubalgebraChecks checks;
};

// Spectral subalgebra k of the derivation ad(a): in the eigenbasis of a the
// matrix unit E_jk has ad-eigenvalue i(theta_j - theta_k); k keeps the
// nonnegative part, boundary assigned to k. Checks: [k,k] in k,
// k meet conj(k) = complexified centralizer, k + conj(k) = gl(N).
SubalgebraReport spectral_subalgebra(const RestrictedElement& a, const Tolerances& tol = {});

}  // namespace resgrass
