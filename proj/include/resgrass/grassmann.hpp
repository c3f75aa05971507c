#pragma once

#include "resgrass/elements.hpp"
#include "resgrass/lie_poisson.hpp"

namespace resgrass {

// Orthonormalize the columns and return the projector onto their span.
GrassmannPoint grassmann_from_basis(const Matrix& columns, SplitSpace space,
                                    const Tolerances& tol = {});

// dim W - n+, the finite stand-in for the Fredholm index of p+|_W.
int component_index(const GrassmannPoint& W);

// W -> (2 i gamma (p_W - p+), gamma), the embedding of the Grassmannian into
// the affine coadjoint orbit of (0, gamma).
ExtendedElement phi_gamma(const GrassmannPoint& W, double gamma, const Tolerances& tol = {});

GrassmannPoint act(const UnitaryElement& g, const GrassmannPoint& W, const Tolerances& tol = {});

// Kaehler form at the base point: 2 Im Tr(X* Y).
double omega_gr(const TangentAtBase& X, const TangentAtBase& Y);

// Homogeneous form on the algebra: -2 s(A, B). Vanishes when either argument
// is block diagonal.
double omega_gr_hom(const RestrictedElement& A, const RestrictedElement& B);

// Lift of a tangent vector X in S2(H+, H-) to the off-diagonal element A with
// A(-+) = X/2; with this normalization omega_gr_hom(lift X, lift Y) equals
// omega_gr(X, Y).
RestrictedElement tangent_lift(const TangentAtBase& X, SplitSpace space);
TangentAtBase tangent_part(const RestrictedElement& A);

// beta(t) = exp(tX).W for X in the complement m_W of the isotropy algebra of W
// (both diagonal compressions of X vanish).
GrassmannPoint geodesic(const GrassmannPoint& W, const RestrictedElement& X, double t,
                        const Tolerances& tol = {});

// Principal-angle construction of X in m_{W1} with exp(X).W1 = W2. Fails with
// NotReachable when some principal angle reaches pi/2.
RestrictedElement grassmann_log(const GrassmannPoint& W1, const GrassmannPoint& W2,
                                const Tolerances& tol = {});

struct PullbackSides {
  double lhs = 0.0;  // orbit symplectic form on (gamma [A,d], 0), (gamma [B,d], 0)
  double rhs = 0.0;  // (gamma/2) omega_gr_hom(A, B)
};

// The two evaluations agree identically; this surfaces the gamma/2 pullback
// factor of the orbit form.
PullbackSides pullback_check(double gamma, const RestrictedElement& A,
                             const RestrictedElement& B);

}  // namespace resgrass
