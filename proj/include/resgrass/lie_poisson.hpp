#pragma once

#include <vector>

#include "resgrass/elements.hpp"
#include "resgrass/parallel.hpp"

namespace resgrass {

// Real duality pairing <rho, a> = Re Tr(rho a). The imaginary part vanishes
// for skew pairs and is checked against 1e-12.
double pairing(const PredualElement& rho, const RestrictedElement& a);

// Schwinger-type two-cocycle s(A, B) = Tr(A [d, B]).
double cocycle_s(const RestrictedElement& A, const RestrictedElement& B);

// Bracket of the one-dimensional central extension:
// [(A,a), (B,b)] = ([A,B], -s(A,B)).
ExtendedAlgebraElement extended_bracket(const ExtendedAlgebraElement& x,
                                        const ExtendedAlgebraElement& y);

// Infinitesimal affine coadjoint action: ([A, mu] + gamma [d, A], 0).
ExtendedElement coad(const RestrictedElement& A, const ExtendedElement& x);

// sigma(g) = g d g* - d; lands in the predual.
PredualElement sigma(const UnitaryElement& g, const Tolerances& tol = {});

// Affine coadjoint action g.(mu, gamma) = (g mu g* + gamma sigma(g), gamma).
// The "+" on the sigma term makes the orbit of (0, gamma) equal
// {(gamma sigma(g), gamma)} and the Grassmannian embedding equivariant.
ExtendedElement affine_action(const UnitaryElement& g, const ExtendedElement& x,
                              const Tolerances& tol = {});

// The canonical real basis element of u(N) with flat index idx, as a matrix.
// Ordering: i E_kk for k < N, then for k < l the pair (E_kl - E_lk)/sqrt(2),
// i (E_kl + E_lk)/sqrt(2). All are orthonormal for Re Tr(X* Y).
Matrix skew_basis_element(int n, int idx);
int skew_basis_size(int n);

// Coordinates of a skew matrix in that basis, and back.
Eigen::VectorXd skew_to_coords(const Matrix& x);
Matrix coords_to_skew(int n, const Eigen::VectorXd& v);

// Central-difference Frechet gradient of h at x, reconstructed entrywise from
// pairings against the canonical predual basis.
RestrictedElement fd_gradient(const ScalarField& h, const ExtendedElement& x,
                              Exec exec = default_exec());

// {f, g}(mu, gamma) = <mu, [Gf, Gg]> - gamma s(Gf, Gg).
double poisson_bracket(const ScalarField& f, const ScalarField& g, const ExtendedElement& x,
                       Exec exec = default_exec());

// X_h(mu, gamma) = ([G, mu] - gamma [G, d], 0) with G the mu-gradient of h.
ExtendedElement hamiltonian_field(const ScalarField& h, const ExtendedElement& x,
                                  Exec exec = default_exec());

// Orthonormal real basis of the kernel of X -> [X, mu] - gamma [X, d] on u(N).
std::vector<RestrictedElement> isotropy_algebra(const ExtendedElement& x,
                                                const Tolerances& tol = {},
                                                Exec exec = default_exec());

// Orthonormal real basis of the range of the same map.
std::vector<PredualElement> characteristic_subspace(const ExtendedElement& x,
                                                    const Tolerances& tol = {},
                                                    Exec exec = default_exec());

}  // namespace resgrass
