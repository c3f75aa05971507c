#pragma once

#include <cstdint>
#include <random>

#include "resgrass/elements.hpp"

namespace resgrass {

// splitmix64; used to derive independent per-trial seeds so that parallel
// trial execution is reproducible regardless of thread count.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

using Rng = std::mt19937_64;

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return Rng(mix_seed(seed, trial));
}

Matrix random_complex(Rng& rng, int rows, int cols);
Matrix random_skew(Rng& rng, int n);
Matrix random_hermitian(Rng& rng, int n);

// Haar-style unitary from the QR of a Gaussian matrix, phases fixed for
// determinism.
Matrix random_unitary_matrix(Rng& rng, int n);
UnitaryElement random_unitary(Rng& rng, SplitSpace space);
// Unitary commuting with d (block diagonal).
UnitaryElement random_diag_unitary(Rng& rng, SplitSpace space);

RestrictedElement random_restricted(Rng& rng, SplitSpace space);
PredualElement random_predual(Rng& rng, SplitSpace space);
// Off-diagonal (in m) element.
RestrictedElement random_off_diagonal(Rng& rng, SplitSpace space);

GrassmannPoint random_grassmann(Rng& rng, SplitSpace space, int dim_w);

// Skew rho with i rho = b* b >= 0.
PredualElement random_cone_element(Rng& rng, SplitSpace space);

// Skew element whose diagonal blocks have spectra separated by at least gap
// and whose off-diagonal block has S2 norm off_norm.
RestrictedElement random_gapped(Rng& rng, SplitSpace space, double gap, double off_norm);

// Element of the neighborhood V0 (spectra within radius of +-i, off-diagonal
// S2 norm below off_norm < 2/3).
RestrictedElement random_v0(Rng& rng, SplitSpace space, double radius = 0.3,
                            double off_norm = 0.6);

}  // namespace resgrass
