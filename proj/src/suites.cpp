#include "resgrass/suites.hpp"

#include <algorithm>
#include <cmath>

#include "resgrass/grassmann.hpp"
#include "resgrass/lie_poisson.hpp"
#include "resgrass/random_inputs.hpp"

namespace resgrass {

namespace {

std::uint64_t suite_seed(std::uint64_t seed, int tag, SplitSpace space) {
  return mix_seed(seed, static_cast<std::uint64_t>(tag) * 0x10001ULL +
                            static_cast<std::uint64_t>(space.n_plus) * 64 + space.n_minus);
}

double max_abs(const BlockOperator& op) { return op.entries().cwiseAbs().maxCoeff(); }

}  // namespace

SuiteResult cocycle_suite(SplitSpace space, int trials, std::uint64_t seed, Exec exec) {
  const std::uint64_t s0 = suite_seed(seed, 1, space);
  const double err = max_over(
      static_cast<std::size_t>(trials),
      [&](std::size_t i) {
        Rng rng = trial_rng(s0, i);
        const RestrictedElement a = random_restricted(rng, space);
        const RestrictedElement b = random_restricted(rng, space);
        const RestrictedElement c = random_restricted(rng, space);
        const double antisym = std::abs(cocycle_s(a, b) + cocycle_s(b, a));
        const RestrictedElement ab(commutator(a.op(), b.op()));
        const RestrictedElement bc(commutator(b.op(), c.op()));
        const RestrictedElement ca(commutator(c.op(), a.op()));
        const double cocycle =
            std::abs(cocycle_s(ab, c) + cocycle_s(bc, a) + cocycle_s(ca, b));
        return std::max(antisym, cocycle);
      },
      exec);
  return SuiteResult{"cocycle", space, trials, err, 1e-10};
}

SuiteResult jacobi_suite(SplitSpace space, int trials, std::uint64_t seed, Exec exec) {
  const std::uint64_t s0 = suite_seed(seed, 2, space);
  const double err = max_over(
      static_cast<std::size_t>(trials),
      [&](std::size_t i) {
        Rng rng = trial_rng(s0, i);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        const ExtendedAlgebraElement x(random_restricted(rng, space), u(rng));
        const ExtendedAlgebraElement y(random_restricted(rng, space), u(rng));
        const ExtendedAlgebraElement z(random_restricted(rng, space), u(rng));
        const ExtendedAlgebraElement j1 = extended_bracket(extended_bracket(x, y), z);
        const ExtendedAlgebraElement j2 = extended_bracket(extended_bracket(y, z), x);
        const ExtendedAlgebraElement j3 = extended_bracket(extended_bracket(z, x), y);
        const double mat = max_abs(j1.a.op() + j2.a.op() + j3.a.op());
        const double scal = std::abs(j1.t + j2.t + j3.t);
        return std::max(mat, scal);
      },
      exec);
  return SuiteResult{"jacobi", space, trials, err, 1e-10};
}

SuiteResult sigma_hom_suite(SplitSpace space, int trials, std::uint64_t seed, Exec exec) {
  const std::uint64_t s0 = suite_seed(seed, 3, space);
  const double err = max_over(
      static_cast<std::size_t>(trials),
      [&](std::size_t i) {
        Rng rng = trial_rng(s0, i);
        const UnitaryElement g1 = random_unitary(rng, space);
        const UnitaryElement g2 = random_unitary(rng, space);
        const UnitaryElement g12(g1.op() * g2.op());

        const Matrix& m1 = g1.op().entries();
        const Matrix lhs = sigma(g12).op().entries();
        const Matrix rhs = m1 * sigma(g2).op().entries() * m1.adjoint() +
                           sigma(g1).op().entries();
        double e = (lhs - rhs).cwiseAbs().maxCoeff();

        std::uniform_real_distribution<double> u(-2.0, 2.0);
        const ExtendedElement x(random_predual(rng, space), u(rng));
        const ExtendedElement once = affine_action(g12, x);
        const ExtendedElement twice = affine_action(g1, affine_action(g2, x));
        e = std::max(e, max_abs(once.mu.op() - twice.mu.op()));
        e = std::max(e, std::abs(once.gamma - twice.gamma));
        return e;
      },
      exec);
  return SuiteResult{"sigma-homomorphism", space, trials, err, 1e-10};
}

SuiteResult equivariance_suite(SplitSpace space, int trials, std::uint64_t seed, Exec exec) {
  const std::uint64_t s0 = suite_seed(seed, 4, space);
  const double err = max_over(
      static_cast<std::size_t>(trials),
      [&](std::size_t i) {
        Rng rng = trial_rng(s0, i);
        std::uniform_int_distribution<int> dims(1, space.dim() - 1);
        std::uniform_real_distribution<double> gammas(0.25, 3.0);
        const int k = dims(rng);
        const double gamma = gammas(rng) * (i % 2 ? 1.0 : -1.0);
        const UnitaryElement g = random_unitary(rng, space);
        const GrassmannPoint w = random_grassmann(rng, space, k);

        const ExtendedElement lhs = phi_gamma(act(g, w), gamma);
        const ExtendedElement rhs = affine_action(g, phi_gamma(w, gamma));
        return std::max(max_abs(lhs.mu.op() - rhs.mu.op()), std::abs(lhs.gamma - rhs.gamma));
      },
      exec);
  return SuiteResult{"phi-equivariance", space, trials, err, 1e-10};
}

SuiteResult pullback_suite(SplitSpace space, int trials, std::uint64_t seed, Exec exec) {
  static constexpr double kGammas[] = {1.0, -1.0, 0.5, -0.5, 3.0};
  const std::uint64_t s0 = suite_seed(seed, 5, space);
  const double err = max_over(
      static_cast<std::size_t>(trials) * 5,
      [&](std::size_t i) {
        Rng rng = trial_rng(s0, i / 5);
        const RestrictedElement a = random_off_diagonal(rng, space);
        const RestrictedElement b = random_off_diagonal(rng, space);
        const PullbackSides sides = pullback_check(kGammas[i % 5], a, b);
        return std::abs(sides.lhs - sides.rhs);
      },
      exec);
  return SuiteResult{"pullback-factor", space, trials, err, 1e-12};
}

std::vector<SuiteResult> run_identity_suites(const std::vector<SplitSpace>& sizes, int trials,
                                             std::uint64_t seed, Exec exec) {
  std::vector<SuiteResult> out;
  for (const SplitSpace& space : sizes) {
    out.push_back(cocycle_suite(space, trials, seed, exec));
    out.push_back(jacobi_suite(space, trials, seed, exec));
    out.push_back(sigma_hom_suite(space, trials, seed, exec));
    out.push_back(equivariance_suite(space, trials, seed, exec));
    out.push_back(pullback_suite(space, trials, seed, exec));
  }
  return out;
}

}  // namespace resgrass
