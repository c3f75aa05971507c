#include <doctest.h>

#include <cmath>

#include "resgrass/grassmann.hpp"
#include "resgrass/linalg.hpp"
#include "resgrass/norms.hpp"
#include "resgrass/random_inputs.hpp"
#include "test_helpers.hpp"

using namespace resgrass;
using namespace resgrass::testing;

namespace {
const SplitSpace s11(1, 1);

Matrix unit_columns(int n, std::initializer_list<int> which) {
  Matrix m = Matrix::Zero(n, static_cast<int>(which.size()));
  int j = 0;
  for (int i : which) m(i, j++) = 1.0;
  return m;
}
}  // namespace

TEST_CASE("grassmann_from_basis") {
  const SplitSpace s(2, 2);
  const GrassmannPoint hp = grassmann_from_basis(unit_columns(4, {0, 1}), s);
  CHECK(max_abs_diff(hp.projector().entries(),
                     GrassmannPoint::h_plus(s).projector().entries()) < 1e-14);
  CHECK(hp.dim_w() == 2);

  const GrassmannPoint e2 = grassmann_from_basis(unit_columns(2, {1}), s11);
  CHECK(max_abs_diff(e2.projector().entries(), make_matrix({{0, 0}, {0, 1}})) < 1e-14);

  Matrix diag_col(2, 1);
  diag_col << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const GrassmannPoint mix = grassmann_from_basis(diag_col, s11);
  CHECK(max_abs_diff(mix.projector().entries(), make_matrix({{0.5, 0.5}, {0.5, 0.5}})) <
        1e-14);

  Matrix dependent(4, 2);
  dependent.setZero();
  dependent.col(0)(0) = 1.0;
  dependent.col(1)(0) = 2.0;
  CHECK_THROWS_AS(grassmann_from_basis(dependent, s), RankDeficient);

  SUBCASE("projector round trip through an orthonormal basis of Ran p_W") {
    for (int t = 0; t < 20; ++t) {
      Rng rng = trial_rng(211, t);
      const GrassmannPoint w = random_grassmann(rng, s, 2);
      Eigen::SelfAdjointEigenSolver<Matrix> es(w.projector().entries());
      const Matrix basis = es.eigenvectors().rightCols(2);
      const GrassmannPoint again = grassmann_from_basis(basis, s);
      CHECK(max_abs_diff(again.projector().entries(), w.projector().entries()) < 1e-12);
    }
  }
}

TEST_CASE("component index") {
  const SplitSpace s(2, 3);
  CHECK(component_index(GrassmannPoint::h_plus(s)) == 0);
  CHECK(component_index(grassmann_from_basis(unit_columns(5, {0, 1, 2}), s)) == 1);
  CHECK(component_index(grassmann_from_basis(unit_columns(5, {0}), s)) == -1);

  SUBCASE("invariant under the unitary action") {
    for (int t = 0; t < 20; ++t) {
      Rng rng = trial_rng(223, t);
      std::uniform_int_distribution<int> dims(1, 4);
      const int k = dims(rng);
      const GrassmannPoint w = random_grassmann(rng, s, k);
      const UnitaryElement g = random_unitary(rng, s);
      CHECK(component_index(act(g, w)) == component_index(w));
    }
  }
}

TEST_CASE("phi_gamma") {
  const SplitSpace s(2, 2);
  const auto base = phi_gamma(GrassmannPoint::h_plus(s), 1.5);
  CHECK(max_abs_diff(base.mu.op().entries(), Matrix::Zero(4, 4)) == 0.0);
  CHECK(base.gamma == 1.5);

  const GrassmannPoint e2 = grassmann_from_basis(unit_columns(2, {1}), s11);
  const auto img = phi_gamma(e2, 1.0);
  CHECK(max_abs_diff(img.mu.op().entries(), make_matrix({{-2.0 * I, 0}, {0, 2.0 * I}})) <
        1e-14);

  CHECK_THROWS_AS(phi_gamma(e2, 0.0), ZeroGamma);

  SUBCASE("injective on distinct sampled points") {
    Rng rng = trial_rng(227, 0);
    for (int t = 0; t < 20; ++t) {
      const GrassmannPoint w1 = random_grassmann(rng, s, 2);
      const GrassmannPoint w2 = random_grassmann(rng, s, 2);
      const double proj_dist = (w1.projector().entries() - w2.projector().entries()).norm();
      const double img_dist =
          predual_norm(phi_gamma(w1, 2.0).mu.op() - phi_gamma(w2, 2.0).mu.op());
      if (proj_dist > 1e-8) CHECK(img_dist > 0.0);
    }
  }
}

TEST_CASE("unitary action on points") {
  const SplitSpace s(2, 2);
  Rng rng = trial_rng(229, 0);
  const GrassmannPoint w = random_grassmann(rng, s, 2);
  const auto same = act(UnitaryElement(BlockOperator::identity(s)), w);
  CHECK(max_abs_diff(same.projector().entries(), w.projector().entries()) == 0.0);

  const UnitaryElement rot(make_op(s11, {{0, 1}, {-1, 0}}));
  const auto moved = act(rot, GrassmannPoint::h_plus(s11));
  CHECK(max_abs_diff(moved.projector().entries(), make_matrix({{0, 0}, {0, 1}})) < 1e-14);

  SUBCASE("composition") {
    const UnitaryElement g1 = random_unitary(rng, s);
    const UnitaryElement g2 = random_unitary(rng, s);
    const UnitaryElement g12(g1.op() * g2.op());
    CHECK(max_abs_diff(act(g12, w).projector().entries(),
                       act(g1, act(g2, w)).projector().entries()) < 1e-12);
  }
}

TEST_CASE("kaehler form at the base point") {
  TangentAtBase x{make_matrix({{1}})};
  TangentAtBase y{make_matrix({{I}})};
  CHECK(omega_gr(x, x) == 0.0);
  CHECK(omega_gr(x, y) == doctest::Approx(2.0));

  SUBCASE("real bilinearity") {
    Rng rng = trial_rng(233, 0);
    const TangentAtBase a{random_complex(rng, 3, 2)};
    const TangentAtBase b{random_complex(rng, 3, 2)};
    const TangentAtBase c{random_complex(rng, 3, 2)};
    const TangentAtBase ab{a.x * 2.0 + b.x * -0.75};
    CHECK(std::abs(omega_gr(ab, c) - (2.0 * omega_gr(a, c) - 0.75 * omega_gr(b, c))) < 1e-12);
  }

  SUBCASE("shape mismatch") {
    Rng rng = trial_rng(234, 0);
    CHECK_THROWS_AS(omega_gr(x, TangentAtBase{random_complex(rng, 2, 2)}), ShapeMismatch);
  }
}

TEST_CASE("homogeneous form and the tangent identification") {
  const RestrictedElement a = tangent_lift(TangentAtBase{make_matrix({{1}})}, s11);
  const RestrictedElement b = tangent_lift(TangentAtBase{make_matrix({{I}})}, s11);
  CHECK(omega_gr_hom(a, a) == 0.0);
  CHECK(omega_gr_hom(a, b) == doctest::Approx(2.0));

  SUBCASE("matches omega_gr through the lift") {
    for (int t = 0; t < 50; ++t) {
      Rng rng = trial_rng(239, t);
      const SplitSpace s(2, 3);
      const TangentAtBase x{random_complex(rng, 3, 2)};
      const TangentAtBase y{random_complex(rng, 3, 2)};
      CHECK(std::abs(omega_gr_hom(tangent_lift(x, s), tangent_lift(y, s)) - omega_gr(x, y)) <
            1e-10);
      CHECK(max_abs_diff(tangent_part(tangent_lift(x, s)).x, x.x) < 1e-15);
    }
  }

  SUBCASE("vanishes on block-diagonal arguments") {
    Rng rng = trial_rng(241, 0);
    const SplitSpace s(2, 2);
    const Matrix dp = random_skew(rng, 2);
    const Matrix dm = random_skew(rng, 2);
    const RestrictedElement diag(BlockOperator::block_diagonal(s, dp, dm));
    const RestrictedElement any = random_restricted(rng, s);
    CHECK(std::abs(omega_gr_hom(diag, any)) < 1e-12);
    CHECK(std::abs(omega_gr_hom(any, diag)) < 1e-12);
  }
}

TEST_CASE("geodesics") {
  const GrassmannPoint hp = GrassmannPoint::h_plus(s11);
  const RestrictedElement x(
      BlockOperator::off_diagonal(s11, make_matrix({{-M_PI / 2}}), make_matrix({{M_PI / 2}})));

  const auto still = geodesic(hp, x, 0.0);
  CHECK(max_abs_diff(still.projector().entries(), hp.projector().entries()) < 1e-14);

  const auto quarter = geodesic(hp, x, 1.0);
  CHECK(max_abs_diff(quarter.projector().entries(), make_matrix({{0, 0}, {0, 1}})) < 1e-14);

  const auto half = geodesic(hp, x, 2.0);
  CHECK(max_abs_diff(half.projector().entries(), hp.projector().entries()) < 1e-10);

  SUBCASE("directions with diagonal mass are rejected") {
    const RestrictedElement bad(d_operator(s11));
    CHECK_THROWS_AS(geodesic(hp, bad, 1.0), NotTransverse);
  }
}

TEST_CASE("grassmann_log") {
  const SplitSpace s33(3, 3);
  Rng rng = trial_rng(251, 0);

  SUBCASE("log at the same point is zero") {
    const GrassmannPoint w = random_grassmann(rng, s33, 3);
    const RestrictedElement x = grassmann_log(w, w);
    CHECK(x.op().entries().norm() < 1e-10);
  }

  SUBCASE("the pi/2 textbook pair") {
    const GrassmannPoint hp = GrassmannPoint::h_plus(s11);
    const GrassmannPoint e2 = grassmann_from_basis(unit_columns(2, {1}), s11);
    const RestrictedElement x = grassmann_log(hp, e2);
    CHECK(std::abs(std::abs(x.op().entries()(1, 0)) - M_PI / 2) < 1e-12);
    const auto back = geodesic(hp, x, 1.0);
    CHECK(max_abs_diff(back.projector().entries(), e2.projector().entries()) < 1e-10);
  }

  SUBCASE("round trip on random pairs in Gr(2, C^6)") {
    for (int t = 0; t < 100; ++t) {
      Rng r2 = trial_rng(257, t);
      const GrassmannPoint w1 = random_grassmann(r2, s33, 2);
      const GrassmannPoint w2 = random_grassmann(r2, s33, 2);
      const RestrictedElement x = grassmann_log(w1, w2);
      const auto reached = geodesic(w1, x, 1.0);
      CHECK(max_abs_diff(reached.projector().entries(), w2.projector().entries()) < 1e-8);
    }
  }

  SUBCASE("dimension mismatch") {
    const GrassmannPoint w1 = random_grassmann(rng, s33, 2);
    const GrassmannPoint w2 = random_grassmann(rng, s33, 3);
    CHECK_THROWS_AS(grassmann_log(w1, w2), DimensionMismatch);
  }
}

TEST_CASE("pullback factor") {
  Rng rng = trial_rng(263, 0);
  const RestrictedElement a(make_op(s11, {{0, 1}, {-1, 0}}));
  const RestrictedElement b(make_op(s11, {{0, I}, {I, 0}}));

  const auto same = pullback_check(1.0, a, a);
  CHECK(same.lhs == 0.0);
  CHECK(same.rhs == 0.0);

  const auto pair = pullback_check(1.0, a, b);
  CHECK(pair.lhs == doctest::Approx(-4.0));
  CHECK(pair.rhs == doctest::Approx(-4.0));

  const auto scaled = pullback_check(-3.0, a, b);
  CHECK(scaled.lhs == doctest::Approx(12.0));
  CHECK(scaled.rhs == doctest::Approx(12.0));

  SUBCASE("exact agreement on random data") {
    const SplitSpace s(3, 2);
    const double gammas[10] = {1, -1, 0.5, -0.5, 3, 2, -2, 0.25, -1.5, 5};
    for (int t = 0; t < 100; ++t) {
      const RestrictedElement u = random_off_diagonal(rng, s);
      const RestrictedElement v = random_off_diagonal(rng, s);
      for (double gamma : gammas) {
        const auto sides = pullback_check(gamma, u, v);
        CHECK(std::abs(sides.lhs - sides.rhs) < 1e-12);
      }
    }
  }

  SUBCASE("diagonal mass is rejected") {
    const RestrictedElement bad(d_operator(s11));
    CHECK_THROWS_AS(pullback_check(1.0, bad, bad), NotTransverse);
  }
}
