#include <doctest.h>

#include <cmath>

#include "resgrass/linalg.hpp"
#include "resgrass/norms.hpp"
#include "resgrass/positivity.hpp"
#include "resgrass/random_inputs.hpp"
#include "test_helpers.hpp"

using namespace resgrass;
using namespace resgrass::testing;

namespace {
const SplitSpace s11(1, 1);
}

TEST_CASE("split space and d") {
  const SplitSpace s(2, 3);
  const Matrix d = d_matrix(s);
  CHECK(max_abs_diff(d.adjoint(), -d) == 0.0);
  CHECK(max_abs_diff(d * d, -Matrix::Identity(5, 5)) == 0.0);
  CHECK_THROWS_AS(SplitSpace(0, 1), std::invalid_argument);
}

TEST_CASE("block views reassemble the matrix") {
  const SplitSpace s(2, 3);
  Rng rng = trial_rng(7, 0);
  const BlockOperator a(s, random_complex(rng, 5, 5));
  Matrix re = Matrix::Zero(5, 5);
  re.topLeftCorner(2, 2) = a.pp();
  re.topRightCorner(2, 3) = a.pm();
  re.bottomLeftCorner(3, 2) = a.mp();
  re.bottomRightCorner(3, 3) = a.mm();
  CHECK(max_abs_diff(re, a.entries()) == 0.0);
}

TEST_CASE("schatten norms") {
  const SplitSpace s(1, 1);
  CHECK(schatten_norm(BlockOperator::zero(s), Schatten::one) == 0.0);
  CHECK(schatten_norm(BlockOperator::zero(s), Schatten::two) == 0.0);
  CHECK(schatten_norm(BlockOperator::zero(s), Schatten::inf) == 0.0);
  CHECK(schatten_norm(BlockOperator::identity(s), Schatten::one) == doctest::Approx(2.0));
  CHECK(schatten_norm(make_matrix({{3, 0}, {0, 4}}), Schatten::two) == doctest::Approx(5.0));

  SUBCASE("nesting inf <= two <= one") {
    for (int t = 0; t < 25; ++t) {
      Rng rng = trial_rng(11, t);
      const Matrix x = random_complex(rng, 5, 5);
      const double n1 = schatten_norm(x, Schatten::one);
      const double n2 = schatten_norm(x, Schatten::two);
      const double ni = schatten_norm(x, Schatten::inf);
      CHECK(ni <= n2 + 1e-12);
      CHECK(n2 <= n1 + 1e-12);
    }
  }
}

TEST_CASE("restricted norm") {
  CHECK(restricted_norm(d_operator(s11)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(restricted_norm(BlockOperator::identity(s11)) == doctest::Approx(1.0));
  const BlockOperator a = make_op(s11, {{0, -1}, {1, 0}});
  CHECK(restricted_norm(a) == doctest::Approx(1.0 + 2.0 * std::sqrt(2.0)));
}

TEST_CASE("commutator with d closed form") {
  for (int t = 0; t < 10; ++t) {
    Rng rng = trial_rng(13, t);
    const SplitSpace s(2, 3);
    const BlockOperator a(s, random_complex(rng, 5, 5));
    const BlockOperator lhs = commutator_with_d(a);
    const BlockOperator rhs = commutator(d_operator(s), a);
    CHECK(max_abs_diff(lhs.entries(), rhs.entries()) < 1e-14);
  }
}

TEST_CASE("predual norm") {
  CHECK(predual_norm(BlockOperator::zero(s11)) == 0.0);
  CHECK(predual_norm(d_operator(s11)) == doctest::Approx(2.0));
  const BlockOperator off = make_op(s11, {{0, -1}, {1, 0}});
  CHECK(predual_norm(off) == doctest::Approx(2.0));
}

TEST_CASE("trace of a commutator vanishes") {
  for (int t = 0; t < 50; ++t) {
    Rng rng = trial_rng(17, t);
    const SplitSpace s(3, 2);
    const BlockOperator a(s, random_complex(rng, 5, 5));
    const BlockOperator b(s, random_complex(rng, 5, 5));
    CHECK(std::abs(commutator(a, b).trace()) < 1e-12);
  }
}

TEST_CASE("expm") {
  CHECK(max_abs_diff(expm(BlockOperator::zero(s11)).entries(), Matrix::Identity(2, 2)) == 0.0);

  const Matrix ed = expm(d_operator(s11)).entries();
  CHECK(max_abs_diff(ed, make_matrix({{std::polar(1.0, 1.0), 0},
                                      {0, std::polar(1.0, -1.0)}})) < 1e-14);

  const BlockOperator rot = make_op(s11, {{0, M_PI / 2}, {-M_PI / 2, 0}});
  CHECK(max_abs_diff(expm(rot).entries(), make_matrix({{0, 1}, {-1, 0}})) < 1e-14);

  SUBCASE("skew input gives a unitary, with expm(a) expm(-a) = id") {
    for (int t = 0; t < 30; ++t) {
      Rng rng = trial_rng(19, t);
      const SplitSpace s(3, 3);
      const BlockOperator a(s, random_skew(rng, 6));
      const Matrix e = expm(a).entries();
      CHECK(max_abs_diff(e.adjoint() * e, Matrix::Identity(6, 6)) < 1e-10);
      CHECK(max_abs_diff(e * expm(-a).entries(), Matrix::Identity(6, 6)) < 1e-10);
    }
  }

  SUBCASE("non-skew input falls back to scaling and squaring") {
    const BlockOperator n = make_op(s11, {{0, 1}, {0, 0}});
    CHECK(max_abs_diff(expm(n).entries(), make_matrix({{1, 1}, {0, 1}})) < 1e-14);
  }
}

TEST_CASE("exp_offdiagonal") {
  Matrix a(1, 1);
  a(0, 0) = 0.0;
  CHECK(max_abs_diff(exp_offdiagonal(a, s11).op().entries(), Matrix::Identity(2, 2)) == 0.0);
  a(0, 0) = M_PI / 2;
  CHECK(max_abs_diff(exp_offdiagonal(a, s11).op().entries(),
                     make_matrix({{0, 1}, {-1, 0}})) < 1e-15);
  a(0, 0) = M_PI;
  CHECK(max_abs_diff(exp_offdiagonal(a, s11).op().entries(),
                     make_matrix({{-1, 0}, {0, -1}})) < 1e-15);

  SUBCASE("agrees with expm of the assembled element") {
    for (int t = 0; t < 100; ++t) {
      Rng rng = trial_rng(23, t);
      std::uniform_int_distribution<int> dim(1, 8);
      const SplitSpace s(dim(rng), dim(rng));
      Matrix blk = random_complex(rng, s.n_plus, s.n_minus);
      if (t % 3 == 0) blk.col(0).setZero();  // force a kernel
      const BlockOperator rho =
          BlockOperator::off_diagonal(s, blk, Matrix(-blk.adjoint()));
      const Matrix direct = exp_offdiagonal(blk, s).op().entries();
      CHECK(max_abs_diff(direct, expm(rho).entries()) < 1e-10);
    }
  }
}

TEST_CASE("polar decomposition") {
  SUBCASE("unitary input") {
    Rng rng = trial_rng(29, 0);
    const Matrix g = random_unitary_matrix(rng, 4);
    const auto pd = polar(BlockOperator(SplitSpace(2, 2), g));
    CHECK(max_abs_diff(pd.u.op().entries(), g) < 1e-12);
    CHECK(max_abs_diff(pd.s.entries(), Matrix::Identity(4, 4)) < 1e-12);
  }
  SUBCASE("positive diagonal input") {
    const auto pd = polar(make_op(s11, {{2, 0}, {0, 3}}));
    CHECK(max_abs_diff(pd.u.op().entries(), Matrix::Identity(2, 2)) < 1e-14);
    CHECK(max_abs_diff(pd.s.entries(), make_matrix({{2, 0}, {0, 3}})) < 1e-14);
  }
  SUBCASE("riccati-style g") {
    const double k = 0.3;
    const BlockOperator g = make_op(s11, {{1, k}, {k, -1}});
    const auto pd = polar(g);
    const double r = std::sqrt(1.09);
    CHECK(max_abs_diff(pd.s.entries(), r * Matrix::Identity(2, 2)) < 1e-14);
    CHECK(max_abs_diff(pd.u.op().entries(), g.entries() / r) < 1e-14);
  }
  SUBCASE("singular input is rejected") {
    CHECK_THROWS_AS(polar(make_op(s11, {{1, 0}, {0, 0}})), SingularInput);
  }
  SUBCASE("u s reconstructs g") {
    for (int t = 0; t < 100; ++t) {
      Rng rng = trial_rng(31, t);
      const SplitSpace s(2, 2);
      Matrix g = random_complex(rng, 4, 4) + 3.0 * Matrix::Identity(4, 4);
      const auto pd = polar(BlockOperator(s, g));
      const Matrix& u = pd.u.op().entries();
      CHECK(max_abs_diff(u.adjoint() * u, Matrix::Identity(4, 4)) < 1e-10);
      CHECK(hermitian_defect(pd.s.entries()) < 1e-12);
      CHECK(skew_spectrum(Matrix(Complex(0, 1) * pd.s.entries())).minCoeff() > 0.0);
      CHECK(max_abs_diff(u * pd.s.entries(), g) < 1e-10);
    }
  }
}

TEST_CASE("positivity bound (off-diagonal vs trace)") {
  const auto r1 = positivity_bound_check(BlockOperator::identity(s11));
  CHECK(r1.is_positive);
  CHECK(r1.t_norm == 0.0);
  CHECK(r1.bound == doctest::Approx(2.0 / std::sqrt(2.0)));

  const auto r2 = positivity_bound_check(make_op(s11, {{1, 1}, {1, 1}}));
  CHECK(r2.is_positive);
  CHECK(r2.t_norm == doctest::Approx(1.0));
  CHECK(r2.bound == doctest::Approx(std::sqrt(2.0)));
  CHECK(r2.t_norm <= r2.bound + 1e-10);

  const auto r3 = positivity_bound_check(make_op(s11, {{1, 2}, {2, 1}}));
  CHECK_FALSE(r3.is_positive);
  CHECK(r3.t_norm == doctest::Approx(2.0));

  CHECK_THROWS_AS(positivity_bound_check(make_op(s11, {{0, 1}, {-1, 0}})), NotHermitian);

  SUBCASE("holds on random positives") {
    for (int t = 0; t < 100; ++t) {
      Rng rng = trial_rng(37, t);
      const SplitSpace s(3, 2);
      const Matrix b = random_complex(rng, 5, 5);
      const auto r = positivity_bound_check(BlockOperator(s, b.adjoint() * b));
      CHECK(r.is_positive);
      CHECK(r.t_norm <= r.bound + 1e-10);
    }
  }
}

TEST_CASE("cone norm equivalence") {
  const auto r1 = cone_pair_check(PredualElement(make_op(s11, {{-I, 0}, {0, -I}})));
  CHECK(r1.i_rho_positive);
  CHECK(r1.s1 == doctest::Approx(2.0));
  CHECK(r1.pd == doctest::Approx(2.0));

  const auto r2 = cone_pair_check(PredualElement(d_operator(s11)));
  CHECK_FALSE(r2.i_rho_positive);

  const auto r3 = cone_pair_check(PredualElement(make_op(s11, {{-I, -I}, {-I, -I}})));
  CHECK(r3.i_rho_positive);
  CHECK(r3.s1 == doctest::Approx(2.0));
  CHECK(r3.pd == doctest::Approx(4.0));
  CHECK(r3.pd <= (1.0 + std::sqrt(2.0)) * r3.s1 + 1e-10);

  SUBCASE("chain s1 <= pd <= (1+sqrt2) s1 on the cone") {
    for (int t = 0; t < 100; ++t) {
      Rng rng = trial_rng(41, t);
      const SplitSpace s(2, 3);
      const auto r = cone_pair_check(random_cone_element(rng, s));
      CHECK(r.i_rho_positive);
      CHECK(r.s1 - 1e-10 <= r.pd);
      CHECK(r.pd <= (1.0 + std::sqrt(2.0)) * r.s1 + 1e-10);
    }
  }
}

TEST_CASE("element construction symmetrizes small defects and rejects large ones") {
  Matrix close = make_matrix({{1e-14, 1.0}, {-1.0, 0}});
  const RestrictedElement a(BlockOperator(s11, close));
  CHECK(skew_defect(a.op().entries()) == 0.0);
  CHECK(a.op().entries()(0, 0) == Complex(0, 0));

  Matrix bad = make_matrix({{0.5, 1.0}, {-1.0, 0}});
  CHECK_THROWS_AS(RestrictedElement(BlockOperator(s11, bad)), NotHermitian);
  CHECK_THROWS_AS(PredualElement(BlockOperator(s11, bad)), NotHermitian);
  CHECK_THROWS_AS(UnitaryElement(make_op(s11, {{2, 0}, {0, 1}})), NotUnitary);
}
