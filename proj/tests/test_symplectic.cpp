#include <doctest.h>

#include "oracles.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/worked_examples.hpp"

using namespace orbitkit;

namespace {

ParabolicData make(std::vector<Q> lambda) { return build_parabolic({std::move(lambda)}); }

ChartTangent random_tangent(RandomSource& rng, std::size_t m) { return {rng.rationals(m), rng.rationals(m)}; }

}  // namespace

TEST_CASE("chart form") {
  const std::size_t m = 3;
  for (std::size_t a = 0; a < m; ++a) {
    CHECK(omega_chart(ChartTangent::basis(m, a), ChartTangent::basis(m, m + a)) == Q(1));
    for (std::size_t b = 0; b < m; ++b) {
      CHECK(omega_chart(ChartTangent::basis(m, a), ChartTangent::basis(m, b)).is_zero());
      CHECK(omega_chart(ChartTangent::basis(m, m + a), ChartTangent::basis(m, m + b)).is_zero());
    }
  }
  RandomSource rng(31);
  ChartTangent t = random_tangent(rng, m), u = random_tangent(rng, m);
  CHECK(omega_chart(t, t).is_zero());
  CHECK(omega_chart(t, u) == -omega_chart(u, t));
  CHECK_THROWS_AS(omega_chart(t, random_tangent(rng, 2)), Error);
  CHECK_THROWS_AS(ChartTangent::basis(2, 4), Error);
}

TEST_CASE("generators of orbit tangents") {
  ParabolicData p = make({3, 1, 0});
  QMatrix f = p.lambda_vee();
  CHECK(solve_generator(f, {QMatrix(3, 3)}).is_zero());
  const QMatrix v01 = QMatrix::unit(3, 0, 1) * (p.lambda[0] - p.lambda[1]);
  QMatrix x = solve_generator(f, {v01});
  CHECK(orbit_tangent(x, f).v == v01);
  // Unique up to the centralizer, which is diagonal here.
  QMatrix off = x;
  for (std::size_t i = 0; i < 3; ++i) off(i, i) = Q(0);
  CHECK(off == QMatrix::unit(3, 0, 1));
  CHECK_THROWS_AS(solve_generator(f, {QMatrix::identity(3)}), Error);  // diagonal V is not in the image

  RandomSource rng(32);
  auto atlas = weyl_cosets(p);
  for (int k = 0; k < 20; ++k) {
    QMatrix ff = mu_global(p, rng.chart_point(p, atlas[rng.index(6)])).f;
    QMatrix x0 = rng.matrix(3);
    OrbitTangent v = orbit_tangent(x0, ff);
    QMatrix xs = solve_generator(ff, v);
    CHECK(orbit_tangent(xs, ff).v == v.v);
  }
}

TEST_CASE("orbit form") {
  const Q l1(5), l2(-2);
  QMatrix f = QMatrix::diagonal({l1, l2});
  OrbitTangent v1 = orbit_tangent(QMatrix::unit(2, 0, 1), f);
  OrbitTangent v2 = orbit_tangent(QMatrix::unit(2, 1, 0), f);
  CHECK(omega_orbit(f, v1, v2) == -(l1 - l2));
  CHECK(omega_orbit(f, v1, v1).is_zero());

  RandomSource rng(33);
  for (const auto& lambda : {std::vector<Q>{3, 1, 0}, std::vector<Q>{2, 1, 1, 0}}) {
    ParabolicData p = make(lambda);
    auto atlas = weyl_cosets(p);
    const std::size_t n = p.n();
    for (int k = 0; k < 10; ++k) {
      QMatrix ff = mu_global(p, rng.chart_point(p, atlas[rng.index(atlas.size())])).f;
      QMatrix x1 = rng.matrix(n), x2 = rng.matrix(n);
      OrbitTangent a = orbit_tangent(x1, ff), b = orbit_tangent(x2, ff);
      const Q value = omega_orbit(ff, a, b);
      CHECK(value == -omega_orbit(ff, b, a));
      CHECK(value == omega_generators(ff, x1, x2));

      // A centralizer shift of the generator changes nothing.
      QMatrix zc = ff * rng.rational() + QMatrix::identity(n) * rng.rational();
      CHECK(omega_generators(ff, x1 + zc, x2) == value);

      // Invariance under Ad(g).
      QMatrix g = rng.invertible(n);
      QMatrix gi = inverse(g);
      QMatrix gf = coadjoint(g, ff);
      CHECK(omega_orbit(gf, {g * a.v * gi}, {g * b.v * gi}) == value);
    }
  }
}

TEST_CASE("pushforward of mu") {
  const Q s(3);
  ParabolicData p = make({s / Q(2), -s / Q(2)});
  auto atlas = weyl_cosets(p);
  RandomSource rng(34);
  ChartPoint base{atlas[0], {Q(0)}, {rng.rational()}};
  CHECK(pushforward_mu(p, base, ChartTangent::basis(1, 1)).v == QMatrix::unit(2, 1, 0) * Q(-1));
  CHECK(pushforward_mu(p, base, {{Q(0)}, {Q(0)}}).v.is_zero());

  // Against the derivative of the closed 2x2 formula at a general point.
  for (int k = 0; k < 10; ++k) {
    const Q z = rng.rational(), xi = rng.rational();
    ChartPoint cp{atlas[0], {z}, {xi}};
    std::vector<Jet<>> vars{jet_lift(z, 0, 2), jet_lift(-xi / s, 1, 2)};
    // w = -xi/s, so d/dxi = -(1/s) d/dw.
    const Q one(1), two(2);
    Jet<> jz = vars[0], jw = vars[1];
    Matrix<Jet<>> closed = Matrix<Jet<>>::from_rows(
        {{Jet<>(one) + Jet<>(two) * jz * jw, Jet<>(-two) * jz * (Jet<>(one) + jz * jw)},
         {Jet<>(two) * jw, -(Jet<>(one) + Jet<>(two) * jz * jw)}});
    QMatrix dz = partial_matrix(closed, 0) * (s / two);
    QMatrix dw = partial_matrix(closed, 1) * (s / two);
    CHECK(pushforward_mu(p, cp, ChartTangent::basis(1, 0)).v == dz);
    CHECK(pushforward_mu(p, cp, ChartTangent::basis(1, 1)).v == dw * (-one / s));
  }

  ParabolicData p3 = make({3, 1, 0});
  auto a3 = weyl_cosets(p3);
  for (int k = 0; k < 10; ++k) {
    ChartPoint cp = rng.chart_point(p3, a3[rng.index(6)]);
    ChartTangent t = random_tangent(rng, 3), u = random_tangent(rng, 3);
    const Q c = rng.rational();
    ChartTangent comb{t.dz, t.dxi};
    for (std::size_t a = 0; a < 3; ++a) {
      comb.dz[a] = t.dz[a] + c * u.dz[a];
      comb.dxi[a] = t.dxi[a] + c * u.dxi[a];
    }
    CHECK(pushforward_mu(p3, cp, comb).v ==
          pushforward_mu(p3, cp, t).v + pushforward_mu(p3, cp, u).v * c);
  }
}

TEST_CASE("pullback of the orbit form") {
  RandomSource rng(35);
  {
    ParabolicData p = make({Q(1), Q(-1)});
    auto atlas = weyl_cosets(p);
    PullbackReport r = verify_pullback(p, rng.chart_point(p, atlas[0]));
    CHECK(r.pairs_checked == 1);
    CHECK(r.ok());
  }
  {
    ParabolicData p = make({3, 1, 0});
    auto atlas = weyl_cosets(p);
    PullbackReport r = verify_pullback(p, rng.chart_point(p, atlas[0]));
    CHECK(r.pairs_checked == 15);
    CHECK(r.ok());
    ChartPoint origin{atlas[0], {Q(0), Q(0), Q(0)}, {Q(0), Q(0), Q(0)}};
    CHECK(verify_pullback(p, origin).ok());
    Json j = to_json(r);
    CHECK(j["pairs_checked"] == 15);
    CHECK(j["failures"].empty());
  }
  for (const auto& lambda : {std::vector<Q>{1, -1}, std::vector<Q>{3, 1, 0}, std::vector<Q>{2, 2, 0, 0},
                             std::vector<Q>{2, 1, 1, 0}}) {
    ParabolicData p = make(lambda);
    auto atlas = weyl_cosets(p);
    for (int k = 0; k < 50; ++k) {
      PullbackReport r = verify_pullback(p, rng.chart_point(p, atlas[rng.index(atlas.size())]));
      CHECK(r.ok());
    }
  }
}

TEST_CASE("vector fields and the untwisted moment map") {
  RandomSource rng(36);
  for (auto [bp, bq] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}}) {
    const Q s(static_cast<long>(bp + bq));
    ParabolicData p = build_parabolic(grassmannian_lambda(bp, bq, s));
    auto atlas = weyl_cosets(p);
    const std::size_t n = bp + bq;
    ChartPoint zero_xi = rng.chart_point(p, atlas[0]);
    std::fill(zero_xi.xi.begin(), zero_xi.xi.end(), Q(0));
    CHECK(classical_moment(p, zero_xi).is_zero());
    for (int k = 0; k < 10; ++k) {
      ChartPoint cp = rng.chart_point(p, atlas[0]);
      // Translations by X in u move z by -X.
      for (const Root& r : p.delta_u) {
        std::vector<Q> field = vector_field_chart(QMatrix::unit(n, r.i, r.j), p, atlas[0], cp.z);
        std::vector<Q> expect(p.dim());
        expect[*p.index_of(r)] = Q(-1);
        CHECK(field == expect);
      }
      QMatrix zm = oracle::as_block(p, cp.z, bp, bq);
      QMatrix xm = oracle::as_block(p, cp.xi, bp, bq);
      QMatrix cm = classical_moment(p, cp);
      CHECK(cm == oracle::grassmannian_classical_moment(zm, xm));
      CHECK(mu_global(p, cp).f - coadjoint(u_from_z(p, cp.z), p.lambda_vee()) == cm);
      // At z = 0 the untwisted part is the xi block of mu.
      ChartPoint base{atlas[0], std::vector<Q>(p.dim()), cp.xi};
      CHECK(classical_moment(p, base) == mu_global(p, base).f - p.lambda_vee());
    }
  }
}

TEST_CASE("affine correction is closed and matches the determinant formula") {
  RandomSource rng(37);
  for (const auto& lambda : {std::vector<Q>{3, 1, 0}, std::vector<Q>{2, 1, 1, 0}, std::vector<Q>{2, 2, 0, 0}}) {
    ParabolicData p = make(lambda);
    auto atlas = weyl_cosets(p);
    for (int k = 0; k < 10; ++k) {
      const WeylCoset& sigma = atlas[rng.index(atlas.size())];
      const WeylCoset& tau = atlas[rng.index(atlas.size())];
      QMatrix g = rng.invertible(p.n());
      std::vector<Q> z = rng.rationals(p.dim());
      try {
        QMatrix d = correction_derivative(p, g, sigma, tau, z);
        CHECK(d == d.transpose());
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kOutsideChart);
      }
    }
  }
  for (auto [bp, bq] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}}) {
    const Q s(static_cast<long>(bp + bq));
    ParabolicData p = build_parabolic(grassmannian_lambda(bp, bq, s));
    auto atlas = weyl_cosets(p);
    for (int k = 0; k < 10; ++k) {
      QMatrix g = rng.invertible(p.n());
      std::vector<Q> z = rng.rationals(p.dim());
      CHECK(affine_correction(p, g, atlas[0], atlas[0], z) ==
            oracle::grassmannian_correction(p, g, oracle::as_block(p, z, bp, bq), s));
    }
  }
}

TEST_CASE("transitions preserve the chart form") {
  RandomSource rng(38);
  for (const auto& lambda : {std::vector<Q>{1, -1}, std::vector<Q>{3, 1, 0}, std::vector<Q>{2, 1, 1, 0}}) {
    ParabolicData p = make(lambda);
    auto atlas = weyl_cosets(p);
    for (int k = 0; k < 10; ++k) {
      ChartPoint cp = rng.chart_point(p, atlas[rng.index(atlas.size())]);
      for (const auto& tau : atlas) {
        try {
          const bool preserved = transition_preserves_omega(p, cp, tau);
          CHECK(preserved);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::kOutsideOverlap);
        }
      }
    }
  }
}
