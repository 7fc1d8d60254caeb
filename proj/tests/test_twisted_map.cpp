#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orbitkit/json_io.hpp"
#include "orbitkit/worked_examples.hpp"

using namespace orbitkit;

namespace {

Q frac(long a, long b) { return Q(mpq_class(a, b)); }

ParabolicData make(std::vector<Q> lambda) { return build_parabolic({std::move(lambda)}); }

const std::vector<std::vector<Q>>& configurations() {
  static const std::vector<std::vector<Q>> all{
      {1, -1}, {3, 1, 0}, {2, 2, 0, 0}, {2, 1, 1, 0}, {1, 1, 0, 0, 0}};
  return all;
}

Q coord(const ParabolicData& p, const std::vector<Q>& v, int i, int j) { return v[*p.index_of({i, j})]; }

QMatrix random_upper_unipotent(RandomSource& rng, const ParabolicData& p) {
  QMatrix m = QMatrix::identity(p.n());
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = 0; j < p.n(); ++j)
      if (p.in_u(i, j)) m(i, j) = rng.rational();
  return m;
}

// Cocycle identity, or true when an intermediate point leaves the chart.
bool cocycle_or_outside(const ParabolicData& p, const QMatrix& g, const QMatrix& h, const ChartPoint& cp) {
  try {
    return psi_cocycle_check(p, g, h, cp);
  } catch (const Error& e) {
    return e.code() == ErrorCode::kOutsideChart;
  }
}

}  // namespace

TEST_CASE("key relation solver") {
  RandomSource rng(21);
  for (const auto& lambda : configurations()) {
    ParabolicData p = make(lambda);
    std::vector<Q> z = rng.rationals(p.dim());
    CHECK(solve_w(p, z, std::vector<Q>(p.dim())) == std::vector<Q>(p.dim()));
    CHECK(xi_from_w(p, z, std::vector<Q>(p.dim())) == std::vector<Q>(p.dim()));
    for (int k = 0; k < 100; ++k) {
      std::vector<Q> zz = rng.rationals(p.dim());
      std::vector<Q> xi = rng.rationals(p.dim());
      CHECK(xi_from_w(p, zz, solve_w(p, zz, xi)) == xi);
      std::vector<Q> w = rng.rationals(p.dim());
      CHECK(solve_w(p, zz, xi_from_w(p, zz, w)) == w);
    }
  }
}

TEST_CASE("key relation over gaussian rationals") {
  RandomSource rng(22);
  ParabolicData p = make({Q(2, 1), Q(0), Q(-1, 3)});
  for (int k = 0; k < 20; ++k) {
    std::vector<Q> z{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    std::vector<Q> xi{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    std::vector<Q> w = solve_w(p, z, xi);
    CHECK(xi_from_w(p, z, w) == xi);
    auto cf = oracle::gl3_closed_form(p.lambda, coord(p, z, 0, 1), coord(p, z, 1, 2), coord(p, xi, 0, 1),
                                      coord(p, xi, 1, 2), coord(p, xi, 0, 2));
    CHECK(coord(p, w, 0, 1) == cf.w12);
    CHECK(coord(p, w, 1, 2) == cf.w23);
    CHECK(coord(p, w, 0, 2) == cf.w13);
  }
}

TEST_CASE("regular gl3 closed forms") {
  RandomSource rng(23);
  for (const auto& lambda : {std::vector<Q>{3, 1, 0}, std::vector<Q>{frac(1, 2), -2, 7}}) {
    ParabolicData p = make(lambda);
    for (int k = 0; k < 25; ++k) {
      std::vector<Q> z = rng.rationals(3), xi = rng.rationals(3);
      std::vector<Q> w = solve_w(p, z, xi);
      auto cf = oracle::gl3_closed_form(p.lambda, coord(p, z, 0, 1), coord(p, z, 1, 2), coord(p, xi, 0, 1),
                                        coord(p, xi, 1, 2), coord(p, xi, 0, 2));
      CHECK(coord(p, w, 0, 1) == cf.w12);
      CHECK(coord(p, w, 1, 2) == cf.w23);
      CHECK(coord(p, w, 0, 2) == cf.w13);
    }
  }
}

TEST_CASE("sl2 chart formulas") {
  RandomSource rng(24);
  for (const Q& s : {Q(1), Q(2), Q(-3), frac(5, 2)}) {
    ParabolicData p = make({s / Q(2), -s / Q(2)});
    auto atlas = weyl_cosets(p);
    WeylCoset swap = sl2_swap_coset(p);
    for (int k = 0; k < 10; ++k) {
      const Q z = rng.nonzero_rational(), xi = rng.rational();
      const Q w = -xi / s;
      CHECK(xi_from_w<Q>(p, {z}, {w}) == std::vector<Q>{xi});
      ChartPoint cp{atlas[0], {z}, {xi}};
      OrbitPoint f = mu_global(p, cp);
      CHECK(f.f == oracle::sl2_mu_e(s, z, w));
      CHECK(*f.witness == u_from_z<Q>(p, {z}) * u_minus_from_w<Q>(p, {w}));

      ChartPoint t = transition(p, cp, swap);
      const Q ws = solve_w(p, t.z, t.xi)[0];
      CHECK(t.z[0] == -Q(1) / z);
      CHECK(ws == z * z * w + z);
      CHECK(t.xi[0] == z * z * xi - s * z);
      CHECK(mu_global(p, t).f == oracle::sl2_mu_sigma(s, t.z[0], ws));
      CHECK(transition(p, t, atlas[0]) == cp);

      // Moebius action in one chart, det g = 1.
      const Q a = rng.nonzero_rational(), b = rng.rational(), c = rng.rational();
      const Q d = (Q(1) + b * c) / a;
      if ((c * z + d).is_zero()) continue;
      QMatrix g = QMatrix::from_rows({{a, b}, {c, d}});
      ChartPoint moved = psi_affine(p, g, cp, atlas[0]);
      CHECK(moved.z[0] == (a * z + b) / (c * z + d));
      CHECK(moved.xi[0] == (c * z + d) * (c * z + d) * xi - s * c * (c * z + d));
    }
  }
}

TEST_CASE("local moment map basics") {
  RandomSource rng(25);
  for (const auto& lambda : configurations()) {
    ParabolicData p = make(lambda);
    auto atlas = weyl_cosets(p);
    ChartPoint origin{atlas[0], std::vector<Q>(p.dim()), std::vector<Q>(p.dim())};
    CHECK(mu_global(p, origin).f == p.lambda_vee());
    std::set<std::string> images;
    for (int k = 0; k < 20; ++k) {
      ChartPoint cp = rng.chart_point(p, atlas[rng.index(atlas.size())]);
      OrbitPoint f = mu_global(p, cp);
      CHECK(oracle::char_poly(f.f) == oracle::char_poly(p.lambda_vee()));
      CHECK(coadjoint(*f.witness, p.lambda_vee()) == f.f);
      images.insert(to_json(f.f).dump());
    }
    CHECK(images.size() == 20);  // distinct random points have distinct images
  }
}

TEST_CASE("two-block configurations") {
  RandomSource rng(26);
  for (auto [bp, bq] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}, {1, 3}}) {
    const Q s(static_cast<long>(bp + bq));
    ParabolicData p = build_parabolic(grassmannian_lambda(bp, bq, s));
    auto atlas = weyl_cosets(p);
    for (int k = 0; k < 10; ++k) {
      ChartPoint cp = rng.chart_point(p, atlas[0]);
      std::vector<Q> w = solve_w(p, cp.z, cp.xi);
      QMatrix wm = oracle::as_block(p, w, bp, bq);
      CHECK(wm == oracle::as_block(p, cp.xi, bp, bq) * (-Q(1) / s));

      ChartPoint base{atlas[0], std::vector<Q>(p.dim()), cp.xi};
      CHECK(mu_global(p, base).f == oracle::grassmannian_mu_origin(s, oracle::as_block(p, cp.xi, bp, bq)));

      // Ad(u_z^{-1}) mu(z, xi) = mu(0, xi).
      QMatrix uz = u_from_z(p, cp.z);
      CHECK(coadjoint(inverse(uz), mu_global(p, cp).f) == mu_global(p, base).f);
    }
  }
}

TEST_CASE("affine action") {
  RandomSource rng(27);
  for (const auto& lambda : configurations()) {
    ParabolicData p = make(lambda);
    auto atlas = weyl_cosets(p);
    for (int k = 0; k < 10; ++k) {
      const WeylCoset& sigma = atlas[rng.index(atlas.size())];
      ChartPoint cp = rng.chart_point(p, sigma);
      CHECK(psi_affine(p, QMatrix::identity(p.n()), cp, sigma) == cp);

      QMatrix g = rng.invertible(p.n());
      CHECK(cocycle_or_outside(p, g, inverse(g), cp));
      CHECK(cocycle_or_outside(p, g, rng.invertible(p.n()), cp));

      // Upper unipotent elements keep the identity chart.
      ChartPoint ce = rng.chart_point(p, atlas[0]);
      CHECK(psi_cocycle_check(p, random_upper_unipotent(rng, p), random_upper_unipotent(rng, p), ce));

      // Linear part plus correction: the pulled-back covector differs from xi
      // by tr(lambda dt t^{-1}).
      try {
        const std::vector<Q> inhom = psi_inhomogeneous_part(p, g, cp, sigma);
        CHECK(inhom == affine_correction(p, g, sigma, sigma, cp.z));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kOutsideChart);
      }
    }
  }
  ParabolicData p = make({3, 1, 0});
  auto atlas = weyl_cosets(p);
  ChartPoint cp{atlas[0], {Q(0), Q(0), Q(0)}, {Q(1), Q(2), Q(3)}};
  QMatrix anti = QMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  try {
    psi_affine(p, anti, cp, atlas[0]);
    FAIL("expected OutsideChart");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOutsideChart);
  }
}

TEST_CASE("transitions") {
  RandomSource rng(28);
  ParabolicData p = make({3, 1, 0});
  auto atlas = weyl_cosets(p);
  for (int k = 0; k < 10; ++k) {
    ChartPoint cp = rng.chart_point(p, atlas[0]);
    CHECK(transition(p, cp, atlas[0]) == cp);
    for (const auto& s : atlas) {
      for (const auto& t : atlas) {
        ChartPoint via = transition(p, transition(p, cp, s), t);
        CHECK(via == transition(p, cp, t));
      }
    }
  }
  ChartPoint origin{atlas[0], {Q(0), Q(0), Q(0)}, {Q(1), Q(1), Q(1)}};
  try {
    transition(p, origin, atlas.back());
    FAIL("expected OutsideOverlap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOutsideOverlap);
  }
}

TEST_CASE("global map: compatibility, equivariance, inverse") {
  RandomSource rng(29);
  for (const auto& lambda : configurations()) {
    ParabolicData p = make(lambda);
    auto atlas = weyl_cosets(p);
    ChartPoint origin{atlas[0], std::vector<Q>(p.dim()), std::vector<Q>(p.dim())};
    CHECK(mu_inverse(p, atlas, {p.lambda_vee(), QMatrix::identity(p.n())}) == origin);
    for (int k = 0; k < 10; ++k) {
      ChartPoint cp = rng.chart_point(p, atlas[rng.index(atlas.size())]);
      OrbitPoint f = mu_global(p, cp);
      for (const auto& tau : atlas) {
        try {
          ChartPoint there = transition(p, cp, tau);
          CHECK(mu_global(p, there).f == f.f);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::kOutsideOverlap);
        }
      }

      ChartPoint same = psi_global(p, atlas, QMatrix::identity(p.n()), cp);
      CHECK(mu_global(p, same).f == f.f);
      CHECK(transition(p, same, cp.sigma) == cp);
      QMatrix g = rng.invertible(p.n());
      ChartPoint moved = psi_global(p, atlas, g, cp);
      CHECK(mu_global(p, moved).f == coadjoint(g, f.f));
      // Any chart containing g.x gives the same point of the bundle.
      for (const auto& tau : atlas) {
        try {
          ChartPoint other = psi_affine(p, g, cp, tau);
          CHECK(transition(p, other, moved.sigma) == moved);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::kOutsideChart);
        }
      }

      ChartPoint back = mu_inverse(p, atlas, f);
      CHECK(transition(p, back, cp.sigma) == cp);
      CHECK(mu_global(p, back).f == f.f);
    }
  }
  ParabolicData p = make({1, -1});
  auto atlas = weyl_cosets(p);
  CHECK_THROWS_AS(mu_inverse(p, atlas, {p.lambda_vee(), std::nullopt}), Error);
  CHECK_THROWS_AS(mu_inverse(p, atlas, {p.lambda_vee(), u_from_z<Q>(p, {Q(1)})}), Error);

  // The closed 2x2 matrix with witness u_z u-_w gives back (z, -s w).
  const Q s(2), z(frac(3, 4)), w(frac(-2, 5));
  ChartPoint got = mu_inverse(p, atlas, {oracle::sl2_mu_e(s, z, w), u_from_z<Q>(p, {z}) * u_minus_from_w<Q>(p, {w})});
  CHECK(got == ChartPoint{atlas[0], {z}, {-s * w}});
}

TEST_CASE("chart point json") {
  ParabolicData p = make({2, 1, 1, 0});
  auto atlas = weyl_cosets(p);
  RandomSource rng(30);
  ChartPoint cp = rng.chart_point(p, atlas[3]);
  cp.xi[0] = rng.gaussian();
  Json j = to_json(p, cp);
  CHECK(j["z"].contains("0,1"));
  CHECK(chart_point_from_json(p, atlas, j) == cp);
  Json bad = j;
  bad["z"]["1,2"] = "1";  // inside the Levi block
  CHECK_THROWS_AS(chart_point_from_json(p, atlas, bad), Error);
  bad = j;
  bad["sigma"] = Json::array({0, 2, 1, 3});  // not increasing on the middle block
  CHECK_THROWS_AS(chart_point_from_json(p, atlas, bad), Error);
  OrbitPoint f = mu_global(p, cp);
  OrbitPoint g = orbit_point_from_json(to_json(f));
  CHECK(g.f == f.f);
  CHECK(*g.witness == *f.witness);
}
