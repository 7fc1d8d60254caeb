#include "orbitkit/worked_examples.hpp"

namespace orbitkit {

namespace {

GaussianRational coordinate(const ParabolicData& p, const std::vector<GaussianRational>& v, int i, int j) {
  return v[*p.index_of(Root{i, j})];
}

}  // namespace

WeylCoset sl2_swap_coset(const ParabolicData& p) {
  std::vector<WeylCoset> atlas = weyl_cosets(p);
  if (p.n() != 2 || atlas.size() != 2) throw Error(ErrorCode::kConfigError, "the swap chart needs regular gl_2");
  return atlas[1].with_representative(QMatrix::from_rows({{0, 1}, {-1, 0}}));
}

Json sl2_fixture(const GaussianRational& s, std::size_t samples, std::uint64_t seed, SampleRange range) {
  if (s.is_zero()) throw Error(ErrorCode::kConfigError, "s must be nonzero");
  const GaussianRational half = s / GaussianRational(2);
  ParabolicData p = build_parabolic({{half, -half}});
  std::vector<WeylCoset> atlas = weyl_cosets(p);
  WeylCoset swap = sl2_swap_coset(p);
  RandomSource rng(seed, range);

  bool all = true;
  Json points = Json::array();
  for (std::size_t k = 0; k < samples; ++k) {
    const GaussianRational z = rng.nonzero_rational();
    const GaussianRational xi = rng.rational();
    const GaussianRational w = -xi / s;
    ChartPoint cp{atlas[0], {z}, {xi}};
    const GaussianRational one(1);
    const GaussianRational two(2);
    QMatrix mu_e_closed = QMatrix::from_rows({{one + two * z * w, -two * z * (one + z * w)},
                                              {two * w, -(one + two * z * w)}}) *
                          half;
    QMatrix mu_e = mu_global(p, cp).f;

    ChartPoint moved = transition(p, cp, swap);
    const GaussianRational zs = moved.z[0];
    const GaussianRational ws = solve_w(p, moved.z, moved.xi)[0];
    QMatrix mu_s_closed = QMatrix::from_rows({{-(one + two * zs * ws), -two * ws},
                                              {two * zs * (one + zs * ws), one + two * zs * ws}}) *
                          half;
    QMatrix mu_s = mu_global(p, moved).f;

    const bool ok = mu_e == mu_e_closed && mu_s == mu_s_closed && mu_e == mu_s && zs == -one / z &&
                    ws == z * z * w + z && moved.xi[0] == z * z * xi - s * z;
    all = all && ok;
    points.push_back({{"z", to_json(z)},
                      {"xi", to_json(xi)},
                      {"w", to_json(w)},
                      {"mu_e", to_json(mu_e)},
                      {"z_sigma", to_json(zs)},
                      {"w_sigma", to_json(ws)},
                      {"xi_sigma", to_json(moved.xi[0])},
                      {"mu_sigma", to_json(mu_s)},
                      {"match", ok}});
  }
  return {{"case", "sl2"},
          {"s", to_json(s)},
          {"parabolic", to_json(p, atlas)},
          {"sigma_representative", to_json(swap.representative())},
          {"points", points},
          {"ok", all}};
}

Json gl3_fixture(const WeightLambda& lambda, std::size_t samples, std::uint64_t seed, SampleRange range) {
  ParabolicData p = build_parabolic(lambda);
  if (p.n() != 3 || p.dim() != 3) throw Error(ErrorCode::kConfigError, "gl3 case needs three distinct values");
  std::vector<WeylCoset> atlas = weyl_cosets(p);
  const auto& l = p.lambda;
  const GaussianRational l12 = l[0] - l[1];
  const GaussianRational l23 = l[1] - l[2];
  const GaussianRational l13 = l[0] - l[2];
  const GaussianRational half(mpq_class(1, 2));
  RandomSource rng(seed, range);

  bool all = true;
  Json points = Json::array();
  for (std::size_t k = 0; k < samples; ++k) {
    ChartPoint cp = rng.chart_point(p, atlas[0]);
    const auto z12 = coordinate(p, cp.z, 0, 1);
    const auto z23 = coordinate(p, cp.z, 1, 2);
    const auto x12 = coordinate(p, cp.xi, 0, 1);
    const auto x23 = coordinate(p, cp.xi, 1, 2);
    const auto x13 = coordinate(p, cp.xi, 0, 2);
    const auto a = -x12 + half * x13 * z23;
    const auto b = -x23 - half * x13 * z12;
    const auto w12 = a / l12;
    const auto w23 = b / l23;
    const auto w13 = (-x13 - half * (l12 - l23) / (l12 * l23) * a * b) / l13;

    std::vector<GaussianRational> w = solve_w(p, cp.z, cp.xi);
    const bool ok = coordinate(p, w, 0, 1) == w12 && coordinate(p, w, 1, 2) == w23 && coordinate(p, w, 0, 2) == w13;
    all = all && ok;
    points.push_back({{"point", to_json(p, cp)}, {"w", coordinates_to_json(p, w)}, {"match", ok}});
  }
  return {{"case", "gl3"}, {"parabolic", to_json(p, atlas)}, {"points", points}, {"ok", all}};
}

WeightLambda grassmannian_lambda(std::size_t p, std::size_t q, const GaussianRational& s) {
  if (p == 0 || q == 0) throw Error(ErrorCode::kConfigError, "block sizes must be positive");
  const GaussianRational total(static_cast<long>(p + q));
  WeightLambda lambda;
  for (std::size_t k = 0; k < p; ++k) lambda.values.push_back(s * GaussianRational(static_cast<long>(q)) / total);
  for (std::size_t k = 0; k < q; ++k) lambda.values.push_back(-s * GaussianRational(static_cast<long>(p)) / total);
  return lambda;
}

Json grassmannian_fixture(std::size_t bp, std::size_t bq, const GaussianRational& s, std::size_t samples,
                          std::uint64_t seed, SampleRange range) {
  if (s.is_zero()) throw Error(ErrorCode::kConfigError, "s must be nonzero");
  ParabolicData p = build_parabolic(grassmannian_lambda(bp, bq, s));
  std::vector<WeylCoset> atlas = weyl_cosets(p);
  const std::size_t n = bp + bq;
  RandomSource rng(seed, range);

  bool all = true;
  Json points = Json::array();
  for (std::size_t k = 0; k < samples; ++k) {
    ChartPoint cp = rng.chart_point(p, atlas[0]);
    std::vector<GaussianRational> w = solve_w(p, cp.z, cp.xi);
    bool w_ok = true;
    for (std::size_t a = 0; a < p.dim(); ++a) w_ok = w_ok && w[a] == -cp.xi[a] / s;

    ChartPoint base{atlas[0], std::vector<GaussianRational>(p.dim()), cp.xi};
    QMatrix block = p.lambda_vee();
    for (std::size_t a = 0; a < p.dim(); ++a) {
      const Root& r = p.delta_u[a];
      block(static_cast<std::size_t>(r.j), static_cast<std::size_t>(r.i)) = -cp.xi[a];
    }
    QMatrix mu0 = mu_global(p, base).f;
    const bool mu_ok = mu0 == block;

    // Correction of psi(g) against -s d log det(cz + d).
    QMatrix g = rng.invertible(n);
    bool corr_ok = false;
    Json corr = nullptr;
    try {
      std::vector<GaussianRational> a = affine_correction(p, g, atlas[0], atlas[0], cp.z);
      std::vector<Jet<>> zj;
      for (std::size_t c = 0; c < p.dim(); ++c) zj.push_back(Jet<>::variable(cp.z[c], c, p.dim()));
      Matrix<Jet<>> zm(bp, bq);
      for (std::size_t c = 0; c < p.dim(); ++c) {
        const Root& r = p.delta_u[c];
        zm(static_cast<std::size_t>(r.i), static_cast<std::size_t>(r.j) - bp) = zj[c];
      }
      Matrix<Jet<>> cz_d = lift_matrix<Jet<>>(g.block(bp, 0, bq, bp)) * zm + lift_matrix<Jet<>>(g.block(bp, bp, bq, bq));
      Jet<> det = determinant(cz_d);
      corr_ok = true;
      Json vals = Json::array();
      for (std::size_t c = 0; c < p.dim(); ++c) {
        GaussianRational expect = -s * det.partial(c) / det.value();
        corr_ok = corr_ok && a[c] == expect;
        vals.push_back(to_json(a[c]));
      }
      corr = {{"g", to_json(g)}, {"correction", vals}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutsideChart && e.code() != ErrorCode::kDivisionByZero &&
          e.code() != ErrorCode::kSingularMatrix) {
        throw;
      }
      corr = {{"g", to_json(g)}, {"skipped", "g.z leaves the chart"}};
      corr_ok = true;
    }
    const bool ok = w_ok && mu_ok && corr_ok;
    all = all && ok;
    points.push_back({{"point", to_json(p, cp)},
                      {"w", coordinates_to_json(p, w)},
                      {"mu_at_origin", to_json(mu0)},
                      {"affine", corr},
                      {"match", ok}});
  }
  return {{"case", "supq"},
          {"p", bp},
          {"q", bq},
          {"s", to_json(s)},
          {"parabolic", to_json(p, atlas)},
          {"points", points},
          {"ok", all}};
}

}  // namespace orbitkit
