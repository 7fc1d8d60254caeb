#include "orbitkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace orbitkit {

std::string_view check_name(Check c) {
  switch (c) {
    case Check::kRoundtrip: return "roundtrip";
    case Check::kCocycle: return "cocycle";
    case Check::kEquivariance: return "equivariance";
    case Check::kOverlap: return "overlap";
    case Check::kPullback: return "pullback";
    case Check::kScale: return "scale";
  }
  return "unknown";
}

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.pass; }));
}

std::size_t VerifyReport::failed() const { return outcomes.size() - passed(); }

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

CheckOutcome pass(Check c, std::size_t attempts = 1) { return {c, 0, true, attempts, Json()}; }

CheckOutcome fail(Check c, Json witness, std::size_t attempts = 1) { return {c, 0, false, attempts, std::move(witness)}; }

const WeylCoset& random_coset(std::span<const WeylCoset> atlas, RandomSource& rng) {
  return atlas[rng.index(atlas.size())];
}

}  // namespace

CheckOutcome check_roundtrip(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng) {
  ChartPoint cp = rng.chart_point(p, random_coset(atlas, rng));
  std::vector<GaussianRational> w = solve_w(p, cp.z, cp.xi);
  std::vector<GaussianRational> xi = xi_from_w(p, cp.z, w);
  std::vector<GaussianRational> w2 = rng.rationals(p.dim());
  std::vector<GaussianRational> w2_back = solve_w(p, cp.z, xi_from_w(p, cp.z, w2));
  OrbitPoint f = mu_global(p, cp);
  ChartPoint back = mu_inverse(p, atlas, f);
  ChartPoint back_here = transition(p, back, cp.sigma);
  if (xi == cp.xi && w2_back == w2 && back_here == cp) return pass(Check::kRoundtrip);
  return fail(Check::kRoundtrip, {{"point", to_json(p, cp)},
                                  {"w", coordinates_to_json(p, w)},
                                  {"xi_from_w", coordinates_to_json(p, xi)},
                                  {"w_probe", coordinates_to_json(p, w2)},
                                  {"w_probe_back", coordinates_to_json(p, w2_back)},
                                  {"mu_inverse", to_json(p, back)},
                                  {"mu_inverse_in_chart", to_json(p, back_here)}});
}

CheckOutcome check_cocycle(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng,
                           std::size_t max_attempts) {
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    ChartPoint cp = rng.chart_point(p, random_coset(atlas, rng));
    QMatrix g = rng.invertible(p.n());
    QMatrix h = rng.invertible(p.n());
    try {
      if (psi_cocycle_check(p, g, h, cp)) return pass(Check::kCocycle, attempt);
      ChartPoint lhs = psi_affine(p, g, psi_affine(p, h, cp, cp.sigma), cp.sigma);
      ChartPoint rhs = psi_affine(p, g * h, cp, cp.sigma);
      return fail(Check::kCocycle,
                  {{"point", to_json(p, cp)}, {"g", to_json(g)}, {"h", to_json(h)}, {"lhs", to_json(p, lhs)},
                   {"rhs", to_json(p, rhs)}},
                  attempt);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutsideChart) throw;
    }
  }
  return fail(Check::kCocycle, {{"error", "no in-chart triple found"}}, max_attempts);
}

CheckOutcome check_equivariance(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng) {
  ChartPoint cp = rng.chart_point(p, random_coset(atlas, rng));
  QMatrix g = rng.invertible(p.n());
  ChartPoint moved = psi_global(p, atlas, g, cp);
  QMatrix lhs = mu_global(p, moved).f;
  QMatrix rhs = coadjoint(g, mu_global(p, cp).f);
  if (lhs == rhs) return pass(Check::kEquivariance);
  return fail(Check::kEquivariance,
              {{"point", to_json(p, cp)}, {"g", to_json(g)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
}

CheckOutcome check_overlap(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng,
                           std::size_t max_attempts) {
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const WeylCoset& sigma = random_coset(atlas, rng);
    const WeylCoset& tau = random_coset(atlas, rng);
    ChartPoint cp = rng.chart_point(p, sigma);
    try {
      ChartPoint moved = transition(p, cp, tau);
      ChartPoint back = transition(p, moved, sigma);
      QMatrix lhs = mu_global(p, cp).f;
      QMatrix rhs = mu_global(p, moved).f;
      if (lhs == rhs && back == cp) return pass(Check::kOverlap, attempt);
      return fail(Check::kOverlap,
                  {{"point", to_json(p, cp)}, {"tau", tau.perm()}, {"transition", to_json(p, moved)},
                   {"back", to_json(p, back)}, {"mu_sigma", to_json(lhs)}, {"mu_tau", to_json(rhs)}},
                  attempt);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutsideOverlap) throw;
    }
  }
  return fail(Check::kOverlap, {{"error", "no overlap point found"}}, max_attempts);
}

CheckOutcome check_pullback(const ParabolicData& p, std::span<const WeylCoset> atlas, RandomSource& rng) {
  ChartPoint cp = rng.chart_point(p, random_coset(atlas, rng));
  PullbackReport r = verify_pullback(p, cp);
  if (r.ok()) return pass(Check::kPullback);
  Json w = to_json(r);
  w["point"] = to_json(p, cp);
  return fail(Check::kPullback, std::move(w));
}

CheckOutcome check_scale(const ParabolicData& p, std::span<const WeylCoset> atlas, const GaussianRational& c,
                         RandomSource& rng) {
  if (c.is_zero()) throw Error(ErrorCode::kConfigError, "scale factor must be nonzero");
  WeightLambda scaled_lambda;
  for (const auto& v : p.lambda) scaled_lambda.values.push_back(c * v);
  ParabolicData scaled = build_parabolic(scaled_lambda);
  ChartPoint cp = rng.chart_point(p, random_coset(atlas, rng));

  // xi is linear in lambda at fixed w, so w(c lambda, xi) = w(lambda, xi / c).
  // This is w / c only when the key relation is linear in w.
  std::vector<GaussianRational> xi_shrunk = cp.xi;
  for (auto& x : xi_shrunk) x = x / c;
  std::vector<GaussianRational> w = solve_w(p, cp.z, xi_shrunk);
  std::vector<GaussianRational> w_scaled = solve_w(scaled, cp.z, cp.xi);
  const bool w_ok = w == w_scaled;

  ChartPoint cp_scaled = cp;
  for (auto& x : cp_scaled.xi) x = x * c;
  QMatrix lhs = mu_global(scaled, cp_scaled).f;
  QMatrix rhs = mu_global(p, cp).f * c;
  if (w_ok && lhs == rhs) return pass(Check::kScale);
  return fail(Check::kScale, {{"point", to_json(p, cp)},
                              {"factor", to_json(c)},
                              {"w", coordinates_to_json(p, w)},
                              {"w_scaled", coordinates_to_json(p, w_scaled)},
                              {"mu_scaled", to_json(lhs)},
                              {"factor_times_mu", to_json(rhs)}});
}

VerifyReport verify_all(const ParabolicData& p, std::span<const WeylCoset> atlas, const VerifyOptions& opt) {
  if (opt.samples == 0) throw Error(ErrorCode::kConfigError, "samples must be >= 1");
  std::vector<Check> checks{Check::kRoundtrip, Check::kCocycle, Check::kEquivariance, Check::kOverlap,
                            Check::kPullback};
  if (opt.scale) checks.push_back(Check::kScale);

  std::vector<CheckOutcome> out(opt.samples * checks.size());
  parallel_for(out.size(), opt.jobs, [&](std::size_t slot) {
    const std::size_t sample = slot / checks.size();
    const Check c = checks[slot % checks.size()];
    RandomSource rng(opt.seed, sample, static_cast<std::uint64_t>(c), opt.range);
    CheckOutcome o;
    try {
      switch (c) {
        case Check::kRoundtrip: o = check_roundtrip(p, atlas, rng); break;
        case Check::kCocycle: o = check_cocycle(p, atlas, rng, opt.max_attempts); break;
        case Check::kEquivariance: o = check_equivariance(p, atlas, rng); break;
        case Check::kOverlap: o = check_overlap(p, atlas, rng, opt.max_attempts); break;
        case Check::kPullback: o = check_pullback(p, atlas, rng); break;
        case Check::kScale: o = check_scale(p, atlas, *opt.scale, rng); break;
      }
    } catch (const Error& e) {
      o = fail(c, {{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
    }
    o.check = c;
    o.sample = sample;
    out[slot] = std::move(o);
  });
  return {std::move(out)};
}

Json to_json(const VerifyReport& r, const ParabolicData& p, std::span<const WeylCoset> atlas,
             const VerifyOptions& opt) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  Json results = Json::array();
  for (const auto& o : r.outcomes) {
    auto& t = tally[std::string(check_name(o.check))];
    (o.pass ? t.first : t.second) += 1;
    Json entry{{"check", check_name(o.check)}, {"sample", o.sample}, {"pass", o.pass}, {"attempts", o.attempts}};
    if (!o.pass) entry["witness"] = o.witness;
    results.push_back(std::move(entry));
  }
  Json summary = Json::object();
  for (const auto& [name, counts] : tally) summary[name] = {{"passed", counts.first}, {"failed", counts.second}};

  Json config{{"parabolic", to_json(p, atlas)},
              {"samples", opt.samples},
              {"seed", opt.seed},
              {"num_max", opt.range.num_max},
              {"den_max", opt.range.den_max}};
  if (opt.scale) config["scale"] = to_json(*opt.scale);
  return {{"schema", "1"}, {"config", config}, {"summary", summary}, {"ok", r.ok()}, {"results", results}};
}

}  // namespace orbitkit
